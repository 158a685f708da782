#ifndef AOICR_SIMULATOR_HPP
#define AOICR_SIMULATOR_HPP

#include "aoicr/linkmodel.hpp"
#include "aoicr/underlay.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace aoicr {

enum class Scheme { overlay, underlay };
enum class SimMode { fading, abstract };

/// One delivered status update; y == w + k and peak == prev_s + y - 1
/// hold exactly for every record.
struct DeliveryRecord {
    System system;
    std::uint64_t g; // generation slot
    std::uint64_t d; // delivery slot
    std::uint64_t w;
    std::uint64_t k;
    std::uint64_t s;
    std::uint64_t y;
    std::uint64_t peak;
};

struct SampleStats {
    std::uint64_t n = 0;
    double sum = 0.0;
    double sumsq = 0.0;

    void add(double x) {
        ++n;
        sum += x;
        sumsq += x * x;
    }
    double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
    /// Standard error of the mean, treating samples as i.i.d. The peak
    /// sequence is regenerative, so this is a documented approximation.
    double stderror() const;
};

struct SystemReport {
    SampleStats peak;
    SampleStats w, k, y, s;
    std::uint64_t tx_slots = 0;         // slots in which this system transmitted
    std::uint64_t tx_slots_exposed = 0; // ... while the other also transmitted
    double interference_fraction() const {
        return tx_slots ? static_cast<double>(tx_slots_exposed) /
                              static_cast<double>(tx_slots)
                        : 0.0;
    }
};

struct SimReport {
    Scheme scheme;
    SimMode mode;
    std::uint64_t slots = 0;
    std::uint64_t warmup = 0;
    std::uint64_t seed = 0;
    SystemReport primary;
    SystemReport secondary;
};

constexpr std::uint64_t kDefaultWarmup = 10000;

/// Slot-level Monte Carlo of the full two-system dynamics. Deterministic
/// given all arguments. In abstract mode decode outcomes are Bernoulli
/// draws from the outage set; in fading mode fresh exponential power
/// gains are drawn for every active link each slot.
SimReport simulate(const SystemConfig& cfg, Scheme scheme, SimMode mode,
                   std::uint64_t slots, std::uint64_t warmup,
                   std::uint64_t seed,
                   std::vector<DeliveryRecord>* log = nullptr);

/// Abstract-mode run on explicitly supplied rates and outages (the
/// analysis modules' natural inputs; also used to exercise degenerate
/// outage sets the physical config cannot produce).
SimReport simulate_abstract(double p, double q, const OutageSet& outages,
                            Scheme scheme, std::uint64_t slots,
                            std::uint64_t warmup, std::uint64_t seed,
                            std::vector<DeliveryRecord>* log = nullptr);

struct ModeAgreement {
    SimReport fading;
    SimReport abstract_mode;
    double z_primary;   // (fading - abstract) / joint standard error
    double z_secondary;
};

/// Cross-validates that the closed-form outage set summarizes the fading
/// layer: both modes must agree on mean peak AoI within sampling error.
ModeAgreement simulate_abstract_vs_fading(const SystemConfig& cfg, Scheme scheme,
                                          std::uint64_t slots,
                                          std::uint64_t seed_fading,
                                          std::uint64_t seed_abstract);

struct TransitionLog {
    std::array<std::array<std::uint64_t, 4>, 4> counts{};
    std::array<std::uint64_t, 4> occupancy{};
    std::uint64_t slots = 0;

    double frequency(int i, int j) const;
    double occupancy_fraction(int i) const;
};

/// Classifies each underlay slot (post-generation, pre-decode) into the
/// four joint busy/idle states and tallies one-step transitions.
TransitionLog empirical_transition_log(const SystemConfig& cfg,
                                       std::uint64_t slots, std::uint64_t seed);

TransitionLog empirical_transition_log_abstract(double p, double q,
                                                const OutageSet& outages,
                                                std::uint64_t slots,
                                                std::uint64_t seed);

} // namespace aoicr

#endif
