#ifndef AOICR_SWEEP_HPP
#define AOICR_SWEEP_HPP

#include "aoicr/peak_aoi.hpp"
#include "aoicr/simulator.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace aoicr {

enum class Engine { analytic, asymptotic, simulate };

/// One-parameter grid sweep over a base configuration. Encodes the
/// figure-style experiments: vary one of the recognized parameters and
/// evaluate the selected schemes with the selected engines at every
/// grid point.
struct SweepSpec {
    SystemConfig base;
    std::string param; // one of p_p_dbm, p_s_dbm, p, q, ic_over_n0, d_sp, d_ps
    double min = 0.0;
    double max = 0.0;
    int steps = 0; // >= 2; grid point i gets min + i*(max-min)/(steps-1)

    bool overlay = true;
    bool underlay = true;
    bool engine_analytic = true;
    bool engine_asymptotic = false;
    bool engine_simulate = false;

    SimMode mode = SimMode::abstract;
    std::uint64_t slots = 1000000;
    std::uint64_t warmup = kDefaultWarmup;
    std::uint64_t seed = 1; // per-run seeds derived deterministically

    void validate() const; // throws std::invalid_argument
};

struct SweepRow {
    std::string param;
    double value;
    Scheme scheme;
    Engine engine;
    System system;
    PeakAoiBreakdown breakdown;
    double se = 0.0; // of avg_peak; simulate rows only
    bool has_se = false;
    std::uint64_t seed = 0;
    bool has_seed = false;
};

/// Rows ordered by grid index, then scheme, engine, system. Simulation
/// points run on a worker pool (capped by AOI_CR_THREADS) but ordering
/// and seeds are independent of scheduling.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

extern const char* const kSweepCsvHeader;

std::string sweep_row_csv(const SweepRow& row);
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

void write_event_log_csv(const std::vector<DeliveryRecord>& log,
                         std::ostream& out);

const char* scheme_name(Scheme s);
const char* engine_name(Engine e);
const char* system_name(System s);

/// Worker-pool width: hardware concurrency capped by AOI_CR_THREADS.
unsigned worker_count();

} // namespace aoicr

#endif
