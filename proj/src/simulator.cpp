#include "aoicr/simulator.hpp"

#include "aoicr/rng.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace aoicr {
namespace {

enum Substream : std::uint64_t {
    kGenP = 0,
    kGenS = 1,
    kDecodeP = 2,
    kDecodeS = 3,
    kHpp = 4,
    kHss = 5,
    kHsp = 6,
    kHps = 7,
};

struct FadingParams {
    double pp, ps, n0, ic;
    double sigma_p, sigma_s;
    LinkGains gains;
};

struct DeviceState {
    bool busy = false;
    std::uint64_t gen_slot = 0;

    bool have_prev = false; // a delivery already seeded the stats window
    std::uint64_t prev_d = 0;
    std::uint64_t prev_s = 0;
    bool awaiting_first_gen = true;
    std::uint64_t k_start = 0;

    bool aoi_valid = false;
    std::uint64_t aoi = 0;
};

void handle_generation(DeviceState& st, std::uint64_t t) {
    if (st.awaiting_first_gen) {
        st.k_start = t;
        st.awaiting_first_gen = false;
    }
    st.busy = true; // a generation while busy preempts the update in service
    st.gen_slot = t;
}

void handle_delivery(DeviceState& st, System sys, std::uint64_t t,
                     std::uint64_t warmup, SystemReport& rep,
                     std::vector<DeliveryRecord>* log) {
    const std::uint64_t service = t - st.gen_slot + 1;
    if (t > warmup) {
        if (st.have_prev) {
            const std::uint64_t w = st.k_start - st.prev_d - 1;
            const std::uint64_t k = t - st.k_start + 1;
            const std::uint64_t y = w + k;
            // Peak read off the AoI staircase; must equal S + Y - 1.
            assert(st.aoi_valid && st.aoi == st.prev_s + y - 1);
            const std::uint64_t peak = st.prev_s + y - 1;
            rep.peak.add(static_cast<double>(peak));
            rep.w.add(static_cast<double>(w));
            rep.k.add(static_cast<double>(k));
            rep.y.add(static_cast<double>(y));
            rep.s.add(static_cast<double>(service));
            if (log)
                log->push_back({sys, st.gen_slot, t, w, k, service, y, peak});
        }
        st.have_prev = true; // first post-warmup delivery only seeds state
    }
    st.prev_d = t;
    st.prev_s = service;
    st.busy = false;
    st.awaiting_first_gen = true;
    st.aoi = t + 1 - st.gen_slot; // AoI for the next slot
    st.aoi_valid = true;
}

SimReport run(double p, double q, const OutageSet* outages,
              const FadingParams* fading, Scheme scheme, SimMode mode,
              std::uint64_t slots, std::uint64_t warmup, std::uint64_t seed,
              std::vector<DeliveryRecord>* log) {
    if (slots <= warmup)
        throw std::invalid_argument("simulate: slots must exceed warmup");
    if (slots > (1ULL << 62))
        throw std::invalid_argument("simulate: slot count too large");

    Rng gen_p(Rng::substream(seed, kGenP));
    Rng gen_s(Rng::substream(seed, kGenS));
    Rng dec_p(Rng::substream(seed, kDecodeP));
    Rng dec_s(Rng::substream(seed, kDecodeS));
    Rng h_pp(Rng::substream(seed, kHpp));
    Rng h_ss(Rng::substream(seed, kHss));
    Rng h_sp(Rng::substream(seed, kHsp));
    Rng h_ps(Rng::substream(seed, kHps));

    SimReport report;
    report.scheme = scheme;
    report.mode = mode;
    report.slots = slots;
    report.warmup = warmup;
    report.seed = seed;

    DeviceState prim, sec;

    for (std::uint64_t t = 1; t <= slots; ++t) {
        // Start of slot: Bernoulli generations, preempting if busy.
        if (gen_p.bernoulli(p)) handle_generation(prim, t);
        if (gen_s.bernoulli(q)) handle_generation(sec, t);

        // Medium access.
        const bool tx_p = prim.busy;
        const bool tx_s =
            scheme == Scheme::overlay ? (sec.busy && !tx_p) : sec.busy;
        assert(!(scheme == Scheme::overlay && tx_p && tx_s));

        if (t > warmup) {
            if (tx_p) {
                ++report.primary.tx_slots;
                if (tx_s) ++report.primary.tx_slots_exposed;
            }
            if (tx_s) {
                ++report.secondary.tx_slots;
                if (tx_p) ++report.secondary.tx_slots_exposed;
            }
        }

        // Decode.
        bool ok_p = false;
        bool ok_s = false;
        if (mode == SimMode::abstract) {
            if (tx_p) {
                const double phi =
                    scheme == Scheme::overlay
                        ? outages->phi_op
                        : (tx_s ? outages->phi_up_hat : outages->phi_up);
                ok_p = !dec_p.bernoulli(phi);
            }
            if (tx_s) {
                const double phi =
                    scheme == Scheme::overlay
                        ? outages->phi_os
                        : (tx_p ? outages->phi_us_hat : outages->phi_us);
                ok_s = !dec_s.bernoulli(phi);
            }
        } else {
            double gain_sp = 0.0;
            if (tx_s && scheme == Scheme::underlay)
                gain_sp = h_sp.exponential(fading->gains.omega_sp);
            if (tx_p) {
                double interference = 0.0;
                if (tx_s && scheme == Scheme::underlay) {
                    interference = std::min(fading->ic, fading->ps * gain_sp);
                    assert(interference <= fading->ic);
                }
                const double snr = fading->pp *
                                   h_pp.exponential(fading->gains.omega_pp) /
                                   (interference + fading->n0);
                ok_p = snr >= fading->sigma_p;
            }
            if (tx_s) {
                const double power =
                    scheme == Scheme::underlay
                        ? std::min(fading->ic / gain_sp, fading->ps)
                        : fading->ps;
                double interference = 0.0;
                if (tx_p && scheme == Scheme::underlay)
                    interference =
                        fading->pp * h_ps.exponential(fading->gains.omega_ps);
                const double snr = power *
                                   h_ss.exponential(fading->gains.omega_ss) /
                                   (interference + fading->n0);
                ok_s = snr >= fading->sigma_s;
            }
        }

        // End of slot: deliveries reset AoI for the next slot; otherwise
        // each receiver ages by one.
        if (tx_p && ok_p)
            handle_delivery(prim, System::primary, t, warmup, report.primary, log);
        else if (prim.aoi_valid)
            ++prim.aoi;
        if (tx_s && ok_s)
            handle_delivery(sec, System::secondary, t, warmup, report.secondary,
                            log);
        else if (sec.aoi_valid)
            ++sec.aoi;
    }
    return report;
}

} // namespace

double SampleStats::stderror() const {
    if (n < 2) return 0.0;
    const double m = mean();
    const double var =
        std::max(0.0, (sumsq - static_cast<double>(n) * m * m) /
                          static_cast<double>(n - 1));
    return std::sqrt(var / static_cast<double>(n));
}

SimReport simulate(const SystemConfig& cfg, Scheme scheme, SimMode mode,
                   std::uint64_t slots, std::uint64_t warmup,
                   std::uint64_t seed, std::vector<DeliveryRecord>* log) {
    cfg.validate();
    if (mode == SimMode::abstract) {
        const OutageSet outages = outage_set(cfg);
        return run(cfg.p, cfg.q, &outages, nullptr, scheme, mode, slots,
                   warmup, seed, log);
    }
    FadingParams fp{cfg.power_primary(), cfg.power_secondary(), cfg.noise(),
                    cfg.interference_cap(), cfg.sigma_primary(),
                    cfg.sigma_secondary(), link_gains(cfg)};
    return run(cfg.p, cfg.q, nullptr, &fp, scheme, mode, slots, warmup, seed,
               log);
}

SimReport simulate_abstract(double p, double q, const OutageSet& outages,
                            Scheme scheme, std::uint64_t slots,
                            std::uint64_t warmup, std::uint64_t seed,
                            std::vector<DeliveryRecord>* log) {
    if (!(p > 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("simulate_abstract: rates out of range");
    return run(p, q, &outages, nullptr, scheme, SimMode::abstract, slots,
               warmup, seed, log);
}

ModeAgreement simulate_abstract_vs_fading(const SystemConfig& cfg, Scheme scheme,
                                          std::uint64_t slots,
                                          std::uint64_t seed_fading,
                                          std::uint64_t seed_abstract) {
    ModeAgreement a{simulate(cfg, scheme, SimMode::fading, slots,
                             kDefaultWarmup, seed_fading),
                    simulate(cfg, scheme, SimMode::abstract, slots,
                             kDefaultWarmup, seed_abstract),
                    0.0, 0.0};
    const auto z = [](const SystemReport& x, const SystemReport& y) {
        const double se = std::hypot(x.peak.stderror(), y.peak.stderror());
        return se > 0.0 ? (x.peak.mean() - y.peak.mean()) / se : 0.0;
    };
    a.z_primary = z(a.fading.primary, a.abstract_mode.primary);
    a.z_secondary = z(a.fading.secondary, a.abstract_mode.secondary);
    return a;
}

double TransitionLog::frequency(int i, int j) const {
    std::uint64_t row = 0;
    for (int c = 0; c < 4; ++c) row += counts[i][c];
    return row ? static_cast<double>(counts[i][j]) / static_cast<double>(row)
               : 0.0;
}

double TransitionLog::occupancy_fraction(int i) const {
    return slots ? static_cast<double>(occupancy[i]) / static_cast<double>(slots)
                 : 0.0;
}

TransitionLog empirical_transition_log_abstract(double p, double q,
                                                const OutageSet& outages,
                                                std::uint64_t slots,
                                                std::uint64_t seed) {
    Rng gen_p(Rng::substream(seed, kGenP));
    Rng gen_s(Rng::substream(seed, kGenS));
    Rng dec_p(Rng::substream(seed, kDecodeP));
    Rng dec_s(Rng::substream(seed, kDecodeS));

    TransitionLog tlog;
    bool busy_p = false, busy_s = false;
    int prev_state = -1;
    for (std::uint64_t t = 1; t <= slots; ++t) {
        if (gen_p.bernoulli(p)) busy_p = true;
        if (gen_s.bernoulli(q)) busy_s = true;

        // State classified post-generation, pre-decode.
        const int state = (busy_p ? 1 : 0) + (busy_s ? 2 : 0);
        ++tlog.occupancy[state];
        if (prev_state >= 0) ++tlog.counts[prev_state][state];
        prev_state = state;
        ++tlog.slots;

        const bool tx_p = busy_p, tx_s = busy_s;
        if (tx_p &&
            !dec_p.bernoulli(tx_s ? outages.phi_up_hat : outages.phi_up))
            busy_p = false;
        if (tx_s &&
            !dec_s.bernoulli(tx_p ? outages.phi_us_hat : outages.phi_us))
            busy_s = false;
    }
    return tlog;
}

TransitionLog empirical_transition_log(const SystemConfig& cfg,
                                       std::uint64_t slots,
                                       std::uint64_t seed) {
    cfg.validate();
    return empirical_transition_log_abstract(cfg.p, cfg.q, outage_set(cfg),
                                             slots, seed);
}

} // namespace aoicr
