#include "aoicr.h"

#include "aoicr/asymptotics.hpp"
#include "aoicr/configfile.hpp"
#include "aoicr/overlay.hpp"
#include "aoicr/simulator.hpp"
#include "aoicr/sweep.hpp"
#include "aoicr/underlay.hpp"

#include <cmath>
#include <fstream>
#include <new>
#include <stdexcept>

struct aoicr_config {
    aoicr::SystemConfig cfg;
};

namespace {

template <typename Fn>
aoicr_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument&) {
        return AOICR_EINVAL;
    } catch (const std::domain_error&) {
        return AOICR_EINVAL;
    } catch (const std::ios_base::failure&) {
        return AOICR_EIO;
    } catch (const std::bad_alloc&) {
        return AOICR_ENUMERIC;
    } catch (const std::exception&) {
        return AOICR_ENUMERIC;
    }
}

aoicr::Scheme to_scheme(aoicr_scheme s) {
    if (s != AOICR_SCHEME_OVERLAY && s != AOICR_SCHEME_UNDERLAY)
        throw std::invalid_argument("bad scheme");
    return s == AOICR_SCHEME_OVERLAY ? aoicr::Scheme::overlay
                                     : aoicr::Scheme::underlay;
}

aoicr::System to_system(aoicr_system s) {
    if (s != AOICR_SYSTEM_PRIMARY && s != AOICR_SYSTEM_SECONDARY)
        throw std::invalid_argument("bad system");
    return s == AOICR_SYSTEM_PRIMARY ? aoicr::System::primary
                                     : aoicr::System::secondary;
}

aoicr::SimMode to_mode(aoicr_mode m) {
    if (m != AOICR_MODE_FADING && m != AOICR_MODE_ABSTRACT)
        throw std::invalid_argument("bad mode");
    return m == AOICR_MODE_FADING ? aoicr::SimMode::fading
                                  : aoicr::SimMode::abstract;
}

aoicr_breakdown to_c(const aoicr::PeakAoiBreakdown& b) {
    return {b.e_w, b.e_k, b.e_y, b.e_s, b.avg_peak};
}

void require(bool ok) {
    if (!ok) throw std::invalid_argument("null argument");
}

} // namespace

extern "C" {

aoicr_config* aoicr_config_new(void) {
    return new (std::nothrow) aoicr_config{};
}

void aoicr_config_free(aoicr_config* cfg) { delete cfg; }

aoicr_status aoicr_config_set(aoicr_config* cfg, const char* key,
                              double value) {
    return guarded([&] {
        require(cfg && key);
        aoicr::set_config_field(cfg->cfg, key, value);
        return AOICR_OK;
    });
}

aoicr_status aoicr_config_get(const aoicr_config* cfg, const char* key,
                              double* out) {
    return guarded([&] {
        require(cfg && key && out);
        *out = aoicr::get_config_field(cfg->cfg, key);
        return AOICR_OK;
    });
}

aoicr_status aoicr_config_load(aoicr_config* cfg, const char* path) {
    return guarded([&] {
        require(cfg && path);
        cfg->cfg = aoicr::load_config_file(path);
        return AOICR_OK;
    });
}

aoicr_status aoicr_config_validate(const aoicr_config* cfg) {
    return guarded([&] {
        require(cfg);
        cfg->cfg.validate();
        return AOICR_OK;
    });
}

aoicr_status aoicr_outages(const aoicr_config* cfg, aoicr_outage_set* out) {
    return guarded([&] {
        require(cfg && out);
        const aoicr::OutageSet o = aoicr::outage_set(cfg->cfg);
        *out = {o.phi_op, o.phi_os, o.phi_up,
                o.phi_us, o.phi_up_hat, o.phi_us_hat};
        return AOICR_OK;
    });
}

aoicr_status aoicr_peak_aoi(const aoicr_config* cfg, aoicr_scheme scheme,
                            aoicr_system system, aoicr_breakdown* out) {
    return guarded([&] {
        require(cfg && out);
        const aoicr::Scheme sch = to_scheme(scheme);
        const aoicr::System sys = to_system(system);
        const aoicr::OutageSet o = aoicr::outage_set(cfg->cfg);
        aoicr::PeakAoiBreakdown b;
        if (sch == aoicr::Scheme::overlay)
            b = sys == aoicr::System::primary
                    ? aoicr::peak_aoi_overlay_primary(cfg->cfg.p, o.phi_op)
                    : aoicr::peak_aoi_overlay_secondary(cfg->cfg.p, cfg->cfg.q,
                                                        o.phi_op, o.phi_os);
        else
            b = aoicr::peak_aoi_underlay(sys, cfg->cfg.p, cfg->cfg.q, o);
        if (!std::isfinite(b.avg_peak))
            throw std::runtime_error("non-finite result");
        *out = to_c(b);
        return AOICR_OK;
    });
}

aoicr_status aoicr_peak_aoi_asymptotic(const aoicr_config* cfg,
                                       aoicr_scheme scheme,
                                       aoicr_system system,
                                       aoicr_breakdown* out) {
    return guarded([&] {
        require(cfg && out);
        const aoicr::Scheme sch = to_scheme(scheme);
        const aoicr::System sys = to_system(system);
        cfg->cfg.validate();
        const aoicr::OutageSet o = aoicr::outage_set(cfg->cfg);
        const double p = aoicr::clamp_rate(cfg->cfg.p);
        const double q = aoicr::clamp_rate(cfg->cfg.q);
        aoicr::PeakAoiBreakdown b;
        if (sys == aoicr::System::primary) {
            b = aoicr::assemble_peak_aoi(1.0, (1.0 - p) / p, 1.0);
        } else {
            const double c =
                sch == aoicr::Scheme::overlay
                    ? (1.0 - o.phi_os) * (1.0 - p)
                    : (1.0 - p) * (1.0 - o.phi_us) +
                          p * (1.0 - o.phi_us_hat);
            b = aoicr::assemble_peak_aoi(1.0 / c, (1.0 - q) / q,
                                         1.0 / (q + (1.0 - q) * c));
        }
        *out = to_c(b);
        return AOICR_OK;
    });
}

aoicr_status aoicr_critical_rate(const aoicr_config* cfg, double* p_star) {
    return guarded([&] {
        require(cfg && p_star);
        const aoicr::OutageSet o = aoicr::outage_set(cfg->cfg);
        *p_star = aoicr::critical_rate(o.phi_os, o.phi_us, o.phi_us_hat);
        return AOICR_OK;
    });
}

aoicr_status aoicr_simulate(const aoicr_config* cfg, aoicr_scheme scheme,
                            aoicr_mode mode, uint64_t slots, uint64_t warmup,
                            uint64_t seed, const char* event_log_path,
                            aoicr_sim_result* primary,
                            aoicr_sim_result* secondary) {
    return guarded([&] {
        require(cfg && primary && secondary);
        if (warmup == UINT64_MAX) warmup = aoicr::kDefaultWarmup;
        std::vector<aoicr::DeliveryRecord> log;
        const aoicr::SimReport rep =
            aoicr::simulate(cfg->cfg, to_scheme(scheme), to_mode(mode), slots,
                            warmup, seed, event_log_path ? &log : nullptr);
        const auto pack = [](const aoicr::SystemReport& r) {
            aoicr_sim_result out;
            out.breakdown = {r.w.mean(), r.k.mean(), r.y.mean(), r.s.mean(),
                             r.peak.mean()};
            out.peak_stderr = r.peak.stderror();
            out.deliveries = r.peak.n;
            out.interference_fraction = r.interference_fraction();
            return out;
        };
        *primary = pack(rep.primary);
        *secondary = pack(rep.secondary);
        if (event_log_path) {
            std::ofstream out(event_log_path);
            if (!out) throw std::ios_base::failure("cannot open event log");
            aoicr::write_event_log_csv(log, out);
            out.flush();
            if (!out) throw std::ios_base::failure("event log write failed");
        }
        return AOICR_OK;
    });
}

aoicr_status aoicr_run_sweep(const aoicr_config* base,
                             const aoicr_sweep_spec* spec,
                             const char* out_csv_path) {
    return guarded([&] {
        require(base && spec && spec->param && out_csv_path);
        aoicr::SweepSpec s;
        s.base = base->cfg;
        s.param = spec->param;
        s.min = spec->min;
        s.max = spec->max;
        s.steps = spec->steps;
        s.overlay = spec->overlay != 0;
        s.underlay = spec->underlay != 0;
        s.engine_analytic = spec->engine_analytic != 0;
        s.engine_asymptotic = spec->engine_asymptotic != 0;
        s.engine_simulate = spec->engine_simulate != 0;
        s.mode = to_mode(spec->mode);
        s.slots = spec->slots;
        s.warmup =
            spec->warmup == UINT64_MAX ? aoicr::kDefaultWarmup : spec->warmup;
        s.seed = spec->seed;
        const std::vector<aoicr::SweepRow> rows = aoicr::run_sweep(s);
        std::ofstream out(out_csv_path);
        if (!out) throw std::ios_base::failure("cannot open output file");
        aoicr::write_sweep_csv(rows, out);
        out.flush();
        if (!out) throw std::ios_base::failure("CSV write failed");
        return AOICR_OK;
    });
}

const char* aoicr_strerror(aoicr_status status) {
    switch (status) {
        case AOICR_OK: return "ok";
        case AOICR_EINVAL: return "invalid parameter or malformed input";
        case AOICR_ENUMERIC: return "numerical failure";
        case AOICR_EIO: return "file I/O failure";
    }
    return "unknown status";
}

} // extern "C"
