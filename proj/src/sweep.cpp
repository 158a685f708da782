#include "aoicr/sweep.hpp"

#include "aoicr/asymptotics.hpp"
#include "aoicr/configfile.hpp"
#include "aoicr/overlay.hpp"
#include "aoicr/rng.hpp"
#include "aoicr/underlay.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace aoicr {
namespace {

const std::set<std::string> kSweepable = {
    "p_p_dbm", "p_s_dbm", "p", "q", "ic_over_n0", "d_sp", "d_ps"};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

PeakAoiBreakdown analytic_point(const SystemConfig& cfg, Scheme scheme,
                                System sys, const OutageSet& outages) {
    if (scheme == Scheme::overlay)
        return sys == System::primary
                   ? peak_aoi_overlay_primary(cfg.p, outages.phi_op)
                   : peak_aoi_overlay_secondary(cfg.p, cfg.q, outages.phi_op,
                                                outages.phi_os);
    return peak_aoi_underlay(sys, cfg.p, cfg.q, outages);
}

PeakAoiBreakdown asymptotic_point(const SystemConfig& cfg, Scheme scheme,
                                  System sys, const OutageSet& outages) {
    const double p = clamp_rate(cfg.p);
    const double q = clamp_rate(cfg.q);
    if (sys == System::primary)
        return assemble_peak_aoi(1.0, (1.0 - p) / p, 1.0);
    // High-SNR per-round success probability of the secondary.
    const double c =
        scheme == Scheme::overlay
            ? (1.0 - outages.phi_os) * (1.0 - p)
            : (1.0 - p) * (1.0 - outages.phi_us) +
                  p * (1.0 - outages.phi_us_hat);
    return assemble_peak_aoi(1.0 / c, (1.0 - q) / q,
                             1.0 / (q + (1.0 - q) * c));
}

} // namespace

void SweepSpec::validate() const {
    base.validate();
    if (!kSweepable.count(param))
        throw std::invalid_argument("sweep: unrecognized parameter '" + param +
                                    "'");
    if (!(min < max))
        throw std::invalid_argument("sweep: grid requires min < max");
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    if (!overlay && !underlay)
        throw std::invalid_argument("sweep: no scheme selected");
    if (!engine_analytic && !engine_asymptotic && !engine_simulate)
        throw std::invalid_argument("sweep: no engine selected");
    if (engine_simulate && slots <= warmup)
        throw std::invalid_argument("sweep: slots must exceed warmup");
}

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("AOI_CR_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n)
            n = static_cast<unsigned>(cap);
    }
    return n;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();

    std::vector<Scheme> schemes;
    if (spec.overlay) schemes.push_back(Scheme::overlay);
    if (spec.underlay) schemes.push_back(Scheme::underlay);

    struct Point {
        double value;
        SystemConfig cfg;
        OutageSet outages;
    };
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(spec.steps));
    for (int i = 0; i < spec.steps; ++i) {
        Point pt;
        pt.value = spec.min + (spec.max - spec.min) * i / (spec.steps - 1);
        pt.cfg = spec.base;
        set_config_field(pt.cfg, spec.param, pt.value);
        pt.cfg.validate();
        pt.outages = outage_set(pt.cfg);
        points.push_back(pt);
    }

    // Simulation jobs are the only expensive part; farm them out.
    struct SimJob {
        std::size_t point;
        Scheme scheme;
        std::uint64_t seed;
        SimReport report;
    };
    std::vector<SimJob> jobs;
    if (spec.engine_simulate) {
        for (std::size_t i = 0; i < points.size(); ++i)
            for (const Scheme s : schemes) {
                const std::uint64_t stream =
                    2 * i + (s == Scheme::underlay ? 1 : 0);
                jobs.push_back(
                    {i, s, Rng::substream(spec.seed, stream), SimReport{}});
            }
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        const auto worker = [&] {
            for (;;) {
                const std::size_t j = next.fetch_add(1);
                if (j >= jobs.size()) return;
                try {
                    jobs[j].report =
                        simulate(points[jobs[j].point].cfg, jobs[j].scheme,
                                 spec.mode, spec.slots, spec.warmup,
                                 jobs[j].seed);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        };
        const unsigned width =
            std::min<std::size_t>(worker_count(), jobs.size());
        std::vector<std::thread> pool;
        for (unsigned w = 0; w + 1 < width; ++w) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }
    const auto find_job = [&](std::size_t point, Scheme s) -> const SimJob& {
        for (const auto& j : jobs)
            if (j.point == point && j.scheme == s) return j;
        throw std::logic_error("sweep: missing simulation job");
    };

    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (const Scheme scheme : schemes) {
            const auto emit = [&](Engine eng, System sys) {
                SweepRow row;
                row.param = spec.param;
                row.value = points[i].value;
                row.scheme = scheme;
                row.engine = eng;
                row.system = sys;
                if (eng == Engine::simulate) {
                    const SimJob& job = find_job(i, scheme);
                    const SystemReport& rep = sys == System::primary
                                                  ? job.report.primary
                                                  : job.report.secondary;
                    row.breakdown.e_w = rep.w.mean();
                    row.breakdown.e_k = rep.k.mean();
                    row.breakdown.e_y = rep.y.mean();
                    row.breakdown.e_s = rep.s.mean();
                    row.breakdown.avg_peak = rep.peak.mean();
                    row.se = rep.peak.stderror();
                    row.has_se = true;
                    row.seed = job.seed;
                    row.has_seed = true;
                } else if (eng == Engine::analytic) {
                    row.breakdown = analytic_point(points[i].cfg, scheme, sys,
                                                   points[i].outages);
                } else {
                    row.breakdown = asymptotic_point(points[i].cfg, scheme,
                                                     sys, points[i].outages);
                }
                rows.push_back(std::move(row));
            };
            const auto emit_engine = [&](Engine eng) {
                emit(eng, System::primary);
                emit(eng, System::secondary);
            };
            if (spec.engine_analytic) emit_engine(Engine::analytic);
            if (spec.engine_asymptotic) emit_engine(Engine::asymptotic);
            if (spec.engine_simulate) emit_engine(Engine::simulate);
        }
    }
    return rows;
}

const char* const kSweepCsvHeader =
    "param,value,scheme,engine,system,e_w,e_k,e_y,e_s,avg_peak,stderr,seed";

const char* scheme_name(Scheme s) {
    return s == Scheme::overlay ? "overlay" : "underlay";
}

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::analytic: return "analytic";
        case Engine::asymptotic: return "asymptotic";
        default: return "simulate";
    }
}

const char* system_name(System s) {
    return s == System::primary ? "primary" : "secondary";
}

std::string sweep_row_csv(const SweepRow& row) {
    std::string out = row.param;
    out += ',';
    out += fmt(row.value);
    out += ',';
    out += scheme_name(row.scheme);
    out += ',';
    out += engine_name(row.engine);
    out += ',';
    out += system_name(row.system);
    for (const double x : {row.breakdown.e_w, row.breakdown.e_k,
                           row.breakdown.e_y, row.breakdown.e_s,
                           row.breakdown.avg_peak}) {
        out += ',';
        out += fmt(x);
    }
    out += ',';
    if (row.has_se) out += fmt(row.se);
    out += ',';
    if (row.has_seed) out += std::to_string(row.seed);
    return out;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << kSweepCsvHeader << '\n';
    for (const auto& row : rows) out << sweep_row_csv(row) << '\n';
}

void write_event_log_csv(const std::vector<DeliveryRecord>& log,
                         std::ostream& out) {
    out << "system,g,d,W,K,S,Y,peak\n";
    for (const auto& r : log)
        out << system_name(r.system) << ',' << r.g << ',' << r.d << ','
            << r.w << ',' << r.k << ',' << r.s << ',' << r.y << ',' << r.peak
            << '\n';
}

} // namespace aoicr
