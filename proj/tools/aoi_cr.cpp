// Command-line front end. Links only the C interface.
#include "aoicr.h"

#include "CLI11.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

struct ConfigDeleter {
    void operator()(aoicr_config* c) const { aoicr_config_free(c); }
};
using ConfigPtr = std::unique_ptr<aoicr_config, ConfigDeleter>;

[[noreturn]] void die(aoicr_status st, const std::string& context) {
    std::fprintf(stderr, "error: %s: %s\n", context.c_str(),
                 aoicr_strerror(st));
    std::exit(st == AOICR_ENUMERIC ? kExitNumeric : kExitValidation);
}

void check(aoicr_status st, const std::string& context) {
    if (st != AOICR_OK) die(st, context);
}

ConfigPtr make_config(const std::string& config_path) {
    ConfigPtr cfg(aoicr_config_new());
    if (!cfg) die(AOICR_ENUMERIC, "allocating config");
    if (!config_path.empty())
        check(aoicr_config_load(cfg.get(), config_path.c_str()),
              "loading " + config_path);
    check(aoicr_config_validate(cfg.get()), "validating config");
    return cfg;
}

struct SchemeSelection {
    bool overlay = true;
    bool underlay = true;
};

SchemeSelection parse_scheme(const std::string& s) {
    if (s == "overlay") return {true, false};
    if (s == "underlay") return {false, true};
    if (s == "both") return {true, true};
    std::fprintf(stderr, "error: --scheme must be overlay|underlay|both\n");
    std::exit(kExitValidation);
}

struct EngineSelection {
    bool analytic = false;
    bool asymptotic = false;
    bool simulate = false;
};

EngineSelection parse_engine(const std::string& s) {
    if (s == "analytic") return {true, false, false};
    if (s == "asymptotic") return {false, true, false};
    if (s == "simulate") return {false, false, true};
    if (s == "all") return {true, true, true};
    std::fprintf(stderr,
                 "error: --engine must be analytic|asymptotic|simulate|all\n");
    std::exit(kExitValidation);
}

aoicr_mode parse_mode(const std::string& s) {
    if (s == "fading") return AOICR_MODE_FADING;
    if (s == "abstract") return AOICR_MODE_ABSTRACT;
    std::fprintf(stderr, "error: --mode must be fading|abstract\n");
    std::exit(kExitValidation);
}

struct SweepArg {
    std::string param;
    double min = 0.0, max = 0.0;
    int steps = 0;
};

SweepArg parse_sweep_arg(const std::string& s) {
    SweepArg a;
    std::istringstream in(s);
    std::string f_min, f_max, f_steps;
    if (!std::getline(in, a.param, ':') || !std::getline(in, f_min, ':') ||
        !std::getline(in, f_max, ':') || !std::getline(in, f_steps)) {
        std::fprintf(stderr,
                     "error: --sweep expects <param>:<min>:<max>:<steps>\n");
        std::exit(kExitValidation);
    }
    try {
        a.min = std::stod(f_min);
        a.max = std::stod(f_max);
        a.steps = std::stoi(f_steps);
    } catch (const std::exception&) {
        std::fprintf(stderr, "error: malformed --sweep grid '%s'\n", s.c_str());
        std::exit(kExitValidation);
    }
    return a;
}

const char* system_label(aoicr_system s) {
    return s == AOICR_SYSTEM_PRIMARY ? "primary" : "secondary";
}

const char* scheme_label(aoicr_scheme s) {
    return s == AOICR_SCHEME_OVERLAY ? "overlay" : "underlay";
}

void print_breakdown(const char* scheme, const char* engine, const char* sys,
                     const aoicr_breakdown& b) {
    std::printf("%-9s %-10s %-9s e_w=%-12.6g e_k=%-12.6g e_y=%-12.6g "
                "e_s=%-12.6g avg_peak=%.10g\n",
                scheme, engine, sys, b.e_w, b.e_k, b.e_y, b.e_s, b.avg_peak);
}

int cmd_analyze(const std::string& config_path, const std::string& scheme,
                const std::string& engine) {
    const ConfigPtr cfg = make_config(config_path);
    const SchemeSelection sel = parse_scheme(scheme);
    EngineSelection eng = parse_engine(engine);
    if (eng.simulate && !eng.analytic && !eng.asymptotic) {
        std::fprintf(stderr, "error: analyze supports analytic/asymptotic "
                             "engines; use the simulate subcommand\n");
        return kExitValidation;
    }
    aoicr_outage_set o;
    check(aoicr_outages(cfg.get(), &o), "computing outage probabilities");
    std::printf("phi_op=%.10g phi_os=%.10g phi_up=%.10g phi_us=%.10g "
                "phi_up_hat=%.10g phi_us_hat=%.10g\n",
                o.phi_op, o.phi_os, o.phi_up, o.phi_us, o.phi_up_hat,
                o.phi_us_hat);
    for (const aoicr_scheme sch :
         {AOICR_SCHEME_OVERLAY, AOICR_SCHEME_UNDERLAY}) {
        if ((sch == AOICR_SCHEME_OVERLAY && !sel.overlay) ||
            (sch == AOICR_SCHEME_UNDERLAY && !sel.underlay))
            continue;
        for (const aoicr_system sys :
             {AOICR_SYSTEM_PRIMARY, AOICR_SYSTEM_SECONDARY}) {
            aoicr_breakdown b;
            if (eng.analytic) {
                check(aoicr_peak_aoi(cfg.get(), sch, sys, &b), "analysis");
                print_breakdown(scheme_label(sch), "analytic",
                                system_label(sys), b);
            }
            if (eng.asymptotic) {
                check(aoicr_peak_aoi_asymptotic(cfg.get(), sch, sys, &b),
                      "asymptotic analysis");
                print_breakdown(scheme_label(sch), "asymptotic",
                                system_label(sys), b);
            }
        }
    }
    return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& scheme,
                 const std::string& mode, std::uint64_t slots,
                 std::uint64_t seed, const std::string& log_path) {
    const ConfigPtr cfg = make_config(config_path);
    const SchemeSelection sel = parse_scheme(scheme);
    const aoicr_mode m = parse_mode(mode);
    for (const aoicr_scheme sch :
         {AOICR_SCHEME_OVERLAY, AOICR_SCHEME_UNDERLAY}) {
        if ((sch == AOICR_SCHEME_OVERLAY && !sel.overlay) ||
            (sch == AOICR_SCHEME_UNDERLAY && !sel.underlay))
            continue;
        aoicr_sim_result pri, sec;
        check(aoicr_simulate(cfg.get(), sch, m, slots, UINT64_MAX, seed,
                             log_path.empty() ? nullptr : log_path.c_str(),
                             &pri, &sec),
              "simulation");
        for (const auto& [sys, r] :
             {std::pair{AOICR_SYSTEM_PRIMARY, pri},
              std::pair{AOICR_SYSTEM_SECONDARY, sec}}) {
            std::printf("%-9s simulate   %-9s avg_peak=%.10g se=%.4g "
                        "deliveries=%" PRIu64 " e_w=%.6g e_k=%.6g e_y=%.6g "
                        "e_s=%.6g interference_fraction=%.6g\n",
                        scheme_label(sch), system_label(sys),
                        r.breakdown.avg_peak, r.peak_stderr, r.deliveries,
                        r.breakdown.e_w, r.breakdown.e_k, r.breakdown.e_y,
                        r.breakdown.e_s, r.interference_fraction);
        }
    }
    return 0;
}

int cmd_compare(const std::string& config_path, const std::string& scheme,
                const std::string& mode, std::uint64_t slots,
                std::uint64_t seed) {
    const ConfigPtr cfg = make_config(config_path);
    const SchemeSelection sel = parse_scheme(scheme);
    const aoicr_mode m = parse_mode(mode);
    std::printf("%-9s %-9s %-10s %12s %12s %12s %8s\n", "scheme", "system",
                "quantity", "analytic", "simulated", "stderr", "z");
    for (const aoicr_scheme sch :
         {AOICR_SCHEME_OVERLAY, AOICR_SCHEME_UNDERLAY}) {
        if ((sch == AOICR_SCHEME_OVERLAY && !sel.overlay) ||
            (sch == AOICR_SCHEME_UNDERLAY && !sel.underlay))
            continue;
        aoicr_sim_result pri, sec;
        check(aoicr_simulate(cfg.get(), sch, m, slots, UINT64_MAX, seed,
                             nullptr, &pri, &sec),
              "simulation");
        for (const auto& [sys, r] :
             {std::pair{AOICR_SYSTEM_PRIMARY, pri},
              std::pair{AOICR_SYSTEM_SECONDARY, sec}}) {
            aoicr_breakdown a;
            check(aoicr_peak_aoi(cfg.get(), sch, sys, &a), "analysis");
            const double z =
                r.peak_stderr > 0.0
                    ? (r.breakdown.avg_peak - a.avg_peak) / r.peak_stderr
                    : 0.0;
            const struct {
                const char* name;
                double analytic, simulated;
            } rows[] = {
                {"e_w", a.e_w, r.breakdown.e_w},
                {"e_k", a.e_k, r.breakdown.e_k},
                {"e_y", a.e_y, r.breakdown.e_y},
                {"e_s", a.e_s, r.breakdown.e_s},
                {"avg_peak", a.avg_peak, r.breakdown.avg_peak},
            };
            for (const auto& row : rows) {
                if (row.name == std::string("avg_peak"))
                    std::printf("%-9s %-9s %-10s %12.6g %12.6g %12.4g %8.3f\n",
                                scheme_label(sch), system_label(sys), row.name,
                                row.analytic, row.simulated, r.peak_stderr, z);
                else
                    std::printf("%-9s %-9s %-10s %12.6g %12.6g\n",
                                scheme_label(sch), system_label(sys), row.name,
                                row.analytic, row.simulated);
            }
        }
    }
    return 0;
}

// Recipe files reuse the flat key=value syntax; keys that are not
// physical parameters steer the sweep itself.
struct Recipe {
    ConfigPtr cfg;
    SweepArg sweep;
    std::string scheme = "both";
    std::string engine = "analytic";
    std::string mode = "abstract";
    std::uint64_t slots = 1000000;
    std::uint64_t seed = 1;
    std::string out;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Recipe load_recipe(const std::string& path) {
    Recipe r;
    r.cfg.reset(aoicr_config_new());
    if (!r.cfg) die(AOICR_ENUMERIC, "allocating config");
    std::ifstream in(path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open recipe '%s'\n", path.c_str());
        std::exit(kExitValidation);
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "error: %s:%d: expected 'key = value'\n",
                         path.c_str(), lineno);
            std::exit(kExitValidation);
        }
        const std::string key = trim(body.substr(0, eq));
        const std::string val = trim(body.substr(eq + 1));
        try {
            if (key == "sweep") r.sweep = parse_sweep_arg(val);
            else if (key == "scheme") r.scheme = val;
            else if (key == "engine") r.engine = val;
            else if (key == "mode") r.mode = val;
            else if (key == "slots") r.slots = std::stoull(val);
            else if (key == "seed") r.seed = std::stoull(val);
            else if (key == "out") r.out = val;
            else {
                const double x = std::stod(val);
                check(aoicr_config_set(r.cfg.get(), key.c_str(), x),
                      path + ":" + std::to_string(lineno) + ": '" + key + "'");
            }
        } catch (const std::exception&) {
            std::fprintf(stderr, "error: %s:%d: bad value '%s'\n", path.c_str(),
                         lineno, val.c_str());
            std::exit(kExitValidation);
        }
    }
    return r;
}

int cmd_sweep(const std::string& config_path, const std::string& recipe_path,
              const std::string& sweep_arg, const std::string& scheme,
              const std::string& engine, const std::string& mode,
              std::uint64_t slots, std::uint64_t seed, const std::string& out,
              bool slots_set, bool seed_set) {
    Recipe r;
    if (!recipe_path.empty()) {
        r = load_recipe(recipe_path);
    } else {
        r.cfg = make_config(config_path);
    }
    if (!sweep_arg.empty()) r.sweep = parse_sweep_arg(sweep_arg);
    if (!scheme.empty()) r.scheme = scheme;
    if (!engine.empty()) r.engine = engine;
    if (!mode.empty()) r.mode = mode;
    if (slots_set) r.slots = slots;
    if (seed_set) r.seed = seed;
    if (!out.empty()) r.out = out;

    if (r.sweep.param.empty()) {
        std::fprintf(stderr, "error: no sweep grid given (--sweep)\n");
        return kExitValidation;
    }
    if (r.out.empty()) {
        std::fprintf(stderr, "error: no output path given (--out)\n");
        return kExitValidation;
    }
    const SchemeSelection sel = parse_scheme(r.scheme);
    const EngineSelection eng = parse_engine(r.engine);

    aoicr_sweep_spec spec{};
    spec.param = r.sweep.param.c_str();
    spec.min = r.sweep.min;
    spec.max = r.sweep.max;
    spec.steps = r.sweep.steps;
    spec.overlay = sel.overlay;
    spec.underlay = sel.underlay;
    spec.engine_analytic = eng.analytic;
    spec.engine_asymptotic = eng.asymptotic;
    spec.engine_simulate = eng.simulate;
    spec.mode = parse_mode(r.mode);
    spec.slots = r.slots;
    spec.warmup = UINT64_MAX;
    spec.seed = r.seed;
    check(aoicr_run_sweep(r.cfg.get(), &spec, r.out.c_str()), "sweep");
    std::printf("wrote %s\n", r.out.c_str());
    return 0;
}

int cmd_critical_rate(const std::string& config_path) {
    const ConfigPtr cfg = make_config(config_path);
    double p_star = 0.0;
    check(aoicr_critical_rate(cfg.get(), &p_star), "critical rate");
    double p = 0.0;
    check(aoicr_config_get(cfg.get(), "p", &p), "reading p");
    const char* rec = p < p_star   ? "overlay"
                      : p > p_star ? "underlay"
                                   : "tie";
    std::printf("p_star=%.10g p=%.10g recommended=%s\n", p_star, p, rec);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Average peak age-of-information for a two-system "
                 "spectrum-sharing network"};
    app.require_subcommand(1);

    std::string config_path, recipe_path, scheme, engine, mode, out, log_path,
        sweep_arg;
    std::uint64_t slots = 1000000, seed = 1;

    auto* analyze = app.add_subcommand("analyze", "Closed-form results");
    analyze->add_option("--config", config_path);
    analyze->add_option("--scheme", scheme)->default_val("both");
    analyze->add_option("--engine", engine)->default_val("analytic");

    auto* simulate = app.add_subcommand("simulate", "One Monte Carlo run");
    simulate->add_option("--config", config_path);
    simulate->add_option("--scheme", scheme)->default_val("both");
    simulate->add_option("--mode", mode)->default_val("abstract");
    simulate->add_option("--slots", slots)->default_val(1000000);
    simulate->add_option("--seed", seed)->default_val(1);
    simulate->add_option("--log", log_path,
                         "Event-log CSV path (one row per delivery)");

    auto* compare = app.add_subcommand(
        "compare", "Analytic vs simulated side-by-side");
    compare->add_option("--config", config_path);
    compare->add_option("--scheme", scheme)->default_val("both");
    compare->add_option("--mode", mode)->default_val("abstract");
    compare->add_option("--slots", slots)->default_val(1000000);
    compare->add_option("--seed", seed)->default_val(1);

    // The sweep subcommand keeps its own selection strings: empty means
    // "not given on the command line", so recipe settings win.
    std::string sw_scheme, sw_engine, sw_mode;
    auto* sweep = app.add_subcommand("sweep", "Grid sweep to CSV");
    sweep->add_option("--config", config_path);
    sweep->add_option("--recipe", recipe_path,
                      "Recipe file bundling config + sweep settings");
    sweep->add_option("--sweep", sweep_arg, "<param>:<min>:<max>:<steps>");
    sweep->add_option("--scheme", sw_scheme);
    sweep->add_option("--engine", sw_engine);
    sweep->add_option("--mode", sw_mode);
    auto* slots_opt = sweep->add_option("--slots", slots);
    auto* seed_opt = sweep->add_option("--seed", seed);
    sweep->add_option("--out", out);

    auto* critical =
        app.add_subcommand("critical-rate", "Scheme-selection threshold");
    critical->add_option("--config", config_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    if (analyze->parsed()) return cmd_analyze(config_path, scheme, engine);
    if (simulate->parsed())
        return cmd_simulate(config_path, scheme, mode, slots, seed, log_path);
    if (compare->parsed())
        return cmd_compare(config_path, scheme, mode, slots, seed);
    if (sweep->parsed())
        return cmd_sweep(config_path, recipe_path, sweep_arg, sw_scheme,
                         sw_engine, sw_mode, slots, seed, out,
                         slots_opt->count() > 0,
                         seed_opt->count() > 0);
    if (critical->parsed()) return cmd_critical_rate(config_path);
    return kExitValidation;
}
