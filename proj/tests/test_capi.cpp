#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aoicr.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Handle {
    aoicr_config* c = aoicr_config_new();
    ~Handle() { aoicr_config_free(c); }
};

} // namespace

TEST_CASE("config lifecycle, field access and validation statuses") {
    Handle h;
    REQUIRE(h.c != nullptr);
    CHECK(aoicr_config_validate(h.c) == AOICR_OK);

    CHECK(aoicr_config_set(h.c, "p", 0.25) == AOICR_OK);
    double v = 0.0;
    CHECK(aoicr_config_get(h.c, "p", &v) == AOICR_OK);
    CHECK(v == 0.25);

    CHECK(aoicr_config_set(h.c, "bogus", 1.0) == AOICR_EINVAL);
    CHECK(aoicr_config_get(h.c, "bogus", &v) == AOICR_EINVAL);
    CHECK(aoicr_config_set(nullptr, "p", 1.0) == AOICR_EINVAL);
    CHECK(aoicr_config_get(h.c, "p", nullptr) == AOICR_EINVAL);

    CHECK(aoicr_config_set(h.c, "p", 2.0) == AOICR_OK); // range-checked later
    CHECK(aoicr_config_validate(h.c) == AOICR_EINVAL);
}

TEST_CASE("config files load through the handle") {
    const char* path = "capi_test.cfg";
    {
        std::ofstream out(path);
        out << "p_p_dbm = 30\np = 0.2\n";
    }
    Handle h;
    CHECK(aoicr_config_load(h.c, path) == AOICR_OK);
    double v = 0.0;
    CHECK(aoicr_config_get(h.c, "p_p_dbm", &v) == AOICR_OK);
    CHECK(v == 30.0);
    CHECK(aoicr_config_load(h.c, "no-such-file.cfg") == AOICR_EINVAL);
    std::remove(path);
}

TEST_CASE("outages and peak results are consistent across entry points") {
    Handle h;
    aoicr_outage_set o;
    REQUIRE(aoicr_outages(h.c, &o) == AOICR_OK);
    CHECK(o.phi_up == o.phi_op);
    CHECK(o.phi_us_hat > o.phi_us);

    aoicr_breakdown b;
    REQUIRE(aoicr_peak_aoi(h.c, AOICR_SCHEME_OVERLAY, AOICR_SYSTEM_PRIMARY,
                           &b) == AOICR_OK);
    CHECK(std::fabs(b.e_y - (b.e_w + b.e_k)) < 1e-12 * b.e_y);
    CHECK(std::fabs(b.avg_peak - (b.e_s + b.e_y - 1.0)) < 1e-12 * b.avg_peak);

    aoicr_breakdown asym;
    REQUIRE(aoicr_peak_aoi_asymptotic(h.c, AOICR_SCHEME_OVERLAY,
                                      AOICR_SYSTEM_PRIMARY,
                                      &asym) == AOICR_OK);
    double p = 0.0;
    aoicr_config_get(h.c, "p", &p);
    CHECK(asym.avg_peak == doctest::Approx(1.0 / p));

    CHECK(aoicr_peak_aoi(h.c, static_cast<aoicr_scheme>(9),
                         AOICR_SYSTEM_PRIMARY, &b) == AOICR_EINVAL);
    CHECK(aoicr_peak_aoi(nullptr, AOICR_SCHEME_OVERLAY, AOICR_SYSTEM_PRIMARY,
                         &b) == AOICR_EINVAL);

    double p_star = 0.0;
    REQUIRE(aoicr_critical_rate(h.c, &p_star) == AOICR_OK);
    CHECK(p_star > 0.0);
    CHECK(p_star < 1.0);
}

TEST_CASE("simulation results and event logs flow through the boundary") {
    Handle h;
    aoicr_sim_result pri, sec;
    const char* log_path = "capi_events.csv";
    REQUIRE(aoicr_simulate(h.c, AOICR_SCHEME_UNDERLAY, AOICR_MODE_ABSTRACT,
                           400000, UINT64_MAX, 7, log_path, &pri,
                           &sec) == AOICR_OK);
    CHECK(pri.deliveries > 1000);
    CHECK(pri.peak_stderr > 0.0);
    CHECK(sec.interference_fraction > 0.0);

    const std::string log = slurp(log_path);
    CHECK(log.rfind("system,g,d,W,K,S,Y,peak\n", 0) == 0);
    CHECK(log.find("primary,") != std::string::npos);
    CHECK(log.find("secondary,") != std::string::npos);
    std::remove(log_path);

    aoicr_sim_result a, b;
    CHECK(aoicr_simulate(h.c, AOICR_SCHEME_OVERLAY, AOICR_MODE_FADING, 1000,
                         5000, 1, nullptr, &a, &b) == AOICR_EINVAL);
}

TEST_CASE("sweep output is byte-stable and well-formed") {
    Handle h;
    aoicr_sweep_spec spec{};
    spec.param = "p";
    spec.min = 0.1;
    spec.max = 0.5;
    spec.steps = 3;
    spec.overlay = 1;
    spec.underlay = 1;
    spec.engine_analytic = 1;
    spec.engine_simulate = 1;
    spec.mode = AOICR_MODE_ABSTRACT;
    spec.slots = 200000;
    spec.warmup = UINT64_MAX;
    spec.seed = 5;

    REQUIRE(aoicr_run_sweep(h.c, &spec, "sweep_a.csv") == AOICR_OK);
    REQUIRE(aoicr_run_sweep(h.c, &spec, "sweep_b.csv") == AOICR_OK);
    const std::string a = slurp("sweep_a.csv");
    CHECK(a == slurp("sweep_b.csv"));
    CHECK(a.rfind("param,value,scheme,engine,system,e_w,e_k,e_y,e_s,"
                  "avg_peak,stderr,seed\n",
                  0) == 0);
    // 3 grid points x 2 schemes x 2 engines x 2 systems + header.
    std::size_t lines = 0;
    for (char ch : a)
        if (ch == '\n') ++lines;
    CHECK(lines == 25);
    std::remove("sweep_a.csv");
    std::remove("sweep_b.csv");

    spec.steps = 1;
    CHECK(aoicr_run_sweep(h.c, &spec, "sweep_c.csv") == AOICR_EINVAL);
    spec.steps = 3;
    spec.param = "nope";
    CHECK(aoicr_run_sweep(h.c, &spec, "sweep_c.csv") == AOICR_EINVAL);
}

TEST_CASE("status strings") {
    CHECK(std::string(aoicr_strerror(AOICR_OK)) == "ok");
    CHECK(std::string(aoicr_strerror(AOICR_EINVAL)).size() > 0);
    CHECK(std::string(aoicr_strerror(AOICR_ENUMERIC)).size() > 0);
    CHECK(std::string(aoicr_strerror(AOICR_EIO)).size() > 0);
}
