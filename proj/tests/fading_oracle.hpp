// Shared Monte Carlo oracle for the five outage formulas: draws raw
// channel gains with the standard-library RNG (independent of the
// library's generator) and counts decode failures directly from the
// SNR/SINR definitions.
#ifndef TESTS_FADING_ORACLE_HPP
#define TESTS_FADING_ORACLE_HPP

#include "aoicr/linkmodel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

struct OutageEstimate {
    double value;
    double se;
};

struct OutageOracle {
    OutageEstimate phi_op, phi_os, phi_us, phi_up_hat, phi_us_hat;
};

inline OutageOracle fading_outage_oracle(const aoicr::SystemConfig& cfg,
                                         std::uint64_t draws,
                                         std::uint64_t seed) {
    const aoicr::LinkGains g = aoicr::link_gains(cfg);
    const double pp = cfg.power_primary();
    const double ps = cfg.power_secondary();
    const double n0 = cfg.noise();
    const double ic = cfg.interference_cap();
    const double sp = cfg.sigma_primary();
    const double ss = cfg.sigma_secondary();

    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> unit(1.0);

    std::uint64_t f_op = 0, f_os = 0, f_us = 0, f_uph = 0, f_ush = 0;
    for (std::uint64_t i = 0; i < draws; ++i) {
        const double h_pp = g.omega_pp * unit(rng);
        const double h_ss = g.omega_ss * unit(rng);
        const double h_sp = g.omega_sp * unit(rng);
        const double h_ps = g.omega_ps * unit(rng);

        if (pp * h_pp / n0 < sp) ++f_op;
        if (ps * h_ss / n0 < ss) ++f_os;

        const double clipped = std::min(ic / h_sp, ps);
        if (clipped * h_ss / n0 < ss) ++f_us;
        if (pp * h_pp / (std::min(ic, ps * h_sp) + n0) < sp) ++f_uph;
        if (clipped * h_ss / (pp * h_ps + n0) < ss) ++f_ush;
    }

    const auto est = [draws](std::uint64_t fails) {
        const double phi = static_cast<double>(fails) / draws;
        // Floor at 1/n: with zero observed failures (or successes) the
        // plug-in binomial error is 0, but values within ~1/n of the
        // boundary are statistically indistinguishable from it.
        const double se = std::max(std::sqrt(phi * (1.0 - phi) / draws),
                                   1.0 / static_cast<double>(draws));
        return OutageEstimate{phi, se};
    };
    return {est(f_op), est(f_os), est(f_us), est(f_uph), est(f_ush)};
}

#endif
