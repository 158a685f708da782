#include "aoicr/linkmodel.hpp"

#include "aoicr/expint.hpp"

#include <cmath>
#include <stdexcept>

namespace aoicr {

double avg_gain(double d, double omega) {
    if (!(d > 0.0))
        throw std::domain_error("avg_gain: distance must be positive");
    return 1e-3 / (1.0 + std::pow(d, omega));
}

LinkGains link_gains(const SystemConfig& cfg) {
    return {avg_gain(cfg.d_pp, cfg.omega), avg_gain(cfg.d_ss, cfg.omega),
            avg_gain(cfg.d_sp, cfg.omega), avg_gain(cfg.d_ps, cfg.omega)};
}

OverlayOutage outage_overlay(const SystemConfig& cfg) {
    const LinkGains g = link_gains(cfg);
    const double n0 = cfg.noise();
    const double phi_op =
        -std::expm1(-n0 * cfg.sigma_primary() / (cfg.power_primary() * g.omega_pp));
    const double phi_os =
        -std::expm1(-n0 * cfg.sigma_secondary() / (cfg.power_secondary() * g.omega_ss));
    return {phi_op, phi_os};
}

double outage_underlay_secondary(const SystemConfig& cfg) {
    const LinkGains g = link_gains(cfg);
    const double n0 = cfg.noise();
    const double ic = cfg.interference_cap();
    const double ps = cfg.power_secondary();
    const double sigma_s = cfg.sigma_secondary();
    const double a = ic / ps; // power-clip threshold on H_SP
    const double ratio = g.omega_ss * ic / (g.omega_sp * sigma_s * n0);
    const double bracket = 1.0 - std::exp(-a / g.omega_sp) / (ratio + 1.0);
    return 1.0 - bracket * std::exp(-sigma_s * n0 / (ps * g.omega_ss));
}

double outage_underlay_primary_interf(const SystemConfig& cfg) {
    const LinkGains g = link_gains(cfg);
    const double n0 = cfg.noise();
    const double ic = cfg.interference_cap();
    const double pp = cfg.power_primary();
    const double ps = cfg.power_secondary();
    const double sigma_p = cfg.sigma_primary();
    // Marginalizing I_P = min{I_C, P_S H_SP} over the exponential H_SP
    // gives a mixture of the interference-saturated and clipped regimes.
    const double e_sat = std::exp(-ic / (ps * g.omega_sp)
                                  - (ic + n0) * sigma_p / (pp * g.omega_pp));
    const double e_free = std::exp(-n0 * sigma_p / (pp * g.omega_pp));
    const double k = pp * g.omega_pp / (pp * g.omega_pp + sigma_p * ps * g.omega_sp);
    return 1.0 - (1.0 - k) * e_sat - k * e_free;
}

double outage_underlay_secondary_interf(const SystemConfig& cfg) {
    const LinkGains g = link_gains(cfg);
    const double n0 = cfg.noise();
    const double ic = cfg.interference_cap();
    const double pp = cfg.power_primary();
    const double ps = cfg.power_secondary();
    const double sigma_s = cfg.sigma_secondary();

    const double a = ic / ps;
    const double s = sigma_s * n0 / (ps * g.omega_ss);

    // Full-power regime (H_SP <= I_C / P_S): Rayleigh SINR success.
    const double succ_full =
        std::exp(-s) / (1.0 + sigma_s * pp * g.omega_ps / (ps * g.omega_ss));

    // Clipped regime: the H_SP integral reduces to exp(eta) E1(eta),
    // evaluated in scaled form so strong-interference configs do not
    // overflow.
    const double b = sigma_s * pp * g.omega_ps / (ic * g.omega_ss);
    const double c = 1.0 / g.omega_sp + sigma_s * n0 / (ic * g.omega_ss);
    const double eta = c * (a + 1.0 / b);
    const double scaled = -expint_ei_scaled(-eta); // exp(eta) E1(eta)
    const double succ_clip = std::exp(-c * a) * scaled / (g.omega_sp * b);

    const double phi =
        1.0 - (1.0 - std::exp(-a / g.omega_sp)) * succ_full - succ_clip;
    if (!std::isfinite(phi))
        throw std::runtime_error("outage_underlay_secondary_interf: evaluation not finite");
    return phi;
}

OutageSet outage_set(const SystemConfig& cfg) {
    cfg.validate();
    const OverlayOutage o = outage_overlay(cfg);
    OutageSet set;
    set.phi_op = o.phi_op;
    set.phi_os = o.phi_os;
    set.phi_up = o.phi_op; // no interference when only one system transmits
    set.phi_us = outage_underlay_secondary(cfg);
    set.phi_up_hat = outage_underlay_primary_interf(cfg);
    set.phi_us_hat = outage_underlay_secondary_interf(cfg);
    return set;
}

void SystemConfig::validate() const {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("config: p must lie in (0, 1)");
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("config: q must lie in (0, 1)");
    if (!(d_pp > 0.0 && d_ss > 0.0 && d_sp > 0.0 && d_ps > 0.0))
        throw std::invalid_argument("config: all distances must be positive");
    if (!(omega >= 2.0 && omega <= 5.0))
        throw std::invalid_argument("config: omega must lie in [2, 5]");
    if (!(r_p > 0.0 && r_s > 0.0))
        throw std::invalid_argument("config: rates must be positive");
    if (!(ic_over_n0 > 0.0))
        throw std::invalid_argument("config: ic_over_n0 must be positive");
    if (!std::isfinite(p_p_dbm) || !std::isfinite(p_s_dbm) || !std::isfinite(n0_dbm))
        throw std::invalid_argument("config: powers must be finite");
}

} // namespace aoicr
