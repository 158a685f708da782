#ifndef AOICR_CONFIG_HPP
#define AOICR_CONFIG_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace aoicr {

/// Converts a power in dBm to linear milliwatts.
inline double dbm_to_linear(double x_dbm) {
    if (!std::isfinite(x_dbm))
        throw std::domain_error("dbm_to_linear: argument must be finite");
    return std::pow(10.0, x_dbm / 10.0);
}

/// All physical and protocol parameters of the two-system network.
/// Powers are configured in dBm; everything downstream works in linear
/// milliwatts. The interference cap is configured as a multiple of the
/// noise power.
struct SystemConfig {
    double p_p_dbm = 25.0;   // primary peak transmit power
    double p_s_dbm = 25.0;   // secondary peak transmit power
    double n0_dbm = -80.0;   // receiver noise power
    double ic_over_n0 = 5.0; // interference cap as a multiple of N0
    double r_p = 1.0;        // primary rate, bits/slot/Hz
    double r_s = 1.0;        // secondary rate, bits/slot/Hz
    double d_pp = 100.0;     // link distances, meters
    double d_ss = 100.0;
    double d_sp = 80.0;
    double d_ps = 150.0;
    double omega = 3.0;      // path-loss exponent
    double p = 0.1;          // primary per-slot generation probability
    double q = 0.1;          // secondary per-slot generation probability

    // Linear-domain accessors.
    double power_primary() const { return dbm_to_linear(p_p_dbm); }
    double power_secondary() const { return dbm_to_linear(p_s_dbm); }
    double noise() const { return dbm_to_linear(n0_dbm); }
    double interference_cap() const { return ic_over_n0 * noise(); }
    double sigma_primary() const { return std::exp2(r_p) - 1.0; }
    double sigma_secondary() const { return std::exp2(r_s) - 1.0; }

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

/// Generation rates are continuous on the open unit interval; callers may
/// pass limiting values, which are clamped here instead of being handled
/// by special-case algebra.
inline double clamp_rate(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("generation rate must lie in (0, 1)");
    constexpr double lo = 1e-9;
    return r < lo ? lo : (r > 1.0 - lo ? 1.0 - lo : r);
}

inline void check_outage(double phi, const char* name) {
    if (!(phi >= 0.0 && phi < 1.0))
        throw std::domain_error(std::string(name) + " must lie in [0, 1)");
}

} // namespace aoicr

#endif
