#include "aoicr/asymptotics.hpp"

#include "aoicr/config.hpp"

#include <algorithm>
#include <stdexcept>

namespace aoicr {

double asym_peak_primary(double p) { return 1.0 / clamp_rate(p); }

double asym_peak_secondary_overlay(double p, double q, double phi_os) {
    const double pr = clamp_rate(p);
    const double qr = clamp_rate(q);
    check_outage(phi_os, "phi_os");
    const double c = (1.0 - phi_os) * (1.0 - pr);
    return (1.0 - 2.0 * qr) / qr + 1.0 / c + 1.0 / (qr + (1.0 - qr) * c);
}

double asym_peak_secondary_underlay(double p, double q, double phi_us,
                                    double phi_us_hat) {
    const double pr = clamp_rate(p);
    const double qr = clamp_rate(q);
    check_outage(phi_us, "phi_us");
    check_outage(phi_us_hat, "phi_us_hat");
    const double c = (1.0 - pr) * (1.0 - phi_us) + pr * (1.0 - phi_us_hat);
    return (1.0 - 2.0 * qr) / qr + 1.0 / c + 1.0 / (qr + (1.0 - qr) * c);
}

double critical_rate(double phi_os, double phi_us, double phi_us_hat) {
    check_outage(phi_os, "phi_os");
    check_outage(phi_us, "phi_us");
    check_outage(phi_us_hat, "phi_us_hat");
    if (phi_os > phi_us)
        throw std::domain_error(
            "critical_rate: requires phi_os <= phi_us (power-limited underlay)");
    const double p =
        (phi_us - phi_os) / (1.0 - phi_us_hat + phi_us - phi_os);
    return std::clamp(p, 0.0, 1.0);
}

SchemeChoice recommend_scheme(double p, double p_star) {
    if (p < p_star) return SchemeChoice::overlay;
    if (p > p_star) return SchemeChoice::underlay;
    return SchemeChoice::tie;
}

SchemeComparison compare_schemes(double p, double q, double phi_os,
                                 double phi_us, double phi_us_hat) {
    SchemeComparison c;
    c.p_star = critical_rate(phi_os, phi_us, phi_us_hat);
    c.recommended = recommend_scheme(p, c.p_star);
    c.aoi_overlay = asym_peak_secondary_overlay(p, q, phi_os);
    c.aoi_underlay = asym_peak_secondary_underlay(p, q, phi_us, phi_us_hat);
    return c;
}

} // namespace aoicr
