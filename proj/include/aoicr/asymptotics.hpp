#ifndef AOICR_ASYMPTOTICS_HPP
#define AOICR_ASYMPTOTICS_HPP

namespace aoicr {

enum class SchemeChoice { overlay, underlay, tie };

/// Average peak AoI of the primary at high SNR: 1/p under both schemes.
double asym_peak_primary(double p);

/// High-SNR secondary peak AoI under overlay access.
double asym_peak_secondary_overlay(double p, double q, double phi_os);

/// High-SNR secondary peak AoI under underlay access; the per-round
/// success probability blends the interference-free and interfered
/// outages by the primary's generation rate.
double asym_peak_secondary_underlay(double p, double q, double phi_us,
                                    double phi_us_hat);

/// Primary generation rate at which the two asymptotic secondary AoI
/// curves cross. Clamped to [0, 1]; requires phi_os <= phi_us.
double critical_rate(double phi_os, double phi_us, double phi_us_hat);

SchemeChoice recommend_scheme(double p, double p_star);

struct SchemeComparison {
    double p_star;
    SchemeChoice recommended;
    double aoi_overlay;
    double aoi_underlay;
};

SchemeComparison compare_schemes(double p, double q, double phi_os,
                                 double phi_us, double phi_us_hat);

} // namespace aoicr

#endif
