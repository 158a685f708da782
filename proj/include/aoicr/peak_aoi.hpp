#ifndef AOICR_PEAK_AOI_HPP
#define AOICR_PEAK_AOI_HPP

#include <stdexcept>

namespace aoicr {

/// Average peak AoI of one system under one scheme, broken into the
/// waiting, busy, interdeparture and service expectations it is built
/// from. Invariants: e_y == e_w + e_k and avg_peak == e_s + e_y - 1.
struct PeakAoiBreakdown {
    double e_w = 0.0;
    double e_k = 1.0;
    double e_y = 1.0;
    double e_s = 1.0;
    double avg_peak = 1.0;
};

/// Assembles the peak-AoI identity avg_peak = E[S] + E[Y] - 1 with
/// E[Y] = E[W] + E[K].
inline PeakAoiBreakdown assemble_peak_aoi(double e_s, double e_w, double e_k) {
    if (!(e_s >= 1.0))
        throw std::domain_error("assemble_peak_aoi: E[S] must be >= 1");
    if (!(e_w >= 0.0))
        throw std::domain_error("assemble_peak_aoi: E[W] must be >= 0");
    if (!(e_k >= 1.0))
        throw std::domain_error("assemble_peak_aoi: E[K] must be >= 1");
    PeakAoiBreakdown b;
    b.e_s = e_s;
    b.e_w = e_w;
    b.e_k = e_k;
    b.e_y = e_w + e_k;
    b.avg_peak = e_s + b.e_y - 1.0;
    return b;
}

} // namespace aoicr

#endif
