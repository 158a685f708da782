#ifndef AOICR_DETAIL_LINEAR2_HPP
#define AOICR_DETAIL_LINEAR2_HPP

#include <stdexcept>
#include <utility>

namespace aoicr::detail {

/// Solves the affine fixed point
///   x = c1 + a11 x + a12 y
///   y = c2 + a21 x + a22 y
/// by Cramer's rule on the 2x2 system.
inline std::pair<double, double> solve_fixed_point2(double c1, double a11,
                                                    double a12, double c2,
                                                    double a21, double a22) {
    const double m11 = 1.0 - a11;
    const double m12 = -a12;
    const double m21 = -a21;
    const double m22 = 1.0 - a22;
    const double det = m11 * m22 - m12 * m21;
    if (det == 0.0)
        throw std::runtime_error("solve_fixed_point2: singular system");
    const double x = (c1 * m22 - m12 * c2) / det;
    const double y = (m11 * c2 - c1 * m21) / det;
    return {x, y};
}

} // namespace aoicr::detail

#endif
