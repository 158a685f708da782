#include "aoicr/expint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace aoicr {
namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Power series for E1(z) = -gamma - ln z + sum_{k>=1} (-1)^{k+1} z^k / (k k!),
// good for z <= 1.
double e1_series(double z) {
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k < 60; ++k) {
        term *= -z / k;
        const double add = -term / k;
        sum += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum))
            break;
    }
    return -kEulerGamma - std::log(z) + sum;
}

// Modified Lentz continued fraction for exp(z) * E1(z), good for z > 1.
double e1_scaled_cf(double z) {
    const double tiny = 1e-300;
    double b = z + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 200; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = a * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16)
            break;
    }
    return h; // equals exp(z) E1(z)
}

} // namespace

double expint_ei(double x) {
    if (!(x < 0.0))
        throw std::domain_error("expint_ei: argument must be negative");
    const double z = -x;
    if (z <= 1.0)
        return -e1_series(z);
    const double s = e1_scaled_cf(z);
    // E1(z) = exp(-z) * s; underflows to 0- for very large z, as it should.
    return -std::exp(-z) * s;
}

double expint_ei_scaled(double x) {
    if (!(x < 0.0))
        throw std::domain_error("expint_ei_scaled: argument must be negative");
    const double z = -x;
    if (z <= 1.0)
        return -std::exp(z) * e1_series(z);
    return -e1_scaled_cf(z);
}

} // namespace aoicr
