#ifndef AOICR_EXPINT_HPP
#define AOICR_EXPINT_HPP

namespace aoicr {

/// Exponential integral Ei(x) for x < 0. Negative everywhere on the
/// domain, tends to 0- as x -> -inf. Throws std::domain_error for x >= 0.
double expint_ei(double x);

/// Scaled form exp(-x) * Ei(x) for x < 0. The outage closed form needs
/// the product exp(eta) * Ei(-eta), which underflows/overflows when
/// evaluated as two factors; this keeps it O(1/eta) for all eta > 0.
double expint_ei_scaled(double x);

} // namespace aoicr

#endif
