#ifndef AOICR_UNDERLAY_HPP
#define AOICR_UNDERLAY_HPP

#include "aoicr/linkmodel.hpp"
#include "aoicr/peak_aoi.hpp"

#include <array>

namespace aoicr {

enum class System { primary, secondary };

/// Joint busy/idle Markov chain of the underlay scheme. State order:
/// s1 = both idle, s2 = P busy / S idle, s3 = P idle / S busy,
/// s4 = both busy.
struct MarkovModel {
    std::array<std::array<double, 4>, 4> m{};
    std::array<double, 4> pi{};
};

/// Transition matrix of the joint chain (pi left unset).
MarkovModel build_transition_matrix(double p, double q, const OutageSet& outages);

/// Stationary distribution of an irreducible row-stochastic 4x4 matrix,
/// solved directly from (M^T - I + B) pi = 1.
std::array<double, 4> stationary_distribution(
    const std::array<std::array<double, 4>, 4>& m);

/// Role-symmetric parameters of one system: own rate u, the other
/// system's rate v, own outages with/without interference, and the other
/// system's with-interference outage. zeta (the other system's
/// no-interference outage) is carried for completeness; the conditional
/// systems do not use it.
struct UnderlayRoleParams {
    double u;
    double v;
    double xi;
    double xi_hat;
    double zeta;
    double zeta_hat;
};

UnderlayRoleParams underlay_role_params(System z, double p, double q,
                                        const OutageSet& outages);

struct IntervalExpectations {
    double e_w;
    double e_k;
    double e_y;
};

IntervalExpectations e_y_underlay(System z, double p, double q,
                                  const std::array<double, 4>& pi);

struct UnderlayPhiConditionals {
    double pr_phi_i;
    double pr_phi_b;
};

UnderlayPhiConditionals underlay_phi_conditionals(const UnderlayRoleParams& params);

double e_s_underlay(System z, const UnderlayRoleParams& params,
                    const std::array<double, 4>& pi);

PeakAoiBreakdown peak_aoi_underlay(System z, double p, double q,
                                   const OutageSet& outages);

/// Published solved forms for the two conditional 2x2 systems; the
/// canonical path solves the systems directly.
namespace underlay_closed_form {
double phi_idle(const UnderlayRoleParams& r);
double phi_busy(const UnderlayRoleParams& r);
double e_s_idle(const UnderlayRoleParams& r, double phi_i, double phi_b);
double e_s_busy(const UnderlayRoleParams& r, double phi_i, double phi_b);
} // namespace underlay_closed_form

} // namespace aoicr

#endif
