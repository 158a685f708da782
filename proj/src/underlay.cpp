#include "aoicr/underlay.hpp"

#include "aoicr/config.hpp"
#include "aoicr/detail/linear2.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace aoicr {
namespace {

struct PhiSystem {
    double c1, a11, a12;
    double c2, a21, a22;
};

// The success-probability recursion conditioned on the other system
// being idle/busy in the transmission slot. An idle slot fails with the
// no-interference outage xi; a busy slot with xi_hat, and the other
// system stays busy next slot unless it decodes and does not regenerate.
PhiSystem phi_system(const UnderlayRoleParams& r) {
    const double stay_busy = r.zeta_hat + (1.0 - r.zeta_hat) * r.v;
    return {1.0 - r.xi,
            r.xi * (1.0 - r.u) * (1.0 - r.v),
            r.xi * (1.0 - r.u) * r.v,
            1.0 - r.xi_hat,
            r.xi_hat * (1.0 - r.zeta_hat) * (1.0 - r.u) * (1.0 - r.v),
            r.xi_hat * (1.0 - r.u) * stay_busy};
}

} // namespace

MarkovModel build_transition_matrix(double p, double q, const OutageSet& o) {
    const double pr = clamp_rate(p);
    const double qr = clamp_rate(q);
    check_outage(o.phi_up, "phi_up");
    check_outage(o.phi_us, "phi_us");
    check_outage(o.phi_up_hat, "phi_up_hat");
    check_outage(o.phi_us_hat, "phi_us_hat");

    const double a = (1.0 - o.phi_up_hat) * (1.0 - pr); // P leaves busy, both tx
    const double b = (1.0 - o.phi_us_hat) * (1.0 - qr); // S leaves busy, both tx
    const double p_stays = pr + o.phi_up - pr * o.phi_up; // P busy alone stays busy
    const double s_stays = qr + o.phi_us - qr * o.phi_us;

    MarkovModel model;
    model.m = {{
        {(1.0 - pr) * (1.0 - qr), pr * (1.0 - qr), (1.0 - pr) * qr, pr * qr},
        {(1.0 - o.phi_up) * (1.0 - pr) * (1.0 - qr), p_stays * (1.0 - qr),
         (1.0 - o.phi_up) * (1.0 - pr) * qr, p_stays * qr},
        {(1.0 - pr) * (1.0 - o.phi_us) * (1.0 - qr),
         pr * (1.0 - o.phi_us) * (1.0 - qr), (1.0 - pr) * s_stays, pr * s_stays},
        {a * b, (1.0 - a) * b, a * (1.0 - b), (1.0 - a) * (1.0 - b)},
    }};
    return model;
}

std::array<double, 4> stationary_distribution(
    const std::array<std::array<double, 4>, 4>& m) {
    // (M^T - I + B) pi = 1, B all-ones. Gaussian elimination with
    // partial pivoting on the 4x4 system.
    double a[4][5];
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j)
            a[i][j] = m[j][i] - (i == j ? 1.0 : 0.0) + 1.0;
        a[i][4] = 1.0;
    }
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < 1e-14)
            throw std::runtime_error(
                "stationary_distribution: singular system (matrix not "
                "irreducible row-stochastic?)");
        if (piv != col)
            for (int j = 0; j < 5; ++j) std::swap(a[piv][j], a[col][j]);
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (int j = col; j < 5; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::array<double, 4> pi;
    for (int i = 0; i < 4; ++i) pi[i] = a[i][4] / a[i][i];
    return pi;
}

UnderlayRoleParams underlay_role_params(System z, double p, double q,
                                        const OutageSet& o) {
    if (z == System::primary)
        return {clamp_rate(p), clamp_rate(q), o.phi_up, o.phi_up_hat,
                o.phi_us, o.phi_us_hat};
    return {clamp_rate(q), clamp_rate(p), o.phi_us, o.phi_us_hat,
            o.phi_up, o.phi_up_hat};
}

IntervalExpectations e_y_underlay(System z, double p, double q,
                                  const std::array<double, 4>& pi) {
    const double rate = clamp_rate(z == System::primary ? p : q);
    const double idle_mass =
        z == System::primary ? pi[0] + pi[2] : pi[0] + pi[1];
    const double e_w = (1.0 - rate) / rate;
    const double e_y = (1.0 - rate) / (rate * idle_mass);
    return {e_w, e_y - e_w, e_y};
}

UnderlayPhiConditionals underlay_phi_conditionals(const UnderlayRoleParams& r) {
    const PhiSystem s = phi_system(r);
    const auto [phi_i, phi_b] =
        detail::solve_fixed_point2(s.c1, s.a11, s.a12, s.c2, s.a21, s.a22);
    assert(std::fabs(phi_i - underlay_closed_form::phi_idle(r)) < 1e-8);
    assert(std::fabs(phi_b - underlay_closed_form::phi_busy(r)) < 1e-8);
    return {phi_i, phi_b};
}

double e_s_underlay(System z, const UnderlayRoleParams& r,
                    const std::array<double, 4>& pi) {
    const auto [phi_i, phi_b] = [&] {
        const auto c = underlay_phi_conditionals(r);
        return std::pair<double, double>{c.pr_phi_i, c.pr_phi_b};
    }();

    // Generation-slot idle/busy refers to the other system's activity:
    // for the primary the secondary is idle in s1 and s2, for the
    // secondary the primary is idle in s1 and s3.
    const double pr_idle = z == System::primary ? pi[0] + pi[1] : pi[0] + pi[2];
    const double pr_busy = 1.0 - pr_idle;

    const double wi = pr_idle * phi_i;
    const double wb = pr_busy * phi_b;
    const double pr_iss = wi / (wi + wb);
    const double pr_bss = wb / (wi + wb);

    const PhiSystem s = phi_system(r);
    const double ratio = phi_b / phi_i;
    const double a11 = s.a11;            // own retry, other stays idle
    const double a12 = s.a12 * ratio;    // other turns busy
    const double a21 = s.a21 / ratio;    // other turns idle
    const double a22 = s.a22;
    const auto [e_ss_i, e_ss_b] = detail::solve_fixed_point2(
        (1.0 - r.xi) / phi_i + a11 + a12, a11, a12,
        (1.0 - r.xi_hat) / phi_b + a21 + a22, a21, a22);

    assert(std::fabs(e_ss_i -
                     underlay_closed_form::e_s_idle(r, phi_i, phi_b)) <
           1e-8 * e_ss_i);
    assert(std::fabs(e_ss_b -
                     underlay_closed_form::e_s_busy(r, phi_i, phi_b)) <
           1e-8 * e_ss_b);

    return pr_iss * e_ss_i + pr_bss * e_ss_b;
}

PeakAoiBreakdown peak_aoi_underlay(System z, double p, double q,
                                   const OutageSet& outages) {
    const MarkovModel mm = build_transition_matrix(p, q, outages);
    const std::array<double, 4> pi = stationary_distribution(mm.m);
    const IntervalExpectations iv = e_y_underlay(z, p, q, pi);
    const UnderlayRoleParams r = underlay_role_params(z, p, q, outages);
    const double e_s = e_s_underlay(z, r, pi);
    return assemble_peak_aoi(e_s, iv.e_w, iv.e_k);
}

namespace underlay_closed_form {

double phi_idle(const UnderlayRoleParams& r) {
    const double stay = r.zeta_hat + r.v - r.v * r.zeta_hat;
    const double den =
        (1.0 - r.xi * (1.0 - r.u) * (1.0 - r.v)) *
            (1.0 - r.xi_hat * r.zeta_hat * (1.0 - r.u)) -
        r.xi_hat * (1.0 - r.zeta_hat) * (1.0 - r.u) * r.v;
    return ((1.0 - r.xi) * (1.0 - r.xi_hat * (1.0 - r.u) * stay) +
            r.xi * (1.0 - r.xi_hat) * (1.0 - r.u) * r.v) /
           den;
}

double phi_busy(const UnderlayRoleParams& r) {
    const double den =
        (1.0 - r.xi * (1.0 - r.u) * (1.0 - r.v)) *
            (1.0 - r.xi_hat * r.zeta_hat * (1.0 - r.u)) -
        r.xi_hat * (1.0 - r.zeta_hat) * (1.0 - r.u) * r.v;
    return ((1.0 - r.xi_hat) * (1.0 - r.xi * (1.0 - r.u) * (1.0 - r.v)) +
            (1.0 - r.xi) * r.xi_hat * (1.0 - r.zeta_hat) * (1.0 - r.u) *
                (1.0 - r.v)) /
           den;
}

namespace {
double es_denominator(const UnderlayRoleParams& r) {
    const double stay = r.zeta_hat + r.v - r.v * r.zeta_hat;
    return 1.0 - r.xi * (1.0 - r.u) * (1.0 - r.v) -
           r.xi_hat * (1.0 - r.u) *
               (stay - r.xi * r.zeta_hat * (1.0 - r.u) * (1.0 - r.v));
}
} // namespace

double e_s_idle(const UnderlayRoleParams& r, double phi_i, double phi_b) {
    const double stay = r.zeta_hat + r.v - r.v * r.zeta_hat;
    return (1.0 - r.xi_hat * (1.0 - r.u) * stay +
            r.xi * (1.0 - r.u) * r.v * phi_b / phi_i) /
           es_denominator(r);
}

double e_s_busy(const UnderlayRoleParams& r, double phi_i, double phi_b) {
    return (1.0 - r.xi * (1.0 - r.u) * (1.0 - r.v) +
            r.xi_hat * (1.0 - r.zeta_hat) * (1.0 - r.u) * (1.0 - r.v) *
                phi_i / phi_b) /
           es_denominator(r);
}

} // namespace underlay_closed_form

} // namespace aoicr
