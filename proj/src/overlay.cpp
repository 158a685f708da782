#include "aoicr/overlay.hpp"

#include "aoicr/config.hpp"
#include "aoicr/detail/linear2.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace aoicr {
namespace {

// E[K_S | idle first slot], E[K_S | busy first slot] via the recursive
// conditional system. "Idle"/"busy" refers to the primary.
std::pair<double, double> ks_conditional_system(double p, double phi_op,
                                                double phi_os) {
    return detail::solve_fixed_point2(
        /*c1=*/1.0, /*a11=*/phi_os * (1.0 - p), /*a12=*/phi_os * p,
        /*c2=*/1.0, /*a21=*/(1.0 - phi_op) * (1.0 - p),
        /*a22=*/phi_op + (1.0 - phi_op) * p);
}

// Pr{Phi | idle}, Pr{Phi | busy}: the generated update survives secondary
// preemption and is eventually decoded.
std::pair<double, double> phi_conditional_system(double p, double q,
                                                 double phi_op, double phi_os) {
    return detail::solve_fixed_point2(
        /*c1=*/1.0 - phi_os,
        /*a11=*/phi_os * (1.0 - p) * (1.0 - q),
        /*a12=*/phi_os * p * (1.0 - q),
        /*c2=*/0.0,
        /*a21=*/(1.0 - phi_op) * (1.0 - p) * (1.0 - q),
        /*a22=*/(phi_op + (1.0 - phi_op) * p) * (1.0 - q));
}

// E[S_S | idle start], E[S_S | busy start], success-conditioned.
std::pair<double, double> ss_conditional_system(double p, double q,
                                                double phi_op, double phi_os,
                                                double phi_i, double phi_b) {
    const double r = phi_b / phi_i;
    const double a11 = phi_os * (1.0 - p) * (1.0 - q);
    const double a12 = phi_os * p * (1.0 - q) * r;
    const double a21 = (1.0 - phi_op) * (1.0 - p) * (1.0 - q) / r;
    const double a22 = (phi_op + p - p * phi_op) * (1.0 - q);
    return detail::solve_fixed_point2((1.0 - phi_os) / phi_i + a11 + a12, a11,
                                      a12, a21 + a22, a21, a22);
}

} // namespace

double pmf_geometric_wait(double rate, long k) {
    if (k < 0)
        throw std::domain_error("pmf_geometric_wait: k must be >= 0");
    const double p = clamp_rate(rate);
    return std::pow(1.0 - p, static_cast<double>(k)) * p;
}

double pmf_service_primary(double p, double phi, long k) {
    if (k < 1)
        throw std::domain_error("pmf_service_primary: k must be >= 1");
    const double pr = clamp_rate(p);
    check_outage(phi, "phi");
    return std::pow(phi * (1.0 - pr), static_cast<double>(k - 1)) *
           (1.0 - phi + pr * phi);
}

PeakAoiBreakdown peak_aoi_overlay_primary(double p, double phi_op) {
    const double pr = clamp_rate(p);
    check_outage(phi_op, "phi_op");
    const double e_w = (1.0 - pr) / pr;
    const double e_k = 1.0 / (1.0 - phi_op);
    const double e_s = 1.0 / (1.0 - phi_op + pr * phi_op);
    return assemble_peak_aoi(e_s, e_w, e_k);
}

OverlayKsProbabilities overlay_ks_probabilities(double p, double q,
                                                double phi_op) {
    const double pr = clamp_rate(p);
    const double qr = clamp_rate(q);
    check_outage(phi_op, "phi_op");
    const double idle_w = (1.0 - pr) * (1.0 - phi_op + phi_op * qr);
    const double pr_iks = idle_w / (idle_w + pr);
    return {pr_iks, 1.0 - pr_iks};
}

KsExpectations overlay_ks_expectations(double p, double q, double phi_op,
                                       double phi_os) {
    const double pr = clamp_rate(p);
    const double qr = clamp_rate(q);
    check_outage(phi_op, "phi_op");
    check_outage(phi_os, "phi_os");
    const auto [idle, busy] = ks_conditional_system(pr, phi_op, phi_os);
    const OverlayKsProbabilities w = overlay_ks_probabilities(pr, qr, phi_op);
    return {idle, busy, w.pr_iks * idle + w.pr_bks * busy};
}

double e_y_secondary_overlay(double p, double q, double phi_op, double phi_os) {
    const double pr = clamp_rate(p);
    const double qr = clamp_rate(q);
    const double e_y = overlay_closed_form::e_y_secondary(pr, qr, phi_op, phi_os);
    assert(std::fabs(e_y - ((1.0 - qr) / qr +
                            overlay_ks_expectations(pr, qr, phi_op, phi_os).mean)) <
           1e-8 * e_y);
    return e_y;
}

OverlayConditionals overlay_phi_conditionals(double p, double q, double phi_op,
                                             double phi_os) {
    const double pr = clamp_rate(p);
    const double qr = clamp_rate(q);
    check_outage(phi_op, "phi_op");
    check_outage(phi_os, "phi_os");

    OverlayConditionals c{};
    const OverlayKsProbabilities w = overlay_ks_probabilities(pr, qr, phi_op);
    c.pr_iks = w.pr_iks;
    c.pr_bks = w.pr_bks;
    const auto [ks_i, ks_b] = ks_conditional_system(pr, phi_op, phi_os);
    c.e_ks_idle = ks_i;
    c.e_ks_busy = ks_b;

    // Long-run time fractions of the primary's idle/busy cycle.
    c.pr_bs = pr / (1.0 - phi_op + pr * phi_op);
    c.pr_is = 1.0 - c.pr_bs;

    const auto [phi_i, phi_b] = phi_conditional_system(pr, qr, phi_op, phi_os);
    c.pr_phi_i = phi_i;
    c.pr_phi_b = phi_b;

    const double wi = c.pr_is * phi_i;
    const double wb = c.pr_bs * phi_b;
    c.pr_iss = wi / (wi + wb);
    c.pr_bss = wb / (wi + wb);

    const auto [ss_i, ss_b] =
        ss_conditional_system(pr, qr, phi_op, phi_os, phi_i, phi_b);
    c.e_ss_idle = ss_i;
    c.e_ss_busy = ss_b;
    return c;
}

double e_s_secondary_overlay(double p, double q, double phi_op, double phi_os) {
    const OverlayConditionals c = overlay_phi_conditionals(p, q, phi_op, phi_os);
    const double e_s = c.pr_iss * c.e_ss_idle + c.pr_bss * c.e_ss_busy;
    assert(std::fabs(e_s - overlay_closed_form::e_s_secondary(
                               clamp_rate(p), clamp_rate(q), phi_op, phi_os)) <
           1e-8 * e_s);
    return e_s;
}

PeakAoiBreakdown peak_aoi_overlay_secondary(double p, double q, double phi_op,
                                            double phi_os) {
    const double pr = clamp_rate(p);
    const double qr = clamp_rate(q);
    const double e_w = (1.0 - qr) / qr;
    const double e_k = overlay_ks_expectations(pr, qr, phi_op, phi_os).mean;
    const double e_s = e_s_secondary_overlay(pr, qr, phi_op, phi_os);
    return assemble_peak_aoi(e_s, e_w, e_k);
}

namespace overlay_closed_form {

double e_y_secondary(double p, double q, double phi_op, double phi_os) {
    const double denom = (1.0 - phi_op) * (1.0 - phi_os) * (1.0 - p) *
                         ((1.0 - p) * (1.0 - phi_op + phi_op * q) + p);
    return (1.0 - q) / q + 1.0 / (1.0 - phi_os) +
           (p - phi_op * phi_os * p * (1.0 - p) * (1.0 - q)) / denom;
}

double phi_idle(double p, double q, double phi_op, double phi_os) {
    const double denom = q / ((1.0 - phi_os) * (1.0 - p) * (1.0 - q)) +
                         1.0 - phi_op - q * phi_op * phi_os / (1.0 - phi_os);
    return (q / ((1.0 - p) * (1.0 - q)) + 1.0 - phi_op) / denom;
}

double phi_busy(double p, double q, double phi_op, double phi_os) {
    const double denom = q / ((1.0 - phi_os) * (1.0 - p) * (1.0 - q)) +
                         1.0 - phi_op - q * phi_op * phi_os / (1.0 - phi_os);
    return (1.0 - phi_op) / denom;
}

double e_s_secondary(double p, double q, double phi_op, double phi_os) {
    const double num =
        q / (1.0 - q) + (1.0 - phi_op) * (1.0 - p) +
        p * (1.0 - phi_op * phi_os * (1.0 - p) * (1.0 - q)) /
            (1.0 - phi_op * (1.0 - p) * (1.0 - q));
    const double den =
        q / (1.0 - q) +
        (1.0 - p) * (1.0 - phi_op - phi_os * (1.0 - phi_op + phi_op * q));
    return num / den;
}

} // namespace overlay_closed_form

} // namespace aoicr
