#ifndef AOICR_OVERLAY_HPP
#define AOICR_OVERLAY_HPP

#include "aoicr/peak_aoi.hpp"

namespace aoicr {

/// PMF of the geometric waiting time, support k >= 0 (a delivery can be
/// followed immediately by a fresh generation).
double pmf_geometric_wait(double rate, long k);

/// PMF of the primary service time under preemption + ARQ, support k >= 1.
double pmf_service_primary(double p, double phi, long k);

/// Average peak AoI of the primary system under overlay access.
PeakAoiBreakdown peak_aoi_overlay_primary(double p, double phi_op);

/// Conditional quantities describing the secondary system's busy interval
/// and service time under overlay access, where "idle"/"busy" refers to
/// the primary system's activity.
struct OverlayConditionals {
    double pr_iks, pr_bks;       // first slot of K_S idle / busy
    double e_ks_idle, e_ks_busy; // E[K_S | .]
    double pr_is, pr_bs;         // generation slot idle / busy
    double pr_phi_i, pr_phi_b;   // update survives preemption and decodes
    double pr_iss, pr_bss;       // delivered update began idle / busy
    double e_ss_idle, e_ss_busy; // E[S_S | .]
};

struct KsExpectations {
    double idle;
    double busy;
    double mean;
};

struct OverlayKsProbabilities {
    double pr_iks;
    double pr_bks;
};

OverlayKsProbabilities overlay_ks_probabilities(double p, double q, double phi_op);

KsExpectations overlay_ks_expectations(double p, double q, double phi_op,
                                       double phi_os);

double e_y_secondary_overlay(double p, double q, double phi_op, double phi_os);

OverlayConditionals overlay_phi_conditionals(double p, double q, double phi_op,
                                             double phi_os);

double e_s_secondary_overlay(double p, double q, double phi_op, double phi_os);

PeakAoiBreakdown peak_aoi_overlay_secondary(double p, double q, double phi_op,
                                            double phi_os);

/// Published closed forms of the quantities the canonical path obtains by
/// solving the 2x2 conditional systems. Long transcriptions; kept as a
/// cross-check against the linear-system route.
namespace overlay_closed_form {
double e_y_secondary(double p, double q, double phi_op, double phi_os);
double phi_idle(double p, double q, double phi_op, double phi_os);
double phi_busy(double p, double q, double phi_op, double phi_os);
double e_s_secondary(double p, double q, double phi_op, double phi_os);
} // namespace overlay_closed_form

} // namespace aoicr

#endif
