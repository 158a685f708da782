#ifndef AOICR_LINKMODEL_HPP
#define AOICR_LINKMODEL_HPP

#include "aoicr/config.hpp"

namespace aoicr {

/// Average channel power gains of the four links. The path-loss model
/// caps every gain at 1e-3 (30 dB attenuation at the 1 m reference).
struct LinkGains {
    double omega_pp;
    double omega_ss;
    double omega_sp;
    double omega_ps;
};

/// The six per-slot decode-failure probabilities. phi_up equals phi_op
/// by construction; the hatted values account for mutual interference.
struct OutageSet {
    double phi_op;
    double phi_os;
    double phi_up;
    double phi_us;
    double phi_up_hat;
    double phi_us_hat;
};

/// Average power gain at distance d: 1e-3 / (1 + d^omega).
double avg_gain(double d, double omega);

LinkGains link_gains(const SystemConfig& cfg);

/// Overlay outages: both systems transmit at peak power, no interference.
/// Returns {phi_op, phi_os}.
struct OverlayOutage {
    double phi_op;
    double phi_os;
};
OverlayOutage outage_overlay(const SystemConfig& cfg);

/// Underlay secondary outage without primary interference; the secondary
/// power is clipped to min{I_C / H_SP, P_S}.
double outage_underlay_secondary(const SystemConfig& cfg);

/// Underlay primary outage under secondary interference
/// I_P = min{I_C, P_S H_SP}.
double outage_underlay_primary_interf(const SystemConfig& cfg);

/// Underlay secondary outage under primary interference. Uses the scaled
/// exponential-integral product internally.
double outage_underlay_secondary_interf(const SystemConfig& cfg);

/// All six outages for one config.
OutageSet outage_set(const SystemConfig& cfg);

} // namespace aoicr

#endif
