#pragma once

// Closed-form and step-integrated models of the ramp discharge, the
// threshold comparator, and the low-dropout regulator.

#include "dpc/core.hpp"

namespace dpc {

struct VoltageLut; // control.hpp

/// Linear discharge ramp: starts at v_start at time t_start and falls
/// with constant |dV/dt| = slope.
struct RampState {
    double v_start = 0; // [V], regulator-provided start voltage
    double slope = 0;   // [V/s], stored as magnitude of the falling slope
    double t_start = 0; // [s], discharge-enable instant
};

/// First-order comparator timing model. The propagation delay is
/// t_fixed + k_slope / input_slope, so a constant input slope makes the
/// delay code-independent while a varying slope does not.
struct ComparatorModel {
    double t_fixed = 20e-12; // slope-independent delay [s]
    double k_slope = 9.6e-3; // slope-dependence coefficient [V]
    double offset_v = 0.0;   // input-referred offset added to the threshold [V]
};

/// Behavioral second-order regulator. The voltage ladder spans
/// [v_min, v_max]; (zeta, omega_n) shape the step response; the output
/// carries a single-tone ripple. With `ideal` set, sampled outputs equal
/// the target exactly (no static error, no ripple, instant settling) —
/// the transient model stays available either way.
struct LdoParams {
    double v_min = 0.7;          // [V]
    double v_max = 1.0;          // [V]
    double dc_gain_db = 50.0;
    double zeta = 0.6;           // damping ratio
    double omega_n = 0.96e9;     // natural frequency [rad/s]
    double ripple_amp = 2e-3;    // ripple amplitude [V] (peak)
    double ripple_freq = 0.5e9;  // [Hz]
    double i_quiescent = 50e-6;  // [A]
    double settle_tolerance_frac = 0.01; // settling band, fraction of the step
    bool ideal = true;

    /// Open-loop gain as a plain ratio.
    double dc_gain() const;
    /// Static regulation error fraction 1/(1+A); sampled output is
    /// v_target * (1 - static_error_frac()) when not ideal.
    double static_error_frac() const;
};

/// Exact threshold-crossing instant of the linear discharge:
/// t_start + (v_start - v_th_eff) / slope.
/// Throws SimulationError if the ramp starts at or below the threshold.
double ramp_cross_analytic(const RampState& ramp, double v_th_eff);

/// Forward-Euler verification oracle for ramp_cross_analytic: steps
/// v <- v - slope*dt from v_start and returns the first crossing of
/// v_th_eff, linearly interpolated inside the final step. Independent of
/// the analytic path by construction. `max_time` bounds the search
/// horizon (default ten nominal clock periods past t_start).
double ramp_integrate_oracle(const RampState& ramp, double v_th_eff, double dt,
                             double max_time = 20e-9);

/// Comparator propagation delay t_fixed + k_slope / input_slope.
double comparator_delay(const ComparatorModel& model, double input_slope);

/// Ladder voltage for a (sextant, step) pair, looked up from the
/// calibration LUT and checked against [v_min, v_max].
double ldo_target(const LdoParams& ldo, int sextant, int step,
                  const VoltageLut& lut);

/// Second-order step response from v_from to v_to, with superposed
/// ripple, evaluated at time t after the target change.
double ldo_transient(const LdoParams& ldo, double v_from, double v_to, double t);

/// Last instant the ripple-free step response leaves the
/// +-settle_tolerance_frac band around v_to (0 if it never leaves).
/// Found by dense scan at `dt` resolution over [0, horizon].
double ldo_settle_time(const LdoParams& ldo, double v_from, double v_to,
                       double dt = 1e-12, double horizon = 40e-9);

/// Steady-state output ripple, peak to peak.
double ldo_ripple_peak_to_peak(const LdoParams& ldo);

/// Sampled regulator output for the half-cell: target voltage with the
/// static gain error and ripple applied (or the exact target when the
/// regulator is ideal).
struct VoltageSource {
    double v_target = 0;
    double static_error_frac = 0; // fraction of target lost to finite gain
    double ripple_amp = 0;        // [V]
    double ripple_freq = 0;       // [Hz]

    double at(double t) const;
};

VoltageSource make_voltage_source(const LdoParams& ldo, double v_target);

} // namespace dpc
