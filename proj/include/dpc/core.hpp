#pragma once

// Shared domain types and the ideal code-to-phase arithmetic.
//
// Unit conventions, used everywhere unless a name says otherwise:
// seconds, volts, amperes, farads, hertz. Phases are in degrees.

#include <array>
#include <cstdint>

#include "dpc/errors.hpp"

namespace dpc {

/// Full-rate clock description. The interpolator is driven by six input
/// phases spaced 60 degrees apart, all at the same frequency.
struct ClockSpec {
    double frequency = 0.5e9; // [Hz]

    static constexpr int kInputPhases = 6;
    static constexpr double kPhaseSpacingDeg = 60.0;

    double period() const { return 1.0 / frequency; }
};

/// 5-bit phase-select code. Range-checked at construction.
class PhaseCode {
public:
    static constexpr int kLevels = 32;

    explicit PhaseCode(int code) : code_(code) {
        if (code < 0 || code >= kLevels)
            throw ConfigError("phase code " + std::to_string(code) +
                              " outside [0, " + std::to_string(kLevels - 1) + "]");
    }

    int value() const { return code_; }

    bool operator==(const PhaseCode&) const = default;

private:
    int code_;
};

/// Phase resolution of the 5-bit code: 360 / 32 degrees.
inline constexpr double kStepDeg = 360.0 / PhaseCode::kLevels; // 11.25

/// Steps per sextant. Sextants 0 and 3 carry six fine steps, the others
/// five; the two halves of the phase circle mirror each other.
inline constexpr std::array<int, 6> kSextantSteps = {6, 5, 5, 6, 5, 5};

/// First code belonging to each sextant.
inline constexpr std::array<int, 6> kSextantBaseCode = {0, 6, 11, 16, 22, 27};

/// Decomposition of a code into coarse sextant selection and fine step.
/// All indices are 0-based.
struct SextantStep {
    int sextant = 0;             // [0, 5]
    int step = 0;                // [0, steps(sextant)-1]
    double fine_offset_deg = 0;  // phase offset inside the sextant, [0, 60)
};

/// Splits a code into (sextant, step, fine offset). The sextant index is
/// floor(code * 11.25 / 60) = floor(3 * code / 16), computed in exact
/// integer arithmetic.
SextantStep decode_code(PhaseCode code);

/// Inverse of decode_code: first code of the sextant plus the step.
PhaseCode encode_code(int sextant, int step);

/// Ideal code-to-phase transfer: phase in degrees and the equivalent
/// delay in seconds at the given clock.
struct PhaseTime {
    double degrees = 0;
    double seconds = 0;
};

PhaseTime code_phase_ideal(PhaseCode code, const ClockSpec& clock);

/// Physical constants of a PI half-cell plus linear temperature
/// coefficients. Defaults are calibrated so that the 0.3 V regulator
/// range exactly covers the largest fine offset (312.5 ps at 0.5 GHz)
/// with a 0.96 V/ns discharge slope.
struct DeviceParams {
    double c_out = 100e-15;          // output capacitance [F]
    double i_disch = 96e-6;          // discharge current [A]
    double v_th = 0.39;              // crossing-detection threshold [V]
    double v_dd = 1.2;               // supply [V]
    double current_spread_frac = 0.05; // max discharge-current spread across steps
    double temp_c = 27.0;            // [degC]
    double alpha_vth = -1e-3;        // threshold drift [V/degC]
    double alpha_ic = 2e-3;          // current drift [1/degC], relative
    double power_kappa = 4.03;       // activity factor of the power estimate

    /// Discharge slope magnitude i_disch / c_out [V/s].
    double slope() const { return i_disch / c_out; }

    /// Copy with v_th and i_disch shifted linearly to temperature t_c,
    /// relative to the 27 degC reference.
    DeviceParams at_temperature(double t_c) const;
};

/// Mismatch and jitter magnitudes for Monte Carlo runs. The seed fully
/// determines every random draw.
struct NoiseParams {
    std::uint64_t seed = 1;
    double sigma_vth = 5e-3;          // per-cell threshold mismatch [V]
    double sigma_ic_frac = 0.01;      // per-cell relative current mismatch
    double sigma_co_frac = 0.01;      // per-cell relative capacitance mismatch
    double sigma_comp_offset = 0.5e-12; // per-cell comparator delay offset [s]
    double jitter_sigma = 0.0;        // per-edge Gaussian jitter [s]
};

inline constexpr double kReferenceTempC = 27.0;
inline constexpr double kMinTempC = -40.0;
inline constexpr double kMaxTempC = 125.0;

} // namespace dpc
