#pragma once

// Digital control plane: the per-(sextant, step) start-voltage ladder,
// code-to-mux decoding, and the variable-slope comparison configuration.

#include <array>
#include <string>
#include <vector>

#include "dpc/analog.hpp"
#include "dpc/core.hpp"

namespace dpc {

/// Calibrated start-voltage ladder. Sixteen independent entries for
/// sextants 0-2, mirrored value-for-value onto 3-5.
struct VoltageLut {
    std::array<std::vector<double>, 6> entries; // [sextant][step] volts
    bool mirrored = true;

    double at(int sextant, int step) const;
};

/// Resolved selection for one code: fine mux (feedback resistor / step),
/// coarse mux (sextant), and the ladder voltage behind them.
struct ControlWord {
    int mux1_sel = 0;      // fine: step index
    int mux2_sel = 0;      // coarse: sextant index
    double ldo_target = 0; // [V]
};

/// Per-code capacitance table emulating a variable-slope design with the
/// same ideal transfer function: delay is tuned by the ramp slope
/// (i_disch / cap) from a fixed start voltage instead of by the start
/// voltage at a fixed slope.
struct VariableSlopeConfig {
    std::array<double, PhaseCode::kLevels> cap_per_code{}; // [F]
    double v_start_fixed = 1.0;                            // [V]
};

/// Rejects parameter sets the simulator cannot honor: non-physical
/// device values, a threshold at or above the ladder minimum, or a
/// regulator range too small for the largest fine offset.
void validate_params(const DeviceParams& device, const LdoParams& ldo,
                     const ClockSpec& clock);

/// entry(s, k) = v_min + slope * fine_offset_time(s, k). The calibration
/// makes the end-to-end fine delay exactly proportional to the fine
/// phase offset. Throws if any entry would exceed v_max.
VoltageLut build_voltage_lut(const DeviceParams& device, const LdoParams& ldo,
                             const ClockSpec& clock);

/// ControlWord consistent with decode_code, target voltage from the LUT.
ControlWord select_muxes(PhaseCode code, const VoltageLut& lut);

/// Capacitance table c(code) = i_disch * t_delay(code) / (v_start - v_th)
/// matching the constant-slope transfer function under an ideal
/// comparator.
VariableSlopeConfig variable_slope_lut(const DeviceParams& device,
                                       const LdoParams& ldo,
                                       const ClockSpec& clock,
                                       double v_start_fixed = 1.0);

/// CSV export/import, columns (sextant, step, volts), 6 decimal digits.
void write_lut_csv(const std::string& path, const VoltageLut& lut);
VoltageLut read_lut_csv(const std::string& path);

} // namespace dpc
