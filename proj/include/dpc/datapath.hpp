#pragma once

// Event-level simulation of the interpolator datapath: half-cell
// discharge/crossing machine, toggle flip-flops, XOR recombiner, and the
// six-cell bank geometry. Waveforms are time-ordered edge lists; the
// engine is closed-form per edge, no fixed timestep.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "dpc/analog.hpp"
#include "dpc/core.hpp"

namespace dpc {

struct Edge {
    double t = 0;        // [s]
    bool rising = true;
};

/// Time-ordered transitions of one logic signal: strictly increasing
/// times, alternating polarity.
using EdgeList = std::vector<Edge>;

/// Throws SimulationError if `edges` violates the EdgeList invariants.
void validate_edge_list(const EdgeList& edges, const std::string& name);

/// Square wave at the given input phase: rising edges at
/// (n + phase/360) * T, 50% duty. Edges start one period before t = 0 so
/// downstream state machines see steady-state history.
EdgeList make_clock(double phase_deg, const ClockSpec& clock, int n_periods);

/// Rising edges of `edges` as plain times.
std::vector<double> rising_times(const EdgeList& edges);

/// Inputs of one half-cell: the discharge-enable clock, the reset-assist
/// clock lagging it by 120 degrees, and the regulator output it samples.
struct HalfCellInputs {
    EdgeList clk_a;
    EdgeList clk_b;
    VoltageSource v_ldo;
};

struct HalfCellOptions {
    bool strict = false;           // enforce the Mode II window checks
    double min_window_margin = 0;  // [s], extra slack required in strict mode
};

/// Diagnostics accumulated by a strict-mode half-cell run.
struct HalfCellDiag {
    std::vector<std::string> warnings;
};

/// One comparator output edge pair per discharge cycle: a rising edge at
/// ramp crossing + comparator delay, a falling edge when the cell
/// recharges (next cycle where both clocks are low). In strict mode the
/// raw crossing must land while only clk_a is high (Mode II), with the
/// slowest-corner current spread applied as margin.
EdgeList half_cell_cross_events(const HalfCellInputs& inputs,
                                const DeviceParams& device,
                                const ComparatorModel& comp,
                                const HalfCellOptions& opts = {},
                                HalfCellDiag* diag = nullptr);

/// Divide-by-two: output toggles on each rising input edge.
EdgeList tff_toggle(const EdgeList& in_edges, bool initial_state = false);

/// XOR recombiner: output toggles at every edge of either input.
/// Exactly coincident edges are rejected.
EdgeList xor_merge(const EdgeList& a, const EdgeList& b);

/// Full-rate output of one unit cell.
struct UnitCellOutput {
    EdgeList tff_a;
    EdgeList tff_b;
    EdgeList out;
};

/// Ordered input-phase pair feeding a sextant's unit cell:
/// discharge-enable at 60*sextant degrees, reset-assist 120 degrees later
/// (modulo 360). Exactly one cell is powered at a time.
std::pair<double, double> bank_select(int sextant);

/// Wires two half-cells (the second fed the complements of the first's
/// clocks), the two toggle flip-flops, and the XOR. The output phase
/// follows sextant base phase + (v_start - v_th)/slope plus a constant
/// pipeline offset common to all codes.
UnitCellOutput unit_cell_edges(const VoltageSource& code_voltage, int sextant,
                               const DeviceParams& device,
                               const ComparatorModel& comp,
                               const ClockSpec& clock, int n_periods,
                               const HalfCellOptions& opts = {},
                               HalfCellDiag* diag = nullptr);

/// Convenience overload for a fixed start voltage.
UnitCellOutput unit_cell_edges(double code_voltage, int sextant,
                               const DeviceParams& device,
                               const ComparatorModel& comp,
                               const ClockSpec& clock, int n_periods,
                               const HalfCellOptions& opts = {},
                               HalfCellDiag* diag = nullptr);

/// Debug dump: CSV rows (time_s, signal_name, value), time-ordered.
void dump_waveform(const std::string& path,
                   const std::vector<std::pair<std::string, EdgeList>>& signals);

} // namespace dpc
