#pragma once

#include <optional>
#include <vector>

#include "aa/phases.hpp"

namespace aa {

// Phase corrections that turn the raw propagator into the plain C-NOT:
// U = exp(i global_phase) * Rz_b(post) * CNOT * Rz_b(pre) with
// Rz_b(w) = exp(-i w sz_b / 2) acting on the control.
struct Equivalence {
  double global_phase = 0.0;
  double control_z_pre = 0.0;
  double control_z_post = 0.0;
};

struct GateReport {
  double theta = 0.0;
  Accounting accounting = Accounting::control_frame;
  PulseModel model{};
  Operator propagator;  // 4x4, control never flipped
  Operator block_up;    // qubit-a evolution for b = up
  Operator block_down;  // qubit-a evolution for b = down
  double gamma = 0.0;
  double fidelity_cnot = 0.0;
  std::optional<Equivalence> equivalence;
};

// Builds the scheme at theta, realizes it per control branch and assembles
// the conditional 4x4 propagator. control_frame accounting requires
// instantaneous pulses.
GateReport gate_propagator(double theta, const SpinPairParams& p, PulseModel model,
                           Accounting accounting);

// Eigenphase of block_up on |+>; NotXDiagonal unless block_up commutes with
// sigma_x within 1e-9.
double conditional_geometric_phase(const GateReport& report);

// arg<+|U|+>, the relaxed version of the above: identical whenever the strict
// eigenphase exists, still defined for perturbed gates.
double plus_state_phase(const Operator& block_up);

// C-NOT with control b (active when up) and target a.
Operator cnot_matrix();

// Decides block_down = e^{i a} I and block_up = e^{i b} sx within 1e-9; if
// so fills the corrections and the corrected fidelity, otherwise leaves
// equivalence empty and reports the raw fidelity against the plain C-NOT.
GateReport cnot_equivalence(GateReport report);

// Fidelity to C-NOT maximized over the allowed corrections (global phase and
// control-z rotations): (|Tr B_down| + |Tr sx B_up|) / 4.
double corrected_cnot_fidelity(const Operator& u4);

struct AreaRow {
  double j_coupling = 0.0;
  double gamma = 0.0;
};
struct AreaTable {
  std::vector<AreaRow> rows;
  double spread = 0.0;  // max - min over gamma
};

// Rebuilds the scheme with tau = pi/(2J) for each J; gamma must not move.
AreaTable area_dependence_check(double theta, const SpinPairParams& base,
                                const std::vector<double>& j_values);

struct SweepSpec {
  enum class Parameter { theta, j_coupling, tau_error, angle_error, rf_amplitude };
  Parameter parameter = Parameter::theta;
  std::vector<double> grid;
  long long perturbation_seed = 0;
};

struct SweepRow {
  double value = 0.0;
  double gamma = 0.0;
  double fidelity_cnot = 0.0;
  double solid_angle = 0.0;  // NaN when the control-frame loop does not close
};

std::vector<SweepRow> robustness_sweep(double theta, const SpinPairParams& p,
                                       const SweepSpec& spec);

struct SelectivityRow {
  double delta_omega = 0.0;
  double b_disturbance = 0.0;       // end of sequence, worst control state
  double b_disturbance_peak = 0.0;  // whole-process maximum
  double fidelity_cnot = 0.0;
};

// Global rf drive at frame_freq coupling to both spins' sx; the control is
// protected only by the frequency separation delta_omega = omega_b -
// frame_freq. Integrated exactly in the frame co-rotating with the drive.
std::vector<SelectivityRow> selectivity_experiment(const SpinPairParams& p, double rf_amplitude,
                                                   const std::vector<double>& separations,
                                                   double theta = 0.25 * kPi);

// The common-frame schedule the selectivity experiment integrates; exposed
// for cross-checking against lab-frame integration.
Schedule selectivity_schedule(const SpinPairParams& p, double rf_amplitude, double theta);

}  // namespace aa
