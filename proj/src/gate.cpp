#include "aa/gate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aa {

namespace {

constexpr double kEquivTol = 1e-9;

StateVector plus_state() { return StateVector::plus(); }

// Control-frame |+> loop of the (possibly perturbed) sequence, or NaN when
// the loop is unrealizable or does not close.
double loop_solid_angle(const PulseSequence& seq, const SpinPairParams& p, int samples) {
  try {
    PulseSequence inst = seq;
    for (PulseEvent& e : inst.events)
      if (e.kind == PulseEvent::Kind::rotation) e.model = PulseModel::instantaneous();
    const Schedule sched = realize_control_frame(inst, p, ControlState::up);
    const Trajectory traj = propagate(sched, plus_state(), samples);
    return solid_angle(traj.bloch_a);
  } catch (const SimError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

GateReport build_report(const PulseSequence& seq, double theta, const SpinPairParams& p,
                        PulseModel model, Accounting accounting) {
  GateReport report;
  report.theta = theta;
  report.accounting = accounting;
  report.model = model;

  const bool control = accounting == Accounting::control_frame;
  const Schedule up = control ? realize_control_frame(seq, p, ControlState::up)
                              : realize_rotating(seq, p, ControlState::up);
  const Schedule down = control ? realize_control_frame(seq, p, ControlState::down)
                                : realize_rotating(seq, p, ControlState::down);
  report.block_up = total_propagator(up);
  report.block_down = total_propagator(down);
  report.propagator = assemble_blocks(report.block_up, report.block_down);
  report.gamma = plus_state_phase(report.block_up);
  return report;
}

}  // namespace

GateReport gate_propagator(double theta, const SpinPairParams& p, PulseModel model,
                           Accounting accounting) {
  p.validate();
  if (accounting == Accounting::control_frame && model.is_hard())
    fail(ErrorKind::IncompatibleAccounting,
         "control-frame accounting requires instantaneous pulses");
  const PulseSequence seq = aa_cnot_sequence(theta, p, model);
  return build_report(seq, theta, p, model, accounting);
}

double plus_state_phase(const Operator& block_up) {
  if (block_up.dim != 2) fail(ErrorKind::DimensionMismatch, "plus_state_phase");
  const StateVector plus = plus_state();
  const cxd amp = inner(plus, apply(block_up, plus));
  return wrap_pi(std::arg(amp));
}

double conditional_geometric_phase(const GateReport& report) {
  const Operator& u = report.block_up;
  if (unitarity_defect(u) > kUnitaryTol) fail(ErrorKind::NonUnitaryInput, "block_up");
  if (!commutes_with(u, sigma_x(), kEquivTol))
    fail(ErrorKind::NotXDiagonal, "block_up does not commute with sigma_x");
  const StateVector plus = plus_state();
  const cxd amp = inner(plus, apply(u, plus));
  if (std::abs(amp) < 1.0 - kEquivTol)
    fail(ErrorKind::NotXDiagonal, "|+> is not an eigenvector of block_up");
  return wrap_pi(std::arg(amp));
}

Operator cnot_matrix() {
  Operator p_up = Operator::zero(2);
  p_up.at(0, 0) = 1.0;
  Operator p_down = Operator::zero(2);
  p_down.at(1, 1) = 1.0;
  Operator c = kron(sigma_x(), p_up) + kron(Operator::identity(2), p_down);
  c.unitary = true;
  c.hermitian = true;
  return c;
}

GateReport cnot_equivalence(GateReport report) {
  const Operator id = Operator::identity(2);
  const Operator sx = sigma_x();

  const cxd tr_down = trace(report.block_down);
  const cxd tr_up_sx = trace(sx * report.block_up);
  bool equivalent = std::abs(tr_down) > 1e-15 && std::abs(tr_up_sx) > 1e-15;
  double alpha = 0.0, beta = 0.0;
  if (equivalent) {
    alpha = std::arg(tr_down / 2.0);
    beta = std::arg(tr_up_sx / 2.0);
    const cxd ea = std::exp(cxd(0.0, alpha));
    const cxd eb = std::exp(cxd(0.0, beta));
    equivalent = max_abs_diff(report.block_down, ea * id) <= kEquivTol &&
                 max_abs_diff(report.block_up, eb * sx) <= kEquivTol;
  }

  if (equivalent) {
    Equivalence eq;
    eq.global_phase = wrap_pi(0.5 * (alpha + beta));
    eq.control_z_pre = wrap_pi(alpha - beta);
    eq.control_z_post = 0.0;
    report.equivalence = eq;
    // Undo the phases and compare with the plain C-NOT.
    Operator corr_up = std::exp(cxd(0.0, -beta)) * report.block_up;
    Operator corr_down = std::exp(cxd(0.0, -alpha)) * report.block_down;
    report.fidelity_cnot = gate_fidelity(assemble_blocks(corr_up, corr_down), cnot_matrix());
  } else {
    report.equivalence.reset();
    report.fidelity_cnot = gate_fidelity(report.propagator, cnot_matrix());
  }
  return report;
}

double corrected_cnot_fidelity(const Operator& u4) {
  if (u4.dim != 4) fail(ErrorKind::DimensionMismatch, "corrected_cnot_fidelity");
  // Cross-block leakage is ignored by the trace; it only lowers the result.
  cxd tr_down = u4.at(1, 1) + u4.at(3, 3);
  cxd tr_up_sx = u4.at(2, 0) + u4.at(0, 2);
  return 0.25 * (std::abs(tr_down) + std::abs(tr_up_sx));
}

AreaTable area_dependence_check(double theta, const SpinPairParams& base,
                                const std::vector<double>& j_values) {
  if (j_values.empty()) fail(ErrorKind::InvalidParams, "empty J grid");
  AreaTable table;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double j : j_values) {
    if (!(j > 0.0)) fail(ErrorKind::InvalidParams, "J values must be positive");
    const SpinPairParams p = SpinPairParams::make(base.omega_a, base.omega_b, j);
    GateReport report = gate_propagator(theta, p, PulseModel::instantaneous(),
                                        Accounting::control_frame);
    const double gamma = conditional_geometric_phase(report);
    table.rows.push_back({j, gamma});
    lo = std::min(lo, gamma);
    hi = std::max(hi, gamma);
  }
  table.spread = hi - lo;
  return table;
}

std::vector<SweepRow> robustness_sweep(double theta, const SpinPairParams& p,
                                       const SweepSpec& spec) {
  p.validate();
  if (spec.grid.empty()) fail(ErrorKind::InvalidParams, "empty sweep grid");
  for (double v : spec.grid)
    if (!std::isfinite(v)) fail(ErrorKind::InvalidParams, "non-finite sweep value");

  std::vector<SweepRow> rows;
  rows.reserve(spec.grid.size());
  const int samples = 512;

  for (double value : spec.grid) {
    double th = theta;
    SpinPairParams params = p;
    PulseModel model = PulseModel::instantaneous();
    double tau_scale = 1.0;
    double angle_shift = 0.0;

    switch (spec.parameter) {
      case SweepSpec::Parameter::theta:
        th = value;
        break;
      case SweepSpec::Parameter::j_coupling:
        params = SpinPairParams::make(p.omega_a, p.omega_b, value);
        break;
      case SweepSpec::Parameter::tau_error:
        tau_scale = 1.0 + value;
        break;
      case SweepSpec::Parameter::angle_error:
        angle_shift = value;
        break;
      case SweepSpec::Parameter::rf_amplitude:
        model = PulseModel::hard(value);
        break;
    }

    PulseSequence seq = aa_cnot_sequence(th, params, model);
    for (PulseEvent& e : seq.events) {
      if (e.kind == PulseEvent::Kind::delay)
        e.duration *= tau_scale;
      else
        e.angle += angle_shift;
    }

    const Schedule up = realize_rotating(seq, params, ControlState::up);
    const Schedule down = realize_rotating(seq, params, ControlState::down);
    const Operator block_up = total_propagator(up);
    const Operator block_down = total_propagator(down);

    SweepRow row;
    row.value = value;
    row.gamma = plus_state_phase(block_up);
    row.fidelity_cnot = corrected_cnot_fidelity(assemble_blocks(block_up, block_down));
    row.solid_angle = loop_solid_angle(seq, params, samples);
    rows.push_back(row);
  }
  return rows;
}

Schedule selectivity_schedule(const SpinPairParams& p, double rf_amplitude, double theta) {
  p.validate();
  if (!(rf_amplitude >= 0.0) || !std::isfinite(rf_amplitude))
    fail(ErrorKind::InvalidParams, "rf_amplitude must be nonnegative");

  const PulseSequence seq =
      aa_cnot_sequence(theta, p,
                       rf_amplitude > 0.0 ? PulseModel::hard(rf_amplitude)
                                          : PulseModel::instantaneous());

  // Frame co-rotating with the drive (frequency frame_freq) on both spins:
  // the circularly polarized global drive becomes a static sx on each spin
  // and the Zeeman terms keep only their offsets from the frame.
  const Operator sz = sigma_z();
  const Operator sx = sigma_x();
  const Operator id = Operator::identity(2);
  Operator h_static = 0.5 * (p.omega_a - p.frame_freq) * kron(sz, id) +
                      0.5 * (p.omega_b - p.frame_freq) * kron(id, sz) +
                      0.5 * p.j_coupling * kron(sz, sz);
  h_static.hermitian = true;
  const Operator drive_shape = kron(sx, id) + kron(id, sx);

  Schedule sched;
  sched.frame = Frame::rotating;
  sched.dim = 4;
  for (const PulseEvent& e : seq.events) {
    Segment s;
    if (e.kind == PulseEvent::Kind::delay) {
      s.h = h_static;
      s.duration = e.duration;
      s.label = SegmentLabel::free_evolution;
    } else if (rf_amplitude == 0.0 || e.angle == 0.0) {
      s.impulse = true;
      s.axis = e.axis;
      s.angle = e.angle;
      s.label = SegmentLabel::pulse;
    } else {
      const double sign = e.angle > 0.0 ? 1.0 : -1.0;
      s.h = h_static + 0.5 * sign * rf_amplitude * drive_shape;
      s.h.hermitian = true;
      s.duration = std::abs(e.angle) / rf_amplitude;
      s.label = SegmentLabel::pulse;
    }
    sched.segments.push_back(s);
  }
  return sched;
}

std::vector<SelectivityRow> selectivity_experiment(const SpinPairParams& p, double rf_amplitude,
                                                   const std::vector<double>& separations,
                                                   double theta) {
  p.validate();
  if (separations.empty()) fail(ErrorKind::InvalidParams, "empty separation grid");
  for (double d : separations)
    if (!(d > 0.0) || !std::isfinite(d))
      fail(ErrorKind::InvalidParams, "separations must be positive");

  std::vector<SelectivityRow> rows;
  rows.reserve(separations.size());

  for (double delta : separations) {
    const SpinPairParams params = SpinPairParams::make(
        p.omega_a, p.frame_freq + delta, p.j_coupling, p.frame_freq);
    const Schedule sched = selectivity_schedule(params, rf_amplitude, theta);

    SelectivityRow row;
    row.delta_omega = delta;

    // Sampling dense enough to catch the fastest Rabi wiggle during pulses.
    const double omega_eff = std::hypot(delta + params.j_coupling, rf_amplitude);
    int samples = 512;
    for (const Segment& s : sched.segments) {
      if (s.label != SegmentLabel::pulse || s.impulse) continue;
      const double cycles = omega_eff * s.duration / (2.0 * kPi);
      samples = std::max(samples, static_cast<int>(std::ceil(cycles * 40.0)));
    }

    for (ControlState b : {ControlState::up, ControlState::down}) {
      const StateVector psi_b = b == ControlState::up ? StateVector::up() : StateVector::down();
      const StateVector psi0 = StateVector::product(StateVector::up(), psi_b);
      const Trajectory traj = propagate(sched, psi0, samples);
      double peak = 0.0;
      for (const StateVector& st : traj.states) {
        const Operator rho_b = reduced_density(st, Subsystem::b);
        const int i = b == ControlState::up ? 0 : 1;
        const double keep = rho_b.at(i, i).real();
        peak = std::max(peak, 1.0 - keep);
      }
      const Operator rho_end = reduced_density(traj.states.back(), Subsystem::b);
      const int i = b == ControlState::up ? 0 : 1;
      row.b_disturbance = std::max(row.b_disturbance, 1.0 - rho_end.at(i, i).real());
      row.b_disturbance_peak = std::max(row.b_disturbance_peak, peak);
    }

    // Gate quality after removing the reporting frame (spin b back to its
    // own rotating frame; spin a already co-rotates with the drive).
    const Operator u_common = total_propagator(sched);
    const double t_total = sched.total_duration();
    const Operator rb =
        expm_pauli({0.0, 0.0, 0.0, -0.5 * (params.omega_b - params.frame_freq)}, t_total);
    const Operator u_report = kron(Operator::identity(2), rb) * u_common;
    row.fidelity_cnot = corrected_cnot_fidelity(u_report);

    rows.push_back(row);
  }
  return rows;
}

}  // namespace aa
