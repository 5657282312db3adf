#include "aa/pulses.hpp"

#include <cmath>

namespace aa {

PulseModel PulseModel::hard(double rf_amplitude) {
  if (!(rf_amplitude > 0.0) || !std::isfinite(rf_amplitude))
    fail(ErrorKind::InvalidParams, "hard pulse rf_amplitude must be positive");
  return {Kind::hard, rf_amplitude};
}

PulseEvent PulseEvent::rotation(const Vec3& axis, double angle, PulseModel model) {
  if (std::abs(axis.norm() - 1.0) > 1e-12)
    fail(ErrorKind::InvalidParams, "rotation axis must be a unit vector");
  if (!std::isfinite(angle)) fail(ErrorKind::InvalidParams, "non-finite rotation angle");
  PulseEvent e;
  e.kind = Kind::rotation;
  e.axis = axis;
  e.angle = angle;
  e.model = model;
  return e;
}

PulseEvent PulseEvent::delay(double duration) {
  if (!(duration > 0.0) || !std::isfinite(duration))
    fail(ErrorKind::InvalidParams, "delay duration must be positive");
  PulseEvent e;
  e.kind = Kind::delay;
  e.duration = duration;
  return e;
}

PulseSequence aa_cnot_sequence(double theta, const SpinPairParams& p, PulseModel model) {
  p.validate();
  if (!(theta >= 0.0 && theta < 0.5 * kPi))
    fail(ErrorKind::InvalidParams, "theta must lie in [0, pi/2)");
  const double tau = kPi / (2.0 * p.j_coupling);
  const Vec3 x{1.0, 0.0, 0.0};
  PulseSequence seq;
  seq.theta = theta;
  seq.tau = tau;
  seq.events = {
      PulseEvent::rotation(x, -theta, model),
      PulseEvent::delay(tau),
      PulseEvent::rotation(x, -(kPi - 2.0 * theta), model),
      PulseEvent::delay(tau),
      PulseEvent::rotation(x, kPi - theta, model),
  };
  return seq;
}

double net_rotation_angle(const PulseSequence& seq) {
  double sum = 0.0;
  bool have_axis = false;
  Vec3 axis;
  for (const PulseEvent& e : seq.events) {
    if (e.kind != PulseEvent::Kind::rotation) continue;
    if (!have_axis) {
      axis = e.axis;
      have_axis = true;
    } else if ((e.axis - axis).norm() > 1e-12) {
      fail(ErrorKind::MixedAxes, "rotations use different axes");
    }
    sum += e.angle;
  }
  return sum;
}

double Schedule::total_duration() const {
  double t = 0.0;
  for (const Segment& s : segments) t += s.duration;
  return t;
}

Operator impulse_unitary(const Segment& s) {
  return rotation_about(s.axis, s.angle);
}

Schedule realize_rotating(const PulseSequence& seq, const SpinPairParams& p, ControlState b) {
  p.validate();
  const Operator h_cond = pauli_compose(conditional_field(p, b));
  Schedule sched;
  sched.frame = Frame::rotating;
  sched.dim = 2;
  for (const PulseEvent& e : seq.events) {
    if (e.kind == PulseEvent::Kind::delay) {
      Segment s;
      s.h = h_cond;
      s.duration = e.duration;
      s.label = SegmentLabel::free_evolution;
      sched.segments.push_back(s);
      continue;
    }
    if (!e.model.is_hard() || e.angle == 0.0) {
      Segment s;
      s.impulse = true;
      s.axis = e.axis;
      s.angle = e.angle;
      s.label = SegmentLabel::pulse;
      sched.segments.push_back(s);
      continue;
    }
    // Hard pulse: resonant drive along the pulse axis with the conditional
    // field still on; the drive sign follows the angle sign.
    const double sign = e.angle > 0.0 ? 1.0 : -1.0;
    const double amp = 0.5 * sign * e.model.rf_amplitude;
    Segment s;
    s.h = pauli_compose({0.0, amp * e.axis.x, amp * e.axis.y, amp * e.axis.z}) + h_cond;
    s.duration = std::abs(e.angle) / e.model.rf_amplitude;
    s.label = SegmentLabel::pulse;
    sched.segments.push_back(s);
  }
  return sched;
}

Schedule realize_control_frame(const PulseSequence& seq, const SpinPairParams& p,
                               ControlState b) {
  p.validate();
  const PauliCoeffs field = conditional_field(p, b);
  Schedule sched;
  sched.frame = Frame::control;
  sched.dim = 2;

  Operator cum = Operator::identity(2);  // product of pulses applied so far
  const Operator sz = sigma_z();
  for (const PulseEvent& e : seq.events) {
    if (e.kind == PulseEvent::Kind::rotation) {
      if (e.model.is_hard())
        fail(ErrorKind::InvalidParams, "control-frame realization needs instantaneous pulses");
      cum = rotation_about(e.axis, e.angle) * cum;
      continue;
    }
    // Free precession about the z axis dragged backwards through the pulses
    // applied so far: sz -> cum^dag sz cum.
    Operator toggled = adjoint(cum) * sz * cum;
    toggled = 0.5 * (toggled + adjoint(toggled));
    toggled.hermitian = true;
    Segment s;
    s.h = field.az * toggled;
    s.h.at(0, 0) += field.a0;
    s.h.at(1, 1) += field.a0;
    s.h.hermitian = true;
    s.duration = e.duration;
    s.label = SegmentLabel::free_evolution;
    sched.segments.push_back(s);
  }
  if (max_abs_diff(cum, Operator::identity(2)) > 1e-12)
    fail(ErrorKind::NonClosingFrame, "pulse product does not close to the identity");
  return sched;
}

}  // namespace aa
