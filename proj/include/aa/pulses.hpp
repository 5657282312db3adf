#pragma once

#include <vector>

#include "aa/spin_system.hpp"

namespace aa {

struct PulseModel {
  enum class Kind { instantaneous, hard };
  Kind kind = Kind::instantaneous;
  double rf_amplitude = 0.0;  // rad/s, > 0 for hard pulses

  static PulseModel instantaneous() { return {}; }
  static PulseModel hard(double rf_amplitude);
  bool is_hard() const { return kind == Kind::hard; }
};

struct PulseEvent {
  enum class Kind { rotation, delay };
  Kind kind = Kind::rotation;
  // rotation (target is always qubit a)
  Vec3 axis{1.0, 0.0, 0.0};
  double angle = 0.0;
  PulseModel model{};
  // delay
  double duration = 0.0;

  static PulseEvent rotation(const Vec3& axis, double angle, PulseModel model);
  static PulseEvent delay(double duration);
};

struct PulseSequence {
  std::vector<PulseEvent> events;
  double theta = 0.0;  // scheme parameter when generated
  double tau = 0.0;    // free-evolution delay, pi/(2J) when generated
};

// The conditional-phase scheme: x-rotation by -theta, delay tau, x-rotation
// by -(pi - 2 theta), delay tau, x-rotation by (pi - theta), tau = pi/(2J).
// The three rotation angles sum to zero.
PulseSequence aa_cnot_sequence(double theta, const SpinPairParams& p,
                               PulseModel model = PulseModel::instantaneous());

// Signed sum of rotation angles; MixedAxes if the rotations do not share
// one axis.
double net_rotation_angle(const PulseSequence& seq);

enum class Frame { rotating, control };
enum class SegmentLabel { free_evolution, pulse };

// One piece of a piecewise-constant schedule. Impulse segments represent
// instantaneous rotations: zero duration, unitary exp(-i angle (axis.s)/2),
// and an impulse dynamic phase -(angle/2)<axis.s> accumulated along the arc.
struct Segment {
  bool impulse = false;
  Operator h;  // field segments only
  double duration = 0.0;
  SegmentLabel label = SegmentLabel::free_evolution;
  Vec3 axis{1.0, 0.0, 0.0};  // impulse segments only
  double angle = 0.0;
};

struct Schedule {
  std::vector<Segment> segments;
  Frame frame = Frame::rotating;
  int dim = 2;

  double total_duration() const;
};

// Physical realization in the rotating frame: delays become conditional-field
// segments; instantaneous rotations become impulse segments; hard rotations
// become drive-plus-conditional-field segments of duration |angle|/rf.
Schedule realize_rotating(const PulseSequence& seq, const SpinPairParams& p, ControlState b);

// Toggling-frame realization: pulses are pure frame redefinitions (no
// segments); each delay precesses about the z axis dragged backwards through
// every pulse applied so far. Requires instantaneous rotations and a pulse
// product that closes to the identity.
Schedule realize_control_frame(const PulseSequence& seq, const SpinPairParams& p, ControlState b);

Operator impulse_unitary(const Segment& s);

}  // namespace aa
