#pragma once

#include <vector>

#include "aa/evolution.hpp"

namespace aa {

enum class Accounting { control_frame, physical };

// Decomposition of a cyclic evolution: geometric = total - dynamic by
// construction, with the dynamic part split by segment label.
struct PhaseReport {
  double total = 0.0;          // (-pi, pi]
  double dynamic_free = 0.0;
  double dynamic_pulse = 0.0;
  double geometric = 0.0;      // (-pi, pi]
  double solid_angle = 0.0;    // signed, (-2pi, 2pi]
  double cyclicity_defect = 0.0;
  Accounting accounting = Accounting::control_frame;
};

double wrap_pi(double angle);        // to (-pi, pi]
double wrap_two_pi(double angle);    // to (-2pi, 2pi], mod 4pi
// |a - b| mod 2pi, for phase comparisons.
double phase_distance(double a, double b);

// arg<psi0|psiT>; NotCyclic unless |<psi0|psiT>| >= 1 - 1e-9.
double total_phase(const StateVector& psi0, const StateVector& psiT);

// -int <psi|H|psi> dt by trapezoidal quadrature per segment, split by label.
// Impulse segments contribute their hard-pulse limit -(angle/2)<axis.s>,
// integrated along the recorded arc.
struct DynamicPhase {
  double free_part = 0.0;
  double pulse_part = 0.0;
};
DynamicPhase dynamic_phase(const Trajectory& traj, const Schedule& s);

PhaseReport aa_phase(const Trajectory& traj, const Schedule& s);

// Signed spherical area of a closed unit-vector path: triangle fan from the
// normalized mean direction (falling back to the loop area vector, then the
// first point, when degenerate), each triangle by l'Huilier excess with an
// orientation sign. Any fan apex is valid mod 4pi; the result is wrapped to
// (-2pi, 2pi].
double solid_angle(const std::vector<Vec3>& closed_path);

}  // namespace aa
