#pragma once

#include <functional>
#include <vector>

#include "aa/pulses.hpp"

namespace aa {

struct StateVector {
  int dim = 2;
  std::array<cxd, 4> a{};

  static StateVector qubit(cxd up, cxd down);
  static StateVector up() { return qubit(1.0, 0.0); }
  static StateVector down() { return qubit(0.0, 1.0); }
  static StateVector plus();
  static StateVector minus();
  static StateVector product(const StateVector& qa, const StateVector& qb);

  double norm() const;
};

cxd inner(const StateVector& a, const StateVector& b);  // <a|b>
StateVector apply(const Operator& u, const StateVector& psi);

// (<sx>, <sy>, <sz>) of a pure qubit state.
Vec3 bloch_of(const StateVector& psi);
// Same for a 2x2 density; InvalidDensity on non-hermitian, non-unit-trace or
// negative inputs.
Vec3 bloch_of(const Operator& rho);

enum class Subsystem { a, b };

// Partial trace of a two-qubit pure state down to one qubit.
Operator reduced_density(const StateVector& psi, Subsystem which);

// Time-sampled evolution record. Samples are grouped per schedule segment;
// impulse arcs share one time coordinate. labels has one entry per sample
// interval (the segment the sample belongs to).
struct Trajectory {
  std::vector<double> times;
  std::vector<StateVector> states;
  std::vector<Vec3> bloch_a;
  std::vector<Vec3> bloch_b;  // dim 4 only
  std::vector<SegmentLabel> labels;
  std::vector<int> segment_first;  // index of each segment's first new sample
  int samples_per_segment = 0;
  int dim = 2;
};

// Ordered product of segment propagators, later segments on the left.
Operator total_propagator(const Schedule& s);

// Exact per-segment sampling: every sample comes from one eigendecomposition
// per segment, so there is no step-accumulation error.
Trajectory propagate(const Schedule& s, const StateVector& psi0, int samples_per_segment);

// Midpoint piecewise-constant integrator for a time-dependent Hamiltonian;
// the workhorse for frame-identity checks against analytic propagators.
Operator integrate_piecewise(const std::function<Operator(double)>& h_of_t, double t_total,
                             int steps);

}  // namespace aa
