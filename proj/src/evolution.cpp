#include "aa/evolution.hpp"

#include <cmath>

namespace aa {

namespace {

constexpr double kNormTol = 1e-12;

void check_normalized(const StateVector& psi) {
  if (std::abs(psi.norm() - 1.0) > kNormTol)
    fail(ErrorKind::InvalidParams, "state vector must be normalized");
}

}  // namespace

StateVector StateVector::qubit(cxd up, cxd down) {
  StateVector s;
  s.dim = 2;
  s.a[0] = up;
  s.a[1] = down;
  return s;
}

StateVector StateVector::plus() {
  const double r = 1.0 / std::sqrt(2.0);
  return qubit(r, r);
}

StateVector StateVector::minus() {
  const double r = 1.0 / std::sqrt(2.0);
  return qubit(r, -r);
}

StateVector StateVector::product(const StateVector& qa, const StateVector& qb) {
  if (qa.dim != 2 || qb.dim != 2) fail(ErrorKind::DimensionMismatch, "product of two qubits");
  StateVector s;
  s.dim = 4;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s.a[static_cast<size_t>(2 * i + j)] = qa.a[i] * qb.a[j];
  return s;
}

double StateVector::norm() const {
  double n = 0.0;
  for (int i = 0; i < dim; ++i) n += std::norm(a[static_cast<size_t>(i)]);
  return std::sqrt(n);
}

cxd inner(const StateVector& x, const StateVector& y) {
  if (x.dim != y.dim) fail(ErrorKind::DimensionMismatch, "inner product");
  cxd s = 0.0;
  for (int i = 0; i < x.dim; ++i)
    s += std::conj(x.a[static_cast<size_t>(i)]) * y.a[static_cast<size_t>(i)];
  return s;
}

StateVector apply(const Operator& u, const StateVector& psi) {
  if (u.dim != psi.dim) fail(ErrorKind::DimensionMismatch, "operator application");
  StateVector out;
  out.dim = psi.dim;
  for (int i = 0; i < u.dim; ++i) {
    cxd s = 0.0;
    for (int j = 0; j < u.dim; ++j) s += u.at(i, j) * psi.a[static_cast<size_t>(j)];
    out.a[static_cast<size_t>(i)] = s;
  }
  return out;
}

Vec3 bloch_of(const StateVector& psi) {
  if (psi.dim != 2) fail(ErrorKind::DimensionMismatch, "bloch_of needs a single qubit");
  check_normalized(psi);
  const cxd z = std::conj(psi.a[0]) * psi.a[1];
  return {2.0 * z.real(), 2.0 * z.imag(), std::norm(psi.a[0]) - std::norm(psi.a[1])};
}

Vec3 bloch_of(const Operator& rho) {
  if (rho.dim != 2) fail(ErrorKind::DimensionMismatch, "bloch_of needs a 2x2 density");
  if (hermiticity_defect(rho) > 1e-12 || std::abs(trace(rho).real() - 1.0) > 1e-12 ||
      std::abs(trace(rho).imag()) > 1e-12)
    fail(ErrorKind::InvalidDensity, "density must be hermitian with unit trace");
  // Positivity: both eigenvalues of a 2x2 hermitian unit-trace matrix are
  // nonnegative iff det >= 0.
  const cxd det = rho.at(0, 0) * rho.at(1, 1) - rho.at(0, 1) * rho.at(1, 0);
  if (det.real() < -1e-12) fail(ErrorKind::InvalidDensity, "density is not positive");
  return {2.0 * rho.at(1, 0).real(), 2.0 * rho.at(1, 0).imag(),
          rho.at(0, 0).real() - rho.at(1, 1).real()};
}

Operator reduced_density(const StateVector& psi, Subsystem which) {
  if (psi.dim != 4) fail(ErrorKind::DimensionMismatch, "reduced_density needs a two-qubit state");
  check_normalized(psi);
  Operator rho = Operator::zero(2);
  if (which == Subsystem::a) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        cxd s = 0.0;
        for (int k = 0; k < 2; ++k)
          s += psi.a[static_cast<size_t>(2 * i + k)] * std::conj(psi.a[static_cast<size_t>(2 * j + k)]);
        rho.at(i, j) = s;
      }
  } else {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        cxd s = 0.0;
        for (int k = 0; k < 2; ++k)
          s += psi.a[static_cast<size_t>(2 * k + i)] * std::conj(psi.a[static_cast<size_t>(2 * k + j)]);
        rho.at(i, j) = s;
      }
  }
  rho.hermitian = true;
  return rho;
}

Operator total_propagator(const Schedule& s) {
  Operator u = Operator::identity(s.dim);
  for (const Segment& seg : s.segments) {
    Operator step;
    if (seg.impulse) {
      step = impulse_unitary(seg);
      if (s.dim == 4) step = kron(step, Operator::identity(2));
    } else {
      if (seg.h.dim != s.dim) fail(ErrorKind::DimensionMismatch, "segment dimension");
      if (hermiticity_defect(seg.h) > kHermTol * std::max(1.0, max_abs(seg.h)))
        fail(ErrorKind::NonHermitianSegment, "segment Hamiltonian");
      step = expm_hermitian(seg.h, seg.duration);
    }
    u = step * u;
  }
  u.unitary = true;
  return u;
}

Trajectory propagate(const Schedule& s, const StateVector& psi0, int samples_per_segment) {
  if (samples_per_segment < 2)
    fail(ErrorKind::InvalidParams, "samples_per_segment must be at least 2");
  if (psi0.dim != s.dim) fail(ErrorKind::DimensionMismatch, "initial state dimension");
  check_normalized(psi0);

  Trajectory traj;
  traj.dim = s.dim;
  traj.samples_per_segment = samples_per_segment;

  double t = 0.0;
  StateVector psi = psi0;
  traj.times.push_back(t);
  traj.states.push_back(psi);

  for (const Segment& seg : s.segments) {
    traj.segment_first.push_back(static_cast<int>(traj.times.size()));
    if (seg.impulse) {
      // Arc samples at fractions of the rotation, all at the same time.
      for (int k = 1; k <= samples_per_segment; ++k) {
        const double frac = static_cast<double>(k) / samples_per_segment;
        Operator u = rotation_about(seg.axis, seg.angle * frac);
        if (s.dim == 4) u = kron(u, Operator::identity(2));
        traj.times.push_back(t);
        traj.states.push_back(apply(u, psi));
        traj.labels.push_back(seg.label);
      }
      psi = traj.states.back();
      continue;
    }
    if (hermiticity_defect(seg.h) > kHermTol * std::max(1.0, max_abs(seg.h)))
      fail(ErrorKind::NonHermitianSegment, "segment Hamiltonian");
    const EigenSystem es = eig_hermitian(seg.h);
    const StateVector start = psi;
    // psi(dt) = V exp(-i L dt) V^dag start, evaluated independently per
    // sample so errors do not accumulate across sub-steps.
    StateVector coeffs;
    coeffs.dim = s.dim;
    const Operator vdag = adjoint(es.vectors);
    const StateVector proj = apply(vdag, start);
    for (int k = 1; k <= samples_per_segment; ++k) {
      const double dt = seg.duration * static_cast<double>(k) / samples_per_segment;
      for (int i = 0; i < s.dim; ++i)
        coeffs.a[static_cast<size_t>(i)] =
            proj.a[static_cast<size_t>(i)] *
            std::exp(cxd(0.0, -es.values[static_cast<size_t>(i)] * dt));
      traj.times.push_back(t + dt);
      traj.states.push_back(apply(es.vectors, coeffs));
      traj.labels.push_back(seg.label);
    }
    t += seg.duration;
    psi = traj.states.back();
  }

  traj.bloch_a.reserve(traj.states.size());
  if (s.dim == 4) traj.bloch_b.reserve(traj.states.size());
  for (const StateVector& st : traj.states) {
    if (s.dim == 2) {
      traj.bloch_a.push_back(bloch_of(st));
    } else {
      traj.bloch_a.push_back(bloch_of(reduced_density(st, Subsystem::a)));
      traj.bloch_b.push_back(bloch_of(reduced_density(st, Subsystem::b)));
    }
  }
  return traj;
}

Operator integrate_piecewise(const std::function<Operator(double)>& h_of_t, double t_total,
                             int steps) {
  if (steps < 1) fail(ErrorKind::InvalidParams, "integrate_piecewise needs at least one step");
  const double h = t_total / steps;
  Operator u = Operator::identity(h_of_t(0.0).dim);
  for (int k = 0; k < steps; ++k) {
    const double mid = (k + 0.5) * h;
    u = expm_hermitian(h_of_t(mid), h) * u;
  }
  u.unitary = true;
  return u;
}

}  // namespace aa
