#include "aa/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace aa {

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 4) fail(ErrorKind::InvalidParams, "operator dimension must be 2 or 4");
}

double herm_tol_for(const Operator& a) { return kHermTol * std::max(1.0, max_abs(a)); }

}  // namespace

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonHermitianInput: return "NonHermitianInput";
    case ErrorKind::NonUnitaryInput: return "NonUnitaryInput";
    case ErrorKind::NonHermitianSegment: return "NonHermitianSegment";
    case ErrorKind::NotBlockDiagonal: return "NotBlockDiagonal";
    case ErrorKind::MixedAxes: return "MixedAxes";
    case ErrorKind::NonClosingFrame: return "NonClosingFrame";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::MismatchedTrajectory: return "MismatchedTrajectory";
    case ErrorKind::OpenPath: return "OpenPath";
    case ErrorKind::DegenerateStep: return "DegenerateStep";
    case ErrorKind::InvalidDensity: return "InvalidDensity";
    case ErrorKind::NotXDiagonal: return "NotXDiagonal";
    case ErrorKind::IncompatibleAccounting: return "IncompatibleAccounting";
  }
  return "UnknownError";
}

Vec3 Vec3::normalized() const {
  double n = norm();
  if (n == 0.0) fail(ErrorKind::InvalidParams, "cannot normalize the zero vector");
  return {x / n, y / n, z / n};
}

Operator Operator::zero(int dim) {
  check_dim(dim);
  Operator a;
  a.dim = dim;
  a.hermitian = true;
  return a;
}

Operator Operator::identity(int dim) {
  Operator a = zero(dim);
  for (int i = 0; i < dim; ++i) a.at(i, i) = 1.0;
  a.unitary = true;
  return a;
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.dim != b.dim) fail(ErrorKind::DimensionMismatch, "operator product");
  Operator c = Operator::zero(a.dim);
  c.hermitian = false;
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      const cxd aik = a.at(i, k);
      if (aik == cxd{}) continue;
      for (int j = 0; j < a.dim; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  c.unitary = a.unitary && b.unitary;
  return c;
}

Operator operator+(const Operator& a, const Operator& b) {
  if (a.dim != b.dim) fail(ErrorKind::DimensionMismatch, "operator sum");
  Operator c = a;
  for (int i = 0; i < a.size(); ++i) c.m[i] += b.m[i];
  c.hermitian = a.hermitian && b.hermitian;
  c.unitary = false;
  return c;
}

Operator operator-(const Operator& a, const Operator& b) {
  if (a.dim != b.dim) fail(ErrorKind::DimensionMismatch, "operator difference");
  Operator c = a;
  for (int i = 0; i < a.size(); ++i) c.m[i] -= b.m[i];
  c.hermitian = a.hermitian && b.hermitian;
  c.unitary = false;
  return c;
}

Operator operator*(cxd s, const Operator& a) {
  Operator c = a;
  for (int i = 0; i < a.size(); ++i) c.m[i] *= s;
  c.hermitian = a.hermitian && s.imag() == 0.0;
  c.unitary = false;
  return c;
}

Operator adjoint(const Operator& a) {
  Operator c = Operator::zero(a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) c.at(i, j) = std::conj(a.at(j, i));
  c.hermitian = a.hermitian;
  c.unitary = a.unitary;
  return c;
}

cxd trace(const Operator& a) {
  cxd t = 0.0;
  for (int i = 0; i < a.dim; ++i) t += a.at(i, i);
  return t;
}

double max_abs(const Operator& a) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.m[i]));
  return m;
}

double max_abs_diff(const Operator& a, const Operator& b) {
  if (a.dim != b.dim) fail(ErrorKind::DimensionMismatch, "operator comparison");
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.m[i] - b.m[i]));
  return m;
}

double hermiticity_defect(const Operator& a) {
  double m = 0.0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = i; j < a.dim; ++j)
      m = std::max(m, std::abs(a.at(i, j) - std::conj(a.at(j, i))));
  return m;
}

bool commutes_with(const Operator& a, const Operator& b, double tol) {
  return max_abs_diff(a * b, b * a) <= tol;
}

Operator sigma_x() {
  Operator s = Operator::zero(2);
  s.at(0, 1) = 1.0;
  s.at(1, 0) = 1.0;
  s.hermitian = true;
  s.unitary = true;
  return s;
}

Operator sigma_y() {
  Operator s = Operator::zero(2);
  s.at(0, 1) = cxd(0.0, -1.0);
  s.at(1, 0) = cxd(0.0, 1.0);
  s.hermitian = true;
  s.unitary = true;
  return s;
}

Operator sigma_z() {
  Operator s = Operator::zero(2);
  s.at(0, 0) = 1.0;
  s.at(1, 1) = -1.0;
  s.hermitian = true;
  s.unitary = true;
  return s;
}

Operator pauli_compose(const PauliCoeffs& c) {
  for (double v : {c.a0, c.ax, c.ay, c.az})
    if (!std::isfinite(v)) fail(ErrorKind::InvalidParams, "non-finite Pauli coefficient");
  Operator h = Operator::zero(2);
  h.at(0, 0) = cxd(c.a0 + c.az, 0.0);
  h.at(1, 1) = cxd(c.a0 - c.az, 0.0);
  h.at(0, 1) = cxd(c.ax, -c.ay);
  h.at(1, 0) = cxd(c.ax, c.ay);
  h.hermitian = true;
  return h;
}

PauliCoeffs pauli_decompose(const Operator& h) {
  if (h.dim != 2) fail(ErrorKind::DimensionMismatch, "pauli_decompose needs a 2x2 operator");
  if (hermiticity_defect(h) > herm_tol_for(h))
    fail(ErrorKind::NonHermitianInput, "pauli_decompose needs a hermitian operator");
  PauliCoeffs c;
  c.a0 = 0.5 * (h.at(0, 0).real() + h.at(1, 1).real());
  c.az = 0.5 * (h.at(0, 0).real() - h.at(1, 1).real());
  c.ax = 0.5 * (h.at(0, 1).real() + h.at(1, 0).real());
  c.ay = 0.5 * (h.at(1, 0).imag() - h.at(0, 1).imag());
  return c;
}

Operator expm_pauli(const PauliCoeffs& c, double t) {
  if (!std::isfinite(t)) fail(ErrorKind::InvalidParams, "non-finite time");
  const double r = std::sqrt(c.ax * c.ax + c.ay * c.ay + c.az * c.az);
  const cxd phase = std::exp(cxd(0.0, -c.a0 * t));
  Operator u = Operator::zero(2);
  if (r == 0.0) {
    u.at(0, 0) = phase;
    u.at(1, 1) = phase;
  } else {
    const double ang = r * t;
    const cxd cosp = phase * std::cos(ang);
    const cxd msin = phase * cxd(0.0, -std::sin(ang));
    const double nx = c.ax / r, ny = c.ay / r, nz = c.az / r;
    u.at(0, 0) = cosp + msin * nz;
    u.at(1, 1) = cosp - msin * nz;
    u.at(0, 1) = msin * cxd(nx, -ny);
    u.at(1, 0) = msin * cxd(nx, ny);
  }
  u.unitary = true;
  return u;
}

Operator rotation_about(const Vec3& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-12)
    fail(ErrorKind::InvalidParams, "rotation axis must be a unit vector");
  return expm_pauli({0.0, 0.5 * angle * axis.x, 0.5 * angle * axis.y, 0.5 * angle * axis.z}, 1.0);
}

EigenSystem eig_hermitian(const Operator& h) {
  check_dim(h.dim);
  if (hermiticity_defect(h) > herm_tol_for(h))
    fail(ErrorKind::NonHermitianInput, "eig_hermitian input");
  const int n = h.dim;
  const double thresh = 1e-14 * std::max(1.0, max_abs(h));

  Operator a = h;
  Operator v = Operator::identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a.at(p, q)));
    if (off <= thresh) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cxd apq = a.at(p, q);
        const double mag = std::abs(apq);
        if (mag <= thresh) continue;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double kappa = (app - aqq) / (2.0 * mag);
        double tt;
        if (kappa == 0.0) {
          tt = 1.0;
        } else {
          tt = (kappa > 0.0 ? 1.0 : -1.0) / (std::abs(kappa) + std::sqrt(kappa * kappa + 1.0));
        }
        const double cc = 1.0 / std::sqrt(1.0 + tt * tt);
        const double ss = tt * cc;
        const cxd phase = apq / mag;

        // Plane rotation R: R(p,p)=c, R(p,q)=-s*phase, R(q,p)=s*conj(phase),
        // R(q,q)=c; annihilates a(p,q) in R^dag A R.
        Operator r = Operator::identity(n);
        r.at(p, p) = cc;
        r.at(q, q) = cc;
        r.at(p, q) = -ss * phase;
        r.at(q, p) = ss * std::conj(phase);
        a = adjoint(r) * a * r;
        v = v * r;
      }
    }
  }

  EigenSystem es;
  es.dim = n;
  es.vectors = v;
  es.vectors.unitary = true;
  for (int i = 0; i < n; ++i) es.values[static_cast<size_t>(i)] = a.at(i, i).real();
  return es;
}

Operator expm_hermitian(const Operator& h, double t) {
  if (!std::isfinite(t)) fail(ErrorKind::InvalidParams, "non-finite time");
  const EigenSystem es = eig_hermitian(h);
  Operator d = Operator::zero(h.dim);
  for (int i = 0; i < h.dim; ++i)
    d.at(i, i) = std::exp(cxd(0.0, -es.values[static_cast<size_t>(i)] * t));
  Operator u = es.vectors * d * adjoint(es.vectors);
  u.unitary = true;
  return u;
}

Operator kron(const Operator& a, const Operator& b) {
  if (a.dim != 2 || b.dim != 2) fail(ErrorKind::DimensionMismatch, "kron expects two 2x2 operators");
  Operator c = Operator::zero(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) c.at(2 * i + k, 2 * j + l) = a.at(i, j) * b.at(k, l);
  c.hermitian = a.hermitian && b.hermitian;
  c.unitary = a.unitary && b.unitary;
  return c;
}

double gate_fidelity(const Operator& u, const Operator& v) {
  if (u.dim != v.dim) fail(ErrorKind::DimensionMismatch, "gate_fidelity");
  if (unitarity_defect(u) > kUnitaryTol || unitarity_defect(v) > kUnitaryTol)
    fail(ErrorKind::NonUnitaryInput, "gate_fidelity");
  return std::abs(trace(adjoint(u) * v)) / u.dim;
}

double unitarity_defect(const Operator& u) {
  return max_abs_diff(adjoint(u) * u, Operator::identity(u.dim));
}

}  // namespace aa
