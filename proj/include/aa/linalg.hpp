#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "aa/errors.hpp"

namespace aa {

using cxd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Max-norm thresholds. Hermiticity/unitarity checks scale the absolute
// tolerance by max(1, |A|_max) so that operators built from large rad/s
// frequencies are not rejected on roundoff.
inline constexpr double kHermTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-9;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  Vec3 normalized() const;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Coefficients of a single-qubit generator H = a0*I + ax*sx + ay*sy + az*sz,
// everything in rad/s.
struct PauliCoeffs {
  double a0 = 0.0, ax = 0.0, ay = 0.0, az = 0.0;
};

// Dense complex square matrix of dimension 2 or 4, row-major.
// The hermitian/unitary flags record what the constructing operation
// guarantees; checked accessors re-verify numerically where it matters.
struct Operator {
  int dim = 2;
  std::array<cxd, 16> m{};
  bool hermitian = false;
  bool unitary = false;

  static Operator zero(int dim);
  static Operator identity(int dim);

  cxd& at(int i, int j) { return m[static_cast<size_t>(i) * dim + j]; }
  const cxd& at(int i, int j) const { return m[static_cast<size_t>(i) * dim + j]; }
  int size() const { return dim * dim; }
};

Operator operator*(const Operator& a, const Operator& b);
Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(cxd s, const Operator& a);
Operator adjoint(const Operator& a);
cxd trace(const Operator& a);

double max_abs(const Operator& a);
double max_abs_diff(const Operator& a, const Operator& b);
double hermiticity_defect(const Operator& a);
bool commutes_with(const Operator& a, const Operator& b, double tol);

Operator sigma_x();
Operator sigma_y();
Operator sigma_z();

// a0*I + ax*sx + ay*sy + az*sz; hermitian flag set.
Operator pauli_compose(const PauliCoeffs& c);
// Inverse of pauli_compose for 2x2 hermitian operators.
PauliCoeffs pauli_decompose(const Operator& h);

// exp(-i (a0*I + a.sigma) t) in closed form; |a| = 0 falls back to the pure
// phase e^{-i a0 t} I.
Operator expm_pauli(const PauliCoeffs& c, double t);

// exp(-i angle (axis.sigma)/2): the rotation the pulse notation (angle)^axis
// denotes throughout this repo.
Operator rotation_about(const Vec3& axis, double angle);

struct EigenSystem {
  int dim = 2;
  std::array<double, 4> values{};
  Operator vectors;  // columns are the eigenvectors
};

// Cyclic Jacobi on a hermitian matrix; off-diagonal threshold 1e-14 relative
// to the largest input magnitude, at most 100 sweeps. Degenerate spectra are
// fine: only the spectral decomposition as a whole is used downstream.
EigenSystem eig_hermitian(const Operator& h);

// exp(-i H t) through the eigendecomposition; unitary within 1e-12.
Operator expm_hermitian(const Operator& h, double t);

// Tensor product with qubit a as the left factor.
Operator kron(const Operator& a, const Operator& b);

// |Tr(U^dag V)| / dim, blind to global phase.
double gate_fidelity(const Operator& u, const Operator& v);

// Max-norm of U^dag U - I.
double unitarity_defect(const Operator& u);

}  // namespace aa
