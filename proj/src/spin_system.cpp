#include "aa/spin_system.hpp"

#include <cmath>

namespace aa {

SpinPairParams SpinPairParams::make(double omega_a, double omega_b, double j_coupling) {
  return make(omega_a, omega_b, j_coupling, omega_a - j_coupling);
}

SpinPairParams SpinPairParams::make(double omega_a, double omega_b, double j_coupling,
                                    double frame_freq) {
  SpinPairParams p{omega_a, omega_b, j_coupling, frame_freq};
  p.validate();
  return p;
}

void SpinPairParams::validate() const {
  for (double v : {omega_a, omega_b, j_coupling, frame_freq})
    if (!std::isfinite(v)) fail(ErrorKind::InvalidParams, "non-finite spin pair parameter");
  if (j_coupling <= 0.0) fail(ErrorKind::InvalidParams, "j_coupling must be positive");
  if (omega_a == omega_b) fail(ErrorKind::InvalidParams, "omega_a and omega_b must differ");
}

Operator lab_hamiltonian(const SpinPairParams& p) {
  p.validate();
  const Operator sz = sigma_z();
  const Operator id = Operator::identity(2);
  Operator h = 0.5 * p.omega_a * kron(sz, id) + 0.5 * p.omega_b * kron(id, sz) +
               0.5 * p.j_coupling * kron(sz, sz);
  h.hermitian = true;
  return h;
}

PauliCoeffs conditional_field(const SpinPairParams& p, ControlState b) {
  p.validate();
  const double sign = (b == ControlState::up) ? 1.0 : -1.0;
  return {0.0, 0.0, 0.0, 0.5 * (p.omega_a - p.frame_freq + sign * p.j_coupling)};
}

Operator frame_operator(const Operator& frame_generator, double frame_freq, double t) {
  // exp(+i w G t / 2) == exp(-i G (-w t / 2))
  return expm_hermitian(frame_generator, -0.5 * frame_freq * t);
}

Operator frame_transform(const Operator& h_lab, const Operator& frame_generator,
                         double frame_freq, double t) {
  if (h_lab.dim != frame_generator.dim) fail(ErrorKind::DimensionMismatch, "frame_transform");
  if (hermiticity_defect(h_lab) > kHermTol * std::max(1.0, max_abs(h_lab)))
    fail(ErrorKind::NonHermitianInput, "frame_transform lab Hamiltonian");
  if (hermiticity_defect(frame_generator) > kHermTol * std::max(1.0, max_abs(frame_generator)))
    fail(ErrorKind::NonHermitianInput, "frame_transform generator");

  const Operator r = frame_operator(frame_generator, frame_freq, t);
  Operator h = r * h_lab * adjoint(r) - 0.5 * frame_freq * frame_generator;
  // The conjugation is hermitian up to roundoff; make it exact.
  Operator sym = 0.5 * (h + adjoint(h));
  sym.hermitian = true;
  return sym;
}

std::pair<Operator, Operator> conditional_blocks(const Operator& h) {
  if (h.dim != 4) fail(ErrorKind::DimensionMismatch, "conditional_blocks needs a 4x4 operator");
  const Operator szb = kron(Operator::identity(2), sigma_z());
  if (!commutes_with(h, szb, 1e-12 * std::max(1.0, max_abs(h))))
    fail(ErrorKind::NotBlockDiagonal, "operator does not commute with I(x)sz");

  auto pick = [&h](int r0, int r1) {
    Operator b = Operator::zero(2);
    b.at(0, 0) = h.at(r0, r0);
    b.at(0, 1) = h.at(r0, r1);
    b.at(1, 0) = h.at(r1, r0);
    b.at(1, 1) = h.at(r1, r1);
    b.hermitian = h.hermitian;
    return b;
  };
  return {pick(0, 2), pick(1, 3)};
}

Operator assemble_blocks(const Operator& block_up, const Operator& block_down) {
  if (block_up.dim != 2 || block_down.dim != 2)
    fail(ErrorKind::DimensionMismatch, "assemble_blocks needs 2x2 blocks");
  Operator u = Operator::zero(4);
  u.at(0, 0) = block_up.at(0, 0);
  u.at(0, 2) = block_up.at(0, 1);
  u.at(2, 0) = block_up.at(1, 0);
  u.at(2, 2) = block_up.at(1, 1);
  u.at(1, 1) = block_down.at(0, 0);
  u.at(1, 3) = block_down.at(0, 1);
  u.at(3, 1) = block_down.at(1, 0);
  u.at(3, 3) = block_down.at(1, 1);
  u.hermitian = block_up.hermitian && block_down.hermitian;
  u.unitary = block_up.unitary && block_down.unitary;
  return u;
}

}  // namespace aa
