#pragma once

#include <utility>

#include "aa/linalg.hpp"

namespace aa {

// sigma_z eigenstate of the control spin b; sigma_z|up> = +|up>.
enum class ControlState { up, down };

// Physical constants of the coupled spin pair, all in rad/s. frame_freq is
// the rotating-frame frequency omega_a' and defaults to omega_a - J, the
// choice that makes the b=down conditional field vanish exactly.
struct SpinPairParams {
  double omega_a = 0.0;
  double omega_b = 0.0;
  double j_coupling = 0.0;
  double frame_freq = 0.0;

  static SpinPairParams make(double omega_a, double omega_b, double j_coupling);
  static SpinPairParams make(double omega_a, double omega_b, double j_coupling,
                             double frame_freq);
  void validate() const;  // InvalidParams
};

// H_i = (omega_a sz(x)I + omega_b I(x)sz + J sz(x)sz)/2 in the product basis
// (up,up), (up,down), (down,up), (down,down) with qubit a leftmost.
Operator lab_hamiltonian(const SpinPairParams& p);

// Rotating-frame generator coefficients seen by qubit a when the control is
// locked in state b: az = (omega_a - frame_freq +/- J)/2, nothing else.
PauliCoeffs conditional_field(const SpinPairParams& p, ControlState b);

// R' H R'^{-1} + i (dR'/dt) R'^{-1} with R' = exp(+i frame_freq * G * t / 2).
// For generators commuting with H the result is time independent.
Operator frame_transform(const Operator& h_lab, const Operator& frame_generator,
                         double frame_freq, double t);

// The frame operator R'(t) itself.
Operator frame_operator(const Operator& frame_generator, double frame_freq, double t);

// Splits a 4x4 operator commuting with I(x)sz into its qubit-a blocks:
// first the b=up block (rows/cols {0,2}), then b=down ({1,3}).
std::pair<Operator, Operator> conditional_blocks(const Operator& h);

// Inverse of conditional_blocks.
Operator assemble_blocks(const Operator& block_up, const Operator& block_down);

}  // namespace aa
