#include "aa/pulses.hpp"

#include "aa/evolution.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace aa;

namespace {
const SpinPairParams kParams = SpinPairParams::make(500.0, 300.0, 1.0);
}

TEST_CASE("aa_cnot_sequence structure") {
  const double theta = 0.25 * kPi;
  const PulseSequence seq = aa_cnot_sequence(theta, kParams);

  REQUIRE(seq.events.size() == 5);
  CHECK(seq.events[0].kind == PulseEvent::Kind::rotation);
  CHECK(seq.events[1].kind == PulseEvent::Kind::delay);
  CHECK(seq.events[2].kind == PulseEvent::Kind::rotation);
  CHECK(seq.events[3].kind == PulseEvent::Kind::delay);
  CHECK(seq.events[4].kind == PulseEvent::Kind::rotation);

  // theta = pi/4, J = 1: angles (-pi/4, -pi/2, 3pi/4), tau = pi/2.
  CHECK(seq.events[0].angle == doctest::Approx(-kPi / 4).epsilon(1e-15));
  CHECK(seq.events[2].angle == doctest::Approx(-kPi / 2).epsilon(1e-15));
  CHECK(seq.events[4].angle == doctest::Approx(3 * kPi / 4).epsilon(1e-15));
  CHECK(seq.tau == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(seq.events[1].duration == seq.tau);

  // theta = 0 endpoint: angles (0, -pi, pi).
  const PulseSequence z = aa_cnot_sequence(0.0, kParams);
  CHECK(z.events[0].angle == 0.0);
  CHECK(z.events[2].angle == -kPi);
  CHECK(z.events[4].angle == kPi);

  CHECK_THROWS_AS(aa_cnot_sequence(-0.1, kParams), SimError);
  CHECK_THROWS_AS(aa_cnot_sequence(0.5 * kPi, kParams), SimError);
}

TEST_CASE("net_rotation_angle") {
  for (double theta : {0.0, kPi / 8, kPi / 6, kPi / 4, 3 * kPi / 8}) {
    CHECK(std::abs(net_rotation_angle(aa_cnot_sequence(theta, kParams))) <= 1e-15);
  }

  PulseSequence single;
  single.events = {PulseEvent::rotation({1, 0, 0}, -0.4, PulseModel::instantaneous())};
  CHECK(net_rotation_angle(single) == -0.4);

  // Perturbed closing angle shows up as the signed sum.
  const double eps = 1e-3;
  PulseSequence bent = aa_cnot_sequence(0.3, kParams);
  bent.events[4].angle += eps;
  CHECK(net_rotation_angle(bent) == doctest::Approx(eps).epsilon(1e-9));

  PulseSequence mixed = aa_cnot_sequence(0.3, kParams);
  mixed.events[2] = PulseEvent::rotation({0, 1, 0}, 0.1, PulseModel::instantaneous());
  CHECK_THROWS_AS(net_rotation_angle(mixed), SimError);
}

TEST_CASE("realize_rotating layouts") {
  const double theta = 0.25 * kPi;
  const PulseSequence seq = aa_cnot_sequence(theta, kParams);

  // Down branch: free segments carry the zero Hamiltonian.
  const Schedule down = realize_rotating(seq, kParams, ControlState::down);
  REQUIRE(down.segments.size() == 5);
  CHECK(max_abs(down.segments[1].h) == 0.0);
  CHECK(max_abs(down.segments[3].h) == 0.0);
  CHECK(down.segments[0].impulse);
  CHECK(down.segments[0].label == SegmentLabel::pulse);

  // Up branch: free segments carry J sz for tau = pi/(2J).
  const Schedule up = realize_rotating(seq, kParams, ControlState::up);
  CHECK(max_abs_diff(up.segments[1].h, kParams.j_coupling * sigma_z()) == 0.0);
  CHECK(up.segments[1].duration == seq.tau);
  CHECK(up.segments[1].label == SegmentLabel::free_evolution);

  // Total free time is always 2 tau = pi / J.
  double free_time = 0.0;
  for (const Segment& s : up.segments)
    if (s.label == SegmentLabel::free_evolution) free_time += s.duration;
  CHECK(free_time == doctest::Approx(kPi / kParams.j_coupling).epsilon(1e-15));

  // Hard pulses: durations |angle| / rf with the conditional field still on.
  const double rf = 100.0 * kParams.j_coupling;
  const Schedule hard =
      realize_rotating(aa_cnot_sequence(theta, kParams, PulseModel::hard(rf)), kParams,
                       ControlState::up);
  CHECK(hard.segments[0].duration == doctest::Approx((kPi / 4) / rf).epsilon(1e-15));
  CHECK(hard.segments[2].duration == doctest::Approx((kPi / 2) / rf).epsilon(1e-15));
  CHECK(hard.segments[4].duration == doctest::Approx((3 * kPi / 4) / rf).epsilon(1e-15));
  // Drive sign follows the angle sign: first pulse is negative.
  const PauliCoeffs c0 = pauli_decompose(hard.segments[0].h);
  CHECK(c0.ax == doctest::Approx(-0.5 * rf).epsilon(1e-15));
  CHECK(c0.az == doctest::Approx(kParams.j_coupling).epsilon(1e-15));
  const PauliCoeffs c4 = pauli_decompose(hard.segments[4].h);
  CHECK(c4.ax == doctest::Approx(0.5 * rf).epsilon(1e-15));
}

TEST_CASE("realize_control_frame axes against the 3x3 rotation oracle") {
  for (double theta : {0.0, kPi / 8, kPi / 6, kPi / 4, 3 * kPi / 8}) {
    const PulseSequence seq = aa_cnot_sequence(theta, kParams);
    const Schedule ctrl = realize_control_frame(seq, kParams, ControlState::up);
    REQUIRE(ctrl.segments.size() == 2);

    // Oracle: z dragged backwards through the pulses applied so far.
    const oracle::V3 x{1, 0, 0}, z{0, 0, 1};
    const oracle::Mat3 inv1 = oracle::rot3(x, theta);           // inverse of -theta about x
    const oracle::Mat3 inv2 = oracle::rot3(x, kPi - theta);     // inverse of cumulative
    const oracle::V3 z1 = oracle::apply3(inv1, z);
    const oracle::V3 z2 = oracle::apply3(inv2, z);

    const PauliCoeffs c1 = pauli_decompose(ctrl.segments[0].h);
    const PauliCoeffs c2 = pauli_decompose(ctrl.segments[1].h);
    const double j = kParams.j_coupling;
    CHECK(std::abs(c1.ax - j * z1.x) <= 1e-14);
    CHECK(std::abs(c1.ay - j * z1.y) <= 1e-14);
    CHECK(std::abs(c1.az - j * z1.z) <= 1e-14);
    CHECK(std::abs(c2.ax - j * z2.x) <= 1e-14);
    CHECK(std::abs(c2.ay - j * z2.y) <= 1e-14);
    CHECK(std::abs(c2.az - j * z2.z) <= 1e-14);
    CHECK(c1.a0 == 0.0);

    // Both tilted axes live in the y-z plane at theta and pi-theta from z.
    CHECK(std::abs(z1.z - std::cos(theta)) <= 1e-15);
    CHECK(std::abs(z2.z - std::cos(kPi - theta)) <= 1e-15);
  }

  // Down branch precesses about nothing.
  const Schedule down =
      realize_control_frame(aa_cnot_sequence(0.4, kParams), kParams, ControlState::down);
  CHECK(max_abs(down.segments[0].h) == 0.0);
  CHECK(max_abs(down.segments[1].h) == 0.0);

  // Hard pulses cannot be folded into the frame.
  CHECK_THROWS_AS(realize_control_frame(aa_cnot_sequence(0.4, kParams, PulseModel::hard(50.0)),
                                        kParams, ControlState::up),
                  SimError);

  // A non-closing pulse product is rejected.
  PulseSequence bent = aa_cnot_sequence(0.4, kParams);
  bent.events[4].angle += 1e-3;
  CHECK_THROWS_AS(realize_control_frame(bent, kParams, ControlState::up), SimError);
}

TEST_CASE("control frame and rotating frame give the same propagator") {
  for (double theta : {0.0, kPi / 8, kPi / 6, kPi / 4, 3 * kPi / 8}) {
    for (ControlState b : {ControlState::up, ControlState::down}) {
      const PulseSequence seq = aa_cnot_sequence(theta, kParams);
      const Operator u_rot = total_propagator(realize_rotating(seq, kParams, b));
      const Operator u_ctl = total_propagator(realize_control_frame(seq, kParams, b));
      CHECK(max_abs_diff(u_rot, u_ctl) <= 1e-9);
    }
  }
}

TEST_CASE("hard pulses converge to instantaneous pulses") {
  const double theta = kPi / 6;
  const Operator u_inst =
      total_propagator(realize_rotating(aa_cnot_sequence(theta, kParams), kParams,
                                        ControlState::up));
  double prev = 1e9;
  for (double ratio : {10.0, 1e2, 1e3, 1e4}) {
    const double rf = ratio * kParams.j_coupling;
    const Operator u_hard = total_propagator(realize_rotating(
        aa_cnot_sequence(theta, kParams, PulseModel::hard(rf)), kParams, ControlState::up));
    const double err = max_abs_diff(u_hard, u_inst);
    CHECK(err < 0.5 * prev);
    // O(J/rf): the scaled error stays bounded.
    CHECK(err * rf / kParams.j_coupling < 5.0);
    prev = err;
  }
  CHECK(prev <= 5e-4);  // at rf = 1e4 J
}
