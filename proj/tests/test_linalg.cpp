#include "aa/linalg.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace aa;

namespace {

double diff_vs_oracle(const Operator& a, const oracle::Mat2& m) {
  double d = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a.at(i, j) - m[i][j]));
  return d;
}

Operator random_hermitian(int dim, std::mt19937& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Operator h = Operator::zero(dim);
  for (int i = 0; i < dim; ++i) {
    h.at(i, i) = u(rng);
    for (int j = i + 1; j < dim; ++j) {
      const cxd z(u(rng), u(rng));
      h.at(i, j) = z;
      h.at(j, i) = std::conj(z);
    }
  }
  h.hermitian = true;
  return h;
}

}  // namespace

TEST_CASE("pauli_compose basics") {
  CHECK(max_abs(pauli_compose({0, 0, 0, 0})) == 0.0);

  const double j = 2.5;
  const Operator h = pauli_compose({0, 0, 0, j});
  CHECK(h.at(0, 0) == cxd(j, 0));
  CHECK(h.at(1, 1) == cxd(-j, 0));
  CHECK(h.at(0, 1) == cxd(0, 0));

  // Entrywise oracle on a mixed-component case.
  const Operator g = pauli_compose({0, 1, 1, 0});
  CHECK(diff_vs_oracle(g, oracle::pauli_combination(0, 1, 1, 0)) == 0.0);
  CHECK(g.hermitian);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int rep = 0; rep < 20; ++rep) {
    const double a0 = u(rng), ax = u(rng), ay = u(rng), az = u(rng);
    CHECK(diff_vs_oracle(pauli_compose({a0, ax, ay, az}),
                         oracle::pauli_combination(a0, ax, ay, az)) == 0.0);
  }

  CHECK_THROWS_AS(pauli_compose({std::nan(""), 0, 0, 0}), SimError);
}

TEST_CASE("pauli_decompose inverts pauli_compose") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int rep = 0; rep < 20; ++rep) {
    const PauliCoeffs c{u(rng), u(rng), u(rng), u(rng)};
    const PauliCoeffs d = pauli_decompose(pauli_compose(c));
    CHECK(std::abs(c.a0 - d.a0) <= 1e-14);
    CHECK(std::abs(c.ax - d.ax) <= 1e-14);
    CHECK(std::abs(c.ay - d.ay) <= 1e-14);
    CHECK(std::abs(c.az - d.az) <= 1e-14);
  }
}

TEST_CASE("expm_pauli closed forms") {
  const double j = 1.7;
  // exp(-i J sz pi/(2J)) = diag(-i, i)
  const Operator u = expm_pauli({0, 0, 0, j}, kPi / (2.0 * j));
  CHECK(std::abs(u.at(0, 0) - cxd(0, -1)) <= 1e-15);
  CHECK(std::abs(u.at(1, 1) - cxd(0, 1)) <= 1e-15);
  CHECK(std::abs(u.at(0, 1)) == 0.0);

  // zero generator
  const Operator id = expm_pauli({0, 0, 0, 0}, 3.21);
  CHECK(max_abs_diff(id, Operator::identity(2)) == 0.0);

  // pi pulse about x: exp(-i (W/2) sx (pi/W)) = -i sx
  const double w = 4.0;
  const Operator px = expm_pauli({0, 0.5 * w, 0, 0}, kPi / w);
  CHECK(std::abs(px.at(0, 1) - cxd(0, -1)) <= 1e-15);
  CHECK(std::abs(px.at(1, 0) - cxd(0, -1)) <= 1e-15);
  CHECK(std::abs(px.at(0, 0)) <= 1e-16);

  // pure a0 is a global phase
  const Operator ph = expm_pauli({2.0, 0, 0, 0}, 0.25);
  CHECK(std::abs(ph.at(0, 0) - std::exp(cxd(0, -0.5))) <= 1e-15);
}

TEST_CASE("expm_hermitian diagonal and coupling closed forms") {
  Operator h = Operator::zero(4);
  h.at(0, 0) = 1.0;
  h.at(1, 1) = -2.0;
  h.at(2, 2) = 0.5;
  h.at(3, 3) = 3.0;
  h.hermitian = true;
  const double t = 0.8;
  const Operator u = expm_hermitian(h, t);
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(u.at(i, i) - std::exp(cxd(0, -h.at(i, i).real() * t))) <= 1e-14);

  // (J/2) sz(x)sz over pi/(2J): diag(e^{-i pi/4}, e^{i pi/4}, e^{i pi/4}, e^{-i pi/4})
  const double j = 0.3;
  Operator hc = 0.5 * j * kron(sigma_z(), sigma_z());
  const Operator uc = expm_hermitian(hc, kPi / (2.0 * j));
  const cxd em = std::exp(cxd(0, -kPi / 4));
  const cxd ep = std::exp(cxd(0, kPi / 4));
  CHECK(std::abs(uc.at(0, 0) - em) <= 1e-14);
  CHECK(std::abs(uc.at(1, 1) - ep) <= 1e-14);
  CHECK(std::abs(uc.at(2, 2) - ep) <= 1e-14);
  CHECK(std::abs(uc.at(3, 3) - em) <= 1e-14);

  CHECK(max_abs_diff(expm_hermitian(Operator::zero(4), 2.0), Operator::identity(4)) == 0.0);

  Operator bad = Operator::zero(2);
  bad.at(0, 1) = 1.0;  // not hermitian
  CHECK_THROWS_AS(expm_hermitian(bad, 1.0), SimError);
}

TEST_CASE("expm_pauli and expm_hermitian agree on 2x2 hermitians") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int rep = 0; rep < 30; ++rep) {
    const PauliCoeffs c{u(rng), u(rng), u(rng), u(rng)};
    const double t = u(rng);
    const Operator a = expm_pauli(c, t);
    const Operator b = expm_hermitian(pauli_compose(c), t);
    CHECK(max_abs_diff(a, b) <= 1e-12);
  }
}

TEST_CASE("semigroup and unitarity of exponentials") {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    for (int dim : {2, 4}) {
      const Operator h = random_hermitian(dim, rng);
      std::uniform_real_distribution<double> u(-2.0, 2.0);
      const double t1 = u(rng), t2 = u(rng);
      const Operator u1 = expm_hermitian(h, t1);
      const Operator u2 = expm_hermitian(h, t2);
      const Operator u12 = expm_hermitian(h, t1 + t2);
      CHECK(max_abs_diff(u1 * u2, u12) <= 1e-12);
      CHECK(unitarity_defect(u1) <= 1e-12);
      CHECK(unitarity_defect(u12) <= 1e-12);
    }
  }
}

TEST_CASE("eig_hermitian reconstructs the input") {
  std::mt19937 rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    const Operator h = random_hermitian(4, rng, 3.0);
    const EigenSystem es = eig_hermitian(h);
    Operator d = Operator::zero(4);
    for (int i = 0; i < 4; ++i) d.at(i, i) = es.values[static_cast<size_t>(i)];
    CHECK(max_abs_diff(es.vectors * d * adjoint(es.vectors), h) <= 1e-12);
    CHECK(unitarity_defect(es.vectors) <= 1e-13);
  }
  // Degenerate spectrum
  Operator h = Operator::identity(4);
  h.hermitian = true;
  const EigenSystem es = eig_hermitian(h);
  for (int i = 0; i < 4; ++i) CHECK(es.values[static_cast<size_t>(i)] == 1.0);
}

TEST_CASE("kron conventions") {
  const Operator id = Operator::identity(2);
  CHECK(max_abs_diff(kron(id, id), Operator::identity(4)) == 0.0);

  const Operator zz = kron(sigma_z(), sigma_z());
  CHECK(zz.at(0, 0) == cxd(1, 0));
  CHECK(zz.at(1, 1) == cxd(-1, 0));
  CHECK(zz.at(2, 2) == cxd(-1, 0));
  CHECK(zz.at(3, 3) == cxd(1, 0));

  // sx (x) I swaps the a qubit: entries (0,2),(1,3),(2,0),(3,1) are one.
  const Operator xi = kron(sigma_x(), id);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool hit = (i == 0 && j == 2) || (i == 1 && j == 3) || (i == 2 && j == 0) ||
                       (i == 3 && j == 1);
      CHECK(xi.at(i, j) == (hit ? cxd(1, 0) : cxd(0, 0)));
    }

  // Mixed-product property
  std::mt19937 rng(23);
  const Operator a = random_hermitian(2, rng), b = random_hermitian(2, rng);
  const Operator c = random_hermitian(2, rng), d = random_hermitian(2, rng);
  CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) <= 1e-12);
}

TEST_CASE("gate_fidelity") {
  const Operator id4 = Operator::identity(4);
  CHECK(gate_fidelity(id4, id4) == 1.0);
  CHECK(gate_fidelity(id4, kron(sigma_x(), Operator::identity(2))) == 0.0);
  const cxd phase = std::exp(cxd(0, 1.234));
  Operator rotated = phase * id4;
  rotated.unitary = true;
  CHECK(std::abs(gate_fidelity(id4, rotated) - 1.0) <= 1e-15);

  CHECK_THROWS_AS(gate_fidelity(id4, Operator::identity(2)), SimError);
  Operator not_unitary = 2.0 * id4;
  CHECK_THROWS_AS(gate_fidelity(id4, not_unitary), SimError);
}

TEST_CASE("unitarity_defect") {
  CHECK(unitarity_defect(Operator::identity(4)) == 0.0);
  const Operator doubled = 2.0 * Operator::identity(2);
  CHECK(unitarity_defect(doubled) == 3.0);
  std::mt19937 rng(29);
  const Operator u = expm_hermitian(random_hermitian(4, rng), 1.3);
  CHECK(unitarity_defect(u) <= 1e-12);
}

TEST_CASE("rotation_about matches the x-rotation oracle") {
  for (double angle : {-2.1, -0.5, 0.0, 0.7853981633974483, 3.0}) {
    const Operator r = rotation_about({1, 0, 0}, angle);
    CHECK(diff_vs_oracle(r, oracle::rx(angle)) <= 1e-15);
  }
  CHECK_THROWS_AS(rotation_about({1, 1, 0}, 0.3), SimError);
}
