#include <doctest.h>

#include <cmath>

#include "pathdual/errors.hpp"
#include "pathdual/scattering.hpp"
#include "testutil.hpp"

using namespace pathdual;
using pathdual::test::max_abs_diff;

namespace {

// Independent expansion oracle: explicit 4x4 matrices in the (++, +-, -+, --)
// basis and a local product, with no calls into the library.
using Raw = std::array<std::array<Complex, 4>, 4>;

constexpr Complex kI{0, 1};

Matrix4c from_raw(const Raw& raw) {
  Matrix4c m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = raw[i][j];
  return m;
}

Matrix4c raw_product(const Raw& a, const Raw& b) {
  Matrix4c out = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) out(i, j) += a[i][k] * b[k][j];
  return out;
}

// sigma_x, sigma_y, sigma_z of atom 1 and atom 2, written out entrywise
const Raw kS1x = {{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}};
const Raw kS1y = {{{0, 0, -kI, 0}, {0, 0, 0, -kI}, {kI, 0, 0, 0}, {0, kI, 0, 0}}};
const Raw kS1z = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}};
const Raw kS2x = {{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}};
const Raw kS2y = {{{0, -kI, 0, 0}, {kI, 0, 0, 0}, {0, 0, 0, -kI}, {0, 0, kI, 0}}};
const Raw kS2z = {{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}};

Polarization in_x() { return Polarization(Jones(1, 0), Propagation::PlusZ); }
Polarization out_x() { return Polarization(Jones(1, 0), Propagation::MinusZ); }

Polarization circ_in() {
  const double r = 1 / std::sqrt(2.0);
  return Polarization(Jones(r, Complex(0, r)), Propagation::PlusZ);
}

Polarization circ_out_conj() {
  const double r = 1 / std::sqrt(2.0);
  return Polarization(Jones(r, Complex(0, -r)), Propagation::MinusZ);
}

Polarization circ_out_same() {
  const double r = 1 / std::sqrt(2.0);
  return Polarization(Jones(r, Complex(0, r)), Propagation::MinusZ);
}

}  // namespace

TEST_SUITE("scattering") {

TEST_CASE("initial state family") {
  const InitialState mixed = build_initial_state(0.0);
  CHECK(max_abs_diff(mixed.rho(), (0.25 * Matrix4c::Identity()).eval()) == 0.0);

  const InitialState singlet = build_initial_state(1.0);
  const auto ev_singlet = hermitian_eigenvalues(singlet.rho());
  CHECK(std::abs(ev_singlet[0] - 1.0) <= 1e-14);
  CHECK(std::abs(ev_singlet[1]) <= 1e-14);
  CHECK(std::abs(ev_singlet[2]) <= 1e-14);
  CHECK(std::abs(ev_singlet[3]) <= 1e-14);

  const InitialState triplet = build_initial_state(-1.0 / 3.0);
  const auto ev_triplet = hermitian_eigenvalues(triplet.rho());
  CHECK(std::abs(ev_triplet[0] - 1.0 / 3.0) <= 1e-14);
  CHECK(std::abs(ev_triplet[1] - 1.0 / 3.0) <= 1e-14);
  CHECK(std::abs(ev_triplet[2] - 1.0 / 3.0) <= 1e-14);
  CHECK(std::abs(ev_triplet[3]) <= 1e-14);
}

TEST_CASE("initial state invariants across the p range") {
  for (double p = -1.0 / 3.0; p <= 1.0; p += 1.0 / 7.0) {
    const InitialState state = build_initial_state(p);
    CHECK(hermiticity_residual(state.rho()) == 0.0);
    CHECK(std::abs(state.rho().trace().real() - 1.0) <= 1e-15);
    CHECK(hermitian_eigenvalues(state.rho())[3] >= -1e-12);
    const Matrix4c& s = swap_operator();
    CHECK(max_abs_diff((s * state.rho() * s).eval(), state.rho()) == 0.0);
  }
}

TEST_CASE("initial state rejects p outside [-1/3, 1]") {
  CHECK_THROWS_AS(build_initial_state(1.0 + 1e-6), OutOfRange);
  CHECK_THROWS_AS(build_initial_state(-0.34), OutOfRange);
}

TEST_CASE("path operator frozen value: x in, x analyzed, n along x") {
  // expansion of s2x (s2y s1y + s2z s1z) s1x by the entrywise Pauli oracle
  const Matrix4c middle = raw_product(kS2y, kS1y) + raw_product(kS2z, kS1z);
  const Matrix4c expected = from_raw(kS2x) * middle * from_raw(kS1x);

  Matrix4c frozen;
  frozen << 1, 0, 0, -1,  //
      0, -1, 1, 0,        //
      0, 1, -1, 0,        //
      -1, 0, 0, 1;
  CHECK(max_abs_diff(expected, frozen) == 0.0);

  const Geometry geom{Vector3(1, 0, 0)};
  const Matrix4c built = build_path_operator(Path::A, in_x(), out_x(), geom);
  CHECK(max_abs_diff(built, frozen) <= 1e-15);
}

TEST_CASE("projector form equals cross-product form") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const Polarization in = pathdual::test::random_polarization(rng, Propagation::PlusZ);
    const Polarization out = pathdual::test::random_polarization(rng, Propagation::MinusZ);
    const Geometry geom(pathdual::test::random_direction(rng));
    for (const Path path : {Path::A, Path::B}) {
      const Matrix4c projector = build_path_operator(path, in, out, geom);
      const Matrix4c cross = build_path_operator_cross(path, in, out, geom);
      CHECK(max_abs_diff(projector, cross) <= 1e-13);
    }
  }
}

TEST_CASE("path B is the swap conjugate of path A") {
  std::mt19937_64 rng(47);
  const Matrix4c& s = swap_operator();
  for (int trial = 0; trial < 50; ++trial) {
    const Polarization in = pathdual::test::random_polarization(rng, Propagation::PlusZ);
    const Polarization out = pathdual::test::random_polarization(rng, Propagation::MinusZ);
    const Geometry geom(pathdual::test::random_direction(rng));
    const Matrix4c t_a = build_path_operator(Path::A, in, out, geom);
    const Matrix4c t_b = build_path_operator(Path::B, in, out, geom);
    CHECK(max_abs_diff(t_b, (s * t_a * s).eval()) <= 1e-15);
  }
}

TEST_CASE("path operator is even in n") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const Polarization in = pathdual::test::random_polarization(rng, Propagation::PlusZ);
    const Polarization out = pathdual::test::random_polarization(rng, Propagation::MinusZ);
    const Vector3 n = pathdual::test::random_direction(rng);
    const Matrix4c plus = build_path_operator(Path::A, in, out, Geometry(n));
    const Matrix4c minus = build_path_operator(Path::A, in, out, Geometry(Vector3(-n)));
    CHECK(max_abs_diff(plus, minus) <= 1e-15);
  }
}

TEST_CASE("propagation axes are enforced") {
  const Geometry geom{Vector3(1, 0, 0)};
  CHECK_THROWS_AS(build_path_operator(Path::A, out_x(), out_x(), geom), WrongPropagation);
  CHECK_THROWS_AS(build_path_operator(Path::A, in_x(), in_x(), geom), WrongPropagation);
  CHECK_THROWS_AS(Geometry(Vector3(1, 1, 0)), OutOfRange);
  CHECK(Geometry::direction(Vector3(2, 0, 0)).n() == Vector3(1, 0, 0));
}

TEST_CASE("global polarization phases only rephase the operator") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> angle(0, 2 * 3.14159265358979);
  for (int trial = 0; trial < 20; ++trial) {
    const Polarization in = pathdual::test::random_polarization(rng, Propagation::PlusZ);
    const Polarization out = pathdual::test::random_polarization(rng, Propagation::MinusZ);
    const Geometry geom(pathdual::test::random_direction(rng));
    const Complex phase = std::polar(1.0, angle(rng));
    const Polarization in_rot(Jones(phase * in.jones()), Propagation::PlusZ);

    const Matrix4c t = build_path_operator(Path::A, in, out, geom);
    const Matrix4c t_rot = build_path_operator(Path::A, in_rot, out, geom);
    CHECK(max_abs_diff(t_rot, (phase * t).eval()) <= 1e-14);

    const InitialState state = build_initial_state(0.3);
    CHECK(std::abs(path_weight(t, state) - path_weight(t_rot, state)) <= 1e-13);
  }
}

TEST_CASE("path weights: basics and equality for the symmetric family") {
  const InitialState state = build_initial_state(0.5);
  CHECK(path_weight(Matrix4c::Zero().eval(), state) == 0.0);
  CHECK(std::abs(path_weight(Matrix4c::Identity().eval(), state) - 1.0) <= 1e-15);

  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> p_dist(-1.0 / 3.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const InitialState rho = build_initial_state(p_dist(rng));
    const Polarization in = pathdual::test::random_polarization(rng, Propagation::PlusZ);
    const Polarization out = pathdual::test::random_polarization(rng, Propagation::MinusZ);
    const Geometry geom(pathdual::test::random_direction(rng));
    const PathOperators ops = build_path_operators(in, out, geom);
    const double w_a = path_weight(ops.t_a, rho);
    const double w_b = path_weight(ops.t_b, rho);
    CHECK(std::abs(w_a - w_b) <= 1e-12 * std::max({w_a, w_b, 1.0}));
  }
}

TEST_CASE("swap covariance: conjugating the state exchanges the paths") {
  std::mt19937_64 rng(63);
  const Matrix4c& s = swap_operator();
  for (int trial = 0; trial < 20; ++trial) {
    // a generic (not swap-symmetric) density matrix
    Matrix4c rho = pathdual::test::random_hermitian(rng);
    rho = rho * rho.adjoint();
    rho /= rho.trace().real();
    const Polarization in = pathdual::test::random_polarization(rng, Propagation::PlusZ);
    const Polarization out = pathdual::test::random_polarization(rng, Propagation::MinusZ);
    const Geometry geom(pathdual::test::random_direction(rng));
    const PathOperators ops = build_path_operators(in, out, geom);
    const Matrix4c swapped = s * rho * s;
    CHECK(std::abs(path_weight(ops.t_a, swapped) - path_weight(ops.t_b, rho)) <= 1e-12);
    CHECK(std::abs(path_weight(ops.t_b, swapped) - path_weight(ops.t_a, rho)) <= 1e-12);
  }
}

TEST_CASE("final state: normalization and positivity") {
  const InitialState mixed = build_initial_state(0.0);
  CHECK(max_abs_diff(final_state(Matrix4c::Identity().eval(), mixed),
                     (0.25 * Matrix4c::Identity()).eval()) == 0.0);

  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> p_dist(-1.0 / 3.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const InitialState rho = build_initial_state(p_dist(rng));
    const Polarization in = pathdual::test::random_polarization(rng, Propagation::PlusZ);
    const Polarization out = pathdual::test::random_polarization(rng, Propagation::MinusZ);
    const Geometry geom(pathdual::test::random_direction(rng));
    const Matrix4c t = build_path_operator(Path::A, in, out, geom);
    if (path_weight(t, rho) <= kWeightTol) continue;
    const Matrix4c conditional = final_state(t, rho);
    CHECK(std::abs(conditional.trace().real() - 1.0) <= 1e-12);
    CHECK(hermiticity_residual(conditional) <= 1e-12);
    CHECK(hermitian_eigenvalues(conditional)[3] >= -1e-10);
  }
}

TEST_CASE("singlet with circular analyzed output ends in a definite product state") {
  const InitialState singlet = build_initial_state(1.0);
  const Geometry geom{Vector3(1, 0, 0)};

  // analyzed (x - iy)/sqrt(2): path A leaves (m1, m2) = (-1/2, +1/2)
  Matrix4c minus_plus = Matrix4c::Zero();
  minus_plus(2, 2) = 1.0;
  // analyzed (x + iy)/sqrt(2): path A leaves (m1, m2) = (+1/2, -1/2)
  Matrix4c plus_minus = Matrix4c::Zero();
  plus_minus(1, 1) = 1.0;

  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const Polarization in = pathdual::test::random_polarization(rng, Propagation::PlusZ);

    const Matrix4c t_conj = build_path_operator(Path::A, in, circ_out_conj(), geom);
    CHECK(max_abs_diff(final_state(t_conj, singlet), minus_plus) <= 1e-12);

    const Matrix4c t_same = build_path_operator(Path::A, in, circ_out_same(), geom);
    CHECK(max_abs_diff(final_state(t_same, singlet), plus_minus) <= 1e-12);

    // path B ends in the opposite product state
    const Matrix4c t_b = build_path_operator(Path::B, in, circ_out_conj(), geom);
    CHECK(max_abs_diff(final_state(t_b, singlet), plus_minus) <= 1e-12);
  }
}

TEST_CASE("dark channel raises ZeroWeight") {
  const InitialState mixed = build_initial_state(0.0);
  CHECK_THROWS_AS(final_state(Matrix4c::Zero().eval(), mixed), ZeroWeight);

  // singlet + helicity-preserving pair with n on the optical axis is exactly dark
  const InitialState singlet = build_initial_state(1.0);
  const Geometry axis{Vector3(0, 0, 1)};
  const Matrix4c t = build_path_operator(Path::A, circ_in(), circ_out_conj(), axis);
  CHECK(path_weight(t, singlet) <= kWeightTol);
  CHECK_THROWS_AS(final_state(t, singlet), ZeroWeight);
}

}  // TEST_SUITE
