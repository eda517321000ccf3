#include <doctest.h>

#include <cmath>

#include "pathdual/errors.hpp"
#include "pathdual/qop.hpp"
#include "testutil.hpp"

using namespace pathdual;
using pathdual::test::max_abs_diff;

namespace {

Matrix4c diag(double a, double b, double c, double d) {
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

}  // namespace

TEST_SUITE("qop") {

TEST_CASE("pauli matrices in the product basis") {
  CHECK(max_abs_diff(pauli(Atom::One, PauliAxis::Z), diag(1, 1, -1, -1)) == 0.0);
  CHECK(max_abs_diff(pauli(Atom::Two, PauliAxis::Z), diag(1, -1, 1, -1)) == 0.0);
  CHECK(max_abs_diff(pauli({Atom::One, PauliAxis::X}), pauli(Atom::One, PauliAxis::X)) == 0.0);
}

TEST_CASE("pauli algebra: s_i s_j = d_ij + i e_ijk s_k, per atom") {
  for (const Atom atom : {Atom::One, Atom::Two}) {
    const auto& s = pauli_vector(atom);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Matrix4c expected = Matrix4c::Zero();
        if (i == j) {
          expected = Matrix4c::Identity();
        } else {
          const int k = 3 - i - j;
          const double sign = ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;  // cyclic (i,j,k)
          expected = Complex(0, sign) * s[k];
        }
        CHECK(max_abs_diff(s[i] * s[j], expected) == 0.0);
      }
    }
  }
}

TEST_CASE("operators on different atoms commute exactly") {
  const auto& s1 = pauli_vector(Atom::One);
  const auto& s2 = pauli_vector(Atom::Two);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(max_abs_diff(s1[i] * s2[j], s2[j] * s1[i]) == 0.0);
}

TEST_CASE("identity, adjoint and trace basics") {
  std::mt19937_64 rng(11);
  const Matrix4c m = pathdual::test::random_matrix(rng);
  CHECK(max_abs_diff(Matrix4c::Identity() * m, m) == 0.0);
  CHECK(max_abs_diff(m.adjoint().adjoint().eval(), m) == 0.0);

  const Matrix4c sy = pauli(Atom::One, PauliAxis::Y);
  CHECK(max_abs_diff(sy.adjoint().eval(), sy) == 0.0);
  const Matrix4c ii = Complex(0, 1) * Matrix4c::Identity();
  CHECK(max_abs_diff(ii.adjoint().eval(), (Complex(0, -1) * Matrix4c::Identity()).eval()) == 0.0);

  CHECK(Matrix4c::Identity().trace() == Complex(4.0));
  CHECK(pauli(Atom::One, PauliAxis::Z).trace() == Complex(0.0));
  const Matrix4c sx = pauli(Atom::One, PauliAxis::X);
  CHECK((sx * sx).trace() == Complex(4.0));
}

TEST_CASE("swap operator exchanges the atoms") {
  const Matrix4c& s = swap_operator();
  for (int i = 0; i < 3; ++i) {
    const Matrix4c lhs = s * pauli_vector(Atom::One)[i] * s;
    CHECK(max_abs_diff(lhs, pauli_vector(Atom::Two)[i]) == 0.0);
  }
}

TEST_CASE("hermitian_eigenvalues is exact for diagonal input") {
  const auto ev = hermitian_eigenvalues(diag(1, 2, 3, 4));
  CHECK(ev[0] == 4.0);
  CHECK(ev[1] == 3.0);
  CHECK(ev[2] == 2.0);
  CHECK(ev[3] == 1.0);
}

TEST_CASE("hermitian_eigenvalues: sigma_x spectrum doubled by the tensor identity") {
  const auto ev = hermitian_eigenvalues(pauli(Atom::One, PauliAxis::X));
  CHECK(std::abs(ev[0] - 1) <= 1e-12);
  CHECK(std::abs(ev[1] - 1) <= 1e-12);
  CHECK(std::abs(ev[2] + 1) <= 1e-12);
  CHECK(std::abs(ev[3] + 1) <= 1e-12);
}

TEST_CASE("a.(s1-s2) + b.(s1 x s2) has spectrum (2r, 0, 0, -2r)") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 50; ++trial) {
    const Vector3 a(gauss(rng), gauss(rng), gauss(rng));
    const Vector3 b(gauss(rng), gauss(rng), gauss(rng));
    Matrix4c m = Matrix4c::Zero();
    for (int i = 0; i < 3; ++i) {
      m += a(i) * sigma_difference_component(i);
      m += b(i) * sigma_cross_component(i);
    }
    const double r = std::sqrt(a.squaredNorm() + b.squaredNorm());
    const auto ev = hermitian_eigenvalues(m);
    CHECK(std::abs(ev[0] - 2 * r) <= 1e-12 * (1 + 2 * r));
    CHECK(std::abs(ev[1]) <= 1e-12 * (1 + 2 * r));
    CHECK(std::abs(ev[2]) <= 1e-12 * (1 + 2 * r));
    CHECK(std::abs(ev[3] + 2 * r) <= 1e-12 * (1 + 2 * r));
  }
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input") {
  Matrix4c m = Matrix4c::Zero();
  m(0, 1) = 1.0;  // strictly upper triangular, far from Hermitian
  CHECK_THROWS_AS(hermitian_eigenvalues(m), NotHermitian);
  CHECK_THROWS_AS(trace_norm(m), NotHermitian);
}

TEST_CASE("trace_norm basics") {
  CHECK(trace_norm(Matrix4c::Identity()) == 4.0);
  CHECK(trace_norm(diag(1, -1, 0, 0)) == 2.0);
}

TEST_CASE("trace_norm absolute homogeneity") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix4c h = pathdual::test::random_hermitian(rng);
    const double c = gauss(rng);
    const double lhs = trace_norm((c * h).eval());
    const double rhs = std::abs(c) * trace_norm(h);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1 + rhs));
  }
}

TEST_CASE("trace_norm equals the singular value sum for Hermitian matrices") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix4c h = pathdual::test::random_hermitian(rng);
    const Eigen::JacobiSVD<Matrix4c> svd(h);
    const double sv_sum = svd.singularValues().sum();
    CHECK(std::abs(trace_norm(h) - sv_sum) <= 1e-12 * (1 + sv_sum));
  }
}

TEST_CASE("eigenvalues sum to the trace") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix4c h = pathdual::test::random_hermitian(rng);
    const auto ev = hermitian_eigenvalues(h);
    const double sum = ev[0] + ev[1] + ev[2] + ev[3];
    CHECK(std::abs(sum - h.trace().real()) <= 1e-12);
  }
}

}  // TEST_SUITE
