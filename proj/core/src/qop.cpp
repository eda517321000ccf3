#include "pathdual/qop.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pathdual/errors.hpp"

namespace pathdual {

namespace {

Eigen::Matrix2cd pauli2(PauliAxis axis) {
  Eigen::Matrix2cd m;
  switch (axis) {
    case PauliAxis::X:
      m << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case PauliAxis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

// Kronecker product; the first factor is atom 1, matching the (++, +-, -+, --)
// basis order.
Matrix4c kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

std::array<Matrix4c, 3> make_pauli_vector(Atom atom) {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  std::array<Matrix4c, 3> s;
  for (int a = 0; a < 3; ++a) {
    const Eigen::Matrix2cd p = pauli2(static_cast<PauliAxis>(a));
    s[a] = (atom == Atom::One) ? kron(p, id) : kron(id, p);
  }
  return s;
}

}  // namespace

Matrix4c pauli(PauliFactor factor) { return pauli(factor.atom, factor.axis); }

Matrix4c pauli(Atom atom, PauliAxis axis) {
  return pauli_vector(atom)[static_cast<int>(axis)];
}

const std::array<Matrix4c, 3>& pauli_vector(Atom atom) {
  static const std::array<Matrix4c, 3> one = make_pauli_vector(Atom::One);
  static const std::array<Matrix4c, 3> two = make_pauli_vector(Atom::Two);
  return atom == Atom::One ? one : two;
}

const Matrix4c& swap_operator() {
  static const Matrix4c s = [] {
    Matrix4c m = Matrix4c::Zero();
    m(0, 0) = m(3, 3) = 1;
    m(1, 2) = m(2, 1) = 1;
    return m;
  }();
  return s;
}

const Matrix4c& sigma_dot_sigma() {
  static const Matrix4c s = [] {
    const auto& s1 = pauli_vector(Atom::One);
    const auto& s2 = pauli_vector(Atom::Two);
    Matrix4c m = Matrix4c::Zero();
    for (int a = 0; a < 3; ++a) m += s1[a] * s2[a];
    return m;
  }();
  return s;
}

const Matrix4c& sigma_difference_component(int axis) {
  static const std::array<Matrix4c, 3> comps = [] {
    const auto& s1 = pauli_vector(Atom::One);
    const auto& s2 = pauli_vector(Atom::Two);
    std::array<Matrix4c, 3> c;
    for (int a = 0; a < 3; ++a) c[a] = s1[a] - s2[a];
    return c;
  }();
  return comps[axis];
}

const Matrix4c& sigma_cross_component(int axis) {
  static const std::array<Matrix4c, 3> comps = [] {
    const auto& s1 = pauli_vector(Atom::One);
    const auto& s2 = pauli_vector(Atom::Two);
    std::array<Matrix4c, 3> c;
    for (int a = 0; a < 3; ++a) {
      const int j = (a + 1) % 3;
      const int k = (a + 2) % 3;
      c[a] = s1[j] * s2[k] - s1[k] * s2[j];
    }
    return c;
  }();
  return comps[axis];
}

double hermiticity_residual(const Matrix4c& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::array<double, 4> hermitian_eigenvalues(const Matrix4c& m) {
  const double resid = hermiticity_residual(m);
  if (resid > kHermitianTol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: residual " << resid << " exceeds " << kHermitianTol;
    throw NotHermitian(msg.str());
  }

  std::array<double, 4> ev;
  bool diagonal = true;
  for (int i = 0; i < 4 && diagonal; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && m(i, j) != Complex(0.0)) {
        diagonal = false;
        break;
      }
  if (diagonal) {
    // the iterative solver rescales and would lose exactness here
    for (int i = 0; i < 4; ++i) ev[i] = m(i, i).real();
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(m, Eigen::EigenvaluesOnly);
    for (int i = 0; i < 4; ++i) ev[i] = solver.eigenvalues()(i);
  }
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  return ev;
}

double trace_norm(const Matrix4c& m) {
  const auto ev = hermitian_eigenvalues(m);
  double sum = 0;
  for (const double lambda : ev) sum += std::abs(lambda);
  return sum;
}

}  // namespace pathdual
