#include "pathdual/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pathdual/errors.hpp"

namespace pathdual {

namespace {

constexpr double kPRangeSlack = 1e-12;

Matrix4c jones_dot(Atom atom, const Jones& j) {
  const auto& s = pauli_vector(atom);
  return j(0) * s[0] + j(1) * s[1];
}

Matrix4c vector_dot(Atom atom, const Vector3& v) {
  const auto& s = pauli_vector(atom);
  return v(0) * s[0] + v(1) * s[1] + v(2) * s[2];
}

void require_backscattering(const Polarization& eps_in, const Polarization& eps_out) {
  if (eps_in.propagation() != Propagation::PlusZ)
    throw WrongPropagation("incoming polarization must propagate along +z");
  if (eps_out.propagation() != Propagation::MinusZ)
    throw WrongPropagation("outgoing polarization must propagate along -z");
}

std::pair<Atom, Atom> scattering_order(Path path) {
  return path == Path::A ? std::pair{Atom::One, Atom::Two} : std::pair{Atom::Two, Atom::One};
}

}  // namespace

Geometry::Geometry(const Vector3& n) : n_(n) {
  const double len = n_.norm();
  if (std::abs(len - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "inter-atomic direction must be a unit vector, got |n| = " << len;
    throw OutOfRange(msg.str());
  }
  n_ /= len;
}

Geometry Geometry::direction(const Vector3& v) {
  const double len = v.norm();
  if (!(len > 0.0)) throw OutOfRange("inter-atomic direction must be nonzero");
  return Geometry(Vector3(v / len));
}

InitialState build_initial_state(double p) {
  if (p < -1.0 / 3.0 - kPRangeSlack || p > 1.0 + kPRangeSlack) {
    std::ostringstream msg;
    msg << "state parameter p = " << p << " outside [-1/3, 1]";
    throw OutOfRange(msg.str());
  }
  p = std::clamp(p, -1.0 / 3.0, 1.0);
  const Matrix4c rho = 0.25 * (Matrix4c::Identity() - p * sigma_dot_sigma());
  return InitialState(p, rho);
}

Matrix4c build_path_operator(Path path, const Polarization& eps_in,
                             const Polarization& eps_out, const Geometry& geom) {
  require_backscattering(eps_in, eps_out);
  const auto [first, second] = scattering_order(path);
  const auto& sf = pauli_vector(first);
  const auto& ss = pauli_vector(second);

  Matrix4c middle = Matrix4c::Zero();
  for (int a = 0; a < 3; ++a) middle += ss[a] * sf[a];
  middle -= vector_dot(second, geom.n()) * vector_dot(first, geom.n());

  return jones_dot(second, eps_out.jones().conjugate()) * middle *
         jones_dot(first, eps_in.jones());
}

Matrix4c build_path_operator_cross(Path path, const Polarization& eps_in,
                                   const Polarization& eps_out, const Geometry& geom) {
  require_backscattering(eps_in, eps_out);
  const auto [first, second] = scattering_order(path);
  const auto& sf = pauli_vector(first);
  const auto& ss = pauli_vector(second);
  const Vector3& n = geom.n();

  Matrix4c middle = Matrix4c::Zero();
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    const int c = (a + 2) % 3;
    const Matrix4c s_cross_n = ss[b] * n(c) - ss[c] * n(b);  // (s2 x n)[a]
    const Matrix4c n_cross_s = n(b) * sf[c] - n(c) * sf[b];  // (n x s1)[a]
    middle += s_cross_n * n_cross_s;
  }

  return -jones_dot(second, eps_out.jones().conjugate()) * middle *
         jones_dot(first, eps_in.jones());
}

PathOperators build_path_operators(const Polarization& eps_in, const Polarization& eps_out,
                                   const Geometry& geom) {
  return {build_path_operator(Path::A, eps_in, eps_out, geom),
          build_path_operator(Path::B, eps_in, eps_out, geom)};
}

double path_weight(const Matrix4c& t, const Matrix4c& rho) {
  const Complex w = (t * rho * t.adjoint()).trace();
  if (std::abs(w.imag()) > 1e-12) {
    std::ostringstream msg;
    msg << "path weight has a non-real trace: imag = " << w.imag();
    throw NegativeWeight(msg.str());
  }
  if (w.real() < -1e-10) {
    std::ostringstream msg;
    msg << "negative path weight " << w.real();
    throw NegativeWeight(msg.str());
  }
  return std::max(w.real(), 0.0);
}

double path_weight(const Matrix4c& t, const InitialState& state) {
  return path_weight(t, state.rho());
}

Matrix4c final_state(const Matrix4c& t, const Matrix4c& rho) {
  const double w = path_weight(t, rho);
  if (w <= kWeightTol) throw ZeroWeight("dark channel: path weight vanishes");
  return Matrix4c((t * rho * t.adjoint()) / w);
}

Matrix4c final_state(const Matrix4c& t, const InitialState& state) {
  return final_state(t, state.rho());
}

}  // namespace pathdual
