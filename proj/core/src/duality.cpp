#include "pathdual/duality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pathdual/errors.hpp"

namespace pathdual {

namespace {

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

double weight_sum_or_throw(const Matrix4c& t_a, const Matrix4c& t_b, const Matrix4c& rho) {
  const double ws = path_weight(t_a, rho) + path_weight(t_b, rho);
  if (ws <= kWeightTol) throw ZeroWeight("dark channel: both path weights vanish");
  return ws;
}

void require_p_range(double p) {
  if (p < -1.0 / 3.0 - 1e-12 || p > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "state parameter p = " << p << " outside [-1/3, 1]";
    throw OutOfRange(msg.str());
  }
}

}  // namespace

double distinguishability(const Matrix4c& t_a, const Matrix4c& t_b, const Matrix4c& rho) {
  const double ws = weight_sum_or_throw(t_a, t_b, rho);
  const Matrix4c diff = t_a * rho * t_a.adjoint() - t_b * rho * t_b.adjoint();
  return clamp_unit(trace_norm(diff) / ws);
}

double distinguishability(const Matrix4c& t_a, const Matrix4c& t_b, const InitialState& state) {
  return distinguishability(t_a, t_b, state.rho());
}

double visibility(const Matrix4c& t_a, const Matrix4c& t_b, const Matrix4c& rho) {
  const double ws = weight_sum_or_throw(t_a, t_b, rho);
  const Complex cross = (t_a * rho * t_b.adjoint()).trace();
  return clamp_unit(2.0 * std::abs(cross) / ws);
}

double visibility(const Matrix4c& t_a, const Matrix4c& t_b, const InitialState& state) {
  return visibility(t_a, t_b, state.rho());
}

Decomposition decompose_difference(const Matrix4c& t_a, const Matrix4c& t_b,
                                   const Matrix4c& rho) {
  const Matrix4c& s = swap_operator();
  const double asym = (s * rho * s - rho).cwiseAbs().maxCoeff();
  if (asym > 1e-12) {
    std::ostringstream msg;
    msg << "initial state is not swap-symmetric: residual " << asym;
    throw NotSymmetricState(msg.str());
  }

  const double ws = weight_sum_or_throw(t_a, t_b, rho);
  const Matrix4c delta =
      (t_a * rho * t_a.adjoint() - t_b * rho * t_b.adjoint()) / ws;

  Decomposition out;
  for (int i = 0; i < 3; ++i) {
    out.a(i) = (delta * sigma_difference_component(i)).trace().real() / 8.0;
    out.b(i) = (delta * sigma_cross_component(i)).trace().real() / 8.0;
  }

  Matrix4c recon = Matrix4c::Zero();
  for (int i = 0; i < 3; ++i) {
    recon += out.a(i) * sigma_difference_component(i);
    recon += out.b(i) * sigma_cross_component(i);
  }
  out.residual = (delta - recon).cwiseAbs().maxCoeff();
  if (out.residual > 1e-10) {
    std::ostringstream msg;
    msg << "difference-operator decomposition residual " << out.residual;
    throw ResidualTooLarge(msg.str());
  }
  return out;
}

Decomposition decompose_difference(const Matrix4c& t_a, const Matrix4c& t_b,
                                   const InitialState& state) {
  return decompose_difference(t_a, t_b, state.rho());
}

ClosedForm closed_form_perpendicular(double p, double u, double u_prime) {
  require_p_range(p);
  if (std::abs(u) > 1.0 + 1e-12 || std::abs(u_prime) > 1.0 + 1e-12) {
    throw OutOfRange("Stokes components u, u' must lie in [-1, 1]");
  }
  u = std::clamp(u, -1.0, 1.0);
  u_prime = std::clamp(u_prime, -1.0, 1.0);

  const double root = std::sqrt(std::max(0.0, 1.0 - u_prime * u_prime));
  const double denom = 1.0 + p * u;
  if (denom <= 1e-14) {
    // exactly dark corner p = 1, u = -1; continuous extension
    return {root, std::abs(u_prime)};
  }
  const double d = (1.0 + p + 2.0 * p * u) / (2.0 * denom) * root;
  const double v =
      std::abs((1.0 + p) * (1.0 + u * u_prime) - 2.0 * p * (1.0 - u_prime)) / (2.0 * denom);
  return {clamp_unit(d), clamp_unit(v)};
}

double duality_check(double d, double v) { return 1.0 - d * d - v * v; }

double bound_check(double p, double d, double v) {
  require_p_range(p);
  v = std::clamp(v, 0.0, 1.0);
  const double bound = (p <= 0.0)
                           ? std::sqrt((1.0 - v) * v)
                           : std::sqrt((1.0 - v) * (2.0 * p / (1.0 + p) + v));
  return bound - d;
}

DualityResult evaluate_point(const InitialState& state, const Polarization& eps_in,
                             const Polarization& eps_out, const Geometry& geom) {
  const PathOperators ops = build_path_operators(eps_in, eps_out, geom);
  DualityResult result;
  result.w_a = path_weight(ops.t_a, state);
  result.w_b = path_weight(ops.t_b, state);
  if (result.w_a + result.w_b <= kWeightTol)
    throw ZeroWeight("dark channel: both path weights vanish");
  result.d = distinguishability(ops.t_a, ops.t_b, state);
  result.v = visibility(ops.t_a, ops.t_b, state);
  const Decomposition dec = decompose_difference(ops.t_a, ops.t_b, state);
  result.a = dec.a;
  result.b = dec.b;
  return result;
}

}  // namespace pathdual
