#pragma once

#include "pathdual/scattering.hpp"

namespace pathdual {

/// One complete duality evaluation: relative path weights, which-path
/// distinguishability D, interference visibility V, and the decomposition
/// vectors of the normalized difference operator (symmetric initial states
/// only).  D and V obey D^2 + V^2 <= 1, and D = 4 sqrt(|a|^2 + |b|^2).
struct DualityResult {
  double w_a = 0;
  double w_b = 0;
  double d = 0;
  double v = 0;
  Vector3 a = Vector3::Zero();  // coefficient of (sigma_1 - sigma_2)
  Vector3 b = Vector3::Zero();  // coefficient of (sigma_1 x sigma_2)

  double duality_slack() const { return 1.0 - d * d - v * v; }
};

/// D = tr|T_A rho T_A+ - T_B rho T_B+| / (w_A + w_B), in [0, 1].
/// The single division by w_A + w_B avoids normalizing the two conditional
/// states separately.  Throws ZeroWeight on a dark channel.
double distinguishability(const Matrix4c& t_a, const Matrix4c& t_b, const Matrix4c& rho);
double distinguishability(const Matrix4c& t_a, const Matrix4c& t_b, const InitialState& state);

/// V = 2 |tr(T_A rho T_B+)| / (w_A + w_B), in [0, 1].
double visibility(const Matrix4c& t_a, const Matrix4c& t_b, const Matrix4c& rho);
double visibility(const Matrix4c& t_a, const Matrix4c& t_b, const InitialState& state);

/// Decomposition of the normalized difference operator
///   Delta = (T_A rho T_A+ - T_B rho T_B+) / (w_A + w_B)
///         = a.(sigma_1 - sigma_2) + b.(sigma_1 x sigma_2)
/// valid for swap-symmetric rho (then Delta is antisymmetric under 1<->2).
/// The extraction coefficients follow from the trace orthogonality
/// tr[(s1-s2)_i (s1-s2)_j] = tr[(s1 x s2)_i (s1 x s2)_j] = 8 delta_ij.
struct Decomposition {
  Vector3 a;
  Vector3 b;
  double residual;  // max entry of |Delta - reconstruction|
};

/// Throws NotSymmetricState if S rho S != rho within 1e-12, ZeroWeight on a
/// dark channel, and ResidualTooLarge if the reconstruction misses by more
/// than 1e-10.
Decomposition decompose_difference(const Matrix4c& t_a, const Matrix4c& t_b,
                                   const Matrix4c& rho);
Decomposition decompose_difference(const Matrix4c& t_a, const Matrix4c& t_b,
                                   const InitialState& state);

struct ClosedForm {
  double d;
  double v;
};

/// Closed forms for the perpendicular geometry (n orthogonal to the
/// backscattering axis):
///
///   D = (1 + p + 2pu) / (2(1 + pu)) sqrt(1 - u'^2)
///   V = |(1 + p)(1 + uu') - 2p(1 - u')| / (2(1 + pu))
///
/// where u, u' are the in-plane linear Stokes components of the incoming and
/// analyzed outgoing polarizations with respect to n.  The corner p = 1,
/// u = -1 is an exactly dark channel (0/0); the continuous extension
/// D = sqrt(1 - u'^2), V = |u'| (the p = 1 forms, valid for every other u)
/// is returned there.  Throws OutOfRange on parameters outside their
/// intervals.
ClosedForm closed_form_perpendicular(double p, double u, double u_prime);

/// Slack of the duality relation: 1 - d^2 - v^2 (>= 0 up to roundoff).
double duality_check(double d, double v);

/// Slack of the polarization-resolved bound for the perpendicular geometry:
///
///   D <= sqrt((1-V) V)                   for p <= 0
///   D <= sqrt((1-V)(2p/(1+p) + V))       for p >= 0
///
/// Returns bound - d.  Throws OutOfRange on p outside [-1/3, 1].
double bound_check(double p, double d, double v);

/// Full evaluation at one (state, polarization pair, geometry) point.
/// Throws ZeroWeight on a dark channel.
DualityResult evaluate_point(const InitialState& state, const Polarization& eps_in,
                             const Polarization& eps_out, const Geometry& geom);

}  // namespace pathdual
