#pragma once

#include "pathdual/polarization.hpp"
#include "pathdual/qop.hpp"

namespace pathdual {

/// The two double-scattering sequences: path A scatters off atom 1 first,
/// path B off atom 2 first.  Both traverse the same geometric path in
/// opposite directions.
enum class Path { A, B };

/// Inter-atomic geometry: the unit vector n pointing from one scatterer to
/// the other.  The backscattering axis is fixed along z (incoming photon
/// +z, outgoing -z), so only n varies.
class Geometry {
 public:
  /// Requires |n| within 1e-9 of 1; stored renormalized.
  explicit Geometry(const Vector3& n);

  /// Normalizes any nonzero vector.
  static Geometry direction(const Vector3& v);

  const Vector3& n() const { return n_; }

 private:
  Vector3 n_;
};

/// Symmetric initial two-qubit state rho = (1 - p sigma_1.sigma_2)/4 of the
/// two scattering atoms.  Positivity restricts p to [-1/3, 1]:
/// p = 0 is the completely mixed state, p = 1 the singlet projector,
/// p = -1/3 the (normalized) triplet projector.
class InitialState {
 public:
  double p() const { return p_; }
  const Matrix4c& rho() const { return rho_; }

  friend InitialState build_initial_state(double p);

 private:
  InitialState(double p, Matrix4c rho) : p_(p), rho_(std::move(rho)) {}

  double p_;
  Matrix4c rho_;
};

/// Throws OutOfRange unless p is in [-1/3, 1] (1e-12 slack, then clamped).
InitialState build_initial_state(double p);

/// Double-scattering operator on the two ground-state qubits for one path,
/// with the scattering tensor reduced to its ground-state Pauli form and all
/// proportionality constants dropped (only ratios of weights are meaningful):
///
///   T_A = (e_out* . s2) [ s2.s1 - (s2.n)(n.s1) ] (s1 . e_in)
///
/// and T_B with the atom labels interchanged.  The rightmost factor acts
/// first; the analyzed outgoing polarization enters conjugated here (the
/// single conjugation site in the code).  The middle factor is even in n.
/// Throws WrongPropagation unless e_in travels +z and e_out -z.
Matrix4c build_path_operator(Path path, const Polarization& eps_in,
                             const Polarization& eps_out, const Geometry& geom);

/// Equivalent cross-product form
///   -(e_out* . s2) (s2 x n).(n x s1) (s1 . e_in),
/// kept as an independent algebraic route for verification.
Matrix4c build_path_operator_cross(Path path, const Polarization& eps_in,
                                   const Polarization& eps_out, const Geometry& geom);

struct PathOperators {
  Matrix4c t_a;
  Matrix4c t_b;
};

PathOperators build_path_operators(const Polarization& eps_in, const Polarization& eps_out,
                                   const Geometry& geom);

/// w = tr(T rho T+), real and nonnegative.  Throws NegativeWeight if the
/// trace is not real-nonnegative within tolerance (an algebra bug).
double path_weight(const Matrix4c& t, const Matrix4c& rho);
double path_weight(const Matrix4c& t, const InitialState& state);

/// Conditional final state T rho T+ / w.  Throws ZeroWeight when the weight
/// is at or below kWeightTol (empty conditional ensemble).
Matrix4c final_state(const Matrix4c& t, const Matrix4c& rho);
Matrix4c final_state(const Matrix4c& t, const InitialState& state);

}  // namespace pathdual
