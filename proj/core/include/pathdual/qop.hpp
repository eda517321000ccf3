#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace pathdual {

using Complex = std::complex<double>;
using Vector3 = Eigen::Vector3d;
using Jones = Eigen::Vector2cd;

/// Operator on the two atomic ground-state qubits, expressed in the product
/// basis |m1 m2> with m = +1/2, -1/2, ordered (++, +-, -+, --).  This basis
/// ordering is a repository-wide convention; every matrix in the code and in
/// the tests is written in it.
///
/// Matrix product, adjoint and trace are Eigen's `a * b`, `m.adjoint()` and
/// `m.trace()`; only the operations Eigen does not provide directly live
/// below.
using Matrix4c = Eigen::Matrix4cd;

/// Hermiticity gate for eigenvalue and trace-norm computations.
inline constexpr double kHermitianTol = 1e-10;

/// Required eigenpair residual of the Hermitian eigensolver.
inline constexpr double kEigenResidualTol = 1e-10;

/// Path weights at or below this value (relative to the scale of the
/// computation) mark a dark channel.
inline constexpr double kWeightTol = 1e-12;

enum class Atom { One, Two };
enum class PauliAxis { X, Y, Z };

/// One single-atom Pauli component sigma_{atom,axis}.
struct PauliFactor {
  Atom atom;
  PauliAxis axis;
};

/// sigma_axis (x) 1 for atom 1, 1 (x) sigma_axis for atom 2, with the
/// standard convention sigma_z = diag(+1, -1) in the (+1/2, -1/2) basis.
Matrix4c pauli(PauliFactor factor);
Matrix4c pauli(Atom atom, PauliAxis axis);

/// The three Pauli components of one atom, indexed x, y, z.
const std::array<Matrix4c, 3>& pauli_vector(Atom atom);

/// Two-qubit swap |m1 m2> -> |m2 m1>.
const Matrix4c& swap_operator();

/// sigma_1 . sigma_2
const Matrix4c& sigma_dot_sigma();

/// sigma_1[axis] - sigma_2[axis]
const Matrix4c& sigma_difference_component(int axis);

/// (sigma_1 x sigma_2)[axis]
const Matrix4c& sigma_cross_component(int axis);

/// max entry of |M - M^dagger|
double hermiticity_residual(const Matrix4c& m);

/// Eigenvalues of a Hermitian matrix, descending.  Exact for diagonal input.
/// Throws NotHermitian if the Hermiticity residual exceeds kHermitianTol.
std::array<double, 4> hermitian_eigenvalues(const Matrix4c& m);

/// tr|M| = sum of absolute eigenvalues, for Hermitian M.
double trace_norm(const Matrix4c& m);

}  // namespace pathdual
