#pragma once

#include <stdexcept>
#include <string>

namespace pathdual {

/// Base class for all pathdual errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A matrix expected to be Hermitian exceeds the Hermiticity tolerance.
struct NotHermitian final : Error {
  using Error::Error;
};

/// A Jones vector (or other unit quantity) fails its normalization gate.
struct NotNormalized final : Error {
  using Error::Error;
};

/// A numeric parameter lies outside its documented interval.
struct OutOfRange final : Error {
  using Error::Error;
};

/// The inter-atomic direction is parallel to the optical axis, so no
/// in-plane reference direction exists for the u component.
struct DegenerateAxis final : Error {
  using Error::Error;
};

/// A polarization is not on the propagation axis required by the geometry.
struct WrongPropagation final : Error {
  using Error::Error;
};

/// A path weight came out negative (or non-real) beyond tolerance; this
/// signals an algebra bug, not a physical configuration.
struct NegativeWeight final : Error {
  using Error::Error;
};

/// Both path weights vanish: the conditional ensemble of double-scattering
/// events is empty ("dark channel") and D, V are undefined.
struct ZeroWeight final : Error {
  using Error::Error;
};

/// The initial state is not invariant under the atom swap, so the
/// antisymmetric two-vector decomposition does not apply.
struct NotSymmetricState final : Error {
  using Error::Error;
};

/// Reconstruction residual of the difference-operator decomposition is too
/// large; signals an algebra bug.
struct ResidualTooLarge final : Error {
  using Error::Error;
};

/// Quadrature resolution below the supported minimum.
struct BadResolution final : Error {
  using Error::Error;
};

/// Every quadrature node is dark; the angular average is undefined.
struct AllDark final : Error {
  using Error::Error;
};

}  // namespace pathdual
