#pragma once

#include <optional>
#include <string_view>

#include "pathdual/qop.hpp"

namespace pathdual {

/// Photon propagation direction on the fixed backscattering axis.
enum class Propagation { PlusZ, MinusZ };

/// Pure transverse polarization of a photon travelling along +z or -z.
/// The Jones vector holds the x and y components; transversality is
/// structural (there is no z component).  Stored unit-normalized.
class Polarization {
 public:
  /// Requires |jones|^2 within 1e-9 of 1; the stored vector is renormalized
  /// exactly.  Throws NotNormalized otherwise.
  Polarization(const Jones& jones, Propagation direction);

  /// Normalizes any nonzero Jones vector.
  static Polarization normalized(const Jones& jones, Propagation direction);

  const Jones& jones() const { return jones_; }
  Propagation propagation() const { return direction_; }
  Complex x() const { return jones_(0); }
  Complex y() const { return jones_(1); }

 private:
  Jones jones_;
  Propagation direction_;
};

/// Stokes components of a pure polarization; s1^2+s2^2+s3^2 = 1.
struct StokesVector {
  double s1;
  double s2;
  double s3;
};

/// s1 = |ex|^2 - |ey|^2, s2 = 2 Re(ex* ey), s3 = 2 Im(ex* ey).
/// s3 = +1 is the circular state (x + iy)/sqrt(2).
StokesVector stokes(const Polarization& pol);

/// Linear-polarization component of `pol` along the transverse projection of
/// the inter-atomic direction n: |e.n_perp|^2 - |e.(z x n_perp)|^2.
/// For n along x this is exactly the Stokes s1.  Throws DegenerateAxis when
/// n is parallel to z (no in-plane reference direction).
double u_component(const Polarization& pol, const Vector3& n);

/// The four canonical detection channels of backscattering experiments.
/// Helicity of the outgoing photon is defined with respect to its own
/// (-z) propagation direction, so the helicity-preserving channel analyzes
/// the conjugate Jones vector in the fixed frame.
enum class Channel { LinParallel, LinPerpendicular, HelicityPreserving, HelicityFlipping };

struct ChannelPair {
  Polarization in;   // incoming, +z
  Polarization out;  // analyzed outgoing, -z
};

ChannelPair resolve_channel(Channel channel);

/// Short names used by the CLI: "linpar", "linperp", "hpres", "hflip".
std::string_view channel_name(Channel channel);
std::optional<Channel> parse_channel(std::string_view name);

}  // namespace pathdual
