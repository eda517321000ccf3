#include "pathdual/polarization.hpp"

#include <cmath>
#include <sstream>

#include "pathdual/errors.hpp"

namespace pathdual {

Polarization::Polarization(const Jones& jones, Propagation direction)
    : jones_(jones), direction_(direction) {
  const double norm2 = jones_.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "Jones vector is not normalized: |e|^2 = " << norm2;
    throw NotNormalized(msg.str());
  }
  jones_ /= std::sqrt(norm2);
}

Polarization Polarization::normalized(const Jones& jones, Propagation direction) {
  const double norm = jones.norm();
  if (!(norm > 0.0)) throw NotNormalized("Jones vector is zero");
  return Polarization(Jones(jones / norm), direction);
}

StokesVector stokes(const Polarization& pol) {
  const Complex ex = pol.x();
  const Complex ey = pol.y();
  const Complex cross = std::conj(ex) * ey;
  return {std::norm(ex) - std::norm(ey), 2.0 * cross.real(), 2.0 * cross.imag()};
}

double u_component(const Polarization& pol, const Vector3& n) {
  const double transverse = std::hypot(n.x(), n.y());
  if (transverse <= 1e-9 * n.norm()) {
    throw DegenerateAxis("direction n is parallel to the optical axis; u is undefined");
  }
  const double cx = n.x() / transverse;
  const double cy = n.y() / transverse;
  const Complex along = pol.x() * cx + pol.y() * cy;    // e . n_perp
  const Complex across = -pol.x() * cy + pol.y() * cx;  // e . (z x n_perp)
  return std::norm(along) - std::norm(across);
}

ChannelPair resolve_channel(Channel channel) {
  const double r = 1.0 / std::sqrt(2.0);
  const Jones x(1, 0);
  const Jones y(0, 1);
  const Jones circ_plus(r, Complex(0, r));    // (x + iy)/sqrt(2)
  const Jones circ_minus(r, Complex(0, -r));  // (x - iy)/sqrt(2)
  switch (channel) {
    case Channel::LinParallel:
      return {Polarization(x, Propagation::PlusZ), Polarization(x, Propagation::MinusZ)};
    case Channel::LinPerpendicular:
      return {Polarization(x, Propagation::PlusZ), Polarization(y, Propagation::MinusZ)};
    case Channel::HelicityPreserving:
      return {Polarization(circ_plus, Propagation::PlusZ),
              Polarization(circ_minus, Propagation::MinusZ)};
    case Channel::HelicityFlipping:
      return {Polarization(circ_plus, Propagation::PlusZ),
              Polarization(circ_plus, Propagation::MinusZ)};
  }
  throw OutOfRange("unknown channel");
}

std::string_view channel_name(Channel channel) {
  switch (channel) {
    case Channel::LinParallel:
      return "linpar";
    case Channel::LinPerpendicular:
      return "linperp";
    case Channel::HelicityPreserving:
      return "hpres";
    case Channel::HelicityFlipping:
      return "hflip";
  }
  return "?";
}

std::optional<Channel> parse_channel(std::string_view name) {
  if (name == "linpar") return Channel::LinParallel;
  if (name == "linperp") return Channel::LinPerpendicular;
  if (name == "hpres") return Channel::HelicityPreserving;
  if (name == "hflip") return Channel::HelicityFlipping;
  return std::nullopt;
}

}  // namespace pathdual
