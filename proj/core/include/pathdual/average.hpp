#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pathdual/duality.hpp"

namespace pathdual {

struct QuadratureNode {
  Vector3 direction;  // unit vector
  double weight;      // positive; all weights sum to 1
};

/// Quadrature over the unit sphere of inter-atomic directions, normalized to
/// the uniform measure dOmega / 4pi.
struct Quadrature {
  std::vector<QuadratureNode> nodes;

  double weight_sum() const;
};

enum class QuadratureScheme {
  ProductGrid,  // Gauss-Legendre in cos(theta) x uniform in phi
  MonteCarlo,   // uniform random directions, equal weights (diagnostics)
};

inline constexpr std::uint64_t kDefaultQuadratureSeed = 0x9e3779b97f4a7c15ull;

/// Gauss-Legendre nodes and weights on [-1, 1].
std::vector<std::pair<double, double>> gauss_legendre(int n);

/// ProductGrid: `resolution` polar nodes x 2*resolution azimuthal nodes.
/// MonteCarlo: `resolution` sampled directions.  Throws BadResolution for
/// resolution < 2.
Quadrature build_quadrature(QuadratureScheme scheme, int resolution,
                            std::uint64_t seed = kDefaultQuadratureSeed);

struct AveragedResult {
  double d_avg = 0;
  double v_avg = 0;
  double mean_weight = 0;  // <w_A + w_B> over live nodes, the normalization
  int n_nodes = 0;
  int skipped_dark = 0;
};

/// Angular average over the inter-atomic direction n, mimicking the
/// coherent-backscattering situation where every double-scattering event,
/// whatever its geometry, contributes to the detected signal.  Directions
/// are therefore weighted by their scattering probability: the unnormalized
/// difference operator and interference cross term are averaged over the
/// sphere and divided once by the averaged total weight <w_A + w_B>,
///
///   D_avg = tr| <T_A rho T_A+ - T_B rho T_B+> | / <w_A + w_B>
///   V_avg = <2 |tr(T_A rho T_B+)|> / <w_A + w_B>.
///
/// (A uniform solid-angle average of the already-normalized quantities would
/// weight rare geometries as heavily as probable ones and does not reproduce
/// the known channel extrema.)  Nodes whose total weight falls below
/// kWeightTol relative to the largest node weight are counted as dark and
/// excluded, with the remaining node weights renormalized.  The reduction
/// runs in node order, so results are bit-reproducible.  Throws AllDark if
/// every node is dark.
AveragedResult averaged_duality(double p, const Polarization& eps_in,
                                const Polarization& eps_out, const Quadrature& quad);

}  // namespace pathdual
