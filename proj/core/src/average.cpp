#include "pathdual/average.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "pathdual/errors.hpp"

namespace pathdual {

double Quadrature::weight_sum() const {
  double sum = 0;
  for (const auto& node : nodes) sum += node.weight;
  return sum;
}

std::vector<std::pair<double, double>> gauss_legendre(int n) {
  if (n < 1) throw BadResolution("Gauss-Legendre order must be >= 1");
  std::vector<std::pair<double, double>> nw(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n, starting from the Chebyshev estimate
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    nw[i] = {-z, w};
    nw[n - 1 - i] = {z, w};
  }
  return nw;
}

Quadrature build_quadrature(QuadratureScheme scheme, int resolution, std::uint64_t seed) {
  if (resolution < 2) throw BadResolution("quadrature resolution must be >= 2");
  Quadrature quad;
  if (scheme == QuadratureScheme::ProductGrid) {
    const auto polar = gauss_legendre(resolution);
    const int n_phi = 2 * resolution;
    quad.nodes.reserve(static_cast<std::size_t>(resolution) * n_phi);
    for (const auto& [ct, gw] : polar) {
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int k = 0; k < n_phi; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / n_phi;
        quad.nodes.push_back(
            {Vector3(st * std::cos(phi), st * std::sin(phi), ct), gw / 2.0 / n_phi});
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> cos_theta(-1.0, 1.0);
    std::uniform_real_distribution<double> azimuth(0.0, 2.0 * std::numbers::pi);
    quad.nodes.reserve(resolution);
    for (int k = 0; k < resolution; ++k) {
      const double ct = cos_theta(rng);
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      const double phi = azimuth(rng);
      quad.nodes.push_back(
          {Vector3(st * std::cos(phi), st * std::sin(phi), ct), 1.0 / resolution});
    }
  }
  return quad;
}

AveragedResult averaged_duality(double p, const Polarization& eps_in,
                                const Polarization& eps_out, const Quadrature& quad) {
  const InitialState state = build_initial_state(p);
  const Matrix4c& rho = state.rho();

  struct NodeEval {
    double quad_weight;
    double weight_sum;  // w_A + w_B at this direction
    double cross;       // 2 |tr(T_A rho T_B+)|
    Matrix4c diff;      // T_A rho T_A+ - T_B rho T_B+
  };

  std::vector<NodeEval> evals;
  evals.reserve(quad.nodes.size());
  double max_weight = 0;
  for (const auto& node : quad.nodes) {
    const Geometry geom(node.direction);
    const PathOperators ops = build_path_operators(eps_in, eps_out, geom);
    const double ws = path_weight(ops.t_a, rho) + path_weight(ops.t_b, rho);
    const Matrix4c diff =
        ops.t_a * rho * ops.t_a.adjoint() - ops.t_b * rho * ops.t_b.adjoint();
    const double cross = 2.0 * std::abs((ops.t_a * rho * ops.t_b.adjoint()).trace());
    evals.push_back({node.weight, ws, cross, diff});
    max_weight = std::max(max_weight, ws);
  }

  AveragedResult result;
  result.n_nodes = static_cast<int>(evals.size());

  double live_quad_weight = 0;
  for (const auto& e : evals) {
    if (e.weight_sum > kWeightTol * max_weight) {
      live_quad_weight += e.quad_weight;
    } else {
      ++result.skipped_dark;
    }
  }
  if (!(live_quad_weight > 0)) throw AllDark("every quadrature node is dark");

  Matrix4c diff_avg = Matrix4c::Zero();
  double cross_avg = 0;
  double weight_avg = 0;
  for (const auto& e : evals) {
    if (e.weight_sum <= kWeightTol * max_weight) continue;
    const double w = e.quad_weight / live_quad_weight;
    diff_avg += w * e.diff;
    cross_avg += w * e.cross;
    weight_avg += w * e.weight_sum;
  }

  result.mean_weight = weight_avg;
  result.d_avg = std::clamp(trace_norm(diff_avg) / weight_avg, 0.0, 1.0);
  result.v_avg = std::clamp(cross_avg / weight_avg, 0.0, 1.0);
  return result;
}

}  // namespace pathdual
