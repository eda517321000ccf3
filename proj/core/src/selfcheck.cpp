#include "pathdual/selfcheck.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "pathdual/errors.hpp"
#include "pathdual/report.hpp"

namespace pathdual {

namespace {

std::vector<double> p_grid(int count) {
  std::vector<double> values(count);
  for (int i = 0; i < count; ++i)
    values[i] = -1.0 / 3.0 + (4.0 / 3.0) * i / (count - 1);
  return values;
}

std::vector<double> unit_grid(int count) {
  std::vector<double> values(count);
  for (int i = 0; i < count; ++i) values[i] = -1.0 + 2.0 * i / (count - 1);
  return values;
}

Vector3 random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vector3 v;
  do {
    v = Vector3(gauss(rng), gauss(rng), gauss(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

Polarization random_polarization(std::mt19937_64& rng, Propagation direction) {
  std::normal_distribution<double> gauss;
  Jones j;
  do {
    j = Jones(Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng)));
  } while (j.norm() < 1e-6);
  return Polarization::normalized(j, direction);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

const PathOperatorBuilder& real_builder() {
  static const PathOperatorBuilder b = [](Path path, const Polarization& eps_in,
                                          const Polarization& eps_out, const Geometry& geom) {
    return build_path_operator(path, eps_in, eps_out, geom);
  };
  return b;
}

}  // namespace

CheckResult check_closed_form_oracle(const PathOperatorBuilder& builder) {
  const PathOperatorBuilder& build = builder ? builder : real_builder();
  const Geometry geom{Vector3(1, 0, 0)};
  double max_dd = 0;
  double max_dv = 0;
  int dark = 0;
  for (const double p : p_grid(15)) {
    const InitialState state = build_initial_state(p);
    for (const double u : unit_grid(41)) {
      const Polarization eps_in = polarization_from_u(u);
      for (const double u_prime : unit_grid(41)) {
        const Polarization eps_out = polarization_from_u_prime(u_prime);
        const Matrix4c t_a = build(Path::A, eps_in, eps_out, geom);
        const Matrix4c t_b = build(Path::B, eps_in, eps_out, geom);
        const ClosedForm expected = closed_form_perpendicular(p, u, u_prime);
        try {
          max_dd = std::max(max_dd,
                            std::abs(distinguishability(t_a, t_b, state) - expected.d));
          max_dv = std::max(max_dv, std::abs(visibility(t_a, t_b, state) - expected.v));
        } catch (const ZeroWeight&) {
          ++dark;
        }
      }
    }
  }
  CheckResult r;
  r.name = "closed-form-oracle";
  r.pass = max_dd <= 1e-10 && max_dv <= 1e-10;
  r.detail = "max |dD| = " + fmt(max_dd) + ", max |dV| = " + fmt(max_dv) +
             ", dark points skipped = " + std::to_string(dark);
  return r;
}

CheckResult check_duality_relation(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> p_dist(-1.0 / 3.0, 1.0);
  double min_slack = 1.0;
  int dark = 0;
  for (int i = 0; i < samples; ++i) {
    const InitialState state = build_initial_state(p_dist(rng));
    const Polarization eps_in = random_polarization(rng, Propagation::PlusZ);
    const Polarization eps_out = random_polarization(rng, Propagation::MinusZ);
    const Geometry geom(random_direction(rng));
    try {
      const DualityResult res = evaluate_point(state, eps_in, eps_out, geom);
      min_slack = std::min(min_slack, res.duality_slack());
    } catch (const ZeroWeight&) {
      ++dark;
    }
  }
  CheckResult r;
  r.name = "duality-relation";
  r.pass = min_slack >= -1e-10;
  r.detail = "min slack = " + fmt(min_slack) + " over " + std::to_string(samples - dark) +
             " samples";
  return r;
}

CheckResult check_duality_bound() {
  const Geometry geom{Vector3(1, 0, 0)};
  double min_slack = 1.0;
  int dark = 0;
  for (const double p : p_grid(15)) {
    const InitialState state = build_initial_state(p);
    for (const double u : unit_grid(41)) {
      const Polarization eps_in = polarization_from_u(u);
      for (const double u_prime : unit_grid(41)) {
        const Polarization eps_out = polarization_from_u_prime(u_prime);
        const PathOperators ops = build_path_operators(eps_in, eps_out, geom);
        try {
          const double d = distinguishability(ops.t_a, ops.t_b, state);
          const double v = visibility(ops.t_a, ops.t_b, state);
          min_slack = std::min(min_slack, bound_check(p, d, v));
        } catch (const ZeroWeight&) {
          ++dark;
        }
      }
    }
  }
  CheckResult r;
  r.name = "duality-bound";
  r.pass = min_slack >= -1e-10;
  r.detail = "min slack = " + fmt(min_slack) + ", dark points skipped = " +
             std::to_string(dark);
  return r;
}

CheckResult check_difference_decomposition(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> p_dist(-1.0 / 3.0, 1.0);
  double max_residual = 0;
  double max_d_mismatch = 0;
  double max_eig_mismatch = 0;
  CheckResult r;
  r.name = "difference-decomposition";
  for (int i = 0; i < samples; ++i) {
    const InitialState state = build_initial_state(p_dist(rng));
    const Polarization eps_in = random_polarization(rng, Propagation::PlusZ);
    const Polarization eps_out = random_polarization(rng, Propagation::MinusZ);
    const Geometry geom(random_direction(rng));
    const PathOperators ops = build_path_operators(eps_in, eps_out, geom);
    try {
      const double ws = path_weight(ops.t_a, state) + path_weight(ops.t_b, state);
      if (ws <= kWeightTol) continue;
      const Decomposition dec = decompose_difference(ops.t_a, ops.t_b, state);
      const double d = distinguishability(ops.t_a, ops.t_b, state);
      const double lambda = 2.0 * std::sqrt(dec.a.squaredNorm() + dec.b.squaredNorm());
      max_residual = std::max(max_residual, dec.residual);
      max_d_mismatch = std::max(max_d_mismatch, std::abs(d - 2.0 * lambda));
      const Matrix4c delta =
          (ops.t_a * state.rho() * ops.t_a.adjoint() -
           ops.t_b * state.rho() * ops.t_b.adjoint()) /
          ws;
      const auto ev = hermitian_eigenvalues(delta);
      max_eig_mismatch = std::max({max_eig_mismatch, std::abs(ev[0] - lambda),
                                   std::abs(ev[3] + lambda), std::abs(ev[1]), std::abs(ev[2])});
    } catch (const Error& e) {
      r.pass = false;
      r.detail = std::string("unexpected error: ") + e.what();
      return r;
    }
  }
  r.pass = max_residual <= 1e-10 && max_d_mismatch <= 1e-10 && max_eig_mismatch <= 1e-10;
  r.detail = "max residual = " + fmt(max_residual) + ", max |D - 4sqrt(a^2+b^2)| = " +
             fmt(max_d_mismatch) + ", max eigenvalue-pattern deviation = " +
             fmt(max_eig_mismatch);
  return r;
}

CheckResult check_average_convergence() {
  const ChannelPair chan = resolve_channel(Channel::HelicityPreserving);
  const AveragedResult coarse =
      averaged_duality(0.0, chan.in, chan.out, build_quadrature(QuadratureScheme::ProductGrid, 16));
  const AveragedResult fine =
      averaged_duality(0.0, chan.in, chan.out, build_quadrature(QuadratureScheme::ProductGrid, 32));
  const double dd = std::abs(coarse.d_avg - fine.d_avg);
  const double dv = std::abs(coarse.v_avg - fine.v_avg);
  CheckResult r;
  r.name = "average-convergence";
  r.pass = dd < 1e-6 && dv < 1e-6;
  r.detail = "res 16 -> 32 changes: |dD| = " + fmt(dd) + ", |dV| = " + fmt(dv);
  return r;
}

CheckResult check_average_reference() {
  const ChannelPair chan = resolve_channel(Channel::HelicityPreserving);
  const AveragedResult avg =
      averaged_duality(0.0, chan.in, chan.out, build_quadrature(QuadratureScheme::ProductGrid, 32));
  CheckResult r;
  r.name = "average-reference";
  r.pass = std::abs(avg.d_avg - 0.5) <= 1e-3 && std::abs(avg.v_avg - 0.4) <= 1e-3;
  r.detail = "helicity-preserving p = 0: D_avg = " + fmt(avg.d_avg) +
             " (expect 0.5), V_avg = " + fmt(avg.v_avg) + " (expect 0.4)";
  return r;
}

std::vector<CheckResult> run_all_checks() {
  return {check_closed_form_oracle(),
          check_duality_relation(),
          check_duality_bound(),
          check_difference_decomposition(),
          check_average_convergence(),
          check_average_reference()};
}

}  // namespace pathdual
