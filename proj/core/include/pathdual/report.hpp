#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathdual/average.hpp"
#include "pathdual/duality.hpp"

namespace pathdual {

/// One output row: a (p, polarization pair, geometry) point bound to its
/// duality numbers.  Serialized to CSV with the fixed header
///   p,pol_in,pol_out,u,uprime,nx,ny,nz,w_sum,d,v,duality_slack
/// and to JSON as an object per record.  Angular averages use the "avg"
/// sentinel in the nx column; dark rows leave d and v empty and mark the
/// duality_slack column "dark".
struct SweepRecord {
  double p = 0;
  std::string pol_in;   // channel short name or "jones:re:im:re:im" text
  std::string pol_out;
  std::optional<double> u;        // empty when n is on the optical axis or averaged
  std::optional<double> u_prime;
  std::optional<Vector3> n;       // nullopt => averaged over the sphere
  double w_sum = 0;
  std::optional<double> d;        // empty on dark rows
  std::optional<double> v;
  std::optional<double> duality_slack;
  bool dark = false;
  std::optional<ClosedForm> closed_form;              // perpendicular-geometry comparison
  std::optional<std::pair<int, int>> average_nodes;   // (n_nodes, skipped_dark)
};

/// Shortest representation that parses back to the same double, at most 17
/// significant digits.
std::string format_double(double x);

/// Colon-separated Jones text "jones:re_x:im_x:re_y:im_y" (no commas, so the
/// label is a single CSV field).
std::string jones_label(const Polarization& pol);

/// Incoming/outgoing polarization realizing given u (linear) and u'
/// (elliptic with circular admixture); covers (u, u') in [-1, 1]^2 for the
/// perpendicular-geometry sweeps.
Polarization polarization_from_u(double u);
Polarization polarization_from_u_prime(double u_prime);

std::string to_csv(const std::vector<SweepRecord>& records);
std::string to_json(const std::vector<SweepRecord>& records);

/// Evaluate one explicit-geometry point.  Attaches u, u' when n is off the
/// optical axis and the closed-form comparison when n is transverse.
/// Throws ZeroWeight on a dark channel.
SweepRecord point_record(double p, const Polarization& eps_in, const Polarization& eps_out,
                         std::string_view in_label, std::string_view out_label,
                         const Geometry& geom);

/// Tabulate the (p, u, u') grid at fixed geometry, p outer, u middle, u'
/// inner.  Dark grid points become marked rows instead of errors.  Grid
/// counts must be >= 2.
std::vector<SweepRecord> sweep_records(const std::vector<double>& p_values, int u_count,
                                       int u_prime_count, const Geometry& geom);

/// Angular-average record ("avg" geometry).  Throws AllDark.
SweepRecord average_record(double p, const Polarization& eps_in, const Polarization& eps_out,
                           std::string_view in_label, std::string_view out_label,
                           const Quadrature& quad);

}  // namespace pathdual
