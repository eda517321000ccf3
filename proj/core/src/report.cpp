#include "pathdual/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pathdual/errors.hpp"

namespace pathdual {

namespace {

using ordered_json = nlohmann::ordered_json;

std::optional<double> try_u_component(const Polarization& pol, const Vector3& n) {
  try {
    return u_component(pol, n);
  } catch (const DegenerateAxis&) {
    return std::nullopt;
  }
}

void append_csv_field(std::string& out, const std::optional<double>& value) {
  if (value) out += format_double(*value);
}

ordered_json json_or_null(const std::optional<double>& value) {
  if (value) return *value;
  return nullptr;
}

std::vector<double> grid(double lo, double hi, int count) {
  std::vector<double> values(count);
  for (int i = 0; i < count; ++i) values[i] = lo + (hi - lo) * i / (count - 1);
  return values;
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string jones_label(const Polarization& pol) {
  std::string out = "jones";
  for (const double c : {pol.x().real(), pol.x().imag(), pol.y().real(), pol.y().imag()}) {
    out += ':';
    out += format_double(c);
  }
  return out;
}

Polarization polarization_from_u(double u) {
  const Jones j(std::sqrt((1.0 + u) / 2.0), std::sqrt((1.0 - u) / 2.0));
  return Polarization(j, Propagation::PlusZ);
}

Polarization polarization_from_u_prime(double u_prime) {
  const Jones j(std::sqrt((1.0 + u_prime) / 2.0),
                Complex(0.0, std::sqrt((1.0 - u_prime) / 2.0)));
  return Polarization(j, Propagation::MinusZ);
}

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::string out = "p,pol_in,pol_out,u,uprime,nx,ny,nz,w_sum,d,v,duality_slack\n";
  for (const auto& r : records) {
    out += format_double(r.p);
    out += ',';
    out += r.pol_in;
    out += ',';
    out += r.pol_out;
    out += ',';
    append_csv_field(out, r.u);
    out += ',';
    append_csv_field(out, r.u_prime);
    out += ',';
    if (r.n) {
      out += format_double(r.n->x());
      out += ',';
      out += format_double(r.n->y());
      out += ',';
      out += format_double(r.n->z());
    } else {
      out += "avg,,";
    }
    out += ',';
    out += format_double(r.w_sum);
    out += ',';
    append_csv_field(out, r.d);
    out += ',';
    append_csv_field(out, r.v);
    out += ',';
    if (r.dark) {
      out += "dark";
    } else {
      append_csv_field(out, r.duality_slack);
    }
    out += '\n';
    if (r.closed_form) {
      out += "# closed-form d=";
      out += format_double(r.closed_form->d);
      out += " v=";
      out += format_double(r.closed_form->v);
      out += '\n';
    }
  }
  return out;
}

std::string to_json(const std::vector<SweepRecord>& records) {
  ordered_json root;
  root["records"] = ordered_json::array();
  for (const auto& r : records) {
    ordered_json obj;
    obj["p"] = r.p;
    obj["pol_in"] = r.pol_in;
    obj["pol_out"] = r.pol_out;
    obj["u"] = json_or_null(r.u);
    obj["uprime"] = json_or_null(r.u_prime);
    if (r.n) {
      obj["n"] = ordered_json::array({r.n->x(), r.n->y(), r.n->z()});
    } else {
      obj["n"] = "avg";
    }
    obj["w_sum"] = r.w_sum;
    obj["d"] = json_or_null(r.d);
    obj["v"] = json_or_null(r.v);
    obj["duality_slack"] = json_or_null(r.duality_slack);
    obj["dark"] = r.dark;
    if (r.closed_form) {
      obj["closed_form"] = {{"d", r.closed_form->d}, {"v", r.closed_form->v}};
    }
    if (r.average_nodes) {
      obj["average"] = {{"n_nodes", r.average_nodes->first},
                        {"skipped_dark", r.average_nodes->second}};
    }
    root["records"].push_back(std::move(obj));
  }
  return root.dump(2) + "\n";
}

SweepRecord point_record(double p, const Polarization& eps_in, const Polarization& eps_out,
                         std::string_view in_label, std::string_view out_label,
                         const Geometry& geom) {
  const InitialState state = build_initial_state(p);
  SweepRecord rec;
  rec.p = state.p();
  rec.pol_in = in_label;
  rec.pol_out = out_label;
  rec.n = geom.n();
  rec.u = try_u_component(eps_in, geom.n());
  rec.u_prime = try_u_component(eps_out, geom.n());

  const DualityResult result = evaluate_point(state, eps_in, eps_out, geom);
  rec.w_sum = result.w_a + result.w_b;
  rec.d = result.d;
  rec.v = result.v;
  rec.duality_slack = result.duality_slack();
  if (std::abs(geom.n().z()) <= 1e-12 && rec.u && rec.u_prime) {
    rec.closed_form = closed_form_perpendicular(state.p(), *rec.u, *rec.u_prime);
  }
  return rec;
}

std::vector<SweepRecord> sweep_records(const std::vector<double>& p_values, int u_count,
                                       int u_prime_count, const Geometry& geom) {
  if (u_count < 2 || u_prime_count < 2)
    throw OutOfRange("sweep grids need at least 2 points per axis");

  const std::vector<double> u_values = grid(-1.0, 1.0, u_count);
  const std::vector<double> u_prime_values = grid(-1.0, 1.0, u_prime_count);

  std::vector<SweepRecord> records;
  records.reserve(p_values.size() * u_values.size() * u_prime_values.size());
  for (const double p : p_values) {
    const InitialState state = build_initial_state(p);
    for (const double u : u_values) {
      const Polarization eps_in = polarization_from_u(u);
      for (const double u_prime : u_prime_values) {
        const Polarization eps_out = polarization_from_u_prime(u_prime);
        SweepRecord rec;
        rec.p = state.p();
        rec.pol_in = jones_label(eps_in);
        rec.pol_out = jones_label(eps_out);
        rec.u = try_u_component(eps_in, geom.n());
        rec.u_prime = try_u_component(eps_out, geom.n());
        try {
          const DualityResult result = evaluate_point(state, eps_in, eps_out, geom);
          rec.w_sum = result.w_a + result.w_b;
          rec.d = result.d;
          rec.v = result.v;
          rec.duality_slack = result.duality_slack();
        } catch (const ZeroWeight&) {
          rec.dark = true;
          rec.w_sum = 0;
        }
        rec.n = geom.n();
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

SweepRecord average_record(double p, const Polarization& eps_in, const Polarization& eps_out,
                           std::string_view in_label, std::string_view out_label,
                           const Quadrature& quad) {
  const AveragedResult avg = averaged_duality(p, eps_in, eps_out, quad);
  SweepRecord rec;
  rec.p = p;
  rec.pol_in = in_label;
  rec.pol_out = out_label;
  rec.w_sum = avg.mean_weight;
  rec.d = avg.d_avg;
  rec.v = avg.v_avg;
  rec.duality_slack = duality_check(avg.d_avg, avg.v_avg);
  rec.average_nodes = {avg.n_nodes, avg.skipped_dark};
  return rec;
}

}  // namespace pathdual
