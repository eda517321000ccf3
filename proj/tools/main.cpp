// pathdual: which-path distinguishability and interference visibility for a
// photon doubly scattered by two spin-1/2 atoms.
//
// Subcommands: point, sweep, average, verify.  See --help and the README.
// Exit codes: 0 success, 1 usage error, 2 dark channel, 3 verification
// failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathdual/errors.hpp"
#include "pathdual/report.hpp"
#include "pathdual/selfcheck.hpp"

namespace {

using namespace pathdual;

constexpr const char* kConventionsText =
    "two-qubit basis    |m1 m2>, m = +1/2, -1/2, ordered (++, +-, -+, --)\n"
    "pauli convention   sigma_z = diag(+1, -1) in the (+1/2, -1/2) basis\n"
    "axes               incoming photon along +z, outgoing along -z;\n"
    "                   n is the unit vector from one atom to the other\n"
    "stokes convention  s1 = |ex|^2 - |ey|^2, s2 = 2 Re(ex* ey), s3 = 2 Im(ex* ey)\n"
    "handedness         (x + iy)/sqrt(2) is the s3 = +1 circular state along +z;\n"
    "                   helicity counts relative to the photon's own propagation\n"
    "channels           linpar  : in x,              out x\n"
    "                   linperp : in x,              out y\n"
    "                   hpres   : in (x+iy)/sqrt(2), out (x-iy)/sqrt(2)\n"
    "                   hflip   : in (x+iy)/sqrt(2), out (x+iy)/sqrt(2)\n"
    "u component        u = |e.n_perp|^2 - |e.(z x n_perp)|^2   (s1 for n along x)\n"
    "initial state      rho = (1 - p sigma_1.sigma_2)/4, -1/3 <= p <= 1\n";

struct PolarizationSpec {
  std::string channel;
  std::vector<double> jones_in;
  std::vector<double> jones_out;

  void add_options(CLI::App& cmd) {
    auto* chan = cmd.add_option("--channel", channel,
                                "Detection channel: linpar, linperp, hpres, hflip");
    auto* jin = cmd.add_option("--jones", jones_in,
                               "Incoming Jones vector re_x,im_x,re_y,im_y")
                    ->delimiter(',')
                    ->expected(4);
    auto* jout = cmd.add_option("--jones-out", jones_out,
                                "Analyzed outgoing Jones vector re_x,im_x,re_y,im_y")
                     ->delimiter(',')
                     ->expected(4);
    chan->excludes(jin)->excludes(jout);
    jin->needs(jout);
    jout->needs(jin);
  }

  struct Resolved {
    Polarization in;
    Polarization out;
    std::string in_label;
    std::string out_label;
  };

  Resolved resolve() const {
    if (!channel.empty()) {
      const auto parsed = parse_channel(channel);
      if (!parsed) throw OutOfRange("unknown channel '" + channel + "'");
      const ChannelPair pair = resolve_channel(*parsed);
      return {pair.in, pair.out, std::string(channel_name(*parsed)),
              std::string(channel_name(*parsed))};
    }
    if (jones_in.size() != 4 || jones_out.size() != 4)
      throw OutOfRange("either --channel or both --jones and --jones-out are required");
    const Polarization in = Polarization::normalized(
        Jones(Complex(jones_in[0], jones_in[1]), Complex(jones_in[2], jones_in[3])),
        Propagation::PlusZ);
    const Polarization out = Polarization::normalized(
        Jones(Complex(jones_out[0], jones_out[1]), Complex(jones_out[2], jones_out[3])),
        Propagation::MinusZ);
    return {in, out, jones_label(in), jones_label(out)};
  }
};

struct OutputSpec {
  std::string format = "csv";
  std::string path;

  void add_options(CLI::App& cmd) {
    cmd.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd.add_option("--out", path, "Output file (default: standard output)");
  }

  int write(const std::vector<SweepRecord>& records) const {
    const std::string text = format == "json" ? to_json(records) : to_csv(records);
    if (path.empty()) {
      std::cout << text;
      return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open output file '" << path << "'\n";
      return 1;
    }
    file << text;
    return 0;
  }
};

Geometry parse_geometry(const std::vector<double>& n) {
  return Geometry::direction(Vector3(n[0], n[1], n[2]));
}

int run_verify() {
  bool all_pass = true;
  for (const CheckResult& check : run_all_checks()) {
    std::cout << check.name << ": " << (check.pass ? "PASS" : "FAIL") << " ("
              << check.detail << ")\n";
    all_pass = all_pass && check.pass;
  }
  std::cout << (all_pass ? "all checks passed\n" : "verification FAILED\n");
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Which-path distinguishability and interference visibility for "
               "double scattering of a photon by two spin-1/2 atoms"};
  app.require_subcommand(0, 1);

  bool show_conventions = false;
  app.add_flag("--conventions", show_conventions,
               "Print the sign and basis conventions and exit");

  // point
  auto* point = app.add_subcommand("point", "Evaluate one (p, polarization, n) point");
  double point_p = 0;
  PolarizationSpec point_pol;
  OutputSpec point_out;
  std::vector<double> point_n;
  point->add_option("--p", point_p, "Initial-state parameter in [-1/3, 1]")->required();
  point_pol.add_options(*point);
  point->add_option("--n", point_n, "Inter-atomic direction nx,ny,nz")
      ->delimiter(',')
      ->expected(3)
      ->required();
  point_out.add_options(*point);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Tabulate the (p, u, u') grid");
  std::vector<double> sweep_p;
  std::vector<double> sweep_p_range;
  int sweep_u = 41;
  int sweep_uprime = 41;
  std::vector<double> sweep_n{1, 0, 0};
  OutputSpec sweep_out;
  auto* p_list = sweep->add_option("--p", sweep_p, "State parameter (repeatable)");
  auto* p_range = sweep->add_option("--p-range", sweep_p_range,
                                    "State parameter range min,max,count")
                      ->delimiter(',')
                      ->expected(3);
  p_list->excludes(p_range);
  sweep->add_option("--u-grid", sweep_u, "Number of u points in [-1, 1]")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  sweep->add_option("--uprime-grid", sweep_uprime, "Number of u' points in [-1, 1]")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  sweep->add_option("--n", sweep_n, "Inter-atomic direction nx,ny,nz")
      ->delimiter(',')
      ->expected(3)
      ->capture_default_str();
  sweep_out.add_options(*sweep);

  // average
  auto* average = app.add_subcommand("average", "Angular average over the direction n");
  double average_p = 0;
  PolarizationSpec average_pol;
  OutputSpec average_out;
  int average_resolution = 32;
  std::string average_scheme = "product";
  std::uint64_t average_seed = kDefaultQuadratureSeed;
  average->add_option("--p", average_p, "Initial-state parameter in [-1/3, 1]")->required();
  average_pol.add_options(*average);
  average->add_option("--resolution", average_resolution,
                      "Polar resolution (product grid uses resolution x 2*resolution "
                      "nodes; mc uses this many samples)")
      ->check(CLI::Range(2, 100000000))
      ->capture_default_str();
  average->add_option("--scheme", average_scheme, "Quadrature scheme")
      ->check(CLI::IsMember({"product", "mc"}))
      ->capture_default_str();
  average->add_option("--seed", average_seed, "Monte Carlo seed");
  average_out.add_options(*average);

  // verify
  app.add_subcommand("verify", "Run the built-in verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (show_conventions) {
    std::cout << kConventionsText;
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 1;
  }

  try {
    if (point->parsed()) {
      const auto pol = point_pol.resolve();
      const SweepRecord rec = point_record(point_p, pol.in, pol.out, pol.in_label,
                                           pol.out_label, parse_geometry(point_n));
      return point_out.write({rec});
    }
    if (sweep->parsed()) {
      std::vector<double> p_values = sweep_p;
      if (!sweep_p_range.empty()) {
        const int count = static_cast<int>(sweep_p_range[2]);
        if (count < 2) throw OutOfRange("--p-range count must be >= 2");
        for (int i = 0; i < count; ++i)
          p_values.push_back(sweep_p_range[0] +
                             (sweep_p_range[1] - sweep_p_range[0]) * i / (count - 1));
      }
      if (p_values.empty()) throw OutOfRange("sweep requires --p or --p-range");
      const auto records =
          sweep_records(p_values, sweep_u, sweep_uprime, parse_geometry(sweep_n));
      return sweep_out.write(records);
    }
    if (average->parsed()) {
      const auto pol = average_pol.resolve();
      const Quadrature quad = build_quadrature(average_scheme == "mc"
                                                   ? QuadratureScheme::MonteCarlo
                                                   : QuadratureScheme::ProductGrid,
                                               average_resolution, average_seed);
      const SweepRecord rec =
          average_record(average_p, pol.in, pol.out, pol.in_label, pol.out_label, quad);
      return average_out.write({rec});
    }
    return run_verify();
  } catch (const ZeroWeight&) {
    std::cerr << "error: dark channel\n";
    return 2;
  } catch (const AllDark&) {
    std::cerr << "error: dark channel\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
