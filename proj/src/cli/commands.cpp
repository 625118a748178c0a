#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fluxring/cli/cli.hpp"
#include "fluxring/cli/output.hpp"
#include "fluxring/cli/ranges.hpp"
#include "fluxring/cli/verify.hpp"
#include "fluxring/darkstate.hpp"
#include "fluxring/errors.hpp"
#include "fluxring/harmonic.hpp"
#include "fluxring/oracle/quadrature.hpp"
#include "fluxring/ring.hpp"
#include "fluxring/superposition.hpp"
#include "json.hpp"

namespace fluxring::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Request {
  std::string geometry = "ring";
  std::string flux_case = "auto";
  int ell = 4;
  std::optional<int> ell_max;
  std::optional<std::string> sigma_ell;
  std::string delta_alpha = "0.5:4:351";
  double theta = 0.0;
  std::optional<double> alpha_plus;
  std::optional<double> alpha_minus;
  std::optional<double> beta_mag2;
  std::optional<double> epsilon;
  bool boundary = false;
  std::string convention = "paper";
  std::string format = "csv";
  std::optional<std::string> out;
  std::optional<int> m_window;
  int n_max = 2;
  std::optional<std::string> profile;
  int profile_points = 201;
  std::optional<double> profile_rmax;
  int ring_grid = oracle::kDefaultRingGrid;
  int radial_grid = oracle::kDefaultRadialGrid;
  std::optional<double> tolerance;
};

void add_output_options(CLI::App* sub, Request& req) {
  sub->add_option("--format", req.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", req.out, "Output file (default: standard output)");
}

void add_geometry_options(CLI::App* sub, Request& req) {
  sub->add_option("--geometry", req.geometry, "Trap geometry")->check(CLI::IsMember({"ring", "harmonic"}));
  sub->add_option("--ell", req.ell, "Beam winding number");
  sub->add_option("--sigma-ell", req.sigma_ell, "sigma*ell as min:max:count, a list, or a value");
}

std::string default_sigma_grid(int ell) {
  if (ell <= 0) return "0";
  return std::to_string(-ell) + ":" + std::to_string(ell) + ":" + std::to_string(40 * ell + 1);
}

std::vector<double> single_value(const std::optional<std::string>& text, const char* flag) {
  if (!text) throw UsageError(std::string(flag) + " is required here");
  const auto values = parse_grid(*text);
  if (values.size() != 1) throw UsageError(std::string(flag) + " must be a single value here");
  return values;
}

Table spectrum_table(const Request& req) {
  const GeometryKind geom = parse_geometry(req.geometry);
  if (req.ell < 0) throw DomainError("ell must be non-negative");
  const std::vector<double> grid = parse_grid(req.sigma_ell.value_or(default_sigma_grid(req.ell)));
  const int window = req.m_window.value_or(min_ring_window(grid));

  Table t;
  t.unit = unit_label(geom);
  if (geom == GeometryKind::Ring) {
    t.columns = {"sigma_ell", "m", "energy", "is_ground", "gap"};
    for (const RingSweepRow& r : ring_spectrum_sweep(req.ell, grid, window)) {
      t.rows.push_back({r.sigma_ell, static_cast<long long>(r.m), r.energy, r.is_ground, r.gap});
    }
    return t;
  }
  t.columns = {"sigma_ell", "n", "m", "mu", "energy", "is_ground", "gap"};
  for (const HarmonicSweepRow& r : harmonic_spectrum_sweep(req.ell, grid, req.n_max, window)) {
    t.rows.push_back({r.sigma_ell, static_cast<long long>(r.n), static_cast<long long>(r.m), r.mu, r.energy,
                      r.is_ground, r.gap});
  }
  return t;
}

Table profile_table(const Request& req) {
  if (parse_geometry(req.geometry) != GeometryKind::Harmonic) {
    throw UsageError("--profile applies to the harmonic geometry only");
  }
  const double sl = single_value(req.sigma_ell, "--sigma-ell")[0];
  const auto nm = parse_grid(*req.profile);
  if (nm.size() != 2 || !all_integer(nm)) throw UsageError("--profile takes n,m");
  const RadialFunction f =
      radial_wavefunction(req.ell, sl, static_cast<int>(std::lround(nm[0])), static_cast<int>(std::lround(nm[1])));
  const double r_max = req.profile_rmax.value_or(oracle::default_quadrature_extent(f));
  if (req.profile_points < 2) throw UsageError("--points must be at least 2");
  Table t;
  t.unit = "r0";
  t.columns = {"r", "f"};
  for (const RadialSample& s : radial_profile(f, r_max, req.profile_points)) t.rows.push_back({s.r, s.f});
  return t;
}

Table gap_table(const Request& req) {
  const GeometryKind geom = parse_geometry(req.geometry);
  const int ell_max = req.ell_max.value_or(req.ell);
  if (req.ell < 0 || ell_max < req.ell) throw UsageError("--ell-max must be >= --ell >= 0");
  const std::vector<double> grid = parse_grid(req.sigma_ell.value_or("0"));
  Table t;
  t.unit = unit_label(geom);
  t.columns = {"ell", "sigma_ell", "ground_n", "ground_m", "gap"};
  for (int ell = req.ell; ell <= ell_max; ++ell) {
    for (double sl : grid) {
      if (geom == GeometryKind::Ring) {
        t.rows.push_back({static_cast<long long>(ell), sl, 0LL, static_cast<long long>(ground_m(sl)), ring_gap(ell, sl)});
      } else {
        if (std::abs(sl) > ell) throw DomainError("|sigma ell| must not exceed ell in the harmonic trap");
        const HarmonicQuantumNumbers q = ground_quantum_numbers(sl);
        t.rows.push_back({static_cast<long long>(ell), sl, static_cast<long long>(q.n), static_cast<long long>(q.m),
                          harmonic_gap(ell, sl)});
      }
    }
  }
  return t;
}

Json complex_vector(const Vector2c<double>& v) {
  Json arr = Json::array();
  for (int i = 0; i < 2; ++i) arr.push_back(Json::array({rounded(v(i).real()), rounded(v(i).imag())}));
  return arr;
}

Json result_json(const SuperpositionResult& r) {
  Json j;
  j["flux_case"] = to_string(r.flux_case);
  j["geometry"] = to_string(r.geometry);
  j["unit"] = unit_label(r.geometry);
  j["ell"] = r.ell;
  j["sigma_ell"] = rounded(r.sigma_ell);
  j["sigma"] = rounded(r.sigma);
  j["epsilon"] = rounded(r.epsilon);
  j["theta"] = rounded(r.theta);
  j["m_check"] = r.m_check;
  j["e_zero"] = rounded(r.e_zero);
  j["e_plus"] = rounded(r.e_plus);
  j["e_minus"] = rounded(r.e_minus);
  j["delta_e"] = rounded(r.delta_e);
  j["xi"] = complex_vector(r.xi);
  j["zeta"] = complex_vector(r.zeta);
  j["xi_normalized"] = complex_vector(r.xi_normalized);
  j["zeta_normalized"] = complex_vector(r.zeta_normalized);
  j["mixing_ratio"] = rounded(r.mixing_ratio);
  j["gap"] = rounded(r.gap);
  j["feasible"] = r.feasible;
  j["boundary"] = r.boundary;
  j["warnings"] = r.warnings;
  return j;
}

FluxCaseKind explicit_case(const Request& req) {
  if (req.flux_case == "auto") {
    throw UsageError("--case auto needs --alpha-plus, --alpha-minus and --beta-mag2");
  }
  return parse_flux_case(req.flux_case);
}

std::string superpose_from_amplitudes(const Request& req) {
  if (!req.alpha_plus || !req.alpha_minus || !req.beta_mag2) {
    throw UsageError("--alpha-plus, --alpha-minus and --beta-mag2 must be given together");
  }
  if (req.sigma_ell || req.epsilon) throw UsageError("amplitudes fix sigma and eps; drop --sigma-ell/--epsilon");
  if (!(*req.beta_mag2 >= 0.0)) throw DomainError("--beta-mag2 must be >= 0");
  const FieldConfig config =
      FieldConfig::make(*req.alpha_plus, *req.alpha_minus, std::sqrt(*req.beta_mag2), req.theta, req.ell);
  const FluxClassification cls = classify_flux_case(config);
  if (cls.flux_case.kind == FluxCaseKind::Neither) {
    throw ValidationError("amplitudes satisfy neither |beta|^2 = alpha_+ alpha_- nor |beta|^2 = -alpha_+ alpha_-");
  }
  if (req.flux_case != "auto" && parse_flux_case(req.flux_case) != cls.flux_case.kind) {
    throw ValidationError(std::string("amplitudes classify as case ") + to_string(cls.flux_case.kind) +
                          ", not case " + req.flux_case);
  }
  const double delta_alpha = std::abs(*req.alpha_plus - *req.alpha_minus);
  const double eps = epsilon_param(delta_alpha, cls.sigma, parse_overlap_convention(req.convention));
  const SuperpositionResult r =
      superpose(cls.flux_case.kind, parse_geometry(req.geometry), req.ell, cls.sigma * req.ell, eps, req.theta);
  Json j = result_json(r);
  j["delta_alpha"] = rounded(delta_alpha);
  j["classification_residual"] = rounded(cls.flux_case.residual);
  return j.dump(2) + "\n";
}

std::string superpose_single(const Request& req) {
  const double sl = single_value(req.sigma_ell, "--sigma-ell")[0];
  const SuperpositionResult r =
      superpose(explicit_case(req), parse_geometry(req.geometry), req.ell, sl, *req.epsilon, req.theta);
  return result_json(r).dump(2) + "\n";
}

Table superpose_grid(const Request& req) {
  const FluxCaseKind c = explicit_case(req);
  const GeometryKind geom = parse_geometry(req.geometry);
  if (!req.sigma_ell) throw UsageError("--sigma-ell is required for feasibility grids");
  const std::vector<double> sl = parse_grid(*req.sigma_ell);
  const OverlapConvention conv = parse_overlap_convention(req.convention);
  Table t;
  t.unit = unit_label(geom);
  if (req.boundary) {
    if (!all_integer(sl)) throw UsageError("feasibility grids take integer sigma_ell values");
    t.columns = {"case", "geometry", "ell", "sigma_ell", "delta_alpha_boundary"};
    for (double s : sl) {
      t.rows.push_back({std::string(to_string(c)), std::string(to_string(geom)), static_cast<long long>(req.ell), s,
                        feasibility_boundary(c, geom, req.ell, s, conv)});
    }
    return t;
  }
  const std::vector<double> da = parse_grid(req.delta_alpha);
  t.columns = {"case", "geometry", "ell", "sigma_ell", "delta_alpha", "epsilon", "delta_e", "gap", "mixing_ratio",
               "feasible"};
  for (const FeasibilityRow& r : feasibility_sweep(c, geom, req.ell, sl, da, conv, req.theta)) {
    t.rows.push_back({std::string(to_string(r.flux_case)), std::string(to_string(r.geometry)),
                      static_cast<long long>(r.ell), r.sigma_ell, r.delta_alpha, r.epsilon, r.delta_e, r.gap,
                      r.mixing_ratio, r.feasible});
  }
  return t;
}

std::string render(const Table& t, const std::string& format) {
  std::ostringstream s;
  if (format == "json") {
    write_json(t, s);
  } else {
    write_csv(t, s);
  }
  return s.str();
}

std::string verify_output(const VerifyReport& report, const std::string& format) {
  if (format == "csv") {
    Table t;
    t.unit = "per check";
    t.columns = {"name", "deviation", "tolerance", "passed"};
    for (const auto& c : report.checks) t.rows.push_back({c.name, c.deviation, c.tolerance, c.passed});
    return render(t, format);
  }
  Json j;
  j["passed"] = report.passed;
  j["ring_grid"] = report.ring_grid;
  j["radial_grid"] = report.radial_grid;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json item;
    item["name"] = c.name;
    item["deviation"] = std::isfinite(c.deviation) ? Json(rounded(c.deviation)) : Json(nullptr);
    item["tolerance"] = rounded(c.tolerance);
    item["passed"] = c.passed;
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

void emit(const std::string& text, const Request& req, std::ostream& out) {
  if (!req.out) {
    out << text;
    return;
  }
  std::ofstream file(*req.out, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open output file " + *req.out);
  file << text;
  if (!file) throw ConfigError("failed writing output file " + *req.out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Dark-state flux tubes: spectra, gaps, superposition ground states and oracle checks", "fluxring"};
  app.require_subcommand(1);

  CLI::App* spectrum = app.add_subcommand("spectrum", "Ring or harmonic-trap energies over a sigma*ell grid");
  add_geometry_options(spectrum, req);
  add_output_options(spectrum, req);
  spectrum->add_option("--m-window", req.m_window, "Largest |m| listed");
  spectrum->add_option("--n-max", req.n_max, "Largest radial quantum number (harmonic)");
  spectrum->add_option("--profile", req.profile, "Dump the radial function n,m instead (harmonic)");
  spectrum->add_option("--points", req.profile_points, "Radial profile sample count");
  spectrum->add_option("--r-max", req.profile_rmax, "Radial profile extent in r0");

  CLI::App* gap = app.add_subcommand("gap", "Ground state and excitation gap");
  add_geometry_options(gap, req);
  add_output_options(gap, req);
  gap->add_option("--ell-max", req.ell_max, "Sweep ell from --ell to this value");

  CLI::App* superpose_cmd = app.add_subcommand("superpose", "Superposition energy reduction and feasibility");
  add_geometry_options(superpose_cmd, req);
  add_output_options(superpose_cmd, req);
  superpose_cmd->add_option("--case", req.flux_case, "Flux condition")->check(CLI::IsMember({"i", "ii", "auto"}));
  superpose_cmd->add_option("--delta-alpha", req.delta_alpha, "|alpha_+ - alpha_-| grid");
  superpose_cmd->add_option("--theta", req.theta, "Relative phase of the two coherent components");
  superpose_cmd->add_option("--alpha-plus", req.alpha_plus, "Control amplitude alpha_+");
  superpose_cmd->add_option("--alpha-minus", req.alpha_minus, "Control amplitude alpha_-");
  superpose_cmd->add_option("--beta-mag2", req.beta_mag2, "Probe intensity |beta|^2");
  superpose_cmd->add_option("--epsilon", req.epsilon, "Single point at this eps (JSON)");
  superpose_cmd->add_flag("--boundary", req.boundary, "Emit the feasibility boundary per sigma*ell");
  superpose_cmd->add_option("--overlap-convention", req.convention, "Coherent-state overlap convention")
      ->check(CLI::IsMember({"paper", "standard"}));

  CLI::App* verify = app.add_subcommand("verify", "Run the oracle suite");
  verify->add_option("--format", req.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", req.out, "Output file (default: standard output)");
  verify->add_option("--ring-grid", req.ring_grid, "Ring FD grid size");
  verify->add_option("--radial-grid", req.radial_grid, "Radial FD grid size");
  verify->add_option("--tolerance", req.tolerance, "Replace every check tolerance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (!verify->count("--format")) req.format = "json";
      VerifyOptions opts;
      opts.ring_grid = req.ring_grid;
      opts.radial_grid = req.radial_grid;
      opts.tolerance = req.tolerance;
      const VerifyReport report = run_verify(opts);
      emit(verify_output(report, req.format), req, out);
      if (!report.passed) {
        for (const auto& c : report.checks) {
          if (!c.passed) err << "verification failed: " << c.name << '\n';
        }
        return kExitVerification;
      }
      return kExitOk;
    }
    std::string text;
    if (spectrum->parsed()) {
      text = render(req.profile ? profile_table(req) : spectrum_table(req), req.format);
    } else if (gap->parsed()) {
      text = render(gap_table(req), req.format);
    } else if (req.alpha_plus || req.alpha_minus || req.beta_mag2) {
      text = superpose_from_amplitudes(req);
    } else if (req.epsilon) {
      text = superpose_single(req);
    } else {
      text = render(superpose_grid(req), req.format);
    }
    emit(text, req, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace fluxring::cli
