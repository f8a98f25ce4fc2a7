#include "ptcl/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptcl/analysis.hpp"
#include "ptcl/error.hpp"
#include "ptcl/liouville.hpp"
#include "ptcl/models.hpp"
#include "ptcl/solver.hpp"
#include "table.hpp"

namespace ptcl::cli {

namespace {

constexpr double kResidualTolerance = 1e-9;
constexpr double kIdentityTolerance = 1e-10;
constexpr double kTransportTolerance = 1e-10;
constexpr double kFormulaAgreement = 1e-5;
constexpr double kDefaultAcceptTolerance = 1e-8;

/// Every flag of every command; defaults are the documented ones.
struct RunConfig {
  std::string format = "csv";
  std::string output;
  std::string config;

  std::string model = "coulomb";
  std::string target;
  double alpha = 0.5;
  double A = 0.5;
  int d = 1, j = 0;
  double f = 0.0;
  int D = 3, J = 0;
  double F = 0.0;
  double ze2 = 1.0;
  int n_max = 3;
  int q = 0;  // 0 = both

  int n = 0;
  int points = 50;
  int transport_points = 20;
  double c = 1.0;
  double kappa_c_sq = 1.0;
  double x_max = 0.0;  // 0 = model default
  double e_min = 0.0, e_max = 0.0;
  int grid = 600;

  int figure = 2;
  double a_min = 0.1, a_max = 3.0, a_step = 0.01;
  std::vector<int> n_list{0, 1, 2};
  std::string crossing = "opposite";
  int n_prime = 0;

  int d_max = 6;
};

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  Table table;
  std::string command;
  std::vector<std::string> comments;
  std::vector<std::string> breaches;
};

std::string contour_comment(const Contour& contour) {
  std::string line = "contour:";
  const char* sep = " ";
  for (const auto& [key, value] : contour.to_record()) {
    line += sep + key + "=" + value;
    sep = ", ";
  }
  return line;
}

double resolve_alpha(const RunConfig& cfg, const CLI::App& sub) {
  if (sub.count("--alpha") > 0 || (sub.count("--d") == 0 && sub.count("--j") == 0 && sub.count("--f") == 0))
    return cfg.alpha;
  return alpha(OscillatorParams{cfg.d, cfg.j, cfg.f});
}

double resolve_big_a(const RunConfig& cfg, const CLI::App& sub) {
  if (sub.count("--A") > 0 || (sub.count("--D") == 0 && sub.count("--J") == 0 && sub.count("--F") == 0))
    return cfg.A;
  return big_a(CoulombParams{cfg.D, cfg.J, cfg.F, cfg.ze2});
}

std::vector<int> q_values(int q) {
  if (q == 0) return {+1, -1};
  return {q};
}

Contour model_contour(const RunConfig& cfg, bool coulomb) {
  if (coulomb)
    return Contour::ks_parabola(cfg.c, cfg.kappa_c_sq, cfg.x_max > 0.0 ? cfg.x_max : Contour::kCoulombXMax);
  return Contour::shifted_line(cfg.c, cfg.x_max > 0.0 ? cfg.x_max : Contour::kOscillatorXMax);
}

double accept_tolerance() {
  const char* env = std::getenv("PTCL_TOL");
  if (!env || !*env) return kDefaultAcceptTolerance;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (*end != '\0' || !(tol > 0.0)) throw BadInput("PTCL_TOL must be a positive number, got '" + std::string(env) + "'");
  return tol;
}

Output cmd_spectrum(const RunConfig& cfg, const CLI::App& sub) {
  if (cfg.n_max < 0) throw BadInput("--n-max must be non-negative");
  Output out{{{"n", "q", "energy", "normalizable", "status"}, {}}, "spectrum " + cfg.model, {}, {}};
  if (cfg.model == "ho") {
    const double a = resolve_alpha(cfg, sub);
    if (!(a > 0.0)) throw BadInput("--alpha must be positive");
    out.comments.push_back("alpha=" + format_double(a));
    for (int n = 0; n <= cfg.n_max; ++n)
      for (int q : q_values(cfg.q))
        out.table.add_row({(long long)n, (long long)q, ho_energy(QuantumState(n, q), a), true, std::string("bound")});
    return out;
  }
  const double big = resolve_big_a(cfg, sub);
  if (!(big > 0.0)) throw BadInput("--A must be positive");
  if (!(cfg.ze2 > 0.0)) throw BadInput("--ze2 must be positive");
  out.comments.push_back("A=" + format_double(big) + ", ze2=" + format_double(cfg.ze2));
  for (int n = 0; n <= cfg.n_max; ++n)
    for (int q : q_values(cfg.q)) {
      const QuantumState s(n, q);
      try {
        const CoulombLevel level = coulomb_energy(s, big, cfg.ze2);
        out.table.add_row({(long long)n, (long long)q, level.energy, level.normalizable,
                           std::string(level.normalizable ? "normalizable" : "non_normalizable")});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DivergentState) throw;
        out.table.add_row({(long long)n, (long long)q, std::monostate{}, false, std::string("divergent")});
      }
    }
  return out;
}

void add_check(Output& out, const std::string& check, double value, double tol) {
  const bool pass = value <= tol;
  out.table.add_row({check, value, tol, pass});
  if (!pass) out.breaches.push_back(check + " = " + format_double(value) + " exceeds " + format_double(tol));
}

Output verify_residual(const RunConfig& cfg, const CLI::App& sub) {
  const bool coulomb = cfg.model == "coulomb";
  const QuantumState s(cfg.n, cfg.q == 0 ? -1 : cfg.q);
  const Contour contour = model_contour(cfg, coulomb);
  if (cfg.points < 2) throw BadInput("--points must be at least 2");
  Output out{{{"check", "value", "tolerance", "pass"}, {}}, "verify residual", {contour_comment(contour)}, {}};
  double worst = 0.0;
  const double a = coulomb ? resolve_big_a(cfg, sub) : resolve_alpha(cfg, sub);
  for (int k = 0; k < cfg.points; ++k) {
    const double x = -contour.x_max() + 2.0 * contour.x_max() * k / (cfg.points - 1);
    const cplx z = contour.eval(x);
    worst = std::max(worst, coulomb ? coulomb_residual(s, a, cfg.ze2, z) : ho_residual(s, a, z));
  }
  out.comments.push_back("model=" + cfg.model + ", n=" + std::to_string(s.n()) + ", q=" + std::to_string(s.q()) +
                         (coulomb ? ", A=" : ", alpha=") + format_double(a));
  add_check(out, "max_residual", worst, kResidualTolerance);
  return out;
}

Output verify_liouville(const RunConfig& cfg, const CLI::App& sub) {
  const QuantumState s(cfg.n, cfg.q == 0 ? -1 : cfg.q);
  const double a = resolve_alpha(cfg, sub);
  const Contour contour = model_contour(cfg, true);
  Output out{{{"check", "value", "tolerance", "pass"}, {}}, "verify liouville", {contour_comment(contour)}, {}};
  out.comments.push_back("n=" + std::to_string(s.n()) + ", q=" + std::to_string(s.q()) + ", alpha=" + format_double(a) +
                         ", ze2=" + format_double(cfg.ze2));
  add_check(out, "central_identity", check_central_identity(s, a, cfg.ze2, contour, cfg.points).max_scaled_deviation,
            kIdentityTolerance);
  add_check(out, "wavefunction_transport",
            check_wavefunction_transport(s, a, cfg.ze2, contour, cfg.transport_points).ratio_spread,
            kTransportTolerance);
  return out;
}

struct FormulaLevel {
  int n;
  int q;
  double energy;
};

std::vector<FormulaLevel> formula_levels(bool coulomb, double param, double ze2, double e_min, double e_max) {
  std::vector<FormulaLevel> levels;
  for (int q : {+1, -1}) {
    for (int n = 0;; ++n) {
      const QuantumState s(n, q);
      if (!coulomb) {
        const double e = ho_energy(s, param);
        if (e > e_max) break;
        if (e >= e_min) levels.push_back({n, q, e});
        continue;
      }
      const double den = coulomb_denominator(s, param);
      if (den > 0.0 && std::abs(den) > 1e-12) {
        const double e = ze2 * ze2 / (den * den);
        if (e < e_min) break;
        if (e <= e_max) levels.push_back({n, q, e});
      }
    }
  }
  std::sort(levels.begin(), levels.end(), [](const auto& l, const auto& r) { return l.energy < r.energy; });
  return levels;
}

Output verify_shoot(const RunConfig& cfg, const CLI::App& sub) {
  const bool coulomb = cfg.model == "coulomb";
  const double param = coulomb ? resolve_big_a(cfg, sub) : resolve_alpha(cfg, sub);
  const double e_min = sub.count("--e-min") ? cfg.e_min : (coulomb ? 0.05 : 0.0);
  const double e_max = sub.count("--e-max") ? cfg.e_max : (coulomb ? 3.0 : 16.0);
  if (!(e_min < e_max)) throw BadInput("--e-min must be below --e-max");
  if (coulomb && !(e_min > 0.0)) throw BadInput("--e-min must be positive for the Coulomb model");
  if (cfg.grid < 8) throw BadInput("--grid must be at least 8");
  const Contour contour = model_contour(cfg, coulomb);
  const ShootingProblem problem =
      coulomb ? coulomb_problem(param, cfg.ze2, contour) : oscillator_problem(param, contour);
  ScanOptions options;
  options.accept_tol = accept_tolerance();
  const std::vector<EigenResult> found = scan_eigenvalues(problem, e_min, e_max, cfg.grid, options);
  const std::vector<FormulaLevel> expected = formula_levels(coulomb, param, cfg.ze2, e_min, e_max);

  Output out{{{"n", "q", "energy_formula", "energy_found", "rel_error", "match_residual", "status"}, {}},
             "verify shoot",
             {contour_comment(contour)},
             {}};
  out.comments.push_back("model=" + cfg.model + (coulomb ? ", A=" : ", alpha=") + format_double(param) +
                         ", window=[" + format_double(e_min) + ", " + format_double(e_max) + "]");

  std::vector<bool> used(found.size(), false);
  for (const FormulaLevel& level : expected) {
    std::size_t best = found.size();
    double best_err = INFINITY;
    for (std::size_t i = 0; i < found.size(); ++i) {
      const double err = std::abs(found[i].energy - level.energy) / std::abs(level.energy);
      if (!used[i] && err < best_err) {
        best_err = err;
        best = i;
      }
    }
    if (best < found.size() && best_err <= kFormulaAgreement) {
      used[best] = true;
      out.table.add_row({(long long)level.n, (long long)level.q, level.energy, found[best].energy, best_err,
                         found[best].match_residual, std::string("found")});
    } else {
      out.table.add_row({(long long)level.n, (long long)level.q, level.energy, std::monostate{}, std::monostate{},
                         std::monostate{}, std::string("missing")});
      out.breaches.push_back("formula level " + format_double(level.energy) + " not found");
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (used[i]) continue;
    out.table.add_row({std::monostate{}, std::monostate{}, std::monostate{}, found[i].energy, std::monostate{},
                       found[i].match_residual, std::string("unexpected")});
    out.breaches.push_back("eigenvalue " + format_double(found[i].energy) + " matches no formula level");
  }
  return out;
}

Output cmd_figure(const RunConfig& cfg, const CLI::App& sub) {
  FigureRequest request;
  request.z_e2 = cfg.ze2;
  request.a_step = cfg.a_step;
  request.a_min = cfg.a_min;
  request.a_max = cfg.a_max;
  request.n_list = cfg.n_list;
  switch (cfg.figure) {
    case 1: request.family = FigureFamily::QPlus; break;
    case 2: request.family = FigureFamily::QMinus; break;
    default: {
      request.family = FigureFamily::Crossing;
      request.crossing = cfg.crossing == "same" ? CrossingKind::SamePositiveQ : CrossingKind::OppositeQ;
      if (cfg.n_list.empty()) throw BadInput("--n needs a value for figure 3");
      request.n = cfg.n_list.front();
      request.n_prime = cfg.n_prime;
      const CrossingRecord rec = request.crossing == CrossingKind::OppositeQ
                                     ? crossing_opposite(request.n, request.n_prime, cfg.ze2)
                                     : crossing_same_positive(request.n, request.n_prime, cfg.ze2);
      if (sub.count("--a-min") == 0) request.a_min = std::max(cfg.a_step, rec.a_crit - 0.5);
      if (sub.count("--a-max") == 0) request.a_max = rec.a_crit + 0.5;
      break;
    }
  }
  if (!(request.a_min > 0.0) || !(request.a_min < request.a_max) || !(request.a_step > 0.0))
    throw BadInput("empty A range: need 0 < --a-min < --a-max and --a-step > 0");
  if (request.n_list.empty()) throw BadInput("--n needs at least one level index");

  Output out{{{"A", "n", "q", "E", "normalizable"}, {}}, "figure " + std::to_string(cfg.figure), {}, {}};
  out.comments.push_back("ze2=" + format_double(cfg.ze2));
  for (const FigureRow& row : figure_data(request))
    out.table.add_row({row.a, (long long)row.n, (long long)row.q, optional_cell(row.energy), row.normalizable});
  return out;
}

Output cmd_crossings(const RunConfig& cfg) {
  if (cfg.n_max < 0) throw BadInput("--n-max must be non-negative");
  if (cfg.d_max < 2) throw BadInput("--d-max must be at least 2");
  Output out{{{"kind", "n", "n_prime", "a_crit", "energy", "denominator_n", "denominator_n_prime", "physical_DJ"}, {}},
             "crossings",
             {"ze2=" + format_double(cfg.ze2)},
             {}};
  for (const CrossingRecord& r : enumerate_crossings(cfg.n_max, cfg.ze2)) {
    std::string pairs;
    for (const DimensionPair& p : physical_critical(r.a_crit, cfg.d_max))
      pairs += (pairs.empty() ? "" : " ") + std::to_string(p.D) + ":" + std::to_string(p.J);
    out.table.add_row({to_string(r.kind), (long long)r.n, (long long)r.n_prime, r.a_crit, r.energy_at_crossing,
                       r.denominator_n, r.denominator_n_prime, pairs});
  }
  return out;
}

std::string json_scalar_text(const nlohmann::json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  if (value.is_number()) return format_double(value.get<double>());
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  throw BadInput("config values must be scalars or arrays of scalars");
}

// Appends "--key value..." for every config entry the command line does not
// already set, so that explicit flags win over the file.
std::vector<std::string> merge_config(const std::vector<std::string>& args, CLI::App& app) {
  auto it = std::find(args.begin(), args.end(), "--config");
  std::string path;
  if (it != args.end() && std::next(it) != args.end()) path = *std::next(it);
  for (const std::string& a : args)
    if (a.rfind("--config=", 0) == 0) path = a.substr(9);
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw BadInput("--config: cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw BadInput("--config: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw BadInput("--config: expected a flat JSON object");

  CLI::App* sub = nullptr;
  for (const std::string& a : args)
    if ((sub = app.get_subcommand_no_throw(a)) != nullptr) break;

  std::vector<std::string> merged = args;
  for (const auto& [key, value] : doc.items()) {
    const std::string flag = "--" + key;
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    const bool known = app.get_option_no_throw(flag) != nullptr || (sub && sub->get_option_no_throw(flag) != nullptr);
    if (!known) continue;
    merged.push_back(flag);
    if (value.is_array()) {
      for (const auto& v : value) merged.push_back(json_scalar_text(v));
    } else {
      merged.push_back(json_scalar_text(value));
    }
  }
  return merged;
}

void add_model_params(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--alpha", cfg.alpha, "oscillator alpha (overrides --d/--j/--f)")->capture_default_str();
  sub->add_option("--d", cfg.d, "oscillator dimension")->capture_default_str();
  sub->add_option("--j", cfg.j, "oscillator partial wave")->capture_default_str();
  sub->add_option("--f", cfg.f, "oscillator 1/r^2 spike strength")->capture_default_str();
  sub->add_option("--A", cfg.A, "Coulomb A (overrides --D/--J/--F)")->capture_default_str();
  sub->add_option("--D", cfg.D, "Coulomb dimension")->capture_default_str();
  sub->add_option("--J", cfg.J, "Coulomb partial wave")->capture_default_str();
  sub->add_option("--F", cfg.F, "Coulomb 1/t^2 spike strength")->capture_default_str();
  sub->add_option("--ze2", cfg.ze2, "Coulomb coupling Ze^2")->capture_default_str()->check(CLI::PositiveNumber);
}

void add_contour_params(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--c", cfg.c, "contour shift c")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--kappa-c-sq", cfg.kappa_c_sq, "parabola scale")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--x-max", cfg.x_max, "contour half-length (default 12 oscillator, 20 Coulomb)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"PT-symmetric oscillator / Coulomb spectra, KS map checks and shooting verification", "ptcl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--output", cfg.output, "write the table to this file instead of stdout");
  app.add_option("--config", cfg.config, "flat JSON file of flag values; explicit flags win");
  app.footer("Environment: PTCL_TOL overrides the shooting residual acceptance (default 1e-8).");

  auto* spectrum = app.add_subcommand("spectrum", "closed-form spectrum of one model");
  spectrum->add_option("model", cfg.model, "ho or coulomb")->required()->check(CLI::IsMember({"ho", "coulomb"}));
  add_model_params(spectrum, cfg);
  spectrum->add_option("--n-max", cfg.n_max, "largest n")->capture_default_str();
  spectrum->add_option("--q", cfg.q, "quasi-parity +1 or -1 (default both)")->check(CLI::IsMember({1, -1}));

  auto* verify = app.add_subcommand("verify", "run a numerical verification");
  verify->add_option("target", cfg.target, "residual, liouville or shoot")
      ->required()
      ->check(CLI::IsMember({"residual", "liouville", "shoot"}));
  verify->add_option("--model", cfg.model, "ho or coulomb")->check(CLI::IsMember({"ho", "coulomb"}))->capture_default_str();
  add_model_params(verify, cfg);
  add_contour_params(verify, cfg);
  verify->add_option("--n", cfg.n, "principal index")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--q", cfg.q, "quasi-parity +1 or -1 (default -1)")->check(CLI::IsMember({1, -1}));
  verify->add_option("--points", cfg.points, "contour points for identity checks")->capture_default_str();
  verify->add_option("--transport-points", cfg.transport_points, "contour points for the wavefunction ratio")
      ->capture_default_str();
  verify->add_option("--e-min", cfg.e_min, "scan window start (default 0.05 Coulomb, 0 oscillator)");
  verify->add_option("--e-max", cfg.e_max, "scan window end (default 3 Coulomb, 16 oscillator)");
  verify->add_option("--grid", cfg.grid, "scan grid points")->capture_default_str();

  auto* figure = app.add_subcommand("figure", "E(A) curves: 1 = q=+1, 2 = q=-1, 3 = a crossing");
  figure->add_option("which", cfg.figure, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
  figure->add_option("--a-min", cfg.a_min, "first A")->capture_default_str();
  figure->add_option("--a-max", cfg.a_max, "last A")->capture_default_str();
  figure->add_option("--a-step", cfg.a_step, "A step")->capture_default_str();
  figure->add_option("--n", cfg.n_list, "level indices (figure 3: the q=+1 member)")->capture_default_str();
  figure->add_option("--ze2", cfg.ze2, "Coulomb coupling Ze^2")->capture_default_str()->check(CLI::PositiveNumber);
  figure->add_option("--crossing", cfg.crossing, "figure 3: opposite or same")
      ->check(CLI::IsMember({"opposite", "same"}))
      ->capture_default_str();
  figure->add_option("--nprime", cfg.n_prime, "figure 3: second member")->capture_default_str();

  auto* crossings = app.add_subcommand("crossings", "list exact level crossings");
  crossings->add_option("--n-max", cfg.n_max, "largest n")->capture_default_str();
  crossings->add_option("--ze2", cfg.ze2, "Coulomb coupling Ze^2")->capture_default_str()->check(CLI::PositiveNumber);
  crossings->add_option("--d-max", cfg.d_max, "largest dimension in the physical (D:J) column")->capture_default_str();

  try {
    std::vector<std::string> argv = merge_config(args, app);
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  Output result;
  try {
    if (spectrum->parsed()) {
      result = cmd_spectrum(cfg, *spectrum);
    } else if (verify->parsed()) {
      if (cfg.target == "residual") result = verify_residual(cfg, *verify);
      else if (cfg.target == "liouville") result = verify_liouville(cfg, *verify);
      else result = verify_shoot(cfg, *verify);
    } else if (figure->parsed()) {
      result = cmd_figure(cfg, *figure);
    } else {
      result = cmd_crossings(cfg);
    }
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  const OutputFormat format = cfg.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (cfg.output.empty()) {
    write_table(out, result.table, format, result.command, result.comments);
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: --output: cannot open '" << cfg.output << "'\n";
      return kBadInput;
    }
    write_table(file, result.table, format, result.command, result.comments);
  }
  for (const std::string& breach : result.breaches) err << "tolerance breach: " << breach << '\n';
  return result.breaches.empty() ? kOk : kToleranceBreach;
}

}  // namespace ptcl::cli
