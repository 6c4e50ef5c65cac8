#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "loglambert/errors.hpp"
#include "loglambert/loglambert.hpp"
#include "loglambert/maxent.hpp"

namespace loglambert::cli {
namespace {

using nlohmann::json;

enum class Format { Plain, Csv, Json };

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string sci5(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Non-finite values are emitted as null.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void add_format_option(CLI::App& cmd, Format& format) {
  const std::map<std::string, Format> names{{"plain", Format::Plain}, {"csv", Format::Csv}, {"json", Format::Json}};
  cmd.add_option("--format", format, "Output format: plain, csv or json")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

struct ParamFlags {
  double a = 0.0, b = 0.0, c = 0.0;
  void add(CLI::App& cmd) {
    cmd.add_option("-A", a, "Coefficient of y ln(By)")->required();
    cmd.add_option("-B", b, "Scale inside the logarithm (nonzero)")->required();
    cmd.add_option("-C", c, "Translation constant")->required();
  }
  json to_json() const { return {{"A", a}, {"B", b}, {"C", c}}; }
};

std::string monotone_name(Monotone m) { return m == Monotone::Increasing ? "increasing" : "decreasing"; }

// --- eval -------------------------------------------------------------------

int cmd_eval(const ParamFlags& pf, int branch, double x, double tol, Format format, std::ostream& out) {
  const Params p(pf.a, pf.b, pf.c);
  const EvalResult r = eval(p, BranchId{branch}, x, tol);
  switch (format) {
    case Format::Plain:
      out << "y = " << g17(r.y) << "\n"
          << "residual = " << g17(r.residual) << "\n"
          << "iterations = " << r.iterations << "\n";
      if (r.on_seam) out << "seam = true\n";
      break;
    case Format::Csv:
      out << "A,B,C,branch,x,y,residual,iterations,seam\n"
          << g17(pf.a) << ',' << g17(pf.b) << ',' << g17(pf.c) << ',' << branch << ',' << g17(x) << ','
          << g17(r.y) << ',' << g17(r.residual) << ',' << r.iterations << ',' << (r.on_seam ? 1 : 0) << "\n";
      break;
    case Format::Json: {
      json j{{"params", pf.to_json()},
             {"rows", json::array({{{"branch", branch},
                                    {"x", x},
                                    {"y", r.y},
                                    {"residual", r.residual},
                                    {"iterations", r.iterations},
                                    {"seam", r.on_seam}}})}};
      out << j.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

// --- table ------------------------------------------------------------------

int cmd_table(Format format, std::ostream& out) {
  const Params p(1.0, 1.0, 1.0);
  struct Row {
    double x, y, approx, rel;
    std::string note;
  };
  std::vector<Row> rows;
  for (int y = 4; y <= 10; ++y) {
    const double x = forward(p, y);
    const double approx = asymptotic(p, x);
    Row row{x, static_cast<double>(y), approx, std::abs(approx - y) / y, ""};
    if (y == 4) row.note = "x recomputed from f(4); the value 3575.7472 in circulation is a misprint";
    rows.push_back(row);
  }

  switch (format) {
    case Format::Plain: {
      out << "A = B = C = 1\n";
      out << "| x            | W_LT(x) | Approximate | Relative Error |\n";
      out << "|--------------|---------|-------------|----------------|\n";
      for (const Row& r : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "| %12s | %7s | %11s | %14s |", fixed4(r.x).c_str(), fixed4(r.y).c_str(),
                      fixed4(r.approx).c_str(), sci5(r.rel).c_str());
        out << line;
        if (!r.note.empty()) out << "  * " << r.note;
        out << "\n";
      }
      break;
    }
    case Format::Csv:
      out << "x,y,approx,rel_error,note\n";
      for (const Row& r : rows) {
        out << g17(r.x) << ',' << g17(r.y) << ',' << g17(r.approx) << ',' << g17(r.rel) << ','
            << csv_field(r.note) << "\n";
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const Row& r : rows) {
        json jr{{"x", r.x}, {"y", r.y}, {"approx", r.approx}, {"rel_error", r.rel}};
        if (!r.note.empty()) jr["note"] = r.note;
        arr.push_back(jr);
      }
      out << json{{"params", {{"A", 1.0}, {"B", 1.0}, {"C", 1.0}}}, {"rows", arr}}.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

// --- branches ---------------------------------------------------------------

// Sample window in y for one branch; unbounded or open ends are clipped.
std::pair<double, double> sample_window(const BranchInfo& info) {
  double lo = info.y_range.lo;
  double hi = info.y_range.hi;
  const double anchor = info.singular_points.front().y;
  const double reach = std::max(5.0, 2.0 * std::abs(anchor));
  if (std::isinf(hi)) hi = anchor + reach;
  if (std::isinf(lo)) lo = anchor - reach;
  if (lo == 0.0) lo = hi * 1e-3;
  if (hi == 0.0) hi = lo * 1e-3;
  return {lo, hi};
}

void write_curves(const Params& p, const std::vector<BranchInfo>& catalog, int samples, std::ostream& csv) {
  const double a = p.log_coeff();
  const double c = p.shift();
  csv << "branch,y,x,g,h\n";
  for (const BranchInfo& info : catalog) {
    const auto [lo, hi] = sample_window(info);
    for (int k = 0; k < samples; ++k) {
      const double y = lo + (hi - lo) * k / (samples - 1);
      if (!(p.log_scale() * y > 0.0)) continue;
      const double x = forward(p, y);
      const double h = a * std::log(p.log_scale() * y);
      csv << info.id.index << ',' << g17(y) << ',' << g17(x) << ',';
      if (y != -1.0) csv << g17((-y - c - a - 1.0) / (y + 1.0));
      csv << ',' << g17(h) << "\n";
    }
  }
}

int cmd_branches(const ParamFlags& pf, Format format, const std::string& curve_path, int samples,
                 std::ostream& out, std::ostream& err) {
  const Params p(pf.a, pf.b, pf.c);
  const auto& catalog = branches(p);
  const std::vector<double> deltas = singular_points(p);
  std::optional<double> crossing;
  try {
    crossing = zero_crossing(p);
  } catch (const DomainError&) {
  }

  switch (format) {
    case Format::Plain:
      out << "params " << p.to_string() << "\n";
      for (std::size_t i = 0; i < deltas.size(); ++i) {
        out << "singular point " << i + 1 << ": y = " << g17(deltas[i]) << ", f(y) = " << g17(forward(p, deltas[i]))
            << "\n";
      }
      if (crossing) out << "zero crossing: y = " << g17(*crossing) << "\n";
      for (const BranchInfo& info : catalog) {
        out << "branch " << info.id.index << ": x in " << info.x_domain.to_string() << " -> y in "
            << info.y_range.to_string() << ", " << monotone_name(info.monotone) << "\n";
      }
      break;
    case Format::Csv:
      out << "branch,y_lo,y_hi,x_lo,x_hi,x_lo_closed,x_hi_closed,monotone\n";
      for (const BranchInfo& info : catalog) {
        out << info.id.index << ',' << g17(info.y_range.lo) << ',' << g17(info.y_range.hi) << ','
            << g17(info.x_domain.lo) << ',' << g17(info.x_domain.hi) << ',' << info.x_domain.lo_closed << ','
            << info.x_domain.hi_closed << ',' << monotone_name(info.monotone) << "\n";
      }
      break;
    case Format::Json: {
      json rows = json::array();
      for (const BranchInfo& info : catalog) {
        json sp = json::array();
        for (const SingularPoint& s : info.singular_points) sp.push_back({{"y", s.y}, {"x", s.x}});
        rows.push_back({{"branch", info.id.index},
                        {"y_range", {num(info.y_range.lo), num(info.y_range.hi)}},
                        {"x_domain", {num(info.x_domain.lo), num(info.x_domain.hi)}},
                        {"x_closed", {info.x_domain.lo_closed, info.x_domain.hi_closed}},
                        {"monotone", monotone_name(info.monotone)},
                        {"singular_points", sp}});
      }
      json j{{"params", pf.to_json()}, {"singular_points", deltas}, {"rows", rows}};
      if (crossing) j["zero_crossing"] = *crossing;
      out << j.dump(2) << "\n";
      break;
    }
  }

  if (!curve_path.empty()) {
    std::ofstream csv(curve_path);
    if (!csv) {
      err << "error: cannot open " << curve_path << " for writing\n";
      return kUsage;
    }
    write_curves(p, catalog, samples, csv);
  }
  return kOk;
}

// --- maxent -----------------------------------------------------------------

struct MaxentFlags {
  double q = 0.0, q_prime = 0.0, r = 0.0, k = 1.0;
  std::optional<double> alpha;
  double beta = 0.0;
  std::string levels_path;
  bool quadratic = false;
  double grid_min = -5.0, grid_max = 5.0;
  int grid_n = 101;
  std::optional<int> branch;
  bool solve_alpha = false;
  bool check = false;
};

std::vector<double> read_levels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read levels file " + path);
  std::vector<double> levels;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ss(line);
    double v;
    if (!(ss >> v)) throw DomainError("levels file line " + std::to_string(lineno) + ": not a number");
    levels.push_back(v);
  }
  if (levels.empty()) throw DomainError("levels file " + path + " contains no energies");
  return levels;
}

int cmd_maxent_discrete(const MaxentFlags& mf, const EntropyParams& ep, Format format, std::ostream& out) {
  EnsembleSpec spec{read_levels(mf.levels_path), mf.alpha.value_or(0.0), mf.beta, ep};
  const BranchId branch = mf.branch ? BranchId{*mf.branch} : default_branch(spec);
  if (mf.solve_alpha) spec.alpha = normalizing_alpha(spec, branch);
  const DiscreteDistribution d = distribution(spec, branch);

  double sum = 0.0;
  for (double p : d.probs) sum += p;
  double max_residual = 0.0;
  if (mf.check) {
    for (double v : stationarity_residuals(spec, d.weights)) max_residual = std::max(max_residual, std::abs(v));
  }

  json params{{"q", ep.q}, {"q_prime", ep.q_prime}, {"r", ep.r}, {"k", ep.k},
              {"alpha", spec.alpha}, {"beta", spec.beta}, {"branch", branch.index}};
  switch (format) {
    case Format::Json: {
      json rows = json::array();
      for (std::size_t i = 0; i < spec.levels.size(); ++i) {
        rows.push_back({{"index", i},
                        {"energy", spec.levels[i]},
                        {"x", d.x_values[i]},
                        {"y", d.y_values[i]},
                        {"weight", d.weights[i]},
                        {"probability", d.probs[i]}});
      }
      json j{{"params", params}, {"rows", rows}, {"partition", d.partition}, {"beta_r", d.beta_r},
             {"normalization_error", std::abs(sum - 1.0)}};
      if (mf.check) j["max_stationarity_residual"] = max_residual;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
    case Format::Plain:
      out << "index,energy,x,y,weight,probability\n";
      for (std::size_t i = 0; i < spec.levels.size(); ++i) {
        out << i << ',' << g17(spec.levels[i]) << ',' << g17(d.x_values[i]) << ',' << g17(d.y_values[i]) << ','
            << g17(d.weights[i]) << ',' << g17(d.probs[i]) << "\n";
      }
      out << "# alpha = " << g17(spec.alpha) << "\n";
      out << "# branch = " << branch.index << "\n";
      out << "# partition = " << g17(d.partition) << "\n";
      out << "# beta_r = " << g17(d.beta_r) << "\n";
      out << "# normalization_error = " << g17(std::abs(sum - 1.0)) << "\n";
      if (mf.check) out << "# max_stationarity_residual = " << g17(max_residual) << "\n";
      break;
  }
  return kOk;
}

int cmd_maxent_quadratic(const MaxentFlags& mf, const EntropyParams& ep, Format format, std::ostream& out) {
  if (mf.grid_n < 2) throw DomainError("--grid-n must be at least 2");
  if (!mf.branch) throw DomainError("--branch is required in --quadratic mode");
  if (!mf.alpha) throw DomainError("--alpha is required in --quadratic mode");
  std::vector<double> grid(static_cast<std::size_t>(mf.grid_n));
  // Placed about the midpoint so a symmetric range gives an exactly symmetric grid.
  const double mid = 0.5 * (mf.grid_min + mf.grid_max);
  const double half = 0.5 * (mf.grid_max - mf.grid_min);
  for (int i = 0; i < mf.grid_n; ++i) grid[i] = mid + half * (2 * i - (mf.grid_n - 1)) / (mf.grid_n - 1);
  const ContinuousPdf pdf = continuous_pdf(ep, *mf.alpha, mf.beta, BranchId{*mf.branch}, grid);

  json params{{"q", ep.q}, {"q_prime", ep.q_prime}, {"r", ep.r}, {"k", ep.k},
              {"alpha", *mf.alpha}, {"beta", mf.beta}, {"branch", *mf.branch}};
  if (format == Format::Json) {
    json rows = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      rows.push_back({{"x", grid[i]}, {"energy", grid[i] * grid[i]}, {"density", pdf.values[i]}});
    }
    out << json{{"params", params}, {"rows", rows}, {"normalization", pdf.normalization}}.dump(2) << "\n";
  } else {
    out << "x,energy,density\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      out << g17(grid[i]) << ',' << g17(grid[i] * grid[i]) << ',' << g17(pdf.values[i]) << "\n";
    }
    out << "# normalization = " << g17(pdf.normalization) << "\n";
  }
  return kOk;
}

int cmd_maxent(const MaxentFlags& mf, Format format, std::ostream& out) {
  const EntropyParams ep{mf.q, mf.q_prime, mf.r, mf.k};
  if (mf.quadratic) return cmd_maxent_quadratic(mf, ep, format, out);
  if (mf.levels_path.empty()) throw DomainError("maxent needs --levels FILE or --quadratic");
  if (!mf.alpha && !mf.solve_alpha) throw DomainError("maxent needs --alpha or --solve-alpha");
  return cmd_maxent_discrete(mf, ep, format, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Translated logarithmic Lambert function: evaluation, branches and MaxEnt distributions"};
  app.require_subcommand(1);

  ParamFlags eval_params;
  int eval_branch = 0;
  double eval_x = 0.0;
  double eval_tol = kDefaultTolerance;
  Format eval_format = Format::Plain;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate W_LT(x) on one branch");
  eval_params.add(*eval_cmd);
  eval_cmd->add_option("--branch", eval_branch, "Branch index (0, 1 or 2)")->required();
  eval_cmd->add_option("-x", eval_x, "Argument x")->required();
  eval_cmd->add_option("--tol", eval_tol, "Relative residual tolerance")->capture_default_str();
  add_format_option(*eval_cmd, eval_format);

  Format table_format = Format::Plain;
  auto* table_cmd = app.add_subcommand("table", "Accuracy of the large-x approximation for A = B = C = 1");
  add_format_option(*table_cmd, table_format);

  ParamFlags br_params;
  Format br_format = Format::Plain;
  std::string curve_path;
  int samples = 200;
  auto* br_cmd = app.add_subcommand("branches", "List the real branches and singular points");
  br_params.add(*br_cmd);
  add_format_option(*br_cmd, br_format);
  br_cmd->add_option("--curve-csv", curve_path, "Write sampled (y, f(y), g(y), h(y)) curves to this CSV file");
  br_cmd->add_option("--samples", samples, "Samples per branch for --curve-csv")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();

  MaxentFlags mf;
  Format me_format = Format::Csv;
  auto* me_cmd = app.add_subcommand("maxent", "Maximum-entropy distribution of the three-parameter entropy");
  me_cmd->add_option("--q", mf.q, "Deformation q")->required();
  me_cmd->add_option("--qp", mf.q_prime, "Deformation q'")->required();
  me_cmd->add_option("--r", mf.r, "Deformation r")->required();
  me_cmd->add_option("--k", mf.k, "Entropy constant k")->capture_default_str();
  me_cmd->add_option("--alpha", mf.alpha, "Normalization multiplier alpha");
  me_cmd->add_option("--beta", mf.beta, "Energy multiplier beta")->required();
  me_cmd->add_option("--levels", mf.levels_path, "File with one energy level per line");
  me_cmd->add_flag("--quadratic", mf.quadratic, "Continuous mode with energy x^2 on a grid");
  me_cmd->add_option("--grid-min", mf.grid_min)->capture_default_str();
  me_cmd->add_option("--grid-max", mf.grid_max)->capture_default_str();
  me_cmd->add_option("--grid-n", mf.grid_n)->capture_default_str();
  me_cmd->add_option("--branch", mf.branch, "W_LT branch (default: from the uniform warm start)");
  me_cmd->add_flag("--solve-alpha", mf.solve_alpha, "Choose alpha so that the partition value is 1");
  me_cmd->add_flag("--check", mf.check, "Report the finite-difference stationarity residual");
  add_format_option(*me_cmd, me_format);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval_params, eval_branch, eval_x, eval_tol, eval_format, out);
    if (*table_cmd) return cmd_table(table_format, out);
    if (*br_cmd) return cmd_branches(br_params, br_format, curve_path, samples, out, err);
    if (*me_cmd) return cmd_maxent(mf, me_format, out);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kConvergence;
  } catch (const IntegrationError& e) {
    err << "error: " << e.what() << "\n";
    return kConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}

}  // namespace loglambert::cli
