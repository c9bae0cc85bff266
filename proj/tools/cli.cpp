#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "renyi_qubit/bound_engine.hpp"
#include "renyi_qubit/parallel.hpp"
#include "renyi_qubit/qubit_algebra.hpp"

namespace renyi_qubit::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

using Cell = std::variant<double, int, std::string, std::vector<double>>;

// Rows of one output record type; rendered as CSV or as a JSON array of objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("row width does not match header");
    rows.push_back(std::move(row));
  }
};

std::string cell_csv(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<int>(&c)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  std::string joined;
  for (double x : std::get<std::vector<double>>(c)) {
    if (!joined.empty()) joined += ';';
    joined += format_number(x);
  }
  return joined;
}

// Doubles pass through the 12-digit text form so JSON and CSV agree.
json rounded(double x) { return std::stod(format_number(x)); }

json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return rounded(*d);
  if (const auto* i = std::get_if<int>(&c)) return *i;
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  json arr = json::array();
  for (double x : std::get<std::vector<double>>(c)) arr.push_back(rounded(x));
  return arr;
}

std::string render_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + cell_csv(row[i]);
    s += '\n';
  }
  return s;
}

json rows_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

std::string render(const Table& t, const std::string& format, const std::string& command, json meta = json::object()) {
  if (format == "csv") return render_csv(t);
  json doc = {{"schema_version", kSchemaVersion}, {"command", command}};
  for (auto& [k, v] : meta.items()) doc[k] = v;
  doc["rows"] = rows_json(t);
  return doc.dump(2) + "\n";
}

std::vector<double> radians(const std::vector<Angle>& angles) {
  std::vector<double> out;
  out.reserve(angles.size());
  for (const Angle& a : angles) out.push_back(a.value);
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) g[k] = k + 1 == n ? hi : lo + (hi - lo) * k / (n - 1);
  return g;
}

std::vector<double> table1_grid() {
  std::vector<double> g;
  for (int k = 0; k < 15; ++k) g.push_back(0.71 + 0.02 * k);
  return g;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << content;
  if (!f.flush()) throw std::runtime_error("failed writing " + path);
}

// Parses "r,i;r,i;r,i;r,i" (row-major T11, T12, T21, T22).
Unitary2 parse_unitary(const std::string& text) {
  std::vector<std::string> entries;
  std::stringstream ss(text);
  for (std::string e; std::getline(ss, e, ';');) entries.push_back(e);
  if (entries.size() != 4) throw DomainError("--unitary needs four ';'-separated entries, got " + std::to_string(entries.size()));
  Matrix2c m;
  for (int k = 0; k < 4; ++k) {
    const auto comma = entries[k].find(',');
    if (comma == std::string::npos) throw DomainError("--unitary entry '" + entries[k] + "' is not of the form re,im");
    std::size_t used_re = 0;
    std::size_t used_im = 0;
    double re = 0.0;
    double im = 0.0;
    try {
      const std::string rs = entries[k].substr(0, comma);
      const std::string is = entries[k].substr(comma + 1);
      re = std::stod(rs, &used_re);
      im = std::stod(is, &used_im);
      if (rs.find_first_not_of(" \t", used_re) != std::string::npos ||
          is.find_first_not_of(" \t", used_im) != std::string::npos) {
        throw std::invalid_argument("trailing characters");
      }
    } catch (const std::logic_error&) {
      throw DomainError("--unitary entry '" + entries[k] + "' is not numeric");
    }
    m(k / 2, k % 2) = Complex(re, im);
  }
  return Unitary2::from_matrix(m, 1e-9);
}

Overlap overlap_from_flags(const std::optional<double>& c, const std::optional<double>& gamma_t) {
  if (c.has_value() == gamma_t.has_value()) throw DomainError("give exactly one of --c and --gamma-t");
  return c ? Overlap::from_c(*c) : Overlap::from_gamma_t(*gamma_t);
}

// ---- bound ----------------------------------------------------------------

struct BoundFlags {
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> c;
  std::optional<double> gamma_t;
  std::string format = "csv";
};

std::string cmd_bound(const BoundFlags& f) {
  const EntropicIndex alpha(f.alpha);
  const EntropicIndex beta(f.beta);
  const Overlap ov = overlap_from_flags(f.c, f.gamma_t);
  const BoundResult b = tight_bound(alpha, beta, ov);
  Table t{{"alpha", "beta", "c", "gamma", "value", "regime", "theta_opt"}, {}};
  t.add({f.alpha, f.beta, ov.c(), ov.gamma(), b.value, std::string(to_string(b.regime)), radians(b.theta_opt)});
  return render(t, f.format, "bound");
}

// ---- table1 ---------------------------------------------------------------

struct Table1Flags {
  std::vector<double> c_list;
  double tol = 1e-10;
  std::string format = "csv";
};

std::string cmd_table1(const Table1Flags& f) {
  if (!(f.tol > 0.0)) throw DomainError("--tol must be positive");
  const std::vector<double> cs = f.c_list.empty() ? table1_grid() : f.c_list;
  std::vector<Overlap> overlaps;
  for (double c : cs) {
    const Overlap ov = Overlap::from_c(c);
    if (ov.commuting()) throw DomainError("alpha* is undefined at c = 1");
    overlaps.push_back(ov);
  }
  std::vector<double> stars(overlaps.size());
  parallel_for(overlaps.size(), threads_from_env(), [&](std::size_t i) { stars[i] = alpha_star(overlaps[i], f.tol); });
  Table t{{"c", "alpha_star"}, {}};
  for (std::size_t i = 0; i < cs.size(); ++i) t.add({cs[i], stars[i]});
  return render(t, f.format, "table1", {{"tol", f.tol}});
}

// ---- figure ---------------------------------------------------------------

struct FigureFlags {
  std::string which;
  int points = 0;  // 0 selects the per-figure default
  std::string out;
  std::string format = "csv";
  std::vector<double> alpha_list;
  std::vector<double> c_list;
  double c = 0.9;
  double max_index = 3.0;
};

Table figure_1(int points) {
  const double last = 0.999;
  std::vector<Overlap> overlaps;
  for (double c : linspace(kInvSqrt2, last, points)) overlaps.push_back(Overlap::from_c(c));
  std::vector<double> stars(overlaps.size());
  parallel_for(overlaps.size(), threads_from_env(), [&](std::size_t i) { stars[i] = alpha_star(overlaps[i]); });
  Table t{{"c", "alpha_star"}, {}};
  for (std::size_t i = 0; i < overlaps.size(); ++i) t.add({overlaps[i].c(), stars[i]});
  return t;
}

Table figure_2a(int points, std::vector<double> alphas) {
  if (alphas.empty()) alphas = {0.75, 1.0, 2.0, 5.0};
  Table t{{"alpha", "c", "branch_first", "branch_half", "bound"}, {}};
  const std::vector<double> grid = linspace(kInvSqrt2, 1.0, points);
  for (double a : alphas) {
    const EntropicIndex alpha(a);
    SweepSpec spec;
    spec.variable = SweepVariable::Overlap;
    spec.grid = grid;
    spec.alpha = spec.beta = a;
    spec.threads = threads_from_env();
    const auto rows = bound_sweep(spec);
    for (const auto& r : rows) {
      const double c = r.bound.overlap.c();
      const double first = renyi_entropy(ProbabilityPair(c * c), alpha);
      const double half = 2.0 * renyi_entropy(ProbabilityPair(0.5 * (1.0 + c)), alpha);
      t.add({a, c, first, half, r.bound.value});
    }
  }
  return t;
}

Table figure_2b(int points, std::vector<double> cs) {
  if (cs.empty()) cs = {0.75, 0.8, 0.85, 0.9, 0.95};
  Table t{{"c", "alpha", "theta_opt", "half_gamma", "regime"}, {}};
  std::vector<double> grid;
  for (int k = 1; k <= points; ++k) grid.push_back(2.0 * k / points);
  for (double c : cs) {
    const Overlap ov = Overlap::from_c(c);
    SweepSpec spec;
    spec.variable = SweepVariable::Alpha;
    spec.diagonal = true;
    spec.grid = grid;
    spec.c = c;
    spec.threads = threads_from_env();
    for (const auto& r : bound_sweep(spec)) {
      // The smaller member of {theta*, gamma - theta*} is the one on [0, gamma/2].
      t.add({ov.c(), r.swept, r.bound.theta_opt.front().value, 0.5 * ov.gamma(), std::string(to_string(r.bound.regime))});
    }
  }
  return t;
}

std::string region_label(double a, double b) {
  if (a <= 0.5 && b <= 0.5) return "tight-analytic";
  if (a == b) return "tight-semianalytic";
  return "suboptimal";
}

Table figure_3(int points, double c, double max_index) {
  if (!(max_index > 0.0) || !std::isfinite(max_index)) throw DomainError("--max-index must be positive");
  const Overlap ov = Overlap::from_c(c);
  const std::vector<double> grid = linspace(0.0, max_index, points);
  const std::size_t n = grid.size();
  std::vector<double> tight(n * n);
  std::vector<double> sub(n * n);
  parallel_for(n * n, threads_from_env(), [&](std::size_t k) {
    const EntropicIndex a(grid[k / n]);
    const EntropicIndex b(grid[k % n]);
    tight[k] = tight_bound(a, b, ov).value;
    sub[k] = suboptimal_bound(a, b, ov);
  });
  Table t{{"alpha", "beta", "region", "tight", "suboptimal"}, {}};
  for (std::size_t k = 0; k < n * n; ++k) {
    const double a = grid[k / n];
    const double b = grid[k % n];
    t.add({a, b, region_label(a, b), tight[k], sub[k]});
  }
  return t;
}

std::string cmd_figure(const FigureFlags& f) {
  int points = f.points;
  if (points == 0) points = f.which == "3" ? 31 : (f.which == "1" ? 50 : 200);
  if (points < 2) throw DomainError("--points must be at least 2");
  Table t;
  json meta = {{"figure", f.which}};
  if (f.which == "1") {
    t = figure_1(points);
  } else if (f.which == "2a") {
    t = figure_2a(points, f.alpha_list);
  } else if (f.which == "2b") {
    t = figure_2b(points, f.c_list);
  } else if (f.which == "3") {
    t = figure_3(points, f.c, f.max_index);
    meta["c"] = rounded(f.c);
  } else {
    throw DomainError("unknown figure '" + f.which + "' (expected 1, 2a, 2b or 3)");
  }
  return render(t, f.format, "figure", meta);
}

// ---- minimizers -----------------------------------------------------------

struct MinimizerFlags {
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<std::string> unitary;
  std::optional<double> c;
  std::string format = "csv";
};

std::string cmd_minimizers(const MinimizerFlags& f) {
  const EntropicIndex alpha(f.alpha);
  const EntropicIndex beta(f.beta);
  if (f.unitary.has_value() == f.c.has_value()) throw DomainError("give exactly one of --unitary and --c");
  const Unitary2 t = f.unitary ? parse_unitary(*f.unitary) : Unitary2::rotation(Overlap::from_c(*f.c).gamma());
  const Overlap ov = overlap_of(t);
  const BoundResult b = tight_bound(alpha, beta, ov);
  const MinimizerFamily family = minimizer_states(t, b);

  Table rows{{"theta", "n", "re_psi1", "im_psi1", "re_psi2", "im_psi2", "entropy_sum", "landau_pollak_residual"}, {}};
  for (const auto& m : family.states) {
    rows.add({m.theta.value, m.n, m.psi.a1().real(), m.psi.a1().imag(), m.psi.a2().real(), m.psi.a2().imag(),
              entropy_sum_of_state(m.psi, t, alpha, beta), landau_pollak_residual(m.psi, t)});
  }
  const json meta = {{"alpha", rounded(f.alpha)},
                     {"beta", rounded(f.beta)},
                     {"c", rounded(ov.c())},
                     {"gamma_t", rounded(factorize(t).gamma_t)},
                     {"epsilon_t", family.epsilon_t},
                     {"v", {rounded(family.v[0]), rounded(family.v[1])}},
                     {"bound", rounded(b.value)},
                     {"regime", std::string(to_string(b.regime))}};
  return render(rows, f.format, "minimizers", meta);
}

// ---- verify ---------------------------------------------------------------

struct VerifyFlags {
  int samples = 200;
  std::uint64_t seed = 42;
  std::string report;
};

json suite_json(bool passed, double worst, double tol) {
  return {{"passed", passed}, {"worst", rounded(worst)}, {"tolerance", tol}};
}

struct VerifyOutput {
  std::string stdout_text;
  std::string report;
  bool passed = false;
};

VerifyOutput cmd_verify(const VerifyFlags& f, const FamilyBuilder& family) {
  if (f.samples < 1) throw DomainError("--samples must be at least 1");
  VerifyConfig cfg;
  cfg.samples = f.samples;
  cfg.seed = f.seed;
  cfg.oracle.threads = threads_from_env();
  const VerifyReport r = run_verification(cfg, family);

  double gap = 0.0;
  double univ = 0.0;
  double attain = 0.0;
  double lp = 0.0;
  json triples = json::array();
  for (const auto& tr : r.triples) {
    gap = std::max(gap, tr.oracle_gap);
    univ = std::max(univ, -tr.worst_universality);
    attain = std::max(attain, tr.worst_attainment);
    lp = std::max(lp, tr.worst_landau_pollak);
    triples.push_back({{"alpha", rounded(tr.alpha)},
                       {"beta", rounded(tr.beta)},
                       {"c", rounded(tr.c)},
                       {"gamma_t", rounded(tr.gamma_t)},
                       {"bound", rounded(tr.bound)},
                       {"regime", std::string(to_string(tr.regime))},
                       {"oracle_min", rounded(tr.oracle_min)},
                       {"oracle_gap", rounded(tr.oracle_gap)},
                       {"worst_universality", rounded(tr.worst_universality)},
                       {"worst_attainment", rounded(tr.worst_attainment)},
                       {"worst_landau_pollak", rounded(tr.worst_landau_pollak)},
                       {"family_size", tr.family_size},
                       {"passed", tr.oracle_ok && tr.universality_ok && tr.attainment_ok && tr.landau_pollak_ok}});
  }

  Table summary{{"suite", "passed", "worst", "tolerance"}, {}};
  const auto yes_no = [](bool b) { return std::string(b ? "true" : "false"); };
  summary.add({std::string("oracle_agreement"), yes_no(r.oracle_ok), gap, cfg.oracle_tol});
  summary.add({std::string("universality"), yes_no(r.universality_ok), univ, cfg.bound_tol});
  summary.add({std::string("attainment"), yes_no(r.attainment_ok), attain, cfg.bound_tol});
  summary.add({std::string("landau_pollak"), yes_no(r.landau_pollak_ok), lp, cfg.landau_pollak_tol});

  const json doc = {{"schema_version", kSchemaVersion},
                    {"command", "verify"},
                    {"samples", cfg.samples},
                    {"seed", cfg.seed},
                    {"states_per_triple", cfg.states_per_triple},
                    {"oracle", {{"theta_grid", cfg.oracle.theta_grid}, {"phase_grid", cfg.oracle.phase_grid}, {"refine_iters", cfg.oracle.refine_iters}}},
                    {"passed", r.passed()},
                    {"suites",
                     {{"oracle_agreement", suite_json(r.oracle_ok, gap, cfg.oracle_tol)},
                      {"universality", suite_json(r.universality_ok, univ, cfg.bound_tol)},
                      {"attainment", suite_json(r.attainment_ok, attain, cfg.bound_tol)},
                      {"landau_pollak", suite_json(r.landau_pollak_ok, lp, cfg.landau_pollak_tol)}}},
                    {"triples", triples}};
  return {render_csv(summary), doc.dump(2) + "\n", r.passed()};
}

}  // namespace

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const FamilyBuilder& family) {
  CLI::App app{"Tight Renyi-entropy uncertainty bounds for pairs of qubit observables", "renyi-qubit"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"csv", "json"});

  BoundFlags bf;
  auto* bound = app.add_subcommand("bound", "Tight bound for one (alpha, beta, c)");
  bound->add_option("--alpha", bf.alpha, "entropic index of the first observable")->required();
  bound->add_option("--beta", bf.beta, "entropic index of the second observable")->required();
  auto* bc = bound->add_option("--c", bf.c, "overlap in [1/sqrt 2, 1]");
  auto* bg = bound->add_option("--gamma-t", bf.gamma_t, "rotation angle in [0, pi/2]");
  bc->excludes(bg);
  bound->add_option("--format", bf.format)->check(formats);

  Table1Flags tf;
  auto* table1 = app.add_subcommand("table1", "Transition index alpha*(c) on a list of overlaps");
  table1->add_option("--c-list", tf.c_list, "comma-separated overlaps (default 0.71,0.73,...,0.99)")->delimiter(',');
  table1->add_option("--tol", tf.tol, "bisection width in alpha");
  table1->add_option("--format", tf.format)->check(formats);

  FigureFlags ff;
  auto* figure = app.add_subcommand("figure", "Curve and region data for plotting");
  figure->add_option("--which", ff.which, "1, 2a, 2b or 3")->required();
  figure->add_option("--points", ff.points, "grid points per curve (per axis for figure 3)");
  figure->add_option("--out", ff.out, "write to FILE instead of stdout");
  figure->add_option("--format", ff.format)->check(formats);
  figure->add_option("--alpha-list", ff.alpha_list, "indices for figure 2a")->delimiter(',');
  figure->add_option("--c-list", ff.c_list, "overlaps for figure 2b")->delimiter(',');
  figure->add_option("--c", ff.c, "overlap used for the values in figure 3");
  figure->add_option("--max-index", ff.max_index, "largest index on the figure 3 grid");

  MinimizerFlags mf;
  auto* mins = app.add_subcommand("minimizers", "States attaining the bound");
  mins->add_option("--alpha", mf.alpha)->required();
  mins->add_option("--beta", mf.beta)->required();
  auto* mu = mins->add_option("--unitary", mf.unitary, "row-major entries as \"re,im;re,im;re,im;re,im\"");
  auto* mc = mins->add_option("--c", mf.c, "overlap; uses T = V(arccos c)");
  mu->excludes(mc);
  mins->add_option("--format", mf.format)->check(formats);

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Check bounds and minimizers against the brute-force oracle");
  verify->add_option("--samples", vf.samples, "number of random (alpha, beta, T) triples");
  verify->add_option("--seed", vf.seed);
  verify->add_option("--report", vf.report, "write a JSON report to FILE");

  std::vector<const char*> argv{"renyi-qubit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*bound) {
      out << cmd_bound(bf);
    } else if (*table1) {
      out << cmd_table1(tf);
    } else if (*figure) {
      const std::string text = cmd_figure(ff);
      if (ff.out.empty()) {
        out << text;
      } else {
        write_file(ff.out, text);
      }
    } else if (*mins) {
      out << cmd_minimizers(mf);
    } else if (*verify) {
      const VerifyOutput v = cmd_verify(vf, family);
      if (!vf.report.empty()) write_file(vf.report, v.report);
      out << v.stdout_text;
      return v.passed ? kOk : kVerifyFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace renyi_qubit::cli
