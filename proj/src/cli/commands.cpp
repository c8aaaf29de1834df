#include "gaborgram/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iostream>
#include <map>
#include <numbers>

#include "CLI11.hpp"
#include "gaborgram/errors.hpp"
#include "gaborgram/spectra.hpp"

#ifndef GABORGRAM_VERSION
#define GABORGRAM_VERSION "unknown"
#endif

namespace gabor::cli {

namespace {

constexpr int kSymbolGrid = 1024;
constexpr double kSincTol = 1e-12;
constexpr double kZeroTol = 1e-9;
constexpr int kFitFloor = 8;

struct Resolved {
  GaborParams params;
  Json recorded = Json::object();
};

Resolved resolve(const RunOptions& o, GaborParams defaults) {
  Resolved r;
  r.params = {o.a.value_or(defaults.a), o.b.value_or(defaults.b), o.order.value_or(defaults.order)};
  r.params.validate();
  r.recorded["a"] = r.params.a;
  r.recorded["b"] = r.params.b;
  r.recorded["order"] = r.params.order;
  return r;
}

GaborConfig resolve_config(const RunOptions& o, Resolved& r, int default_n) {
  GaborConfig cfg{r.params, o.n.value_or(default_n)};
  cfg.validate();
  r.recorded["n"] = cfg.n;
  return cfg;
}

std::vector<int> ell_list(const RunOptions& o, Resolved& r, std::pair<int, int> fallback) {
  if (o.ell && o.ell_range) throw InvalidArgument("--ell and --ell-range are mutually exclusive");
  std::pair<int, int> range = fallback;
  if (o.ell) range = {*o.ell, *o.ell};
  if (o.ell_range) range = *o.ell_range;
  if (range.first > range.second) throw InvalidArgument("ell range must be ascending");
  if (range.first == range.second)
    r.recorded["ell"] = range.first;
  else
    r.recorded["ell_range"] = {range.first, range.second};
  std::vector<int> ells;
  for (int l = range.first; l <= range.second; ++l) ells.push_back(l);
  return ells;
}

int positive(std::optional<int> v, int fallback, const char* what) {
  const int x = v.value_or(fallback);
  if (x < 1) throw InvalidArgument(std::string(what) + " must be positive");
  return x;
}

double sinc_tol(const RunOptions& o, Resolved& r) {
  const double tol = o.tol.value_or(kSincTol);
  if (!(tol > 0.0)) throw InvalidArgument("--tol must be positive");
  r.recorded["tol"] = tol;
  return tol;
}

std::vector<std::string> matrix_columns(std::size_t cols) {
  std::vector<std::string> names;
  names.reserve(cols);
  for (std::size_t c = 0; c < cols; ++c) names.push_back("c" + std::to_string(c));
  return names;
}

template <class F>
Table matrix_table(std::string name, std::size_t rows, std::size_t cols, F&& entry) {
  Table t{std::move(name), matrix_columns(cols), {}};
  t.rows.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<double> row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = entry(i, j);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table real_table(std::string name, const RealMatrix& m) {
  return matrix_table(std::move(name), m.rows(), m.cols(),
                      [&](std::size_t i, std::size_t j) { return m(i, j); });
}

void push_complex(std::vector<Table>& out, const std::string& name, const ComplexMatrix& m,
                  ComplexFormat fmt) {
  const auto part = [&](auto f) {
    return [&m, f](std::size_t i, std::size_t j) { return f(m(i, j)); };
  };
  if (fmt == ComplexFormat::kMagPhase) {
    out.push_back(matrix_table(name + "_magnitude", m.rows(), m.cols(),
                               part([](Complex z) { return std::abs(z); })));
    out.push_back(matrix_table(name + "_phase", m.rows(), m.cols(),
                               part([](Complex z) { return std::arg(z); })));
  } else {
    out.push_back(
        matrix_table(name + "_re", m.rows(), m.cols(), part([](Complex z) { return z.real(); })));
    out.push_back(
        matrix_table(name + "_im", m.rows(), m.cols(), part([](Complex z) { return z.imag(); })));
  }
}

Json extrema_json(int ell, const SymbolExtrema& e) {
  return {{"ell", ell},   {"min", e.min},       {"argmin", e.argmin},
          {"max", e.max}, {"argmax", e.argmax}, {"width", e.width()}};
}

double grid_x(int i, int grid) { return -0.5 + static_cast<double>(i) / grid; }

// --- commands --------------------------------------------------------------

Document cmd_symbol(const RunOptions& o, Resolved& r) {
  const auto ells = ell_list(o, r, {0, 0});
  const int grid = positive(o.grid, kSymbolGrid, "--grid");
  r.recorded["grid"] = grid;
  const double tol = sinc_tol(o, r);
  const bool with_sinc = sinc_form_in_hypothesis(r.params);

  Document doc;
  Table curve{"symbol", {"ell", "x", "t"}, {}};
  if (with_sinc) curve.columns.push_back("t_sinc");
  Json extrema = Json::array();
  double deviation = 0.0;
  for (int ell : ells) {
    const auto sym = make_symbol(r.params, ell);
    for (int i = 0; i < grid; ++i) {
      const double x = grid_x(i, grid);
      std::vector<double> row{static_cast<double>(ell), x, eval_symbol_coeff(sym, x)};
      if (with_sinc) {
        row.push_back(eval_symbol_sinc(sym, x, tol));
        deviation = std::max(deviation, std::abs(row[3] - row[2]));
      }
      curve.rows.push_back(std::move(row));
    }
    extrema.push_back(extrema_json(ell, symbol_extrema(sym)));
  }
  doc.tables.push_back(std::move(curve));
  if (ells.size() == 1) {
    doc.metadata["min"] = extrema[0]["min"];
    doc.metadata["max"] = extrema[0]["max"];
  }
  doc.metadata["extrema"] = extrema;
  doc.metadata["sinc_form"] = with_sinc;
  if (with_sinc) doc.metadata["max_form_deviation"] = deviation;
  return doc;
}

Document cmd_gram(const RunOptions& o, Resolved& r) {
  const auto cfg = resolve_config(o, r, 15);
  const auto gram = assemble_gram(cfg);
  Document doc;
  push_complex(doc.tables, "gram", gram.entries, o.complex_format);
  doc.metadata["dim"] = cfg.dim();
  doc.metadata["bandwidth"] = cfg.params.bandwidth();
  doc.metadata["strictly_banded"] = cfg.strictly_banded();
  doc.metadata["hermitian_deviation"] = hermitian_deviation(gram.entries);
  doc.metadata["per_hermitian_deviation"] = per_hermitian_deviation(gram);
  doc.metadata["block_toeplitz_deviation"] = block_toeplitz_deviation(gram);
  return doc;
}

Document cmd_block(const RunOptions& o, Resolved& r) {
  const auto cfg = resolve_config(o, r, 15);
  const int ell = o.ell.value_or(0);
  r.recorded["ell"] = ell;
  const auto block = build_block(cfg, ell);
  const auto f = extract_factors(cfg, ell);
  const auto t = f.toeplitz_matrix();
  const auto h = f.hankel_matrix();

  Document doc;
  push_complex(doc.tables, "block", block, o.complex_format);
  doc.tables.push_back(real_table("toeplitz", t));
  push_complex(doc.tables, "hankel", h, o.complex_format);

  const auto sv_block = singular_values(block);
  auto sv_toeplitz = symmetric_eigenvalues(t).eigenvalues;
  for (double& v : sv_toeplitz) v = std::abs(v);
  std::sort(sv_toeplitz.rbegin(), sv_toeplitz.rend());
  Table sv{"singular_values", {"k", "block", "toeplitz"}, {}};
  double sv_gap = 0.0;
  for (std::size_t k = 0; k < sv_block.size(); ++k) {
    sv.rows.push_back({static_cast<double>(k + 1), sv_block[k], sv_toeplitz[k]});
    sv_gap = std::max(sv_gap, std::abs(sv_block[k] - sv_toeplitz[k]));
  }
  doc.tables.push_back(std::move(sv));

  const auto sv_hankel = singular_values(h);
  doc.metadata["hadamard_residual"] = max_abs_diff(block, f.hadamard_product());
  doc.metadata["similarity_residual"] = max_abs_diff(block, f.diagonal_similarity());
  doc.metadata["hankel_second_singular_value"] = sv_hankel.size() > 1 ? sv_hankel[1] : 0.0;
  doc.metadata["singular_value_gap"] = sv_gap;
  doc.metadata["per_hermitian_deviation"] = check_per_hermitian(cfg, ell);
  return doc;
}

Document cmd_spectrum(const RunOptions& o, Resolved& r) {
  const auto cfg = resolve_config(o, r, 15);
  const auto rep = interlacing_check(cfg);
  Document doc;
  Table full{"gram_eigenvalues", {"k", "lambda"}, {}};
  for (std::size_t k = 0; k < rep.gram_eigenvalues.size(); ++k)
    full.rows.push_back({static_cast<double>(k + 1), rep.gram_eigenvalues[k]});
  Table block{"block0_eigenvalues", {"k", "lambda", "gram_lower", "gram_upper", "holds"}, {}};
  const std::size_t n = rep.block0_eigenvalues.size();
  for (std::size_t k = 0; k < n; ++k)
    block.rows.push_back({static_cast<double>(k + 1), rep.block0_eigenvalues[k],
                          rep.gram_eigenvalues[k], rep.gram_eigenvalues[k + n * n - n],
                          rep.inequality_holds[k] ? 1.0 : 0.0});
  doc.tables.push_back(std::move(full));
  doc.tables.push_back(std::move(block));
  doc.metadata["interlacing_holds"] = rep.all_hold;
  doc.metadata["lower_estimate"] = rep.lower_estimate;
  doc.metadata["upper_estimate"] = rep.upper_estimate;
  doc.metadata["symbol_min"] = rep.symbol.min;
  doc.metadata["symbol_max"] = rep.symbol.max;
  doc.metadata["residual"] = rep.residual;
  doc.metadata["strictly_banded"] = cfg.strictly_banded();
  return doc;
}

Document cmd_decay(const RunOptions& o, Resolved& r) {
  const auto ells = ell_list(o, r, {8, 64});
  const int grid = positive(o.grid, kDefaultSymbolGrid, "--grid");
  r.recorded["grid"] = grid;
  const auto fit = decay_fit(r.params, ells.front(), ells.back(), grid);
  Document doc;
  Table t{"decay", {"ell", "width", "fitted"}, {}};
  for (std::size_t i = 0; i < fit.ells.size(); ++i)
    t.rows.push_back({static_cast<double>(fit.ells[i]), fit.widths[i],
                      std::exp(fit.intercept) * std::pow(fit.ells[i], fit.slope)});
  doc.tables.push_back(std::move(t));
  doc.metadata["slope"] = fit.slope;
  doc.metadata["intercept"] = fit.intercept;
  doc.metadata["reference_slope"] = -r.params.order;
  return doc;
}

void push_comparison(const LaurentSymbol& sym, const std::vector<int>& ns, Table& stats,
                     Table& diffs) {
  const auto trace = eigen_comparison_trace(sym, ns);
  const auto ell = static_cast<double>(sym.ell);
  for (const auto& c : trace) {
    const double gap = asymptotic_equivalence_gap(sym, c.n);
    stats.rows.push_back({ell, static_cast<double>(c.n), gap, gap * std::sqrt(c.n), c.moment1,
                          c.moment2, c.mean_abs_diff});
    for (std::size_t m = 0; m < c.toeplitz.size(); ++m)
      diffs.rows.push_back({ell, static_cast<double>(c.n), static_cast<double>(m + 1),
                            c.toeplitz[m], c.circulant[m], c.toeplitz[m] - c.circulant[m]});
  }
}

Table stats_table() {
  return {
      "statistics", {"ell", "n", "gap", "gap_sqrt_n", "moment1", "moment2", "mean_abs_diff"}, {}};
}
Table diffs_table() {
  return {"differences", {"ell", "n", "m", "toeplitz", "circulant", "difference"}, {}};
}

Document cmd_circulant(const RunOptions& o, Resolved& r) {
  const int ell = o.ell.value_or(0);
  const int n = o.n.value_or(1024);
  r.recorded["ell"] = ell;
  r.recorded["n"] = n;
  const auto sym = make_symbol(r.params, ell);
  const auto circ = circulant_from_symbol(sym, n);

  Document doc;
  Table eig{"eigenvalues", {"p", "x", "lambda"}, {}};
  Json zeros = Json::array();
  const auto mag = [&](int p) {
    return std::abs(circ.eigenvalues[static_cast<std::size_t>((p + n) % n)]);
  };
  for (int p = 0; p < n; ++p) {
    const double v = circ.eigenvalues[static_cast<std::size_t>(p)];
    eig.rows.push_back({static_cast<double>(p), static_cast<double>(p) / n, v});
    // Zeros of the symbol are of even order, so neighbours also fall under the
    // threshold; only the local minimum of |t| is reported.
    if (mag(p) <= kZeroTol && mag(p) <= mag(p - 1) && mag(p) < mag(p + 1)) zeros.push_back(p);
  }
  Table row{"first_row", {"k", "c"}, {}};
  for (int k = 0; k < n; ++k)
    row.rows.push_back({static_cast<double>(k), circ.first_row[static_cast<std::size_t>(k)]});
  doc.tables.push_back(std::move(eig));
  doc.tables.push_back(std::move(row));
  doc.metadata["fourier_check"] = circ.fourier_check;
  doc.metadata["zero_indices"] = zeros;
  doc.metadata["gap"] = asymptotic_equivalence_gap(sym, n);

  if (!o.n_list.empty()) {
    r.recorded["n_list"] = o.n_list;
    Table stats = stats_table(), diffs = diffs_table();
    push_comparison(sym, o.n_list, stats, diffs);
    doc.tables.push_back(std::move(stats));
    doc.tables.push_back(std::move(diffs));
  }
  return doc;
}

std::vector<int> odd_range(int lo, int hi) {
  std::vector<int> v;
  for (int n = lo; n <= hi; n += 2) v.push_back(n);
  return v;
}

Document cmd_framebounds(const RunOptions& o, Resolved& r) {
  const auto ns = o.n_list.empty() ? odd_range(5, 15) : o.n_list;
  r.recorded["n_list"] = ns;
  const auto trace = frame_bound_trace(r.params, ns);
  Document doc;
  Table t{"frame_bounds", {"n", "lower", "upper"}, {}};
  for (std::size_t i = 0; i < ns.size(); ++i)
    t.rows.push_back({static_cast<double>(ns[i]), trace.lower[i], trace.upper[i]});
  doc.tables.push_back(std::move(t));
  doc.metadata["lower_nonincreasing"] = trace.lower_nonincreasing;
  doc.metadata["upper_nondecreasing"] = trace.upper_nondecreasing;
  doc.metadata["numerically_invertible"] = trace.numerically_invertible;
  if (trace.rational_p) {
    doc.metadata["rational_p"] = *trace.rational_p;
    doc.metadata["rational_degeneration"] = *trace.rational_degeneration;
  }
  return doc;
}

// --- figures -----------------------------------------------------------------

std::vector<double> values_or(std::optional<double> v, std::vector<double> fallback) {
  if (v) return {*v};
  return fallback;
}

Document figure1(const RunOptions& o, Resolved& r) {
  const auto cfg = resolve_config(o, r, 15);
  const auto gram = assemble_gram(cfg);
  const auto f = assemble_factors(cfg);
  Document doc;
  push_complex(doc.tables, "gram", gram.entries, ComplexFormat::kMagPhase);
  doc.tables.push_back(
      matrix_table("toeplitz_abs", f.toeplitz.rows(), f.toeplitz.cols(),
                   [&](std::size_t i, std::size_t j) { return std::abs(f.toeplitz(i, j)); }));
  doc.tables.push_back(
      matrix_table("hankel_phase", f.hankel.rows(), f.hankel.cols(),
                   [&](std::size_t i, std::size_t j) { return std::arg(f.hankel(i, j)); }));
  doc.metadata["dim"] = cfg.dim();
  return doc;
}

Document figure2(const RunOptions& o, Resolved& r) {
  std::vector<double> bs;
  for (int i = 0; i < 8; ++i) bs.push_back(1.5 + 0.48 * i / 7.0);
  const auto as = values_or(o.a, {0.3, 0.4, 0.5});
  bs = values_or(o.b, bs);
  const int order = o.order.value_or(2);
  const auto ells = ell_list(o, r, {0, 4});
  const int grid = positive(o.grid, kSymbolGrid, "--grid");
  r.recorded["a_values"] = as;
  r.recorded["b_values"] = bs;
  r.recorded["order"] = order;
  r.recorded["grid"] = grid;

  Document doc;
  Table curves{"curves", {"a", "b", "ell", "x", "t"}, {}};
  Table ext{"extrema", {"a", "b", "ell", "min", "max"}, {}};
  for (double a : as) {
    for (double b : bs) {
      const GaborParams p{a, b, order};
      p.validate();
      for (int ell : ells) {
        const auto sym = make_symbol(p, ell);
        for (int i = 0; i < grid; ++i) {
          const double x = grid_x(i, grid);
          curves.rows.push_back({a, b, static_cast<double>(ell), x, eval_symbol_coeff(sym, x)});
        }
        const auto e = symbol_extrema(sym);
        ext.rows.push_back({a, b, static_cast<double>(ell), e.min, e.max});
      }
    }
  }
  doc.tables.push_back(std::move(curves));
  doc.tables.push_back(std::move(ext));
  doc.metadata["curves"] = as.size() * bs.size() * ells.size();
  return doc;
}

Document figure3(const RunOptions& o, Resolved& r) {
  const double a = o.a.value_or(0.23), b = o.b.value_or(1.7);
  std::vector<int> orders{2, 3, 4, 5};
  if (o.order) orders = {*o.order};
  const auto ells = ell_list(o, r, {1, 64});
  const int grid = positive(o.grid, kDefaultSymbolGrid, "--grid");
  r.recorded["a"] = a;
  r.recorded["b"] = b;
  r.recorded["orders"] = orders;
  r.recorded["grid"] = grid;

  // The power law is an asymptotic statement; small ell is excluded from the fit.
  const int fit_first = std::max(ells.front(), std::min(kFitFloor, ells.back() - 1));
  if (fit_first >= ells.back()) throw InvalidArgument("decay fit needs at least two ell values");

  Document doc;
  Table t{"widths", {"order", "ell", "width", "slope", "reference"}, {}};
  Json fits = Json::array();
  for (int order : orders) {
    const GaborParams p{a, b, order};
    p.validate();
    const auto fit = decay_fit(p, fit_first, ells.back(), grid);
    const double anchor = fit.widths.front();
    for (int ell : ells) {
      const double w = ell >= fit_first ? fit.widths[static_cast<std::size_t>(ell - fit_first)]
                                        : spectral_width(p, ell, grid);
      t.rows.push_back({static_cast<double>(order), static_cast<double>(ell), w, fit.slope,
                        anchor * std::pow(static_cast<double>(ell) / fit_first, -order)});
    }
    fits.push_back({{"order", order}, {"slope", fit.slope}, {"intercept", fit.intercept}});
  }
  doc.tables.push_back(std::move(t));
  doc.metadata["fit_range"] = {fit_first, ells.back()};
  doc.metadata["fits"] = fits;
  return doc;
}

Document figure4(const RunOptions& o, Resolved& r) {
  const auto as = values_or(o.a, {0.2, 0.3, 0.4, 0.5});
  const auto bs = values_or(o.b, {1.5, 1.6, 1.7, 1.8, 1.9});
  const int order = o.order.value_or(2);
  const int n = o.n.value_or(15);
  r.recorded["a_values"] = as;
  r.recorded["b_values"] = bs;
  r.recorded["order"] = order;
  r.recorded["n"] = n;

  Document doc;
  Table t{"estimates",
          {"a", "b", "gram_min", "symbol_min", "block0_min", "block0_max", "symbol_max", "gram_max",
           "interlacing_holds"},
          {}};
  for (double a : as) {
    for (double b : bs) {
      const auto rep = interlacing_check({{a, b, order}, n});
      t.rows.push_back({a, b, rep.gram_eigenvalues.front(), rep.symbol.min,
                        rep.block0_eigenvalues.front(), rep.block0_eigenvalues.back(),
                        rep.symbol.max, rep.gram_eigenvalues.back(), rep.all_hold ? 1.0 : 0.0});
    }
  }
  doc.tables.push_back(std::move(t));
  return doc;
}

Document figure5(const RunOptions& o, Resolved& r) {
  const auto ells = ell_list(o, r, {0, 3});
  const auto ns = o.n_list.empty() ? std::vector<int>{33, 65, 129, 257} : o.n_list;
  r.recorded["n_list"] = ns;
  Document doc;
  Table stats = stats_table(), diffs = diffs_table();
  for (int ell : ells) push_comparison(make_symbol(r.params, ell), ns, stats, diffs);
  doc.tables.push_back(std::move(stats));
  doc.tables.push_back(std::move(diffs));
  return doc;
}

Document cmd_figure(const RunOptions& o, Resolved& r) {
  if (!o.figure) throw InvalidArgument("figure needs --figure 1..5");
  r.recorded["figure"] = *o.figure;
  switch (*o.figure) {
    case 1:
      return figure1(o, r);
    case 2:
      return figure2(o, r);
    case 3:
      return figure3(o, r);
    case 4:
      return figure4(o, r);
    case 5:
      return figure5(o, r);
    default:
      throw InvalidArgument("unknown figure " + std::to_string(*o.figure));
  }
}

Json tolerances(const RunOptions& o) {
  return {{"eigen_offdiag", EigenOptions{}.tol},
          {"eigen_pairing", 1e-9},
          {"interlacing_slack", kInterlacingSlack},
          {"fourier_check", 1e-10},
          {"zero_threshold", kZeroTol},
          {"breakpoint_merge", kBreakpointMergeTol},
          {"sinc", o.tol.value_or(kSincTol)}};
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::pair<int, int> parse_ell_range(const std::string& text) {
  std::size_t sep = text.find("..");
  std::size_t skip = 2;
  if (sep == std::string::npos) {
    sep = text.find(':');
    skip = 1;
  }
  if (sep == std::string::npos) throw InvalidArgument("ell range must look like 8:64 or 8..64");
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, sep), hi = text.substr(sep + skip);
    const int first = std::stoi(lo, &used);
    if (used != lo.size()) throw InvalidArgument("bad ell range " + text);
    const int last = std::stoi(hi, &used);
    if (used != hi.size()) throw InvalidArgument("bad ell range " + text);
    return {first, last};
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad ell range " + text);
  }
}

Document run_command(const RunOptions& o) {
  GaborParams defaults;
  if (o.command == "decay") defaults = {0.23, 1.7, 2};
  Resolved r;
  if (o.command == "figure" && o.figure && (*o.figure == 2 || *o.figure == 3 || *o.figure == 4)) {
    // Sweeping figures record their own parameter lists.
  } else {
    r = resolve(o, defaults);
  }

  using Handler = Document (*)(const RunOptions&, Resolved&);
  static const std::map<std::string, Handler> handlers{
      {"symbol", cmd_symbol},           {"gram", cmd_gram},    {"block", cmd_block},
      {"spectrum", cmd_spectrum},       {"decay", cmd_decay},  {"circulant", cmd_circulant},
      {"framebounds", cmd_framebounds}, {"figure", cmd_figure}};
  const auto handler = handlers.find(o.command);
  if (handler == handlers.end()) throw InvalidArgument("unknown command " + o.command);
  Document doc = handler->second(o, r);

  doc.manifest = {{"command", o.command},
                  {"params", r.recorded},
                  {"output",
                   {{"format", o.format == Format::kJson ? "json" : "csv"},
                    {"path", o.out.empty() ? "-" : o.out}}}};
  if (o.command == "gram" || o.command == "block")
    doc.manifest["output"]["complex"] =
        o.complex_format == ComplexFormat::kMagPhase ? "magphase" : "reim";

  Json meta = {{"version", GABORGRAM_VERSION}, {"tolerances", tolerances(o)}};
  for (auto& [key, value] : doc.metadata.items()) meta[key] = value;
  if (o.stamp) meta["generated"] = utc_now();
  doc.metadata = std::move(meta);
  return doc;
}

int exit_code(const std::exception& e) noexcept {
  if (dynamic_cast<const ConvergenceError*>(&e)) return 3;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return 2;
  return 1;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"B-spline Gabor Gram matrices: symbols, spectra, frame bounds", "gaborgram"};
  app.set_version_flag("--version", GABORGRAM_VERSION);
  app.fallthrough();
  app.require_subcommand(1);

  RunOptions o;
  std::string ell_range;
  app.add_option("--a", o.a, "time-shift step");
  app.add_option("--b", o.b, "frequency-shift step");
  app.add_option("--order", o.order, "B-spline order N");
  app.add_option("--n", o.n, "truncation size (odd)");
  app.add_option("--ell", o.ell, "modulation difference");
  app.add_option("--ell-range", ell_range, "inclusive range FIRST:LAST");
  app.add_option("--grid", o.grid, "sample count");
  app.add_option("--tol", o.tol, "sinc-sum truncation tolerance");
  app.add_option("--n-list", o.n_list, "comma-separated n values")->delimiter(',');
  app.add_option("--figure", o.figure, "figure id 1..5");
  app.add_option("--format", o.format, "csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::kCsv}, {"json", Format::kJson}}));
  app.add_option("--complex", o.complex_format, "complex matrices as reim or magphase")
      ->transform(CLI::CheckedTransformer(std::map<std::string, ComplexFormat>{
          {"reim", ComplexFormat::kReIm}, {"magphase", ComplexFormat::kMagPhase}}));
  app.add_option("--out", o.out, "output path (default: stdout)");
  app.add_flag("--stamp", o.stamp, "record a generation timestamp in the metadata");
  for (const auto& name : command_names()) app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    if (!ell_range.empty()) o.ell_range = parse_ell_range(ell_range);
    const auto text = render(run_command(o), o.format);
    if (o.out.empty())
      std::cout << text;
    else
      write_atomic(o.out, text);
    return 0;
  } catch (const std::exception& e) {
    const int code = exit_code(e);
    const char* kind = code == 3   ? "convergence failure"
                       : code == 2 ? "invalid parameters"
                                   : "error";
    std::cerr << "gaborgram: " << kind << ": " << e.what() << '\n';
    return code;
  }
}

}  // namespace gabor::cli
