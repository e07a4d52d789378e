#include "cli.hpp"

#include "hurwitz/free_energy.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/operators.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/partition_function.hpp"
#include "hurwitz/semiclassical.hpp"
#include "hurwitz/symfun.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

namespace hurwitz::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::optional<int> genus;
  std::optional<int> n;
  std::optional<int> order;
  std::optional<int> genus_floor;
  std::optional<int> complexity;
  std::optional<int> fit_rows;
  std::vector<int> mu;
  int r = 0;
  bool connected = false;
  bool base_genus_given = false;
  bool degree_given = false;
};

struct Context {
  RunConfig config;
  Options options;
  BaseCurve base() const { return BaseCurve{config.base_genus}; }
};

struct Outcome {
  json body = json::object();
  bool ok = true;
  std::vector<std::string> text;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json rational_json(const Rational& q) { return to_string(q); }

json partition_json(const Partition& p)
{
  json out = json::array();
  for (int part : p.parts())
    out.push_back(part);
  return out;
}

void warm_characters(const RunConfig& config, int max_degree)
{
  for (int d = 1; d <= max_degree; ++d)
    load_or_build_character_table(d, config.cache_dir);
}

// ---------------------------------------------------------------- tables

Outcome hurwitz_table(const Context& ctx)
{
  const auto& c = ctx.config;
  warm_characters(c, c.degree_bound);
  const HurwitzTable table = HurwitzTable::build(ctx.base(), c.degree_bound, c.ramification_bound);
  Outcome out;
  out.body["base_genus"] = c.base_genus;
  out.body["degree_bound"] = c.degree_bound;
  out.body["ramification_bound"] = c.ramification_bound;
  json entries = json::array();
  for (const auto& e : table.entries()) {
    entries.push_back(
        {{"g", e.genus}, {"mu", partition_json(e.mu)}, {"r", e.r}, {"value", rational_json(e.value)}});
    out.text.push_back("g=" + std::to_string(e.genus) + " mu=" + e.mu.to_string() +
                       " r=" + std::to_string(e.r) + " " + to_string(e.value));
  }
  out.body["entries"] = std::move(entries);
  return out;
}

Outcome free_energy(const Context& ctx)
{
  const int g = ctx.options.genus.value_or(1);
  const int n = ctx.options.n.value_or(1);
  if (g < 0 || n < 1)
    throw UsageError("free-energy needs --genus >= 0 and --n >= 1");
  warm_characters(ctx.config, ctx.config.degree_bound);
  FreeEnergyFamily family =
      FreeEnergyFamily::for_complexity(ctx.base(), 2 * g - 2 + n, ctx.config.degree_bound);
  const FreeEnergy& f = family.get(g, n);
  Outcome out;
  out.body["base_genus"] = ctx.config.base_genus;
  out.body["genus"] = g;
  out.body["n"] = n;
  out.body["degree_bound"] = f.degree_bound;
  out.body["truncated"] = f.truncated;
  json terms = json::array();
  for (const auto& [e, coefficient] : f.poly.terms()) {
    terms.push_back({{"exponents", e}, {"coefficient", rational_json(coefficient)}});
    std::string line = to_string(coefficient);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] > 0)
        line += " x" + std::to_string(k + 1) + (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
    out.text.push_back(line);
  }
  out.body["terms"] = std::move(terms);
  return out;
}

// ---------------------------------------------------------------- recursions

Outcome verify_caj(const Context& ctx)
{
  const auto& c = ctx.config;
  const int max_genus = ctx.options.genus.value_or(4);
  const BaseCurve base = ctx.base();
  int r_needed = 0;
  for (int d = 1; d <= c.degree_bound; ++d)
    for (const auto& mu : enumerate_partitions(d))
      r_needed = std::max(r_needed, ramification_count(base, max_genus, mu));
  warm_characters(c, c.degree_bound);
  const HurwitzTable table = HurwitzTable::build(base, c.degree_bound, r_needed);

  Outcome out;
  json results = json::array();
  int checked = 0, skipped = 0;
  json first_failure = nullptr;
  for (int d = 1; d <= c.degree_bound; ++d)
    for (const auto& mu : enumerate_partitions(d))
      for (int g = 0; g <= max_genus; ++g) {
        const auto check = verify_cut_and_join(table, g, mu.parts());
        if (check.status == CajStatus::Skipped) {
          ++skipped;
          continue;
        }
        ++checked;
        const bool holds = check.status == CajStatus::Holds;
        json row = {{"g", g},     {"mu", partition_json(mu)},   {"r", check.r},
                    {"holds", holds}, {"lhs", rational_json(check.lhs)}, {"rhs", rational_json(check.rhs)}};
        if (!holds && first_failure.is_null())
          first_failure = row;
        out.ok = out.ok && holds;
        out.text.push_back(std::string(holds ? "PASS" : "FAIL") + " g=" + std::to_string(g) +
                           " mu=" + mu.to_string() + " r=" + std::to_string(check.r) + " " +
                           to_string(check.lhs) + " = " + to_string(check.rhs));
        results.push_back(std::move(row));
      }
  out.body["base_genus"] = c.base_genus;
  out.body["degree_bound"] = c.degree_bound;
  out.body["max_genus"] = max_genus;
  out.body["checked"] = checked;
  out.body["skipped"] = skipped;
  out.body["first_failure"] = first_failure;
  out.body["results"] = std::move(results);
  return out;
}

json pde_json(const PdeReport& report)
{
  json layers = json::array();
  for (const auto& layer : report.layers)
    layers.push_back({{"degree", layer.degree},
                      {"kernel", layer.kernel},
                      {"holds", layer.holds},
                      {"lhs", to_string(layer.lhs)},
                      {"rhs", to_string(layer.rhs)}});
  return {{"g", report.genus},
          {"n", report.n},
          {"holds", report.holds},
          {"truncated", report.truncated},
          {"max_degree", report.max_degree},
          {"kernel_degree", report.kernel_degree ? json(*report.kernel_degree) : json(nullptr)},
          {"first_failure", report.first_failure ? json(*report.first_failure) : json(nullptr)},
          {"layers", std::move(layers)}};
}

Outcome verify_pde_cmd(const Context& ctx)
{
  const auto& o = ctx.options;
  std::vector<std::pair<int, int>> cells;
  int complexity = o.complexity.value_or(5);
  if (o.genus || o.n) {
    if (!o.genus || !o.n)
      throw UsageError("verify-pde needs both --genus and --n, or neither");
    if (2 * *o.genus - 2 + *o.n <= 0 || *o.n < 1)
      throw UsageError("verify-pde needs n >= 1 and 2g-2+n > 0");
    cells.emplace_back(*o.genus, *o.n);
    complexity = 2 * *o.genus - 2 + *o.n;
  } else {
    for (int c = 1; c <= complexity; ++c)
      for (int g = 0; 2 * g <= c + 1; ++g)
        if (const int n = c + 2 - 2 * g; n >= 1)
          cells.emplace_back(g, n);
  }
  warm_characters(ctx.config, ctx.config.degree_bound);
  FreeEnergyFamily family =
      FreeEnergyFamily::for_complexity(ctx.base(), complexity, ctx.config.degree_bound);
  Outcome out;
  json results = json::array();
  for (const auto& [g, n] : cells) {
    const PdeReport report = verify_pde(family, g, n);
    out.ok = out.ok && report.holds;
    std::string line = std::string(report.holds ? "PASS" : "FAIL") + " g=" + std::to_string(g) +
                       " n=" + std::to_string(n) + " layers=" + std::to_string(report.layers.size());
    if (report.kernel_degree)
      line += " kernel=" + std::to_string(*report.kernel_degree);
    if (report.first_failure)
      line += " first_failure=" + std::to_string(*report.first_failure);
    out.text.push_back(line);
    results.push_back(pde_json(report));
  }
  out.body["base_genus"] = ctx.config.base_genus;
  out.body["max_complexity"] = complexity;
  out.body["results"] = std::move(results);
  return out;
}

// ---------------------------------------------------------------- operators

json operator_check_json(const OperatorCheck& check)
{
  json residuals = json::array();
  for (const auto& r : check.residuals)
    residuals.push_back(to_string(r));
  return {{"name", check.name},
          {"x_bound", check.x_bound},
          {"checked_through", check.checked_through},
          {"excluded_degree", check.excluded_degree ? json(*check.excluded_degree) : json(nullptr)},
          {"first_failure", check.first_failure ? json(*check.first_failure) : json(nullptr)},
          {"residuals", std::move(residuals)},
          {"holds", check.holds}};
}

std::string operator_check_line(const OperatorCheck& check)
{
  std::string line = std::string(check.holds ? "PASS " : "FAIL ") + check.name +
                     " degrees 0.." + std::to_string(check.checked_through);
  if (check.excluded_degree)
    line += " (excluded top layer " + std::to_string(*check.excluded_degree) + ")";
  if (check.first_failure)
    line += " first_failure=" + std::to_string(*check.first_failure);
  return line;
}

Outcome operator_checks(const Context& ctx, const std::vector<OperatorCheck>& checks)
{
  Outcome out;
  out.body["base_genus"] = ctx.config.base_genus;
  out.body["x_bound"] = ctx.config.x_bound;
  json list = json::array();
  for (const auto& check : checks) {
    out.ok = out.ok && check.holds;
    out.text.push_back(operator_check_line(check));
    list.push_back(operator_check_json(check));
  }
  out.body["checks"] = std::move(list);
  return out;
}

Outcome verify_quantum_curve(const Context& ctx)
{
  return operator_checks(ctx, {verify_PZ(ctx.base(), ctx.config.x_bound),
                               verify_P1_identity(ctx.base(), ctx.config.x_bound)});
}

Outcome verify_schrodinger(const Context& ctx)
{
  return operator_checks(ctx, {verify_QZ(ctx.base(), ctx.config.x_bound)});
}

Outcome verify_commutator_cmd(const Context& ctx)
{
  const std::vector<int> js{-1, 0, 1, 2};
  const std::vector<Rational> as{Rational(0), Rational(1), frac(3, 2), Rational(3)};
  std::vector<int> ms;
  for (int m = 0; m <= 5; ++m)
    ms.push_back(m);
  const CommutatorReport report = verify_commutator(ctx.base(), basis_grid(js, as, ms));
  Outcome out;
  out.ok = report.holds;
  json rates = json::array();
  for (const auto& a : as)
    rates.push_back(rational_json(a));
  json failures = json::array();
  for (const auto& check : report.checks) {
    if (check.holds)
      continue;
    std::string residual;
    for (int m = 0; m <= check.residual.bound(); ++m)
      if (!check.residual[m].is_zero())
        residual += "[x^" + std::to_string(m) + "] " + to_string(check.residual[m]) + "; ";
    failures.push_back({{"hbar_power", check.element.hbar_power},
                        {"exp_rate", rational_json(check.element.exp_rate)},
                        {"x_degree", check.element.x_degree},
                        {"residual", residual}});
  }
  out.body["base_genus"] = ctx.config.base_genus;
  out.body["grid"] = {{"hbar_powers", js}, {"exp_rates", rates}, {"x_degrees", ms}};
  out.body["size"] = report.checks.size();
  out.body["failures"] = std::move(failures);
  out.text.push_back(std::string(report.holds ? "PASS" : "FAIL") +
                     " [P,Q] + P/hbar annihilates " + std::to_string(report.checks.size()) +
                     " basis elements");
  return out;
}

Outcome z_match_cmd(const Context& ctx)
{
  const auto& c = ctx.config;
  warm_characters(c, c.x_bound);
  const ZMatch match = z_match(ctx.base(), c.x_bound, c.hbar_bound, ctx.options.genus_floor);
  Outcome out;
  out.ok = match.holds;
  json coefficients = json::array();
  for (int m = 0; m <= c.x_bound; ++m)
    for (const auto& [k, v] : match.closed_form.coefficients[static_cast<std::size_t>(m)].terms())
      coefficients.push_back({{"m", m}, {"k", k}, {"value", rational_json(v)}});
  json mismatches = json::array();
  for (const auto& [m, k] : match.mismatches)
    mismatches.push_back({{"m", m},
                          {"k", k},
                          {"diagonal", rational_json(match.diagonal.coefficient(m, k))},
                          {"closed_form", rational_json(match.closed_form.coefficient(m, k))}});
  out.body["base_genus"] = c.base_genus;
  out.body["x_bound"] = c.x_bound;
  out.body["hbar_bound"] = c.hbar_bound;
  out.body["genus_floor"] = match.genus_floor;
  out.body["coefficients"] = std::move(coefficients);
  out.body["mismatches"] = std::move(mismatches);
  out.text.push_back(std::string(match.holds ? "PASS" : "FAIL") + " diagonal Z = closed form through x^" +
                     std::to_string(c.x_bound) + " hbar^" + std::to_string(c.hbar_bound) +
                     " (" + std::to_string(match.mismatches.size()) + " mismatches)");
  return out;
}

// ---------------------------------------------------------------- oracle

Outcome oracle_cmd(const Context& ctx)
{
  const auto& o = ctx.options;
  if (o.mu.empty())
    throw UsageError("oracle needs --mu");
  const Partition mu = Partition::from_unsorted(o.mu);
  if (ctx.options.degree_given && ctx.config.degree_bound != mu.size())
    throw UsageError("--degree disagrees with |mu|");
  if (o.r < 0)
    throw UsageError("--r must be non-negative");
  const oracle::MonodromyProblem problem{ctx.config.base_genus, mu, o.r, o.connected};
  const Rational value = oracle::count_covers(problem, ctx.config.oracle_budget);
  Outcome out;
  out.body["base_genus"] = ctx.config.base_genus;
  out.body["degree"] = mu.size();
  out.body["mu"] = partition_json(mu);
  out.body["r"] = o.r;
  out.body["connected"] = o.connected;
  out.body["steps"] = oracle::estimated_steps(ctx.config.base_genus, mu.size(), o.r);
  out.body["value"] = rational_json(value);
  out.text.push_back(to_string(value));
  return out;
}

Outcome oracle_compare(const Context& ctx)
{
  const auto& c = ctx.config;
  const int max_degree = ctx.options.degree_given ? c.degree_bound : std::min(c.degree_bound, 4);
  if (max_degree > oracle::kMaxDegree)
    throw UsageError("oracle-compare supports degrees up to " + std::to_string(oracle::kMaxDegree));
  warm_characters(c, max_degree);
  const HurwitzTable table = HurwitzTable::build(ctx.base(), max_degree, c.ramification_bound);
  Outcome out;
  int cells = 0, comparisons = 0;
  json skipped = json::array(), mismatches = json::array();
  for (int d = 1; d <= max_degree; ++d)
    for (int r = 0; r <= c.ramification_bound; ++r) {
      const std::uint64_t steps = oracle::estimated_steps(c.base_genus, d, r);
      if (steps > c.oracle_budget) {
        skipped.push_back({{"degree", d}, {"r", r}, {"steps", steps}});
        continue;
      }
      ++cells;
      const oracle::Census census = oracle::census(c.base_genus, d, r, c.oracle_budget);
      const Rational scale(Integer(factorial(static_cast<unsigned>(r))));
      Rational inv_dfact(Integer(1), factorial(static_cast<unsigned>(d)));
      inv_dfact.canonicalize();
      for (const auto& mu : enumerate_partitions(d)) {
        const Rational all = Rational(census.all.at(mu)) * inv_dfact;
        const Rational conn = Rational(census.transitive.at(mu)) * inv_dfact;
        const Rational heat_all = table.disconnected_coefficient(r, mu) * scale;
        const Rational heat_conn = table.connected_coefficient(r, mu) * scale;
        comparisons += 2;
        if (all != heat_all || conn != heat_conn) {
          mismatches.push_back({{"mu", partition_json(mu)},
                                {"r", r},
                                {"oracle", rational_json(all)},
                                {"heat", rational_json(heat_all)},
                                {"oracle_connected", rational_json(conn)},
                                {"heat_connected", rational_json(heat_conn)}});
        }
      }
    }
  out.ok = mismatches.empty();
  out.body["base_genus"] = c.base_genus;
  out.body["max_degree"] = max_degree;
  out.body["max_r"] = c.ramification_bound;
  out.body["cells"] = cells;
  out.body["comparisons"] = comparisons;
  out.body["skipped"] = std::move(skipped);
  out.body["mismatches"] = mismatches;
  out.text.push_back(std::string(out.ok ? "PASS" : "FAIL") + " " + std::to_string(comparisons) +
                     " comparisons over " + std::to_string(cells) + " (degree, r) cells, " +
                     std::to_string(out.body["skipped"].size()) + " cells over budget");
  return out;
}

// ---------------------------------------------------------------- series

json series_json(const PowerSeries& f)
{
  json out = json::array();
  for (int k = 0; k <= f.bound(); ++k)
    out.push_back({{"n", k}, {"value", rational_json(f[k])}});
  return out;
}

void series_lines(const PowerSeries& f, const std::string& variable, std::vector<std::string>& text)
{
  for (int k = 0; k <= f.bound(); ++k)
    if (f[k] != 0)
      text.push_back(to_string(f[k]) + " " + variable + "^" + std::to_string(k));
}

Outcome elliptic_series(const Context& ctx)
{
  if (ctx.options.base_genus_given && ctx.config.base_genus != 1)
    throw UsageError("elliptic-series is defined over a genus-one base");
  const int g = ctx.options.genus.value_or(1);
  if (g < 1)
    throw UsageError("elliptic-series needs --genus >= 1");
  const int order = ctx.options.order.value_or(g == 1 ? 20 : 12);
  Outcome out;
  out.body["genus"] = g;
  out.body["order"] = order;
  if (g == 1) {
    const EllipticF1Check check = elliptic_F1_series(order);
    out.ok = check.matches;
    out.body["coefficients"] = series_json(check.series);
    out.body["matches_minus_log_euler_function"] = check.matches;
    series_lines(check.series, "q", out.text);
    out.text.push_back(std::string(check.matches ? "PASS" : "FAIL") + " equals -log prod(1 - q^m)");
    return out;
  }
  const PowerSeries series = elliptic_Fg_series(g, order);
  const int weight = 6 * g - 6;
  int basis_size = 0;
  for (int a = 0; 2 * a <= weight; ++a)
    for (int b = 0; 2 * a + 4 * b <= weight; ++b)
      basis_size += (weight - 2 * a - 4 * b) % 6 == 0;
  const int rows = ctx.options.fit_rows.value_or(basis_size + 1);
  const QuasimodularFit fit = quasimodular_fit(series, weight, rows);
  out.ok = fit.ok;
  out.body["coefficients"] = series_json(series);
  json basis = json::array();
  for (std::size_t i = 0; i < fit.basis.size(); ++i)
    basis.push_back({{"monomial", basis_label(fit.basis[i])},
                     {"coefficient", i < fit.coefficients.size() ? rational_json(fit.coefficients[i])
                                                                  : json(nullptr)}});
  out.body["quasimodular_fit"] = {
      {"weight", weight},
      {"fit_degrees", {fit.fit_from, fit.fit_to}},
      {"basis", std::move(basis)},
      {"checked_degrees", fit.checked},
      {"first_mismatch", fit.first_mismatch ? json(*fit.first_mismatch) : json(nullptr)},
      {"diagnostic", fit.diagnostic.empty() ? json(nullptr) : json(fit.diagnostic)},
      {"ok", fit.ok}};
  series_lines(series, "q", out.text);
  std::string fit_line = std::string(fit.ok ? "PASS" : "FAIL") + " weight-" + std::to_string(weight) +
                         " quasimodular fit on q^1..q^" + std::to_string(rows);
  if (!fit.diagnostic.empty())
    fit_line += " (" + fit.diagnostic + ")";
  out.text.push_back(fit_line);
  return out;
}

Outcome semiclassical_cmd(const Context& ctx)
{
  if (ctx.options.base_genus_given && ctx.config.base_genus != 0)
    throw UsageError("semiclassical analysis is available for the base P^1 (genus 0) only");
  const int order = ctx.options.order.value_or(10);
  const SemiclassicalReport report = verify_S0_S1(2, order);
  Outcome out;
  out.ok = report.holds;
  out.body["euler_characteristic"] = 2;
  out.body["order"] = order;
  out.body["y"] = series_json(report.y);
  json identities = json::array();
  series_lines(report.y, "x", out.text);
  for (const auto& id : report.identities) {
    identities.push_back({{"name", id.name}, {"holds", id.holds}});
    out.text.push_back(std::string(id.holds ? "PASS " : "FAIL ") + id.name);
  }
  out.body["identities"] = std::move(identities);
  out.body["opposite_sign_s1"] = {{"holds", report.opposite_sign_s1.holds},
                                  {"residual", to_string(report.opposite_sign_s1.residual)}};
  out.text.push_back(std::string("INFO opposite log sign in S1 ") +
                     (report.opposite_sign_s1.holds ? "also satisfies" : "violates") +
                     " the transport equation");
  return out;
}

// ---------------------------------------------------------------- verify-all

Outcome characters_check(const Context& ctx)
{
  Outcome out;
  json degrees = json::array();
  for (int d = 1; d <= ctx.config.degree_bound; ++d) {
    const CharacterTable t = load_or_build_character_table(d, ctx.config.cache_dir);
    const auto& parts = t.partitions();
    bool ok = true;
    Integer dims = 0;
    for (std::size_t l = 0; l < parts.size(); ++l)
      dims += Integer(static_cast<long>(t.dim(l))) * Integer(static_cast<long>(t.dim(l)));
    ok = ok && dims == factorial(static_cast<unsigned>(d));
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = 0; b < parts.size(); ++b) {
        Integer s = 0;
        for (std::size_t l = 0; l < parts.size(); ++l)
          s += Integer(static_cast<long>(t.value(l, a))) * Integer(static_cast<long>(t.value(l, b)));
        ok = ok && s == (a == b ? z_of(parts[a]) : Integer(0));
      }
    degrees.push_back({{"degree", d}, {"ok", ok}});
    out.ok = out.ok && ok;
  }
  out.body["degrees"] = std::move(degrees);
  return out;
}

Outcome eigenfunction_check(const Context& ctx)
{
  Outcome out;
  const int D = ctx.config.degree_bound;
  int checked = 0;
  for (int d = 1; d <= D; ++d)
    for (const auto& mu : enumerate_partitions(d)) {
      const SymFun s = schur(mu, D);
      out.ok = out.ok && cut_and_join(s) == s * frac(shifted_p2(mu), 2);
      ++checked;
    }
  out.body["checked"] = checked;
  return out;
}

Outcome heat_check(const Context& ctx)
{
  const auto& c = ctx.config;
  const HeatSeries series = disconnected_generating_function(ctx.base(), c.degree_bound,
                                                             c.ramification_bound);
  Outcome out;
  out.ok = heat_residual(series).is_zero();
  return out;
}

Outcome s_recursion_check(const Context& ctx)
{
  Outcome out;
  const int h = ctx.config.base_genus;
  FreeEnergyFamily family = FreeEnergyFamily::for_complexity(ctx.base(), 2 * h + 3);
  json results = json::array();
  for (int m = 2 * h; m <= 2 * h + 3; ++m) {
    const bool holds = verify_S_recursion(family, m).holds;
    results.push_back({{"m", m}, {"holds", holds}});
    out.ok = out.ok && holds;
  }
  out.body["results"] = std::move(results);
  return out;
}

Outcome convergence_check(const Context& ctx)
{
  const ConvergenceCheck check = convergence_smoke_test(ctx.base());
  Outcome out;
  out.ok = check.holds;
  std::ostringstream diff;
  diff.precision(3);
  diff << std::scientific << check.relative_difference;
  out.body["relative_difference"] = diff.str();
  return out;
}

Outcome elliptic_sequence_check(const Context& ctx)
{
  (void)ctx;
  static const long expected[] = {1, 3, 8, 42, 144, 1440, 5760, 75600, 524160, 6531840};
  const HeatSeries series = connected_trivial_profile(BaseCurve{1}, 10, 0);
  Outcome out;
  for (int n = 1; n <= 10; ++n) {
    const TPoly* c = series.find(Partition::ones(n));
    const Rational value = c ? Rational(c->at(0) * Rational(factorial(static_cast<unsigned>(n))))
                             : Rational(0);
    out.ok = out.ok && value == expected[n - 1];
  }
  return out;
}

Outcome verify_all(const Context& ctx)
{
  const int h = ctx.config.base_genus;
  std::vector<std::pair<std::string, std::function<Outcome(const Context&)>>> suite{
      {"characters", characters_check},
      {"eigenfunction", eigenfunction_check},
      {"heat-equation", heat_check},
  };
  Context oracle_ctx = ctx;
  oracle_ctx.options.degree_given = false;
  suite.emplace_back("oracle-compare", [oracle_ctx](const Context&) { return oracle_compare(oracle_ctx); });
  Context caj_ctx = ctx;
  caj_ctx.config.degree_bound = std::min(ctx.config.degree_bound, 4);
  caj_ctx.options.genus = 4;
  suite.emplace_back("cut-and-join", [caj_ctx](const Context&) { return verify_caj(caj_ctx); });
  Context pde_ctx = ctx;
  pde_ctx.options.genus.reset();
  pde_ctx.options.n.reset();
  pde_ctx.options.complexity = 5;
  suite.emplace_back("pde", [pde_ctx](const Context&) { return verify_pde_cmd(pde_ctx); });
  if (h >= 1)
    suite.emplace_back("s-recursion", s_recursion_check);
  suite.emplace_back("quantum-curve", verify_quantum_curve);
  suite.emplace_back("schrodinger", verify_schrodinger);
  suite.emplace_back("commutator", verify_commutator_cmd);
  Context z_ctx = ctx;
  z_ctx.options.genus_floor.reset();
  suite.emplace_back("z-match", [z_ctx](const Context&) { return z_match_cmd(z_ctx); });
  suite.emplace_back("convergence", convergence_check);
  if (h == 1) {
    suite.emplace_back("elliptic-genus-one", elliptic_sequence_check);
    Context e1 = ctx;
    e1.options = Options{};
    e1.options.genus = 1;
    suite.emplace_back("euler-function", [e1](const Context&) { return elliptic_series(e1); });
    Context e2 = e1;
    e2.options.genus = 2;
    suite.emplace_back("quasimodular-fit", [e2](const Context&) { return elliptic_series(e2); });
  }
  if (h == 0) {
    Context s = ctx;
    s.options = Options{};
    suite.emplace_back("semiclassical", [s](const Context&) { return semiclassical_cmd(s); });
  }

  Outcome out;
  json checks = json::array();
  for (const auto& [name, fn] : suite) {
    const Outcome r = fn(ctx);
    checks.push_back({{"name", name}, {"ok", r.ok}});
    out.text.push_back(std::string(r.ok ? "PASS " : "FAIL ") + name);
    out.ok = out.ok && r.ok;
  }
  out.body["base_genus"] = h;
  out.body["checks"] = std::move(checks);
  return out;
}

// ---------------------------------------------------------------- driver

void emit(const std::string& command, const Outcome& outcome, Format format, std::ostream& out)
{
  if (format == Format::Text) {
    for (const auto& line : outcome.text)
      out << line << "\n";
    return;
  }
  json doc = {{"schema", 1}, {"command", command}};
  for (const auto& [key, value] : outcome.body.items())
    doc[key] = value;
  doc["ok"] = outcome.ok;
  out << doc.dump(2) << "\n";
}

} // namespace

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag)
{
  if (flag && !flag->empty())
    return std::filesystem::path(*flag);
  if (const char* env = std::getenv("HURWITZ_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "hurwitz";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "hurwitz";
  return std::nullopt;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact Hurwitz numbers over a base curve and checks of their identities", "hurwitz"};
  app.require_subcommand(1);

  Context ctx;
  std::optional<std::string> cache_flag;
  std::string format = "json";
  auto* base_opt = app.add_option("--base-genus", ctx.config.base_genus, "Genus h of the base curve")
                       ->check(CLI::NonNegativeNumber);
  auto* degree_opt = app.add_option("--degree", ctx.config.degree_bound, "Degree bound D")
                         ->check(CLI::PositiveNumber);
  app.add_option("--ramification", ctx.config.ramification_bound,
                 "Bound R on simple branch points")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--x-bound", ctx.config.x_bound, "Bound M on the x-degree")->check(CLI::PositiveNumber);
  app.add_option("--hbar-bound", ctx.config.hbar_bound, "Bound K on the hbar-degree")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--budget", ctx.config.oracle_budget, "Oracle step budget")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cache_flag, "Character table cache directory");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::map<std::string, std::function<Outcome(const Context&)>> commands;
  const auto add = [&](const std::string& name, const std::string& help,
                       std::function<Outcome(const Context&)> fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    commands[name] = std::move(fn);
    return sub;
  };
  add("hurwitz-table", "Connected Hurwitz numbers up to the degree and ramification bounds",
      hurwitz_table);
  auto* fe = add("free-energy", "Free energy polynomial F_{g,n}", free_energy);
  fe->add_option("--genus", ctx.options.genus, "Domain genus g");
  fe->add_option("--n", ctx.options.n, "Number of marked preimages");
  auto* caj = add("verify-caj", "Cut-and-join recursion for |mu| <= D", verify_caj);
  caj->add_option("--genus", ctx.options.genus, "Largest domain genus (default 4)");
  auto* pde = add("verify-pde", "Laplace-transformed cut-and-join equation, layer by layer",
                  verify_pde_cmd);
  pde->add_option("--genus", ctx.options.genus, "Domain genus g");
  pde->add_option("--n", ctx.options.n, "Number of marked preimages");
  pde->add_option("--complexity", ctx.options.complexity, "Sweep all 0 < 2g-2+n <= this (default 5)");
  add("verify-quantum-curve", "P Z = 0 and the first-order factor identity", verify_quantum_curve);
  add("verify-schrodinger", "Q Z = 0", verify_schrodinger);
  add("verify-commutator", "[P,Q] = -P/hbar on a basis grid", verify_commutator_cmd);
  auto* zm = add("z-match", "Diagonal partition function against the closed form", z_match_cmd);
  zm->add_option("--genus-floor", ctx.options.genus_floor, "Smallest domain genus included");
  auto* orc = add("oracle", "Brute-force monodromy count", oracle_cmd);
  orc->add_option("--mu", ctx.options.mu, "Ramification profile, e.g. 2,1")->delimiter(',');
  orc->add_option("--r", ctx.options.r, "Number of simple branch points");
  orc->add_flag("--connected", ctx.options.connected, "Count transitive tuples only");
  add("oracle-compare", "Oracle against the heat-equation table over the feasible grid",
      oracle_compare);
  auto* ell = add("elliptic-series", "Generating series of unramified-profile numbers over an elliptic base",
                  elliptic_series);
  ell->add_option("--genus", ctx.options.genus, "Domain genus g (default 1)");
  ell->add_option("--order", ctx.options.order, "Series order");
  ell->add_option("--fit-rows", ctx.options.fit_rows, "Coefficients used by the quasimodular fit");
  auto* semi = add("semiclassical", "Lambert curve and the leading WKB terms", semiclassical_cmd);
  semi->add_option("--order", ctx.options.order, "Series order (default 10)");
  add("verify-all", "Every check for one base genus", verify_all);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ctx.config.format = format == "text" ? Format::Text : Format::Json;
  ctx.config.cache_dir = resolve_cache_dir(cache_flag);
  ctx.options.base_genus_given = base_opt->count() > 0;
  ctx.options.degree_given = degree_opt->count() > 0;

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Outcome outcome = commands.at(command)(ctx);
    emit(command, outcome, ctx.config.format, out);
    return outcome.ok ? kExitOk : kExitFailed;
  } catch (const oracle::BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailed;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.emplace_back(argv[i]);
  return run(args, out, err);
}

} // namespace hurwitz::cli
