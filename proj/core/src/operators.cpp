#include "hurwitz/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace hurwitz {

XSeries::XSeries(int bound)
{
  if (bound < 0)
    throw std::invalid_argument("x bound must be non-negative");
  c_.resize(static_cast<std::size_t>(bound + 1));
}

bool XSeries::is_zero() const
{
  return std::all_of(c_.begin(), c_.end(), [](const ExpLaurent& f) { return f.is_zero(); });
}

XSeries XSeries::basis(int bound, int j, const Rational& a, int m)
{
  XSeries out(bound);
  if (m >= 0 && m <= bound)
    out[m] = ExpLaurent::basis(j, a);
  return out;
}

XSeries& XSeries::operator+=(const XSeries& o)
{
  if (o.bound() != bound())
    throw std::invalid_argument("x bound mismatch");
  for (std::size_t m = 0; m < c_.size(); ++m)
    c_[m] += o.c_[m];
  return *this;
}

XSeries& XSeries::operator-=(const XSeries& o)
{
  if (o.bound() != bound())
    throw std::invalid_argument("x bound mismatch");
  for (std::size_t m = 0; m < c_.size(); ++m)
    c_[m] -= o.c_[m];
  return *this;
}

XSeries& XSeries::operator*=(const Rational& s)
{
  for (auto& f : c_)
    f *= s;
  return *this;
}

struct OperatorExpr::Node {
  Kind kind;
  int power = 0;
  Rational scalar = 1;
  std::vector<OperatorExpr> children;
};

OperatorExpr::OperatorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

OperatorExpr OperatorExpr::identity()
{
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Identity, 0, 1, {}}));
}
OperatorExpr OperatorExpr::mul_x()
{
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::MulX, 0, 1, {}}));
}
OperatorExpr OperatorExpr::mul_hbar_pow(int k)
{
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::MulHbarPow, k, 1, {}}));
}
OperatorExpr OperatorExpr::euler_x()
{
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::EulerX, 0, 1, {}}));
}
OperatorExpr OperatorExpr::dxx_pow(int k)
{
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::DxXPow, k, 1, {}}));
}
OperatorExpr OperatorExpr::shift()
{
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Shift, 0, 1, {}}));
}
OperatorExpr OperatorExpr::d_hbar()
{
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::DHbar, 0, 1, {}}));
}
OperatorExpr OperatorExpr::scale(const Rational& c, const OperatorExpr& op)
{
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Scale, 0, c, {op}}));
}
OperatorExpr OperatorExpr::sum(std::vector<OperatorExpr> terms)
{
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Sum, 0, 1, std::move(terms)}));
}
OperatorExpr OperatorExpr::compose(std::vector<OperatorExpr> factors)
{
  return OperatorExpr(
      std::make_shared<const Node>(Node{Kind::Compose, 0, 1, std::move(factors)}));
}

OperatorExpr::Kind OperatorExpr::kind() const { return node_->kind; }

OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b)
{
  return OperatorExpr::sum({a, b});
}
OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b)
{
  return OperatorExpr::sum({a, OperatorExpr::scale(-1, b)});
}
OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b)
{
  return OperatorExpr::compose({a, b});
}
OperatorExpr operator*(const Rational& c, const OperatorExpr& a)
{
  return OperatorExpr::scale(c, a);
}

XSeries OperatorExpr::apply(const XSeries& s) const
{
  const int M = s.bound();
  XSeries out(M);
  switch (node_->kind) {
  case Kind::Identity:
    return s;
  case Kind::MulX:
    for (int m = 0; m < M; ++m)
      out[m + 1] = s[m];
    return out;
  case Kind::MulHbarPow:
    for (int m = 0; m <= M; ++m)
      out[m] = s[m].times_hbar(node_->power);
    return out;
  case Kind::EulerX:
    for (int m = 0; m <= M; ++m)
      out[m] = s[m] * Rational(m);
    return out;
  case Kind::DxXPow:
    for (int m = 0; m <= M; ++m)
      out[m] = s[m] * pow(Rational(m + 1), node_->power);
    return out;
  case Kind::Shift:
    for (int m = 0; m <= M; ++m)
      out[m] = s[m].times_exp(m);
    return out;
  case Kind::DHbar:
    for (int m = 0; m <= M; ++m)
      out[m] = s[m].derivative();
    return out;
  case Kind::Scale:
    return node_->children.front().apply(s) * node_->scalar;
  case Kind::Sum:
    for (const auto& term : node_->children)
      out += term.apply(s);
    return out;
  case Kind::Compose: {
    XSeries acc = s;
    for (auto it = node_->children.rbegin(); it != node_->children.rend(); ++it)
      acc = it->apply(acc);
    return acc;
  }
  }
  throw std::logic_error("unknown operator kind");
}

std::string OperatorExpr::to_string() const
{
  const auto join = [&](const char* sep) {
    std::string out;
    for (const auto& c : node_->children) {
      if (!out.empty())
        out += sep;
      out += c.to_string();
    }
    return out;
  };
  switch (node_->kind) {
  case Kind::Identity: return "1";
  case Kind::MulX: return "x";
  case Kind::MulHbarPow: return "hbar^" + std::to_string(node_->power);
  case Kind::EulerX: return "(x d/dx)";
  case Kind::DxXPow: return "(d/dx x)^" + std::to_string(node_->power);
  case Kind::Shift: return "exp(hbar x d/dx)";
  case Kind::DHbar: return "d/dhbar";
  case Kind::Scale: return node_->scalar.get_str() + "*" + node_->children.front().to_string();
  case Kind::Sum: return "(" + join(" + ") + ")";
  case Kind::Compose: return join(" ");
  }
  return "?";
}

OperatorExpr build_P_factor(const BaseCurve& base)
{
  using Op = OperatorExpr;
  const int k = base.twist();
  return Op::identity() -
         Op::compose({Op::mul_hbar_pow(k), Op::mul_x(), Op::shift(), Op::dxx_pow(k)});
}

OperatorExpr build_P(const BaseCurve& base)
{
  using Op = OperatorExpr;
  return Op::compose({Op::mul_hbar_pow(1), Op::euler_x(), build_P_factor(base)});
}

OperatorExpr build_Q(const BaseCurve& base)
{
  using Op = OperatorExpr;
  return Op::sum({
      Op::d_hbar(),
      Op::scale(frac(-1, 2), Op::euler_x() * Op::euler_x()),
      Op::scale(frac(1, 2), Op::euler_x()),
      Op::scale(-base.twist(), Op::mul_hbar_pow(-1) * Op::euler_x()),
  });
}

XSeries closed_form_Z(const BaseCurve& base, int x_bound)
{
  XSeries z(x_bound);
  const int k = base.twist();
  for (int m = 0; m <= x_bound; ++m) {
    const Rational c = pow(Rational(factorial(static_cast<unsigned>(m))), k);
    z[m] = ExpLaurent::basis(m * k, frac(static_cast<long>(m) * (m - 1), 2), c);
  }
  return z;
}

namespace {

OperatorCheck check_against(std::string name, const XSeries& image, const XSeries& expected,
                            bool exclude_top)
{
  OperatorCheck out;
  out.name = std::move(name);
  out.x_bound = image.bound();
  out.checked_through = exclude_top ? image.bound() - 1 : image.bound();
  if (exclude_top)
    out.excluded_degree = image.bound();
  for (int m = 0; m <= image.bound(); ++m) {
    out.residuals.push_back(image[m] - expected[m]);
    if (m <= out.checked_through && !out.residuals.back().is_zero() && !out.first_failure)
      out.first_failure = m;
  }
  out.holds = !out.first_failure;
  return out;
}

void require_bound(int x_bound)
{
  if (x_bound < 1)
    throw std::invalid_argument("x bound must be at least 1");
}

} // namespace

OperatorCheck verify_PZ(const BaseCurve& base, int x_bound)
{
  require_bound(x_bound);
  const XSeries z = closed_form_Z(base, x_bound);
  return check_against("P Z = 0", build_P(base).apply(z), XSeries(x_bound), true);
}

OperatorCheck verify_QZ(const BaseCurve& base, int x_bound)
{
  require_bound(x_bound);
  const XSeries z = closed_form_Z(base, x_bound);
  return check_against("Q Z = 0", build_Q(base).apply(z), XSeries(x_bound), false);
}

OperatorCheck verify_P1_identity(const BaseCurve& base, int x_bound)
{
  require_bound(x_bound);
  const XSeries z = closed_form_Z(base, x_bound);
  XSeries one(x_bound);
  one[0] = ExpLaurent(1);
  return check_against("P-factor Z = 1", build_P_factor(base).apply(z), one, true);
}

CommutatorReport verify_commutator(const BaseCurve& base, const std::vector<BasisElement>& sample)
{
  if (sample.empty())
    throw std::invalid_argument("commutator sample must be non-empty");
  const OperatorExpr P = build_P(base), Q = build_Q(base);
  const OperatorExpr test =
      P * Q - Q * P + OperatorExpr::mul_hbar_pow(-1) * P;
  CommutatorReport report;
  for (const auto& e : sample) {
    // P raises x-degree by at most one; two spare degrees keep every
    // contribution inside the truncation.
    const XSeries s = XSeries::basis(e.x_degree + 2, e.hbar_power, e.exp_rate, e.x_degree);
    CommutatorCheck check{e, test.apply(s), false};
    check.holds = check.residual.is_zero();
    if (!check.holds && !report.first_failure)
      report.first_failure = report.checks.size();
    report.checks.push_back(std::move(check));
  }
  report.holds = !report.first_failure;
  return report;
}

std::vector<BasisElement> basis_grid(const std::vector<int>& hbar_powers,
                                     const std::vector<Rational>& exp_rates,
                                     const std::vector<int>& x_degrees)
{
  std::vector<BasisElement> out;
  for (int j : hbar_powers)
    for (const auto& a : exp_rates)
      for (int m : x_degrees)
        out.push_back({j, a, m});
  return out;
}

std::vector<ExpLaurent> solve_mode_equation(const BaseCurve& base, int m, int window,
                                            std::vector<Rational> exp_rates)
{
  const Rational A = frac(static_cast<long>(m) * (m - 1), 2);
  const int B = m * base.twist();
  if (exp_rates.empty())
    exp_rates = {Rational(0), A, Rational(A + 1)};
  std::sort(exp_rates.begin(), exp_rates.end());
  exp_rates.erase(std::unique(exp_rates.begin(), exp_rates.end()), exp_rates.end());

  const int reach = window + std::abs(B);
  struct Unknown {
    Rational a;
    int j;
  };
  std::vector<Unknown> unknowns;
  for (const auto& a : exp_rates)
    for (int j = -reach; j <= reach; ++j)
      unknowns.push_back({a, j});

  // Image of hbar^j e^{a hbar}: (j - B) hbar^{j-1} + (a - A) hbar^j, times e^{a hbar}.
  std::vector<std::pair<Rational, int>> rows;
  const auto row_of = [&](const Rational& a, int j) {
    auto it = std::find(rows.begin(), rows.end(), std::make_pair(a, j));
    if (it != rows.end())
      return static_cast<std::size_t>(it - rows.begin());
    rows.emplace_back(a, j);
    return rows.size() - 1;
  };
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
  for (const auto& u : unknowns) {
    std::vector<std::pair<std::size_t, Rational>> col;
    col.emplace_back(row_of(u.a, u.j - 1), Rational(u.j - B));
    col.emplace_back(row_of(u.a, u.j), Rational(u.a - A));
    columns.push_back(std::move(col));
  }
  std::vector<std::vector<Rational>> mat(rows.size(), std::vector<Rational>(unknowns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c])
      mat[r][c] += v;

  // Reduced row echelon form; free columns give the null space.
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < unknowns.size() && row < mat.size(); ++c) {
    std::size_t p = row;
    while (p < mat.size() && mat[p][c] == 0)
      ++p;
    if (p == mat.size())
      continue;
    std::swap(mat[p], mat[row]);
    const Rational lead = mat[row][c];
    for (auto& v : mat[row])
      v /= lead;
    for (std::size_t r = 0; r < mat.size(); ++r) {
      if (r == row || mat[r][c] == 0)
        continue;
      const Rational f = mat[r][c];
      for (std::size_t k = c; k < unknowns.size(); ++k)
        mat[r][k] -= f * mat[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<ExpLaurent> out;
  for (std::size_t free = 0; free < unknowns.size(); ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end())
      continue;
    ExpLaurent v = ExpLaurent::basis(unknowns[free].j, unknowns[free].a);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (mat[r][free] != 0)
        v -= ExpLaurent::basis(unknowns[pivots[r]].j, unknowns[pivots[r]].a, mat[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace hurwitz
