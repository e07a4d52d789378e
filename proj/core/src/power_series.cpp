#include "hurwitz/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hurwitz {

PowerSeries::PowerSeries(int bound)
{
  if (bound < 0)
    throw std::invalid_argument("series bound must be non-negative");
  c_.resize(static_cast<std::size_t>(bound + 1));
}

PowerSeries::PowerSeries(int bound, std::vector<Rational> coefficients) : PowerSeries(bound)
{
  for (std::size_t k = 0; k < coefficients.size() && k < c_.size(); ++k)
    c_[k] = std::move(coefficients[k]);
}

PowerSeries PowerSeries::constant(int bound, const Rational& value)
{
  PowerSeries out(bound);
  out[0] = value;
  return out;
}

PowerSeries PowerSeries::monomial(int bound, int k, const Rational& value)
{
  PowerSeries out(bound);
  if (k >= 0 && k <= bound)
    out[k] = value;
  return out;
}

Rational PowerSeries::at(int k) const
{
  if (k < 0 || k > bound())
    return 0;
  return c_[static_cast<std::size_t>(k)];
}

bool PowerSeries::is_zero() const
{
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

int PowerSeries::degree() const
{
  for (int k = bound(); k >= 0; --k)
    if ((*this)[k] != 0)
      return k;
  return -1;
}

PowerSeries PowerSeries::truncated(int bound) const
{
  PowerSeries out(bound);
  for (int k = 0; k <= std::min(bound, this->bound()); ++k)
    out[k] = (*this)[k];
  return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o)
{
  if (o.bound() < bound())
    c_.resize(o.c_.size());
  for (int k = 0; k <= bound(); ++k)
    (*this)[k] += o[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o)
{
  if (o.bound() < bound())
    c_.resize(o.c_.size());
  for (int k = 0; k <= bound(); ++k)
    (*this)[k] -= o[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& s)
{
  for (auto& q : c_)
    q *= s;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
  const int bound = std::min(a.bound(), b.bound());
  PowerSeries out(bound);
  for (int i = 0; i <= bound; ++i) {
    if (a[i] == 0)
      continue;
    for (int j = 0; i + j <= bound; ++j)
      if (b[j] != 0)
        out[i + j] += a[i] * b[j];
  }
  return out;
}

bool operator==(const PowerSeries& a, const PowerSeries& b)
{
  return a.c_ == b.c_;
}

PowerSeries PowerSeries::derivative() const
{
  PowerSeries out(std::max(bound() - 1, 0));
  for (int k = 1; k <= bound(); ++k)
    out[k - 1] = (*this)[k] * k;
  return out;
}

PowerSeries PowerSeries::euler() const
{
  PowerSeries out(*this);
  for (int k = 0; k <= bound(); ++k)
    out[k] *= k;
  return out;
}

PowerSeries exp(const PowerSeries& f)
{
  if (f[0] != 0)
    throw std::invalid_argument("exp: series must vanish at 0");
  // g = exp(f)  <=>  k g_k = sum_{j=1}^k j f_j g_{k-j}
  PowerSeries g(f.bound());
  g[0] = 1;
  for (int k = 1; k <= f.bound(); ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j)
      if (f[j] != 0)
        acc += f[j] * g[k - j] * j;
    g[k] = acc / k;
  }
  return g;
}

PowerSeries log(const PowerSeries& f)
{
  if (f[0] != 1)
    throw std::invalid_argument("log: series must equal 1 at 0");
  // l' = f'/f  <=>  k l_k = k f_k - sum_{j=1}^{k-1} j l_j f_{k-j}
  PowerSeries l(f.bound());
  for (int k = 1; k <= f.bound(); ++k) {
    Rational acc = f[k] * k;
    for (int j = 1; j < k; ++j)
      if (l[j] != 0)
        acc -= l[j] * f[k - j] * j;
    l[k] = acc / k;
  }
  return l;
}

PowerSeries inverse(const PowerSeries& f)
{
  if (f[0] == 0)
    throw std::domain_error("inverse: series vanishes at 0");
  PowerSeries g(f.bound());
  g[0] = 1 / f[0];
  for (int k = 1; k <= f.bound(); ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j)
      if (f[j] != 0)
        acc += f[j] * g[k - j];
    g[k] = -acc / f[0];
  }
  return g;
}

std::string to_string(const PowerSeries& f, const std::string& variable)
{
  std::string out;
  for (int k = 0; k <= f.bound(); ++k) {
    if (f[k] == 0)
      continue;
    if (!out.empty())
      out += " + ";
    out += f[k].get_str();
    if (k >= 1)
      out += "*" + variable;
    if (k >= 2)
      out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

} // namespace hurwitz
