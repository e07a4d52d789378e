#include "hurwitz/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::ones(int n)
{
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1));
}

int Partition::multiplicity(int i) const
{
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::without(int value) const
{
  auto p = parts_;
  auto it = std::find(p.begin(), p.end(), value);
  if (it == p.end())
    throw std::invalid_argument("part not present in partition");
  p.erase(it);
  return Partition(std::move(p));
}

Partition Partition::with(int value) const
{
  auto p = parts_;
  p.insert(std::upper_bound(p.begin(), p.end(), value, std::greater<>()), value);
  return Partition(std::move(p));
}

Partition Partition::conjugate() const
{
  std::vector<int> out;
  if (!parts_.empty()) {
    out.resize(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j)
        ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i)
    os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b)
{
  if (auto c = a.size_ <=> b.size_; c != 0)
    return c;
  // Larger lexicographic sequence sorts first within a size.
  return b.parts_ <=> a.parts_;
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out)
{
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Partition> enumerate_partitions(int d)
{
  if (d < 0)
    throw std::invalid_argument("enumerate_partitions: negative degree");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(d, d, prefix, out);
  return out;
}

Integer z_of(const Partition& mu)
{
  Integer z = 1;
  auto parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i])
      ++j;
    const auto m = static_cast<unsigned>(j - i);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
    z *= factorial(m) * power;
    i = j;
  }
  return z;
}

Integer dim_of(const Partition& lambda)
{
  const Partition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(static_cast<std::size_t>(i)); ++j) {
      const int arm = lambda.part(static_cast<std::size_t>(i)) - j - 1;
      const int leg = conj.part(static_cast<std::size_t>(j)) - i - 1;
      hooks *= arm + leg + 1;
    }
  return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

int sign_of(const Partition& mu)
{
  return ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1;
}

namespace {

struct CharacterMemo {
  std::shared_mutex mutex;
  std::map<std::pair<Partition, Partition>, std::int64_t> values;
};

CharacterMemo& memo()
{
  static CharacterMemo m;
  return m;
}

std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& mu)
{
  if (mu.empty())
    return 1;
  {
    std::shared_lock lock(memo().mutex);
    auto it = memo().values.find({lambda, mu});
    if (it != memo().values.end())
      return it->second;
  }

  const int strip = mu.part(0);
  std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
  const Partition mu_rest(std::move(rest));

  // Beta numbers lambda_i + (l - 1 - i); removing a border strip of length k
  // moves one bead from b to b - k on the abacus.
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    beta[static_cast<std::size_t>(i)] = lambda.part(static_cast<std::size_t>(i)) + len - 1 - i;

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int nb = b - strip;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end())
      continue;
    int crossed = 0;
    for (int c : beta)
      if (c > nb && c < b)
        ++crossed;
    auto moved = beta;
    moved[static_cast<std::size_t>(i)] = nb;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int k = 0; k < len; ++k) {
      const int part = moved[static_cast<std::size_t>(k)] - (len - 1 - k);
      if (part > 0)
        parts.push_back(part);
    }
    const std::int64_t sub = murnaghan_nakayama(Partition(std::move(parts)), mu_rest);
    total += (crossed % 2 == 0) ? sub : -sub;
  }

  std::unique_lock lock(memo().mutex);
  memo().values.emplace(std::make_pair(lambda, mu), total);
  return total;
}

} // namespace

std::int64_t character(const Partition& lambda, const Partition& mu)
{
  if (lambda.size() != mu.size())
    throw SizeMismatch("character: |lambda| = " + std::to_string(lambda.size()) +
                       " but |mu| = " + std::to_string(mu.size()));
  return murnaghan_nakayama(lambda, mu);
}

CharacterTable CharacterTable::build(int degree)
{
  if (degree < 0)
    throw std::invalid_argument("CharacterTable: negative degree");
  CharacterTable t;
  t.degree_ = degree;
  t.partitions_ = enumerate_partitions(degree);
  const std::size_t n = t.partitions_.size();
  t.values_.resize(n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      t.values_[l * n + m] = character(t.partitions_[l], t.partitions_[m]);
  return t;
}

std::size_t CharacterTable::index_of(const Partition& p) const
{
  auto it = std::lower_bound(partitions_.begin(), partitions_.end(), p);
  if (it == partitions_.end() || *it != p)
    throw std::out_of_range("partition " + p.to_string() + " not in table of degree " +
                            std::to_string(degree_));
  return static_cast<std::size_t>(it - partitions_.begin());
}

std::int64_t CharacterTable::dim(std::size_t lambda) const
{
  // (1^d) is last in canonical order.
  return value(lambda, partitions_.size() - 1);
}

void CharacterTable::publish() const
{
  std::unique_lock lock(memo().mutex);
  const std::size_t n = partitions_.size();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      memo().values.emplace(std::make_pair(partitions_[l], partitions_[m]), values_[l * n + m]);
}

} // namespace hurwitz
