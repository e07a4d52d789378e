#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <vector>

namespace hurwitz::oracle {

namespace {

using Perm = std::array<std::uint8_t, kMaxDegree>;

/// S_d with elements indexed 0..d!-1, plus the lattice of orbit partitions
/// (set partitions of {0..d-1}) that tuples can generate.
class SymmetricGroup {
public:
  explicit SymmetricGroup(int d) : d_(d)
  {
    Perm p{};
    std::iota(p.begin(), p.begin() + d, std::uint8_t{0});
    do {
      index_.emplace(key(p), static_cast<int>(perms_.size()));
      perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + d));

    const int n = order();
    mult_.resize(static_cast<std::size_t>(n) * n);
    inverse_.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      Perm inv{};
      for (int i = 0; i < d; ++i)
        inv[perms_[a][i]] = static_cast<std::uint8_t>(i);
      inverse_[a] = index_.at(key(inv));
      for (int b = 0; b < n; ++b) {
        Perm c{};
        for (int i = 0; i < d; ++i)
          c[i] = perms_[a][perms_[b][i]];
        mult_[static_cast<std::size_t>(a) * n + b] = index_.at(key(c));
      }
    }

    classes_ = enumerate_partitions(d);
    for (int a = 0; a < n; ++a) {
      cycle_type_.push_back(class_index(cycle_type(perms_[a])));
      if (is_transposition(perms_[a]))
        transpositions_.push_back(a);
    }
    build_orbit_lattice();
  }

  int order() const { return static_cast<int>(perms_.size()); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * order() + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int cycle_class(int a) const { return cycle_type_[a]; }
  const std::vector<int>& transpositions() const { return transpositions_; }
  const std::vector<Partition>& classes() const { return classes_; }

  int orbit_states() const { return static_cast<int>(states_.size()); }
  int discrete_state() const { return 0; }
  bool is_transitive(int state) const { return state == transitive_state_; }
  int join(int state, int perm) const
  { return join_perm_[static_cast<std::size_t>(state) * order() + perm]; }
  int join_states(int a, int b) const
  { return join_state_[static_cast<std::size_t>(a) * orbit_states() + b]; }

private:
  int key(const Perm& p) const
  {
    int k = 0;
    for (int i = 0; i < d_; ++i)
      k = k * d_ + p[i];
    return k;
  }

  Partition cycle_type(const Perm& p) const
  {
    std::array<bool, kMaxDegree> seen{};
    std::vector<int> lengths;
    for (int i = 0; i < d_; ++i) {
      if (seen[i])
        continue;
      int len = 0;
      for (int j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
  }

  bool is_transposition(const Perm& p) const
  {
    int moved = 0;
    for (int i = 0; i < d_; ++i)
      moved += p[i] != i;
    return moved == 2;
  }

  int class_index(const Partition& mu) const
  {
    return static_cast<int>(std::find(classes_.begin(), classes_.end(), mu) - classes_.begin());
  }

  // Set partitions are stored as restricted growth strings: block[i] is the
  // block label of point i, labels assigned in order of first appearance.
  using Blocks = std::array<std::uint8_t, kMaxDegree>;

  Blocks canonical(Blocks b) const
  {
    std::array<int, kMaxDegree> relabel;
    relabel.fill(-1);
    int next = 0;
    for (int i = 0; i < d_; ++i) {
      if (relabel[b[i]] < 0)
        relabel[b[i]] = next++;
      b[i] = static_cast<std::uint8_t>(relabel[b[i]]);
    }
    return b;
  }

  Blocks merge(Blocks b, int x, int y) const
  {
    const auto from = b[y], to = b[x];
    if (from != to)
      for (int i = 0; i < d_; ++i)
        if (b[i] == from)
          b[i] = to;
    return canonical(b);
  }

  int state_id(const Blocks& b)
  {
    int k = 0;
    for (int i = 0; i < d_; ++i)
      k = k * d_ + b[i];
    auto [it, inserted] = state_index_.try_emplace(k, static_cast<int>(states_.size()));
    if (inserted)
      states_.push_back(b);
    return it->second;
  }

  void build_orbit_lattice()
  {
    Blocks discrete{};
    for (int i = 0; i < d_; ++i)
      discrete[i] = static_cast<std::uint8_t>(i);
    state_id(discrete);
    // Every set partition is reachable by joining transpositions, so closing
    // under join with group elements enumerates the whole lattice.
    for (std::size_t s = 0; s < states_.size(); ++s)
      for (int a = 0; a < order(); ++a) {
        Blocks b = states_[s];
        for (int i = 0; i < d_; ++i)
          b = merge(b, i, perms_[a][i]);
        state_id(b);
      }
    const int n = order(), m = orbit_states();
    join_perm_.assign(static_cast<std::size_t>(m) * n, 0);
    for (int s = 0; s < m; ++s)
      for (int a = 0; a < n; ++a) {
        Blocks b = states_[s];
        for (int i = 0; i < d_; ++i)
          b = merge(b, i, perms_[a][i]);
        join_perm_[static_cast<std::size_t>(s) * n + a] = state_id(b);
      }
    join_state_.assign(static_cast<std::size_t>(m) * m, 0);
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t) {
        Blocks b = states_[s];
        for (int i = 0; i < d_; ++i)
          for (int j = i + 1; j < d_; ++j)
            if (states_[t][i] == states_[t][j])
              b = merge(b, i, j);
        join_state_[static_cast<std::size_t>(s) * m + t] = state_id(b);
      }
    Blocks single{};
    transitive_state_ = state_id(single);
  }

  int d_;
  std::vector<Perm> perms_;
  std::unordered_map<int, int> index_;
  std::vector<int> mult_, inverse_, cycle_type_, transpositions_;
  std::vector<Partition> classes_;
  std::vector<Blocks> states_;
  std::unordered_map<int, int> state_index_;
  std::vector<int> join_perm_, join_state_;
  int transitive_state_ = 0;
};

/// Dense tally indexed by (group element, orbit state).
struct Tally {
  int order, states;
  std::vector<std::uint64_t> counts;
  Tally(int n, int s) : order(n), states(s), counts(static_cast<std::size_t>(n) * s, 0) {}
  std::uint64_t& at(int perm, int state) { return counts[static_cast<std::size_t>(state) * order + perm]; }
};

void enumerate_commutators(const SymmetricGroup& G, int pairs_left, int product, int state,
                           Tally& tally)
{
  if (pairs_left == 0) {
    ++tally.at(product, state);
    return;
  }
  const int n = G.order();
  for (int a = 0; a < n; ++a) {
    const int sa = G.join(state, a);
    for (int b = 0; b < n; ++b) {
      const int comm = G.mul(G.mul(a, b), G.mul(G.inverse(a), G.inverse(b)));
      enumerate_commutators(G, pairs_left - 1, G.mul(product, comm), G.join(sa, b), tally);
    }
  }
}

void enumerate_transpositions(const SymmetricGroup& G, int left, int product, int state,
                              Tally& tally)
{
  if (left == 0) {
    ++tally.at(product, state);
    return;
  }
  for (int t : G.transpositions())
    enumerate_transpositions(G, left - 1, G.mul(product, t), G.join(state, t), tally);
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp)
{
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i)
    out = saturating_mul(out, base);
  return out;
}

void check_degree(int d)
{
  if (d < 1 || d > kMaxDegree)
    throw std::invalid_argument("oracle degree must lie in 1.." + std::to_string(kMaxDegree));
}

} // namespace

std::uint64_t estimated_steps(int base_genus, int degree, int simple_branch_points)
{
  check_degree(degree);
  const std::uint64_t order = factorial(static_cast<unsigned>(degree)).get_ui();
  const std::uint64_t transpositions = static_cast<std::uint64_t>(degree) * (degree - 1) / 2;
  const std::uint64_t commutator_tuples = saturating_pow(order * order, base_genus);
  const std::uint64_t transposition_tuples = saturating_pow(transpositions, simple_branch_points);
  // Pairing cost is bounded by the product of the two tally sizes (52 set
  // partitions of 5 points at most).
  const std::uint64_t tally = order * 52;
  std::uint64_t total = commutator_tuples;
  for (std::uint64_t part : {transposition_tuples, saturating_mul(tally, tally)}) {
    total = (total > std::numeric_limits<std::uint64_t>::max() - part)
                ? std::numeric_limits<std::uint64_t>::max()
                : total + part;
  }
  return total;
}

Census census(int base_genus, int degree, int simple_branch_points, std::uint64_t budget)
{
  if (base_genus < 0 || simple_branch_points < 0)
    throw std::invalid_argument("base genus and branch count must be non-negative");
  const std::uint64_t steps = estimated_steps(base_genus, degree, simple_branch_points);
  if (steps > budget)
    throw BudgetExceeded("oracle enumeration for (h=" + std::to_string(base_genus) +
                         ", d=" + std::to_string(degree) + ", r=" +
                         std::to_string(simple_branch_points) + ") needs " +
                         std::to_string(steps) + " steps; budget is " + std::to_string(budget));

  const SymmetricGroup G(degree);
  Tally commutators(G.order(), G.orbit_states());
  Tally transpositions(G.order(), G.orbit_states());
  enumerate_commutators(G, base_genus, G.identity(), G.discrete_state(), commutators);
  enumerate_transpositions(G, simple_branch_points, G.identity(), G.discrete_state(),
                           transpositions);

  std::vector<Integer> all(G.classes().size()), transitive(G.classes().size());
  for (int sc = 0; sc < G.orbit_states(); ++sc)
    for (int c = 0; c < G.order(); ++c) {
      const std::uint64_t mc = commutators.at(c, sc);
      if (mc == 0)
        continue;
      for (int st = 0; st < G.orbit_states(); ++st)
        for (int t = 0; t < G.order(); ++t) {
          const std::uint64_t mt = transpositions.at(t, st);
          if (mt == 0)
            continue;
          // tau_1...tau_r sigma = C  =>  sigma = T^-1 C
          const int sigma = G.mul(G.inverse(t), c);
          const auto cls = static_cast<std::size_t>(G.cycle_class(sigma));
          Integer weight(static_cast<unsigned long>(mc));
          weight *= static_cast<unsigned long>(mt);
          all[cls] += weight;
          if (G.is_transitive(G.join_states(sc, st)))
            transitive[cls] += weight;
        }
    }

  Census out;
  out.base_genus = base_genus;
  out.degree = degree;
  out.simple_branch_points = simple_branch_points;
  out.steps = steps;
  for (std::size_t i = 0; i < G.classes().size(); ++i) {
    out.all.emplace(G.classes()[i], all[i]);
    out.transitive.emplace(G.classes()[i], transitive[i]);
  }
  return out;
}

Rational count_covers(const MonodromyProblem& problem, std::uint64_t budget)
{
  const int d = problem.mu.size();
  const Census c = census(problem.base_genus, d, problem.simple_branch_points, budget);
  const auto& counts = problem.connected ? c.transitive : c.all;
  Rational out(counts.at(problem.mu), factorial(static_cast<unsigned>(d)));
  out.canonicalize();
  return out;
}

Rational count_class_sums(int base_genus, int degree, std::uint64_t budget)
{
  const Census c = census(base_genus, degree, 0, budget);
  Rational out(c.all.at(Partition::ones(degree)), factorial(static_cast<unsigned>(degree)));
  out.canonicalize();
  return out;
}

} // namespace hurwitz::oracle
