#pragma once

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace hurwitz::oracle {

/// Brute-force monodromy counting in S_d. Independent of character theory:
/// it only multiplies permutations.
///
/// Convention: permutations compose right-to-left, (a*b)(i) = a(b(i)), and a
/// tuple (tau_1, ..., tau_r, sigma, alpha_1, beta_1, ..., alpha_h, beta_h)
/// is counted when
///   tau_1 ... tau_r sigma = [alpha_1, beta_1] ... [alpha_h, beta_h],
/// with [a, b] = a b a^-1 b^-1, every tau_i a transposition and sigma of
/// cycle type mu. Counts are conjugation invariant, so the ordering choice
/// does not change any number.

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;
inline constexpr int kMaxDegree = 5;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MonodromyProblem {
  int base_genus = 0;
  Partition mu;
  int simple_branch_points = 0;
  bool connected = false;
};

/// Tuple counts for every cycle type of sigma at once.
struct Census {
  int base_genus = 0;
  int degree = 0;
  int simple_branch_points = 0;
  std::uint64_t steps = 0;
  /// Raw tuple counts (not divided by d!).
  std::map<Partition, Integer> all;
  std::map<Partition, Integer> transitive;
};

/// Elementary steps the enumeration for (h, d, r) will take; the budget is
/// checked against this before any work happens.
std::uint64_t estimated_steps(int base_genus, int degree, int simple_branch_points);

/// Enumerates all commutator tuples; transposition tuples are first tallied
/// by (product, orbit partition) and then paired with each commutator tuple.
/// Throws BudgetExceeded or std::invalid_argument (d outside 1..5).
Census census(int base_genus, int degree, int simple_branch_points,
              std::uint64_t budget = kDefaultBudget);

/// (1/d!) * number of tuples as above, restricted to transitive tuples when
/// `connected` is set.
Rational count_covers(const MonodromyProblem& problem, std::uint64_t budget = kDefaultBudget);

/// (1/d!) * #{(alpha_1, beta_1, ..., alpha_h, beta_h) : prod [alpha_i, beta_i] = 1}.
Rational count_class_sums(int base_genus, int degree, std::uint64_t budget = kDefaultBudget);

} // namespace hurwitz::oracle
