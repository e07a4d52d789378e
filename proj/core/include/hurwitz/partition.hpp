#pragma once

#include "hurwitz/rational.hpp"

#include <compare>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

/// Weakly decreasing sequence of positive integers. Indexes irreducible
/// representations of S_d, conjugacy classes, and ramification profiles.
///
/// Ordering is canonical: smaller size first, then reverse-lexicographic
/// within a size, so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
class Partition {
public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts an arbitrary vector of positive integers into a partition.
  static Partition from_unsorted(std::vector<int> parts);

  /// (1,1,...,1) with n parts.
  static Partition ones(int n);

  std::span<const int> parts() const { return parts_; }
  int part(std::size_t i) const { return parts_[i]; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Number of parts equal to i.
  int multiplicity(int i) const;

  /// Partition with one copy of `value` removed; throws if absent.
  Partition without(int value) const;
  /// Partition with `value` inserted.
  Partition with(int value) const;

  Partition conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of d in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int d);

/// z_mu = prod_i m_i! i^{m_i}; |C_mu| = d!/z_mu.
Integer z_of(const Partition& mu);

/// Number of standard Young tableaux of shape lambda (hook-length formula).
Integer dim_of(const Partition& lambda);

/// (-1)^{|mu| - l(mu)}.
int sign_of(const Partition& mu);

struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Irreducible character chi_lambda evaluated on the class of cycle type mu,
/// by Murnaghan-Nakayama border-strip removal. Memoized; thread-safe.
/// Throws SizeMismatch when |lambda| != |mu|.
std::int64_t character(const Partition& lambda, const Partition& mu);

/// Full character table of S_d. Rows are irreducibles lambda, columns are
/// classes mu, both in canonical order.
class CharacterTable {
public:
  static CharacterTable build(int degree);

  int degree() const { return degree_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::size_t index_of(const Partition& p) const;

  std::int64_t value(std::size_t lambda, std::size_t mu) const
  { return values_[lambda * partitions_.size() + mu]; }
  std::int64_t value(const Partition& lambda, const Partition& mu) const
  { return value(index_of(lambda), index_of(mu)); }

  /// chi_lambda(1^d).
  std::int64_t dim(std::size_t lambda) const;

  /// Seeds the process-wide memo used by character() with this table.
  void publish() const;

  std::string to_json() const;
  /// Throws std::runtime_error on schema or consistency violations.
  static CharacterTable from_json(const std::string& text);

  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;

private:
  int degree_ = 0;
  std::vector<Partition> partitions_;
  std::vector<std::int64_t> values_;
};

/// Path of the cached table for degree d inside `dir`: chartab_<d>.json.
std::filesystem::path character_cache_path(const std::filesystem::path& dir, int degree);

/// Loads chartab_<d>.json from `dir` when present and valid, otherwise builds
/// the table and writes it by atomic rename. With no directory the table is
/// just built. The returned table is also published to the memo.
CharacterTable load_or_build_character_table(int degree,
                                             const std::optional<std::filesystem::path>& dir);

} // namespace hurwitz
