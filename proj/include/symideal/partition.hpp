#pragma once

#include "symideal/scalar.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace symideal {

/// Integer partition: positive, weakly decreasing parts, no trailing zeros.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Parses "4,2" (also accepts "(4,2)" and "4 2").
  static Partition parse(std::string_view text);
  /// The single-row partition (n).
  static Partition row(int n) { return Partition({n}); }
  /// The single-column partition (1^n).
  static Partition column(int n) { return Partition(std::vector<int>(n, 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Part i (0-based), zero past the end.
  int operator[](int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  /// "4,2"
  std::string to_string() const;
  /// "(4,2)"
  std::string pretty() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic order on the parts; a total order refining dominance.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.pretty();
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n, in decreasing lexicographic order: (n), (n-1,1), ...
const std::vector<Partition>& partitions_of(int n);

Partition conjugate(const Partition& lambda);

/// lambda dominates mu: every prefix sum of lambda is >= that of mu.
bool dominates(const Partition& lambda, const Partition& mu);

Partition dominance_meet(const Partition& lambda, const Partition& mu);
Partition dominance_join(const Partition& lambda, const Partition& mu);

/// Number of standard Young tableaux of shape lambda (hook length formula).
BigInt standard_tableaux_count(const Partition& lambda);

/// Every partition obtained by splitting one part into two positive parts.
std::vector<Partition> simple_refinements(const Partition& mu);
/// lambda is obtained from mu by a chain of simple refinements (or equals it).
bool is_refinement(const Partition& lambda, const Partition& mu);

/// A finite set of partitions of the same n, kept sorted in decreasing
/// lexicographic order.
class PartitionSet {
 public:
  explicit PartitionSet(int n = 0) : n_(n) {}
  PartitionSet(int n, std::vector<Partition> members);

  /// "6;5,1;4,2". The empty set needs an explicit n.
  static PartitionSet parse(std::string_view text, std::optional<int> n = {});
  static PartitionSet all(int n);
  /// Members of Par(n) selected by bit i of mask (i indexes partitions_of(n)).
  static PartitionSet from_mask(int n, std::uint64_t mask);

  int n() const { return n_; }
  const std::vector<Partition>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Partition& p) const;
  void insert(const Partition& p);
  std::uint64_t mask() const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::string to_string() const;  // "6;5,1;4,2"
  std::string pretty() const;      // "{(6),(5,1),(4,2)}"

  friend bool operator==(const PartitionSet&, const PartitionSet&) = default;

 private:
  int n_;
  std::vector<Partition> members_;
};

Partition lub(const PartitionSet& gamma);

PartitionSet conjugate(const PartitionSet& gamma);
/// Par(n) minus gamma.
PartitionSet complement(const PartitionSet& gamma);
/// All mu that are coarsenings of some member of gamma.
PartitionSet coarsening_closure(const PartitionSet& gamma);

/// Up-closed under dominance.
bool is_cosaturated(const PartitionSet& gamma);
/// Down-closed under dominance.
bool is_saturated(const PartitionSet& gamma);
/// The unique minimal (resp. maximal) element, if there is exactly one.
std::optional<Partition> unique_minimal(const PartitionSet& gamma);
std::optional<Partition> unique_maximal(const PartitionSet& gamma);

/// Every co-saturated subset of Par(n), the empty set included.
std::vector<PartitionSet> all_cosaturated_subsets(int n);

/// Sum of f_lambda^2 over the set.
BigInt tableaux_square_sum(const PartitionSet& gamma);

}  // namespace symideal
