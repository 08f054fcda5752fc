#pragma once

#include "symideal/partition.hpp"
#include "symideal/permutation.hpp"

#include <string>
#include <vector>

namespace symideal {

/// Ordered family of disjoint nonempty subsets X_1, ..., X_m covering [1,n];
/// each block is kept sorted.
class BlockFamily {
 public:
  BlockFamily() = default;
  BlockFamily(int n, std::vector<std::vector<int>> blocks);

  /// Initial intervals of sizes lambda_1, lambda_2, ... (the subgroup Sym(lambda)).
  static BlockFamily initial_intervals(const Partition& lambda);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  /// Block sizes sorted into a partition.
  Partition profile() const;
  /// Order of the block subgroup: product of block-size factorials.
  std::size_t subgroup_order() const;

  /// "{1,5}{2,3,4,6}"
  std::string to_string() const;

  friend bool operator==(const BlockFamily&, const BlockFamily&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// All unordered set partitions of [1,n] whose block sizes form `mu`, each
/// listed once with blocks ordered by size (descending) then by least element.
std::vector<BlockFamily> block_families_of_type(const Partition& mu);

}  // namespace symideal
