#pragma once

#include "symideal/block_family.hpp"
#include "symideal/partition.hpp"
#include "symideal/permutation.hpp"

#include <optional>
#include <vector>

namespace symideal {

using Tableau = std::vector<std::vector<int>>;

struct StandardTableauPair {
  Tableau insertion;  // P
  Tableau recording;  // Q: the cell created at step i holds i
  Partition shape;
};

StandardTableauPair rsk(const Word& s);
Partition shape(const Word& s);

/// RSK shapes of all words of S(n), indexed like SymmetricGroup::of(n).
const std::vector<Partition>& shape_table(int n);

/// True iff the tableau is standard with entries exactly 1..(cells).
bool is_standard(const Tableau& t);

/// Positions [1,n] split into blocks of sizes mu with s increasing on each.
bool upward_compatible(const Word& s, const Partition& mu);
/// One witnessing block family, if any.
std::optional<BlockFamily> compatible_blocks(const Word& s, const Partition& mu);
/// Every witnessing block family (unordered set partitions, each once).
std::vector<BlockFamily> all_compatible_blocks(const Word& s, const Partition& mu);

/// The set A(s) of partitions upwardly compatible with s.
PartitionSet ascent_set(const Word& s);

/// lub(A(s)), computed without RSK.
Partition greene_shape_oracle(const Word& s);

int longest_increasing(const Word& s);
int longest_decreasing(const Word& s);
bool no_decreasing_exceeding(const Word& s, int k);
bool has_increasing_of_length(const Word& s, int k);

}  // namespace symideal
