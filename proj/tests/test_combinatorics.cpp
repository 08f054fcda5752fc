#include "doctest.h"

#include "symideal/partition.hpp"
#include "symideal/permutation.hpp"
#include "symideal/rsk.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace symideal;

namespace {

// f_lambda by removing the cell holding the largest entry, over every corner.
BigInt syt_by_corners(const std::vector<int>& rows) {
  static std::map<std::vector<int>, BigInt> memo;
  if (rows.empty()) return 1;
  if (auto it = memo.find(rows); it != memo.end()) return it->second;
  BigInt total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool corner = i + 1 == rows.size() || rows[i + 1] < rows[i];
    if (!corner) continue;
    auto smaller = rows;
    if (--smaller[i] == 0) smaller.pop_back();
    total += syt_by_corners(smaller);
  }
  memo[rows] = total;
  return total;
}

// All upper bounds of both, then the one every other bound dominates.
Partition join_by_search(const Partition& a, const Partition& b) {
  std::vector<Partition> ub;
  for (const auto& p : partitions_of(a.size()))
    if (dominates(p, a) && dominates(p, b)) ub.push_back(p);
  for (const auto& c : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](const Partition& o) { return dominates(o, c); }))
      return c;
  FAIL("no least upper bound");
  return {};
}

Partition meet_by_search(const Partition& a, const Partition& b) {
  std::vector<Partition> lb;
  for (const auto& p : partitions_of(a.size()))
    if (dominates(a, p) && dominates(b, p)) lb.push_back(p);
  for (const auto& c : lb)
    if (std::all_of(lb.begin(), lb.end(), [&](const Partition& o) { return dominates(c, o); }))
      return c;
  FAIL("no greatest lower bound");
  return {};
}

// Longest increasing subsequence by trying every subset of positions.
int lis_by_subsets(const Word& s) {
  const int n = s.size();
  int best = 0;
  for (unsigned m = 0; m < (1u << n); ++m) {
    int last = 0;
    bool inc = true;
    for (int i = 0; i < n && inc; ++i)
      if (m >> i & 1u) {
        inc = s(i + 1) > last;
        last = s(i + 1);
      }
    if (inc) best = std::max(best, std::popcount(m));
  }
  return best;
}

int lds_of(const std::vector<int>& v) {
  std::vector<int> d(v.size(), 1);
  int best = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (v[j] > v[i]) d[i] = std::max(d[i], d[j] + 1);
    best = std::max(best, d[i]);
  }
  return best;
}

// Greene's k-increasing numbers: the largest subset that is a union of k
// increasing subsequences is the largest subset with no decreasing
// subsequence longer than k. Differences give the shape.
Partition shape_by_greene_numbers(const Word& s) {
  const int n = s.size();
  std::vector<int> best(static_cast<std::size_t>(n + 1), 0);
  for (unsigned m = 0; m < (1u << n); ++m) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) sub.push_back(s(i + 1));
    const int d = lds_of(sub);
    for (int k = d; k <= n; ++k) best[static_cast<std::size_t>(k)] =
        std::max(best[static_cast<std::size_t>(k)], static_cast<int>(sub.size()));
  }
  std::vector<int> parts;
  for (int k = 1; k <= n; ++k) {
    const int p = best[static_cast<std::size_t>(k)] - best[static_cast<std::size_t>(k - 1)];
    if (p > 0) parts.push_back(p);
  }
  return Partition(parts);
}

// Split the positions into increasing blocks of the given sizes, one block
// at a time, each an increasing subset of what is left.
bool compatible_by_subsets(const Word& s, const Partition& mu) {
  const int n = s.size();
  std::function<bool(unsigned, int)> go = [&](unsigned left, int r) {
    if (r == mu.length()) return left == 0;
    for (unsigned sub = left;; sub = (sub - 1) & left) {
      if (std::popcount(sub) == mu[r]) {
        int last = 0;
        bool inc = true;
        for (int i = 0; i < n && inc; ++i)
          if (sub >> i & 1u) {
            inc = s(i + 1) > last;
            last = s(i + 1);
          }
        if (inc && go(left & ~sub, r + 1)) return true;
      }
      if (sub == 0) break;
    }
    return false;
  };
  return go((1u << n) - 1, 0);
}

PartitionSet coarsening_by_merging(const PartitionSet& g) {
  std::set<Partition> seen;
  std::vector<Partition> todo(g.begin(), g.end());
  while (!todo.empty()) {
    Partition p = todo.back();
    todo.pop_back();
    if (!seen.insert(p).second) continue;
    const auto& v = p.parts();
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        std::vector<int> w;
        for (std::size_t k = 0; k < v.size(); ++k)
          if (k != i && k != j) w.push_back(v[k]);
        w.push_back(v[i] + v[j]);
        std::sort(w.rbegin(), w.rend());
        todo.emplace_back(w);
      }
  }
  return PartitionSet(g.n(), {seen.begin(), seen.end()});
}

std::size_t count_upward_closed(int n) {
  const auto& ps = partitions_of(n);
  std::size_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << ps.size()); ++m) {
    bool closed = true;
    for (std::size_t i = 0; i < ps.size() && closed; ++i)
      for (std::size_t j = 0; j < ps.size() && closed; ++j)
        if ((m >> i & 1u) && !(m >> j & 1u) && dominates(ps[j], ps[i])) closed = false;
    count += closed;
  }
  return count;
}

}  // namespace

TEST_CASE("partition parsing and printing") {
  const Partition p = Partition::parse("4,2");
  CHECK(p == Partition{4, 2});
  CHECK(p.size() == 6);
  CHECK(p.to_string() == "4,2");
  CHECK(p.pretty() == "(4,2)");
  CHECK_THROWS(Partition::parse("2,4"));
  CHECK_THROWS(Partition::parse("2,,1"));
  CHECK_THROWS(Partition::parse("0"));
  const PartitionSet s = PartitionSet::parse("6;5,1;4,2");
  CHECK(s.n() == 6);
  CHECK(s.size() == 3);
  CHECK(s.to_string() == "6;5,1;4,2");
  CHECK_THROWS(PartitionSet::parse("3;2,1,1"));
}

TEST_CASE("partitions_of counts") {
  const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) CHECK(partitions_of(n).size() == p[static_cast<std::size_t>(n)]);
  CHECK(partitions_of(4).front() == Partition{4});
  CHECK(partitions_of(4).back() == Partition{1, 1, 1, 1});
}

TEST_CASE("hook length formula against corner recursion") {
  for (int n = 1; n <= 10; ++n)
    for (const auto& l : partitions_of(n))
      CHECK(standard_tableaux_count(l) == syt_by_corners(l.parts()));
  CHECK(standard_tableaux_count(Partition{4, 2}) == 9);
  CHECK(standard_tableaux_count(Partition{3, 2, 1}) == 16);
}

TEST_CASE("sum of f_lambda squared is n!") {
  for (int n = 1; n <= 10; ++n) {
    BigInt sum = 0;
    for (const auto& l : partitions_of(n)) sum += standard_tableaux_count(l) * standard_tableaux_count(l);
    CHECK(sum == BigInt(factorial(n)));
    CHECK(tableaux_square_sum(PartitionSet::all(n)) == BigInt(factorial(n)));
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition{4, 2}) == Partition{2, 2, 1, 1});
  CHECK(conjugate(Partition{3}) == Partition{1, 1, 1});
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : partitions_of(n)) {
      CHECK(conjugate(conjugate(l)) == l);
      CHECK(standard_tableaux_count(conjugate(l)) == standard_tableaux_count(l));
    }
}

TEST_CASE("dominance is a lattice; meet and join against exhaustive search") {
  for (int n = 1; n <= 7; ++n) {
    const auto& ps = partitions_of(n);
    for (const auto& a : ps) {
      CHECK(dominates(a, a));
      for (const auto& b : ps) {
        const Partition j = dominance_join(a, b);
        const Partition m = dominance_meet(a, b);
        CHECK(j == join_by_search(a, b));
        CHECK(m == meet_by_search(a, b));
        CHECK(j == dominance_join(b, a));
        CHECK(m == dominance_meet(b, a));
        CHECK(dominance_join(a, m) == a);  // absorption
        CHECK(dominance_meet(a, j) == a);
        // conjugation reverses dominance
        CHECK(dominates(a, b) == dominates(conjugate(b), conjugate(a)));
        for (const auto& c : ps)
          if (n <= 6) CHECK(dominance_join(dominance_join(a, b), c) == dominance_join(a, dominance_join(b, c)));
      }
    }
  }
  CHECK_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
  CHECK_FALSE(dominates(Partition{4, 1, 1}, Partition{3, 3}));
  CHECK(dominance_join(Partition{3, 3}, Partition{4, 1, 1}) == Partition{4, 2});
}

TEST_CASE("lub of a set") {
  CHECK(lub(PartitionSet::parse("4,1,1;3,3")) == Partition{4, 2});
  CHECK(lub(PartitionSet::parse("1,1,1")) == Partition{1, 1, 1});
}

TEST_CASE("co-saturated subsets against brute force") {
  for (int n = 1; n <= 7; ++n) {
    const auto subsets = all_cosaturated_subsets(n);
    CHECK(subsets.size() == count_upward_closed(n));
    for (const auto& s : subsets) {
      CHECK(is_cosaturated(s));
      CHECK(is_saturated(complement(s)));
    }
  }
  CHECK(all_cosaturated_subsets(5).size() == 8);  // Par(5) is a chain
  CHECK(is_cosaturated(PartitionSet::parse("6;5,1;4,2")));
  CHECK_FALSE(is_cosaturated(PartitionSet::parse("6;4,2")));
}

TEST_CASE("coarsening closure against pairwise merging") {
  for (int n = 1; n <= 6; ++n) {
    const std::size_t k = partitions_of(n).size();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); m += (n == 6 ? 7 : 1)) {
      const auto g = PartitionSet::from_mask(n, m);
      CHECK(coarsening_closure(g) == coarsening_by_merging(g));
    }
  }
  CHECK(coarsening_closure(PartitionSet::parse("2,2")).to_string() == "4;2,2");
}

TEST_CASE("unique minimal and maximal elements") {
  CHECK(unique_minimal(PartitionSet::parse("6;5,1;4,2")) == Partition{4, 2});
  CHECK_FALSE(unique_minimal(PartitionSet::parse("6;5,1;4,2;4,1,1;3,3")).has_value());
  CHECK(unique_maximal(PartitionSet::parse("3,3;2,2,2")) == Partition{3, 3});
  CHECK_FALSE(unique_maximal(PartitionSet(6)).has_value());
}

TEST_CASE("words and permutations") {
  const Word s = Word::parse("412563");
  CHECK(s.size() == 6);
  CHECK(s.to_string() == "412563");
  CHECK_THROWS(Word::parse("4125"));
  CHECK_THROWS(Word::parse("1123"));
  CHECK_THROWS(Word::parse("12a"));
  CHECK(Word::parse("10,2,3,4,5,6,7,8,9,1").size() == 10);
  CHECK(pi(s).inverse() == pi(Word::parse("236145")));
  CHECK(reverse(s).to_string() == "365214");
  const auto& g = SymmetricGroup::of(5);
  for (std::size_t a = 0; a < g.order(); a += 7)
    for (std::size_t b = 0; b < g.order(); b += 5) {
      CHECK(g.element(g.compose(a, b)) == g.element(a) * g.element(b));
      CHECK(word_of(g.element(b)) == word_action(Word::increasing(5), g.element(b)));
    }
  for (std::size_t a = 0; a < g.order(); ++a) {
    CHECK(g.index_of(g.element(a)) == a);
    CHECK(g.compose(a, g.inverse(a)) == g.identity());
  }
  const auto words = all_words(4);
  CHECK(words.size() == 24);
  CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("RSK on the example word") {
  const Word s = Word::parse("412563");
  CHECK(shape(s) == Partition{4, 2});
  CHECK(shape(Word::parse("365214")) == Partition{2, 2, 1, 1});
  CHECK(longest_increasing(s) == 4);
  CHECK(longest_decreasing(s) == 2);
  const auto pq = rsk(s);
  CHECK(pq.insertion == Tableau{{1, 2, 3, 6}, {4, 5}});
  CHECK(is_standard(pq.insertion));
  CHECK(is_standard(pq.recording));
  CHECK(shape(Word::increasing(5)) == Partition{5});
  CHECK(shape(Word::decreasing(5)) == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("upward compatibility on the example word") {
  const Word s = Word::parse("412563");
  CHECK(upward_compatible(s, Partition{4, 1, 1}));
  CHECK(upward_compatible(s, Partition{3, 3}));
  CHECK_FALSE(upward_compatible(s, Partition{4, 2}));
  const auto a = ascent_set(s);
  CHECK(a.contains(Partition{4, 1, 1}));
  CHECK_FALSE(a.contains(shape(s)));
  CHECK(greene_shape_oracle(s) == Partition{4, 2});
  const auto b = compatible_blocks(s, Partition{3, 3});
  REQUIRE(b.has_value());
  CHECK(b->profile() == Partition{3, 3});
}

TEST_CASE("upward compatibility against subset enumeration") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_words(n))
      for (const auto& mu : partitions_of(n)) CHECK(upward_compatible(w, mu) == compatible_by_subsets(w, mu));
}

TEST_CASE("RSK shape against Greene's k-increasing numbers") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_words(n)) {
      const Partition sh = shape(w);
      CHECK(sh == shape_by_greene_numbers(w));
      CHECK(sh == greene_shape_oracle(w));
      CHECK(sh[0] == lis_by_subsets(w));
    }
}

TEST_CASE("RSK is a bijection onto pairs of standard tableaux") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::pair<Tableau, Tableau>> seen;
    std::map<Partition, std::size_t> per_shape;
    for (const auto& w : all_words(n)) {
      const auto pq = rsk(w);
      CHECK(is_standard(pq.insertion));
      CHECK(is_standard(pq.recording));
      seen.emplace(pq.insertion, pq.recording);
      ++per_shape[pq.shape];
    }
    CHECK(seen.size() == factorial(n));
    for (const auto& [l, c] : per_shape) {
      const BigInt f = standard_tableaux_count(l);
      CHECK(BigInt(c) == f * f);
    }
  }
}

TEST_CASE("Schensted duality: reversing conjugates the shape") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : all_words(n)) CHECK(shape(reverse(w)) == conjugate(shape(w)));
}

TEST_CASE("words avoiding a long decreasing subsequence are counted by Catalan numbers") {
  const std::vector<std::size_t> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    std::size_t c = 0;
    for (const auto& w : all_words(n)) c += no_decreasing_exceeding(w, 2);
    CHECK(c == catalan[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("LIS against subsets on random longer words") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> e(12);
    std::iota(e.begin(), e.end(), 1);
    std::shuffle(e.begin(), e.end(), rng);
    const Word w(e);
    CHECK(longest_increasing(w) == lis_by_subsets(w));
    CHECK(shape(w)[0] == longest_increasing(w));
    CHECK(conjugate(shape(w))[0] == longest_decreasing(w));
    CHECK(greene_shape_oracle(w) == shape(w));
  }
}

TEST_CASE("block families of a type") {
  // Number of set partitions of [n] with block sizes mu.
  const auto fam = block_families_of_type(Partition{2, 2});
  CHECK(fam.size() == 3);
  CHECK(block_families_of_type(Partition{4, 1, 1}).size() == 15);
  CHECK(block_families_of_type(Partition{3, 3}).size() == 10);
  for (const auto& b : block_families_of_type(Partition{3, 2, 1})) {
    CHECK(b.profile() == Partition{3, 2, 1});
    CHECK(b.subgroup_order() == 12);
  }
  CHECK(BlockFamily::initial_intervals(Partition{2, 1}).blocks() == std::vector<std::vector<int>>{{1, 2}, {3}});
}
