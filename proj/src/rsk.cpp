#include "symideal/rsk.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace symideal {

// ---- block families ----

BlockFamily::BlockFamily(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("block family: empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("block family: blocks must partition [1,n]");
      seen[static_cast<std::size_t>(x)] = true;
      ++covered;
    }
  }
  if (covered != n)
    throw std::invalid_argument("block family: blocks must partition [1,n]");
}

BlockFamily BlockFamily::initial_intervals(const Partition& lambda) {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (int part : lambda.parts()) {
    std::vector<int> b;
    for (int k = 0; k < part; ++k) b.push_back(next++);
    blocks.push_back(std::move(b));
  }
  return BlockFamily(lambda.size(), std::move(blocks));
}

Partition BlockFamily::profile() const {
  std::vector<int> sizes;
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.rbegin(), sizes.rend());
  return Partition(std::move(sizes));
}

std::size_t BlockFamily::subgroup_order() const {
  std::size_t order = 1;
  for (const auto& b : blocks_) order *= factorial(static_cast<int>(b.size()));
  return order;
}

std::string BlockFamily::to_string() const {
  std::string s;
  for (const auto& b : blocks_) {
    s += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(b[i]);
    }
    s += '}';
  }
  return s;
}

std::vector<BlockFamily> block_families_of_type(const Partition& mu) {
  const int n = mu.size();
  std::vector<BlockFamily> out;
  std::vector<std::vector<int>> blocks;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  std::function<void(int)> place_block = [&](int r) {
    if (r == mu.length()) {
      out.emplace_back(n, blocks);
      return;
    }
    const int size = mu[r];
    const int min_first =
        (r > 0 && mu[r - 1] == size) ? blocks.back().front() + 1 : 1;
    std::vector<int> cur;
    std::function<void(int)> choose = [&](int from) {
      if (static_cast<int>(cur.size()) == size) {
        for (int x : cur) used[static_cast<std::size_t>(x)] = true;
        blocks.push_back(cur);
        place_block(r + 1);
        blocks.pop_back();
        for (int x : cur) used[static_cast<std::size_t>(x)] = false;
        return;
      }
      for (int x = from; x <= n; ++x) {
        if (used[static_cast<std::size_t>(x)]) continue;
        if (cur.empty() && x < min_first) continue;
        cur.push_back(x);
        choose(x + 1);
        cur.pop_back();
      }
    };
    choose(1);
  };
  place_block(0);
  return out;
}

// ---- RSK ----

StandardTableauPair rsk(const Word& s) {
  Tableau p, q;
  for (int i = 1; i <= s.size(); ++i) {
    int x = s(i);
    std::size_t row = 0;
    for (;; ++row) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({i});
        break;
      }
      auto& r = p[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        q[row].push_back(i);
        break;
      }
      std::swap(x, *it);
    }
  }
  std::vector<int> parts;
  for (const auto& r : p) parts.push_back(static_cast<int>(r.size()));
  return {std::move(p), std::move(q), Partition(std::move(parts))};
}

Partition shape(const Word& s) { return rsk(s).shape; }

const std::vector<Partition>& shape_table(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  const auto& group = SymmetricGroup::of(n);
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Partition> shapes;
    shapes.reserve(group.order());
    for (const auto& p : group.elements()) shapes.push_back(shape(word_of(p)));
    it = cache.emplace(n, std::move(shapes)).first;
  }
  return it->second;
}

bool is_standard(const Tableau& t) {
  std::vector<int> all;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].empty()) return false;
    if (i > 0 && t[i].size() > t[i - 1].size()) return false;
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (j > 0 && t[i][j] <= t[i][j - 1]) return false;
      if (i > 0 && t[i][j] <= t[i - 1][j]) return false;
      all.push_back(t[i][j]);
    }
  }
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k] != static_cast<int>(k + 1)) return false;
  return true;
}

// ---- upward compatibility ----

namespace {

// Assigns positions 1..n in order to blocks with capacities mu (descending).
// Among empty blocks of equal capacity only the first is tried, so each
// unordered block family is visited once. `visit` returns false to stop.
void search_blocks(const Word& s, const Partition& mu,
                   const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
  if (s.size() != mu.size())
    throw std::invalid_argument("upward_compatible: size mismatch");
  const int n = s.size();
  const int m = mu.length();
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(m));
  bool stop = false;
  std::function<void(int)> place = [&](int i) {
    if (stop) return;
    if (i > n) {
      if (!visit(blocks)) stop = true;
      return;
    }
    for (int r = 0; r < m && !stop; ++r) {
      auto& b = blocks[static_cast<std::size_t>(r)];
      if (static_cast<int>(b.size()) == mu[r]) continue;
      if (b.empty()) {
        if (r > 0 && mu[r - 1] == mu[r] && blocks[static_cast<std::size_t>(r - 1)].empty())
          continue;
      } else if (s(b.back()) > s(i)) {
        continue;
      }
      b.push_back(i);
      place(i + 1);
      b.pop_back();
    }
  };
  place(1);
}

}  // namespace

std::optional<BlockFamily> compatible_blocks(const Word& s, const Partition& mu) {
  std::optional<BlockFamily> found;
  search_blocks(s, mu, [&](const auto& blocks) {
    found.emplace(s.size(), blocks);
    return false;
  });
  return found;
}

bool upward_compatible(const Word& s, const Partition& mu) {
  return compatible_blocks(s, mu).has_value();
}

std::vector<BlockFamily> all_compatible_blocks(const Word& s, const Partition& mu) {
  std::vector<BlockFamily> out;
  search_blocks(s, mu, [&](const auto& blocks) {
    out.emplace_back(s.size(), blocks);
    return true;
  });
  return out;
}

PartitionSet ascent_set(const Word& s) {
  PartitionSet a(s.size());
  for (const auto& mu : partitions_of(s.size()))
    if (upward_compatible(s, mu)) a.insert(mu);
  return a;
}

Partition greene_shape_oracle(const Word& s) { return lub(ascent_set(s)); }

// ---- monotone subsequences ----

int longest_increasing(const Word& s) {
  std::vector<int> tails;
  for (int x : s.entries()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

int longest_decreasing(const Word& s) { return longest_increasing(reverse(s)); }

bool no_decreasing_exceeding(const Word& s, int k) {
  return longest_decreasing(s) <= k;
}

bool has_increasing_of_length(const Word& s, int k) {
  return longest_increasing(s) >= k;
}

}  // namespace symideal
