#include "symideal/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symideal {

namespace {

void require_same_size(const Partition& a, const Partition& b, const char* op) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(op) + ": partitions of " +
                                std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
}

std::vector<int> prefix_sums(const Partition& p, int len) {
  std::vector<int> s(static_cast<std::size_t>(len));
  int acc = 0;
  for (int i = 0; i < len; ++i) {
    acc += p[i];
    s[static_cast<std::size_t>(i)] = acc;
  }
  return s;
}

Partition from_prefix_sums(const std::vector<int>& sums) {
  std::vector<int> parts;
  int prev = 0;
  for (int s : sums) {
    if (s - prev > 0) parts.push_back(s - prev);
    prev = s;
  }
  return Partition(std::move(parts));
}

void generate(int remaining, int max_part, std::vector<int>& cur,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text.remove_prefix(1);
    text.remove_suffix(1);
  }
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part '" + cur + "'");
    }
    if (used != cur.size())
      throw std::invalid_argument("bad partition part '" + cur + "'");
    parts.push_back(v);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      if (cur.empty()) throw std::invalid_argument("empty partition part in '" + std::string(text) + "'");
      flush();
    } else if (ch == ' ') {
      flush();
    } else if (ch >= '0' && ch <= '9') {
      cur.push_back(ch);
    } else {
      throw std::invalid_argument("bad character in partition: '" +
                                  std::string(1, ch) + "'");
    }
  }
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("trailing comma in partition");
  flush();
  if (parts.empty()) throw std::invalid_argument("empty partition");
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string Partition::pretty() const { return "(" + to_string() + ")"; }

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  if (n < 1) throw std::invalid_argument("partitions_of: n must be positive");
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Partition> out;
    std::vector<int> cur;
    generate(n, n, cur, out);
    it = cache.emplace(n, std::move(out)).first;
  }
  return it->second;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int j = 1; j <= lambda[0]; ++j) {
    int count = 0;
    for (int p : lambda.parts()) count += (p >= j);
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  require_same_size(lambda, mu, "dominates");
  const int len = std::max(lambda.length(), mu.length());
  int a = 0, b = 0;
  for (int i = 0; i < len; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a < b) return false;
  }
  return true;
}

Partition dominance_meet(const Partition& lambda, const Partition& mu) {
  require_same_size(lambda, mu, "dominance_meet");
  const int len = std::max(lambda.length(), mu.length());
  auto a = prefix_sums(lambda, len);
  const auto b = prefix_sums(mu, len);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::min(a[i], b[i]);
  return from_prefix_sums(a);
}

Partition dominance_join(const Partition& lambda, const Partition& mu) {
  require_same_size(lambda, mu, "dominance_join");
  return conjugate(dominance_meet(conjugate(lambda), conjugate(mu)));
}

BigInt standard_tableaux_count(const Partition& lambda) {
  BigInt num = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  const Partition conj = conjugate(lambda);
  BigInt den = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      den *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return num / den;
}

std::vector<Partition> simple_refinements(const Partition& mu) {
  std::set<Partition> out;
  const auto& parts = mu.parts();
  for (std::size_t r = 0; r < parts.size(); ++r) {
    if (r > 0 && parts[r] == parts[r - 1]) continue;
    for (int a = 1; a <= parts[r] / 2; ++a) {
      std::vector<int> np;
      for (std::size_t k = 0; k < parts.size(); ++k)
        if (k != r) np.push_back(parts[k]);
      np.push_back(a);
      np.push_back(parts[r] - a);
      std::sort(np.rbegin(), np.rend());
      out.insert(Partition(std::move(np)));
    }
  }
  return {out.rbegin(), out.rend()};
}

bool is_refinement(const Partition& lambda, const Partition& mu) {
  require_same_size(lambda, mu, "is_refinement");
  std::set<Partition> seen{mu};
  std::vector<Partition> frontier{mu};
  while (!frontier.empty()) {
    Partition cur = std::move(frontier.back());
    frontier.pop_back();
    if (cur == lambda) return true;
    if (cur.length() >= lambda.length()) continue;
    for (auto& next : simple_refinements(cur))
      if (seen.insert(next).second) frontier.push_back(std::move(next));
  }
  return false;
}

PartitionSet::PartitionSet(int n, std::vector<Partition> members) : n_(n) {
  for (auto& p : members) insert(p);
}

PartitionSet PartitionSet::parse(std::string_view text, std::optional<int> n) {
  std::vector<Partition> members;
  std::string_view rest = trim(text);
  if (!rest.empty() && rest.front() == '{' && rest.back() == '}') {
    rest.remove_prefix(1);
    rest.remove_suffix(1);
  }
  while (!rest.empty()) {
    const auto cut = rest.find_first_of(";|");
    const auto piece = trim(rest.substr(0, cut));
    if (!piece.empty()) members.push_back(Partition::parse(piece));
    if (cut == std::string_view::npos) break;
    rest.remove_prefix(cut + 1);
  }
  if (!n) {
    if (members.empty())
      throw std::invalid_argument("empty partition set needs an explicit n");
    n = members.front().size();
  }
  return PartitionSet(*n, std::move(members));
}

PartitionSet PartitionSet::all(int n) { return PartitionSet(n, partitions_of(n)); }

PartitionSet PartitionSet::from_mask(int n, std::uint64_t mask) {
  const auto& par = partitions_of(n);
  PartitionSet s(n);
  for (std::size_t i = 0; i < par.size(); ++i)
    if (mask >> i & 1) s.insert(par[i]);
  return s;
}

bool PartitionSet::contains(const Partition& p) const {
  return std::binary_search(members_.begin(), members_.end(), p,
                            std::greater<>());
}

void PartitionSet::insert(const Partition& p) {
  if (p.size() != n_)
    throw std::invalid_argument("partition " + p.pretty() +
                                " does not partition " + std::to_string(n_));
  auto it = std::lower_bound(members_.begin(), members_.end(), p,
                             std::greater<>());
  if (it == members_.end() || *it != p) members_.insert(it, p);
}

std::uint64_t PartitionSet::mask() const {
  const auto& par = partitions_of(n_);
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < par.size(); ++i)
    if (contains(par[i])) m |= std::uint64_t{1} << i;
  return m;
}

std::string PartitionSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ';';
    s += members_[i].to_string();
  }
  return s;
}

std::string PartitionSet::pretty() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ',';
    s += members_[i].pretty();
  }
  return s + "}";
}

Partition lub(const PartitionSet& gamma) {
  if (gamma.empty()) throw std::invalid_argument("lub of the empty set");
  Partition acc = gamma.members().front();
  for (const auto& p : gamma) acc = dominance_join(acc, p);
  return acc;
}

PartitionSet conjugate(const PartitionSet& gamma) {
  PartitionSet out(gamma.n());
  for (const auto& p : gamma) out.insert(conjugate(p));
  return out;
}

PartitionSet complement(const PartitionSet& gamma) {
  PartitionSet out(gamma.n());
  for (const auto& p : partitions_of(gamma.n()))
    if (!gamma.contains(p)) out.insert(p);
  return out;
}

PartitionSet coarsening_closure(const PartitionSet& gamma) {
  PartitionSet out(gamma.n());
  for (const auto& mu : partitions_of(gamma.n()))
    for (const auto& lambda : gamma)
      if (is_refinement(lambda, mu)) {
        out.insert(mu);
        break;
      }
  return out;
}

bool is_cosaturated(const PartitionSet& gamma) {
  for (const auto& mu : gamma)
    for (const auto& lambda : partitions_of(gamma.n()))
      if (dominates(lambda, mu) && !gamma.contains(lambda)) return false;
  return true;
}

bool is_saturated(const PartitionSet& gamma) {
  for (const auto& mu : gamma)
    for (const auto& lambda : partitions_of(gamma.n()))
      if (dominates(mu, lambda) && !gamma.contains(lambda)) return false;
  return true;
}

namespace {

std::optional<Partition> unique_extreme(const PartitionSet& gamma, bool minimal) {
  std::optional<Partition> found;
  for (const auto& mu : gamma) {
    bool extreme = true;
    for (const auto& nu : gamma) {
      if (nu == mu) continue;
      if (minimal ? dominates(mu, nu) : dominates(nu, mu)) {
        extreme = false;
        break;
      }
    }
    if (!extreme) continue;
    if (found) return std::nullopt;
    found = mu;
  }
  return found;
}

}  // namespace

std::optional<Partition> unique_minimal(const PartitionSet& gamma) {
  return unique_extreme(gamma, true);
}

std::optional<Partition> unique_maximal(const PartitionSet& gamma) {
  return unique_extreme(gamma, false);
}

std::vector<PartitionSet> all_cosaturated_subsets(int n) {
  // Decreasing lex order is a linear extension of dominance, so every
  // partition dominating par[i] has a smaller index.
  const auto& par = partitions_of(n);
  const std::size_t m = par.size();
  std::vector<std::uint64_t> above(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (dominates(par[j], par[i])) above[i] |= std::uint64_t{1} << j;

  std::vector<PartitionSet> out;
  std::function<void(std::size_t, std::uint64_t)> extend =
      [&](std::size_t i, std::uint64_t chosen) {
        if (i == m) {
          out.push_back(PartitionSet::from_mask(n, chosen));
          return;
        }
        extend(i + 1, chosen);
        if ((above[i] & chosen) == above[i])
          extend(i + 1, chosen | std::uint64_t{1} << i);
      };
  extend(0, 0);
  return out;
}

BigInt tableaux_square_sum(const PartitionSet& gamma) {
  BigInt s = 0;
  for (const auto& p : gamma) {
    const BigInt f = standard_tableaux_count(p);
    s += f * f;
  }
  return s;
}

}  // namespace symideal
