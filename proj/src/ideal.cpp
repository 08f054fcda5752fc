#include "symideal/ideal.hpp"

#include "symideal/algebra.hpp"
#include "symideal/rsk.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symideal {

namespace {

using IndexSet = std::vector<std::size_t>;

IndexSet subgroup_indices(const SymmetricGroup& g, const BlockFamily& b) {
  IndexSet out;
  for (const auto& p : young_subgroup(b)) out.push_back(g.index_of(p));
  std::sort(out.begin(), out.end());
  return out;
}

// Calls `visit(support)` for each left coset sigma K (K given by indices).
template <typename Visit>
bool for_each_left_coset(const SymmetricGroup& g, const IndexSet& k, Visit&& visit) {
  std::vector<bool> seen(g.order(), false);
  IndexSet support(k.size());
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    for (std::size_t j = 0; j < k.size(); ++j) {
      support[j] = g.compose(s, k[j]);
      seen[support[j]] = true;
    }
    if (!visit(support)) return false;
  }
  return true;
}

// Every distinct delta_sigma [H] delta_tau, lambda in delta, H = Sym(lambda).
// delta_sigma [H] delta_tau is the left coset sigma tau (tau^-1 H tau), so it
// suffices to run over left cosets of each distinct conjugate of H.
template <typename Visit>
void for_each_double_translate(const SymmetricGroup& g, const PartitionSet& delta,
                               Visit&& visit) {
  for (const auto& lambda : delta.members()) {
    const IndexSet h = subgroup_indices(g, BlockFamily::initial_intervals(lambda));
    std::set<IndexSet> conjugates;
    for (std::size_t t = 0; t < g.order(); ++t) {
      IndexSet k;
      k.reserve(h.size());
      const std::size_t ti = g.inverse(t);
      for (std::size_t x : h) k.push_back(g.compose(ti, g.compose(x, t)));
      std::sort(k.begin(), k.end());
      if (!conjugates.insert(k).second) continue;
      if (!for_each_left_coset(g, k, visit)) return;
    }
  }
}

template <typename Scalar>
RowVector<Scalar> support_vector(const SymmetricGroup& g, const IndexSet& support,
                                 bool signed_generators) {
  RowVector<Scalar> v = RowVector<Scalar>::Zero(static_cast<Index>(g.order()));
  for (std::size_t x : support)
    v(static_cast<Index>(x)) = Scalar(signed_generators ? g.sign(x) : 1);
  return v;
}

template <typename Scalar>
RowVector<Scalar> right_translate(const SymmetricGroup& g, const RowVector<Scalar>& v, int t) {
  RowVector<Scalar> w = RowVector<Scalar>::Zero(v.size());
  for (Index a = 0; a < v.size(); ++a)
    if (!is_zero(v(a))) w(static_cast<Index>(g.times_adjacent(static_cast<std::size_t>(a), t))) = v(a);
  return w;
}

template <typename Scalar>
RowVector<Scalar> left_translate(const SymmetricGroup& g, const RowVector<Scalar>& v, int t) {
  RowVector<Scalar> w = RowVector<Scalar>::Zero(v.size());
  for (Index a = 0; a < v.size(); ++a)
    if (!is_zero(v(a))) w(static_cast<Index>(g.adjacent_times(t, static_cast<std::size_t>(a)))) = v(a);
  return w;
}

// Folds the initial vectors in, then every translate of a vector that grew
// the lattice. A vector that did not grow it lies in the span of earlier
// ones, so its translates are already covered.
template <typename Scalar>
IntegerLattice translate_closure(const SymmetricGroup& g,
                                 std::deque<RowVector<Scalar>> work, bool left,
                                 bool right) {
  HermiteBuilder<Scalar> b(static_cast<Index>(g.order()));
  const int n = g.degree();
  while (!work.empty() && !b.is_full()) {
    RowVector<Scalar> v = std::move(work.front());
    work.pop_front();
    if (!b.insert(v)) continue;
    for (int t = 1; t < n; ++t) {
      if (right) work.push_back(right_translate(g, v, t));
      if (left) work.push_back(left_translate(g, v, t));
    }
  }
  return lattice_from_builder(b);
}

template <typename Scalar>
IntegerLattice build_ideal(const PartitionSet& delta, bool signed_generators,
                           IdealConstruction how) {
  const auto& g = SymmetricGroup::of(delta.n());
  std::deque<RowVector<Scalar>> work;
  switch (how) {
    case IdealConstruction::LeftThenRightClosure:
      for (const auto& lambda : delta.members()) {
        const IndexSet h = subgroup_indices(g, BlockFamily::initial_intervals(lambda));
        for_each_left_coset(g, h, [&](const IndexSet& support) {
          work.push_back(support_vector<Scalar>(g, support, signed_generators));
          return true;
        });
      }
      return translate_closure(g, std::move(work), false, true);
    case IdealConstruction::DoubleTranslates: {
      HermiteBuilder<Scalar> b(static_cast<Index>(g.order()));
      for_each_double_translate(g, delta, [&](const IndexSet& support) {
        b.insert(support_vector<Scalar>(g, support, signed_generators));
        return !b.is_full();
      });
      return lattice_from_builder(b);
    }
    case IdealConstruction::BlockFamilies:
      for (const auto& lambda : delta.members())
        for (const auto& fam : block_families_of_type(lambda))
          work.push_back(
              support_vector<Scalar>(g, subgroup_indices(g, fam), signed_generators));
      return translate_closure(g, std::move(work), true, true);
  }
  throw std::logic_error("unknown ideal construction");
}

std::vector<Index> complement_columns(std::size_t order, const IndexSet& coords) {
  std::vector<bool> in(order, false);
  for (std::size_t c : coords) in.at(c) = true;
  std::vector<Index> out;
  for (std::size_t k = 0; k < order; ++k)
    if (!in[k]) out.push_back(static_cast<Index>(k));
  return out;
}

}  // namespace

IntegerLattice ideal_lattice(const PartitionSet& delta, bool signed_generators,
                             IdealConstruction how) {
  if (delta.members().empty())
    return IntegerLattice(static_cast<Index>(factorial(delta.n())));
  return with_promotion([&]<typename S>() {
    return build_ideal<S>(delta, signed_generators, how);
  });
}

std::vector<std::size_t> g_gamma_indices(const PartitionSet& gamma) {
  const auto& shapes = shape_table(gamma.n());
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < shapes.size(); ++k)
    if (gamma.contains(shapes[k])) out.push_back(k);
  return out;
}

std::vector<Permutation> g_gamma(const PartitionSet& gamma) {
  const auto& g = SymmetricGroup::of(gamma.n());
  std::vector<Permutation> out;
  for (std::size_t k : g_gamma_indices(gamma)) out.push_back(g.element(k));
  return out;
}

IntegerLattice coordinate_lattice(Index ambient_dim, const std::vector<std::size_t>& coords) {
  IntMatrix b = IntMatrix::Zero(static_cast<Index>(coords.size()), ambient_dim);
  for (std::size_t k = 0; k < coords.size(); ++k)
    b(static_cast<Index>(k), static_cast<Index>(coords[k])) = 1;
  return hnf(b);
}

ComplementCheck complement_check(const IntegerLattice& l,
                                 const std::vector<std::size_t>& g_coords) {
  const auto cols = complement_columns(static_cast<std::size_t>(l.ambient_dim()), g_coords);
  const IntegerLattice p = project(l, cols);
  return {equals_full(p), p.rank() == l.rank()};
}

DirectSumReport check_direct_sum(const PartitionSet& gamma) {
  DirectSumReport r;
  r.gamma = gamma;
  r.delta = PartitionSet(gamma.n());
  if (!is_cosaturated(gamma)) {
    r.precondition_message = "gamma is not co-saturated";
    return r;
  }
  if (!unique_minimal(gamma)) {
    r.precondition_message = "gamma has no unique minimal element";
    return r;
  }
  r.precondition_ok = true;
  r.delta = complement(conjugate(gamma));

  const auto g_coords = g_gamma_indices(gamma);
  r.g_size = static_cast<Index>(g_coords.size());
  r.predicted_ideal_rank = tableaux_square_sum(r.delta);

  const IntegerLattice ideal = ideal_lattice(r.delta, false);
  const IntegerLattice signed_ideal = ideal_lattice(r.delta, true);
  r.ideal_rank = ideal.rank();
  r.signed_ideal_rank = signed_ideal.rank();

  const auto plain = complement_check(ideal, g_coords);
  const auto sgn = complement_check(signed_ideal, g_coords);
  r.sum_full = plain.spans;
  r.intersection_zero = plain.independent;
  r.signed_sum_full = sgn.spans;
  r.signed_intersection_zero = sgn.independent;
  r.ideal_pure = is_pure(ideal);
  r.signed_ideal_pure = is_pure(signed_ideal);
  return r;
}

// ---- span check ----

namespace {

struct SpanState {
  std::size_t cursor = 0;
};

std::string checkpoint_header(const PartitionSet& delta) {
  return "span-check 1 " + std::to_string(delta.n()) + " " +
         (delta.members().empty() ? std::string("-") : delta.to_string());
}

template <typename Scalar>
SpanCheckResult span_check_impl(const PartitionSet& delta, const SpanCheckOptions& opt) {
  const auto& g = SymmetricGroup::of(delta.n());
  const auto& shapes = shape_table(delta.n());
  std::vector<Index> position(g.order(), -1);
  Index target = 0;
  for (std::size_t k = 0; k < g.order(); ++k)
    if (delta.contains(shapes[k])) position[k] = target++;

  SpanCheckResult res;
  res.target_rank = target;
  HermiteBuilder<Scalar> b(target);
  std::size_t skip = 0;
  const std::string header = checkpoint_header(delta);

  if (!opt.checkpoint_path.empty() && std::filesystem::exists(opt.checkpoint_path)) {
    std::ifstream in(opt.checkpoint_path);
    std::string line;
    std::getline(in, line);
    std::size_t cursor = 0;
    if (line == header && (in >> cursor)) {
      b = HermiteBuilder<Scalar>::load(in);
      skip = cursor;
      res.resumed = true;
    }
  }

  auto save = [&](std::size_t cursor) {
    if (opt.checkpoint_path.empty()) return;
    const std::string tmp = opt.checkpoint_path + ".tmp";
    {
      std::ofstream out(tmp);
      out << header << '\n' << cursor << '\n';
      b.save(out);
    }
    std::filesystem::rename(tmp, opt.checkpoint_path);
  };

  std::size_t cursor = 0;
  if (!b.is_full()) {
    for_each_double_translate(g, delta, [&](const IndexSet& support) {
      ++cursor;
      if (cursor <= skip) return true;
      RowVector<Scalar> v = RowVector<Scalar>::Zero(target);
      bool any = false;
      for (std::size_t x : support) {
        if (position[x] >= 0) {
          v(position[x]) = Scalar(1);
          any = true;
        }
      }
      if (any) b.insert(std::move(v));
      if (opt.checkpoint_every && cursor % opt.checkpoint_every == 0) save(cursor);
      return !b.is_full();
    });
  }
  res.generators_used = std::max(cursor, skip);
  res.projected_rank = b.rank();
  res.full = b.is_full();
  if (!opt.checkpoint_path.empty()) std::filesystem::remove(opt.checkpoint_path);
  return res;
}

}  // namespace

SpanCheckResult span_plus_ideal_check(const PartitionSet& delta, const SpanCheckOptions& options) {
  // Z G' + I = Z^N with G' the coordinates outside delta's shapes iff the
  // projection of I onto the coordinates with shape in delta is everything.
  return with_promotion([&]<typename S>() { return span_check_impl<S>(delta, options); });
}

bool span_plus_ideal_full(const PartitionSet& delta) {
  return span_plus_ideal_check(delta).full;
}

// ---- greedy certificate ----

const EliminationStep* SpanCertificate::step_for(const Word& w) const {
  for (const auto& s : log)
    if (s.word == w) return &s;
  return nullptr;
}

SpanCertificate greedy_span_certificate(const PartitionSet& delta) {
  const int n = delta.n();
  const auto& g = SymmetricGroup::of(n);
  const auto& shapes = shape_table(n);
  const std::size_t order = g.order();

  SpanCertificate cert;
  cert.delta = delta;
  std::vector<bool> gone(order, false);
  auto word_at = [&](std::size_t k) { return word_of(g.element(k)); };

  std::vector<std::pair<BlockFamily, IndexSet>> families;
  for (const auto& mu : delta.members())
    for (const auto& fam : block_families_of_type(mu))
      families.emplace_back(fam, subgroup_indices(g, fam));
  std::stable_sort(families.begin(), families.end(), [](const auto& a, const auto& b) {
    return a.second.size() < b.second.size();
  });

  // Terms of s[H] other than s that are not yet eliminated; pi(s sigma) =
  // pi(s) sigma. Stops counting past `limit`.
  auto leftovers = [&](std::size_t s, const IndexSet& h, std::size_t limit) {
    IndexSet out;
    for (std::size_t x : h) {
      const std::size_t u = g.compose(s, x);
      if (u != s && !gone[u]) {
        out.push_back(u);
        if (out.size() > limit) break;
      }
    }
    return out;
  };
  auto clean_relation = [&](std::size_t s) -> const BlockFamily* {
    for (const auto& [fam, h] : families)
      if (leftovers(s, h, 0).empty()) return &fam;
    return nullptr;
  };

  // Shapes outside delta lie in G'. Then a decreasing scan: blocks on which
  // the word increases, else any clean relation, else a chain.
  for (std::size_t s = 0; s < order; ++s) {
    if (!delta.contains(shapes[s])) {
      gone[s] = true;
      ++cert.outside_delta;
    }
  }
  for (std::size_t s = order; s-- > 0;) {
    if (gone[s]) continue;
    const Word w = word_at(s);
    for (const auto& mu : delta.members()) {
      for (const auto& fam : all_compatible_blocks(w, mu)) {
        if (leftovers(s, subgroup_indices(g, fam), 0).empty()) {
          gone[s] = true;
          cert.log.push_back({w, EliminationStep::Kind::IncreasingBlocks, fam, {}, {}, 1});
          break;
        }
      }
      if (gone[s]) break;
    }
    if (gone[s]) continue;

    cert.first_pass_survivors.push_back(w);
    if (const BlockFamily* fam = clean_relation(s)) {
      gone[s] = true;
      cert.log.push_back({w, EliminationStep::Kind::Relation, *fam, {}, {}, 1});
      continue;
    }
    std::vector<std::pair<RelationChain, std::size_t>> chains;
    for (const auto& [fam, h] : families) {
      const IndexSet rest = leftovers(s, h, 1);
      if (rest.size() != 1) continue;
      const std::size_t t = rest.front();
      for (const auto& [fam2, h2] : families) {
        const IndexSet rest2 = leftovers(t, h2, 1);
        if (rest2.empty() || (rest2.size() == 1 && rest2.front() == s)) {
          // t[H'] may contain s only if s is not needed to remove t.
          if (!rest2.empty()) continue;
          chains.push_back({{fam, word_at(t), fam2}, t});
        }
      }
    }
    if (chains.empty()) continue;
    const auto& [chain, t] = chains.front();
    gone[t] = true;
    cert.log.push_back({chain.partner, EliminationStep::Kind::Relation,
                        chain.partner_blocks, {}, {}, 1});
    gone[s] = true;
    EliminationStep step{w, EliminationStep::Kind::Chain, chain.blocks, chain, {}, 1};
    for (const auto& c : chains) step.alternatives.push_back(c.first);
    cert.log.push_back(std::move(step));
  }

  // Further passes over what is left, now that smaller words are settled.
  std::vector<std::size_t> left;
  for (std::size_t s = order; s-- > 0;)
    if (!gone[s]) left.push_back(s);
  for (int pass = 2; !left.empty(); ++pass) {
    std::vector<std::size_t> still;
    for (std::size_t s : left) {
      if (const BlockFamily* fam = clean_relation(s)) {
        gone[s] = true;
        cert.log.push_back({word_at(s), EliminationStep::Kind::Relation, *fam, {}, {}, pass});
      } else {
        still.push_back(s);
      }
    }
    if (still.size() == left.size()) break;
    left = std::move(still);
  }
  for (std::size_t s : left) cert.stuck.push_back(word_at(s));
  cert.complete = cert.stuck.empty();
  return cert;
}

}  // namespace symideal
