#include "symideal/young_module.hpp"

#include "symideal/hermite.hpp"
#include "symideal/ideal.hpp"
#include "symideal/rsk.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace symideal {

// ---- tabloids ----

Tabloid::Tabloid(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> all;
  for (auto& r : rows_) {
    std::sort(r.begin(), r.end());
    all.insert(all.end(), r.begin(), r.end());
  }
  for (std::size_t i = 1; i < rows_.size(); ++i)
    if (rows_[i].size() > rows_[i - 1].size())
      throw std::invalid_argument("tabloid: row sizes must be weakly decreasing");
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k] != static_cast<int>(k + 1))
      throw std::invalid_argument("tabloid: rows must partition [1,n]");
  n_ = static_cast<int>(all.size());
}

Partition Tabloid::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_)
    if (!r.empty()) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

Tabloid Tabloid::apply(const Permutation& sigma) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (int& x : r) x = sigma(x);
  return Tabloid(std::move(rows));
}

std::string Tabloid::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += '{';
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(r[i]);
    }
    s += '}';
  }
  return s;
}

// ---- actions ----

PermutationAction::PermutationAction(int n, std::size_t points,
                                     std::vector<std::uint32_t> images)
    : n_(n), points_(points), images_(std::move(images)) {
  if (images_.size() != SymmetricGroup::of(n).order() * points)
    throw std::invalid_argument("PermutationAction: table size mismatch");
}

bool PermutationAction::is_action() const {
  // 1 acts trivially and (sigma s_t) x = sigma (s_t x) for every sigma and
  // adjacent s_t; by induction on length this gives (sigma tau) x =
  // sigma (tau x) for all pairs.
  const auto& g = SymmetricGroup::of(n_);
  for (std::size_t x = 0; x < points_; ++x)
    if (image(g.identity(), x) != x) return false;
  for (int t = 1; t < n_; ++t) {
    const std::size_t st = g.times_adjacent(g.identity(), t);
    for (std::size_t a = 0; a < g.order(); ++a) {
      const std::size_t at = g.times_adjacent(a, t);
      for (std::size_t x = 0; x < points_; ++x)
        if (image(at, x) != image(a, image(st, x))) return false;
    }
  }
  return true;
}

namespace {

// Row label of each entry: label[i-1] = row holding i.
std::uint64_t encode_labels(const std::vector<int>& label, int base) {
  std::uint64_t code = 0;
  for (int v : label) code = code * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(v);
  return code;
}

std::vector<Tabloid> tabloids_of(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<Tabloid> out;
  std::vector<std::vector<int>> rows;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int)> fill = [&](int r) {
    if (r == lambda.length()) {
      out.emplace_back(rows);
      return;
    }
    std::vector<int> cur;
    std::function<void(int)> choose = [&](int from) {
      if (static_cast<int>(cur.size()) == lambda[r]) {
        for (int x : cur) used[static_cast<std::size_t>(x)] = true;
        rows.push_back(cur);
        fill(r + 1);
        rows.pop_back();
        for (int x : cur) used[static_cast<std::size_t>(x)] = false;
        return;
      }
      for (int x = from; x <= n; ++x) {
        if (used[static_cast<std::size_t>(x)]) continue;
        cur.push_back(x);
        choose(x + 1);
        cur.pop_back();
      }
    };
    choose(1);
  };
  fill(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> labels_of(const Tabloid& t) {
  std::vector<int> label(static_cast<std::size_t>(t.n()));
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (int x : t.rows()[r]) label[static_cast<std::size_t>(x - 1)] = static_cast<int>(r);
  return label;
}

}  // namespace

// ---- Young modules ----

YoungModule::YoungModule(const Partition& lambda)
    : lambda_(lambda), basis_(tabloids_of(lambda)) {
  const int n = lambda.size();
  const auto& g = SymmetricGroup::of(n);
  const int base = std::max(lambda.length(), 1);
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::vector<int>> labels;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    labels.push_back(labels_of(basis_[k]));
    index.emplace(encode_labels(labels.back(), base), static_cast<std::uint32_t>(k));
  }
  const std::size_t d = basis_.size();
  std::vector<std::uint32_t> images(g.order() * d);
  std::vector<int> moved(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto& sigma = g.element(a);
    for (std::size_t x = 0; x < d; ++x) {
      // sigma moves entry i to sigma(i), keeping its row
      for (int i = 1; i <= n; ++i)
        moved[static_cast<std::size_t>(sigma(i) - 1)] = labels[x][static_cast<std::size_t>(i - 1)];
      images[a * d + x] = index.at(encode_labels(moved, base));
    }
  }
  action_ = PermutationAction(n, d, std::move(images));
}

std::size_t YoungModule::index_of(const Tabloid& t) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), t);
  if (it == basis_.end() || !(*it == t))
    throw std::invalid_argument("YoungModule::index_of: tabloid of another shape");
  return static_cast<std::size_t>(it - basis_.begin());
}

YoungFamily::YoungFamily(const PartitionSet& gamma) : gamma_(gamma) {
  for (const auto& lambda : gamma.members()) modules_.emplace_back(lambda);
}

std::size_t YoungFamily::dimension() const {
  std::size_t d = 0;
  for (const auto& m : modules_) d += m.dimension();
  return d;
}

YoungModule young_module(const Partition& lambda) { return YoungModule(lambda); }
YoungFamily young_family(const PartitionSet& gamma) { return YoungFamily(gamma); }

namespace {

std::vector<std::vector<int>> all_tuples(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(r), 1);
  if (r == 0) return {cur};
  for (;;) {
    out.push_back(cur);
    int k = r - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == n) cur[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
  }
  return out;
}

std::uint32_t tuple_index(const std::vector<int>& t, int n) {
  std::uint32_t code = 0;
  for (int v : t) code = code * static_cast<std::uint32_t>(n) + static_cast<std::uint32_t>(v - 1);
  return code;
}

}  // namespace

PermutationAction tensor_action(int n, int r) {
  const auto& g = SymmetricGroup::of(n);
  const auto words = all_tuples(n, r);
  std::vector<std::uint32_t> images(g.order() * words.size());
  std::vector<int> t(static_cast<std::size_t>(r));
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t x = 0; x < words.size(); ++x) {
      for (int k = 0; k < r; ++k)
        t[static_cast<std::size_t>(k)] = g.element(a)(words[x][static_cast<std::size_t>(k)]);
      images[a * words.size() + x] = tuple_index(t, n);
    }
  return PermutationAction(n, words.size(), std::move(images));
}

PermutationAction place_action(int n, int r) {
  const auto& g = SymmetricGroup::of(r);
  const auto words = all_tuples(n, r);
  std::vector<std::uint32_t> images(g.order() * words.size());
  std::vector<int> t(static_cast<std::size_t>(r));
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto& sigma = g.element(a);
    for (std::size_t x = 0; x < words.size(); ++x) {
      // entry at place k moves to place sigma(k)
      for (int k = 1; k <= r; ++k)
        t[static_cast<std::size_t>(sigma(k) - 1)] = words[x][static_cast<std::size_t>(k - 1)];
      images[a * words.size() + x] = tuple_index(t, n);
    }
  }
  return PermutationAction(r, words.size(), std::move(images));
}

IntMatrix representation_matrix(const AlgebraElement& x, const PermutationAction& a) {
  if (x.n() != a.n()) throw std::invalid_argument("representation_matrix: degree mismatch");
  const auto& g = SymmetricGroup::of(a.n());
  const Index d = static_cast<Index>(a.points());
  IntMatrix m = IntMatrix::Constant(d, d, BigInt(0));
  for (const auto& [sigma, c] : x.terms()) {
    const std::size_t s = g.index_of(sigma);
    for (std::size_t p = 0; p < a.points(); ++p)
      m(static_cast<Index>(a.image(s, p)), static_cast<Index>(p)) += c;
  }
  return m;
}

IntMatrix representation_matrix(const AlgebraElement& x, const YoungFamily& fam) {
  if (x.n() != fam.n()) throw std::invalid_argument("representation_matrix: degree mismatch");
  const Index d = static_cast<Index>(fam.dimension());
  IntMatrix m = IntMatrix::Constant(d, d, BigInt(0));
  Index off = 0;
  for (const auto& mod : fam.modules()) {
    const Index k = static_cast<Index>(mod.dimension());
    m.block(off, off, k, k) = representation_matrix(x, mod.action());
    off += k;
  }
  return m;
}

namespace {

template <typename Scalar>
bool annihilates_impl(const IntVector& x, const PermutationAction& a) {
  std::vector<std::pair<std::size_t, Scalar>> support;
  for (Index k = 0; k < x.size(); ++k)
    if (x(k) != 0) support.emplace_back(static_cast<std::size_t>(k), from_big<Scalar>(x(k)));
  std::vector<Scalar> out(a.points());
  for (std::size_t p = 0; p < a.points(); ++p) {
    std::fill(out.begin(), out.end(), Scalar(0));
    for (const auto& [s, c] : support) out[a.image(s, p)] += c;
    for (const auto& v : out)
      if (!is_zero(v)) return false;
  }
  return true;
}

}  // namespace

bool annihilates(const IntVector& x, const PermutationAction& a) {
  if (static_cast<std::size_t>(x.size()) != SymmetricGroup::of(a.n()).order())
    throw std::invalid_argument("annihilates: expected n! coordinates");
  return with_promotion([&]<typename S>() { return annihilates_impl<S>(x, a); });
}

std::vector<const PermutationAction*> actions_of(const YoungFamily& fam) {
  std::vector<const PermutationAction*> out;
  for (const auto& m : fam.modules()) out.push_back(&m.action());
  return out;
}

namespace {

int common_degree(const std::vector<const PermutationAction*>& actions) {
  if (actions.empty()) throw std::invalid_argument("no actions given");
  const int n = actions.front()->n();
  for (const auto* a : actions)
    if (a->n() != n) throw std::invalid_argument("actions of different degrees");
  return n;
}

// Constraint rows: for each action and source point p, and each target q,
// the indicator of {sigma : sigma p = q}. x acts as zero iff x is orthogonal
// to all of them.
class ConstraintStream {
 public:
  // Largest actions first: they usually cut the kernel down fastest.
  explicit ConstraintStream(const std::vector<const PermutationAction*>& actions)
      : actions_(actions), order_(SymmetricGroup::of(common_degree(actions)).order()) {
    std::stable_sort(actions_.begin(), actions_.end(),
                     [](const auto* a, const auto* b) { return a->points() > b->points(); });
  }

  // Calls emit(indices) for each constraint, starting at source point
  // `from` (counted across all actions). Stops when emit returns false and
  // returns the source point it stopped in.
  template <typename Emit>
  std::size_t run(std::size_t from, Emit&& emit) const {
    std::size_t pos = 0;
    for (const auto* a : actions_) {
      std::vector<std::vector<std::size_t>> buckets(a->points());
      for (std::size_t p = 0; p < a->points(); ++p, ++pos) {
        if (pos < from) continue;
        for (auto& b : buckets) b.clear();
        for (std::size_t s = 0; s < order_; ++s) buckets[a->image(s, p)].push_back(s);
        for (const auto& b : buckets)
          if (!b.empty() && !emit(b)) return pos;
      }
    }
    return pos;
  }

 private:
  std::vector<const PermutationAction*> actions_;
  std::size_t order_;
};

template <typename Scalar>
IntegerLattice annihilator_impl(const std::vector<const PermutationAction*>& actions,
                                std::optional<Index> predicted) {
  const Index order = static_cast<Index>(SymmetricGroup::of(common_degree(actions)).order());
  HermiteBuilder<Scalar> cons(order);
  ConstraintStream stream(actions);
  Index stop_rank = predicted ? order - *predicted : -1;

  std::size_t pos = 0;
  for (;;) {
    bool stopped = false;
    pos = stream.run(pos, [&](const std::vector<std::size_t>& idx) {
      RowVector<Scalar> v = RowVector<Scalar>::Zero(order);
      for (std::size_t s : idx) v(static_cast<Index>(s)) = Scalar(1);
      cons.insert(std::move(v));
      if (cons.rank() == order || cons.rank() == stop_rank) {
        stopped = true;
        return false;
      }
      return true;
    });
    if (cons.rank() == order) return IntegerLattice(order);
    const IntegerLattice k = kernel_lattice(scalar_cast<BigInt>(cons.basis()));
    if (!stopped) return k;
    // Stopped on the prediction: accept only if every kernel vector acts as 0.
    bool ok = true;
    for (Index i = 0; i < k.rank() && ok; ++i)
      for (const auto* a : actions)
        if (!annihilates(k.basis().row(i).transpose(), *a)) {
          ok = false;
          break;
        }
    if (ok) return k;
    stop_rank = -1;
  }
}

}  // namespace

IntegerLattice annihilator_lattice(const std::vector<const PermutationAction*>& actions,
                                   std::optional<Index> predicted_rank) {
  return with_promotion(
      [&]<typename S>() { return annihilator_impl<S>(actions, predicted_rank); });
}

PartitionSet annihilator_delta(const PartitionSet& gamma) {
  return conjugate(complement(coarsening_closure(gamma)));
}

IntegerLattice annihilator_lattice(const YoungFamily& fam) {
  std::optional<Index> predicted;
  if (is_cosaturated(coarsening_closure(fam.gamma())))
    predicted = static_cast<Index>(tableaux_square_sum(annihilator_delta(fam.gamma())));
  return annihilator_lattice(actions_of(fam), predicted);
}

namespace {

bool annihilates_mod_p(const std::vector<std::uint64_t>& x, const PermutationAction& a,
                       std::uint64_t p) {
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k]) support.push_back(k);
  std::vector<std::uint64_t> out(a.points());
  for (std::size_t q = 0; q < a.points(); ++q) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t s : support) {
      auto& o = out[a.image(s, q)];
      o = (o + x[s]) % p;
    }
    for (auto v : out)
      if (v) return false;
  }
  return true;
}

}  // namespace

Index annihilator_rank_mod_p(const std::vector<const PermutationAction*>& actions,
                             std::uint64_t p, std::optional<Index> predicted_dim) {
  if (!is_prime(p)) throw std::invalid_argument("annihilator_rank_mod_p: p must be prime");
  const Index order = static_cast<Index>(SymmetricGroup::of(common_degree(actions)).order());
  ModularEchelon e(order, p);
  ConstraintStream stream(actions);
  Index stop_rank = predicted_dim ? order - *predicted_dim : -1;
  std::size_t pos = 0;
  for (;;) {
    bool stopped = false;
    pos = stream.run(pos, [&](const std::vector<std::size_t>& idx) {
      std::vector<std::uint64_t> row(static_cast<std::size_t>(order), 0);
      for (std::size_t s : idx) row[s] = 1 % p;
      e.insert_reduced(std::move(row));
      if (e.rank() == order || e.rank() == stop_rank) {
        stopped = true;
        return false;
      }
      return true;
    });
    if (!stopped || e.rank() == order) return order - e.rank();
    // Stopped on the prediction: the true kernel is contained in this one,
    // with equality iff every basis vector acts as zero.
    bool ok = true;
    for (const auto& x : e.kernel_basis()) {
      for (const auto* a : actions)
        if (!annihilates_mod_p(x, *a, p)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) return order - e.rank();
    stop_rank = -1;
  }
}

Index annihilator_rank_mod_p(const YoungFamily& fam, std::uint64_t p) {
  std::optional<Index> predicted;
  if (is_cosaturated(coarsening_closure(fam.gamma())))
    predicted = static_cast<Index>(tableaux_square_sum(annihilator_delta(fam.gamma())));
  return annihilator_rank_mod_p(actions_of(fam), p, predicted);
}

// ---- images ----

namespace {

template <typename Scalar>
IntegerLattice image_impl(const std::vector<const PermutationAction*>& actions,
                          const std::vector<std::size_t>& elements) {
  Index dim = 0;
  for (const auto* a : actions) dim += static_cast<Index>(a->points() * a->points());
  HermiteBuilder<Scalar> b(dim);
  for (std::size_t s : elements) {
    RowVector<Scalar> v = RowVector<Scalar>::Zero(dim);
    Index off = 0;
    for (const auto* a : actions) {
      const std::size_t d = a->points();
      for (std::size_t p = 0; p < d; ++p)
        v(off + static_cast<Index>(a->image(s, p) * d + p)) = Scalar(1);
      off += static_cast<Index>(d * d);
    }
    b.insert(std::move(v));
  }
  return lattice_from_builder(b);
}

}  // namespace

IntegerLattice image_lattice(const std::vector<const PermutationAction*>& actions,
                             const std::vector<std::size_t>& elements) {
  common_degree(actions);
  return with_promotion([&]<typename S>() { return image_impl<S>(actions, elements); });
}

IntegerLattice image_lattice(const std::vector<const PermutationAction*>& actions) {
  std::vector<std::size_t> all(SymmetricGroup::of(common_degree(actions)).order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return image_lattice(actions, all);
}

namespace {
constexpr std::size_t kImageWidthLimit = 60000;
}  // namespace

ImageBasisReport image_basis_check(const PartitionSet& gamma) {
  ImageBasisReport r;
  r.gamma = gamma;
  r.closure = coarsening_closure(gamma);
  if (gamma.empty()) {
    r.precondition_message = "gamma is empty";
    return r;
  }
  if (!is_cosaturated(r.closure)) {
    r.precondition_message = "coarsening closure of gamma is not co-saturated";
    return r;
  }
  r.precondition_ok = true;
  const YoungFamily fam(gamma);
  const auto actions = actions_of(fam);
  const auto g = g_gamma_indices(r.closure);
  r.g_size = static_cast<Index>(g.size());
  r.predicted_rank = tableaux_square_sum(r.closure);
  std::size_t width = 0;
  for (const auto* a : actions) width += a->points() * a->points();
  if (width <= kImageWidthLimit) {
    r.method = "image";
    const IntegerLattice image = image_lattice(actions);
    const IntegerLattice g_image = image_lattice(actions, g);
    r.image_rank = image.rank();
    r.g_image_rank = g_image.rank();
    r.g_spans_image = g_image == image;
    return r;
  }
  // rho restricted to Z G is injective with the full image iff Z G is a
  // complement of the kernel.
  r.method = "kernel";
  const IntegerLattice ker = annihilator_lattice(fam);
  r.image_rank = static_cast<Index>(factorial(gamma.n())) - ker.rank();
  const auto cc = complement_check(ker, g);
  r.g_image_rank = cc.independent ? r.g_size : -1;
  r.g_spans_image = cc.spans;
  return r;
}

PresentationReport presentation_check(const PartitionSet& gamma) {
  PresentationReport r;
  r.gamma = gamma;
  r.closure = coarsening_closure(gamma);
  if (gamma.empty()) {
    r.precondition_message = "gamma is empty";
    return r;
  }
  if (!is_cosaturated(r.closure)) {
    r.precondition_message = "coarsening closure of gamma is not co-saturated";
    return r;
  }
  r.precondition_ok = true;
  r.delta = annihilator_delta(gamma);
  const int n = gamma.n();
  const YoungFamily fam(gamma);
  const auto actions = actions_of(fam);

  r.group_relations = true;
  for (const auto* a : actions) r.group_relations = r.group_relations && a->is_action();

  r.symmetrizer_relations = true;
  for (const auto& lambda : r.delta.members()) {
    const IntVector x = symmetrizer(BlockFamily::initial_intervals(lambda), true).coordinates();
    for (const auto* a : actions) r.symmetrizer_relations = r.symmetrizer_relations && annihilates(x, *a);
  }

  const IntegerLattice ker = annihilator_lattice(fam);
  r.kernel_rank = ker.rank();
  r.image_rank = static_cast<Index>(factorial(n)) - ker.rank();
  r.kernel_equals_ideal = ker == ideal_lattice(r.delta, true);
  r.predicted_image_rank = tableaux_square_sum(r.closure);
  return r;
}

// ---- tensor space ----

namespace {

// Orbit sizes on [1,n] of the stabilizer of point x.
Partition stabilizer_type(const PermutationAction& a, std::size_t x) {
  const int n = a.n();
  const auto& g = SymmetricGroup::of(n);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[static_cast<std::size_t>(v)] == v ? v
                                                    : parent[static_cast<std::size_t>(v)] =
                                                          find(parent[static_cast<std::size_t>(v)]);
  };
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (a.image(s, x) != x) continue;
    for (int i = 1; i <= n; ++i)
      parent[static_cast<std::size_t>(find(i - 1))] = find(g.element(s)(i) - 1);
  }
  std::vector<int> sizes(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) ++sizes[static_cast<std::size_t>(find(i))];
  std::vector<int> parts;
  for (int s : sizes)
    if (s) parts.push_back(s);
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

}  // namespace

DotyReport doty_kernel_check(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("doty_kernel_check: n, r >= 1");
  DotyReport rep;
  rep.n = n;
  rep.r = r;
  const PermutationAction a = tensor_action(n, r);
  rep.stabilizer_types = PartitionSet(n);
  for (std::size_t x = 0; x < a.points(); ++x) rep.stabilizer_types.insert(stabilizer_type(a, x));
  rep.closure = coarsening_closure(rep.stabilizer_types);

  const int k = n - r;
  PartitionSet expected(n), delta(n);
  for (const auto& lambda : partitions_of(n)) {
    if (lambda[0] >= k) expected.insert(lambda);
    if (lambda.length() < k) delta.insert(lambda);
  }
  rep.closure_matches = rep.closure == expected;
  rep.delta = delta;

  const IntegerLattice ker = annihilator_lattice({&a});
  rep.kernel_rank = ker.rank();
  rep.kernel_equals_ideal = ker == ideal_lattice(delta, true);

  const auto& g = SymmetricGroup::of(n);
  std::vector<std::size_t> words;
  for (std::size_t s = 0; s < g.order(); ++s)
    if (k <= 0 || has_increasing_of_length(word_of(g.element(s)), k)) words.push_back(s);
  rep.increasing_words = words.size();
  rep.basis_words_match = words == g_gamma_indices(rep.closure);
  const auto cc = complement_check(ker, words);
  rep.basis_spans = cc.spans;
  rep.basis_independent = cc.independent;
  return rep;
}

TensorPlaceReport tensor_place_check(int letters, int r) {
  if (letters < 1 || r < 1) throw std::invalid_argument("tensor_place_check: letters, r >= 1");
  TensorPlaceReport rep;
  rep.letters = letters;
  rep.r = r;
  const PermutationAction a = place_action(letters, r);
  const IntegerLattice ker = annihilator_lattice({&a});
  rep.kernel_rank = ker.rank();
  rep.quotient_rank = static_cast<Index>(factorial(r)) - ker.rank();

  const auto& g = SymmetricGroup::of(r);
  std::vector<std::size_t> idx;
  for (std::size_t s = 0; s < g.order(); ++s) {
    const Word w = word_of(g.element(s));
    if (longest_decreasing(w) <= letters) {
      idx.push_back(s);
      rep.basis_words.push_back(w);
    }
  }
  const auto cc = complement_check(ker, idx);
  rep.basis_spans = cc.spans;
  rep.basis_independent = cc.independent;

  rep.delta = PartitionSet(r);
  for (const auto& mu : partitions_of(r))
    if (mu[0] > letters) rep.delta.insert(mu);
  rep.kernel_equals_ideal = ker == ideal_lattice(rep.delta, true);
  return rep;
}

}  // namespace symideal
