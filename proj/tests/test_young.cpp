#include "doctest.h"

#include "symideal/ideal.hpp"
#include "symideal/rsk.hpp"
#include "symideal/young_module.hpp"

#include <random>

using namespace symideal;

namespace {

std::size_t multinomial(const Partition& l) {
  std::size_t d = factorial(l.size());
  for (int p : l.parts()) d /= factorial(p);
  return d;
}

// Rows are the flattened matrices rho(sigma); the annihilator is the left
// kernel of that matrix.
IntMatrix flattened_rho(const std::vector<const PermutationAction*>& actions) {
  const int n = actions.front()->n();
  const auto& g = SymmetricGroup::of(n);
  Index width = 0;
  for (const auto* a : actions) width += static_cast<Index>(a->points() * a->points());
  IntMatrix m = IntMatrix::Zero(static_cast<Index>(g.order()), width);
  for (std::size_t s = 0; s < g.order(); ++s) {
    Index off = 0;
    for (const auto* a : actions) {
      const std::size_t d = a->points();
      for (std::size_t x = 0; x < d; ++x) m(static_cast<Index>(s), off + static_cast<Index>(a->image(s, x) * d + x)) = 1;
      off += static_cast<Index>(d * d);
    }
  }
  return m;
}

std::vector<PartitionSet> eligible_gammas(int n) {
  std::vector<PartitionSet> out;
  const std::size_t k = partitions_of(n).size();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
    auto g = PartitionSet::from_mask(n, m);
    if (is_cosaturated(coarsening_closure(g))) out.push_back(g);
  }
  return out;
}

AlgebraElement random_element(int n, std::mt19937_64& rng) {
  const auto& g = SymmetricGroup::of(n);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  AlgebraElement x(n);
  for (int k = 0; k < 5; ++k) x.add_term(g.element(pick(rng)), coef(rng));
  return x;
}

}  // namespace

TEST_CASE("tabloids") {
  const Tabloid t({{3, 1}, {2}});
  CHECK(t.rows()[0] == std::vector<int>{1, 3});
  CHECK(t.shape() == Partition{2, 1});
  CHECK(t.to_string() == "{1,3}{2}");
  CHECK(t.apply(Permutation{2, 3, 1}).to_string() == "{1,2}{3}");
}

TEST_CASE("Young module dimensions and tables") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n)) {
      const YoungModule m(l);
      CHECK(m.dimension() == multinomial(l));
      CHECK(std::is_sorted(m.basis().begin(), m.basis().end()));
      if (n > 5) continue;
      CHECK(m.action().is_action());
      // every table entry agrees with moving the entries of the tabloid
      const auto& g = SymmetricGroup::of(n);
      for (std::size_t s = 0; s < g.order(); ++s)
        for (std::size_t x = 0; x < m.dimension(); ++x)
          CHECK(m.basis()[m.action().image(s, x)] == m.basis()[x].apply(g.element(s)));
    }
}

TEST_CASE("is_action against all pairs") {
  const YoungModule m(Partition{2, 1, 1});
  const auto& a = m.action();
  const auto& g = SymmetricGroup::of(4);
  for (std::size_t s = 0; s < g.order(); ++s)
    for (std::size_t t = 0; t < g.order(); ++t)
      for (std::size_t x = 0; x < a.points(); ++x)
        CHECK(a.image(g.compose(s, t), x) == a.image(s, a.image(t, x)));
  // a table that is not an action: everything swaps points 0 and 1
  std::vector<std::uint32_t> bad(g.order() * 2);
  for (std::size_t s = 0; s < g.order(); ++s) {
    bad[s * 2] = s == 0 ? 0 : 1;
    bad[s * 2 + 1] = s == 0 ? 1 : 0;
  }
  CHECK_FALSE(PermutationAction(4, 2, bad).is_action());
}

TEST_CASE("stabilizer of the initial tabloid is the Young subgroup") {
  for (const auto& l : partitions_of(5)) {
    const YoungModule m(l);
    const auto& g = SymmetricGroup::of(5);
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int p : l.parts()) {
      rows.emplace_back();
      for (int k = 0; k < p; ++k) rows.back().push_back(next++);
    }
    const std::size_t x = m.index_of(Tabloid(rows));
    std::size_t stab = 0;
    for (std::size_t s = 0; s < g.order(); ++s) stab += m.action().image(s, x) == x;
    CHECK(stab == BlockFamily::initial_intervals(l).subgroup_order());
  }
}

TEST_CASE("representation matrices are multiplicative") {
  std::mt19937_64 rng(3);
  const YoungFamily fam(PartitionSet::parse("3,1;2,2"));
  CHECK(fam.dimension() == 4 + 6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_element(4, rng), y = random_element(4, rng);
    const IntMatrix rx = representation_matrix(x, fam), ry = representation_matrix(y, fam);
    CHECK(equal_matrices(IntMatrix(rx * ry), representation_matrix(x * y, fam)));
  }
  const IntMatrix one = representation_matrix(AlgebraElement::one(4), fam);
  CHECK(equal_matrices(one, identity_matrix(10)));
}

TEST_CASE("tensor and place actions") {
  const auto t = tensor_action(3, 2);
  CHECK(t.points() == 9);
  CHECK(t.is_action());
  const auto p = place_action(2, 4);
  CHECK(p.points() == 16);
  CHECK(p.n() == 4);
  CHECK(p.is_action());
}

TEST_CASE("annihilator against the left kernel of the flattened representation") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& gamma : eligible_gammas(n)) {
      const YoungFamily fam(gamma);
      const auto actions = actions_of(fam);
      const IntMatrix m = flattened_rho(actions);
      const IntegerLattice ref = left_kernel(m);
      CHECK(annihilator_lattice(fam) == ref);
      CHECK(annihilator_lattice(actions) == ref);
      for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        const Index ref_dim = static_cast<Index>(factorial(n)) - rank_mod_p(m, p);
        CHECK(annihilator_rank_mod_p(fam, p) == ref_dim);
        CHECK(annihilator_rank_mod_p(actions, p) == ref_dim);
      }
      CHECK(image_lattice(actions).rank() == rank(m));
    }
}

TEST_CASE("annihilator of a family is the signed ideal") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& gamma : eligible_gammas(n)) {
      const YoungFamily fam(gamma);
      const PartitionSet delta = annihilator_delta(gamma);
      const IntegerLattice ann = annihilator_lattice(fam);
      CHECK(ann == ideal_lattice(delta, true));
      CHECK(BigInt(ann.rank()) == tableaux_square_sum(delta));
      for (Index r = 0; r < ann.rank(); r += 7)
        for (const auto* a : actions_of(fam)) CHECK(annihilates(ann.basis().row(r), *a));
    }
}

TEST_CASE("without a co-saturated closure the annihilator is not the signed ideal") {
  const PartitionSet gamma = PartitionSet::parse("2,2,1");
  CHECK_FALSE(is_cosaturated(coarsening_closure(gamma)));
  const YoungFamily fam(gamma);
  const IntegerLattice ann = annihilator_lattice(fam);
  CHECK(ann.rank() == 17);
  CHECK_FALSE(ann == ideal_lattice(annihilator_delta(gamma), true));
  // Z Sym(5)/Ann has 2-torsion here: the F_2 kernel is larger.
  CHECK(annihilator_rank_mod_p(fam, 2) == 18);
  CHECK(annihilator_rank_mod_p(fam, 3) == 17);
}

TEST_CASE("signed symmetrizers of delta act as zero") {
  for (const auto& gamma : eligible_gammas(4)) {
    const YoungFamily fam(gamma);
    for (const auto& l : annihilator_delta(gamma)) {
      const auto h = symmetrizer(BlockFamily::initial_intervals(l), true);
      for (const auto* a : actions_of(fam)) CHECK(annihilates(h.coordinates(), *a));
      CHECK(is_zero_matrix(representation_matrix(h, fam)));
    }
  }
}

TEST_CASE("annihilator delta") {
  CHECK(annihilator_delta(PartitionSet::parse("3,1")).to_string() == "4;3,1;2,2");
  CHECK(annihilator_delta(PartitionSet::parse("3,1;2,2")).to_string() == "4;3,1");
  CHECK(annihilator_delta(PartitionSet::all(4)).empty());
}

TEST_CASE("image basis and presentation") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& gamma : eligible_gammas(n)) {
      const ImageBasisReport ib = image_basis_check(gamma);
      CHECK(ib.passed());
      CHECK(ib.method == "image");
      const PresentationReport pr = presentation_check(gamma);
      CHECK(pr.passed());
    }
  const ImageBasisReport wide = image_basis_check(PartitionSet::parse("2,1,1,1,1"));
  CHECK(wide.method == "kernel");
  CHECK(wide.passed());
  CHECK(wide.g_size == 719);  // the closure is every shape but (1,1,1,1,1,1)
}

TEST_CASE("place permutations on [2]^r and [3]^4") {
  for (int r = 1; r <= 5; ++r) {
    const TensorPlaceReport t = tensor_place_check(2, r);
    CHECK(t.passed());
    std::size_t avoid = 0;
    for (const auto& w : all_words(r)) avoid += no_decreasing_exceeding(w, 2);
    CHECK(static_cast<std::size_t>(t.quotient_rank) == avoid);
  }
  CHECK(tensor_place_check(2, 4).quotient_rank == 14);
  const TensorPlaceReport t3 = tensor_place_check(3, 4);
  CHECK(t3.passed());
  CHECK(t3.quotient_rank == 23);
}

TEST_CASE("Sym(n) on [n]^r") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 2}, {4, 3}, {5, 2}}) {
    const DotyReport d = doty_kernel_check(n, r);
    CHECK(d.passed());
    CHECK(d.increasing_words == g_gamma_indices(d.closure).size());
  }
  const DotyReport d = doty_kernel_check(4, 2);
  CHECK(d.stabilizer_types.to_string() == "3,1;2,1,1");
  CHECK(d.delta.to_string() == "4");  // length below n - r = 2
  CHECK(d.closure.size() == 4);       // all of Par(4) but (1,1,1,1)
}
