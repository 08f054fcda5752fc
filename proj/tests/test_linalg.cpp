#include "doctest.h"

#include "symideal/hermite.hpp"
#include "symideal/lattice.hpp"
#include "symideal/matrix.hpp"

#include <random>
#include <set>
#include <sstream>

using namespace symideal;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Rank by fraction-free (Bareiss) elimination with row pivoting.
Index bareiss_rank(IntMatrix a) {
  const Index rows = a.rows(), cols = a.cols();
  BigInt prev = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    a.row(r).swap(a.row(piv));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

// Random row operations with determinant +-1.
IntMatrix unimodular_mix(IntMatrix m, std::mt19937_64& rng, int steps) {
  const Index rows = m.rows();
  if (rows < 2) return -m;
  std::uniform_int_distribution<Index> pick(0, rows - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int s = 0; s < steps; ++s) {
    const Index i = pick(rng), j = pick(rng);
    if (i == j) {
      m.row(i) = -m.row(i);
    } else if (s % 5 == 0) {
      m.row(i).swap(m.row(j));
    } else {
      m.row(i) += BigInt(coef(rng)) * m.row(j);
    }
  }
  return m;
}

IntVector vec(std::initializer_list<long> v) {
  IntVector out(static_cast<Index>(v.size()));
  Index k = 0;
  for (long x : v) out(k++) = x;
  return out;
}

}  // namespace

TEST_CASE("Checked64 overflow and promotion") {
  const Checked64 big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(big + Checked64(1), IntegerOverflow);
  CHECK_THROWS_AS(big * Checked64(2), IntegerOverflow);
  CHECK_THROWS_AS(-Checked64(std::numeric_limits<std::int64_t>::min()), IntegerOverflow);
  CHECK((Checked64(-7) / Checked64(2)).value() == -3);
  CHECK(floor_div(Checked64(-7), Checked64(2)).value() == -4);
  const auto g = extended_gcd(BigInt(240), BigInt(46));
  CHECK(g.g == 2);
  CHECK(g.x * 240 + g.y * 46 == 2);

  int attempts = 0;
  const BigInt result = with_promotion([&]<typename S>() {
    ++attempts;
    S x = S(std::numeric_limits<std::int64_t>::max() / 2);
    return to_big(x * S(4));
  });
  CHECK(attempts == 2);
  CHECK(result == BigInt(std::numeric_limits<std::int64_t>::max() / 2) * 4);
}

TEST_CASE("hnf of small matrices") {
  const IntMatrix id = identity_matrix(3);
  CHECK(equal_matrices(hnf(id).basis(), id));

  const IntegerLattice l = hnf(matrix_from_rows({{2, 0}, {0, 3}, {1, 1}}));
  CHECK(l.rank() == 2);
  CHECK(equals_full(l));  // 2x2 minors 6, 2, -3 have gcd 1

  const IntegerLattice one = hnf(matrix_from_rows({{6, 10, 15}}));
  CHECK(one.rank() == 1);
  CHECK(equal_matrices(one.basis(), matrix_from_rows({{6, 10, 15}})));
  CHECK(equal_matrices(hnf(matrix_from_rows({{-6, -10, -15}})).basis(), one.basis()));

  const IntegerLattice zero = hnf(IntMatrix::Zero(2, 4));
  CHECK(zero.is_zero());
  CHECK(zero.ambient_dim() == 4);
}

TEST_CASE("hnf index against brute-force membership in a box") {
  // Lattice spanned by the rows; count lattice points of a fundamental box.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix m = random_matrix(rng, 3, 2, -4, 4);
    const IntegerLattice l = hnf(m);
    if (l.rank() < 2) continue;
    const BigInt index = abs(l.basis()(0, 0) * l.basis()(1, 1));
    // Points of Z^2 in [0,D)^2 lying in L, D a multiple of the index.
    const long dd = static_cast<long>(index);
    long hits = 0;
    for (long x = 0; x < dd; ++x)
      for (long y = 0; y < dd; ++y) hits += contains(l, vec({x, y}));
    CHECK(BigInt(hits) * index == BigInt(dd * dd));
  }
}

TEST_CASE("hnf canonicity under random unimodular mixing") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Index rows = 1 + trial % 6, cols = 2 + trial % 7;
    const IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
    const IntegerLattice a = hnf(unimodular_mix(m, rng, 30));
    const IntegerLattice b = hnf(unimodular_mix(m, rng, 30));
    CHECK(a == b);
    CHECK(a == hnf(m));
  }
}

TEST_CASE("rank against Bareiss elimination") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 50), cols = 1 + static_cast<Index>(rng() % 50);
    IntMatrix m = random_matrix(rng, rows, cols, -5, 5);
    // force some dependence
    if (rows > 3) m.row(rows - 1) = m.row(0) * BigInt(3) - m.row(1);
    CHECK(rank(m) == bareiss_rank(m));
    CHECK(hnf(m).rank() == bareiss_rank(m));
  }
  CHECK(rank(IntMatrix::Zero(3, 3)) == 0);
  CHECK(rank(identity_matrix(5)) == 5);
}

TEST_CASE("Smith normal form") {
  auto diag = snf_diagonal(diagonal_matrix({2, 3}));
  CHECK(diag == std::vector<BigInt>{1, 6});
  diag = snf_diagonal(identity_matrix(4));
  CHECK(diag == std::vector<BigInt>{1, 1, 1, 1});
  std::mt19937_64 rng(3);
  const IntMatrix mixed = unimodular_mix(diagonal_matrix({1, 2, 0, 0}), rng, 40);
  // column operations too, via transposes
  const IntMatrix both = unimodular_mix(IntMatrix(mixed.transpose()), rng, 40).transpose();
  CHECK(snf_diagonal(both) == std::vector<BigInt>{1, 2, 0, 0});
  CHECK(snf_diagonal(matrix_from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) ==
        std::vector<BigInt>{2, 6, 12});
}

TEST_CASE("rank mod p") {
  CHECK(rank_mod_p(identity_matrix(4), 2) == 4);
  CHECK(rank_mod_p(diagonal_matrix({2, 3}), 2) == 1);
  CHECK(rank_mod_p(diagonal_matrix({2, 3}), 3) == 1);
  CHECK(rank_mod_p(diagonal_matrix({2, 3}), 5) == 2);
  CHECK(rank(diagonal_matrix({2, 3})) == 2);
  CHECK(rank_mod_p(IntMatrix::Zero(2, 2), 7) == 0);
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK_THROWS(rank_mod_p(identity_matrix(2), 4));
}

TEST_CASE("modular echelon kernel") {
  std::mt19937_64 rng(8);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    const IntMatrix m = random_matrix(rng, 4, 7, -6, 6);
    ModularEchelon e(7, p);
    for (Index i = 0; i < m.rows(); ++i) {
      std::vector<std::int64_t> row;
      for (Index j = 0; j < 7; ++j) row.push_back(static_cast<std::int64_t>(m(i, j)));
      e.insert(row);
    }
    CHECK(e.rank() == rank_mod_p(m, p));
    const auto ker = e.kernel_basis();
    CHECK(static_cast<Index>(ker.size()) == 7 - e.rank());
    for (const auto& k : ker)
      for (Index i = 0; i < m.rows(); ++i) {
        BigInt dot = 0;
        for (Index j = 0; j < 7; ++j) dot += m(i, j) * BigInt(k[static_cast<std::size_t>(j)]);
        CHECK(reduce_mod(dot, p) == 0);
      }
  }
}

TEST_CASE("lattice sum and intersection") {
  const IntegerLattice x = hnf(matrix_from_rows({{1, 0}}));
  const IntegerLattice y = hnf(matrix_from_rows({{0, 1}}));
  CHECK(equals_full(lattice_sum(x, y)));
  CHECK(lattice_intersection(x, y).is_zero());
  CHECK(lattice_sum(x, x) == x);
  CHECK(lattice_intersection(x, x) == x);

  const IntegerLattice two = hnf(matrix_from_rows({{2}}));
  CHECK_FALSE(is_pure(two));
  CHECK(is_pure(hnf(matrix_from_rows({{2, 3}}))));
  CHECK_FALSE(is_pure(hnf(matrix_from_rows({{2, 4}}))));
  CHECK_THROWS(lattice_sum(x, two));

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const Index dim = 3 + trial % 5;
    const IntegerLattice a = hnf(random_matrix(rng, 1 + trial % 4, dim, -4, 4));
    const IntegerLattice b = hnf(random_matrix(rng, 1 + (trial / 2) % 4, dim, -4, 4));
    const IntegerLattice s = lattice_sum(a, b);
    const IntegerLattice i = lattice_intersection(a, b);
    CHECK(a.rank() + b.rank() == s.rank() + i.rank());
    for (Index r = 0; r < i.rank(); ++r) {
      CHECK(contains(a, i.basis().row(r)));
      CHECK(contains(b, i.basis().row(r)));
    }
    for (Index r = 0; r < a.rank(); ++r) CHECK(contains(s, a.basis().row(r)));
  }
}

TEST_CASE("membership against small-coefficient enumeration") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix gens = random_matrix(rng, 2, 3, -3, 3);
    const IntegerLattice l = hnf(gens);
    // everything with coefficients in [-2,2] is in L
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        const IntVector v = BigInt(a) * gens.row(0) + BigInt(b) * gens.row(1);
        CHECK(contains(l, v));
      }
    // small vectors: contains() agrees with enumeration of combinations
    // whose coefficients are bounded (by Cramer, |coef| <= 40 suffices here).
    std::set<std::vector<long>> reach;
    for (int a = -40; a <= 40; ++a)
      for (int b = -40; b <= 40; ++b) {
        std::vector<long> v;
        for (Index j = 0; j < 3; ++j) v.push_back(static_cast<long>(BigInt(a) * gens(0, j) + BigInt(b) * gens(1, j)));
        reach.insert(v);
      }
    if (l.rank() < 2) continue;
    for (long x = -2; x <= 2; ++x)
      for (long y = -2; y <= 2; ++y)
        for (long z = -2; z <= 2; ++z) CHECK(contains(l, vec({x, y, z})) == reach.count({x, y, z}) > 0);
  }
}

TEST_CASE("purity agrees with ranks mod the primes dividing the divisors") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = random_matrix(rng, 2 + trial % 3, 5, -3, 3);
    if (trial % 3 == 0) m.row(0) *= BigInt(2 + trial % 4);
    const IntegerLattice l = hnf(m);
    const auto d = snf_diagonal(l.basis());
    bool ranks_agree = true;
    for (const auto& e : d) {
      if (e == 0) continue;
      std::uint64_t rest = static_cast<std::uint64_t>(e);
      for (std::uint64_t p = 2; rest > 1; ++p)
        if (rest % p == 0) {
          ranks_agree = ranks_agree && rank_mod_p(l.basis(), p) == l.rank();
          while (rest % p == 0) rest /= p;
        }
    }
    CHECK(is_pure(l) == ranks_agree);
  }
}

TEST_CASE("kernels") {
  const IntMatrix a = matrix_from_rows({{1, 2, 3}, {4, 5, 6}});
  const IntegerLattice k = kernel_lattice(a);
  CHECK(k.rank() == 1);
  CHECK(is_zero_matrix(IntMatrix(a * k.basis().transpose())));
  CHECK(equal_matrices(k.basis(), matrix_from_rows({{1, -2, 1}})));
  const IntegerLattice lk = left_kernel(a.transpose());
  CHECK(lk == k);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const IntMatrix m = random_matrix(rng, 3 + trial % 4, 8, -4, 4);
    const IntegerLattice ker = kernel_lattice(m);
    CHECK(ker.rank() + rank(m) == 8);
    CHECK(is_pure(ker));
    CHECK(is_zero_matrix(IntMatrix(m * ker.basis().transpose())));
  }
}

TEST_CASE("projection and sign change") {
  const IntegerLattice l = hnf(matrix_from_rows({{1, 1, 0}, {0, 2, 1}}));
  const std::vector<Index> cols = {1, 2};
  const IntegerLattice p = project(l, cols);
  CHECK(p.ambient_dim() == 2);
  CHECK(p == hnf(matrix_from_rows({{1, 0}, {2, 1}})));
  const std::vector<int> signs = {1, -1, 1};
  const IntegerLattice s = apply_signs(l, signs);
  CHECK(contains(s, vec({1, -1, 0})));
  CHECK(apply_signs(s, signs) == l);
}

TEST_CASE("incremental builder agrees with batch hnf and survives save/load") {
  std::mt19937_64 rng(43);
  const IntMatrix m = random_matrix(rng, 12, 9, -20, 20);
  HermiteBuilder<BigInt> b(9);
  for (Index i = 0; i < 6; ++i) b.insert(m.row(i));
  std::stringstream ss;
  b.save(ss);
  auto restored = HermiteBuilder<BigInt>::load(ss);
  for (Index i = 6; i < 12; ++i) restored.insert(m.row(i));
  CHECK(lattice_from_builder(restored) == hnf(m));
  CHECK(restored.contains(m.row(3)));

  // The machine-word builder either matches or reports overflow.
  const IntegerLattice viaPromotion = with_promotion([&]<typename S>() {
    HermiteBuilder<S> c(9);
    for (Index i = 0; i < 12; ++i) c.insert(scalar_cast<S>(IntVector(m.row(i))));
    return lattice_from_builder(c);
  });
  CHECK(viaPromotion == hnf(m));
  const IntMatrix small = random_matrix(rng, 6, 5, -2, 2);
  HermiteBuilder<Checked64> c(5);
  for (Index i = 0; i < 6; ++i) c.insert(scalar_cast<Checked64>(IntVector(small.row(i))));
  CHECK(lattice_from_builder(c) == hnf(small));

  std::stringstream bad("hermite-builder 2 3 0");
  CHECK_THROWS(HermiteBuilder<BigInt>::load(bad));
}

TEST_CASE("matrix text round trip") {
  const IntMatrix m = matrix_from_rows({{1, -2, 3}, {0, 40, 5}});
  std::stringstream ss;
  write_matrix(ss, m);
  CHECK(ss.str().rfind("2 3\n", 0) == 0);
  CHECK(equal_matrices(read_matrix(ss), m));
  IntMatrix huge(1, 1);
  huge(0, 0) = BigInt("123456789012345678901234567890");
  std::stringstream s2;
  write_matrix(s2, huge);
  CHECK(equal_matrices(read_matrix(s2), huge));
}
