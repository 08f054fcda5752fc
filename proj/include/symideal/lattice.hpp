#pragma once

#include "symideal/hermite.hpp"
#include "symideal/matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace symideal {

/// Subgroup of Z^N held as its canonical row Hermite basis. The zero lattice
/// has an empty basis and keeps its ambient dimension.
class IntegerLattice {
 public:
  explicit IntegerLattice(Index ambient_dim = 0)
      : dim_(ambient_dim), basis_(0, ambient_dim) {}

  /// `basis` must already be in canonical Hermite form.
  static IntegerLattice from_canonical(IntMatrix basis) {
    IntegerLattice l(basis.cols());
    l.basis_ = std::move(basis);
    return l;
  }

  static IntegerLattice full(Index ambient_dim);

  Index ambient_dim() const { return dim_; }
  Index rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  bool is_zero() const { return basis_.rows() == 0; }

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.dim_ == b.dim_ && equal_matrices(a.basis_, b.basis_);
  }

 private:
  Index dim_;
  IntMatrix basis_;
};

/// Canonical Hermite basis of the row space of `m`.
IntegerLattice hnf(const IntMatrix& m);

template <typename Scalar>
IntegerLattice lattice_from_builder(HermiteBuilder<Scalar>& b) {
  if constexpr (std::is_same_v<Scalar, BigInt>)
    return IntegerLattice::from_canonical(b.basis());
  else
    return IntegerLattice::from_canonical(scalar_cast<BigInt>(b.basis()));
}

/// Elementary divisors d1 | d2 | ..., min(rows, cols) of them, zeros last.
std::vector<BigInt> snf_diagonal(const IntMatrix& m);

Index rank(const IntMatrix& m);

bool is_prime(std::uint64_t p);

/// Rank of the reduction of `m` modulo the prime `p` (p < 2^63).
Index rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Gaussian elimination over F_p with rows folded in one at a time.
class ModularEchelon {
 public:
  ModularEchelon(Index dim, std::uint64_t p);

  /// Reduces `row` (entries taken mod p) and keeps it if independent.
  bool insert(std::span<const std::int64_t> row);
  bool insert_reduced(std::vector<std::uint64_t> row);

  Index rank() const { return static_cast<Index>(pivots_.size()); }
  Index dim() const { return dim_; }
  /// Basis of {x : r . x = 0 for every stored row r}, one vector per
  /// non-pivot column.
  std::vector<std::vector<std::uint64_t>> kernel_basis() const;
  std::uint64_t modulus() const { return p_; }

 private:
  Index dim_;
  std::uint64_t p_;
  std::vector<int> slot_;
  std::vector<std::vector<std::uint64_t>> rows_;  // normalized: pivot entry 1
  std::vector<Index> pivots_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t reduce_mod(const BigInt& a, std::uint64_t p);

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b);
IntegerLattice lattice_intersection(const IntegerLattice& a,
                                    const IntegerLattice& b);
bool contains(const IntegerLattice& l, const IntVector& v);
bool is_pure(const IntegerLattice& l);
bool equals_full(const IntegerLattice& l);

/// Basis (canonical) of {y : y * a = 0}.
IntegerLattice left_kernel(const IntMatrix& a);

/// {x : a * x^T = 0} as a lattice in Z^cols.
IntegerLattice kernel_lattice(const IntMatrix& a);

/// Image of `l` under the coordinate projection onto `columns` (in order).
IntegerLattice project(const IntegerLattice& l, std::span<const Index> columns);

/// Image of `l` under the diagonal sign change x_j -> signs[j] * x_j.
IntegerLattice apply_signs(const IntegerLattice& l, std::span<const int> signs);

}  // namespace symideal
