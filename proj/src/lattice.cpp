#include "symideal/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace symideal {

namespace {

void require_same_dim(const IntegerLattice& a, const IntegerLattice& b,
                      const char* what) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

template <typename Scalar>
IntegerLattice hnf_of(const IntMatrix& m) {
  HermiteBuilder<Scalar> b(m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    RowVector<Scalar> r(m.cols());
    for (Index j = 0; j < m.cols(); ++j) r(j) = from_big<Scalar>(m(i, j));
    b.insert(std::move(r));
    if (b.is_full()) break;
  }
  return lattice_from_builder(b);
}

}  // namespace

IntegerLattice IntegerLattice::full(Index ambient_dim) {
  return from_canonical(identity_matrix(ambient_dim));
}

IntegerLattice hnf(const IntMatrix& m) {
  return with_promotion([&]<typename S>() { return hnf_of<S>(m); });
}

std::vector<BigInt> snf_diagonal(const IntMatrix& m) {
  IntMatrix a = m;
  const Index rows = a.rows(), cols = a.cols();
  const Index k_max = std::min(rows, cols);
  std::vector<BigInt> diag;
  for (Index k = 0; k < k_max; ++k) {
    for (;;) {
      // smallest nonzero entry of the trailing block
      Index pi = -1, pj = -1;
      for (Index i = k; i < rows; ++i)
        for (Index j = k; j < cols; ++j)
          if (!a(i, j).is_zero() &&
              (pi < 0 || boost::multiprecision::abs(a(i, j)) <
                             boost::multiprecision::abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        diag.resize(static_cast<std::size_t>(k_max), BigInt(0));
        return diag;
      }
      a.row(k).swap(a.row(pi));
      a.col(k).swap(a.col(pj));
      bool clear = true;
      for (Index i = k + 1; i < rows; ++i) {
        if (a(i, k).is_zero()) continue;
        const BigInt q = floor_div(a(i, k), a(k, k));
        a.row(i) -= q * a.row(k);
        if (!a(i, k).is_zero()) clear = false;
      }
      for (Index j = k + 1; j < cols; ++j) {
        if (a(k, j).is_zero()) continue;
        const BigInt q = floor_div(a(k, j), a(k, k));
        a.col(j) -= q * a.col(k);
        if (!a(k, j).is_zero()) clear = false;
      }
      if (!clear) continue;
      Index bad = -1;
      for (Index i = k + 1; i < rows && bad < 0; ++i)
        for (Index j = k + 1; j < cols; ++j)
          if (!(a(i, j) % a(k, k)).is_zero()) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      a.row(k) += a.row(bad);
    }
    diag.push_back(boost::multiprecision::abs(a(k, k)));
  }
  return diag;
}

Index rank(const IntMatrix& m) { return hnf(m).rank(); }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (p % q == 0) return p == q;
  }
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, p);
      if (x == p - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t reduce_mod(const BigInt& a, std::uint64_t p) {
  BigInt r = a % BigInt(p);
  if (r.sign() < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

ModularEchelon::ModularEchelon(Index dim, std::uint64_t p)
    : dim_(dim), p_(p), slot_(static_cast<std::size_t>(dim), -1) {
  if (!is_prime(p) || p >= (1ull << 63))
    throw std::invalid_argument("modulus must be a prime below 2^63");
}

bool ModularEchelon::insert(std::span<const std::int64_t> row) {
  if (static_cast<Index>(row.size()) != dim_)
    throw std::invalid_argument("ModularEchelon::insert: dimension mismatch");
  std::vector<std::uint64_t> r(row.size());
  const auto sp = static_cast<std::int64_t>(p_);
  for (std::size_t j = 0; j < row.size(); ++j) {
    std::int64_t v = row[j] % sp;
    if (v < 0) v += sp;
    r[j] = static_cast<std::uint64_t>(v);
  }
  return insert_reduced(std::move(r));
}

bool ModularEchelon::insert_reduced(std::vector<std::uint64_t> r) {
  if (rank() == dim_) return false;
  for (Index c = 0; c < dim_; ++c) {
    const auto cu = static_cast<std::size_t>(c);
    if (r[cu] == 0) continue;
    const int s = slot_[cu];
    if (s < 0) {
      const std::uint64_t inv = pow_mod(r[cu], p_ - 2, p_);
      for (std::size_t j = cu; j < r.size(); ++j) r[j] = mul_mod(r[j], inv, p_);
      slot_[cu] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(r));
      pivots_.push_back(c);
      return true;
    }
    const auto& p = rows_[static_cast<std::size_t>(s)];
    const std::uint64_t f = r[cu];
    for (std::size_t j = cu; j < r.size(); ++j) {
      if (p[j] == 0) continue;
      const std::uint64_t t = mul_mod(f, p[j], p_);
      r[j] = r[j] >= t ? r[j] - t : r[j] + p_ - t;
    }
  }
  return false;
}

std::vector<std::vector<std::uint64_t>> ModularEchelon::kernel_basis() const {
  // Reduced echelon form, pivots in increasing column order.
  std::vector<Index> cols = pivots_;
  std::sort(cols.begin(), cols.end());
  std::vector<std::vector<std::uint64_t>> rref;
  for (Index c : cols) rref.push_back(rows_[static_cast<std::size_t>(slot_[static_cast<std::size_t>(c)])]);
  for (std::size_t j = rref.size(); j-- > 0;) {
    const auto cj = static_cast<std::size_t>(cols[j]);
    for (std::size_t i = 0; i < j; ++i) {
      const std::uint64_t f = rref[i][cj];
      if (f == 0) continue;
      for (std::size_t k = cj; k < rref[i].size(); ++k) {
        const std::uint64_t t = mul_mod(f, rref[j][k], p_);
        rref[i][k] = rref[i][k] >= t ? rref[i][k] - t : rref[i][k] + p_ - t;
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> out;
  for (Index f = 0; f < dim_; ++f) {
    if (slot_[static_cast<std::size_t>(f)] >= 0) continue;
    std::vector<std::uint64_t> x(static_cast<std::size_t>(dim_), 0);
    x[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < rref.size(); ++i) {
      const std::uint64_t v = rref[i][static_cast<std::size_t>(f)];
      x[static_cast<std::size_t>(cols[i])] = v == 0 ? 0 : p_ - v;
    }
    out.push_back(std::move(x));
  }
  return out;
}

Index rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  ModularEchelon e(m.cols(), p);
  for (Index i = 0; i < m.rows(); ++i) {
    std::vector<std::uint64_t> r(static_cast<std::size_t>(m.cols()));
    for (Index j = 0; j < m.cols(); ++j)
      r[static_cast<std::size_t>(j)] = reduce_mod(m(i, j), p);
    e.insert_reduced(std::move(r));
  }
  return e.rank();
}

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b) {
  require_same_dim(a, b, "lattice_sum");
  IntMatrix stacked(a.rank() + b.rank(), a.ambient_dim());
  stacked << a.basis(), b.basis();
  return hnf(stacked);
}

IntegerLattice left_kernel(const IntMatrix& a) {
  const Index m = a.rows(), n = a.cols();
  IntMatrix aug = IntMatrix::Constant(m, n + m, BigInt(0));
  aug.leftCols(n) = a;
  for (Index i = 0; i < m; ++i) aug(i, n + i) = 1;
  const IntegerLattice h = hnf(aug);
  std::vector<Index> keep;
  for (Index i = 0; i < h.rank(); ++i) {
    bool zero = true;
    for (Index j = 0; j < n && zero; ++j) zero = h.basis()(i, j).is_zero();
    if (zero) keep.push_back(i);
  }
  IntMatrix k(static_cast<Index>(keep.size()), m);
  for (std::size_t r = 0; r < keep.size(); ++r)
    k.row(static_cast<Index>(r)) = h.basis().row(keep[r]).tail(m);
  return hnf(k);
}

IntegerLattice kernel_lattice(const IntMatrix& a) {
  IntMatrix t = a.transpose();
  return left_kernel(t);
}

IntegerLattice lattice_intersection(const IntegerLattice& a,
                                    const IntegerLattice& b) {
  require_same_dim(a, b, "lattice_intersection");
  if (a.is_zero() || b.is_zero()) return IntegerLattice(a.ambient_dim());
  IntMatrix stacked(a.rank() + b.rank(), a.ambient_dim());
  stacked << a.basis(), b.basis();
  const IntegerLattice k = left_kernel(stacked);
  if (k.is_zero()) return IntegerLattice(a.ambient_dim());
  IntMatrix y = k.basis().leftCols(a.rank());
  IntMatrix prod = y * a.basis();
  return hnf(prod);
}

bool contains(const IntegerLattice& l, const IntVector& v) {
  if (v.size() != l.ambient_dim())
    throw std::invalid_argument("contains: dimension mismatch");
  IntVector r = v;
  const IntMatrix& b = l.basis();
  Index row = 0;
  for (Index c = 0; c < r.size(); ++c) {
    const bool pivot = row < b.rows() && !b(row, c).is_zero();
    if (r(c).is_zero()) {
      if (pivot) ++row;
      continue;
    }
    if (!pivot) return false;
    if (!(r(c) % b(row, c)).is_zero()) return false;
    const BigInt q = r(c) / b(row, c);
    r -= q * b.row(row);
    ++row;
  }
  return true;
}

bool equals_full(const IntegerLattice& l) {
  if (l.rank() != l.ambient_dim()) return false;
  for (Index i = 0; i < l.rank(); ++i)
    if (l.basis()(i, i) != 1) return false;
  // canonical form with unit pivots is the identity
  return true;
}

namespace {

template <typename Scalar>
bool columns_span_everything(const IntMatrix& b) {
  HermiteBuilder<Scalar> h(b.rows());
  for (Index j = 0; j < b.cols() && !h.is_full(); ++j) {
    RowVector<Scalar> c(b.rows());
    for (Index i = 0; i < b.rows(); ++i) c(i) = from_big<Scalar>(b(i, j));
    h.insert(std::move(c));
  }
  return h.is_full();
}

}  // namespace

bool is_pure(const IntegerLattice& l) {
  const IntMatrix& b = l.basis();
  bool unit_pivots = true;
  for (Index i = 0; i < b.rows() && unit_pivots; ++i) {
    Index c = 0;
    while (b(i, c).is_zero()) ++c;
    unit_pivots = b(i, c) == 1;
  }
  if (unit_pivots) return true;
  // All elementary divisors are 1 iff the columns of the basis span Z^rank.
  return with_promotion(
      [&]<typename S>() { return columns_span_everything<S>(b); });
}

IntegerLattice project(const IntegerLattice& l,
                       std::span<const Index> columns) {
  IntMatrix p(l.rank(), static_cast<Index>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k] < 0 || columns[k] >= l.ambient_dim())
      throw std::invalid_argument("project: column out of range");
    p.col(static_cast<Index>(k)) = l.basis().col(columns[k]);
  }
  return hnf(p);
}

IntegerLattice apply_signs(const IntegerLattice& l, std::span<const int> signs) {
  if (static_cast<Index>(signs.size()) != l.ambient_dim())
    throw std::invalid_argument("apply_signs: dimension mismatch");
  IntMatrix b = l.basis();
  for (Index j = 0; j < b.cols(); ++j)
    if (signs[static_cast<std::size_t>(j)] < 0) b.col(j) = -b.col(j);
  return hnf(b);
}

}  // namespace symideal
