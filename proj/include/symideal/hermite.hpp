#pragma once

// Incremental row Hermite normal form over the integers.

#include "symideal/matrix.hpp"
#include "symideal/scalar.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symideal {

/// Maintains an echelon basis of the subgroup of Z^N spanned by all rows
/// inserted so far. Rows are folded in one at a time; `basis()` returns the
/// canonical form (positive pivots, entries above each pivot reduced into
/// [0, pivot)), so equal lattices give identical matrices.
///
/// Single writer. Not safe to share while rows are being inserted.
template <typename Scalar>
class HermiteBuilder {
 public:
  using Row = RowVector<Scalar>;

  explicit HermiteBuilder(Index ambient_dim)
      : dim_(ambient_dim), slot_(static_cast<std::size_t>(ambient_dim), -1) {}

  Index ambient_dim() const { return dim_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  /// True once the lattice is all of Z^N; further inserts cannot change it.
  bool is_full() const { return rank() == dim_ && unit_pivots_ == dim_; }

  /// Folds `v` into the lattice. Returns true if the lattice grew.
  bool insert(Row v) {
    if (v.size() != dim_)
      throw std::invalid_argument("HermiteBuilder::insert: dimension mismatch");
    if (is_full()) return false;
    bool changed = false;
    Index c = first_nonzero(v, 0);
    while (c < dim_) {
      const int s = slot_[static_cast<std::size_t>(c)];
      if (s < 0) {
        if (sign(v(c)) < 0) v = -v;
        slot_[static_cast<std::size_t>(c)] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        if (rows_.back()(c) == Scalar(1)) ++unit_pivots_;
        tidy(c);
        return true;
      }
      Row& p = rows_[static_cast<std::size_t>(s)];
      const Index len = dim_ - c;
      const Scalar a = p(c);
      const Scalar b = v(c);
      if (is_zero(b % a)) {
        const Scalar q = b / a;
        v.tail(len) -= q * p.tail(len);
      } else {
        // Replace the pivot row by a gcd combination and eliminate v(c).
        const auto e = extended_gcd(a, b);
        const Scalar ag = a / e.g;
        const Scalar bg = b / e.g;
        Row np = e.x * p.tail(len) + e.y * v.tail(len);
        v.tail(len) = ag * v.tail(len) - bg * p.tail(len);
        if (a == Scalar(1)) --unit_pivots_;
        p.tail(len) = np;
        if (p(c) == Scalar(1)) ++unit_pivots_;
        tidy(c);
        changed = true;
      }
      c = first_nonzero(v, c + 1);
    }
    return changed;
  }

  /// Exact membership test against the current lattice.
  bool contains(Row v) const {
    if (v.size() != dim_)
      throw std::invalid_argument("HermiteBuilder::contains: dimension mismatch");
    Index c = first_nonzero(v, 0);
    while (c < dim_) {
      const int s = slot_[static_cast<std::size_t>(c)];
      if (s < 0) return false;
      const Row& p = rows_[static_cast<std::size_t>(s)];
      if (!is_zero(v(c) % p(c))) return false;
      const Index len = dim_ - c;
      v.tail(len) -= (v(c) / p(c)) * p.tail(len);
      c = first_nonzero(v, c + 1);
    }
    return true;
  }

  std::vector<Index> pivot_columns() const {
    std::vector<Index> cols;
    for (Index c = 0; c < dim_; ++c)
      if (slot_[static_cast<std::size_t>(c)] >= 0) cols.push_back(c);
    return cols;
  }

  /// Canonical basis, one row per pivot, pivots in increasing column order.
  Matrix<Scalar> basis() {
    reduce_above_pivots();
    Matrix<Scalar> out(rank(), dim_);
    Index i = 0;
    for (Index c = 0; c < dim_; ++c) {
      const int s = slot_[static_cast<std::size_t>(c)];
      if (s >= 0) out.row(i++) = rows_[static_cast<std::size_t>(s)];
    }
    return out;
  }

  void reduce_above_pivots() {
    const auto cols = pivot_columns();
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Row& pj = row_at(cols[j]);
      const Index len = dim_ - cols[j];
      for (std::size_t i = 0; i < j; ++i) {
        Row& pi = row_at(cols[i]);
        const Scalar q = floor_div(pi(cols[j]), pj(cols[j]));
        if (!is_zero(q)) pi.tail(len) -= q * pj.tail(len);
      }
    }
  }

  /// Versioned text checkpoint of the builder state.
  void save(std::ostream& os) const {
    os << "hermite-builder 1 " << dim_ << ' ' << rows_.size() << '\n';
    for (Index c = 0; c < dim_; ++c) {
      const int s = slot_[static_cast<std::size_t>(c)];
      if (s < 0) continue;
      const Row& r = rows_[static_cast<std::size_t>(s)];
      for (Index j = 0; j < dim_; ++j) os << (j ? " " : "") << r(j);
      os << '\n';
    }
  }

  static HermiteBuilder load(std::istream& is) {
    std::string tag;
    int version = 0;
    Index dim = 0;
    std::size_t count = 0;
    if (!(is >> tag >> version >> dim >> count) || tag != "hermite-builder" ||
        version != 1)
      throw std::runtime_error("not a hermite-builder checkpoint");
    HermiteBuilder b(dim);
    for (std::size_t k = 0; k < count; ++k) {
      Row r(dim);
      for (Index j = 0; j < dim; ++j) {
        std::string tok;
        if (!(is >> tok)) throw std::runtime_error("truncated checkpoint");
        r(j) = from_big<Scalar>(BigInt(tok));
      }
      b.insert(std::move(r));
    }
    return b;
  }

 private:
  static Index first_nonzero(const Row& v, Index from) {
    for (Index j = from; j < v.size(); ++j)
      if (!is_zero(v(j))) return j;
    return v.size();
  }

  Row& row_at(Index col) {
    return rows_[static_cast<std::size_t>(slot_[static_cast<std::size_t>(col)])];
  }

  // Keep the pivot row at `col` reduced modulo later pivots; bounds entry
  // growth between canonicalizations.
  void tidy(Index col) {
    Row& r = row_at(col);
    for (Index c = col + 1; c < dim_; ++c) {
      const int s = slot_[static_cast<std::size_t>(c)];
      if (s < 0 || is_zero(r(c))) continue;
      const Row& p = rows_[static_cast<std::size_t>(s)];
      const Scalar q = floor_div(r(c), p(c));
      if (!is_zero(q)) r.tail(dim_ - c) -= q * p.tail(dim_ - c);
    }
  }

  Index dim_;
  std::vector<int> slot_;  // pivot column -> index into rows_, or -1
  std::vector<Row> rows_;
  Index unit_pivots_ = 0;
};

/// Runs `f.template operator()<Checked64>()`; if that overflows, runs it
/// again with BigInt. Both instantiations must return the same type.
template <typename F>
auto with_promotion(F&& f) {
  try {
    return f.template operator()<Checked64>();
  } catch (const IntegerOverflow&) {
    return f.template operator()<BigInt>();
  }
}

}  // namespace symideal
