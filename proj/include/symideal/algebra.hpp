#pragma once

#include "symideal/block_family.hpp"
#include "symideal/matrix.hpp"
#include "symideal/permutation.hpp"
#include "symideal/scalar.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace symideal {

/// Element of Z Sym(n): finitely supported map from permutations to
/// integers. Zero coefficients are never stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(int n = 1) : n_(n) {}

  static AlgebraElement zero(int n) { return AlgebraElement(n); }
  static AlgebraElement delta(const Permutation& sigma);
  static AlgebraElement one(int n) { return delta(Permutation::identity(n)); }
  /// Inverse of coordinates(), using the SymmetricGroup::of(n) numbering.
  static AlgebraElement from_coordinates(int n, const IntVector& coords);
  /// "+1·(2,1,3) -1·(3,1,2)"; also accepts '*' for '·' and U+2212 for '-'.
  static AlgebraElement parse(std::string_view text);

  int n() const { return n_; }
  const std::map<Permutation, BigInt>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Permutation& sigma) const;
  /// Coefficient of the identity.
  BigInt augmentation_at_identity() const;

  IntVector coordinates() const;
  std::string to_string() const;

  void add_term(const Permutation& sigma, const BigInt& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator-(const AlgebraElement& a);
  friend AlgebraElement operator*(const BigInt& c, const AlgebraElement& a);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  void require_same_n(const AlgebraElement& o, const char* op) const;

  int n_;
  std::map<Permutation, BigInt> terms_;
};

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement negate(const AlgebraElement& x);
AlgebraElement scalar_multiply(const BigInt& c, const AlgebraElement& x);

/// Linear extension of sigma -> sgn(sigma) sigma.
AlgebraElement dagger(const AlgebraElement& x);

/// The symmetric bilinear form (x, y) = coefficient of 1 in xy.
BigInt trace_form(const AlgebraElement& x, const AlgebraElement& y);

/// All elements of Sym(X_1) x ... x Sym(X_m).
std::vector<Permutation> young_subgroup(const BlockFamily& b);
/// Sum of the subgroup's elements, or of sgn(sigma) sigma when `signed_sum`.
AlgebraElement symmetrizer(const BlockFamily& b, bool signed_sum = false);

}  // namespace symideal
