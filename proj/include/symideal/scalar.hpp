#pragma once

// Integer scalar types used by the exact linear algebra.
//
// Two scalars are supported everywhere a kernel is templated on `Scalar`:
//   Checked64  machine word; every operation throws IntegerOverflow when the
//              exact result does not fit in int64
//   BigInt     GMP-backed arbitrary precision
// Kernels run on Checked64 first and are re-run on BigInt if they overflow
// (see with_promotion in hermite.hpp).

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace symideal {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

struct IntegerOverflow : std::overflow_error {
  IntegerOverflow() : std::overflow_error("int64 overflow") {}
};

class Checked64 {
 public:
  constexpr Checked64() = default;
  // Implicit so that Eigen can form Scalar(0), Scalar(1).
  constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT

  constexpr std::int64_t value() const { return v_; }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw IntegerOverflow{};
    return Checked64{r};
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw IntegerOverflow{};
    return Checked64{r};
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw IntegerOverflow{};
    return Checked64{r};
  }
  // Truncating division, as for built-in integers.
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (b.v_ == -1 && a.v_ == std::numeric_limits<std::int64_t>::min())
      throw IntegerOverflow{};
    return Checked64{a.v_ / b.v_};
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v_ == -1) return Checked64{0};
    return Checked64{a.v_ % b.v_};
  }
  friend Checked64 operator-(Checked64 a) { return Checked64{0} - a; }

  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  Checked64& operator-=(Checked64 o) { return *this = *this - o; }
  Checked64& operator*=(Checked64 o) { return *this = *this * o; }
  Checked64& operator/=(Checked64 o) { return *this = *this / o; }

  friend constexpr bool operator==(Checked64, Checked64) = default;
  friend constexpr auto operator<=>(Checked64, Checked64) = default;

  friend std::ostream& operator<<(std::ostream& os, Checked64 c) {
    return os << c.v_;
  }

 private:
  std::int64_t v_ = 0;
};

inline Checked64 abs(Checked64 a) { return a.value() < 0 ? -a : a; }

// ---- scalar helpers, overloaded for both scalar types ----

inline bool is_zero(Checked64 a) { return a.value() == 0; }
inline bool is_zero(const BigInt& a) { return a.is_zero(); }

inline int sign(Checked64 a) { return (a.value() > 0) - (a.value() < 0); }
inline int sign(const BigInt& a) { return a.sign(); }

template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  Scalar r = a - q * b;
  if (!is_zero(r) && (sign(r) != sign(b))) q -= Scalar(1);
  return q;
}

template <typename Scalar>
struct ExtendedGcd {
  Scalar g, x, y;  // g = x*a + y*b, g >= 0
};

template <typename Scalar>
ExtendedGcd<Scalar> extended_gcd(Scalar a, Scalar b) {
  Scalar x0{1}, y0{0}, x1{0}, y1{1};
  while (!is_zero(b)) {
    Scalar q = a / b;
    Scalar t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (sign(a) < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

inline BigInt to_big(Checked64 a) { return BigInt(a.value()); }
inline const BigInt& to_big(const BigInt& a) { return a; }

template <typename Scalar>
Scalar from_big(const BigInt& a);

template <>
inline BigInt from_big<BigInt>(const BigInt& a) {
  return a;
}

template <>
inline Checked64 from_big<Checked64>(const BigInt& a) {
  if (a > std::numeric_limits<std::int64_t>::max() ||
      a < std::numeric_limits<std::int64_t>::min())
    throw IntegerOverflow{};
  return Checked64{a.convert_to<std::int64_t>()};
}

}  // namespace symideal

namespace Eigen {

template <>
struct NumTraits<symideal::Checked64>
    : GenericNumTraits<symideal::Checked64> {
  using Real = symideal::Checked64;
  using NonInteger = double;
  using Literal = symideal::Checked64;
  using Nested = symideal::Checked64;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real{0}; }
  static inline Real dummy_precision() { return Real{0}; }
  static inline Real highest() {
    return Real{std::numeric_limits<std::int64_t>::max()};
  }
  static inline Real lowest() {
    return Real{std::numeric_limits<std::int64_t>::min()};
  }
  static inline int digits10() { return 18; }
};

}  // namespace Eigen
