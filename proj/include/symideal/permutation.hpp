#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symideal {

class Permutation;

/// A word s_1 ... s_n whose entries are exactly 1..n.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> entries);
  Word(std::initializer_list<int> entries) : Word(std::vector<int>(entries)) {}

  /// "412563" (one digit per entry, n <= 9) or "10,2,3,..." (commas).
  static Word parse(std::string_view text);
  /// 12...n
  static Word increasing(int n);
  static Word decreasing(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  /// s_i, 1-based.
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Lexicographic order.
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.entries_ <=> b.entries_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.to_string();
  }

 private:
  std::vector<int> entries_;
};

/// Bijection of [1,n] in one-line notation. Composition is right-to-left:
/// (sigma * tau)(i) = sigma(tau(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images)
      : Permutation(std::vector<int>(images)) {}

  static Permutation identity(int n);
  /// Transposition of a and b (1-based) in Sym(n).
  static Permutation transposition(int n, int a, int b);
  /// "(2,1,3)", "2,1,3" or "213".
  static Permutation parse(std::string_view text);

  int degree() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  /// "(2,1,3)"
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic order of one-line notation; this is the coordinate order.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << p.to_string();
  }

 private:
  std::vector<int> images_;
};

/// pi(s): the permutation i -> s_i.
Permutation pi(const Word& s);
/// The word alpha * sigma = sigma(1) ... sigma(n).
Word word_of(const Permutation& sigma);
/// (s sigma)_i = s_{sigma(i)}.
Word word_action(const Word& s, const Permutation& sigma);
Word reverse(const Word& s);
std::strong_ordering lex_compare(const Word& s, const Word& t);

/// Sym(n) with its elements numbered in lexicographic order of one-line
/// notation. Element indices are the coordinates of Z Sym(n) throughout.
class SymmetricGroup {
 public:
  /// Shared, lazily built instance; n in [1, 8].
  static const SymmetricGroup& of(int n);

  int degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t k) const { return elements_[k]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  std::size_t index_of(const Permutation& p) const;
  std::size_t index_of(std::span<const int> images) const;
  std::size_t identity() const { return 0; }
  std::size_t compose(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  int sign(std::size_t a) const { return sign_[a]; }
  const std::vector<int>& signs() const { return sign_; }

  /// Index of sigma_a * s_t where s_t = (t, t+1), t in [1, n-1].
  std::size_t times_adjacent(std::size_t a, int t) const {
    return right_adjacent_[static_cast<std::size_t>(t - 1)][a];
  }
  /// Index of s_t * sigma_a.
  std::size_t adjacent_times(int t, std::size_t a) const {
    return left_adjacent_[static_cast<std::size_t>(t - 1)][a];
  }

 private:
  explicit SymmetricGroup(int n);

  int n_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> inverse_;
  std::vector<int> sign_;
  std::vector<std::vector<std::size_t>> right_adjacent_;
  std::vector<std::vector<std::size_t>> left_adjacent_;
};

/// Every word of S(n) in increasing lexicographic order (same order as
/// SymmetricGroup::elements, via word_of).
std::vector<Word> all_words(int n);

std::size_t factorial(int n);

}  // namespace symideal
