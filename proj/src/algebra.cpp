#include "symideal/algebra.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace symideal {

AlgebraElement AlgebraElement::delta(const Permutation& sigma) {
  AlgebraElement x(sigma.degree());
  x.terms_.emplace(sigma, BigInt(1));
  return x;
}

AlgebraElement AlgebraElement::from_coordinates(int n, const IntVector& coords) {
  const auto& g = SymmetricGroup::of(n);
  if (static_cast<std::size_t>(coords.size()) != g.order())
    throw std::invalid_argument("from_coordinates: expected n! coordinates");
  AlgebraElement x(n);
  for (std::size_t k = 0; k < g.order(); ++k)
    if (coords(static_cast<Index>(k)) != 0) x.terms_.emplace(g.element(k), coords(static_cast<Index>(k)));
  return x;
}

AlgebraElement AlgebraElement::parse(std::string_view text) {
  std::string s;
  // Normalize the unicode minus and middle dot.
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "\xE2\x88\x92") {
      s += '-';
      i += 2;
    } else if (text.substr(i, 2) == "\xC2\xB7") {
      s += '*';
      i += 1;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += text[i];
    }
  }
  if (s.empty()) throw std::invalid_argument("algebra element: empty text");
  if (s == "0") throw std::invalid_argument("algebra element: '0' has no degree");

  std::vector<std::pair<BigInt, Permutation>> parsed;
  std::size_t i = 0;
  while (i < s.size()) {
    int sgn = 1;
    if (s[i] == '+' || s[i] == '-') {
      sgn = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!parsed.empty()) {
      throw std::invalid_argument("algebra element: expected '+' or '-'");
    }
    BigInt c = 1;
    std::size_t digits = i;
    while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
    if (digits > i) {
      c = BigInt(s.substr(i, digits - i));
      i = digits;
      if (i >= s.size() || s[i] != '*')
        throw std::invalid_argument("algebra element: expected '*' after coefficient");
      ++i;
    }
    if (i >= s.size() || s[i] != '(')
      throw std::invalid_argument("algebra element: expected '('");
    auto close = s.find(')', i);
    if (close == std::string::npos)
      throw std::invalid_argument("algebra element: unbalanced parenthesis");
    parsed.emplace_back(sgn * c, Permutation::parse(s.substr(i, close - i + 1)));
    i = close + 1;
  }
  AlgebraElement x(parsed.front().second.degree());
  for (auto& [c, p] : parsed) x.add_term(p, c);
  return x;
}

BigInt AlgebraElement::coefficient(const Permutation& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt AlgebraElement::augmentation_at_identity() const {
  return coefficient(Permutation::identity(n_));
}

IntVector AlgebraElement::coordinates() const {
  const auto& g = SymmetricGroup::of(n_);
  IntVector v = IntVector::Zero(static_cast<Index>(g.order()));
  for (const auto& [p, c] : terms_) v(static_cast<Index>(g.index_of(p))) = c;
  return v;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    if (!s.empty()) s += ' ';
    s += c < 0 ? "-" : "+";
    s += (c < 0 ? BigInt(-c) : c).str();
    s += "\xC2\xB7";
    s += p.to_string();
  }
  return s;
}

void AlgebraElement::add_term(const Permutation& sigma, const BigInt& c) {
  if (sigma.degree() != n_)
    throw std::invalid_argument("algebra element: permutation degree mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(sigma, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void AlgebraElement::require_same_n(const AlgebraElement& o, const char* op) const {
  if (o.n_ != n_)
    throw std::invalid_argument(std::string("algebra element ") + op + ": degree mismatch");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_n(o, "+");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_n(o, "-");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

AlgebraElement operator-(const AlgebraElement& a) {
  AlgebraElement x(a.n_);
  for (const auto& [p, c] : a.terms_) x.terms_.emplace(p, -c);
  return x;
}

AlgebraElement operator*(const BigInt& c, const AlgebraElement& a) {
  AlgebraElement x(a.n_);
  if (c == 0) return x;
  for (const auto& [p, v] : a.terms_) x.terms_.emplace(p, c * v);
  return x;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_same_n(b, "*");
  AlgebraElement x(a.n_);
  for (const auto& [p, u] : a.terms_)
    for (const auto& [q, v] : b.terms_) x.add_term(p * q, u * v);
  return x;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) { return x + y; }
AlgebraElement negate(const AlgebraElement& x) { return -x; }
AlgebraElement scalar_multiply(const BigInt& c, const AlgebraElement& x) { return c * x; }

AlgebraElement dagger(const AlgebraElement& x) {
  AlgebraElement y(x.n());
  for (const auto& [p, c] : x.terms()) y.add_term(p, p.sign() * c);
  return y;
}

BigInt trace_form(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.n() != y.n()) throw std::invalid_argument("trace_form: degree mismatch");
  // coefficient of 1 in xy is sum over sigma of x_sigma y_{sigma^-1}
  BigInt t = 0;
  for (const auto& [p, c] : x.terms()) t += c * y.coefficient(p.inverse());
  return t;
}

std::vector<Permutation> young_subgroup(const BlockFamily& b) {
  const int n = b.n();
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = i;
  const auto& blocks = b.blocks();
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == blocks.size()) {
      out.emplace_back(images);
      return;
    }
    std::vector<int> vals = blocks[r];
    do {
      for (std::size_t j = 0; j < vals.size(); ++j)
        images[static_cast<std::size_t>(blocks[r][j] - 1)] = vals[j];
      rec(r + 1);
    } while (std::next_permutation(vals.begin(), vals.end()));
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraElement symmetrizer(const BlockFamily& b, bool signed_sum) {
  AlgebraElement x(b.n());
  for (const auto& p : young_subgroup(b)) x.add_term(p, signed_sum ? p.sign() : 1);
  return x;
}

}  // namespace symideal
