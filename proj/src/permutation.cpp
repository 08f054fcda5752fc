#include "symideal/permutation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace symideal {

namespace {

void require_bijection(const std::vector<int>& v, const char* what) {
  std::vector<bool> seen(v.size() + 1, false);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument(std::string(what) +
                                  ": entries must be exactly 1.." +
                                  std::to_string(v.size()));
    seen[static_cast<std::size_t>(x)] = true;
  }
}

std::vector<int> parse_sequence(std::string_view text, const char* what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text.remove_prefix(1);
    text.remove_suffix(1);
  }
  std::vector<int> out;
  if (text.find(',') != std::string_view::npos) {
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) throw std::invalid_argument(std::string(what) + ": empty entry");
      out.push_back(std::stoi(cur));
      cur.clear();
    };
    for (char ch : text) {
      if (ch == ',') {
        flush();
      } else if (ch >= '0' && ch <= '9') {
        cur.push_back(ch);
      } else if (ch != ' ') {
        throw std::invalid_argument(std::string(what) + ": bad character '" +
                                    std::string(1, ch) + "'");
      }
    }
    flush();
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument(std::string(what) + ": bad character '" +
                                    std::string(1, ch) + "'");
      out.push_back(ch - '0');
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty");
  return out;
}

}  // namespace

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

Word::Word(std::vector<int> entries) : entries_(std::move(entries)) {
  require_bijection(entries_, "word");
}

Word Word::parse(std::string_view text) { return Word(parse_sequence(text, "word")); }

Word Word::increasing(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Word(std::move(e));
}

Word Word::decreasing(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.rbegin(), e.rend(), 1);
  return Word(std::move(e));
}

std::string Word::to_string() const {
  std::string s;
  const bool digits = size() <= 9;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!digits && i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  require_bijection(images_, "permutation");
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto e = identity(n).images_;
  std::swap(e[static_cast<std::size_t>(a - 1)], e[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  return Permutation(parse_sequence(text, "permutation"));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  int parity = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    parity ^= static_cast<int>((len + 1) & 1);
  }
  return parity ? -1 : 1;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i]);
  }
  return s + ")";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("permutation product: degree mismatch");
  std::vector<int> c(a.images_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.images_[static_cast<std::size_t>(b.images_[i] - 1)];
  return Permutation(std::move(c));
}

Permutation pi(const Word& s) { return Permutation(s.entries()); }

Word word_of(const Permutation& sigma) { return Word(sigma.images()); }

Word word_action(const Word& s, const Permutation& sigma) {
  if (s.size() != sigma.degree())
    throw std::invalid_argument("word_action: size mismatch");
  std::vector<int> out(static_cast<std::size_t>(s.size()));
  for (int i = 1; i <= s.size(); ++i)
    out[static_cast<std::size_t>(i - 1)] = s(sigma(i));
  return Word(std::move(out));
}

Word reverse(const Word& s) {
  std::vector<int> e(s.entries().rbegin(), s.entries().rend());
  return Word(std::move(e));
}

std::strong_ordering lex_compare(const Word& s, const Word& t) {
  if (s.size() != t.size())
    throw std::invalid_argument("lex_compare: size mismatch");
  return s <=> t;
}

const SymmetricGroup& SymmetricGroup::of(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SymmetricGroup>> cache;
  if (n < 1 || n > 8)
    throw std::invalid_argument("SymmetricGroup: degree must be in [1, 8]");
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot.reset(new SymmetricGroup(n));
  return *slot;
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    elements_.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t order = elements_.size();
  inverse_.resize(order);
  sign_.resize(order);
  for (std::size_t k = 0; k < order; ++k) {
    inverse_[k] = index_of(elements_[k].inverse());
    sign_[k] = elements_[k].sign();
  }
  for (int t = 1; t < n; ++t) {
    const std::size_t s = index_of(Permutation::transposition(n, t, t + 1));
    std::vector<std::size_t> right(order), left(order);
    for (std::size_t k = 0; k < order; ++k) {
      right[k] = compose(k, s);
      left[k] = compose(s, k);
    }
    right_adjacent_.push_back(std::move(right));
    left_adjacent_.push_back(std::move(left));
  }
}

std::size_t SymmetricGroup::index_of(std::span<const int> a) const {
  if (static_cast<int>(a.size()) != n_)
    throw std::invalid_argument("SymmetricGroup::index_of: degree mismatch");
  std::size_t rank = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < a.size(); ++j) smaller += (a[j] < a[i]);
    rank = rank * (a.size() - i) + smaller;
  }
  return rank;
}

std::size_t SymmetricGroup::index_of(const Permutation& p) const {
  return index_of(std::span<const int>(p.images()));
}

std::size_t SymmetricGroup::compose(std::size_t a, std::size_t b) const {
  const auto& x = elements_[a].images();
  const auto& y = elements_[b].images();
  std::array<int, 8> c{};
  for (int i = 0; i < n_; ++i)
    c[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(y[static_cast<std::size_t>(i)] - 1)];
  return index_of(std::span<const int>(c.data(), static_cast<std::size_t>(n_)));
}

std::vector<Word> all_words(int n) {
  std::vector<Word> out;
  for (const auto& p : SymmetricGroup::of(n).elements()) out.push_back(word_of(p));
  return out;
}

}  // namespace symideal
