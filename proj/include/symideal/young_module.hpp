#pragma once

#include "symideal/algebra.hpp"
#include "symideal/lattice.hpp"
#include "symideal/partition.hpp"
#include "symideal/permutation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symideal {

/// Ordered rows of a tabloid; each row is a sorted subset of [1,n].
class Tabloid {
 public:
  Tabloid() = default;
  explicit Tabloid(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int n() const { return n_; }
  Partition shape() const;
  /// sigma applied to every entry.
  Tabloid apply(const Permutation& sigma) const;
  /// "{1,2}{3}"
  std::string to_string() const;

  friend bool operator==(const Tabloid&, const Tabloid&) = default;
  friend auto operator<=>(const Tabloid& a, const Tabloid& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  int n_ = 0;
};

/// Action of Sym(n) on the points 0..d-1, stored as a full image table
/// indexed by the coordinates of SymmetricGroup::of(n).
class PermutationAction {
 public:
  PermutationAction() = default;
  /// `images[g * points + x]` is the image of x under element g.
  PermutationAction(int n, std::size_t points, std::vector<std::uint32_t> images);

  int n() const { return n_; }
  std::size_t points() const { return points_; }
  std::size_t image(std::size_t g, std::size_t x) const { return images_[g * points_ + x]; }

  /// True if the table is a left action: (gh)x = g(hx), 1x = x.
  bool is_action() const;

 private:
  int n_ = 0;
  std::size_t points_ = 0;
  std::vector<std::uint32_t> images_;
};

/// M(lambda): the permutation module on tabloids of shape lambda.
class YoungModule {
 public:
  YoungModule() = default;
  explicit YoungModule(const Partition& lambda);

  const Partition& lambda() const { return lambda_; }
  /// Tabloids in lexicographic order of their row sequences.
  const std::vector<Tabloid>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t index_of(const Tabloid& t) const;
  const PermutationAction& action() const { return action_; }

 private:
  Partition lambda_;
  std::vector<Tabloid> basis_;
  PermutationAction action_;
};

/// One module per member of gamma.
class YoungFamily {
 public:
  YoungFamily() = default;
  explicit YoungFamily(const PartitionSet& gamma);

  const PartitionSet& gamma() const { return gamma_; }
  int n() const { return gamma_.n(); }
  const std::vector<YoungModule>& modules() const { return modules_; }
  /// Sum of the module dimensions.
  std::size_t dimension() const;

 private:
  PartitionSet gamma_;
  std::vector<YoungModule> modules_;
};

YoungModule young_module(const Partition& lambda);
YoungFamily young_family(const PartitionSet& gamma);

/// Sym(n) on words [n]^r by sigma . i = sigma o i.
PermutationAction tensor_action(int n, int r);
/// Sym(r) on words [n]^r by place permutation: (sigma . i)_k = i_{sigma^-1(k)}.
PermutationAction place_action(int n, int r);

/// Matrix of x acting on the module: entry (y, x') is the sum of the
/// coefficients of the sigma with sigma x' = y.
IntMatrix representation_matrix(const AlgebraElement& x, const PermutationAction& a);
/// Block diagonal over the modules of the family, in order.
IntMatrix representation_matrix(const AlgebraElement& x, const YoungFamily& fam);

/// Does the element with these coordinates act as zero?
bool annihilates(const IntVector& x, const PermutationAction& a);

std::vector<const PermutationAction*> actions_of(const YoungFamily& fam);

/// Kernel of Z Sym(n) -> End(M) for the direct sum of the given actions.
/// With `predicted_rank` the constraint pass may stop once the kernel rank
/// falls to that value; the result is then checked against every action
/// and the pass resumes if the check fails.
IntegerLattice annihilator_lattice(const std::vector<const PermutationAction*>& actions,
                                   std::optional<Index> predicted_rank = {});
/// Uses sum of f_lambda^2 over (Par(n) \ closure)* as the prediction when the
/// coarsening closure of gamma is co-saturated.
IntegerLattice annihilator_lattice(const YoungFamily& fam);

/// Dimension of the kernel of the action over F_p. A predicted dimension
/// allows an early stop, confirmed by evaluating every kernel vector.
Index annihilator_rank_mod_p(const std::vector<const PermutationAction*>& actions,
                             std::uint64_t p, std::optional<Index> predicted_dim = {});
Index annihilator_rank_mod_p(const YoungFamily& fam, std::uint64_t p);

/// Lattice spanned by the flattened matrices rho(sigma), sigma in Sym(n).
IntegerLattice image_lattice(const std::vector<const PermutationAction*>& actions);
/// Lattice spanned by the flattened rho(sigma) for the given coordinates.
IntegerLattice image_lattice(const std::vector<const PermutationAction*>& actions,
                             const std::vector<std::size_t>& elements);

/// (Par(n) \ closure(gamma))*, the delta attached to a family of type gamma.
PartitionSet annihilator_delta(const PartitionSet& gamma);

struct ImageBasisReport {
  PartitionSet gamma;
  PartitionSet closure;
  bool precondition_ok = false;
  std::string precondition_message;
  Index g_size = 0;
  BigInt predicted_rank = 0;  // sum of f_lambda^2 over the closure
  Index image_rank = 0;
  Index g_image_rank = 0;     // rank of the span of rho(G(closure))
  bool g_spans_image = false;
  /// "image": ranks of the flattened matrices themselves. "kernel": used when
  /// those are too wide; Z G + Ker = Z^N and Z G meets Ker in 0.
  std::string method;

  bool passed() const {
    return precondition_ok && BigInt(image_rank) == predicted_rank &&
           g_image_rank == g_size && g_spans_image && BigInt(g_size) == predicted_rank;
  }
};

ImageBasisReport image_basis_check(const PartitionSet& gamma);

struct PresentationReport {
  PartitionSet gamma;
  PartitionSet closure;
  PartitionSet delta;
  bool precondition_ok = false;
  std::string precondition_message;
  bool group_relations = false;      // rho(sigma) rho(tau) = rho(sigma tau)
  bool symmetrizer_relations = false;  // signed [Sym(lambda)] acts as 0, lambda in delta
  bool kernel_equals_ideal = false;  // Ker(rho) = I(delta)^dagger
  Index kernel_rank = 0;
  Index image_rank = 0;
  BigInt predicted_image_rank = 0;

  bool passed() const {
    return precondition_ok && group_relations && symmetrizer_relations &&
           kernel_equals_ideal && BigInt(image_rank) == predicted_image_rank;
  }
};

PresentationReport presentation_check(const PartitionSet& gamma);

/// Sym(n) acting on [n]^r by sigma o i.
struct DotyReport {
  int n = 0;
  int r = 0;
  PartitionSet stabilizer_types;  // types of the point stabilizers
  PartitionSet closure;
  bool closure_matches = false;   // closure = {lambda : lambda_1 >= n - r}
  PartitionSet delta;             // {mu : len(mu) < n - r}
  Index kernel_rank = 0;
  bool kernel_equals_ideal = false;
  std::size_t increasing_words = 0;  // words with an increasing run of n - r
  bool basis_words_match = false;    // those words are G(closure)
  bool basis_spans = false;
  bool basis_independent = false;

  bool passed() const {
    return closure_matches && kernel_equals_ideal && basis_words_match && basis_spans &&
           basis_independent;
  }
};

DotyReport doty_kernel_check(int n, int r);

/// Sym(r) acting on [letters]^r by place permutations.
struct TensorPlaceReport {
  int letters = 0;
  int r = 0;
  Index kernel_rank = 0;
  Index quotient_rank = 0;
  std::vector<Word> basis_words;  // no decreasing subsequence longer than letters
  bool basis_spans = false;
  bool basis_independent = false;
  PartitionSet delta;             // {mu : mu_1 > letters}
  bool kernel_equals_ideal = false;

  bool passed() const {
    return basis_spans && basis_independent && kernel_equals_ideal &&
           static_cast<std::size_t>(quotient_rank) == basis_words.size();
  }
};

TensorPlaceReport tensor_place_check(int letters, int r);

}  // namespace symideal
