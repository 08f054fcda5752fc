#pragma once

#include "symideal/block_family.hpp"
#include "symideal/lattice.hpp"
#include "symideal/partition.hpp"
#include "symideal/permutation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symideal {

/// How the two-sided ideal generated by the Young symmetrizers is built.
enum class IdealConstruction {
  /// Left coset sums of Sym(lambda), then right translates by adjacent
  /// transpositions until nothing new appears. Default.
  LeftThenRightClosure,
  /// Every distinct product delta_sigma [Sym(lambda)] delta_tau.
  DoubleTranslates,
  /// [Sym(X_1) x ... x Sym(X_m)] over all block families of each type,
  /// closed under left and right translates.
  BlockFamilies,
};

/// The ideal of Z Sym(n) generated by [Sym(lambda)], lambda in delta, in the
/// coordinates of SymmetricGroup::of(n). With `signed_generators` the
/// generators are the signed sums, giving the image of that ideal under
/// dagger.
IntegerLattice ideal_lattice(const PartitionSet& delta, bool signed_generators = false,
                             IdealConstruction how = IdealConstruction::LeftThenRightClosure);

/// Coordinate indices of the permutations pi(s) with shape(s) in gamma.
std::vector<std::size_t> g_gamma_indices(const PartitionSet& gamma);
std::vector<Permutation> g_gamma(const PartitionSet& gamma);

/// Span of the unit vectors e_sigma for the given coordinates.
IntegerLattice coordinate_lattice(Index ambient_dim,
                                  const std::vector<std::size_t>& coords);

/// Checks Z Sym(n) = Z G(gamma) (+) I(delta) = Z G(gamma) (+) I(delta)^dagger
/// with delta = Par(n) \ gamma*, plus purity of both ideals.
struct DirectSumReport {
  PartitionSet gamma;
  PartitionSet delta;
  bool precondition_ok = false;
  std::string precondition_message;
  Index g_size = 0;
  Index ideal_rank = 0;
  Index signed_ideal_rank = 0;
  BigInt predicted_ideal_rank = 0;
  bool sum_full = false;
  bool intersection_zero = false;
  bool signed_sum_full = false;
  bool signed_intersection_zero = false;
  bool ideal_pure = false;
  bool signed_ideal_pure = false;

  bool passed() const {
    return precondition_ok && sum_full && intersection_zero && signed_sum_full &&
           signed_intersection_zero && ideal_pure && signed_ideal_pure &&
           BigInt(ideal_rank) == predicted_ideal_rank;
  }
};

DirectSumReport check_direct_sum(const PartitionSet& gamma);

/// Z G(gamma) + L = Z^N and Z G(gamma) meets L in 0, decided by projecting L
/// onto the coordinates outside G(gamma).
struct ComplementCheck {
  bool spans = false;
  bool independent = false;
};
ComplementCheck complement_check(const IntegerLattice& l,
                                 const std::vector<std::size_t>& g_coords);

struct SpanCheckOptions {
  /// When set, the builder state is saved here periodically and resumed
  /// from on the next call with the same delta.
  std::string checkpoint_path;
  std::size_t checkpoint_every = 20000;
};

struct SpanCheckResult {
  bool full = false;
  Index target_rank = 0;     // number of coordinates outside G(Par(n) \ delta)
  Index projected_rank = 0;
  std::size_t generators_used = 0;
  bool resumed = false;
};

/// Z G(Par(n) \ delta) + I(delta) == Z Sym(n)?
bool span_plus_ideal_full(const PartitionSet& delta);
SpanCheckResult span_plus_ideal_check(const PartitionSet& delta,
                                      const SpanCheckOptions& options = {});

/// s[H] with one leftover term t, and t[H'] with no leftover terms.
struct RelationChain {
  BlockFamily blocks;          // H
  Word partner;                // t
  BlockFamily partner_blocks;  // H'
};

/// One step of the word-elimination argument. Words whose shape lies outside
/// delta are counted, not logged.
struct EliminationStep {
  enum class Kind {
    /// s[H] with s increasing on every block: the other terms are larger
    /// words, already eliminated.
    IncreasingBlocks,
    /// s[H] whose other terms are all eliminated already.
    Relation,
    /// s[H] = s + t + (eliminated terms), t removed first through t[H'].
    Chain,
  };
  Word word;
  Kind kind = Kind::IncreasingBlocks;
  BlockFamily blocks;
  std::optional<RelationChain> chain;  // the chain used, for Kind::Chain
  /// For Kind::Chain, every chain available at that point of the scan.
  std::vector<RelationChain> alternatives;
  int pass = 1;
};

struct SpanCertificate {
  PartitionSet delta;
  bool complete = false;
  std::size_t outside_delta = 0;           // words with shape outside delta
  std::vector<EliminationStep> log;        // every relation-based elimination
  /// Words that needed more than an increasing-block relation during the
  /// first (decreasing) scan.
  std::vector<Word> first_pass_survivors;
  std::vector<Word> stuck;                 // never removed

  const EliminationStep* step_for(const Word& w) const;
};

/// Best-effort constructive proof that Z S(n) = Z G'(Par(n) \ delta) +
/// alpha I(delta). Failure is not a counterexample.
SpanCertificate greedy_span_certificate(const PartitionSet& delta);

}  // namespace symideal
