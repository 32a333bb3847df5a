#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "affbraid/braid_word.hpp"

namespace affbraid {

/// A permutation braid (simple element): the positive braid in which two
/// strands cross exactly when the permutation inverts them.  These are the
/// divisors of the half twist; the identity and the half twist itself are
/// the extremes.
class PermutationBraid {
 public:
  explicit PermutationBraid(Permutation permutation);

  static PermutationBraid identity(int strands);
  static PermutationBraid half_twist(int strands);
  /// The single crossing sigma_i.
  static PermutationBraid from_letter(int strands, int index);

  int strands() const { return permutation_.size(); }
  const Permutation& permutation() const { return permutation_; }

  bool is_identity() const { return permutation_.is_identity(); }
  bool is_half_twist() const { return permutation_.is_order_reversal(); }

  /// Number of crossings = number of inversions of the permutation.
  int length() const;

  /// { i : sigma_i is a left divisor }, the descent set of the permutation.
  std::vector<int> starting_set() const;
  /// { i : sigma_i is a right divisor }, the descent set of the inverse.
  std::vector<int> finishing_set() const;

  /// Conjugate by the half twist (an involution on simple elements).
  PermutationBraid delta_conjugate() const;

  /// Canonical positive word: repeatedly emit the smallest left descent.
  BraidWord to_word() const;

  friend bool operator==(const PermutationBraid&, const PermutationBraid&) = default;
  friend auto operator<=>(const PermutationBraid&, const PermutationBraid&) = default;

 private:
  Permutation permutation_;
};

/// Whether the product a*b is left weighted, i.e. the starting set of b is
/// contained in the finishing set of a.
bool left_weighted(const PermutationBraid& a, const PermutationBraid& b);

/// Left-greedy normal form Delta^p s_1 ... s_l.  Invariants: no factor is
/// the identity or the half twist, and every adjacent factor pair is left
/// weighted.  Two words represent the same braid group element exactly when
/// their normal forms coincide.
class GarsideNormalForm {
 public:
  GarsideNormalForm(int strands, int infimum,
                    std::vector<PermutationBraid> factors);

  int strands() const { return strands_; }
  int infimum() const { return infimum_; }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  int supremum() const { return infimum_ + canonical_length(); }
  const std::vector<PermutationBraid>& factors() const { return factors_; }

  /// Canonical word: the half twist power followed by the factor words.
  BraidWord to_word() const;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
  bool operator<(const GarsideNormalForm& other) const;

 private:
  int strands_;
  int infimum_;
  std::vector<PermutationBraid> factors_;
};

GarsideNormalForm normal_form(const BraidWord& a);

/// Decides equality in the braid group by comparing normal forms.
bool words_equal(const BraidWord& a, const BraidWord& b);

/// Conjugates by the first factor (twisted by the half twist when the
/// infimum is odd).  Never decreases the infimum and never increases the
/// supremum.  Canonical length zero is returned unchanged.
GarsideNormalForm cycling(const GarsideNormalForm& nf);
/// Variant returning the conjugating word u, with u^-1 x u the result.
std::pair<GarsideNormalForm, BraidWord> cycling_with_conjugator(
    const GarsideNormalForm& nf);

/// Conjugates by the inverse of the last factor.  Never increases the
/// supremum and never decreases the infimum.  Canonical length zero is
/// returned unchanged.
GarsideNormalForm decycling(const GarsideNormalForm& nf);
std::pair<GarsideNormalForm, BraidWord> decycling_with_conjugator(
    const GarsideNormalForm& nf);

struct SummitOptions {
  /// Hard cap on the number of stored summit elements; exceeding it raises
  /// ResourceLimitError rather than computing silently forever.
  std::size_t element_cap = 100000;
};

/// The set of conjugates with maximal infimum and minimal supremum, as
/// sorted normal forms (ordering: infimum, canonical length, factor image
/// sequences).
std::vector<GarsideNormalForm> super_summit_set(const BraidWord& a,
                                                const SummitOptions& options = {});

struct ConjugacyResult {
  bool conjugate = false;
  /// When requested and conjugate: a word c with c a c^-1 = b.
  std::optional<BraidWord> witness;
};

/// Decides conjugacy in the full braid group by intersecting summit sets.
ConjugacyResult conjugate_in_braid_group(const BraidWord& a, const BraidWord& b,
                                         bool want_witness = false,
                                         const SummitOptions& options = {});

}  // namespace affbraid
