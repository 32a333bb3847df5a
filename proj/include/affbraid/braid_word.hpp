#pragma once

#include <vector>

#include "affbraid/permutation.hpp"

namespace affbraid {

/// A word in the Artin generators of the braid group on a fixed number of
/// strands.  Letter +i stands for sigma_i, -i for its inverse; valid letter
/// indices are 1..strands-1.  Words are kept freely reduced at all times
/// (no adjacent sigma_i sigma_i^-1 pairs), so the empty word is the
/// identity.  Free reduction is the only rewriting done here; braid-relation
/// rewriting lives in the normal form machinery.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {});
  static BraidWord identity(int strands);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Concatenation followed by free reduction.  Mixing strand counts is an
/// error.
BraidWord compose(const BraidWord& a, const BraidWord& b);

BraidWord inverse(const BraidWord& a);

BraidWord power(const BraidWord& a, int exponent);

/// Underlying permutation: the strand starting at position i ends at
/// position permutation_of(a).image(i).  Letter signs are irrelevant.
Permutation permutation_of(const BraidWord& a);

bool is_pure(const BraidWord& a);

/// Sum of letter signs; invariant under free reduction and braid relations.
int exponent_sum(const BraidWord& a);

/// The positive half twist (sigma_1)(sigma_2 sigma_1)...(sigma_{k-1}...sigma_1),
/// k(k-1)/2 letters, underlying permutation i -> k+1-i.
BraidWord half_twist(int strands);

/// Square of the half twist; generates the centre for k >= 3.
BraidWord full_twist(int strands);

/// Band generator A_{i,j} = (sigma_{j-1}...sigma_{i+1}) sigma_i^2
/// (sigma_{i+1}^-1...sigma_{j-1}^-1), a pure braid in which strand j loops
/// once around strand i.  Requires 1 <= lower < upper <= strands.
BraidWord band_generator(int lower, int upper, int strands);

}  // namespace affbraid
