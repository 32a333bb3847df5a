#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "affbraid/braid_word.hpp"
#include "affbraid/garside.hpp"

namespace affbraid {

/// An element of the quotient of the pure braid group on k strands by its
/// center, the cyclic group generated by the full twist.  The quotient
/// arithmetic is exact for every k >= 2; reading classes as homotopy classes
/// of loops of affine point configurations is only valid for k >= 5, which
/// small_strand_caveat flags.
class CosetClass {
 public:
  int strands() const { return representative_.strands(); }
  const BraidWord& representative() const { return representative_; }
  /// True when strands < 5: the group arithmetic still applies, the loop
  /// interpretation does not (k = 4 is the free-group module's job).
  bool small_strand_caveat() const { return strands() < 5; }

 private:
  friend CosetClass make_class(const BraidWord& w);
  explicit CosetClass(BraidWord representative)
      : representative_(std::move(representative)) {}

  BraidWord representative_;
};

/// Wraps a pure word as a coset of the center.  Non-pure input is rejected
/// and the offending permutation is reported in the error message.
CosetClass make_class(const BraidWord& w);

/// Exact equality in the quotient: representatives must differ by an integer
/// power of the full twist.  The exponent sum pins the only candidate power,
/// so a single word equality decides.
bool cosets_equal(const CosetClass& x, const CosetClass& y);

/// Conjugacy in the quotient, with conjugators drawn from the whole braid
/// group on k strands.  This is a sound relaxation: restricting conjugators
/// to pure braids could only shrink the relation, and no certified procedure
/// for that restriction is provided here.
bool cosets_conjugate(const CosetClass& x, const CosetClass& y,
                      const SummitOptions& options = {});

/// A finite presentation of the quotient.  Generators are the band
/// generators A_{ij}; each relator is a word in the generators, stored as
/// signed 1-based indices into `generators` (negative means inverse).
struct Presentation {
  int strands = 2;
  /// All pairs (i, j) with 1 <= i < j <= strands, lexicographically.
  std::vector<std::pair<int, int>> generators;
  std::vector<std::vector<int>> relators;
  /// Position in `relators` of the relator that kills the full twist.
  std::size_t center_relator_index = 0;

  /// 1-based position of generator (i, j) in `generators`.
  int generator_index(int i, int j) const;
  /// Rewrites a relator into crossing letters via band_generator.
  BraidWord expand(const std::vector<int>& relator) const;
};

/// Emits the band-generator presentation of the quotient: the conjugation
/// action relators of the pure braid group plus one relator equating the
/// full-twist product to the identity.  Every relator is verified against
/// the word-problem kernel before being returned.
Presentation emit_presentation(int k);

}  // namespace affbraid
