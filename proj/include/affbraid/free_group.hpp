#pragma once

#include <vector>

namespace affbraid {

/// A reduced word in the free group of rank 11, the fundamental group of
/// the four point affine configuration space.  Letters are signed integers
/// with absolute value in 1..11; reduction is applied on construction and
/// preserved by every operation.
class FreeWord {
 public:
  static constexpr int rank = 11;

  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> letters_;
};

/// Returns its argument: words are kept reduced from birth, so reduction is
/// idempotent by construction.  Kept as a named operation for pipelines that
/// read raw letter lists.
FreeWord reduce(const FreeWord& a);

FreeWord multiply(const FreeWord& a, const FreeWord& b);
FreeWord invert(const FreeWord& a);

/// Strips matching first and last letters until none cancel.  The result is
/// the shortest word in the conjugacy class of the input.
FreeWord cyclic_reduction(const FreeWord& a);

/// Conjugacy test: true exactly when the cyclic reductions are rotations of
/// one another.
bool free_conjugate(const FreeWord& a, const FreeWord& b);

/// The sphere-minus-punctures bookkeeping for four points: one puncture per
/// ordered coincidence type, a pair of strands with an orientation sign.
struct PunctureModel {
  struct Label {
    int lower = 1;
    int upper = 2;
    int sign = 1;
    friend bool operator==(const Label&, const Label&) = default;
  };

  int puncture_count = 0;
  int rank = 0;
  std::vector<Label> labels;
};

/// The constant four point model: 12 punctures, fundamental group free of
/// rank 11.
PunctureModel puncture_table();

}  // namespace affbraid
