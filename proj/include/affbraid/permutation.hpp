#pragma once

#include <compare>
#include <vector>

namespace affbraid {

/// A permutation of {1, ..., n} stored as its image sequence
/// pi(1), ..., pi(n).  Values are 1-based throughout.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Swaps i and i+1, fixes everything else.  Requires 1 <= i <= n-1.
  static Permutation adjacent_transposition(int n, int i);
  /// i -> n+1-i.
  static Permutation order_reversal(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  bool is_order_reversal() const;

  /// Composition in application order: (*this) first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace affbraid
