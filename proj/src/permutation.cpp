#include "affbraid/permutation.hpp"

#include <numeric>
#include <string>

#include "affbraid/errors.hpp"

namespace affbraid {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1) throw InputError("permutation needs at least one element");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw InputError("image sequence is not a bijection of 1.." +
                       std::to_string(n));
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  if (i < 1 || i > n - 1)
    throw InputError("transposition index " + std::to_string(i) +
                     " out of range 1.." + std::to_string(n - 1));
  Permutation p = identity(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::order_reversal(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[i] = n - i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

bool Permutation::is_order_reversal() const {
  const int n = size();
  for (int i = 0; i < n; ++i)
    if (images_[i] != n - i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size())
    throw InputError("cannot compose permutations of different sizes");
  std::vector<int> img(images_.size());
  for (int i = 0; i < size(); ++i) img[i] = next.images_[images_[i] - 1];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < size(); ++i) img[images_[i] - 1] = i + 1;
  return Permutation(std::move(img));
}

}  // namespace affbraid
