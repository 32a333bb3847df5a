#include "affbraid/braid_word.hpp"

#include <cstdlib>
#include <string>

#include "affbraid/errors.hpp"

namespace affbraid {

namespace {

void check_strands(int strands) {
  if (strands < 2)
    throw InputError("braid words need at least 2 strands, got " +
                     std::to_string(strands));
}

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands) {
  check_strands(strands);
  letters_.reserve(letters.size());
  for (int l : letters) {
    if (l == 0 || std::abs(l) > strands - 1)
      throw InputError("letter " + std::to_string(l) +
                       " out of range for a braid on " +
                       std::to_string(strands) + " strands");
    push_reduced(letters_, l);
  }
}

BraidWord BraidWord::identity(int strands) { return BraidWord(strands); }

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw InputError("strand count mismatch: " + std::to_string(a.strands()) +
                     " vs " + std::to_string(b.strands()));
  std::vector<int> letters = a.letters();
  letters.reserve(letters.size() + b.letters().size());
  for (int l : b.letters()) push_reduced(letters, l);
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& a) {
  std::vector<int> letters;
  letters.reserve(a.letters().size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it)
    letters.push_back(-*it);
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord power(const BraidWord& a, int exponent) {
  const BraidWord base = exponent >= 0 ? a : inverse(a);
  const int count = exponent >= 0 ? exponent : -exponent;
  BraidWord result = BraidWord::identity(a.strands());
  for (int i = 0; i < count; ++i) result = compose(result, base);
  return result;
}

Permutation permutation_of(const BraidWord& a) {
  const int k = a.strands();
  // occupant[p] = strand currently at position p+1
  std::vector<int> occupant(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) occupant[p] = p + 1;
  for (int l : a.letters()) {
    const int j = std::abs(l);
    std::swap(occupant[j - 1], occupant[j]);
  }
  std::vector<int> images(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) images[occupant[p] - 1] = p + 1;
  return Permutation(std::move(images));
}

bool is_pure(const BraidWord& a) { return permutation_of(a).is_identity(); }

int exponent_sum(const BraidWord& a) {
  int sum = 0;
  for (int l : a.letters()) sum += l > 0 ? 1 : -1;
  return sum;
}

BraidWord half_twist(int strands) {
  check_strands(strands);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(strands) * (strands - 1) / 2);
  for (int r = 1; r < strands; ++r)
    for (int i = r; i >= 1; --i) letters.push_back(i);
  return BraidWord(strands, std::move(letters));
}

BraidWord full_twist(int strands) {
  const BraidWord h = half_twist(strands);
  return compose(h, h);
}

BraidWord band_generator(int lower, int upper, int strands) {
  check_strands(strands);
  if (lower < 1 || lower >= upper || upper > strands)
    throw InputError("band generator needs 1 <= lower < upper <= strands, got (" +
                     std::to_string(lower) + ", " + std::to_string(upper) + ")");
  std::vector<int> letters;
  for (int m = upper - 1; m > lower; --m) letters.push_back(m);
  letters.push_back(lower);
  letters.push_back(lower);
  for (int m = lower + 1; m < upper; ++m) letters.push_back(-m);
  return BraidWord(strands, std::move(letters));
}

}  // namespace affbraid
