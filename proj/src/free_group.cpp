#include "affbraid/free_group.hpp"

#include <algorithm>
#include <string>

#include "affbraid/errors.hpp"

namespace affbraid {

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (const int l : letters) {
    if (l == 0 || l > rank || l < -rank) {
      throw InputError("free group letters need absolute value in 1.." +
                       std::to_string(rank) + ", got " + std::to_string(l));
    }
    if (!letters_.empty() && letters_.back() == -l) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

FreeWord reduce(const FreeWord& a) { return a; }

FreeWord multiply(const FreeWord& a, const FreeWord& b) {
  std::vector<int> joined = a.letters();
  joined.insert(joined.end(), b.letters().begin(), b.letters().end());
  return FreeWord(std::move(joined));
}

FreeWord invert(const FreeWord& a) {
  std::vector<int> out(a.letters().rbegin(), a.letters().rend());
  for (int& l : out) l = -l;
  return FreeWord(std::move(out));
}

FreeWord cyclic_reduction(const FreeWord& a) {
  std::vector<int> letters = a.letters();
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(std::vector<int>(letters.begin() + lo, letters.begin() + hi));
}

bool free_conjugate(const FreeWord& a, const FreeWord& b) {
  const std::vector<int> ca = cyclic_reduction(a).letters();
  const std::vector<int> cb = cyclic_reduction(b).letters();
  if (ca.size() != cb.size()) return false;
  if (ca.empty()) return true;
  std::vector<int> doubled = ca;
  doubled.insert(doubled.end(), ca.begin(), ca.end());
  return std::search(doubled.begin(), doubled.end(), cb.begin(), cb.end()) !=
         doubled.end();
}

PunctureModel puncture_table() {
  PunctureModel model;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      for (const int sign : {1, -1}) {
        model.labels.push_back({i, j, sign});
      }
    }
  }
  model.puncture_count = static_cast<int>(model.labels.size());
  model.rank = model.puncture_count - 1;
  return model;
}

}  // namespace affbraid
