#include "affbraid/garside.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "affbraid/errors.hpp"

namespace affbraid {

namespace {

// The normal form engine works on raw image sequences (1-based values at
// 0-based positions) to avoid re-validating permutations in inner loops.
using Images = std::vector<int>;

Images identity_img(int n) {
  Images v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

bool is_identity_img(const Images& v) {
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != i + 1) return false;
  return true;
}

bool is_w0_img(const Images& v) {
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    if (v[i] != n - i) return false;
  return true;
}

Images w0_img(int n) {
  Images v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return v;
}

Images inverse_img(const Images& v) {
  Images out(v.size());
  for (int i = 0; i < static_cast<int>(v.size()); ++i) out[v[i] - 1] = i + 1;
  return out;
}

// Conjugation by the half twist: i -> n+1 - v(n+1-i).
Images tau_img(const Images& v) {
  const int n = static_cast<int>(v.size());
  Images out(v.size());
  for (int i = 0; i < n; ++i) out[i] = n + 1 - v[n - 1 - i];
  return out;
}

// a := a * sigma_i (one more crossing after a): values i and i+1 swap.
void right_multiply_sigma(Images& a, int i) {
  for (int& v : a) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
}

// Moves letters from b into a until the pair is left weighted.  Each move
// transfers one crossing sigma_i with i in the starting set of b but not in
// the finishing set of a; the product a*b is unchanged throughout.
bool slide_pair(Images& a, Images& b) {
  const int n = static_cast<int>(a.size());
  bool moved = false;
  for (;;) {
    const Images ainv = inverse_img(a);
    int pick = 0;
    for (int i = 1; i < n; ++i) {
      if (b[i - 1] > b[i] && !(ainv[i - 1] > ainv[i])) {
        pick = i;
        break;
      }
    }
    if (pick == 0) break;
    right_multiply_sigma(a, pick);
    std::swap(b[pick - 1], b[pick]);
    moved = true;
  }
  return moved;
}

// Sweeps until every adjacent pair is left weighted, dropping identity
// factors and absorbing half twist factors into the power p.  Half twists
// produced in mid-list bubble to the front through the pair slides.
void normalize_factors(int& p, std::vector<Images>& fac) {
  std::erase_if(fac, is_identity_img);
  bool changed = true;
  while (changed) {
    changed = false;
    while (!fac.empty() && is_w0_img(fac.front())) {
      ++p;
      fac.erase(fac.begin());
      changed = true;
    }
    for (std::size_t t = 0; t + 1 < fac.size(); ++t)
      if (slide_pair(fac[t], fac[t + 1])) changed = true;
    if (std::erase_if(fac, is_identity_img) > 0) changed = true;
    for (const Images& f : fac) {
      if (is_w0_img(f)) {
        changed = true;
        break;
      }
    }
  }
}

std::vector<int> permutation_braid_letters(Images img) {
  const int n = static_cast<int>(img.size());
  std::vector<int> out;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i + 1 < n; ++i) {
      if (img[i] > img[i + 1]) {
        out.push_back(i + 1);
        std::swap(img[i], img[i + 1]);
        done = false;
        break;
      }
    }
  }
  return out;
}

BraidWord delta_power_word(int strands, int p) {
  return power(half_twist(strands), p);
}

void check_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw InputError("strand count mismatch: " + std::to_string(a.strands()) +
                     " vs " + std::to_string(b.strands()));
}

}  // namespace

PermutationBraid::PermutationBraid(Permutation permutation)
    : permutation_(std::move(permutation)) {
  if (permutation_.size() < 2)
    throw InputError("permutation braids need at least 2 strands");
}

PermutationBraid PermutationBraid::identity(int strands) {
  return PermutationBraid(Permutation::identity(strands));
}

PermutationBraid PermutationBraid::half_twist(int strands) {
  return PermutationBraid(Permutation::order_reversal(strands));
}

PermutationBraid PermutationBraid::from_letter(int strands, int index) {
  return PermutationBraid(Permutation::adjacent_transposition(strands, index));
}

int PermutationBraid::length() const {
  const auto& img = permutation_.images();
  const int n = permutation_.size();
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (img[i] > img[j]) ++inversions;
  return inversions;
}

std::vector<int> PermutationBraid::starting_set() const {
  const auto& img = permutation_.images();
  std::vector<int> out;
  for (int i = 1; i < permutation_.size(); ++i)
    if (img[i - 1] > img[i]) out.push_back(i);
  return out;
}

std::vector<int> PermutationBraid::finishing_set() const {
  const Images inv = inverse_img(permutation_.images());
  std::vector<int> out;
  for (int i = 1; i < permutation_.size(); ++i)
    if (inv[i - 1] > inv[i]) out.push_back(i);
  return out;
}

PermutationBraid PermutationBraid::delta_conjugate() const {
  return PermutationBraid(Permutation(tau_img(permutation_.images())));
}

BraidWord PermutationBraid::to_word() const {
  return BraidWord(strands(), permutation_braid_letters(permutation_.images()));
}

bool left_weighted(const PermutationBraid& a, const PermutationBraid& b) {
  if (a.strands() != b.strands())
    throw InputError("strand count mismatch between factors");
  const Images ainv = inverse_img(a.permutation().images());
  const auto& bimg = b.permutation().images();
  for (int i = 1; i < a.strands(); ++i)
    if (bimg[i - 1] > bimg[i] && !(ainv[i - 1] > ainv[i])) return false;
  return true;
}

GarsideNormalForm::GarsideNormalForm(int strands, int infimum,
                                     std::vector<PermutationBraid> factors)
    : strands_(strands), infimum_(infimum), factors_(std::move(factors)) {
  if (strands_ < 2) throw InputError("normal forms need at least 2 strands");
  for (const auto& f : factors_) {
    if (f.strands() != strands_)
      throw InputError("factor strand count does not match the normal form");
    if (f.is_identity())
      throw InputError("identity factor in normal form");
    if (f.is_half_twist())
      throw InputError("half twist factor in normal form; it belongs in the power");
  }
  for (std::size_t t = 0; t + 1 < factors_.size(); ++t)
    if (!left_weighted(factors_[t], factors_[t + 1]))
      throw InputError("adjacent factors are not left weighted");
}

BraidWord GarsideNormalForm::to_word() const {
  BraidWord w = delta_power_word(strands_, infimum_);
  for (const auto& f : factors_) w = compose(w, f.to_word());
  return w;
}

bool GarsideNormalForm::operator<(const GarsideNormalForm& other) const {
  if (strands_ != other.strands_) return strands_ < other.strands_;
  if (infimum_ != other.infimum_) return infimum_ < other.infimum_;
  if (factors_.size() != other.factors_.size())
    return factors_.size() < other.factors_.size();
  for (std::size_t t = 0; t < factors_.size(); ++t) {
    const auto& x = factors_[t].permutation().images();
    const auto& y = other.factors_[t].permutation().images();
    if (x != y) return x < y;
  }
  return false;
}

GarsideNormalForm normal_form(const BraidWord& a) {
  const int n = a.strands();
  // Rewrite sigma_i^-1 as Delta^-1 (Delta sigma_i^-1); the parenthesised part
  // is the simple element with permutation tau_i o w0.
  const Images w0 = w0_img(n);
  std::vector<std::optional<Images>> stream;  // nullopt marks Delta^-1
  stream.reserve(a.letters().size() * 2);
  for (int l : a.letters()) {
    if (l > 0) {
      Images t = identity_img(n);
      std::swap(t[l - 1], t[l]);
      stream.push_back(std::move(t));
    } else {
      const int i = -l;
      stream.push_back(std::nullopt);
      Images s(w0);
      for (int& v : s) {
        if (v == i)
          v = i + 1;
        else if (v == i + 1)
          v = i;
      }
      stream.push_back(std::move(s));
    }
  }
  // Move every Delta^-1 to the front; passing one over a simple factor
  // conjugates the factor by the half twist.
  int deltas = 0;
  std::vector<Images> fac;
  fac.reserve(stream.size());
  for (auto it = stream.rbegin(); it != stream.rend(); ++it) {
    if (!*it) {
      ++deltas;
      continue;
    }
    fac.push_back(deltas % 2 ? tau_img(**it) : std::move(**it));
  }
  std::reverse(fac.begin(), fac.end());
  int p = -deltas;
  normalize_factors(p, fac);
  std::vector<PermutationBraid> factors;
  factors.reserve(fac.size());
  for (auto& f : fac) factors.emplace_back(Permutation(std::move(f)));
  return GarsideNormalForm(n, p, std::move(factors));
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
  check_same_strands(a, b);
  return normal_form(a) == normal_form(b);
}

std::pair<GarsideNormalForm, BraidWord> cycling_with_conjugator(
    const GarsideNormalForm& nf) {
  const int n = nf.strands();
  if (nf.canonical_length() == 0) return {nf, BraidWord::identity(n)};
  const PermutationBraid first = nf.infimum() % 2 != 0
                                     ? nf.factors().front().delta_conjugate()
                                     : nf.factors().front();
  const BraidWord u = first.to_word();
  BraidWord w = delta_power_word(n, nf.infimum());
  for (std::size_t t = 1; t < nf.factors().size(); ++t)
    w = compose(w, nf.factors()[t].to_word());
  w = compose(w, u);
  return {normal_form(w), u};
}

GarsideNormalForm cycling(const GarsideNormalForm& nf) {
  return cycling_with_conjugator(nf).first;
}

std::pair<GarsideNormalForm, BraidWord> decycling_with_conjugator(
    const GarsideNormalForm& nf) {
  const int n = nf.strands();
  if (nf.canonical_length() == 0) return {nf, BraidWord::identity(n)};
  const BraidWord last = nf.factors().back().to_word();
  BraidWord w = compose(last, delta_power_word(n, nf.infimum()));
  for (std::size_t t = 0; t + 1 < nf.factors().size(); ++t)
    w = compose(w, nf.factors()[t].to_word());
  return {normal_form(w), inverse(last)};
}

GarsideNormalForm decycling(const GarsideNormalForm& nf) {
  return decycling_with_conjugator(nf).first;
}

namespace {

struct SummitElement {
  GarsideNormalForm nf;
  BraidWord conjugator;  // u with u^-1 (input) u = nf
};

// Cycles until the infimum is maximal, then decycles until the supremum is
// minimal.  Each phase walks the (eventually periodic) orbit and stops once
// it closes without improvement; cycling cannot lower the infimum and
// decycling cannot raise the supremum, so phase two preserves phase one.
SummitElement to_summit(const BraidWord& a) {
  GarsideNormalForm x = normal_form(a);
  BraidWord u = BraidWord::identity(a.strands());
  std::set<GarsideNormalForm> seen{x};
  while (x.canonical_length() > 0) {
    auto [y, du] = cycling_with_conjugator(x);
    if (y.infimum() > x.infimum()) {
      x = y;
      u = compose(u, du);
      seen.clear();
      seen.insert(x);
    } else if (seen.count(y)) {
      break;
    } else {
      x = y;
      u = compose(u, du);
      seen.insert(x);
    }
  }
  seen.clear();
  seen.insert(x);
  while (x.canonical_length() > 0) {
    auto [y, du] = decycling_with_conjugator(x);
    if (y.supremum() < x.supremum()) {
      x = y;
      u = compose(u, du);
      seen.clear();
      seen.insert(x);
    } else if (seen.count(y)) {
      break;
    } else {
      x = y;
      u = compose(u, du);
      seen.insert(x);
    }
  }
  return {std::move(x), std::move(u)};
}

std::vector<BraidWord> all_simple_words(int n) {
  std::vector<BraidWord> out;
  Images img = identity_img(n);
  while (std::next_permutation(img.begin(), img.end())) {
    out.push_back(BraidWord(n, permutation_braid_letters(img)));
  }
  return out;
}

// Closure of the summit seed under conjugation by simple elements, keeping
// only conjugates that stay at the summit infimum and length.  Optionally
// stops as soon as `target` is produced, returning its conjugator from the
// seed.
std::map<GarsideNormalForm, BraidWord> summit_closure(
    const SummitElement& seed, std::size_t cap,
    const GarsideNormalForm* target, std::optional<BraidWord>* target_conjugator) {
  const int n = seed.nf.strands();
  const int inf_star = seed.nf.infimum();
  const int len_star = seed.nf.canonical_length();
  const std::vector<BraidWord> simples = all_simple_words(n);

  std::map<GarsideNormalForm, BraidWord> set;
  std::deque<GarsideNormalForm> queue;
  set.emplace(seed.nf, BraidWord::identity(n));
  queue.push_back(seed.nf);
  if (target && seed.nf == *target) {
    if (target_conjugator) *target_conjugator = BraidWord::identity(n);
    return set;
  }
  while (!queue.empty()) {
    const GarsideNormalForm v = queue.front();
    queue.pop_front();
    const BraidWord vw = v.to_word();
    const BraidWord vconj = set.at(v);
    for (const BraidWord& s : simples) {
      const BraidWord w = compose(compose(inverse(s), vw), s);
      GarsideNormalForm nf = normal_form(w);
      if (nf.infimum() != inf_star || nf.canonical_length() != len_star)
        continue;
      if (set.count(nf)) continue;
      if (set.size() >= cap)
        throw ResourceLimitError(
            "super summit set exceeds the configured cap of " +
            std::to_string(cap) + " elements");
      BraidWord conj = compose(vconj, s);
      if (target && nf == *target) {
        if (target_conjugator) *target_conjugator = conj;
        set.emplace(std::move(nf), std::move(conj));
        return set;
      }
      queue.push_back(nf);
      set.emplace(std::move(nf), std::move(conj));
    }
  }
  return set;
}

}  // namespace

std::vector<GarsideNormalForm> super_summit_set(const BraidWord& a,
                                                const SummitOptions& options) {
  const SummitElement seed = to_summit(a);
  const auto closure = summit_closure(seed, options.element_cap, nullptr, nullptr);
  std::vector<GarsideNormalForm> out;
  out.reserve(closure.size());
  for (const auto& [nf, conj] : closure) out.push_back(nf);
  return out;  // map order is the canonical ordering
}

ConjugacyResult conjugate_in_braid_group(const BraidWord& a, const BraidWord& b,
                                         bool want_witness,
                                         const SummitOptions& options) {
  check_same_strands(a, b);
  if (exponent_sum(a) != exponent_sum(b)) return {false, std::nullopt};
  const SummitElement sa = to_summit(a);
  const SummitElement sb = to_summit(b);
  if (sa.nf.infimum() != sb.nf.infimum() ||
      sa.nf.canonical_length() != sb.nf.canonical_length())
    return {false, std::nullopt};
  std::optional<BraidWord> path;
  summit_closure(sa, options.element_cap, &sb.nf, &path);
  if (!path) return {false, std::nullopt};
  ConjugacyResult result;
  result.conjugate = true;
  if (want_witness) {
    // u^-1 a u = b for u = sa.conjugator * path * sb.conjugator^-1, so the
    // witness with c a c^-1 = b is the inverse of u.
    const BraidWord u =
        compose(compose(sa.conjugator, *path), inverse(sb.conjugator));
    result.witness = inverse(u);
  }
  return result;
}

}  // namespace affbraid
