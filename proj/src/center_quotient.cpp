#include "affbraid/center_quotient.hpp"

#include <string>

#include "affbraid/errors.hpp"

namespace affbraid {

namespace {

std::string permutation_text(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p.image(i));
  }
  return out;
}

// The unique full-twist power that could relate the two representatives, or
// nullopt when the exponent sums already rule equality out.
std::optional<int> aligning_power(const CosetClass& x, const CosetClass& y) {
  if (x.strands() != y.strands()) {
    throw InputError("strand count mismatch: " + std::to_string(x.strands()) +
                     " vs " + std::to_string(y.strands()));
  }
  const int k = x.strands();
  const int twist_sum = k * (k - 1);
  const int d = exponent_sum(x.representative()) -
                exponent_sum(y.representative());
  if (((d % twist_sum) + twist_sum) % twist_sum != 0) return std::nullopt;
  return d / twist_sum;
}

}  // namespace

CosetClass make_class(const BraidWord& w) {
  if (!is_pure(w)) {
    throw InputError("coset classes need a pure word; this one permutes the "
                     "strands to " + permutation_text(permutation_of(w)));
  }
  return CosetClass(w);
}

bool cosets_equal(const CosetClass& x, const CosetClass& y) {
  const auto m = aligning_power(x, y);
  if (!m) return false;
  const BraidWord shifted =
      compose(y.representative(), power(full_twist(x.strands()), *m));
  return words_equal(x.representative(), shifted);
}

bool cosets_conjugate(const CosetClass& x, const CosetClass& y,
                      const SummitOptions& options) {
  const auto m = aligning_power(x, y);
  if (!m) return false;
  const BraidWord shifted =
      compose(y.representative(), power(full_twist(x.strands()), *m));
  return conjugate_in_braid_group(x.representative(), shifted, false, options)
      .conjugate;
}

int Presentation::generator_index(int i, int j) const {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g] == std::pair<int, int>{i, j}) {
      return static_cast<int>(g) + 1;
    }
  }
  throw InputError("no generator with indices (" + std::to_string(i) + ", " +
                   std::to_string(j) + ")");
}

BraidWord Presentation::expand(const std::vector<int>& relator) const {
  BraidWord out(strands, {});
  for (const int g : relator) {
    if (g == 0 || std::size_t(g > 0 ? g : -g) > generators.size()) {
      throw InputError("relator index " + std::to_string(g) +
                       " is out of range");
    }
    const auto [i, j] = generators[std::size_t(g > 0 ? g : -g) - 1];
    const BraidWord band = band_generator(i, j, strands);
    out = compose(out, g > 0 ? band : inverse(band));
  }
  return out;
}

Presentation emit_presentation(int k) {
  if (k < 2) {
    throw InputError("presentations need at least 2 strands, got " +
                     std::to_string(k));
  }
  Presentation p;
  p.strands = k;
  for (int i = 1; i < k; ++i) {
    for (int j = i + 1; j <= k; ++j) p.generators.emplace_back(i, j);
  }

  // Conjugation action of A_{rs} on A_{ij} for s < j.  The conjugated value
  // T A_{ij} T^-1 depends only on how i sits relative to r and s:
  //   s < i or i < r   commute                 T = e
  //   s = i            chain                   T = A_{rj}
  //   r = i            shared lower strand     T = A_{rj} A_{sj}
  //   r < i < s        interleaved             T = A_{rj} A_{sj} A_{rj}^-1 A_{sj}^-1
  // Each relator below spells A_{rs}^-1 A_{ij} A_{rs} T A_{ij}^-1 T^-1.
  for (int j = 3; j <= k; ++j) {
    for (int s = 2; s < j; ++s) {
      for (int r = 1; r < s; ++r) {
        for (int i = 1; i < j; ++i) {
          const int g = p.generator_index(r, s);
          const int h = p.generator_index(i, j);
          std::vector<int> conjugator;
          if (s == i) {
            conjugator = {p.generator_index(r, j)};
          } else if (r == i) {
            conjugator = {p.generator_index(r, j), p.generator_index(s, j)};
          } else if (r < i && i < s) {
            const int a = p.generator_index(r, j);
            const int b = p.generator_index(s, j);
            conjugator = {a, b, -a, -b};
          }
          std::vector<int> relator = {-g, h, g};
          relator.insert(relator.end(), conjugator.begin(), conjugator.end());
          relator.push_back(-h);
          for (auto it = conjugator.rbegin(); it != conjugator.rend(); ++it) {
            relator.push_back(-*it);
          }
          p.relators.push_back(std::move(relator));
        }
      }
    }
  }

  std::vector<int> center;
  for (int j = 2; j <= k; ++j) {
    for (int i = 1; i < j; ++i) center.push_back(p.generator_index(i, j));
  }
  p.center_relator_index = p.relators.size();
  p.relators.push_back(std::move(center));

  // Never hand out an unverified presentation.
  for (std::size_t idx = 0; idx < p.relators.size(); ++idx) {
    const BraidWord value = p.expand(p.relators[idx]);
    const bool ok = idx == p.center_relator_index
                        ? words_equal(value, full_twist(k))
                        : words_equal(value, BraidWord(k, {}));
    if (!ok) {
      throw Error("presentation self-check failed on relator " +
                  std::to_string(idx));
    }
  }
  return p;
}

}  // namespace affbraid
