#include <doctest.h>

#include <random>
#include <set>

#include "affbraid/errors.hpp"
#include "affbraid/garside.hpp"
#include "bruteforce_oracle.hpp"
#include "helpers.hpp"

using namespace affbraid;

namespace {

BraidWord w(int strands, std::vector<int> letters) {
  return BraidWord(strands, std::move(letters));
}

}  // namespace

TEST_CASE("permutation braid structure") {
  const PermutationBraid s1 = PermutationBraid::from_letter(3, 1);
  CHECK(s1.length() == 1);
  CHECK(s1.starting_set() == std::vector<int>{1});
  CHECK(s1.finishing_set() == std::vector<int>{1});
  CHECK(s1.to_word() == w(3, {1}));

  const PermutationBraid d = PermutationBraid::half_twist(3);
  CHECK(d.length() == 3);
  CHECK(d.starting_set() == std::vector<int>{1, 2});
  CHECK(d.finishing_set() == std::vector<int>{1, 2});
  CHECK(words_equal(d.to_word(), half_twist(3)));

  // sigma_1 sigma_2 as a permutation braid: starts with sigma_1, ends with sigma_2.
  const PermutationBraid b(Permutation({3, 1, 2}));
  CHECK(b.length() == 2);
  CHECK(b.starting_set() == std::vector<int>{1});
  CHECK(b.finishing_set() == std::vector<int>{2});
  CHECK(b.to_word() == w(3, {1, 2}));

  CHECK(PermutationBraid::half_twist(4).delta_conjugate() ==
        PermutationBraid::half_twist(4));
  CHECK(PermutationBraid::from_letter(4, 1).delta_conjugate() ==
        PermutationBraid::from_letter(4, 3));
}

TEST_CASE("normal form of generators and twists") {
  const auto nf1 = normal_form(w(2, {1}));
  CHECK(nf1.infimum() == 1);
  CHECK(nf1.canonical_length() == 0);

  const auto nf2 = normal_form(w(2, {1, 1}));
  CHECK(nf2.infimum() == 2);
  CHECK(nf2.canonical_length() == 0);

  const auto nf3 = normal_form(w(3, {1, 2, 1}));
  CHECK(nf3.infimum() == 1);
  CHECK(nf3.canonical_length() == 0);

  const auto nf4 = normal_form(w(3, {-1}));
  CHECK(nf4.infimum() == -1);
  CHECK(nf4.canonical_length() == 1);

  const auto nf5 = normal_form(BraidWord::identity(5));
  CHECK(nf5.infimum() == 0);
  CHECK(nf5.canonical_length() == 0);

  for (int k = 2; k <= 6; ++k) {
    const auto nf = normal_form(full_twist(k));
    CHECK(nf.infimum() == 2);
    CHECK(nf.canonical_length() == 0);
  }
}

TEST_CASE("normal form round trip is idempotent") {
  std::mt19937 rng(2001);
  for (int k = 2; k <= 6; ++k) {
    for (int trial = 0; trial < 40; ++trial) {
      const BraidWord a = testgen::random_word(k, 25, rng);
      const auto nf = normal_form(a);
      CHECK(normal_form(nf.to_word()) == nf);
      CHECK(nf.supremum() == nf.infimum() + nf.canonical_length());
    }
  }
}

TEST_CASE("normal form factors are valid and left weighted") {
  std::mt19937 rng(2002);
  for (int k = 3; k <= 6; ++k) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto nf = normal_form(testgen::random_word(k, 30, rng));
      for (const auto& f : nf.factors()) {
        CHECK_FALSE(f.is_identity());
        CHECK_FALSE(f.is_half_twist());
      }
      for (std::size_t t = 0; t + 1 < nf.factors().size(); ++t)
        CHECK(left_weighted(nf.factors()[t], nf.factors()[t + 1]));
    }
  }
}

TEST_CASE("words_equal: relations hold, distinct generators differ") {
  CHECK(words_equal(w(3, {1, 2, 1}), w(3, {2, 1, 2})));
  CHECK(words_equal(w(4, {1, 3}), w(4, {3, 1})));
  CHECK_FALSE(words_equal(w(3, {1}), w(3, {2})));
  CHECK_FALSE(words_equal(w(3, {1}), w(3, {-1})));
  CHECK(words_equal(w(3, {1, 2, -1}), w(3, {-2, 1, 2})));
  CHECK_THROWS_AS(words_equal(w(3, {1}), w(4, {1})), InputError);
}

TEST_CASE("words_equal agrees with the brute-force oracle on short words") {
  const oracle::B3WordClasses classes(8);
  std::mt19937 rng(2003);
  std::uniform_int_distribution<int> len(0, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const BraidWord a = testgen::random_word(3, len(rng), rng);
    const BraidWord b = testgen::random_word(3, len(rng), rng);
    CHECK(words_equal(a, b) == classes.equal(a, b));
  }
  // equivalent pairs by construction: w ~ conjugate relation insertions
  CHECK(classes.equal(w(3, {1, 2, 1}), w(3, {2, 1, 2})));
  CHECK(classes.equal(w(3, {1, -1}), w(3, {})));
  CHECK_FALSE(classes.equal(w(3, {1}), w(3, {2})));
}

TEST_CASE("half twist squared is central") {
  std::mt19937 rng(2004);
  for (int k = 2; k <= 6; ++k) {
    const BraidWord d2 = full_twist(k);
    for (int trial = 0; trial < 20; ++trial) {
      const BraidWord a = testgen::random_word(k, 16, rng);
      CHECK(words_equal(compose(d2, a), compose(a, d2)));
    }
  }
}

TEST_CASE("cycling and decycling preserve the element's conjugacy class") {
  std::mt19937 rng(2005);
  for (int k = 2; k <= 5; ++k) {
    for (int trial = 0; trial < 25; ++trial) {
      const BraidWord a = testgen::random_word(k, 14, rng);
      const auto nf = normal_form(a);

      const auto [cy, cu] = cycling_with_conjugator(nf);
      CHECK(cy.infimum() >= nf.infimum());
      CHECK(cy.supremum() <= nf.supremum());
      CHECK(words_equal(compose(compose(inverse(cu), a), cu), cy.to_word()));

      const auto [dy, du] = decycling_with_conjugator(nf);
      CHECK(dy.infimum() >= nf.infimum());
      CHECK(dy.supremum() <= nf.supremum());
      CHECK(words_equal(compose(compose(inverse(du), a), du), dy.to_word()));
    }
  }
}

TEST_CASE("cycling leaves half twist powers alone") {
  const auto nf = normal_form(power(half_twist(4), 3));
  CHECK(cycling(nf) == nf);
  CHECK(decycling(nf) == nf);
}

TEST_CASE("super summit set of a single crossing") {
  const auto sss = super_summit_set(w(3, {1}));
  REQUIRE(sss.size() == 2);
  // the two conjugates are exactly sigma_1 and sigma_2
  std::set<std::vector<int>> reps;
  for (const auto& nf : sss) reps.insert(nf.to_word().letters());
  CHECK(reps.count({1}) == 1);
  CHECK(reps.count({2}) == 1);
}

TEST_CASE("super summit set of the full twist is a single point") {
  const auto sss = super_summit_set(full_twist(3));
  REQUIRE(sss.size() == 1);
  CHECK(sss[0].infimum() == 2);
  CHECK(sss[0].canonical_length() == 0);
}

TEST_CASE("super summit set is a conjugacy invariant") {
  std::mt19937 rng(2006);
  for (int trial = 0; trial < 10; ++trial) {
    const BraidWord a = testgen::random_word(4, 8, rng);
    const BraidWord c = testgen::random_word(4, 8, rng);
    const BraidWord b = compose(compose(c, a), inverse(c));
    CHECK(super_summit_set(a) == super_summit_set(b));
  }
}

TEST_CASE("summit set cap raises a resource error") {
  SummitOptions opts;
  opts.element_cap = 1;
  // sigma_1 in B_3 has a two-element summit set
  CHECK_THROWS_AS(super_summit_set(w(3, {1}), opts), ResourceLimitError);
}

TEST_CASE("conjugacy decisions with verified witnesses") {
  const auto r1 = conjugate_in_braid_group(w(3, {1}), w(3, {2}), true);
  REQUIRE(r1.conjugate);
  REQUIRE(r1.witness.has_value());
  CHECK(words_equal(compose(compose(*r1.witness, w(3, {1})), inverse(*r1.witness)),
                    w(3, {2})));

  CHECK_FALSE(conjugate_in_braid_group(w(3, {1}), w(3, {-1})).conjugate);
  CHECK_FALSE(conjugate_in_braid_group(w(3, {1}), w(3, {1, 1})).conjugate);

  std::mt19937 rng(2007);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 + trial % 3;
    const BraidWord a = testgen::random_word(k, 8, rng);
    const BraidWord c = testgen::random_word(k, 8, rng);
    const BraidWord b = compose(compose(c, a), inverse(c));
    const auto r = conjugate_in_braid_group(a, b, true);
    REQUIRE(r.conjugate);
    REQUIRE(r.witness.has_value());
    CHECK(words_equal(compose(compose(*r.witness, a), inverse(*r.witness)), b));
  }
}

TEST_CASE("conjugate elements share exponent sum and summit bounds") {
  std::mt19937 rng(2008);
  for (int trial = 0; trial < 15; ++trial) {
    const BraidWord a = testgen::random_word(4, 7, rng);
    const BraidWord b = testgen::random_word(4, 7, rng);
    if (!conjugate_in_braid_group(a, b).conjugate) continue;
    CHECK(exponent_sum(a) == exponent_sum(b));
    const auto sa = super_summit_set(a);
    const auto sb = super_summit_set(b);
    CHECK(sa == sb);
  }
}

TEST_CASE("normal form comparison orders by infimum then length then factors") {
  const auto neg = normal_form(w(3, {-1}));
  const auto s1 = normal_form(w(3, {1}));
  CHECK(neg < s1);  // infimum -1 vs 0
  const auto s1s1 = normal_form(w(3, {1, 1}));
  CHECK(s1 < s1s1);  // canonical length 1 vs 2
  const auto s1s2 = normal_form(w(3, {1, 2}));
  REQUIRE(s1s2.canonical_length() == 1);
  CHECK(s1 < s1s2);  // factor images 2 1 3 vs 3 1 2
}
