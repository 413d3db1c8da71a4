#include <doctest.h>

#include <random>

#include "ftsp/json_io.hpp"
#include "ftsp/plmap.hpp"
#include "ftsp/words.hpp"

using namespace ftsp;

namespace {

Dyadic dy(long n, unsigned e) { return Dyadic(mpz_class(n), e); }

PLMap rand_map(std::mt19937_64& rng, int max_len = 12) {
  static const Alphabet alpha = std2_alphabet();
  return word_map(alpha, random_word(alpha, rng, max_len));
}

}  // namespace

TEST_CASE("identity map") {
  const PLMap id;
  CHECK(id.is_identity());
  CHECK(id(dy(7, 4)) == dy(7, 4));
  CHECK(support(id).empty());
}

TEST_CASE("construction validates invariants") {
  CHECK_THROWS_AS(PLMap::from_breakpoints({{dy(0, 0), dy(0, 0)}}), std::invalid_argument);
  // does not fix the endpoints
  CHECK_THROWS_AS(
      PLMap::from_breakpoints({{dy(0, 0), dy(1, 2)}, {dy(1, 0), dy(1, 0)}}),
      std::invalid_argument);
  // slope 3/2 is not a power of two
  CHECK_THROWS_AS(PLMap::from_breakpoints(
                      {{dy(0, 0), dy(0, 0)}, {dy(1, 1), dy(3, 2)}, {dy(1, 0), dy(1, 0)}}),
                  std::invalid_argument);
  // non-monotonic outputs
  CHECK_THROWS_AS(PLMap::from_breakpoints({{dy(0, 0), dy(0, 0)},
                                           {dy(1, 2), dy(1, 1)},
                                           {dy(1, 1), dy(1, 2)},
                                           {dy(1, 0), dy(1, 0)}}),
                  std::invalid_argument);
}

TEST_CASE("canonicalization removes collinear points and is equality-stable") {
  // x0 with a redundant midpoint on the first segment
  const PLMap a = PLMap::from_breakpoints({{dy(0, 0), dy(0, 0)},
                                           {dy(1, 2), dy(1, 3)},
                                           {dy(1, 1), dy(1, 2)},
                                           {dy(3, 2), dy(1, 1)},
                                           {dy(1, 0), dy(1, 0)}});
  CHECK(a == x0_map());
  CHECK(a.breakpoints().size() == 4);
  CHECK(a.key() == x0_map().key());
}

TEST_CASE("evaluation of the standard generators") {
  CHECK(x0_map()(Dyadic::half()) == dy(1, 2));
  CHECK(x0_map()(dy(3, 2)) == Dyadic::half());
  CHECK(x1_map()(dy(1, 2)) == dy(1, 2));  // identity below 1/2
  CHECK(x1_map()(dy(7, 3)) == dy(3, 2));
  CHECK(x0_map().inverse_at(dy(1, 2)) == Dyadic::half());
  CHECK_THROWS_AS(x0_map()(Dyadic(2)), std::domain_error);
  CHECK_THROWS_AS(x0_map()(-Dyadic::half()), std::domain_error);
}

TEST_CASE("compose and inverse satisfy the group laws") {
  std::mt19937_64 rng(12345);
  const PLMap id;
  for (int k = 0; k < 50; ++k) {
    const PLMap f = rand_map(rng), g = rand_map(rng), h = rand_map(rng);
    CHECK(compose(id, f) == f);
    CHECK(compose(f, id) == f);
    CHECK(compose(f, inverse(f)) == id);
    CHECK(compose(inverse(f), f) == id);
    CHECK(inverse(inverse(f)) == f);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(inverse(compose(f, g)) == compose(inverse(g), inverse(f)));
  }
}

TEST_CASE("every word map has power-of-two slopes and dyadic breakpoints") {
  std::mt19937_64 rng(777);
  for (int k = 0; k < 60; ++k) {
    const PLMap f = rand_map(rng, 20);
    const auto& pts = f.breakpoints();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      CHECK_NOTHROW(slope_exponent(pts[i], pts[i + 1]));
    CHECK(pts.front().in == Dyadic::zero());
    CHECK(pts.back().in == Dyadic::one());
  }
}

TEST_CASE("power") {
  CHECK(power(x0_map(), 0).is_identity());
  CHECK(power(x0_map(), 1) == x0_map());
  CHECK(power(x0_map(), 3) == compose(compose(x0_map(), x0_map()), x0_map()));
  CHECK(power(x0_map(), -2) == inverse(compose(x0_map(), x0_map())));
}

TEST_CASE("calibration: defining relations and support facts") {
  const Alphabet alpha = std2_alphabet();
  auto w = [&](const char* s) { return word_map(alpha, parse_word(alpha, s)); };
  CHECK(w("AAbaa") == w("BAbab"));
  CHECK(w("AAAbaaa") == w("BAAbaab"));
  CHECK(is_identity_on(x1_map(), Dyadic::zero(), Dyadic::half()));
  CHECK(is_identity_on(w("abAA"), Dyadic::half(), Dyadic::one()));
  CHECK_FALSE(is_identity_on(x1_map(), Dyadic::zero(), Dyadic::one()));
  // u and v commute
  const PLMap u = x1_map(), v = w("abAA");
  CHECK(compose(u, v) == compose(v, u));
}

TEST_CASE("support") {
  const Alphabet alpha = std2_alphabet();
  const PLMap v = word_map(alpha, parse_word(alpha, "abAA"));
  const auto sv = support(v);
  REQUIRE(sv.size() == 1);
  CHECK(sv[0].lo == Dyadic::zero());
  CHECK(sv[0].hi == Dyadic::half());
  const auto su = support(x1_map());
  REQUIRE(su.size() == 1);
  CHECK(su[0].lo == Dyadic::half());
  CHECK(su[0].hi == Dyadic::one());
  // two pieces split at the shared fixed point 1/2
  const PLMap uv = compose(x1_map(), v);
  const auto suv = support(uv);
  REQUIRE(suv.size() == 2);
  CHECK(suv[0].hi == Dyadic::half());
  CHECK(suv[1].lo == Dyadic::half());
}

TEST_CASE("support handles in-segment diagonal crossings") {
  // slope-2 crossing at the dyadic point 3/4 splits the moved region
  const PLMap dyadic_cross = PLMap::from_breakpoints({{dy(0, 0), dy(0, 0)},
                                                      {dy(1, 1), dy(1, 2)},
                                                      {dy(13, 4), dy(7, 3)},
                                                      {dy(7, 3), dy(15, 4)},
                                                      {dy(1, 0), dy(1, 0)}});
  const auto s1 = support(dyadic_cross);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0].hi == dy(3, 2));
  CHECK(s1[1].lo == dy(3, 2));

  // slope-4 crossing at 7/24 is not dyadic and stays interior
  const PLMap odd_cross = PLMap::from_breakpoints({{dy(0, 0), dy(0, 0)},
                                                   {dy(1, 2), dy(1, 3)},
                                                   {dy(3, 3), dy(5, 3)},
                                                   {dy(7, 3), dy(7, 3)},
                                                   {dy(1, 0), dy(1, 0)}});
  const auto s2 = support(odd_cross);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].lo == Dyadic::zero());
  CHECK(s2[0].hi == dy(7, 3));
}

TEST_CASE("is_identity_on rejects malformed intervals") {
  CHECK_THROWS_AS(is_identity_on(x0_map(), Dyadic::one(), Dyadic::zero()),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_identity_on(x0_map(), Dyadic::zero(), Dyadic(2)), std::domain_error);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(31337);
  for (int k = 0; k < 20; ++k) {
    const PLMap f = rand_map(rng, 16);
    CHECK(plmap_from_json(plmap_to_json(f)) == f);
  }
  // big numerators serialize as strings and come back exact
  const PLMap big = power(word_map(std2_alphabet(), parse_word(std2_alphabet(), "abAA")), 40);
  const auto j = plmap_to_json(big);
  CHECK(plmap_from_json(j) == big);
}
