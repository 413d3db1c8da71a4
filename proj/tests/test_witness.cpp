#include <doctest.h>

#include <random>

#include "ftsp/oracle.hpp"
#include "ftsp/witness.hpp"

using namespace ftsp;

namespace {

const SupportPair& std_pair() {
  static const SupportPair p = standard_pair();
  return p;
}

LetterSeq parse_std(const std::string& s) { return parse_word(std_pair().alphabet, s); }

PLMap walk(const Alphabet& alpha, const LetterSeq& letters) {
  PLMap cur;
  for (const Letter& l : letters) cur = compose(cur, letter_map(alpha, l));
  return cur;
}

}  // namespace

TEST_CASE("support pair validation") {
  const SupportPair& p = std_pair();
  CHECK(p.u_trivial_below);
  CHECK(is_identity_on(p.u, Dyadic::zero(), p.split));
  CHECK(is_identity_on(p.v, p.split, Dyadic::one()));

  // both supported on the same side: rejected with the supports shown
  CHECK_THROWS_WITH_AS(make_support_pair(std2_alphabet(), "b", "b", Dyadic::half()),
                       doctest::Contains("supp"), std::invalid_argument);
  CHECK_THROWS_AS(make_support_pair(std2_alphabet(), "", "abAA", Dyadic::half()),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_support_pair(std2_alphabet(), "b", "abAA", Dyadic::zero()),
                  std::invalid_argument);
}

TEST_CASE("remark pairs validate and carry the advertised constants") {
  const auto pairs = remark_pairs();
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].pair.alphabet.name == "x012");
  CHECK(pairs[0].ratio_constant == mpq_class(3, 2));
  CHECK(pairs[0].pair.u_word.size() + pairs[0].pair.v_word.size() == 3);
  CHECK_FALSE(pairs[0].pair.u_trivial_below);  // u = x1 x0^-1 is trivial above 3/4
  CHECK(pairs[1].pair.alphabet.name == "mirror3");
  CHECK(pairs[1].ratio_constant == mpq_class(2));
  CHECK(pairs[1].pair.u_word.size() + pairs[1].pair.v_word.size() == 4);
}

TEST_CASE("choose_epsilon picks the side that preserves u's trivial half") {
  const Dyadic half = Dyadic::half();
  CHECK(choose_epsilon(PLMap(), half, true) == +1);
  CHECK(choose_epsilon(x0_map(), half, true) == -1);          // x0 moves 1/2 down
  CHECK(choose_epsilon(inverse(x0_map()), half, true) == +1);
  // flipped orientation flips the rule
  CHECK(choose_epsilon(x0_map(), half, false) == +1);
  CHECK(choose_epsilon(inverse(x0_map()), half, false) == -1);
}

TEST_CASE("conjugation witness: identity and x0") {
  const ConjugationWitness id = conjugation_witness(std_pair(), {});
  CHECK(id.epsilon == +1);
  CHECK(id.z.is_identity());
  CHECK(id.w == std_pair().u);

  const ConjugationWitness lx0 = conjugation_witness(std_pair(), parse_std("a"));
  CHECK(lx0.epsilon == -1);
  CHECK(lx0.w == generator_map(2));  // x0^-1 x1 x0
  CHECK(compose(lx0.w, std_pair().v) == compose(std_pair().v, lx0.w));
}

TEST_CASE("conjugation witness holds on random words") {
  std::mt19937_64 rng(4242);
  for (int k = 0; k < 60; ++k)
    CHECK_NOTHROW(conjugation_witness(std_pair(), random_word(std_pair().alphabet, rng, 24)));
  for (const auto& rp : remark_pairs())
    for (int k = 0; k < 25; ++k)
      CHECK_NOTHROW(conjugation_witness(rp.pair, random_word(rp.pair.alphabet, rng, 18)));
}

TEST_CASE("mixed identity") {
  const Alphabet alpha = std2_alphabet();
  CHECK(check_mixed_identity(alpha, {}));
  CHECK(check_mixed_identity(alpha, parse_std("a")));
  CHECK(check_mixed_identity(alpha, parse_std("abBAba")));
  std::mt19937_64 rng(2020);
  for (int k = 0; k < 60; ++k) CHECK(check_mixed_identity(alpha, random_word(alpha, rng, 24)));
}

TEST_CASE("grid set cardinality and degeneracy") {
  const ConjugationWitness lx0 = conjugation_witness(std_pair(), parse_std("a"));
  const GridSet g2 = build_grid_set(lx0, std_pair(), 2);
  CHECK(g2.card() == 18);
  CHECK_FALSE(g2.degenerate);
  CHECK(is_xi_related(g2.elements, lx0.xi));
  // every element's recorded word evaluates to it
  for (std::size_t k = 0; k < g2.elements.size(); ++k)
    CHECK(word_map(std_pair().alphabet, g2.words[k]) == g2.elements[k]);

  const ConjugationWitness lx1 = conjugation_witness(std_pair(), parse_std("b"));
  CHECK(build_grid_set(lx1, std_pair(), 2).degenerate);
  CHECK(build_grid_set(lx1, std_pair(), 4).degenerate);

  const ConjugationWitness lid = conjugation_witness(std_pair(), {});
  const GridSet gid = build_grid_set(lid, std_pair(), 2);
  CHECK(gid.degenerate);
  CHECK(gid.card() == 9);  // S'' coincides with S'

  CHECK_THROWS_AS(build_grid_set(lx0, std_pair(), 3), std::invalid_argument);
}

TEST_CASE("serpentine path: counts, ascents, closure") {
  const SupportPair& p = std_pair();
  const ConjugationWitness lx0 = conjugation_witness(p, parse_std("a"));

  const TourPath t2 = build_serpentine_path(2, p.u_word, p.v_word, lx0.z_word);
  CHECK(t2.letters.size() == 50);  // 5*(9-1) + (4*3-2)*1

  // ascent list for n = 4
  const TourPath t4 = build_serpentine_path(4, p.u_word, p.v_word, lx0.z_word);
  const std::vector<std::pair<int, int>> expected = {
      {4, 0}, {0, 1}, {4, 2}, {0, 3}, {4, 4}, {3, 0}, {2, 4}, {1, 0}, {0, 4}};
  CHECK(z_ascent_points(t4) == expected);

  for (int n : {2, 4, 6}) {
    const TourPath t = build_serpentine_path(n, p.u_word, p.v_word, lx0.z_word);
    const long N = n + 1;
    CHECK(static_cast<long>(t.letters.size()) == 5 * (N * N - 1) + (4 * N - 2));
    CHECK(walk(p.alphabet, t.letters).is_identity());
  }
  CHECK_THROWS_AS(build_serpentine_path(3, p.u_word, p.v_word, lx0.z_word),
                  std::invalid_argument);
}

TEST_CASE("abelian path: counts and closure") {
  const SupportPair& p = std_pair();
  const TourPath t3 = build_abelian_path(3, p.u_word, p.v_word);
  CHECK(t3.letters.size() == 34);  // 3^2 + 8*3 + 1
  for (int n : {1, 3, 5, 7}) {
    const TourPath t = build_abelian_path(n, p.u_word, p.v_word);
    CHECK(static_cast<long>(t.letters.size()) == (n * n + 1) * 1 + 2 * n * 4);
    CHECK(walk(p.alphabet, t.letters).is_identity());
  }
  CHECK_THROWS_AS(build_abelian_path(2, p.u_word, p.v_word), std::invalid_argument);
}

TEST_CASE("minimal_N") {
  const mpq_class c(5, 2);
  CHECK(minimal_N(parse_rational("26/10"), 1, c) == 21);
  CHECK(minimal_N(parse_rational("35/10"), 4, c) == 9);
  CHECK(minimal_N(parse_rational("26/10"), 0, c) == 3);
  CHECK(minimal_N(parse_rational("100/1"), 5, c) == 3);
  CHECK_THROWS_AS(minimal_N(parse_rational("5/2"), 1, c), std::invalid_argument);
  CHECK_THROWS_AS(minimal_N(parse_rational("2"), 1, c), std::invalid_argument);
}

TEST_CASE("ratio bound decreases in N") {
  const mpq_class c(5, 2);
  for (long xi_len : {1L, 4L, 8L}) {
    mpq_class prev = c + make_rational(2 * xi_len, 3);
    for (long N = 5; N <= 41; N += 2) {
      const mpq_class cur = c + make_rational(2 * xi_len, N);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("decompose_in_pair") {
  const SupportPair& p = std_pair();
  // u^2 v^-3
  const PLMap z = compose(power(p.u, 2), power(p.v, -3));
  const auto d = decompose_in_pair(z, p, 10);
  REQUIRE(d.has_value());
  CHECK(d->a == 2);
  CHECK(d->b == -3);
  CHECK_FALSE(decompose_in_pair(x0_map(), p, 10).has_value());
  CHECK_FALSE(decompose_in_pair(z, p, 2).has_value());  // cap too small
  const auto zero = decompose_in_pair(PLMap(), p, 10);
  REQUIRE(zero.has_value());
  CHECK((zero->a == 0 && zero->b == 0));
}

TEST_CASE("full witness: generic branch reproduces the n=20 numbers") {
  const WitnessReport r = build_witness(std_pair(), parse_std("a"), parse_rational("26/10"));
  CHECK(r.branch == "generic");
  CHECK(r.epsilon == -1);
  CHECK(r.n == 20);
  CHECK(r.N == 21);
  CHECK(r.card == 882);
  CHECK(r.path_length == 2282);
  CHECK(r.ratio == make_rational(2282, 882));
  CHECK(r.ratio < parse_rational("26/10"));
  CHECK(r.ratio_bound == make_rational(5, 2) + make_rational(2, 21));
  CHECK(r.ratio < r.ratio_bound);
  CHECK(r.verdicts.all());
}

TEST_CASE("full witness: abelian branch for xi = x1") {
  const WitnessReport r = build_witness(std_pair(), parse_std("b"), parse_rational("12/10"));
  CHECK(r.branch == "abelian");
  CHECK(r.n % 2 == 1);
  CHECK(r.path_length == r.n * r.n + 8 * r.n + 1);
  CHECK(r.card == (r.n + 1) * (r.n + 1));  // xi = u needs no pruning
  CHECK(r.ratio < parse_rational("12/10"));
  CHECK(r.verdicts.all());
}

TEST_CASE("full witness: empty xi goes abelian with any lambda > 1") {
  const WitnessReport r = build_witness(std_pair(), {}, parse_rational("11/10"));
  CHECK(r.branch == "abelian");
  CHECK(r.verdicts.all());
  CHECK(r.ratio < parse_rational("11/10"));
  CHECK_THROWS_AS(build_witness(std_pair(), {}, parse_rational("1/1")), std::invalid_argument);
}

TEST_CASE("full witness: abelian pruning for a mixed degenerate xi") {
  // xi = u^2 v: in the span, so degenerate; interior elements keep their
  // neighbours, border ones get pruned
  const LetterSeq xi = parse_std("bbabAA");
  const WitnessReport r = build_witness(std_pair(), xi, parse_rational("14/10"));
  CHECK(r.branch == "abelian");
  CHECK(r.card < (r.n + 1) * (r.n + 1));
  CHECK(r.verdicts.all());
  CHECK(is_xi_related(r.set_elements, r.xi));
}

TEST_CASE("build_abelian_witness rejects non-degenerate xi") {
  CHECK_THROWS_AS(build_abelian_witness(std_pair(), parse_std("a"), 5), std::invalid_argument);
  CHECK_THROWS_AS(build_abelian_witness(std_pair(), parse_std("b"), 4), std::invalid_argument);
  const WitnessReport r = build_abelian_witness(std_pair(), parse_std("b"), 31);
  CHECK(r.path_length == 1210);
  CHECK(r.card == 1024);
  CHECK(r.ratio == make_rational(1210, 1024));
  CHECK(r.ratio < parse_rational("12/10"));
}

TEST_CASE("generic branch needs lambda above the constant") {
  CHECK_THROWS_AS(build_witness(std_pair(), parse_std("a"), parse_rational("2/1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_witness(std_pair(), parse_std("a"), parse_rational("5/2")),
                  std::invalid_argument);
}

TEST_CASE("verify_witness catches mutations") {
  WitnessReport r = build_witness(std_pair(), parse_std("a"), parse_rational("3/1"));
  REQUIRE(r.verdicts.all());

  WitnessReport broken_path = r;
  broken_path.path.letters.erase(broken_path.path.letters.begin() + 10);
  const Verdicts v1 = verify_witness(broken_path, r.xi);
  CHECK_FALSE(v1.closure);

  WitnessReport broken_set = r;
  broken_set.set_elements[5] = power(x0_map(), 7);
  const Verdicts v2 = verify_witness(broken_set, r.xi);
  CHECK_FALSE((v2.coverage && v2.xi_related));
}

TEST_CASE("witness on the remark pairs") {
  for (const auto& rp : remark_pairs()) {
    const mpq_class lambda = rp.ratio_constant + mpq_class(1, 10);
    const WitnessReport r =
        build_witness(rp.pair, parse_word(rp.pair.alphabet, "a"), lambda);
    CHECK(r.branch == "generic");
    CHECK(r.verdicts.all());
    CHECK(r.ratio < lambda);
    const long L = r.u_len + r.v_len;
    CHECK(r.ratio_bound == make_rational(L, 2) + make_rational(2 * r.xi_len, r.N));
  }
}

TEST_CASE("check suite passes and a corrupted table fails loudly") {
  const CheckSummary ok = run_check_suite(std_pair(), 25, 1);
  CHECK(ok.all_pass());
  CHECK(ok.conj_total == 25);

  SupportPair corrupted = std_pair();
  std::swap(corrupted.alphabet.gens[0].map, corrupted.alphabet.gens[1].map);
  const CheckSummary bad = run_check_suite(corrupted, 0, 1);
  CHECK_FALSE(bad.all_pass());
  CHECK(bad.first_failure.find("relation") != std::string::npos);
}

TEST_CASE("gamma dot export counts") {
  const std::string dot = gamma_dot(4);
  std::size_t vertices = 0, edges = 0, pos = 0;
  while ((pos = dot.find('\n', pos + 1)) != std::string::npos) {
    const std::size_t line_start = dot.rfind('\n', pos - 1) + 1;
    const std::string line = dot.substr(line_start, pos - line_start);
    if (line.find("->") != std::string::npos)
      ++edges;
    else if (line.find(';') != std::string::npos)
      ++vertices;
  }
  CHECK(vertices == 50);  // 2 N^2
  CHECK(edges == 65);     // 2 N n + N^2
  CHECK_THROWS_AS(gamma_dot(3), std::invalid_argument);
}
