#include <doctest.h>

#include "ftsp/dyadic.hpp"

using namespace ftsp;

TEST_CASE("dyadic normalization") {
  CHECK(Dyadic(mpz_class(4), 2) == Dyadic(1));
  CHECK(Dyadic(mpz_class(6), 1) == Dyadic(3));
  CHECK(Dyadic(mpz_class(0), 7) == Dyadic::zero());
  CHECK(Dyadic(mpz_class(3), 2).numerator() == 3);
  CHECK(Dyadic(mpz_class(3), 2).exponent() == 2);
  CHECK(Dyadic(mpz_class(-8), 2) == Dyadic(-2));
}

TEST_CASE("dyadic arithmetic is exact") {
  const Dyadic a(mpz_class(3), 3);   // 3/8
  const Dyadic b(mpz_class(1), 1);   // 1/2
  CHECK((a + b) == Dyadic(mpz_class(7), 3));
  CHECK((b - a) == Dyadic(mpz_class(1), 3));
  CHECK((a * b) == Dyadic(mpz_class(3), 4));
  CHECK((-a) == Dyadic(mpz_class(-3), 3));
  CHECK(a.shifted(1) == Dyadic(mpz_class(3), 2));
  CHECK(a.shifted(3) == Dyadic(3));
  CHECK(a.shifted(4) == Dyadic(6));
  CHECK(a.shifted(-2) == Dyadic(mpz_class(3), 5));
}

TEST_CASE("dyadic ordering") {
  CHECK(Dyadic(mpz_class(1), 2) < Dyadic(mpz_class(1), 1));
  CHECK(Dyadic(mpz_class(5), 3) > Dyadic(mpz_class(1), 1));
  CHECK(Dyadic(mpz_class(-1), 1) < Dyadic::zero());
  CHECK(Dyadic(mpz_class(1), 1) <= Dyadic::half());
}

TEST_CASE("dyadic printing") {
  CHECK(Dyadic(mpz_class(3), 3).str() == "3/8");
  CHECK(Dyadic(5).str() == "5");
  CHECK(Dyadic(mpz_class(-3), 1).str() == "-3/2");
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("26/10") == mpq_class(13, 5));
  CHECK(parse_rational("7") == 7);
  CHECK(rational_str(parse_rational("26/10")) == "13/5");
  CHECK(rational_str(mpq_class(3)) == "3/1");
  CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}
