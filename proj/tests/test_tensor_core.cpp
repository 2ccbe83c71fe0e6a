#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pquant/errors.hpp"
#include "pquant/polynomial.hpp"
#include "pquant/rational.hpp"
#include "pquant/word.hpp"

using namespace pquant;
using namespace pquant::testing;

TEST_CASE("rationals are canonical and round-trip through text") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-2")) == "-2/1");
  CHECK(to_string(parse_rat("0/7")) == "0/1");
  CHECK(parse_rat("5") == Rat(5));
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("a/2"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
}

TEST_CASE("wedge_insert") {
  auto r = wedge_insert(0, W(2, {2}));
  REQUIRE(r);
  CHECK(r->sign == 1);
  CHECK(r->word == W(2, {1, 2}));

  r = wedge_insert(1, W(3, {1, 3}));
  REQUIRE(r);
  CHECK(r->sign == -1);
  CHECK(r->word == W(3, {1, 2, 3}));

  CHECK_FALSE(wedge_insert(1, W(2, {1, 2})));
  CHECK_THROWS_AS(wedge_insert(2, W(2, {1})), ArgumentError);
}

TEST_CASE("interior_contract") {
  auto r = interior_contract(0, W(2, {1, 2}));
  REQUIRE(r);
  CHECK(r->sign == 1);
  CHECK(r->word == W(2, {2}));

  r = interior_contract(1, W(2, {1, 2}));
  REQUIRE(r);
  CHECK(r->sign == -1);
  CHECK(r->word == W(2, {1}));

  CHECK_FALSE(interior_contract(2, W(3, {1, 2})));
  CHECK_THROWS_AS(interior_contract(-1, W(2, {1})), ArgumentError);
}

TEST_CASE("words must be strictly increasing") {
  CHECK_THROWS_AS(Word::from_indices(3, {1, 1}), ArgumentError);
  CHECK_THROWS_AS(Word::from_indices(3, {2, 0}), ArgumentError);
  CHECK(words_of_length(4, 2).size() == 6);
  CHECK(words_of_length(3, 0).size() == 1);
}

TEST_CASE("exterior sign properties over all words") {
  for (int n = 2; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (const auto& w : words_of_length(n, p)) {
        for (int i = 0; i < n; ++i) {
          // insert then contract recovers w with total sign +1
          if (auto ins = wedge_insert(i, w)) {
            auto con = interior_contract(i, ins->word);
            REQUIRE(con);
            CHECK(con->word == w);
            CHECK(ins->sign * con->sign == 1);
          }
          // i_a i_b = - i_b i_a
          for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            auto a1 = interior_contract(i, w);
            auto b1 = interior_contract(j, w);
            if (!a1 || !b1) continue;
            auto a2 = interior_contract(j, a1->word);
            auto b2 = interior_contract(i, b1->word);
            REQUIRE(a2);
            REQUIRE(b2);
            CHECK(a2->word == b2->word);
            CHECK(a1->sign * a2->sign == -(b1->sign * b2->sign));
          }
        }
      }
    }
  }
}

TEST_CASE("polynomial calculus") {
  const int n = 2;
  Poly x1 = x_var(n, 1), x2 = x_var(n, 2), one = Poly::constant(n, 1);
  CHECK((x1 * x2).partial(0) == x2);
  CHECK((x1 + one) * (x1 - one) == x1 * x1 - one);
  CHECK((x1 * x1).eval({Rat(3), Rat(0)}) == 9);
  CHECK((x1 * x1 * x2).partial(M(2, {2, 1})) == Poly::constant(n, 2));
  CHECK(Poly(n).degree() == -1);
  CHECK_THROWS_AS(x1 + Poly::variable(3, 0), DimensionMismatch);
  CHECK_THROWS_AS(x1.eval({Rat(1)}), DimensionMismatch);
  CHECK((x1 - x1).is_zero());
}

TEST_CASE("polynomial ring axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 2;
    Poly a = random_poly(rng, n, 3), b = random_poly(rng, n, 3), c = random_poly(rng, n, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).partial(0) == a.partial(0) * b + a * b.partial(0));
  }
}

TEST_CASE("multi-index helpers") {
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_up_to(3, 3).size() == 20);
  CHECK(binomial(M(2, {3, 2}), M(2, {1, 1})) == 6);
  CHECK(falling_factorial(M(2, {2, 0}), M(2, {1, 1})) == 0);
  CHECK(sub_indices_of_degree(M(2, {2, 1}), 2).size() == 2);
  CHECK_THROWS_AS(M(2, {1, 0}) + M(3, {0, 0, 0}), DimensionMismatch);
}
