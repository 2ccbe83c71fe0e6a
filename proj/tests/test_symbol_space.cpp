#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pquant/errors.hpp"
#include "pquant/symbol_space.hpp"

using namespace pquant;
using namespace pquant::testing;

namespace {

const MIdx O2 = MIdx(2);
const MIdx X1 = M(2, {1, 0});
const MIdx XI1 = M(2, {1, 0});
const MIdx XI2 = M(2, {0, 1});
const Word E2 = Word(2);

}  // namespace

TEST_CASE("koszul_delta examples") {
  CHECK(koszul_delta(S(1, O2, E2, XI1)) == S(1, O2, W(2, {1}), O2));
  CHECK(koszul_delta(S(1, O2, W(2, {1}), XI1)).is_zero());
  CHECK(koszul_delta(S(1, X1, E2, M(2, {2, 0}))) == S(2, X1, W(2, {1}), XI1));
  // top forms go to zero, not an error
  CHECK(koszul_delta(S(1, O2, W(2, {1, 2}), XI1)).is_zero());
}

TEST_CASE("koszul_delta_star examples") {
  CHECK(koszul_delta_star(S(1, O2, W(2, {1}), O2)) == S(1, O2, E2, XI1));
  CHECK(koszul_delta_star(S(1, O2, E2, XI1)).is_zero());
  CHECK(koszul_delta_star(S(1, O2, W(2, {2}), XI1)) == S(1, O2, E2, M(2, {1, 1})));
}

TEST_CASE("divergence examples") {
  CHECK(divergence(S(1, X1, E2, XI1)) == S(1, O2, E2, O2));
  CHECK(divergence(S(1, O2, W(2, {1}), XI1)).is_zero());
  CHECK(divergence(S(1, X1, E2, M(2, {1, 1}))) == S(1, O2, E2, XI2));
}

TEST_CASE("project_AB examples") {
  auto [a, b] = project_AB(S(1, O2, W(2, {1}), O2), 0);
  CHECK(a == S(1, O2, W(2, {1}), O2));
  CHECK(b.is_zero());

  auto [a2, b2] = project_AB(S(1, O2, E2, XI1), 1);
  CHECK(a2.is_zero());
  CHECK(b2 == S(1, O2, E2, XI1));

  const Rat half(1, 2);
  auto [a3, b3] = project_AB(S(1, X1, W(2, {2}), XI1), 1);
  CHECK(a3 == S(half, X1, W(2, {1}), XI2) + S(half, X1, W(2, {2}), XI1));
  CHECK(b3 == S(half, X1, W(2, {2}), XI1) - S(half, X1, W(2, {1}), XI2));
}

TEST_CASE("project_AB rejects degenerate and mixed input") {
  CHECK_THROWS_AS(project_AB(S(1, X1, E2, O2), 0), DegenerateGradeError);
  CHECK_THROWS_AS(project_AB(S(1, O2, E2, XI1) + S(1, O2, E2, M(2, {2, 0})), 1), ArgumentError);
  CHECK_THROWS_AS(project_AB(S(1, O2, E2, XI1), 2), ArgumentError);
}

TEST_CASE("lie_symbol examples") {
  CHECK(lie_symbol(VectorField::coordinate(2, 0), S(1, X1, E2, XI1)) == S(1, O2, E2, XI1));
  const VectorField shear = field(2, 2, x_var(2, 1));
  CHECK(lie_symbol(shear, S(1, O2, W(2, {1}), XI1)) ==
        S(-1, O2, W(2, {2}), XI1) + S(-1, O2, W(2, {1}), XI2));
  const VectorField quad = field(2, 2, x_var(2, 1) * x_var(2, 1));
  CHECK(lie_symbol(quad, S(1, O2, W(2, {1}), XI1)) ==
        S(-2, X1, W(2, {2}), XI1) + S(-2, X1, W(2, {1}), XI2));
  CHECK_THROWS_AS(lie_symbol(VectorField::coordinate(3, 0), S(1, X1, E2, XI1)), DimensionMismatch);
}

TEST_CASE("Koszul relations on the monomial basis") {
  for (int n = 2; n <= 3; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int k = 0; k <= 3; ++k) {
        for (const auto& u : symbol_basis(n, p, k, 1)) {
          CHECK(koszul_delta(koszul_delta(u)).is_zero());
          CHECK(koszul_delta_star(koszul_delta_star(u)).is_zero());
          CHECK(koszul_delta(koszul_delta_star(u)) + koszul_delta_star(koszul_delta(u)) == u * Rat(k + p));
          // [(η∂), δ] = 0 and [(η∂), δ*] = i_η
          CHECK(divergence(koszul_delta(u)) == koszul_delta(divergence(u)));
          CHECK(divergence(koszul_delta_star(u)) - koszul_delta_star(divergence(u)) == interior_eta(u));
        }
      }
    }
  }
}

TEST_CASE("i_eta matches a hand expansion") {
  // i_η(x1 x2 v1∧v2 ⊗ ξ1) = x2 v2 ⊗ ξ1 - x1 v1 ⊗ ξ1
  Symbol u = S(1, M(2, {1, 1}), W(2, {1, 2}), XI1);
  CHECK(interior_eta(u) == S(1, M(2, {0, 1}), W(2, {2}), XI1) - S(1, X1, W(2, {1}), XI1));
}

TEST_CASE("delta and delta* commute with the geometric Lie derivative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 2;
    const int p = trial % (n + 1);
    VectorField x = random_field(rng, n, 3);
    Symbol u = random_symbol(rng, n, p, 3, 2);
    CHECK(koszul_delta(lie_symbol(x, u)) == lie_symbol(x, koszul_delta(u)));
    CHECK(koszul_delta_star(lie_symbol(x, u)) == lie_symbol(x, koszul_delta_star(u)));
  }
}

TEST_CASE("lie_symbol is a Lie algebra action") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 2;
    const int p = (trial / 2) % (n + 1);
    VectorField x = random_field(rng, n, 3), y = random_field(rng, n, 3);
    Symbol u = random_symbol(rng, n, p, 3, 2);
    CHECK(lie_symbol(x, lie_symbol(y, u)) - lie_symbol(y, lie_symbol(x, u)) == lie_symbol(bracket(x, y), u));
  }
}

TEST_CASE("symbol containers") {
  Symbol mixed = S(1, O2, E2, XI1) + S(3, X1, E2, M(2, {2, 0}));
  CHECK(mixed.xi_degrees() == std::set<int>{1, 2});
  CHECK_FALSE(mixed.is_homogeneous());
  CHECK(mixed.component(2) == S(3, X1, E2, M(2, {2, 0})));
  CHECK(mixed.max_x_degree() == 1);
  CHECK_THROWS_AS(mixed + S(1, O2, W(2, {1}), O2), ArgumentError);
  CHECK_THROWS_AS(Symbol(2, 0).add_term({O2, W(2, {1}), O2}, 1), ArgumentError);
  CHECK(symbol_basis(3, 1, 2, 1).size() == 3 * 6 * 4);
}
