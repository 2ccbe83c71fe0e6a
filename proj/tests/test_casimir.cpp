#include <doctest.h>

#include "helpers.hpp"
#include "pquant/casimir.hpp"
#include "pquant/errors.hpp"
#include "pquant/symbol_space.hpp"
#include "pquant/symbolic_action.hpp"

using namespace pquant;
using namespace pquant::testing;

namespace {

/// Every monomial of S^k_p, k <= max_k, all p, with x-degree <= max_xdeg.
template <class F>
void for_basis(int n, int max_k, int max_xdeg, F&& f) {
  for (int p = 0; p <= n; ++p) {
    for (int k = 0; k <= max_k; ++k) {
      for (const auto& u : symbol_basis(n, p, k, max_xdeg)) f(u, k, p);
    }
  }
}

}  // namespace

TEST_CASE("projective generators") {
  CHECK(projective_generators(2).size() == 8);
  CHECK(projective_generators(3).size() == 15);
  const auto g = projective_generators(3);
  for (std::size_t i = 12; i < 15; ++i) CHECK(g[i].degree() == 2);
  CHECK_THROWS_AS(projective_generators(1), ArgumentError);
  for (const auto& x : g) {
    auto c = projective_coordinates(x);
    int ones = 0;
    for (const auto& v : c) ones += (v == 1);
    CHECK(ones == 1);
  }
  CHECK_THROWS_AS(projective_coordinates(field(2, 1, x_var(2, 1) * x_var(2, 2) * x_var(2, 2))), ArgumentError);
}

TEST_CASE("Killing dual of traceless matrices") {
  const auto basis = traceless_basis(2);
  const auto dual = killing_dual(basis);
  // basis[0] = E12, basis[1] = E21
  CHECK(dual[0] == RatMatrix::unit(2, 1, 0) * frac(1, 4));
  for (int n = 2; n <= 4; ++n) {
    const auto b = traceless_basis(n);
    const auto d = killing_dual(b);
    CHECK(b.size() == static_cast<std::size_t>(n * n - 1));
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) CHECK(killing_sl(b[i], d[j]) == Rat(i == j ? 1 : 0));
    }
    CHECK(killing_dual(d) == b);
  }
  auto degenerate = basis;
  degenerate[1] = degenerate[0];
  CHECK_THROWS_AS(killing_dual(degenerate), InconsistentBasisError);
}

TEST_CASE("printed dual list is dual under the projective Killing form") {
  for (int n = 2; n <= 3; ++n) {
    const auto& b = projective_basis(n);
    const auto first = b.first();
    const auto second = b.second();
    REQUIRE(first.size() == static_cast<std::size_t>(n * n + 2 * n));
    // Exactly dual under tr(ad X ad Y), not merely proportional.
    for (std::size_t i = 0; i < first.size(); ++i) {
      for (std::size_t j = 0; j < first.size(); ++j) {
        CHECK(projective_killing(first[i], second[j]) == Rat(i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("Casimir examples") {
  CHECK(casimir_C(S(1, M(2, {0, 0}), W(2, {}), M(2, {0, 0}))).is_zero());
  const Symbol v1 = S(1, M(2, {0, 0}), W(2, {1}), M(2, {0, 0}));
  CHECK(casimir_C(v1) == v1);
  const Symbol u = S(1, M(2, {1, 0}), W(2, {1}), M(2, {1, 0}));
  CHECK(casimir_C(u) == casimir_closed_form(u, 1));
  CHECK_THROWS_AS(casimir_closed_form(u + S(1, M(2, {0, 0}), W(2, {1}), M(2, {0, 0})), 1), ArgumentError);
}

TEST_CASE("spectrum") {
  CHECK(spectrum(2, 0, 1).alpha == 1);
  CHECK(spectrum(2, 1, 1).alpha == frac(8, 3));
  CHECK(spectrum(2, 1, 1).beta == 2);
  CHECK(spectrum(3, 0, 0).alpha == 0);
  CHECK_THROWS_AS(spectrum(2, 0, 3), ArgumentError);
}

TEST_CASE("C equals its closed form and has the stated eigenvalues") {
  for (int n = 2; n <= 3; ++n) {
    for_basis(n, 3, 2, [&](const Symbol& u, int k, int p) {
      const Symbol c = casimir_C(u);
      CHECK(c == casimir_closed_form(u, k));
      if (k + p == 0) return;
      const auto parts = project_AB(u, k);
      const auto sv = spectrum(n, k, p);
      CHECK(casimir_C(parts.a_part) == parts.a_part * sv.alpha);
      CHECK(casimir_C(parts.b_part) == parts.b_part * sv.beta);
    });
  }
}

TEST_CASE("difference of the Casimirs, three routes") {
  const Symbol u = S(1, M(2, {1, 0}), W(2, {}), M(2, {2, 0}));
  CHECK(n_casimir(u) == S(frac(2, 3), M(2, {0, 0}), W(2, {}), M(2, {1, 0})));
  CHECK(n_casimir(S(1, M(2, {0, 0}), W(2, {1}), M(2, {1, 0}))).is_zero());
  for (int n = 2; n <= 3; ++n) {
    for_basis(n, 3, 2, [&](const Symbol& s, int k, int) {
      const Symbol d = n_casimir(s);
      CHECK(d == n_casimir_closed_form(s));
      CHECK(d == n_casimir_t1(s));
      if (k == 0) CHECK(d.is_zero());
    });
  }
}

TEST_CASE("both Casimirs are central") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 3; ++n) {
    for (const auto& x : projective_generators(n)) {
      for (int p = 0; p <= n; ++p) {
        for (int t = 0; t < 3; ++t) {
          const Symbol u = random_symbol(rng, n, p, 3, 3);
          CHECK(casimir_C(lie_symbol(x, u)) == lie_symbol(x, casimir_C(u)));
          CHECK(casimir_quant(lie_symbolic(x, u)) == lie_symbolic(x, casimir_quant(u)));
        }
      }
    }
  }
}

TEST_CASE("casimir_quant is lower triangular in ξ-degree") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Symbol u = random_symbol(rng, 3, 1, 3, 3).component(3);
    const Symbol c = casimir_quant(u);
    CHECK(c.max_xi_degree() <= 3);
    CHECK(c.component(3) == casimir_C(u));
  }
}
