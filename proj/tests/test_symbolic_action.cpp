#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pquant/errors.hpp"
#include "pquant/operators.hpp"
#include "pquant/symbol_space.hpp"
#include "pquant/symbolic_action.hpp"

using namespace pquant;
using namespace pquant::testing;

namespace {

/// Independent route: transport to operators, take the commutator there.
Symbol commutator_oracle(const VectorField& x, const Symbol& u) {
  return sigma_affine(lie_diffop(x, sigma_affine_inv(u)));
}

const MIdx O2 = MIdx(2);
const MIdx X1 = M(2, {1, 0});

}  // namespace

TEST_CASE("t_term examples") {
  const VectorField quad = field(2, 2, x_var(2, 1) * x_var(2, 1));
  CHECK(t_term(quad, 1, S(1, O2, Word(2), M(2, {2, 0}))) == S(-2, O2, Word(2), M(2, {0, 1})));
  CHECK(t_term(quad, 1, S(1, O2, W(2, {1}), M(2, {1, 0}))) == S(-2, O2, W(2, {2}), O2));
  CHECK_THROWS_AS(t_term(quad, 0, S(1, O2, Word(2), O2)), ArgumentError);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + t % 2;
    VectorField affine = random_field(rng, n, 1);
    Symbol u = random_symbol(rng, n, t % (n + 1), 3, 2);
    for (int r = 1; r <= 3; ++r) CHECK(t_term(affine, r, u).is_zero());
  }
}

TEST_CASE("lie_symbolic examples") {
  const VectorField quad = field(2, 2, x_var(2, 1) * x_var(2, 1));
  CHECK(lie_symbolic(quad, S(1, O2, Word(2), M(2, {2, 0}))) ==
        S(-4, X1, Word(2), M(2, {1, 1})) + S(-2, O2, Word(2), M(2, {0, 1})));
  CHECK(lie_symbolic(VectorField::coordinate(2, 0), S(1, X1, Word(2), M(2, {1, 0}))) ==
        S(1, O2, Word(2), M(2, {1, 0})));
  CHECK(lie_symbolic(quad, S(1, O2, W(2, {1}), M(2, {1, 0}))) ==
        S(-2, X1, W(2, {2}), M(2, {1, 0})) + S(-2, X1, W(2, {1}), M(2, {0, 1})) + S(-2, O2, W(2, {2}), O2));
}

TEST_CASE("lie_symbolic equals the commutator oracle on the monomial basis") {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 3; ++n) {
    std::vector<VectorField> fields;
    for (int deg = 2; deg <= 4; ++deg) fields.push_back(random_field(rng, n, deg));
    fields.push_back(field(n, 2, x_var(n, 1) * x_var(n, 1) * x_var(n, 1)));
    for (int p = 0; p <= n; ++p) {
      for (int k = 0; k <= 3; ++k) {
        for (const auto& u : symbol_basis(n, p, k, 1)) {
          for (const auto& x : fields) REQUIRE(lie_symbolic(x, u) == commutator_oracle(x, u));
        }
      }
    }
  }
}

TEST_CASE("lie_symbolic is a Lie algebra action") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 2;
    const int p = (trial / 2) % (n + 1);
    VectorField x = random_field(rng, n, 3), y = random_field(rng, n, 3);
    Symbol u = random_symbol(rng, n, p, 3, 2);
    CHECK(lie_symbolic(x, lie_symbolic(y, u)) - lie_symbolic(y, lie_symbolic(x, u)) ==
          lie_symbolic(bracket(x, y), u));
  }
}
