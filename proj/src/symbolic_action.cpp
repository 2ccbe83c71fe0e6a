#include "pquant/symbolic_action.hpp"

#include "pquant/errors.hpp"
#include "pquant/symbol_space.hpp"

namespace pquant {

namespace {

/// Terms of t_r with unit coefficient prefactor folded in; accumulates -(...)
/// into out.
void add_t_term(const VectorField& x, int r, const Symbol& u, Symbol& out) {
  const int n = u.dim();
  for (const auto& [key, c] : u.terms()) {
    const int k = key.xi.degree();
    // Λ ⊗ ξ_i ∂_ξ^γ P, |γ| = r + 1
    if (k >= r + 1) {
      for (const auto& gamma : sub_indices_of_degree(key.xi, r + 1)) {
        const Rat weight = Rat(falling_factorial(key.xi, gamma)) / Rat(factorial(gamma));
        const MIdx rest = key.xi - gamma;
        for (int i = 0; i < n; ++i) {
          Poly dx = x[i].partial(gamma);
          if (dx.is_zero()) continue;
          const MIdx xi_out = rest.plus_unit(i);
          for (const auto& [e, d] : dx.terms()) {
            out.add_term_unchecked({e + key.x, key.wedge, xi_out}, -c * d * weight);
          }
        }
      }
    }
    // v_i ∧ i_{β^j} Λ ⊗ ∂_ξ^γ P, |γ| = r
    if (k >= r && key.wedge.size() > 0) {
      for (const auto& gamma : sub_indices_of_degree(key.xi, r)) {
        const Rat weight = Rat(falling_factorial(key.xi, gamma)) / Rat(factorial(gamma));
        const MIdx rest = key.xi - gamma;
        for (int j : key.wedge.indices()) {
          const MIdx gj = gamma.plus_unit(j);
          for (int i = 0; i < n; ++i) {
            Poly dx = x[i].partial(gj);
            if (dx.is_zero()) continue;
            auto rep = replace_index(key.wedge, j, i);
            if (!rep) continue;
            for (const auto& [e, d] : dx.terms()) {
              out.add_term_unchecked({e + key.x, rep->word, rest}, -c * d * weight * rep->sign);
            }
          }
        }
      }
    }
  }
}

}  // namespace

Symbol t_term(const VectorField& x, int r, const Symbol& u) {
  if (r < 1) throw ArgumentError("t_r needs r >= 1");
  if (x.dim() != u.dim()) throw DimensionMismatch("vector field and symbol dimensions differ");
  Symbol out(u.dim(), u.form_degree());
  add_t_term(x, r, u, out);
  return out;
}

Symbol lie_symbolic(const VectorField& x, const Symbol& u) {
  Symbol out = lie_symbol(x, u);
  const int top = u.max_xi_degree();
  // Derivatives of X beyond its degree vanish, so r is bounded by deg X too.
  const int rmax = std::min(top, std::max(x.degree(), 0));
  for (int r = 1; r <= rmax; ++r) add_t_term(x, r, u, out);
  return out;
}

}  // namespace pquant
