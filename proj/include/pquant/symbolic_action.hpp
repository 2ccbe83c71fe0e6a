#pragma once

#include "pquant/symbol.hpp"
#include "pquant/vector_field.hpp"

namespace pquant {

/// Order-lowering term t_r(X): S^k_p -> S^{k-r}_p of the operator action
/// in the polynomial formalism. With η realized as derivatives of the
/// coefficients and ζ as derivatives of X, for each term Λ ⊗ P:
///
///   t_r(X)(Λ⊗P) = - Σ_i Σ_{|γ|=r+1} (∂^γ X^i / γ!) Λ ⊗ ξ_i ∂_ξ^γ P
///                 - Σ_{i,j} Σ_{|γ|=r} (∂^γ ∂_j X^i / γ!) v_i ∧ i_{β^j}Λ ⊗ ∂_ξ^γ P
///
/// The same expression at r = 0 is -ρ(DX). Throws ArgumentError for r < 1.
Symbol t_term(const VectorField& x, int r, const Symbol& u);

/// 𝓛_X u = L_X u + Σ_{r>=1} t_r(X) u, the image of the commutator action on
/// operators under the affine symbol map.
Symbol lie_symbolic(const VectorField& x, const Symbol& u);

}  // namespace pquant
