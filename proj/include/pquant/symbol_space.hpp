#pragma once

#include "pquant/symbol.hpp"
#include "pquant/vector_field.hpp"

namespace pquant {

/// Koszul differential δ = Σ_j π_a(v_j) ∘ (β^j ∂): moves one ξ-slot into
/// the exterior factor. S^k_p -> S^{k-1}_{p+1}; x-coefficients untouched.
Symbol koszul_delta(const Symbol& u);

/// δ* = Σ_j i_{β^j} ∘ π_s(v_j): moves one exterior slot into ξ.
/// S^k_p -> S^{k+1}_{p-1}.
Symbol koszul_delta_star(const Symbol& u);

/// Divergence (η∂) = Σ_j ∂_{x_j} ∂_{ξ_j}.
Symbol divergence(const Symbol& u);

/// i_η = Σ_j ∂_{x_j} ⊗ i_{β^j}, the commutator [(η∂), δ*].
Symbol interior_eta(const Symbol& u);

struct ABParts {
  Symbol a_part;
  Symbol b_part;
};

/// Splits a ξ-homogeneous u of degree k into δδ*u/(k+p) + δ*δu/(k+p).
/// Throws DegenerateGradeError when k + p = 0 and ArgumentError when u
/// has a component of another degree.
ABParts project_AB(const Symbol& u, int k);

/// Geometric Lie derivative L_X u = X.u - ρ(DX) u, where ρ(A) acts on
/// v_a and on ξ_a (as a derivation) by e_a ↦ Σ_i A^i_a e_i.
Symbol lie_symbol(const VectorField& x, const Symbol& u);

}  // namespace pquant
