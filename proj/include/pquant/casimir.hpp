#pragma once

#include <functional>
#include <vector>

#include "pquant/linear_algebra.hpp"
#include "pquant/symbol.hpp"
#include "pquant/vector_field.hpp"

namespace pquant {

/// ∂_r, then x^s ∂_r (s outer, r inner), then x^r 𝓔. Throws for n < 2.
std::vector<VectorField> projective_generators(int n);

/// Coordinates of X in projective_generators(n). Throws ArgumentError when
/// X is not in the projective algebra.
std::vector<Rat> projective_coordinates(const VectorField& x);

/// tr(ad X ∘ ad Y) on the projective algebra.
Rat projective_killing(const VectorField& x, const VectorField& y);

/// E_ij for i != j, then E_ii - E_{i+1,i+1}.
std::vector<RatMatrix> traceless_basis(int n);

/// 2n tr(AB), the Killing form of sl(n).
Rat killing_sl(const RatMatrix& a, const RatMatrix& b);

/// Dual basis under killing_sl by Gram inversion. Throws
/// InconsistentBasisError when the Gram matrix is singular.
std::vector<RatMatrix> killing_dual(const std::vector<RatMatrix>& basis);

/// h_A = -Σ A^k_l x^l ∂_k
VectorField linear_field(const RatMatrix& a);

struct ProjectiveBasis {
  int n = 0;
  std::vector<VectorField> e;
  VectorField euler;
  std::vector<RatMatrix> traceless;
  std::vector<RatMatrix> traceless_dual;
  std::vector<VectorField> h;
  std::vector<VectorField> h_dual;
  std::vector<VectorField> eps;

  /// The basis e_i, 𝓔, h_A, ε^i in that order.
  std::vector<VectorField> first() const;
  /// Its partner list ε^i, 𝓔/2n, n/(n+1) h_{A*}, e_i.
  std::vector<VectorField> second() const;
};

/// Built once per n and shared; thread-safe.
const ProjectiveBasis& projective_basis(int n);

using Action = std::function<Symbol(const VectorField&, const Symbol&)>;

/// 2Σ A_{ε^i} A_{e_i} + A_{Σ[e_i,ε^i]} + (1/2n) A_𝓔² + n/(n+1) Σ A_{h_A} A_{h_{A*}}
/// for an arbitrary action A of vector fields on symbols.
Symbol casimir(const Action& action, const Symbol& u);
/// Casimir of the geometric action L.
Symbol casimir_C(const Symbol& u);
/// Casimir of the operator action 𝓛.
Symbol casimir_quant(const Symbol& u);

/// (k+n+1)/(n+1) δδ* + (k+n)/(n+1) δ*δ on ξ-degree k.
Symbol casimir_closed_form(const Symbol& u, int k);

/// casimir_quant(u) - casimir_C(u).
Symbol n_casimir(const Symbol& u);
/// (1/(n+1)) (δ(η∂)δ* + δ*(η∂)δ)
Symbol n_casimir_closed_form(const Symbol& u);
/// 2 Σ t_1(ε^i) L_{e_i}
Symbol n_casimir_t1(const Symbol& u);

struct SpectrumValue {
  Rat alpha;
  Rat beta;
};

/// α^k_p = (k+n+1)(k+p)/(n+1), β^k_p = (k+n)(k+p)/(n+1).
SpectrumValue spectrum(int n, int k, int p);

}  // namespace pquant
