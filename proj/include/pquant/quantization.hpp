#pragma once

#include <vector>

#include "pquant/operators.hpp"
#include "pquant/symbol.hpp"
#include "pquant/vector_field.hpp"

namespace pquant {

/// Scalars of the projectively equivariant quantization on S^k_p:
/// a[l-1] = (1/(n+1))^l Π_{j=1..l} 1/(α^k_p - α^{k-j}_p), b[l-1] likewise
/// with β, for 1 <= l <= k.
struct QCoefficients {
  int n = 0;
  int k = 0;
  int p = 0;
  std::vector<Rat> a;
  std::vector<Rat> b;
};

/// Cached per (n, k, p); entries are never modified after insertion.
const QCoefficients& q_coefficients(int n, int k, int p);

/// u + Σ_l a_l (δ(η∂)δ*)^l u + b_l (δ*(η∂)δ)^l u, applied per ξ-degree.
Symbol quantize(const Symbol& u);

/// Inverse of quantize, by downward triangular solve in ξ-degree.
Symbol symbol_map(const Symbol& v);

/// Independent construction of quantize on an eigenvector of C: the
/// solution of 𝓒 Q = λ Q with top part P, built degree by degree.
/// Throws ArgumentError when P mixes A- and B-parts or ξ-degrees.
Symbol casimir_solve(const Symbol& p, int k);

/// Degree-(deg u - i) component of symbol_map(𝓛_X quantize(u)) - L_X u.
/// u must be ξ-homogeneous; i >= 1.
Symbol gamma(int i, const VectorField& x, const Symbol& u);

/// quantize(δ(σ_k(D))) with σ_k the order-k principal symbol. Invariant
/// only at the (k, p) accepted by k_map; exposed unchecked for negative
/// controls.
Symbol koszul_transport(const Symbol& d, int k);

/// K: D^k_p -> D^{k-1}_{p+1} for (k, p) = (1, p >= 1) or (2, n-1).
/// Using the whole equivariant symbol instead of the principal one gives
/// the same map for k = 1 but breaks invariance at (2, n-1).
Symbol k_map(const Symbol& d, int k);

/// K' on operators of order <= 2 acting on functions: ½δ on the order-2
/// symbol, δ on the order-1 symbol, zero on order 0.
Symbol k_prime(const Symbol& d);

/// quantize, then back to differential operators.
DiffOp quantize_operator(const Symbol& u);
/// Equivariant symbol of an operator.
Symbol operator_symbol(const DiffOp& d);

}  // namespace pquant
