#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "pquant/symbol.hpp"
#include "pquant/vector_field.hpp"

namespace pquant {

/// Constant-coefficient map S^k_p -> S^l_q,
///   x^β ⊗ e  ↦  Σ c[γ, e, f] ∂^γ(x^β) ⊗ f,   |γ| = order,
/// with e, f running over fibre monomials (x-exponent zero).
struct CandidateMap {
  using Key = std::tuple<MIdx, SymbolKey, SymbolKey>;

  int n = 0, k = 0, p = 0, l = 0, q = 0;
  int order = 0;
  std::map<Key, Rat> coefficients;

  Symbol apply(const Symbol& u) const;
  std::string to_string() const;
};

/// Order-0 candidate induced by a fibre map f: S^k_p -> S^l_q.
CandidateMap fibre_candidate(int n, int k, int p, int l, int q, const std::function<Symbol(const Symbol&)>& f);

/// True when both lists span the same space of candidates.
bool same_span(const std::vector<CandidateMap>& a, const std::vector<CandidateMap>& b);

struct SlInvariantResult {
  int dimension = 0;
  int unknowns = 0;
  std::vector<CandidateMap> basis;
};

/// Maps S^k_p -> S^l_q commuting with L_X for the whole projective
/// algebra. Returns dimension 0 when (k+p) - (l+q) < 0.
SlInvariantResult sl_invariant_space(int n, int k, int p, int l, int q);

/// The maps δ*, {δδ*, δ*δ}, δ that the sl-invariants are expected to be,
/// dropping zero ones; empty off the three targets.
std::vector<CandidateMap> koszul_candidates(int n, int k, int p, int l, int q);

/// Symbolic operators S_p -> S_q (operators written through σ_Aff).
using OperatorMap = std::function<Symbol(const Symbol&)>;

struct NamedGenerator {
  std::string name;
  OperatorMap map;
};

/// The classical and new invariants that apply to D^k_p -> D_q:
/// d*, d*∘C, id, I0, C, K, d*∘K, K'.
std::vector<NamedGenerator> named_generators(int n, int k, int p, int q);

/// (x¹)²∂₂, the field outside the projective algebra used to impose
/// Vect-invariance.
VectorField probe_field(int n);

struct VectInvariantResult {
  int n = 0, k = 0, p = 0, q = 0;
  int dimension = 0;
  std::string status;
  /// (r, j): parameter j of the sl-invariant maps S^r_p -> S_q.
  std::vector<std::pair<int, int>> layout;
  std::vector<std::vector<CandidateMap>> sl_bases;
  std::vector<std::vector<Rat>> solutions;
  /// Coordinates of each applicable named generator in the layout;
  /// empty when it does not fit the parametrization.
  std::vector<std::pair<std::string, std::vector<Rat>>> named;
  /// Named generators forming a basis of the solution space, if they do.
  std::vector<std::string> generators;
  bool named_span_matches = false;
};

/// Maps T: D^k_p -> D_q commuting with the action of every vector field,
/// found by imposing commutation with Q^{-1}𝓛_X Q for X = (x¹)²∂₂ on all
/// basis symbols of S^r_p, r <= k, of x-degree <= max_xdeg.
VectInvariantResult vect_invariant_space(int n, int k, int p, int q, int max_xdeg = 3);

/// T(𝓛_X D) = 𝓛_X T(D) for D = quantize(u), u over the basis of S^r_p,
/// r <= k, x-degree <= max_xdeg.
bool commutes_with(const OperatorMap& t, const VectorField& x, int n, int k, int p, int max_xdeg);

/// Dimension of the sl-invariant maps S^k_p -> S^l_q predicted by the
/// A/B decomposition.
int expected_sl_dimension(int n, int k, int p, int l, int q);
/// Dimension of Vect-invariant maps D^k_p -> D_q from the classification.
int expected_vect_dimension(int n, int k, int p, int q);

}  // namespace pquant
