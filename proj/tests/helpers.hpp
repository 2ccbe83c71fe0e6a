#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include <doctest.h>

#include "pquant/operators.hpp"
#include "pquant/symbol.hpp"
#include "pquant/vector_field.hpp"

namespace pquant::testing {

/// Word from 1-based indices, matching the usual v_1, v_2 notation.
inline Word W(int n, std::initializer_list<int> one_based) {
  std::vector<int> idx;
  for (int i : one_based) idx.push_back(i - 1);
  return Word::from_indices(n, idx);
}

inline MIdx M(int n, std::initializer_list<int> exps) { return MIdx(n, exps); }

/// c * x^x ⊗ v_w ⊗ ξ^xi
inline Symbol S(const Rat& c, const MIdx& x, const Word& w, const MIdx& xi) {
  return Symbol::monomial(x, w, xi, c);
}

/// c * x^e as a polynomial.
inline Poly P(const Rat& c, const MIdx& e) { return Poly::monomial(e.dim(), e, c); }

inline Poly x_var(int n, int one_based) { return Poly::variable(n, one_based - 1); }

/// coefficient * ∂_i (1-based).
inline VectorField field(int n, int one_based, const Poly& coefficient) {
  return VectorField::along(n, one_based - 1, coefficient);
}

inline Poly random_poly(std::mt19937_64& rng, int n, int max_degree, int terms = 3) {
  std::uniform_int_distribution<int> coef(-3, 3);
  auto monos = monomials_up_to(n, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  Poly p(n);
  for (int t = 0; t < terms; ++t) p.add_term(monos[pick(rng)], coef(rng));
  return p;
}

inline VectorField random_field(std::mt19937_64& rng, int n, int max_degree) {
  std::vector<Poly> comps;
  for (int i = 0; i < n; ++i) comps.push_back(random_poly(rng, n, max_degree));
  return VectorField(std::move(comps));
}

inline Symbol random_symbol(std::mt19937_64& rng, int n, int p, int max_k, int max_xdeg, int terms = 4) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> kdist(0, max_k);
  Symbol s(n, p);
  auto words = words_of_length(n, p);
  auto xs = monomials_up_to(n, max_xdeg);
  std::uniform_int_distribution<std::size_t> pw(0, words.size() - 1), px(0, xs.size() - 1);
  for (int t = 0; t < terms; ++t) {
    auto xis = monomials_of_degree(n, kdist(rng));
    std::uniform_int_distribution<std::size_t> pxi(0, xis.size() - 1);
    s.add_term({xs[px(rng)], words[pw(rng)], xis[pxi(rng)]}, coef(rng));
  }
  return s;
}

inline DiffOp random_diffop(std::mt19937_64& rng, int n, int p, int max_order, int max_xdeg) {
  return sigma_affine_inv(random_symbol(rng, n, p, max_order, max_xdeg));
}

inline PForm random_form(std::mt19937_64& rng, int n, int p, int max_xdeg) {
  PForm f(n, p);
  for (const auto& w : words_of_length(n, p)) f.add_term(w, random_poly(rng, n, max_xdeg));
  return f;
}

}  // namespace pquant::testing

namespace doctest {
template <>
struct StringMaker<pquant::Symbol> {
  static String convert(const pquant::Symbol& s) { return s.to_string().c_str(); }
};
template <>
struct StringMaker<pquant::Rat> {
  static String convert(const pquant::Rat& r) { return r.get_str().c_str(); }
};
}  // namespace doctest
