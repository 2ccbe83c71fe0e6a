#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pquant/multi_index.hpp"
#include "pquant/polynomial.hpp"
#include "pquant/rational.hpp"
#include "pquant/word.hpp"

namespace pquant {

/// One basis element x^x ⊗ v_wedge ⊗ ξ^xi of the symbol space.
struct SymbolKey {
  MIdx x;
  Word wedge;
  MIdx xi;

  friend auto operator<=>(const SymbolKey&, const SymbolKey&) = default;
  friend bool operator==(const SymbolKey&, const SymbolKey&) = default;
};

/// Element of S_p = ⊕_k S^k_p with polynomial coefficients: a finite
/// rational combination of x^β ⊗ v_w ⊗ ξ^α with |w| = p.
///
/// Several ξ-degrees may coexist in one value; graded operations take an
/// explicit component. The form degree may be -1 or n+1 only for the zero
/// symbols produced by δ* on functions and δ on top forms.
class Symbol {
 public:
  using Terms = std::map<SymbolKey, Rat>;

  Symbol() = default;
  Symbol(int n, int p);
  static Symbol monomial(const MIdx& x, const Word& wedge, const MIdx& xi, const Rat& c = 1);
  /// poly ⊗ v_wedge ⊗ ξ^xi
  static Symbol from_poly(const Poly& coefficient, const Word& wedge, const MIdx& xi);

  int dim() const { return n_; }
  int form_degree() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rat coefficient(const SymbolKey& key) const;

  void add_term(const SymbolKey& key, const Rat& c);
  /// Adds without validating the key; the caller guarantees dim and p.
  void add_term_unchecked(const SymbolKey& key, const Rat& c) { accumulate(terms_, key, c); }

  /// The ξ-homogeneous component of degree k.
  Symbol component(int k) const;
  std::set<int> xi_degrees() const;
  /// -1 for the zero symbol.
  int max_xi_degree() const;
  /// True for zero and for single-degree symbols.
  bool is_homogeneous() const { return xi_degrees().size() <= 1; }
  /// Maximal x-degree of the coefficients; -1 for zero.
  int max_x_degree() const;

  Symbol& operator+=(const Symbol& other);
  Symbol& operator-=(const Symbol& other);
  Symbol& operator*=(const Rat& c);
  Symbol operator+(const Symbol& other) const;
  Symbol operator-(const Symbol& other) const;
  Symbol operator-() const;
  Symbol operator*(const Rat& c) const;
  friend Symbol operator*(const Rat& c, const Symbol& s) { return s * c; }

  std::string to_string() const;

  /// Equality of canonical forms. Zero symbols of any form degree are equal
  /// when their dimensions agree.
  friend bool operator==(const Symbol& a, const Symbol& b);

 private:
  void check_compatible(const Symbol& other) const;

  Terms terms_;
  int n_ = 0;
  int p_ = 0;
};

/// Monomial basis of S^k_p with x-degree <= max_x_degree (coefficient 1).
std::vector<Symbol> symbol_basis(int n, int p, int k, int max_x_degree);

/// Monomial basis keys of the fibre W^k_p = Λ^p ⊗ S^k (x-exponent zero).
std::vector<SymbolKey> fibre_basis(int n, int p, int k);

}  // namespace pquant
