#pragma once

#include <map>
#include <string>

#include "pquant/polynomial.hpp"
#include "pquant/symbol.hpp"
#include "pquant/vector_field.hpp"
#include "pquant/word.hpp"

namespace pquant {

/// p-form Σ_w ω_w dx^w with polynomial coefficients.
class PForm {
 public:
  using Terms = std::map<Word, Poly>;

  PForm() = default;
  PForm(int n, int p);
  static PForm monomial(const Word& w, const Poly& coefficient);

  int dim() const { return n_; }
  int degree() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Poly coefficient(const Word& w) const;
  void add_term(const Word& w, const Poly& coefficient);

  PForm operator+(const PForm& other) const;
  PForm operator-(const PForm& other) const;
  PForm operator*(const Rat& c) const;

  std::string to_string() const;
  friend bool operator==(const PForm& a, const PForm& b) {
    return a.n_ == b.n_ && (a.terms_.empty() ? b.terms_.empty() : a.p_ == b.p_ && a.terms_ == b.terms_);
  }

 private:
  Terms terms_;
  int n_ = 0;
  int p_ = 0;
};

struct DiffOpKey {
  MIdx alpha;
  Word wedge;

  friend auto operator<=>(const DiffOpKey&, const DiffOpKey&) = default;
  friend bool operator==(const DiffOpKey&, const DiffOpKey&) = default;
};

/// Differential operator Ω^p -> C^∞: (Dω) = Σ_{α,w} A_α^w(x) ∂^α ω_w, where
/// A_α = Σ_w A_α^w v_w is a contravariant p-vector.
class DiffOp {
 public:
  using Terms = std::map<DiffOpKey, Poly>;

  DiffOp() = default;
  DiffOp(int n, int p);
  static DiffOp monomial(const MIdx& alpha, const Word& wedge, const Poly& coefficient);
  /// Order-0 multiplication operator on functions.
  static DiffOp multiplication(const Poly& f);

  int dim() const { return n_; }
  int form_degree() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  /// Maximal |α| present; -1 for the zero operator.
  int order() const;
  const Terms& terms() const { return terms_; }
  Poly coefficient(const MIdx& alpha, const Word& wedge) const;
  void add_term(const MIdx& alpha, const Word& wedge, const Poly& coefficient);

  DiffOp& operator+=(const DiffOp& other);
  DiffOp operator+(const DiffOp& other) const;
  DiffOp operator-(const DiffOp& other) const;
  DiffOp operator*(const Rat& c) const;
  friend DiffOp operator*(const Rat& c, const DiffOp& d) { return d * c; }

  std::string to_string() const;
  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.n_ == b.n_ && (a.terms_.empty() ? b.terms_.empty() : a.p_ == b.p_ && a.terms_ == b.terms_);
  }

 private:
  void check_compatible(const DiffOp& other) const;

  Terms terms_;
  int n_ = 0;
  int p_ = 0;
};

struct FormOperatorKey {
  Word out;
  MIdx beta;
  Word in;

  friend auto operator<=>(const FormOperatorKey&, const FormOperatorKey&) = default;
  friend bool operator==(const FormOperatorKey&, const FormOperatorKey&) = default;
};

/// Differential operator between form bundles Ω^{p_in} -> Ω^{p_out}:
/// (Fω)_out = Σ c_{out,β,in}(x) ∂^β ω_in. Used to normal-order D∘L_X and D∘d.
class FormOperator {
 public:
  using Terms = std::map<FormOperatorKey, Poly>;

  FormOperator(int n, int p_in, int p_out);

  int dim() const { return n_; }
  int input_degree() const { return p_in_; }
  int output_degree() const { return p_out_; }
  const Terms& terms() const { return terms_; }
  void add_term(const Word& out, const MIdx& beta, const Word& in, const Poly& coefficient);

 private:
  Terms terms_;
  int n_;
  int p_in_;
  int p_out_;
};

/// L_X on Ω^p: X.ω - ρ(DX)ω, with d(X^a) substituted into every dx^a slot.
FormOperator lie_form_operator(const VectorField& x, int n, int p);
/// Exterior derivative Ω^p -> Ω^{p+1}.
FormOperator exterior_derivative_operator(int n, int p);

PForm apply(const FormOperator& f, const PForm& omega);
/// D ∘ F by Leibniz expansion.
DiffOp compose(const DiffOp& d, const FormOperator& f);

/// Σ A_α^w ∂^α ω_w.
Poly apply(const DiffOp& d, const PForm& omega);

PForm lie_form(const VectorField& x, const PForm& omega);
PForm exterior_derivative(const PForm& omega);

/// 𝓛_X D = L_X ∘ D - D ∘ L_X, normal-ordered.
DiffOp lie_diffop(const VectorField& x, const DiffOp& d);

/// Affine symbol map: (α, w, A) ↦ A ⊗ v_w ⊗ ξ^α.
Symbol sigma_affine(const DiffOp& d);
DiffOp sigma_affine_inv(const Symbol& u);

/// Top-order part of sigma_affine(d). Throws UndefinedOrderError on zero.
Symbol principal_symbol(const DiffOp& d);

/// D ↦ D ∘ d (D on p-forms, p >= 1; result acts on (p-1)-forms).
DiffOp d_star(const DiffOp& d);

/// D ↦ multiplication by D(1); functions only.
DiffOp i_zero(const DiffOp& d);

/// Formal adjoint on top forms, identified with functions through
/// dx^1∧...∧dx^n: Σ a_α ∂^α ↦ (g ↦ Σ (-1)^{|α|} ∂^α(a_α g)).
DiffOp conjugation(const DiffOp& d);

}  // namespace pquant
