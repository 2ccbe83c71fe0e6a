#include "pquant/operators.hpp"

#include <sstream>

#include "pquant/errors.hpp"

namespace pquant {

// ---- PForm -----------------------------------------------------------------

PForm::PForm(int n, int p) : n_(n), p_(p) {
  check_dimension(n);
  if (p < -1 || p > n + 1) throw ArgumentError("form degree out of range");
}

PForm PForm::monomial(const Word& w, const Poly& coefficient) {
  PForm f(w.dim(), w.size());
  f.add_term(w, coefficient);
  return f;
}

Poly PForm::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Poly(n_) : it->second;
}

void PForm::add_term(const Word& w, const Poly& coefficient) {
  if (w.dim() != n_ || coefficient.dim() != n_) throw DimensionMismatch("form term over wrong dimension");
  if (w.size() != p_) throw ArgumentError("covariant word length differs from form degree");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PForm PForm::operator+(const PForm& other) const {
  if (n_ != other.n_) throw DimensionMismatch("forms over different dimensions");
  PForm r = is_zero() ? PForm(n_, other.p_) : *this;
  for (const auto& [w, c] : other.terms_) r.add_term(w, c);
  return r;
}

PForm PForm::operator-(const PForm& other) const { return *this + other * Rat(-1); }

PForm PForm::operator*(const Rat& c) const {
  PForm r(n_, p_);
  for (const auto& [w, poly] : terms_) r.add_term(w, poly * c);
  return r;
}

std::string PForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")";
    for (int i : w.indices()) os << "*dx" << (i + 1);
    first = false;
  }
  return os.str();
}

// ---- DiffOp ----------------------------------------------------------------

DiffOp::DiffOp(int n, int p) : n_(n), p_(p) {
  check_dimension(n);
  if (p < -1 || p > n + 1) throw ArgumentError("form degree out of range");
}

DiffOp DiffOp::monomial(const MIdx& alpha, const Word& wedge, const Poly& coefficient) {
  DiffOp d(alpha.dim(), wedge.size());
  d.add_term(alpha, wedge, coefficient);
  return d;
}

DiffOp DiffOp::multiplication(const Poly& f) { return monomial(MIdx(f.dim()), Word(f.dim()), f); }

int DiffOp::order() const {
  int k = -1;
  for (const auto& [key, c] : terms_) k = std::max(k, key.alpha.degree());
  return k;
}

Poly DiffOp::coefficient(const MIdx& alpha, const Word& wedge) const {
  auto it = terms_.find({alpha, wedge});
  return it == terms_.end() ? Poly(n_) : it->second;
}

void DiffOp::add_term(const MIdx& alpha, const Word& wedge, const Poly& coefficient) {
  if (alpha.dim() != n_ || wedge.dim() != n_ || coefficient.dim() != n_) {
    throw DimensionMismatch("operator term over wrong dimension");
  }
  if (wedge.size() != p_) throw ArgumentError("contravariant word length differs from form degree");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({alpha, wedge}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffOp::check_compatible(const DiffOp& other) const {
  if (n_ != other.n_) throw DimensionMismatch("operators over different dimensions");
  if (p_ != other.p_ && !terms_.empty() && !other.terms_.empty()) {
    throw ArgumentError("adding operators on forms of different degrees");
  }
}

DiffOp& DiffOp::operator+=(const DiffOp& other) {
  check_compatible(other);
  if (terms_.empty()) p_ = other.p_;
  for (const auto& [key, c] : other.terms_) add_term(key.alpha, key.wedge, c);
  return *this;
}

DiffOp DiffOp::operator+(const DiffOp& other) const {
  DiffOp r = *this;
  r += other;
  return r;
}

DiffOp DiffOp::operator-(const DiffOp& other) const { return *this + other * Rat(-1); }

DiffOp DiffOp::operator*(const Rat& c) const {
  DiffOp r(n_, p_);
  for (const auto& [key, poly] : terms_) r.add_term(key.alpha, key.wedge, poly * c);
  return r;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")";
    for (int i = 0; i < n_; ++i) {
      if (key.alpha[i] > 0) os << "*d" << (i + 1) << (key.alpha[i] > 1 ? "^" + std::to_string(key.alpha[i]) : "");
    }
    os << "[";
    bool fw = true;
    for (int i : key.wedge.indices()) {
      os << (fw ? "" : ",") << (i + 1);
      fw = false;
    }
    os << "]";
    first = false;
  }
  return os.str();
}

// ---- FormOperator ----------------------------------------------------------

FormOperator::FormOperator(int n, int p_in, int p_out) : n_(n), p_in_(p_in), p_out_(p_out) {
  check_dimension(n);
}

void FormOperator::add_term(const Word& out, const MIdx& beta, const Word& in, const Poly& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({out, beta, in}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormOperator lie_form_operator(const VectorField& x, int n, int p) {
  if (x.dim() != n) throw DimensionMismatch("vector field and form dimensions differ");
  FormOperator f(n, p, p);
  for (const auto& w : words_of_length(n, p)) {
    for (int j = 0; j < n; ++j) f.add_term(w, MIdx::unit(n, j), w, x[j]);
    // L_X dx^a = d(X^a) = Σ_b ∂_b X^a dx^b, substituted slot by slot.
    for (int a : w.indices()) {
      for (int b = 0; b < n; ++b) {
        Poly jab = x.jacobian(a, b);
        if (jab.is_zero()) continue;
        auto rep = replace_index(w, a, b);
        if (!rep) continue;
        f.add_term(rep->word, MIdx(n), w, jab * Rat(rep->sign));
      }
    }
  }
  return f;
}

FormOperator exterior_derivative_operator(int n, int p) {
  FormOperator f(n, p, p + 1);
  for (const auto& w : words_of_length(n, p)) {
    for (int j = 0; j < n; ++j) {
      auto ins = wedge_insert(j, w);
      if (!ins) continue;
      f.add_term(ins->word, MIdx::unit(n, j), w, Poly::constant(n, ins->sign));
    }
  }
  return f;
}

PForm apply(const FormOperator& f, const PForm& omega) {
  if (f.dim() != omega.dim()) throw DimensionMismatch("operator and form dimensions differ");
  if (f.input_degree() != omega.degree() && !omega.is_zero()) {
    throw ArgumentError("form operator applied to a form of the wrong degree");
  }
  PForm r(f.dim(), f.output_degree());
  for (const auto& [key, c] : f.terms()) {
    auto it = omega.terms().find(key.in);
    if (it == omega.terms().end()) continue;
    r.add_term(key.out, c * it->second.partial(key.beta));
  }
  return r;
}

DiffOp compose(const DiffOp& d, const FormOperator& f) {
  if (d.dim() != f.dim()) throw DimensionMismatch("operator dimensions differ");
  if (d.form_degree() != f.output_degree() && !d.is_zero()) {
    throw ArgumentError("composition of operators with mismatched form degrees");
  }
  const int n = d.dim();
  DiffOp r(n, f.input_degree());
  for (const auto& [dkey, a] : d.terms()) {
    const FormOperatorKey lo{dkey.wedge, MIdx(n), Word(n)};
    for (auto it = f.terms().lower_bound(lo); it != f.terms().end() && it->first.out == dkey.wedge; ++it) {
      const auto& [fkey, c] = *it;
      // ∂^α (c ∂^β ω) = Σ_{γ ≤ α} binom(α, γ) ∂^γ c ∂^{α-γ+β} ω
      for (int g = 0; g <= dkey.alpha.degree(); ++g) {
        for (const auto& gamma : sub_indices_of_degree(dkey.alpha, g)) {
          Poly dc = c.partial(gamma);
          if (dc.is_zero()) continue;
          r.add_term(dkey.alpha - gamma + fkey.beta, fkey.in, a * dc * Rat(binomial(dkey.alpha, gamma)));
        }
      }
    }
  }
  return r;
}

Poly apply(const DiffOp& d, const PForm& omega) {
  if (d.dim() != omega.dim()) throw DimensionMismatch("operator and form dimensions differ");
  if (d.form_degree() != omega.degree() && !d.is_zero() && !omega.is_zero()) {
    throw ArgumentError("operator on " + std::to_string(d.form_degree()) + "-forms applied to a " +
                        std::to_string(omega.degree()) + "-form");
  }
  Poly r(d.dim());
  for (const auto& [key, a] : d.terms()) {
    auto it = omega.terms().find(key.wedge);
    if (it == omega.terms().end()) continue;
    r += a * it->second.partial(key.alpha);
  }
  return r;
}

PForm lie_form(const VectorField& x, const PForm& omega) {
  return apply(lie_form_operator(x, omega.dim(), omega.degree()), omega);
}

PForm exterior_derivative(const PForm& omega) {
  return apply(exterior_derivative_operator(omega.dim(), omega.degree()), omega);
}

DiffOp lie_diffop(const VectorField& x, const DiffOp& d) {
  if (x.dim() != d.dim()) throw DimensionMismatch("vector field and operator dimensions differ");
  const int n = d.dim();
  // X ∘ D
  DiffOp left(n, d.form_degree());
  for (const auto& [key, a] : d.terms()) {
    for (int j = 0; j < n; ++j) {
      if (x[j].is_zero()) continue;
      left.add_term(key.alpha, key.wedge, x[j] * a.partial(j));
      left.add_term(key.alpha.plus_unit(j), key.wedge, x[j] * a);
    }
  }
  return left - compose(d, lie_form_operator(x, n, d.form_degree()));
}

Symbol sigma_affine(const DiffOp& d) {
  Symbol s(d.dim(), d.form_degree());
  for (const auto& [key, a] : d.terms()) {
    for (const auto& [e, c] : a.terms()) s.add_term_unchecked({e, key.wedge, key.alpha}, c);
  }
  return s;
}

DiffOp sigma_affine_inv(const Symbol& u) {
  const int n = u.dim();
  DiffOp d(n, u.form_degree());
  for (const auto& [key, c] : u.terms()) d.add_term(key.xi, key.wedge, Poly::monomial(n, key.x, c));
  return d;
}

Symbol principal_symbol(const DiffOp& d) {
  if (d.is_zero()) throw UndefinedOrderError("principal symbol of the zero operator");
  return sigma_affine(d).component(d.order());
}

DiffOp d_star(const DiffOp& d) {
  if (d.form_degree() < 1) throw ArgumentError("d* needs an operator on p-forms with p >= 1");
  return compose(d, exterior_derivative_operator(d.dim(), d.form_degree() - 1));
}

DiffOp i_zero(const DiffOp& d) {
  if (d.form_degree() != 0) throw ArgumentError("I_0 is defined on operators acting on functions");
  const int n = d.dim();
  return DiffOp::multiplication(d.coefficient(MIdx(n), Word(n)));
}

DiffOp conjugation(const DiffOp& d) {
  const int n = d.dim();
  if (d.form_degree() != n) throw ArgumentError("conjugation is defined on operators acting on n-forms");
  const Word top = Word::full(n);
  DiffOp r(n, n);
  for (const auto& [key, a] : d.terms()) {
    const Rat sign = key.alpha.degree() % 2 == 0 ? 1 : -1;
    for (int g = 0; g <= key.alpha.degree(); ++g) {
      for (const auto& gamma : sub_indices_of_degree(key.alpha, g)) {
        // ∂^α(a g) = Σ binom(α, γ) ∂^{α-γ} a ∂^γ g
        Poly da = a.partial(key.alpha - gamma);
        if (da.is_zero()) continue;
        r.add_term(gamma, top, da * Rat(sign * Rat(binomial(key.alpha, gamma))));
      }
    }
  }
  return r;
}

}  // namespace pquant
