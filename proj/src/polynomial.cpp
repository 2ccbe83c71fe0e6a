#include "pquant/polynomial.hpp"

#include <sstream>

#include "pquant/errors.hpp"

namespace pquant {

Poly::Poly(int n) : n_(n) { check_dimension(n); }

Poly Poly::constant(int n, const Rat& c) { return monomial(n, MIdx(n), c); }

Poly Poly::variable(int n, int i) { return monomial(n, MIdx::unit(n, i)); }

Poly Poly::monomial(int n, const MIdx& exponent, const Rat& c) {
  Poly p(n);
  p.add_term(exponent, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

Rat Poly::coefficient(const MIdx& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const MIdx& exponent, const Rat& c) {
  if (exponent.dim() != n_) throw DimensionMismatch("monomial dimension differs from polynomial");
  accumulate(terms_, exponent, c);
}

void Poly::check_same_dim(const Poly& other) const {
  if (n_ != other.n_) {
    throw DimensionMismatch("polynomials over R^" + std::to_string(n_) + " and R^" + std::to_string(other.n_));
  }
}

Poly& Poly::operator+=(const Poly& other) {
  check_same_dim(other);
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_same_dim(other);
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, Rat(-c));
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator+(const Poly& other) const {
  Poly r = *this;
  r += other;
  return r;
}

Poly Poly::operator-(const Poly& other) const {
  Poly r = *this;
  r -= other;
  return r;
}

Poly Poly::operator-() const { return *this * Rat(-1); }

Poly Poly::operator*(const Poly& other) const {
  check_same_dim(other);
  Poly r(n_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) accumulate(r.terms_, e1 + e2, Rat(c1 * c2));
  }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r = *this;
  r *= c;
  return r;
}

Poly Poly::partial(int i) const {
  if (i < 0 || i >= n_) throw ArgumentError("partial derivative index out of range");
  Poly r(n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    r.terms_.emplace(e.minus_unit(i), c * e[i]);
  }
  return r;
}

Poly Poly::partial(const MIdx& gamma) const {
  if (gamma.dim() != n_) throw DimensionMismatch("derivative multi-index dimension differs");
  Poly r(n_);
  for (const auto& [e, c] : terms_) {
    mpz_class f = falling_factorial(e, gamma);
    if (f == 0) continue;
    r.terms_.emplace(e - gamma, c * f);
  }
  return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != n_) throw DimensionMismatch("evaluation point has wrong length");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat v = c;
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < e[i]; ++k) v *= point[static_cast<std::size_t>(i)];
    }
    total += v;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = (mag == 1) && !e.is_zero();
    if (!unit) os << mag.get_str();
    bool first_var = true;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (!unit || !first_var) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

}  // namespace pquant
