#pragma once

#include <map>
#include <string>
#include <vector>

#include "pquant/multi_index.hpp"
#include "pquant/rational.hpp"

namespace pquant {

/// Polynomial in x_1..x_n with exact rational coefficients. Zero
/// coefficients are never stored, so equal polynomials compare equal.
class Poly {
 public:
  using Terms = std::map<MIdx, Rat>;

  Poly() = default;
  explicit Poly(int n);
  static Poly constant(int n, const Rat& c);
  static Poly variable(int n, int i);
  static Poly monomial(int n, const MIdx& exponent, const Rat& c = 1);

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  const Terms& terms() const { return terms_; }
  Rat coefficient(const MIdx& exponent) const;

  void add_term(const MIdx& exponent, const Rat& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rat& c);
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const Rat& c) const;
  friend Poly operator*(const Rat& c, const Poly& p) { return p * c; }

  /// d/dx_i.
  Poly partial(int i) const;
  /// d^gamma.
  Poly partial(const MIdx& gamma) const;
  Rat eval(const std::vector<Rat>& point) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  void check_same_dim(const Poly& other) const;

  Terms terms_;
  int n_ = 0;
};

/// Adds c to the entry at key, erasing it when the sum vanishes.
template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

}  // namespace pquant
