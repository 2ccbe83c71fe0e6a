#pragma once

#include <string>
#include <vector>

#include "pquant/polynomial.hpp"

namespace pquant {

/// Polynomial vector field X = sum_i X^i d_i on R^n.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(int n);
  explicit VectorField(std::vector<Poly> components);

  /// d_i
  static VectorField coordinate(int n, int i);
  /// Euler field sum_r x^r d_r.
  static VectorField euler(int n);
  /// coefficient * d_i
  static VectorField along(int n, int i, const Poly& coefficient);

  int dim() const { return n_; }
  const Poly& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }
  const std::vector<Poly>& components() const { return components_; }
  /// Maximal polynomial degree among the components (-1 for zero).
  int degree() const;
  bool is_zero() const;

  /// d_j X^i
  Poly jacobian(int i, int j) const { return (*this)[i].partial(j); }
  /// X(f) = sum X^j d_j f
  Poly apply(const Poly& f) const;

  VectorField operator+(const VectorField& other) const;
  VectorField operator-(const VectorField& other) const;
  VectorField operator*(const Rat& c) const;
  friend VectorField operator*(const Rat& c, const VectorField& v) { return v * c; }
  /// Multiply every component by a polynomial.
  VectorField times(const Poly& f) const;

  std::string to_string() const;

  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  std::vector<Poly> components_;
  int n_ = 0;
};

/// [X, Y]^i = X(Y^i) - Y(X^i).
VectorField bracket(const VectorField& x, const VectorField& y);

}  // namespace pquant
