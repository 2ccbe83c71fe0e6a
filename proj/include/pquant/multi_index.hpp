#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pquant/rational.hpp"

namespace pquant {

inline constexpr int kMaxDim = 8;

/// Exponent vector in N^n. Indices are 0-based in the C++ API.
class MIdx {
 public:
  MIdx() = default;
  explicit MIdx(int n);
  MIdx(int n, std::initializer_list<int> exponents);
  static MIdx from_vector(const std::vector<int>& exponents);
  static MIdx unit(int n, int i);

  int dim() const { return n_; }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int value);
  int degree() const;
  bool is_zero() const { return degree() == 0; }
  std::vector<int> to_vector() const;

  /// Componentwise <=.
  bool divides(const MIdx& other) const;
  MIdx operator+(const MIdx& other) const;
  /// Requires other.divides(*this).
  MIdx operator-(const MIdx& other) const;
  MIdx plus_unit(int i) const;
  /// Requires (*this)[i] > 0.
  MIdx minus_unit(int i) const;

  friend auto operator<=>(const MIdx&, const MIdx&) = default;
  friend bool operator==(const MIdx&, const MIdx&) = default;

 private:
  std::array<std::uint8_t, kMaxDim> e_{};
  std::uint8_t n_ = 0;
};

/// gamma! = prod gamma_i!
mpz_class factorial(const MIdx& gamma);
/// alpha! / (alpha - gamma)!; zero unless gamma <= alpha.
mpz_class falling_factorial(const MIdx& alpha, const MIdx& gamma);
/// prod binom(alpha_i, gamma_i).
mpz_class binomial(const MIdx& alpha, const MIdx& gamma);

/// All exponent vectors of total degree d, in increasing order.
std::vector<MIdx> monomials_of_degree(int n, int d);
/// All exponent vectors of total degree <= d.
std::vector<MIdx> monomials_up_to(int n, int d);
/// All gamma <= alpha (componentwise) with |gamma| = d.
std::vector<MIdx> sub_indices_of_degree(const MIdx& alpha, int d);

void check_dimension(int n);

}  // namespace pquant
