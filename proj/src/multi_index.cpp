#include "pquant/multi_index.hpp"

#include <functional>

#include "pquant/errors.hpp"

namespace pquant {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDim) {
    throw ArgumentError("ambient dimension " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxDim) + "]");
  }
}

MIdx::MIdx(int n) : n_(static_cast<std::uint8_t>(n)) { check_dimension(n); }

MIdx::MIdx(int n, std::initializer_list<int> exponents) : MIdx(n) {
  if (static_cast<int>(exponents.size()) != n) throw ArgumentError("multi-index length differs from n");
  int i = 0;
  for (int e : exponents) set(i++, e);
}

MIdx MIdx::from_vector(const std::vector<int>& exponents) {
  MIdx m(static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(static_cast<int>(i), exponents[i]);
  return m;
}

MIdx MIdx::unit(int n, int i) {
  MIdx m(n);
  m.set(i, 1);
  return m;
}

void MIdx::set(int i, int value) {
  if (i < 0 || i >= n_) throw ArgumentError("multi-index slot out of range");
  if (value < 0 || value > 255) throw ArgumentError("exponent out of range");
  e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(value);
}

int MIdx::degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += e_[static_cast<std::size_t>(i)];
  return d;
}

std::vector<int> MIdx::to_vector() const {
  std::vector<int> v(n_);
  for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = (*this)[i];
  return v;
}

bool MIdx::divides(const MIdx& other) const {
  for (int i = 0; i < n_; ++i) {
    if ((*this)[i] > other[i]) return false;
  }
  return true;
}

MIdx MIdx::operator+(const MIdx& other) const {
  if (n_ != other.n_) throw DimensionMismatch("multi-index dimensions differ");
  MIdx r = *this;
  for (int i = 0; i < n_; ++i) r.set(i, (*this)[i] + other[i]);
  return r;
}

MIdx MIdx::operator-(const MIdx& other) const {
  if (n_ != other.n_) throw DimensionMismatch("multi-index dimensions differ");
  MIdx r = *this;
  for (int i = 0; i < n_; ++i) r.set(i, (*this)[i] - other[i]);
  return r;
}

MIdx MIdx::plus_unit(int i) const {
  MIdx r = *this;
  r.set(i, (*this)[i] + 1);
  return r;
}

MIdx MIdx::minus_unit(int i) const {
  MIdx r = *this;
  r.set(i, (*this)[i] - 1);
  return r;
}

mpz_class factorial(const MIdx& gamma) {
  mpz_class f = 1;
  for (int i = 0; i < gamma.dim(); ++i) {
    for (int j = 2; j <= gamma[i]; ++j) f *= j;
  }
  return f;
}

mpz_class falling_factorial(const MIdx& alpha, const MIdx& gamma) {
  mpz_class f = 1;
  for (int i = 0; i < alpha.dim(); ++i) {
    if (gamma[i] > alpha[i]) return 0;
    for (int j = 0; j < gamma[i]; ++j) f *= alpha[i] - j;
  }
  return f;
}

mpz_class binomial(const MIdx& alpha, const MIdx& gamma) {
  mpz_class b = falling_factorial(alpha, gamma);
  if (b == 0) return 0;
  return b / factorial(gamma);
}

std::vector<MIdx> monomials_of_degree(int n, int d) {
  std::vector<MIdx> out;
  MIdx cur(n);
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == n - 1) {
      cur.set(slot, left);
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.set(slot, e);
      rec(slot + 1, left - e);
    }
  };
  if (d >= 0) rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MIdx> monomials_up_to(int n, int d) {
  std::vector<MIdx> out;
  for (int k = 0; k <= d; ++k) {
    auto m = monomials_of_degree(n, k);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

std::vector<MIdx> sub_indices_of_degree(const MIdx& alpha, int d) {
  std::vector<MIdx> out;
  if (d < 0 || d > alpha.degree()) return out;
  const int n = alpha.dim();
  MIdx cur(n);
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int e = std::min(left, alpha[slot]); e >= 0; --e) {
      cur.set(slot, e);
      rec(slot + 1, left - e);
    }
    cur.set(slot, 0);
  };
  rec(0, d);
  return out;
}

}  // namespace pquant
