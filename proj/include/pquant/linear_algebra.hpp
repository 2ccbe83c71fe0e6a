#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pquant/rational.hpp"

namespace pquant {

/// Dense exact-rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);
  /// Matrix unit E_ij (0-based).
  static RatMatrix unit(int n, int i, int j);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int i, int j) { return data_[index(i, j)]; }
  const Rat& operator()(int i, int j) const { return data_[index(i, j)]; }

  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix operator*(const Rat& c) const;
  RatMatrix transpose() const;
  Rat trace() const;
  bool is_zero() const;

  int rank() const;
  /// Basis of {v : M v = 0}, each vector scaled to primitive integers.
  std::vector<std::vector<Rat>> nullspace() const;
  /// Throws ArgumentError when singular or not square.
  RatMatrix inverse() const;
  /// Some solution of M v = b, or empty when inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

  std::string to_string() const;
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j); }

  std::vector<Rat> data_;
  int rows_ = 0;
  int cols_ = 0;
};

/// Sparse homogeneous system assembled one equation at a time and kept in
/// row-echelon form. Suited to the large, very redundant systems of the
/// invariant search: rank is bounded by the number of unknowns.
class SparseLinearSystem {
 public:
  using Row = std::map<int, Rat>;

  explicit SparseLinearSystem(int unknowns);

  int unknowns() const { return unknowns_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  bool full_rank() const { return rank() == unknowns_; }
  std::size_t equations_seen() const { return seen_; }

  /// Returns true when the equation was independent of those already held.
  bool add_equation(Row row);

  /// Basis of the solution space, primitive integer vectors, ordered by
  /// free column.
  std::vector<std::vector<Rat>> nullspace() const;

 private:
  std::map<int, Row> pivots_;
  int unknowns_;
  std::size_t seen_ = 0;
};

/// Scales a vector to coprime integers with a positive leading entry.
std::vector<Rat> primitive(std::vector<Rat> v);

/// Rank of a list of equal-length vectors.
int rank_of(const std::vector<std::vector<Rat>>& vectors);

}  // namespace pquant
