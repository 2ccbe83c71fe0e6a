#include "pquant/linear_algebra.hpp"

#include <sstream>

#include "pquant/errors.hpp"

namespace pquant {

RatMatrix::RatMatrix(int rows, int cols) : data_(static_cast<std::size_t>(rows * cols)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ArgumentError("negative matrix size");
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::unit(int n, int i, int j) {
  RatMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sizes differ");
  RatMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += other.data_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const { return *this + other * Rat(-1); }

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product size mismatch");
  RatMatrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
    }
  }
  return r;
}

RatMatrix RatMatrix::operator*(const Rat& c) const {
  RatMatrix r = *this;
  for (auto& v : r.data_) v *= c;
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

Rat RatMatrix::trace() const {
  Rat t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

namespace {

/// In-place reduced row echelon form; returns pivot columns. The pivot in
/// each column is the candidate with the smallest numerator magnitude
/// (ties broken by row index), which keeps entry growth down and makes the
/// elimination order deterministic.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int best = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (sgn(m(i, col)) == 0) continue;
      if (best < 0 || mpz_cmpabs(m(i, col).get_num_mpz_t(), m(best, col).get_num_mpz_t()) < 0) best = i;
    }
    if (best < 0) continue;
    if (best != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(best, j));
    }
    const Rat inv = 1 / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      const Rat f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

int RatMatrix::rank() const {
  RatMatrix m = *this;
  return static_cast<int>(rref(m).size());
}

std::vector<std::vector<Rat>> RatMatrix::nullspace() const {
  RatMatrix m = *this;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rat> v(static_cast<std::size_t>(cols_));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[static_cast<std::size_t>(pivots[r])] = -m(static_cast<int>(r), f);
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw ArgumentError("inverse of a non-square matrix");
  RatMatrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = 1;
  }
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < rows_ || pivots.back() >= cols_) throw ArgumentError("singular matrix");
  RatMatrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
  }
  return inv;
}

std::optional<std::vector<Rat>> RatMatrix::solve(const std::vector<Rat>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw DimensionMismatch("right-hand side has wrong length");
  RatMatrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[static_cast<std::size_t>(i)];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Rat> x(static_cast<std::size_t>(cols_));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[static_cast<std::size_t>(pivots[r])] = aug(static_cast<int>(r), cols_);
  return x;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

SparseLinearSystem::SparseLinearSystem(int unknowns) : unknowns_(unknowns) {
  if (unknowns < 0) throw ArgumentError("negative number of unknowns");
}

bool SparseLinearSystem::add_equation(Row row) {
  ++seen_;
  for (auto it = row.begin(); it != row.end();) {
    if (sgn(it->second) == 0) {
      it = row.erase(it);
    } else {
      if (it->first < 0 || it->first >= unknowns_) throw ArgumentError("equation refers to an unknown out of range");
      ++it;
    }
  }
  while (!row.empty()) {
    const int lead = row.begin()->first;
    auto piv = pivots_.find(lead);
    if (piv == pivots_.end()) {
      const Rat inv = 1 / row.begin()->second;
      for (auto& [c, v] : row) v *= inv;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    const Rat f = row.begin()->second;
    for (const auto& [c, v] : piv->second) {
      auto [it, inserted] = row.try_emplace(c, -f * v);
      if (!inserted) {
        it->second -= f * v;
        if (sgn(it->second) == 0) row.erase(it);
      }
    }
  }
  return false;
}

std::vector<std::vector<Rat>> SparseLinearSystem::nullspace() const {
  // Back-substitute into reduced form, highest pivot first.
  std::map<int, Row> reduced;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    Row row = it->second;
    // Reduced rows hold their pivot plus free columns only, so one pass
    // clears every pivot column without reintroducing another.
    std::vector<std::pair<int, Rat>> hits;
    for (auto e = std::next(row.begin()); e != row.end(); ++e) {
      if (reduced.count(e->first)) hits.emplace_back(e->first, e->second);
    }
    for (const auto& [col, f] : hits) {
      for (const auto& [c, v] : reduced.at(col)) {
        auto [jt, inserted] = row.try_emplace(c, -f * v);
        if (!inserted) {
          jt->second -= f * v;
          if (sgn(jt->second) == 0) row.erase(jt);
        }
      }
    }
    reduced.emplace(it->first, std::move(row));
  }
  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < unknowns_; ++f) {
    if (reduced.count(f)) continue;
    std::vector<Rat> v(static_cast<std::size_t>(unknowns_));
    v[static_cast<std::size_t>(f)] = 1;
    for (const auto& [pc, row] : reduced) {
      auto e = row.find(f);
      if (e != row.end()) v[static_cast<std::size_t>(pc)] = -e->second;
    }
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

std::vector<Rat> primitive(std::vector<Rat> v) {
  mpz_class lcm_den = 1, gcd_num = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  }
  for (auto& x : v) {
    x *= lcm_den;
    if (sgn(x) != 0) mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (gcd_num == 0) return v;
  int lead_sign = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      lead_sign = sgn(x);
      break;
    }
  }
  const Rat scale = Rat(lead_sign) / Rat(gcd_num);
  for (auto& x : v) x *= scale;
  return v;
}

int rank_of(const std::vector<std::vector<Rat>>& vectors) {
  if (vectors.empty()) return 0;
  RatMatrix m(static_cast<int>(vectors.size()), static_cast<int>(vectors.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) m(i, j) = vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m.rank();
}

}  // namespace pquant
