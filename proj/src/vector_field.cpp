#include "pquant/vector_field.hpp"

#include <sstream>

#include "pquant/errors.hpp"

namespace pquant {

VectorField::VectorField(int n) : n_(n) {
  check_dimension(n);
  components_.assign(static_cast<std::size_t>(n), Poly(n));
}

VectorField::VectorField(std::vector<Poly> components) : components_(std::move(components)) {
  n_ = static_cast<int>(components_.size());
  check_dimension(n_);
  for (const auto& c : components_) {
    if (c.dim() != n_) throw DimensionMismatch("vector field component over wrong dimension");
  }
}

VectorField VectorField::coordinate(int n, int i) { return along(n, i, Poly::constant(n, 1)); }

VectorField VectorField::euler(int n) {
  VectorField e(n);
  for (int r = 0; r < n; ++r) e.components_[static_cast<std::size_t>(r)] = Poly::variable(n, r);
  return e;
}

VectorField VectorField::along(int n, int i, const Poly& coefficient) {
  VectorField v(n);
  if (i < 0 || i >= n) throw ArgumentError("vector field direction out of range");
  if (coefficient.dim() != n) throw DimensionMismatch("coefficient over wrong dimension");
  v.components_[static_cast<std::size_t>(i)] = coefficient;
  return v;
}

int VectorField::degree() const {
  int d = -1;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

bool VectorField::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Poly VectorField::apply(const Poly& f) const {
  if (f.dim() != n_) throw DimensionMismatch("vector field and function dimensions differ");
  Poly r(n_);
  for (int j = 0; j < n_; ++j) {
    if ((*this)[j].is_zero()) continue;
    r += (*this)[j] * f.partial(j);
  }
  return r;
}

VectorField VectorField::operator+(const VectorField& other) const {
  if (n_ != other.n_) throw DimensionMismatch("vector field dimensions differ");
  VectorField r = *this;
  for (int i = 0; i < n_; ++i) r.components_[static_cast<std::size_t>(i)] += other[i];
  return r;
}

VectorField VectorField::operator-(const VectorField& other) const { return *this + other * Rat(-1); }

VectorField VectorField::operator*(const Rat& c) const {
  VectorField r = *this;
  for (auto& comp : r.components_) comp *= c;
  return r;
}

VectorField VectorField::times(const Poly& f) const {
  VectorField r = *this;
  for (auto& comp : r.components_) comp = comp * f;
  return r;
}

std::string VectorField::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n_; ++i) {
    if ((*this)[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << (*this)[i].to_string() << ")*d" << (i + 1);
    first = false;
  }
  return first ? "0" : os.str();
}

VectorField bracket(const VectorField& x, const VectorField& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("bracket of fields over different dimensions");
  std::vector<Poly> comps;
  for (int i = 0; i < x.dim(); ++i) comps.push_back(x.apply(y[i]) - y.apply(x[i]));
  return VectorField(std::move(comps));
}

}  // namespace pquant
