#include "pquant/symbol.hpp"

#include <sstream>

#include "pquant/errors.hpp"

namespace pquant {

Symbol::Symbol(int n, int p) : n_(n), p_(p) {
  check_dimension(n);
  if (p < -1 || p > n + 1) throw ArgumentError("form degree " + std::to_string(p) + " out of range");
}

Symbol Symbol::monomial(const MIdx& x, const Word& wedge, const MIdx& xi, const Rat& c) {
  Symbol s(x.dim(), wedge.size());
  s.add_term({x, wedge, xi}, c);
  return s;
}

Symbol Symbol::from_poly(const Poly& coefficient, const Word& wedge, const MIdx& xi) {
  Symbol s(coefficient.dim(), wedge.size());
  for (const auto& [e, c] : coefficient.terms()) s.add_term({e, wedge, xi}, c);
  return s;
}

Rat Symbol::coefficient(const SymbolKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Symbol::add_term(const SymbolKey& key, const Rat& c) {
  if (key.x.dim() != n_ || key.wedge.dim() != n_ || key.xi.dim() != n_) {
    throw DimensionMismatch("symbol term over wrong dimension");
  }
  if (key.wedge.size() != p_) throw ArgumentError("exterior word length differs from form degree");
  accumulate(terms_, key, c);
}

Symbol Symbol::component(int k) const {
  Symbol r(n_, p_);
  for (const auto& [key, c] : terms_) {
    if (key.xi.degree() == k) r.terms_.emplace_hint(r.terms_.end(), key, c);
  }
  return r;
}

std::set<int> Symbol::xi_degrees() const {
  std::set<int> ds;
  for (const auto& [key, c] : terms_) ds.insert(key.xi.degree());
  return ds;
}

int Symbol::max_xi_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.xi.degree());
  return d;
}

int Symbol::max_x_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.x.degree());
  return d;
}

void Symbol::check_compatible(const Symbol& other) const {
  if (n_ != other.n_) throw DimensionMismatch("symbols over different dimensions");
  if (p_ != other.p_ && !terms_.empty() && !other.terms_.empty()) {
    throw ArgumentError("adding symbols of different form degrees");
  }
}

Symbol& Symbol::operator+=(const Symbol& other) {
  check_compatible(other);
  if (terms_.empty()) p_ = other.p_;
  for (const auto& [key, c] : other.terms_) accumulate(terms_, key, c);
  return *this;
}

Symbol& Symbol::operator-=(const Symbol& other) {
  check_compatible(other);
  if (terms_.empty()) p_ = other.p_;
  for (const auto& [key, c] : other.terms_) accumulate(terms_, key, Rat(-c));
  return *this;
}

Symbol& Symbol::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

Symbol Symbol::operator+(const Symbol& other) const {
  Symbol r = *this;
  r += other;
  return r;
}

Symbol Symbol::operator-(const Symbol& other) const {
  Symbol r = *this;
  r -= other;
  return r;
}

Symbol Symbol::operator-() const { return *this * Rat(-1); }

Symbol Symbol::operator*(const Rat& c) const {
  Symbol r = *this;
  r *= c;
  return r;
}

bool operator==(const Symbol& a, const Symbol& b) {
  if (a.n_ != b.n_) return false;
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  return a.p_ == b.p_ && a.terms_ == b.terms_;
}

std::string Symbol::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    os << (first ? "" : " + ") << c.get_str();
    for (int i = 0; i < n_; ++i) {
      if (key.x[i] > 0) os << "*x" << (i + 1) << (key.x[i] > 1 ? "^" + std::to_string(key.x[i]) : "");
    }
    os << " v(";
    bool fw = true;
    for (int i : key.wedge.indices()) {
      os << (fw ? "" : "^") << (i + 1);
      fw = false;
    }
    os << ")";
    for (int i = 0; i < n_; ++i) {
      if (key.xi[i] > 0) os << "*xi" << (i + 1) << (key.xi[i] > 1 ? "^" + std::to_string(key.xi[i]) : "");
    }
    first = false;
  }
  return os.str();
}

std::vector<Symbol> symbol_basis(int n, int p, int k, int max_x_degree) {
  std::vector<Symbol> out;
  const auto xs = monomials_up_to(n, max_x_degree);
  for (const auto& fibre : fibre_basis(n, p, k)) {
    for (const auto& x : xs) out.push_back(Symbol::monomial(x, fibre.wedge, fibre.xi));
  }
  return out;
}

std::vector<SymbolKey> fibre_basis(int n, int p, int k) {
  std::vector<SymbolKey> out;
  for (const auto& w : words_of_length(n, p)) {
    for (const auto& xi : monomials_of_degree(n, k)) out.push_back({MIdx(n), w, xi});
  }
  return out;
}

}  // namespace pquant
