#include "pquant/casimir.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "pquant/errors.hpp"
#include "pquant/multi_index.hpp"
#include "pquant/symbol_space.hpp"
#include "pquant/symbolic_action.hpp"

namespace pquant {

std::vector<VectorField> projective_generators(int n) {
  if (n < 2) throw ArgumentError("the projective algebra needs n >= 2");
  check_dimension(n);
  std::vector<VectorField> gens;
  for (int r = 0; r < n; ++r) gens.push_back(VectorField::coordinate(n, r));
  for (int s = 0; s < n; ++s) {
    for (int r = 0; r < n; ++r) gens.push_back(VectorField::along(n, r, Poly::variable(n, s)));
  }
  const VectorField euler = VectorField::euler(n);
  for (int r = 0; r < n; ++r) gens.push_back(euler.times(Poly::variable(n, r)));
  return gens;
}

std::vector<Rat> projective_coordinates(const VectorField& x) {
  const int n = x.dim();
  std::vector<Rat> c(static_cast<std::size_t>(n + n * n + n));
  for (int r = 0; r < n; ++r) {
    c[static_cast<std::size_t>(r)] = x[r].coefficient(MIdx(n));
    for (int s = 0; s < n; ++s) c[static_cast<std::size_t>(n + s * n + r)] = x[r].coefficient(MIdx::unit(n, s));
    c[static_cast<std::size_t>(n + n * n + r)] = x[r].coefficient(MIdx::unit(n, r) + MIdx::unit(n, r));
  }
  const auto gens = projective_generators(n);
  VectorField rebuilt(n);
  for (std::size_t i = 0; i < gens.size(); ++i) rebuilt = rebuilt + gens[i] * c[i];
  if (!(rebuilt == x)) throw ArgumentError("vector field is not projective: " + x.to_string());
  return c;
}

Rat projective_killing(const VectorField& x, const VectorField& y) {
  const auto gens = projective_generators(x.dim());
  const int m = static_cast<int>(gens.size());
  RatMatrix ad_x(m, m), ad_y(m, m);
  for (int j = 0; j < m; ++j) {
    const auto cx = projective_coordinates(bracket(x, gens[static_cast<std::size_t>(j)]));
    const auto cy = projective_coordinates(bracket(y, gens[static_cast<std::size_t>(j)]));
    for (int i = 0; i < m; ++i) {
      ad_x(i, j) = cx[static_cast<std::size_t>(i)];
      ad_y(i, j) = cy[static_cast<std::size_t>(i)];
    }
  }
  return (ad_x * ad_y).trace();
}

std::vector<RatMatrix> traceless_basis(int n) {
  std::vector<RatMatrix> basis;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) basis.push_back(RatMatrix::unit(n, i, j));
    }
  }
  for (int i = 0; i + 1 < n; ++i) basis.push_back(RatMatrix::unit(n, i, i) - RatMatrix::unit(n, i + 1, i + 1));
  return basis;
}

Rat killing_sl(const RatMatrix& a, const RatMatrix& b) { return Rat(2 * a.rows()) * (a * b).trace(); }

std::vector<RatMatrix> killing_dual(const std::vector<RatMatrix>& basis) {
  const int m = static_cast<int>(basis.size());
  RatMatrix gram(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) gram(i, j) = killing_sl(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
  }
  RatMatrix inv;
  try {
    inv = gram.inverse();
  } catch (const ArgumentError&) {
    throw InconsistentBasisError("Gram matrix of the Killing form is singular");
  }
  // A*_j = Σ_i (G^{-1})_{ij} A_i, so that K(A_k, A*_j) = (G G^{-1})_{kj}.
  std::vector<RatMatrix> dual;
  for (int j = 0; j < m; ++j) {
    RatMatrix d(basis.front().rows(), basis.front().cols());
    for (int i = 0; i < m; ++i) d = d + basis[static_cast<std::size_t>(i)] * inv(i, j);
    dual.push_back(d);
  }
  return dual;
}

VectorField linear_field(const RatMatrix& a) {
  const int n = a.rows();
  std::vector<Poly> comps(static_cast<std::size_t>(n), Poly(n));
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      if (sgn(a(k, l)) != 0) comps[static_cast<std::size_t>(k)] = comps[static_cast<std::size_t>(k)] - Poly::variable(n, l) * a(k, l);
    }
  }
  return VectorField(std::move(comps));
}

std::vector<VectorField> ProjectiveBasis::first() const {
  std::vector<VectorField> out = e;
  out.push_back(euler);
  out.insert(out.end(), h.begin(), h.end());
  out.insert(out.end(), eps.begin(), eps.end());
  return out;
}

std::vector<VectorField> ProjectiveBasis::second() const {
  std::vector<VectorField> out = eps;
  out.push_back(euler * frac(1, 2 * n));
  for (const auto& hd : h_dual) out.push_back(hd * frac(n, n + 1));
  out.insert(out.end(), e.begin(), e.end());
  return out;
}

const ProjectiveBasis& projective_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ProjectiveBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    if (n < 2) throw ArgumentError("the projective algebra needs n >= 2");
    check_dimension(n);
    auto b = std::make_unique<ProjectiveBasis>();
    b->n = n;
    b->euler = VectorField::euler(n);
    for (int i = 0; i < n; ++i) {
      b->e.push_back(VectorField::coordinate(n, i));
      b->eps.push_back(b->euler.times(Poly::variable(n, i)) * frac(-1, 2 * (n + 1)));
    }
    b->traceless = traceless_basis(n);
    b->traceless_dual = killing_dual(b->traceless);
    for (const auto& a : b->traceless) b->h.push_back(linear_field(a));
    for (const auto& a : b->traceless_dual) b->h_dual.push_back(linear_field(a));
    slot = std::move(b);
  }
  return *slot;
}

Symbol casimir(const Action& action, const Symbol& u) {
  const auto& b = projective_basis(u.dim());
  const int n = b.n;
  Symbol out = Symbol(n, u.form_degree());
  VectorField z(n);
  for (int i = 0; i < n; ++i) {
    out = out + action(b.eps[static_cast<std::size_t>(i)], action(b.e[static_cast<std::size_t>(i)], u)) * Rat(2);
    z = z + bracket(b.e[static_cast<std::size_t>(i)], b.eps[static_cast<std::size_t>(i)]);
  }
  out = out + action(z, u);
  out = out + action(b.euler, action(b.euler, u)) * frac(1, 2 * n);
  Symbol hh = Symbol(n, u.form_degree());
  for (std::size_t a = 0; a < b.h.size(); ++a) hh = hh + action(b.h[a], action(b.h_dual[a], u));
  return out + hh * frac(n, n + 1);
}

Symbol casimir_C(const Symbol& u) { return casimir(lie_symbol, u); }

Symbol casimir_quant(const Symbol& u) { return casimir(lie_symbolic, u); }

Symbol casimir_closed_form(const Symbol& u, int k) {
  if (!u.is_zero() && (!u.is_homogeneous() || u.max_xi_degree() != k)) {
    throw ArgumentError("casimir_closed_form expects a symbol of ξ-degree " + std::to_string(k));
  }
  const int n = u.dim();
  return koszul_delta(koszul_delta_star(u)) * frac(k + n + 1, n + 1) + koszul_delta_star(koszul_delta(u)) * frac(k + n, n + 1);
}

Symbol n_casimir(const Symbol& u) { return casimir_quant(u) - casimir_C(u); }

Symbol n_casimir_closed_form(const Symbol& u) {
  const int n = u.dim();
  const Symbol s = koszul_delta(divergence(koszul_delta_star(u))) + koszul_delta_star(divergence(koszul_delta(u)));
  return s * frac(1, n + 1);
}

Symbol n_casimir_t1(const Symbol& u) {
  const auto& b = projective_basis(u.dim());
  Symbol out = Symbol(u.dim(), u.form_degree());
  for (int i = 0; i < b.n; ++i) {
    out = out + t_term(b.eps[static_cast<std::size_t>(i)], 1, lie_symbol(b.e[static_cast<std::size_t>(i)], u));
  }
  return out * Rat(2);
}

SpectrumValue spectrum(int n, int k, int p) {
  if (n < 1 || k < 0 || p < 0 || p > n) throw ArgumentError("spectrum needs n >= 1, k >= 0, 0 <= p <= n");
  return {frac((k + n + 1) * (k + p), n + 1), frac((k + n) * (k + p), n + 1)};
}

}  // namespace pquant
