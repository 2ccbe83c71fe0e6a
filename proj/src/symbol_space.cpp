#include "pquant/symbol_space.hpp"

#include "pquant/errors.hpp"

namespace pquant {

namespace {

void check_field(const VectorField& x, const Symbol& u) {
  if (x.dim() != u.dim()) throw DimensionMismatch("vector field and symbol dimensions differ");
}

}  // namespace

Symbol koszul_delta(const Symbol& u) {
  const int n = u.dim();
  Symbol r(n, std::min(u.form_degree() + 1, n + 1));
  for (const auto& [key, c] : u.terms()) {
    for (int j = 0; j < n; ++j) {
      if (key.xi[j] == 0) continue;
      auto ins = wedge_insert(j, key.wedge);
      if (!ins) continue;
      r.add_term_unchecked({key.x, ins->word, key.xi.minus_unit(j)}, c * (ins->sign * key.xi[j]));
    }
  }
  return r;
}

Symbol koszul_delta_star(const Symbol& u) {
  const int n = u.dim();
  Symbol r(n, std::max(u.form_degree() - 1, -1));
  for (const auto& [key, c] : u.terms()) {
    for (int j : key.wedge.indices()) {
      auto con = interior_contract(j, key.wedge);
      r.add_term_unchecked({key.x, con->word, key.xi.plus_unit(j)}, c * con->sign);
    }
  }
  return r;
}

Symbol divergence(const Symbol& u) {
  const int n = u.dim();
  Symbol r(n, u.form_degree());
  for (const auto& [key, c] : u.terms()) {
    for (int j = 0; j < n; ++j) {
      if (key.x[j] == 0 || key.xi[j] == 0) continue;
      r.add_term_unchecked({key.x.minus_unit(j), key.wedge, key.xi.minus_unit(j)}, c * (key.x[j] * key.xi[j]));
    }
  }
  return r;
}

Symbol interior_eta(const Symbol& u) {
  const int n = u.dim();
  Symbol r(n, std::max(u.form_degree() - 1, -1));
  for (const auto& [key, c] : u.terms()) {
    for (int j : key.wedge.indices()) {
      if (key.x[j] == 0) continue;
      auto con = interior_contract(j, key.wedge);
      r.add_term_unchecked({key.x.minus_unit(j), con->word, key.xi}, c * (con->sign * key.x[j]));
    }
  }
  return r;
}

ABParts project_AB(const Symbol& u, int k) {
  const int p = u.form_degree();
  if (k + p == 0) throw DegenerateGradeError("A/B projectors undefined on S^0_0 (k + p = 0)");
  if (k < 0) throw ArgumentError("negative ξ-degree");
  for (int d : u.xi_degrees()) {
    if (d != k) throw ArgumentError("project_AB expects a ξ-homogeneous symbol of degree " + std::to_string(k));
  }
  const Rat scale(1, k + p);
  Symbol a = koszul_delta(koszul_delta_star(u)) * scale;
  Symbol b = koszul_delta_star(koszul_delta(u)) * scale;
  if (a.is_zero()) a = Symbol(u.dim(), p);
  if (b.is_zero()) b = Symbol(u.dim(), p);
  return {a, b};
}

Symbol lie_symbol(const VectorField& x, const Symbol& u) {
  check_field(x, u);
  const int n = u.dim();
  // jac[i][a] = ∂_a X^i
  std::vector<std::vector<Poly>> jac(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < n; ++a) jac[i].push_back(x.jacobian(i, a));
  }
  Symbol r(n, u.form_degree());
  for (const auto& [key, c] : u.terms()) {
    // X.u
    for (int j = 0; j < n; ++j) {
      if (key.x[j] == 0) continue;
      const MIdx lowered = key.x.minus_unit(j);
      for (const auto& [e, d] : x[j].terms()) {
        r.add_term_unchecked({e + lowered, key.wedge, key.xi}, c * d * key.x[j]);
      }
    }
    // -ρ(DX) on the exterior factor
    for (int a : key.wedge.indices()) {
      for (int i = 0; i < n; ++i) {
        const Poly& jp = jac[i][a];
        if (jp.is_zero()) continue;
        auto rep = replace_index(key.wedge, a, i);
        if (!rep) continue;
        for (const auto& [e, d] : jp.terms()) {
          r.add_term_unchecked({e + key.x, rep->word, key.xi}, -c * d * rep->sign);
        }
      }
    }
    // -ρ(DX) on the symmetric factor, as a derivation
    for (int a = 0; a < n; ++a) {
      if (key.xi[a] == 0) continue;
      const MIdx lowered = key.xi.minus_unit(a);
      for (int i = 0; i < n; ++i) {
        const Poly& jp = jac[i][a];
        if (jp.is_zero()) continue;
        const MIdx raised = lowered.plus_unit(i);
        for (const auto& [e, d] : jp.terms()) {
          r.add_term_unchecked({e + key.x, key.wedge, raised}, -c * d * key.xi[a]);
        }
      }
    }
  }
  return r;
}

}  // namespace pquant
