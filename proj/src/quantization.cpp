#include "pquant/quantization.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "pquant/casimir.hpp"
#include "pquant/errors.hpp"
#include "pquant/symbol_space.hpp"
#include "pquant/symbolic_action.hpp"

namespace pquant {

const QCoefficients& q_coefficients(int n, int k, int p) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<QCoefficients>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, k, p}];
  if (!slot) {
    auto q = std::make_unique<QCoefficients>();
    q->n = n;
    q->k = k;
    q->p = p;
    const SpectrumValue top = spectrum(n, k, p);
    Rat a = 1, b = 1;
    for (int j = 1; j <= k; ++j) {
      const SpectrumValue low = spectrum(n, k - j, p);
      a *= frac(1, n + 1) / (top.alpha - low.alpha);
      b *= frac(1, n + 1) / (top.beta - low.beta);
      q->a.push_back(a);
      q->b.push_back(b);
    }
    slot = std::move(q);
  }
  return *slot;
}

namespace {

Symbol quantize_component(const Symbol& u, int k) {
  Symbol out = u;
  if (k == 0) return out;
  const int n = u.dim();
  const int p = u.form_degree();
  const auto& q = q_coefficients(n, k, p);
  Symbol a = u, b = u;
  for (int l = 1; l <= k; ++l) {
    if (!a.is_zero()) {
      a = koszul_delta(divergence(koszul_delta_star(a)));
      out += a * q.a[static_cast<std::size_t>(l - 1)];
    }
    if (!b.is_zero()) {
      b = koszul_delta_star(divergence(koszul_delta(b)));
      out += b * q.b[static_cast<std::size_t>(l - 1)];
    }
  }
  return out;
}

}  // namespace

Symbol quantize(const Symbol& u) {
  Symbol out(u.dim(), u.form_degree());
  for (int k : u.xi_degrees()) out += quantize_component(u.component(k), k);
  return out;
}

Symbol symbol_map(const Symbol& v) {
  Symbol out(v.dim(), v.form_degree());
  Symbol rest = v;
  while (!rest.is_zero()) {
    const int d = rest.max_xi_degree();
    const Symbol top = rest.component(d);
    out += top;
    rest -= quantize_component(top, d);
  }
  return out;
}

Symbol casimir_solve(const Symbol& p, int k) {
  if (p.is_zero()) return p;
  if (!p.is_homogeneous() || p.max_xi_degree() != k) throw ArgumentError("casimir_solve expects a symbol of ξ-degree " + std::to_string(k));
  const int n = p.dim();
  const int fp = p.form_degree();
  if (k + fp == 0) return p;
  const auto parts = project_AB(p, k);
  Rat eigen;
  if (parts.b_part.is_zero()) {
    eigen = spectrum(n, k, fp).alpha;
  } else if (parts.a_part.is_zero()) {
    eigen = spectrum(n, k, fp).beta;
  } else {
    throw ArgumentError("casimir_solve needs a pure A-part or pure B-part input");
  }
  Symbol q = p;
  for (int d = k - 1; d >= 0; --d) {
    const Symbol r = (casimir_quant(q) - q * eigen).component(d);
    if (r.is_zero()) continue;
    // (𝓒 - λ) lowers degree apart from (C - λ), which is invertible on
    // degree d < k since α, β increase strictly with the degree.
    if (d + fp == 0) {
      q += r * (1 / eigen);
      continue;
    }
    const auto rp = project_AB(r, d);
    const SpectrumValue sv = spectrum(n, d, fp);
    q -= rp.a_part * (1 / (sv.alpha - eigen)) + rp.b_part * (1 / (sv.beta - eigen));
  }
  return q;
}

Symbol gamma(int i, const VectorField& x, const Symbol& u) {
  if (i < 1) throw ArgumentError("gamma needs i >= 1");
  if (!u.is_homogeneous()) throw ArgumentError("gamma expects a ξ-homogeneous symbol");
  if (u.is_zero()) return u;
  const int k = u.max_xi_degree();
  const Symbol full = symbol_map(lie_symbolic(x, quantize(u))) - lie_symbol(x, u);
  return full.component(k - i);
}

Symbol koszul_transport(const Symbol& d, int k) { return quantize(koszul_delta(symbol_map(d).component(k))); }

Symbol k_map(const Symbol& d, int k) {
  const int n = d.dim();
  const int p = d.form_degree();
  if (!((k == 1 && p >= 1) || (k == 2 && p == n - 1))) {
    throw ArgumentError("K is defined for k = 1, p >= 1 or (k, p) = (2, n-1); got (" + std::to_string(k) + ", " + std::to_string(p) + ")");
  }
  if (d.max_xi_degree() > k) throw ArgumentError("operator order exceeds k");
  return koszul_transport(d, k);
}

Symbol k_prime(const Symbol& d) {
  if (d.form_degree() != 0) throw ArgumentError("K' acts on operators on functions");
  if (d.max_xi_degree() > 2) throw ArgumentError("K' is defined up to order 2");
  const Symbol s = symbol_map(d);
  return quantize(koszul_delta(s.component(2)) * frac(1, 2) + koszul_delta(s.component(1)));
}

DiffOp quantize_operator(const Symbol& u) { return sigma_affine_inv(quantize(u)); }

Symbol operator_symbol(const DiffOp& d) { return symbol_map(sigma_affine(d)); }

}  // namespace pquant
