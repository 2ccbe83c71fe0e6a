#include "pquant/verify.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "pquant/casimir.hpp"
#include "pquant/errors.hpp"
#include "pquant/invariants.hpp"
#include "pquant/operators.hpp"
#include "pquant/quantization.hpp"
#include "pquant/symbol_space.hpp"
#include "pquant/symbolic_action.hpp"

namespace pquant {

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

bool VerificationReport::group_passed(const std::string& group) const {
  bool any = false;
  for (const auto& c : checks) {
    if (c.group != group) continue;
    if (!c.passed) return false;
    any = true;
  }
  return any;
}

Json VerificationReport::to_json() const {
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    Json j = {{"group", c.group}, {"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.counterexample.is_null()) j["counterexample"] = c.counterexample;
    checks_json.push_back(j);
  }
  return {{"suite", suite},
          {"params", {{"n", params.n}, {"max_order", params.max_k}, {"max_xdeg", params.max_xdeg}, {"seed", params.seed}}},
          {"passed", passed()},
          {"seconds", seconds},
          {"checks", checks_json}};
}

namespace {

using Failure = std::optional<Json>;

class Recorder {
 public:
  Recorder(VerificationReport& rep, std::string group) : rep_(rep), group_(std::move(group)) {}

  void check(std::string name, const std::function<Failure(std::string&)>& body) {
    CheckResult c{group_, std::move(name), false, {}, nullptr};
    Failure f = body(c.detail);
    c.passed = !f;
    if (f) c.counterexample = *f;
    rep_.checks.push_back(std::move(c));
  }

 private:
  VerificationReport& rep_;
  std::string group_;
};

Failure over_basis(int n, int max_k, int max_xdeg, const std::function<Failure(const Symbol&, int, int)>& f) {
  for (int p = 0; p <= n; ++p) {
    for (int k = 0; k <= max_k; ++k) {
      for (const auto& u : symbol_basis(n, p, k, max_xdeg)) {
        if (auto bad = f(u, k, p)) return bad;
      }
    }
  }
  return std::nullopt;
}

Json input(const Symbol& u) { return {{"input", to_json(u)}}; }

Json mismatch(const Symbol& u, const Symbol& expected, const Symbol& got) {
  return {{"input", to_json(u)}, {"expected", to_json(expected)}, {"got", to_json(got)}};
}

Json mismatch(const Symbol& u, const VectorField& x, const Symbol& expected, const Symbol& got) {
  Json j = mismatch(u, expected, got);
  j["field"] = to_json(x);
  return j;
}

Failure equal_or(const Symbol& u, const Symbol& expected, const Symbol& got) {
  if (expected == got) return std::nullopt;
  return mismatch(u, expected, got);
}

Symbol mono(int n, std::vector<int> x, std::vector<int> wedge_one_based, std::vector<int> xi, const Rat& c = 1) {
  for (auto& i : wedge_one_based) --i;
  return Symbol::monomial(MIdx::from_vector(x), Word::from_indices(n, wedge_one_based), MIdx::from_vector(xi), c);
}

std::vector<VectorField> cubic_fields(int n, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  const auto monos = monomials_up_to(n, 3);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::vector<VectorField> out;
  for (int t = 0; t < count; ++t) {
    std::vector<Poly> comps;
    for (int i = 0; i < n; ++i) {
      Poly p(n);
      // one guaranteed cubic term keeps the field outside the projective algebra
      p.add_term(monos.back(), i == 0 ? 1 : 0);
      for (int s = 0; s < 3; ++s) p.add_term(monos[pick(rng)], coef(rng));
      comps.push_back(p);
    }
    out.emplace_back(std::move(comps));
  }
  return out;
}

Symbol random_symbol(std::mt19937_64& rng, int n, int p, int max_k, int max_xdeg) {
  std::uniform_int_distribution<int> coef(-4, 4), kd(0, max_k);
  const auto words = words_of_length(n, p);
  const auto xs = monomials_up_to(n, max_xdeg);
  std::uniform_int_distribution<std::size_t> pw(0, words.size() - 1), px(0, xs.size() - 1);
  Symbol s(n, p);
  for (int t = 0; t < 5; ++t) {
    const auto xis = monomials_of_degree(n, kd(rng));
    std::uniform_int_distribution<std::size_t> pxi(0, xis.size() - 1);
    s.add_term({xs[px(rng)], words[pw(rng)], xis[pxi(rng)]}, coef(rng));
  }
  return s;
}

std::string fmt_pair(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// ---------------------------------------------------------------- koszul

void koszul_suite(VerificationReport& rep, const VerifyParams& P) {
  const int n = P.n;
  Recorder r(rep, "koszul");
  r.check("δ∘δ = 0", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [](const Symbol& u, int, int) -> Failure {
      if (koszul_delta(koszul_delta(u)).is_zero()) return std::nullopt;
      return input(u);
    });
  });
  r.check("δ*∘δ* = 0", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [](const Symbol& u, int, int) -> Failure {
      if (koszul_delta_star(koszul_delta_star(u)).is_zero()) return std::nullopt;
      return input(u);
    });
  });
  r.check("δδ* + δ*δ = (k+p) id", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [](const Symbol& u, int k, int p) {
      return equal_or(u, u * Rat(k + p), koszul_delta(koszul_delta_star(u)) + koszul_delta_star(koszul_delta(u)));
    });
  });
  r.check("δδ*/(k+p) and δ*δ/(k+p) are complementary idempotents", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [](const Symbol& u, int k, int p) -> Failure {
      if (k + p == 0) return std::nullopt;
      const auto parts = project_AB(u, k);
      const auto pa = project_AB(parts.a_part, k), pb = project_AB(parts.b_part, k);
      if (parts.a_part + parts.b_part == u && pa.a_part == parts.a_part && pa.b_part.is_zero() && pb.b_part == parts.b_part && pb.a_part.is_zero()) {
        return std::nullopt;
      }
      return input(u);
    });
  });
  r.check("[(η∂), δ] = 0", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [](const Symbol& u, int, int) {
      return equal_or(u, koszul_delta(divergence(u)), divergence(koszul_delta(u)));
    });
  });
  r.check("[(η∂), δ*] = i_η", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [](const Symbol& u, int, int) {
      return equal_or(u, interior_eta(u), divergence(koszul_delta_star(u)) - koszul_delta_star(divergence(u)));
    });
  });
}

// ---------------------------------------------------------------- lieop

void lieop_suite(VerificationReport& rep, const VerifyParams& P) {
  const int n = P.n;
  const auto gens = projective_generators(n);
  const std::vector<VectorField> affine(gens.begin(), gens.begin() + n + n * n);
  Recorder a(rep, "affine");
  a.check("σ_Aff is a bijection", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [](const Symbol& u, int, int) { return equal_or(u, u, sigma_affine(sigma_affine_inv(u))); });
  });
  a.check("σ_Aff intertwines the commutator action and L_X for constant and linear X", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [&](const Symbol& u, int, int) -> Failure {
      const DiffOp d = sigma_affine_inv(u);
      for (const auto& x : affine) {
        const Symbol got = sigma_affine(lie_diffop(x, d));
        const Symbol expected = lie_symbol(x, u);
        if (!(got == expected)) return mismatch(u, x, expected, got);
      }
      return std::nullopt;
    });
  });

  Recorder o(rep, "oracle");
  const Poly x1 = Poly::variable(n, 0), x2 = Poly::variable(n, 1);
  const std::vector<VectorField> fields{
      VectorField::coordinate(n, 0),
      VectorField::along(n, 1, x1),
      VectorField::euler(n).times(x1),
      VectorField::along(n, 1, x1 * x1),
      VectorField::along(n, 1, x1 * x1 * x1),
      VectorField::along(n, 0, x1 * x2),
  };
  o.check("𝓛_X = σ_Aff∘[X, ·]∘σ_Aff⁻¹ for ∂₁, x¹∂₂, x¹𝓔, (x¹)²∂₂, (x¹)³∂₂, x¹x²∂₁", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [&](const Symbol& u, int, int) -> Failure {
      const DiffOp d = sigma_affine_inv(u);
      for (const auto& x : fields) {
        const Symbol expected = sigma_affine(lie_diffop(x, d));
        const Symbol got = lie_symbolic(x, u);
        if (!(got == expected)) return mismatch(u, x, expected, got);
      }
      return std::nullopt;
    });
  });
}

// ---------------------------------------------------------------- casimir

void casimir_suite(VerificationReport& rep, const VerifyParams& P) {
  const int n = P.n;
  Recorder c(rep, "closed-form");
  c.check("C = (k+n+1)/(n+1) δδ* + (k+n)/(n+1) δ*δ", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [](const Symbol& u, int k, int) { return equal_or(u, casimir_closed_form(u, k), casimir_C(u)); });
  });
  c.check("C acts by α^k_p on A-parts and β^k_p on B-parts", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [&](const Symbol& u, int k, int p) -> Failure {
      if (k + p == 0) return equal_or(u, Symbol(n, p), casimir_C(u));
      const auto parts = project_AB(u, k);
      const auto sv = spectrum(n, k, p);
      if (auto f = equal_or(parts.a_part, parts.a_part * sv.alpha, casimir_C(parts.a_part))) return f;
      return equal_or(parts.b_part, parts.b_part * sv.beta, casimir_C(parts.b_part));
    });
  });
  auto spot = [&](const char* name, const Symbol& u, const Rat& printed, const Rat& formula) {
    c.check(name, [&](std::string& detail) -> Failure {
      detail = "eigenvalue " + to_string(formula);
      if (formula != printed) return Json{{"formula", to_string(formula)}, {"expected", to_string(printed)}};
      return equal_or(u, u * printed, casimir_C(u));
    });
  };
  spot("α⁰₁ = 1 at n = 2", mono(2, {0, 0}, {1}, {0, 0}), 1, spectrum(2, 0, 1).alpha);
  spot("α¹₁ = 8/3 at n = 2", project_AB(mono(2, {0, 0}, {1}, {1, 0}), 1).a_part, frac(8, 3), spectrum(2, 1, 1).alpha);
  spot("β¹₁ = 2 at n = 2", project_AB(mono(2, {0, 0}, {2}, {1, 0}), 1).b_part, 2, spectrum(2, 1, 1).beta);

  Recorder b(rep, "basis");
  b.check("Killing-dual basis satisfies the Gram identity", [&](std::string&) -> Failure {
    const auto& pb = projective_basis(n);
    for (std::size_t i = 0; i < pb.traceless.size(); ++i) {
      for (std::size_t j = 0; j < pb.traceless.size(); ++j) {
        if (killing_sl(pb.traceless[i], pb.traceless_dual[j]) != Rat(i == j ? 1 : 0)) return Json{{"i", i}, {"j", j}};
      }
    }
    return std::nullopt;
  });
  b.check("e_i, 𝓔, h_A, ε^i and ε^i, 𝓔/2n, n/(n+1) h_{A*}, e_i are dual under tr(ad X ad Y)", [&](std::string&) -> Failure {
    const auto& pb = projective_basis(n);
    const auto first = pb.first(), second = pb.second();
    for (std::size_t i = 0; i < first.size(); ++i) {
      for (std::size_t j = 0; j < second.size(); ++j) {
        const Rat k = projective_killing(first[i], second[j]);
        if (k != Rat(i == j ? 1 : 0)) return Json{{"first", to_json(first[i])}, {"second", to_json(second[j])}, {"value", to_string(k)}};
      }
    }
    return std::nullopt;
  });
  b.check("C and 𝓒 commute with the projective action", [&](std::string&) -> Failure {
    std::mt19937_64 rng(P.seed);
    for (const auto& x : projective_generators(n)) {
      for (int p = 0; p <= n; ++p) {
        for (int t = 0; t < 2; ++t) {
          const Symbol u = random_symbol(rng, n, p, P.max_k, P.max_xdeg);
          if (auto f = equal_or(u, lie_symbol(x, casimir_C(u)), casimir_C(lie_symbol(x, u)))) return f;
          if (auto f = equal_or(u, lie_symbolic(x, casimir_quant(u)), casimir_quant(lie_symbolic(x, u)))) return f;
        }
      }
    }
    return std::nullopt;
  });

  Recorder d(rep, "difference");
  d.check("𝓒 − C = (1/(n+1))(δ(η∂)δ* + δ*(η∂)δ)", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [](const Symbol& u, int, int) { return equal_or(u, n_casimir_closed_form(u), n_casimir(u)); });
  });
  d.check("𝓒 − C = 2Σ t₁(ε^i) L_{e_i}", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [](const Symbol& u, int, int) { return equal_or(u, n_casimir_t1(u), n_casimir(u)); });
  });
  d.check("𝓒 − C vanishes on S⁰_p", [&](std::string&) {
    return over_basis(n, 0, P.max_xdeg, [&](const Symbol& u, int, int p) { return equal_or(u, Symbol(n, p), n_casimir(u)); });
  });
  d.check("𝓒 − C maps x¹ ⊗ ξ₁² to (2/3) ξ₁ at n = 2", [&](std::string&) {
    const Symbol u = mono(2, {1, 0}, {}, {2, 0});
    return equal_or(u, mono(2, {0, 0}, {}, {1, 0}, frac(2, 3)), n_casimir(u));
  });
}

// ---------------------------------------------------------------- quantization

void quantization_suite(VerificationReport& rep, const VerifyParams& P) {
  const int n = P.n;
  const auto gens = projective_generators(n);
  Recorder e(rep, "equivariance");
  e.check("Q∘L_X = 𝓛_X∘Q for every projective generator", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [&](const Symbol& u, int, int) -> Failure {
      const Symbol q = quantize(u);
      for (const auto& x : gens) {
        const Symbol got = lie_symbolic(x, q);
        const Symbol expected = quantize(lie_symbol(x, u));
        if (!(got == expected)) return mismatch(u, x, expected, got);
      }
      return std::nullopt;
    });
  });
  e.check("𝓒∘Q = Q∘C", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [](const Symbol& u, int, int) { return equal_or(u, quantize(casimir_C(u)), casimir_quant(quantize(u))); });
  });
  e.check("the Casimir recursion reproduces Q on A- and B-parts", [&](std::string&) {
    return over_basis(n, P.max_k, P.max_xdeg, [](const Symbol& u, int k, int p) -> Failure {
      if (k + p == 0) return equal_or(u, quantize(u), casimir_solve(u, k));
      const auto parts = project_AB(u, k);
      if (auto f = equal_or(parts.a_part, quantize(parts.a_part), casimir_solve(parts.a_part, k))) return f;
      return equal_or(parts.b_part, quantize(parts.b_part), casimir_solve(parts.b_part, k));
    });
  });
  e.check("symbol_map inverts Q", [&](std::string&) -> Failure {
    if (auto f = over_basis(n, P.max_k, P.max_xdeg, [](const Symbol& u, int, int) { return equal_or(u, u, symbol_map(quantize(u))); })) return f;
    std::mt19937_64 rng(P.seed);
    for (int p = 0; p <= n; ++p) {
      for (int t = 0; t < 5; ++t) {
        const Symbol u = random_symbol(rng, n, p, P.max_k, P.max_xdeg);
        if (auto f = equal_or(u, u, quantize(symbol_map(u)))) return f;
      }
    }
    return std::nullopt;
  });
  e.check("Q(x¹v₁⊗ξ₁) = x¹v₁⊗ξ₁ + (2/5) v₁ at n = 2", [&](std::string&) {
    const Symbol u = mono(2, {1, 0}, {1}, {1, 0});
    return equal_or(u, u + mono(2, {0, 0}, {1}, {0, 0}, frac(2, 5)), quantize(u));
  });

  Recorder v(rep, "vect-low-order");
  std::vector<VectorField> fields{probe_field(n)};
  for (auto& x : cubic_fields(n, P.seed, 3)) fields.push_back(std::move(x));
  auto defect = [&](const Symbol& u) -> Failure {
    for (const auto& x : fields) {
      const Symbol got = lie_symbolic(x, quantize(u));
      const Symbol expected = quantize(lie_symbol(x, u));
      if (!(got == expected)) return mismatch(u, x, expected, got);
    }
    return std::nullopt;
  };
  v.check("Q commutes with every 𝓛_X on S⁰_p", [&](std::string&) { return over_basis(n, 0, P.max_xdeg + 1, [&](const Symbol& u, int, int) { return defect(u); }); });
  v.check("Q commutes with every 𝓛_X on S¹_0 and S¹_n", [&](std::string&) -> Failure {
    for (int p : {0, n}) {
      for (const auto& u : symbol_basis(n, p, 1, P.max_xdeg + 1)) {
        if (auto f = defect(u)) return f;
      }
    }
    return std::nullopt;
  });
  v.check("Q does not commute with 𝓛_X on S¹_p for 0 < p < n", [&](std::string& detail) -> Failure {
    for (int p = 1; p < n; ++p) {
      bool found = false;
      for (const auto& u : symbol_basis(n, p, 1, P.max_xdeg + 1)) {
        if (defect(u)) {
          detail += (detail.empty() ? "defect at " : ", ") + u.to_string();
          found = true;
          break;
        }
      }
      if (!found) return Json{{"p", p}};
    }
    return std::nullopt;
  });

  Recorder m(rep, "invariant-maps");
  const int xdeg = std::min(P.max_xdeg, 2);
  auto commute_all = [&](const OperatorMap& t, int k, int p) -> Failure {
    for (const auto& x : fields) {
      if (!commutes_with(t, x, n, k, p, xdeg)) return Json{{"k", k}, {"p", p}, {"field", to_json(x)}};
    }
    return std::nullopt;
  };
  m.check("K commutes with 𝓛_X at (1, p ≥ 1) and (2, n−1)", [&](std::string&) -> Failure {
    for (int p = 1; p <= n - 1; ++p) {
      if (auto f = commute_all([](const Symbol& s) { return k_map(s, 1); }, 1, p)) return f;
    }
    return commute_all([](const Symbol& s) { return k_map(s, 2); }, 2, n - 1);
  });
  m.check("K' commutes with 𝓛_X", [&](std::string&) { return commute_all(k_prime, 2, 0); });
  m.check("d*, I₀ and 𝒞 commute with 𝓛_X", [&](std::string&) -> Failure {
    auto through = [](DiffOp (*op)(const DiffOp&)) { return [op](const Symbol& s) { return sigma_affine(op(sigma_affine_inv(s))); }; };
    for (int p = 1; p <= n; ++p) {
      if (auto f = commute_all(through(d_star), std::min(P.max_k, 2), p)) return f;
    }
    if (auto f = commute_all(through(i_zero), std::min(P.max_k, 2), 0)) return f;
    return commute_all(through(conjugation), std::min(P.max_k, 2), n);
  });
  m.check("K at (2, n−2) does not commute with 𝓛_X", [&](std::string& detail) -> Failure {
    const int p = n - 2;
    if (commutes_with([](const Symbol& s) { return koszul_transport(s, 2); }, probe_field(n), n, 2, p, xdeg)) return Json{{"k", 2}, {"p", p}};
    detail = "fails at (k,p) = " + fmt_pair(2, p);
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- lemma

void lemma_suite(VerificationReport& rep, const VerifyParams& P) {
  const int n = P.n;
  const VectorField x = probe_field(n);
  Recorder r(rep, "lemma");
  auto basis = [&](int rr, int p) { return symbol_basis(n, p, rr, P.max_xdeg); };
  auto witness_in = [&](int rr, int p, const std::function<bool(const Symbol&)>& nonzero, std::string& detail) -> bool {
    for (const auto& u : basis(rr, p)) {
      if (nonzero(u)) {
        detail += (detail.empty() ? "" : "; ") + fmt_pair(rr, p) + ": " + u.to_string();
        return true;
      }
    }
    return false;
  };

  r.check("δ*∘γ_{i,p} = γ_{i,p−1}∘δ*", [&](std::string&) -> Failure {
    for (int p = 0; p <= n; ++p) {
      for (int rr = 1; rr <= P.max_k; ++rr) {
        for (const auto& u : basis(rr, p)) {
          for (int i = 1; i <= rr; ++i) {
            if (auto f = equal_or(u, gamma(i, x, koszul_delta_star(u)), koszul_delta_star(gamma(i, x, u)))) {
              (*f)["i"] = i;
              return f;
            }
          }
        }
      }
    }
    return std::nullopt;
  });
  r.check("δ*∘γ_{1,p} ≠ 0 for r ≥ 1 and 1 ≤ p ≤ n−1", [&](std::string& detail) -> Failure {
    for (int p = 1; p <= n - 1; ++p) {
      for (int rr = 1; rr <= P.max_k; ++rr) {
        if (!witness_in(rr, p, [&](const Symbol& u) { return !koszul_delta_star(gamma(1, x, u)).is_zero(); }, detail)) return Json{{"r", rr}, {"p", p}};
      }
    }
    return std::nullopt;
  });
  r.check("γ_{1,p} vanishes exactly when r = 0, p = n or (r,p) = (1,0)", [&](std::string&) -> Failure {
    for (int p = 0; p <= n; ++p) {
      for (int rr = 0; rr <= P.max_k; ++rr) {
        bool vanishes = true;
        for (const auto& u : basis(rr, p)) {
          if (rr >= 1 && !gamma(1, x, u).is_zero()) {
            vanishes = false;
            break;
          }
        }
        const bool predicted = rr == 0 || p == n || (rr == 1 && p == 0);
        if (vanishes != predicted) return Json{{"r", rr}, {"p", p}, {"vanishes", vanishes}};
      }
    }
    return std::nullopt;
  });
  r.check("δ∘γ_{1,p+1}∘δ ≠ 0 on S^r_p for r ≥ 3 and p ≤ n−2", [&](std::string& detail) -> Failure {
    for (int p = 0; p <= n - 2; ++p) {
      for (int rr = 3; rr <= P.max_k; ++rr) {
        if (!witness_in(rr, p, [&](const Symbol& u) { return !koszul_delta(gamma(1, x, koszul_delta(u))).is_zero(); }, detail)) return Json{{"r", rr}, {"p", p}};
      }
    }
    if (P.max_k < 3) detail = "vacuous below order 3";
    return std::nullopt;
  });
  r.check("δ*∘γ_{2,n} ≠ 0 for r ≥ 2", [&](std::string& detail) -> Failure {
    for (int rr = 2; rr <= P.max_k; ++rr) {
      if (!witness_in(rr, n, [&](const Symbol& u) { return !koszul_delta_star(gamma(2, x, u)).is_zero(); }, detail)) return Json{{"r", rr}, {"p", n}};
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- classification

void classification_suite(VerificationReport& rep, const VerifyParams& P) {
  const int n = P.n;
  Recorder s(rep, "sl");
  std::map<std::tuple<int, int, int, int>, SlInvariantResult> sl;
  for (int k = 0; k <= P.max_k; ++k) {
    for (int p = 0; p <= n; ++p) {
      for (int l = 0; l <= P.max_k; ++l) {
        for (int q = 0; q <= n; ++q) sl.emplace(std::tuple{k, p, l, q}, sl_invariant_space(n, k, p, l, q));
      }
    }
  }
  auto params_json = [](int k, int p, int l, int q) { return Json{{"k", k}, {"p", p}, {"l", l}, {"q", q}}; };
  s.check("dimensions vanish off (k+1,p−1), (k,p), (k−1,p+1) and match the A/B parts on them", [&](std::string&) -> Failure {
    for (const auto& [key, res] : sl) {
      const auto [k, p, l, q] = key;
      const int expected = expected_sl_dimension(n, k, p, l, q);
      if (res.dimension != expected) {
        Json j = params_json(k, p, l, q);
        j["dimension"] = res.dimension;
        j["expected"] = expected;
        return j;
      }
    }
    return std::nullopt;
  });
  s.check("bases span δ*, {δδ*, δ*δ} and δ respectively", [&](std::string& detail) -> Failure {
    detail = "δ raises the form degree, so it spans neither the (k+1,p-1) space (δ*) nor the (k,p) space (δδ*, δ*δ)";
    for (const auto& [key, res] : sl) {
      const auto [k, p, l, q] = key;
      if (res.dimension > 0 && !same_span(res.basis, koszul_candidates(n, k, p, l, q))) return params_json(k, p, l, q);
    }
    return std::nullopt;
  });
  s.check("the (k,p) → (k,p) space is spanned by id alone exactly where A or B vanishes", [&](std::string& detail) -> Failure {
    std::vector<std::string> drops;
    for (int k = 0; k <= P.max_k; ++k) {
      for (int p = 0; p <= n; ++p) {
        const auto& res = sl.at({k, p, k, p});
        const auto id = fibre_candidate(n, k, p, k, p, [](const Symbol& u) { return u; });
        const bool by_id = same_span(res.basis, {id});
        if (by_id != (res.dimension == 1)) return params_json(k, p, k, p);
        if (res.dimension == 1 && k + p > 0) drops.push_back(fmt_pair(k, p));
      }
    }
    std::ostringstream os;
    os << "dimension 1 instead of 2 at (k,p) =";
    for (const auto& d : drops) os << " " << d;
    detail = os.str();
    return std::nullopt;
  });

  Recorder v(rep, "vect");
  std::vector<VectInvariantResult> results;
  for (int k = 0; k <= P.max_k; ++k) {
    for (int p = 0; p <= n; ++p) {
      for (int q = std::max(0, p - 1); q <= std::min(n, p + 1); ++q) results.push_back(vect_invariant_space(n, k, p, q, P.max_xdeg + 1));
    }
  }
  auto case_json = [](const VectInvariantResult& r) {
    Json gens = Json::array();
    for (const auto& g : r.generators) gens.push_back(g);
    return Json{{"k", r.k}, {"p", r.p}, {"q", r.q}, {"dimension", r.dimension}, {"generators", gens}, {"status", r.status}};
  };
  v.check("dimensions match the classification of invariant operators", [&](std::string&) -> Failure {
    for (const auto& r : results) {
      const int expected = expected_vect_dimension(n, r.k, r.p, r.q);
      if (r.dimension != expected) {
        Json j = case_json(r);
        j["expected"] = expected;
        return j;
      }
    }
    return std::nullopt;
  });
  v.check("the named invariants span every solution space", [&](std::string&) -> Failure {
    for (const auto& r : results) {
      if (!r.named_span_matches) return case_json(r);
    }
    return std::nullopt;
  });
  const auto fields = cubic_fields(n, P.seed + 1, 3);
  v.check("the named invariants commute with three random cubic fields", [&](std::string& detail) -> Failure {
    // Restrictions of an invariant map to lower orders stay invariant, so
    // each map is tested at the highest order where it is defined.
    std::map<std::tuple<std::string, int, int>, int> top;
    for (const auto& r : results) {
      for (const auto& g : r.generators) {
        const bool order_dependent = g == "K" || g == "d*∘K" || g == "K'";
        auto& k = top[{g, r.p, order_dependent ? r.k : -1}];
        k = std::max(k, r.k);
      }
    }
    int tested = 0;
    for (const auto& [key, k] : top) {
      const auto& [name, p, tag] = key;
      for (const auto& r : results) {
        if (r.k != k || r.p != p) continue;
        for (const auto& g : named_generators(n, r.k, r.p, r.q)) {
          if (g.name != name) continue;
          for (const auto& x : fields) {
            if (!commutes_with(g.map, x, n, k, p, 1)) return Json{{"generator", name}, {"k", k}, {"p", p}, {"field", to_json(x)}};
          }
          ++tested;
        }
      }
    }
    detail = std::to_string(tested) + " generator instances";
    return std::nullopt;
  });
  v.check("K at (2, n−2) is not invariant", [&](std::string& detail) -> Failure {
    const int p = n - 2;
    bool invariant = true;
    for (const auto& x : fields) invariant = invariant && commutes_with([](const Symbol& u) { return koszul_transport(u, 2); }, x, n, 2, p, 1);
    if (invariant) return Json{{"k", 2}, {"p", p}};
    detail = "non-invariant at (k,p) = " + fmt_pair(2, p);
    return std::nullopt;
  });
}

}  // namespace

std::vector<std::string> suite_names() { return {"koszul", "casimir", "lieop", "quantization", "lemma", "classification"}; }

VerificationReport run_suite(const std::string& name, const VerifyParams& params) {
  if (params.n < 2 || params.n > kMaxDim) throw ArgumentError("verify needs 2 <= n <= " + std::to_string(kMaxDim));
  if (params.max_k < 0 || params.max_xdeg < 0) throw ArgumentError("verify needs non-negative bounds");
  VerificationReport rep;
  rep.suite = name;
  rep.params = params;
  const auto start = std::chrono::steady_clock::now();
  if (name == "koszul") {
    koszul_suite(rep, params);
  } else if (name == "casimir") {
    casimir_suite(rep, params);
  } else if (name == "lieop") {
    lieop_suite(rep, params);
  } else if (name == "quantization") {
    quantization_suite(rep, params);
  } else if (name == "lemma") {
    lemma_suite(rep, params);
  } else if (name == "classification") {
    classification_suite(rep, params);
  } else {
    throw ArgumentError("unknown suite \"" + name + "\"");
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace pquant
