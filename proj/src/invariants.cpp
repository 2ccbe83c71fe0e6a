#include "pquant/invariants.hpp"

#include <sstream>

#include "pquant/casimir.hpp"
#include "pquant/errors.hpp"
#include "pquant/linear_algebra.hpp"
#include "pquant/multi_index.hpp"
#include "pquant/operators.hpp"
#include "pquant/quantization.hpp"
#include "pquant/symbol_space.hpp"
#include "pquant/symbolic_action.hpp"

namespace pquant {

namespace {

SymbolKey fibre_of(const SymbolKey& key) { return {MIdx(key.x.dim()), key.wedge, key.xi}; }

/// ∂^γ x^β = β!/(β-γ)! x^{β-γ}; zero unless γ <= β.
bool derive(const MIdx& beta, const MIdx& gamma, MIdx& out, Rat& factor) {
  if (!gamma.divides(beta)) return false;
  out = beta - gamma;
  factor = Rat(falling_factorial(beta, gamma));
  return true;
}

struct IndexedCandidate {
  struct Target {
    MIdx gamma;
    SymbolKey out;
    Rat c;
  };
  std::map<SymbolKey, std::vector<Target>> by_input;
};

IndexedCandidate index_of(const CandidateMap& m) {
  IndexedCandidate idx;
  for (const auto& [key, c] : m.coefficients) {
    const auto& [gamma, in, out] = key;
    idx.by_input[in].push_back({gamma, out, c});
  }
  return idx;
}

Symbol apply_indexed(const IndexedCandidate& idx, int n, int q, const Symbol& u) {
  Symbol out(n, q);
  for (const auto& [key, a] : u.terms()) {
    auto it = idx.by_input.find(fibre_of(key));
    if (it == idx.by_input.end()) continue;
    for (const auto& t : it->second) {
      MIdx x(n);
      Rat f;
      if (!derive(key.x, t.gamma, x, f)) continue;
      out.add_term_unchecked({x, t.out.wedge, t.out.xi}, a * f * t.c);
    }
  }
  return out;
}

void validate_degrees(int n, int k, int p, const char* what) {
  if (n < 2) throw ArgumentError(std::string(what) + " needs n >= 2");
  check_dimension(n);
  if (k < 0 || p < 0 || p > n) throw ArgumentError(std::string(what) + " needs k >= 0 and 0 <= p <= n");
}

/// The monomial x^0 ⊗ e for a fibre key.
Symbol fibre_monomial(const SymbolKey& key) { return Symbol::monomial(key.x, key.wedge, key.xi); }

using Rows = std::map<SymbolKey, SparseLinearSystem::Row>;

void accumulate_rows(Rows& rows, const Symbol& s, int unknown, const Rat& sign) {
  for (const auto& [key, c] : s.terms()) accumulate(rows[key], unknown, sign * c);
}

/// Returns true once the system has reached full rank.
bool add_rows(SparseLinearSystem& sys, Rows& rows) {
  for (auto& [key, row] : rows) {
    if (row.empty()) continue;
    sys.add_equation(std::move(row));
    if (sys.full_rank()) return true;
  }
  return false;
}

std::vector<Rat> flatten(const CandidateMap& m, const std::map<CandidateMap::Key, int>& positions) {
  std::vector<Rat> v(positions.size());
  for (const auto& [key, c] : m.coefficients) v[static_cast<std::size_t>(positions.at(key))] = c;
  return v;
}

}  // namespace

Symbol CandidateMap::apply(const Symbol& u) const {
  if (u.dim() != n) throw DimensionMismatch("candidate map and symbol live in different dimensions");
  return apply_indexed(index_of(*this), n, q, u);
}

std::string CandidateMap::to_string() const {
  std::ostringstream os;
  os << "S^" << k << "_" << p << " -> S^" << l << "_" << q << " order " << order << ":";
  for (const auto& [key, c] : coefficients) {
    const auto& [gamma, in, out] = key;
    os << "\n  " << c.get_str() << " d^(";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << static_cast<int>(gamma[i]);
    os << ") " << Symbol::monomial(in.x, in.wedge, in.xi).to_string() << " -> "
       << Symbol::monomial(out.x, out.wedge, out.xi).to_string();
  }
  return os.str();
}

CandidateMap fibre_candidate(int n, int k, int p, int l, int q, const std::function<Symbol(const Symbol&)>& f) {
  CandidateMap m{n, k, p, l, q, 0, {}};
  for (const auto& in : fibre_basis(n, p, k)) {
    const Symbol image = f(fibre_monomial(in));
    for (const auto& [out, c] : image.terms()) {
      if (!out.x.is_zero()) throw ArgumentError("fibre map produced x-dependent output");
      m.coefficients.emplace(CandidateMap::Key{MIdx(n), in, out}, c);
    }
  }
  return m;
}

bool same_span(const std::vector<CandidateMap>& a, const std::vector<CandidateMap>& b) {
  std::map<CandidateMap::Key, int> positions;
  for (const auto* list : {&a, &b}) {
    for (const auto& m : *list) {
      for (const auto& [key, c] : m.coefficients) positions.emplace(key, 0);
    }
  }
  int i = 0;
  for (auto& [key, pos] : positions) pos = i++;
  std::vector<std::vector<Rat>> va, vb, all;
  for (const auto& m : a) va.push_back(flatten(m, positions));
  for (const auto& m : b) vb.push_back(flatten(m, positions));
  all = va;
  all.insert(all.end(), vb.begin(), vb.end());
  if (positions.empty()) return true;
  const int ra = rank_of(va), rb = rank_of(vb);
  return ra == rb && rank_of(all) == ra;
}

SlInvariantResult sl_invariant_space(int n, int k, int p, int l, int q) {
  validate_degrees(n, k, p, "sl_invariant_space");
  validate_degrees(n, l, q, "sl_invariant_space");
  const int r = (k + p) - (l + q);
  SlInvariantResult result;
  if (r < 0) return result;

  const auto ins = fibre_basis(n, p, k);
  const auto outs = fibre_basis(n, q, l);
  const auto gammas = monomials_of_degree(n, r);
  auto weight = [n](const SymbolKey& key) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = (key.wedge.contains(i) ? 1 : 0) + key.xi[i];
    return w;
  };

  // Commuting with the diagonal fields x^i ∂_i forces weight(in) =
  // weight(out) + γ, so only those unknowns are created.
  std::vector<CandidateMap::Key> unknowns;
  std::map<SymbolKey, std::vector<std::pair<int, CandidateMap::Key>>> by_input;
  for (const auto& in : ins) {
    const auto win = weight(in);
    for (const auto& out : outs) {
      const auto wout = weight(out);
      for (const auto& gamma : gammas) {
        bool match = true;
        for (int i = 0; i < n && match; ++i) match = win[static_cast<std::size_t>(i)] == wout[static_cast<std::size_t>(i)] + gamma[i];
        if (!match) continue;
        by_input[in].emplace_back(static_cast<int>(unknowns.size()), CandidateMap::Key{gamma, in, out});
        unknowns.push_back({gamma, in, out});
      }
    }
  }
  result.unknowns = static_cast<int>(unknowns.size());
  if (unknowns.empty()) return result;

  // Constant coefficients already commute with the translations ∂_r.
  const auto all_gens = projective_generators(n);
  const std::vector<VectorField> gens(all_gens.begin() + n, all_gens.end());
  std::map<std::pair<std::size_t, SymbolKey>, Symbol> lie_cache;
  auto lie = [&](std::size_t g, const SymbolKey& key) -> const Symbol& {
    auto [it, inserted] = lie_cache.try_emplace({g, key});
    if (inserted) it->second = lie_symbol(gens[g], Symbol::monomial(key.x, key.wedge, key.xi));
    return it->second;
  };

  SparseLinearSystem sys(result.unknowns);
  // [T, L_X] has order <= r + 1 in x, so inputs of x-degree <= r + 1
  // determine it.
  bool full = false;
  for (const auto& beta : monomials_up_to(n, r + 1)) {
    for (const auto& in : ins) {
      const SymbolKey u{beta, in.wedge, in.xi};
      for (std::size_t g = 0; g < gens.size() && !full; ++g) {
        Rows rows;
        for (const auto& [key, a] : lie(g, u).terms()) {
          auto it = by_input.find(fibre_of(key));
          if (it == by_input.end()) continue;
          for (const auto& [idx, ukey] : it->second) {
            const auto& [gamma, uin, uout] = ukey;
            MIdx x(n);
            Rat f;
            if (!derive(key.x, gamma, x, f)) continue;
            accumulate(rows[SymbolKey{x, uout.wedge, uout.xi}], idx, a * f);
          }
        }
        auto it = by_input.find(in);
        if (it != by_input.end()) {
          for (const auto& [idx, ukey] : it->second) {
            const auto& [gamma, uin, uout] = ukey;
            MIdx x(n);
            Rat f;
            if (!derive(beta, gamma, x, f)) continue;
            accumulate_rows(rows, lie(g, SymbolKey{x, uout.wedge, uout.xi}), idx, -f);
          }
        }
        full = add_rows(sys, rows);
      }
      if (full) break;
    }
    if (full) break;
  }
  if (full) return result;

  for (const auto& v : sys.nullspace()) {
    CandidateMap m{n, k, p, l, q, r, {}};
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) != 0) m.coefficients.emplace(unknowns[i], v[i]);
    }
    result.basis.push_back(std::move(m));
  }
  result.dimension = static_cast<int>(result.basis.size());
  return result;
}

std::vector<CandidateMap> koszul_candidates(int n, int k, int p, int l, int q) {
  std::vector<std::function<Symbol(const Symbol&)>> maps;
  if (l == k + 1 && q == p - 1) {
    maps.push_back(koszul_delta_star);
  } else if (l == k && q == p) {
    if (k + p == 0) {
      maps.push_back([](const Symbol& s) { return s; });
    } else {
      maps.push_back([](const Symbol& s) { return koszul_delta(koszul_delta_star(s)); });
      maps.push_back([](const Symbol& s) { return koszul_delta_star(koszul_delta(s)); });
    }
  } else if (l == k - 1 && q == p + 1) {
    maps.push_back(koszul_delta);
  }
  std::vector<CandidateMap> out;
  for (const auto& f : maps) {
    auto m = fibre_candidate(n, k, p, l, q, f);
    if (!m.coefficients.empty()) out.push_back(std::move(m));
  }
  return out;
}

namespace {

Symbol via_sigma(DiffOp (*op)(const DiffOp&), const Symbol& s) { return sigma_affine(op(sigma_affine_inv(s))); }

/// G(u) = symbol_map(𝓛_X quantize(u)), memoized on monomials.
class ConjugatedAction {
 public:
  explicit ConjugatedAction(VectorField x) : x_(std::move(x)) {}

  const Symbol& on_monomial(const SymbolKey& key) {
    auto [it, inserted] = cache_.try_emplace(key);
    if (inserted) it->second = symbol_map(lie_symbolic(x_, quantize(Symbol::monomial(key.x, key.wedge, key.xi))));
    return it->second;
  }

  Symbol operator()(const Symbol& s) {
    Symbol out(s.dim(), s.form_degree());
    for (const auto& [key, c] : s.terms()) out += on_monomial(key) * c;
    return out;
  }

 private:
  VectorField x_;
  std::map<SymbolKey, Symbol> cache_;
};

}  // namespace

std::vector<NamedGenerator> named_generators(int n, int k, int p, int q) {
  std::vector<NamedGenerator> out;
  auto dstar = [](const Symbol& s) { return via_sigma(d_star, s); };
  auto conj = [](const Symbol& s) { return via_sigma(conjugation, s); };
  const bool k_defined = (k == 1 && p >= 1) || (k == 2 && p == n - 1);
  if (q == p - 1 && p >= 1) {
    out.push_back({"d*", dstar});
    if (p == n) out.push_back({"d*∘C", [=](const Symbol& s) { return dstar(conj(s)); }});
  } else if (q == p) {
    out.push_back({"id", [](const Symbol& s) { return s; }});
    if (p == 0) out.push_back({"I0", [](const Symbol& s) { return via_sigma(i_zero, s); }});
    if (p == n) out.push_back({"C", conj});
    if (p >= 1 && p <= n - 1 && k_defined) out.push_back({"d*∘K", [=](const Symbol& s) { return dstar(k_map(s, k)); }});
  } else if (q == p + 1 && p <= n - 1) {
    if (k_defined) out.push_back({"K", [=](const Symbol& s) { return k_map(s, k); }});
    // On D^1_0 the restriction of K' is Q∘δ∘σ_1, the formula of K at p = 0.
    if (p == 0 && (k == 1 || k == 2)) out.push_back({"K'", k_prime});
  }
  return out;
}

VectorField probe_field(int n) {
  const Poly x1 = Poly::variable(n, 0);
  return VectorField::along(n, 1, x1 * x1);
}

VectInvariantResult vect_invariant_space(int n, int k, int p, int q, int max_xdeg) {
  validate_degrees(n, k, p, "vect_invariant_space");
  VectInvariantResult res;
  res.n = n;
  res.k = k;
  res.p = p;
  res.q = q;
  if (q < 0 || q > n || q < p - 1 || q > p + 1) {
    res.status = "no sl-invariant maps between these form degrees";
    res.named_span_matches = true;
    return res;
  }
  for (int r = 0; r <= k; ++r) {
    const int l = r + p - q;
    std::vector<CandidateMap> basis;
    if (l >= 0) basis = sl_invariant_space(n, r, p, l, q).basis;
    for (std::size_t j = 0; j < basis.size(); ++j) res.layout.emplace_back(r, static_cast<int>(j));
    res.sl_bases.push_back(std::move(basis));
  }
  const int unknowns = static_cast<int>(res.layout.size());
  std::vector<std::vector<IndexedCandidate>> indexed;
  for (const auto& b : res.sl_bases) {
    std::vector<IndexedCandidate> row;
    for (const auto& m : b) row.push_back(index_of(m));
    indexed.push_back(std::move(row));
  }
  auto apply_param = [&](int u, const Symbol& s) {
    const auto [r, j] = res.layout[static_cast<std::size_t>(u)];
    return apply_indexed(indexed[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)], n, q, s);
  };

  ConjugatedAction g(probe_field(n));
  SparseLinearSystem sys(unknowns);
  bool full = unknowns == 0;
  for (int r = 0; r <= k && !full; ++r) {
    for (const auto& u : symbol_basis(n, p, r, max_xdeg)) {
      Rows rows;
      const Symbol gu = g(u);
      for (int i = 0; i < unknowns; ++i) {
        const int ri = res.layout[static_cast<std::size_t>(i)].first;
        const Symbol comp = gu.component(ri);
        if (!comp.is_zero()) accumulate_rows(rows, apply_param(i, comp), i, 1);
        if (ri == r) accumulate_rows(rows, g(apply_param(i, u)), i, -1);
      }
      if ((full = add_rows(sys, rows))) break;
    }
  }
  if (!full) res.solutions = sys.nullspace();
  res.dimension = static_cast<int>(res.solutions.size());

  // Coordinates of the named generators in the layout.
  std::vector<std::vector<Rat>> named_vectors;
  bool all_fit = true;
  for (const auto& gen : named_generators(n, k, p, q)) {
    std::vector<Rat> coords(static_cast<std::size_t>(unknowns));
    bool fits = true;
    for (int r = 0; r <= k && fits; ++r) {
      std::vector<int> cols;
      for (int i = 0; i < unknowns; ++i) {
        if (res.layout[static_cast<std::size_t>(i)].first == r) cols.push_back(i);
      }
      std::vector<std::pair<std::vector<Rat>, Rat>> eqs;
      for (const auto& u : symbol_basis(n, p, r, 2)) {
        const Symbol target = symbol_map(gen.map(quantize(u)));
        std::map<SymbolKey, std::vector<Rat>> by_key;
        for (const auto& [key, c] : target.terms()) {
          auto& e = by_key[key];
          e.resize(cols.size() + 1);
          e.back() = c;
        }
        for (std::size_t j = 0; j < cols.size(); ++j) {
          const Symbol image = apply_param(cols[j], u);
          for (const auto& [key, c] : image.terms()) {
            auto& e = by_key[key];
            e.resize(cols.size() + 1);
            e[j] = c;
          }
        }
        for (auto& [key, e] : by_key) eqs.emplace_back(std::vector<Rat>(e.begin(), e.end() - 1), e.back());
      }
      if (eqs.empty()) continue;
      RatMatrix a(static_cast<int>(eqs.size()), static_cast<int>(cols.size()));
      std::vector<Rat> b;
      for (std::size_t e = 0; e < eqs.size(); ++e) {
        for (std::size_t j = 0; j < cols.size(); ++j) a(static_cast<int>(e), static_cast<int>(j)) = eqs[e].first[j];
        b.push_back(eqs[e].second);
      }
      auto sol = a.solve(b);
      if (!sol) {
        fits = false;
        break;
      }
      for (std::size_t j = 0; j < cols.size(); ++j) coords[static_cast<std::size_t>(cols[j])] = (*sol)[j];
    }
    if (fits) {
      named_vectors.push_back(coords);
      res.named.emplace_back(gen.name, coords);
    } else {
      all_fit = false;
      res.named.emplace_back(gen.name, std::vector<Rat>{});
    }
  }

  // Greedy basis of named generators; each must lie in the solution space.
  std::vector<std::vector<Rat>> chosen;
  for (const auto& [name, coords] : res.named) {
    if (coords.empty()) continue;
    auto trial = chosen;
    trial.push_back(coords);
    if (rank_of(trial) > static_cast<int>(chosen.size())) {
      chosen = std::move(trial);
      res.generators.push_back(name);
    }
  }
  bool inside = true;
  for (const auto& v : named_vectors) {
    auto trial = res.solutions;
    trial.push_back(v);
    inside = inside && rank_of(trial) == res.dimension;
  }
  res.named_span_matches = all_fit && inside && static_cast<int>(chosen.size()) == res.dimension;
  res.status = res.named_span_matches ? "solution space spanned by the named invariants" : "solution space differs from the span of the named invariants";
  return res;
}

bool commutes_with(const OperatorMap& t, const VectorField& x, int n, int k, int p, int max_xdeg) {
  for (int r = 0; r <= k; ++r) {
    for (const auto& u : symbol_basis(n, p, r, max_xdeg)) {
      const Symbol d = quantize(u);
      if (!(t(lie_symbolic(x, d)) == lie_symbolic(x, t(d)))) return false;
    }
  }
  return true;
}

int expected_sl_dimension(int n, int k, int p, int l, int q) {
  if (l == k + 1 && q == p - 1) return p >= 1 ? 1 : 0;
  if (l == k && q == p) {
    if (k + p == 0) return 1;
    return (p >= 1 ? 1 : 0) + (k >= 1 && p <= n - 1 ? 1 : 0);
  }
  if (l == k - 1 && q == p + 1) return (k >= 1 && p <= n - 1) ? 1 : 0;
  return 0;
}

int expected_vect_dimension(int n, int k, int p, int q) {
  if (q < 0 || q > n) return 0;
  if (q == p - 1) return (p == n && k != 0) ? 2 : 1;
  if (q == p) {
    if (p == 0 || p == n) return k == 0 ? 1 : 2;
    return (k == 1 || (k == 2 && p == n - 1)) ? 2 : 1;
  }
  if (q == p + 1) return (k == 1 || (k == 2 && (p == 0 || p == n - 1))) ? 1 : 0;
  return 0;
}

}  // namespace pquant
