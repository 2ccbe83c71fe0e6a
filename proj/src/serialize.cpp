#include "pquant/serialize.hpp"

#include <set>

#include "pquant/errors.hpp"
#include "pquant/multi_index.hpp"
#include "pquant/rational.hpp"

namespace pquant {

namespace {

Json exponents(const MIdx& m) {
  Json a = Json::array();
  for (int i = 0; i < m.dim(); ++i) a.push_back(static_cast<int>(m[i]));
  return a;
}

Json wedge_indices(const Word& w) {
  Json a = Json::array();
  for (int i : w.indices()) a.push_back(i + 1);
  return a;
}

void expect_keys(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ParseError(std::string(what) + ": unknown key \"" + key + "\"");
  }
  for (const char* k : keys) {
    if (!j.contains(k)) throw ParseError(std::string(what) + ": missing key \"" + k + "\"");
  }
}

int read_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

int read_dim(const Json& j) {
  const int n = read_int(j.at("n"), "n");
  if (n < 1 || n > kMaxDim) throw ParseError("n must lie in 1.." + std::to_string(kMaxDim));
  return n;
}

int read_degree(const Json& j, int n) {
  const int p = read_int(j.at("p"), "p");
  if (p < 0 || p > n) throw ParseError("p must lie in 0..n");
  return p;
}

MIdx read_exponents(const Json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw ParseError(std::string(what) + ": expected " + std::to_string(n) + " exponents");
  MIdx m(n);
  for (int i = 0; i < n; ++i) {
    const int e = read_int(j[static_cast<std::size_t>(i)], what);
    if (e < 0 || e > 255) throw ParseError(std::string(what) + ": exponent out of range");
    m.set(i, e);
  }
  return m;
}

Word read_wedge(const Json& j, int n, int p) {
  if (!j.is_array() || static_cast<int>(j.size()) != p) throw ParseError("wedge: expected " + std::to_string(p) + " indices");
  std::vector<int> idx;
  for (const auto& e : j) {
    const int i = read_int(e, "wedge");
    if (i < 1 || i > n) throw ParseError("wedge: index out of range 1..n");
    if (!idx.empty() && i - 1 <= idx.back()) throw ParseError("wedge: indices must be strictly increasing");
    idx.push_back(i - 1);
  }
  return Word::from_indices(n, idx);
}

Rat read_rat(const Json& j) {
  if (!j.is_string()) throw ParseError("coef: expected a \"num/den\" string");
  return parse_rat(j.get<std::string>());
}

const Json& read_terms(const Json& j) {
  const Json& t = j.at("terms");
  if (!t.is_array()) throw ParseError("terms: expected an array");
  return t;
}

}  // namespace

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back({{"coef", to_string(c)}, {"x", exponents(e)}});
  return a;
}

Json to_json(const Symbol& s) {
  Json terms = Json::array();
  for (const auto& [key, c] : s.terms()) {
    terms.push_back({{"coef", to_string(c)}, {"wedge", wedge_indices(key.wedge)}, {"x", exponents(key.x)}, {"xi", exponents(key.xi)}});
  }
  return {{"n", s.dim()}, {"p", s.form_degree()}, {"terms", terms}};
}

Json to_json(const DiffOp& d) {
  Json terms = Json::array();
  for (const auto& [key, c] : d.terms()) terms.push_back({{"alpha", exponents(key.alpha)}, {"coef", to_json(c)}, {"wedge", wedge_indices(key.wedge)}});
  return {{"n", d.dim()}, {"p", d.form_degree()}, {"terms", terms}};
}

Json to_json(const PForm& f) {
  Json terms = Json::array();
  for (const auto& [w, c] : f.terms()) terms.push_back({{"coef", to_json(c)}, {"wedge", wedge_indices(w)}});
  return {{"n", f.dim()}, {"p", f.degree()}, {"terms", terms}};
}

Json to_json(const VectorField& x) {
  Json comps = Json::array();
  for (const auto& c : x.components()) comps.push_back(to_json(c));
  return {{"components", comps}, {"n", x.dim()}};
}

Poly poly_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("polynomial: expected an array of terms");
  Poly p(n);
  for (const auto& t : j) {
    expect_keys(t, {"coef", "x"}, "polynomial term");
    p.add_term(read_exponents(t.at("x"), n, "x"), read_rat(t.at("coef")));
  }
  return p;
}

Symbol symbol_from_json(const Json& j) {
  expect_keys(j, {"n", "p", "terms"}, "symbol");
  const int n = read_dim(j);
  const int p = read_degree(j, n);
  Symbol s(n, p);
  for (const auto& t : read_terms(j)) {
    expect_keys(t, {"coef", "wedge", "x", "xi"}, "symbol term");
    s.add_term({read_exponents(t.at("x"), n, "x"), read_wedge(t.at("wedge"), n, p), read_exponents(t.at("xi"), n, "xi")}, read_rat(t.at("coef")));
  }
  return s;
}

DiffOp diffop_from_json(const Json& j) {
  expect_keys(j, {"n", "p", "terms"}, "operator");
  const int n = read_dim(j);
  const int p = read_degree(j, n);
  DiffOp d(n, p);
  for (const auto& t : read_terms(j)) {
    expect_keys(t, {"alpha", "coef", "wedge"}, "operator term");
    d.add_term(read_exponents(t.at("alpha"), n, "alpha"), read_wedge(t.at("wedge"), n, p), poly_from_json(t.at("coef"), n));
  }
  return d;
}

PForm pform_from_json(const Json& j) {
  expect_keys(j, {"n", "p", "terms"}, "form");
  const int n = read_dim(j);
  const int p = read_degree(j, n);
  PForm f(n, p);
  for (const auto& t : read_terms(j)) {
    expect_keys(t, {"coef", "wedge"}, "form term");
    f.add_term(read_wedge(t.at("wedge"), n, p), poly_from_json(t.at("coef"), n));
  }
  return f;
}

VectorField vector_field_from_json(const Json& j) {
  expect_keys(j, {"components", "n"}, "vector field");
  const int n = read_dim(j);
  const Json& c = j.at("components");
  if (!c.is_array() || static_cast<int>(c.size()) != n) throw ParseError("components: expected " + std::to_string(n) + " polynomials");
  std::vector<Poly> comps;
  for (const auto& e : c) comps.push_back(poly_from_json(e, n));
  return VectorField(std::move(comps));
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace pquant
