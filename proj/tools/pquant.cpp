// pquant: verification suites and transforms over exact rationals.
//
// Exit status: 0 success, 1 failed verification or dimension mismatch,
// 2 usage or parse error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pquant/casimir.hpp"
#include "pquant/errors.hpp"
#include "pquant/invariants.hpp"
#include "pquant/quantization.hpp"
#include "pquant/serialize.hpp"
#include "pquant/symbol_space.hpp"
#include "pquant/verify.hpp"

using namespace pquant;

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write " + path);
  out << text;
}

int cmd_verify(const std::string& suite, const VerifyParams& params, bool json) {
  const auto rep = run_suite(suite, params);
  if (json) {
    std::cout << canonical_dump(rep.to_json());
  } else {
    for (const auto& c : rep.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.group << ": " << c.name << "\n";
      if (!c.detail.empty()) std::cout << "     " << c.detail << "\n";
      if (!c.passed) std::cout << "     counterexample: " << c.counterexample.dump() << "\n";
    }
    std::cout << suite << " n=" << params.n << " max-order=" << params.max_k << " max-xdeg=" << params.max_xdeg << ": "
              << (rep.passed() ? "pass" : "FAIL") << " (" << std::fixed << std::setprecision(2) << rep.seconds << " s)\n";
  }
  return rep.passed() ? 0 : kFailure;
}

std::vector<std::string> sl_generator_names(int n, int k, int p, int l, int q) {
  std::vector<std::pair<std::string, std::function<Symbol(const Symbol&)>>> all;
  if (l == k + 1 && q == p - 1) all.push_back({"δ*", koszul_delta_star});
  if (l == k && q == p) {
    all.push_back({"δδ*", [](const Symbol& u) { return koszul_delta(koszul_delta_star(u)); }});
    all.push_back({"δ*δ", [](const Symbol& u) { return koszul_delta_star(koszul_delta(u)); }});
  }
  if (l == k - 1 && q == p + 1) all.push_back({"δ", koszul_delta});
  std::vector<std::string> names;
  for (const auto& [name, f] : all) {
    if (!fibre_candidate(n, k, p, l, q, f).coefficients.empty()) names.push_back(name);
  }
  return names;
}

int cmd_invariant_dim(int n, int k, int p, int l, int q, bool vect) {
  Json params = {{"n", n}, {"k", k}, {"p", p}, {"q", q}, {"vect", vect}};
  Json out;
  if (vect) {
    const auto r = vect_invariant_space(n, k, p, q);
    out = {{"dimension", r.dimension}, {"generators", r.generators}, {"status", r.status}};
  } else {
    params["l"] = l;
    const auto r = sl_invariant_space(n, k, p, l, q);
    Json basis = Json::array();
    for (const auto& m : r.basis) basis.push_back(m.to_string());
    out = {{"dimension", r.dimension}, {"basis", basis}};
    // named only when the names account for the whole space
    const auto names = sl_generator_names(n, k, p, l, q);
    out["generators"] = static_cast<int>(names.size()) == r.dimension ? Json(names) : Json::array();
  }
  out["params"] = params;
  std::cout << canonical_dump(out);
  return 0;
}

int cmd_table(const std::string& what, int n, int max_k, const std::string& format) {
  if (n < 1 || max_k < 0) throw ArgumentError("table needs n >= 1 and max-k >= 0");
  Json rows = Json::array();
  std::ostringstream text;
  if (what == "spectrum") {
    text << std::setw(3) << "k" << std::setw(4) << "p" << std::setw(12) << "alpha" << std::setw(12) << "beta" << "\n";
    for (int k = 0; k <= max_k; ++k) {
      for (int p = 0; p <= n; ++p) {
        const auto s = spectrum(n, k, p);
        rows.push_back({{"k", k}, {"p", p}, {"alpha", to_string(s.alpha)}, {"beta", to_string(s.beta)}});
        text << std::setw(3) << k << std::setw(4) << p << std::setw(12) << to_string(s.alpha) << std::setw(12) << to_string(s.beta) << "\n";
      }
    }
  } else {
    if (n < 2) throw ArgumentError("qcoeff table needs n >= 2");
    text << std::setw(3) << "k" << std::setw(4) << "p" << std::setw(4) << "l" << std::setw(14) << "a" << std::setw(14) << "b" << "\n";
    for (int k = 0; k <= max_k; ++k) {
      for (int p = 0; p <= n; ++p) {
        const auto& c = q_coefficients(n, k, p);
        Json a = Json::array(), b = Json::array();
        for (std::size_t i = 0; i < c.a.size(); ++i) {
          a.push_back(to_string(c.a[i]));
          b.push_back(to_string(c.b[i]));
          text << std::setw(3) << k << std::setw(4) << p << std::setw(4) << i + 1 << std::setw(14) << to_string(c.a[i]) << std::setw(14)
               << to_string(c.b[i]) << "\n";
        }
        rows.push_back({{"k", k}, {"p", p}, {"a", a}, {"b", b}});
      }
    }
  }
  if (format == "text") {
    std::cout << text.str();
  } else {
    std::cout << canonical_dump({{"n", n}, {"max_k", max_k}, {"rows", rows}, {"what", what}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projectively equivariant symbol calculus on differential operators acting on forms"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  VerifyParams vp;
  bool verify_json = false;
  verify->add_option("--suite", suite, "koszul | casimir | lieop | quantization | lemma | classification")->required();
  verify->add_option("--dim", vp.n, "dimension n")->required();
  verify->add_option("--max-order", vp.max_k, "largest ξ-degree")->capture_default_str();
  verify->add_option("--max-xdeg", vp.max_xdeg, "largest x-degree of basis coefficients")->capture_default_str();
  verify->add_option("--seed", vp.seed, "seed for random fields and symbols")->capture_default_str();
  verify->add_flag("--json", verify_json, "print the report as JSON");

  auto* quant = app.add_subcommand("quantize", "Quantize a symbol into a differential operator");
  std::string q_in, q_out;
  quant->add_option("--input", q_in, "symbol JSON")->required();
  quant->add_option("--output", q_out, "operator JSON")->required();

  auto* symbol = app.add_subcommand("symbol", "Print the equivariant symbol of an operator");
  std::string s_in;
  symbol->add_option("--input", s_in, "operator JSON")->required();

  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to a form");
  std::string a_op, a_form;
  apply_cmd->add_option("--op", a_op, "operator JSON")->required();
  apply_cmd->add_option("--form", a_form, "form JSON")->required();

  auto* inv = app.add_subcommand("invariant-dim", "Dimension and generators of a space of invariant maps");
  int i_n = 0, i_k = 0, i_p = 0, i_l = 0, i_q = 0;
  bool i_vect = false;
  inv->add_option("--dim", i_n)->required();
  inv->add_option("--k", i_k)->required();
  inv->add_option("--p", i_p)->required();
  auto* l_opt = inv->add_option("--l", i_l, "target order (sl level only)");
  inv->add_option("--q", i_q)->required();
  inv->add_flag("--vect", i_vect, "maps D^k_p -> D_q invariant under all vector fields");

  auto* table = app.add_subcommand("table", "Casimir spectrum or quantization coefficients");
  std::string t_what, t_format = "json";
  int t_n = 0, t_k = 0;
  table->add_option("--what", t_what)->required()->check(CLI::IsMember({"spectrum", "qcoeff"}));
  table->add_option("--dim", t_n)->required();
  table->add_option("--max-k", t_k)->required();
  table->add_option("--format", t_format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(suite, vp, verify_json);
    if (*quant) {
      write_file(q_out, canonical_dump(to_json(quantize_operator(symbol_from_json(read_file(q_in))))));
      return 0;
    }
    if (*symbol) {
      std::cout << canonical_dump(to_json(operator_symbol(diffop_from_json(read_file(s_in)))));
      return 0;
    }
    if (*apply_cmd) {
      const DiffOp d = diffop_from_json(read_file(a_op));
      const PForm w = pform_from_json(read_file(a_form));
      if (d.dim() != w.dim() || d.form_degree() != w.degree()) {
        std::cerr << "error: operator on " << d.form_degree() << "-forms in dimension " << d.dim() << " applied to a " << w.degree()
                  << "-form in dimension " << w.dim() << "\n";
        return kFailure;
      }
      std::cout << canonical_dump(to_json(apply(d, w)));
      return 0;
    }
    if (*inv) {
      if (!i_vect && l_opt->count() == 0) throw ArgumentError("--l is required without --vect");
      return cmd_invariant_dim(i_n, i_k, i_p, i_l, i_q, i_vect);
    }
    if (*table) return cmd_table(t_what, t_n, t_k, t_format);
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
