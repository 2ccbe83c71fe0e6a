// Acceptance run: one line per criterion over n = 2 and n = 3, exact
// equality throughout. Exits nonzero if any criterion fails. The time
// shown is that of the suites a criterion draws on, which criteria share.

#include <cstdio>
#include <iostream>
#include <map>
#include <vector>

#include "pquant/verify.hpp"

using namespace pquant;

namespace {

struct Part {
  std::string suite;
  int max_xdeg;
  std::vector<std::string> groups;
};

struct Criterion {
  int id;
  std::string title;
  std::vector<Part> parts;
};

const std::vector<Criterion> kCriteria = {
    {1, "Koszul identities", {{"koszul", 2, {"koszul"}}}},
    {2, "affine symbol map intertwines both actions", {{"lieop", 2, {"affine"}}}},
    {3, "polynomial-formalism oracle for the operator action", {{"lieop", 2, {"oracle"}}}},
    {4, "Casimir closed form and spectrum", {{"casimir", 2, {"closed-form"}}}},
    {5, "Casimir difference", {{"casimir", 2, {"difference"}}}},
    {6, "quantization equivariance (x-degree <= 3)", {{"quantization", 3, {"equivariance"}}}},
    {7, "commutation lemma", {{"lemma", 2, {"lemma"}}}},
    {8, "low-order Vect-equivariance and its defect", {{"quantization", 2, {"vect-low-order"}}}},
    {9, "sl-invariant classification", {{"classification", 2, {"sl"}}}},
    {10, "Vect-invariant classification", {{"classification", 2, {"vect"}}, {"quantization", 2, {"invariant-maps"}}}},
};

}  // namespace

int main() {
  std::map<std::tuple<std::string, int, int>, VerificationReport> cache;
  auto report = [&](const std::string& suite, int n, int max_xdeg) -> const VerificationReport& {
    const auto key = std::tuple{suite, n, max_xdeg};
    auto it = cache.find(key);
    if (it == cache.end()) {
      VerifyParams params;
      params.n = n;
      params.max_k = 3;
      params.max_xdeg = max_xdeg;
      it = cache.emplace(key, run_suite(suite, params)).first;
    }
    return it->second;
  };

  int failed = 0;
  for (const auto& c : kCriteria) {
    bool ok = true;
    double secs = 0;
    for (int n : {2, 3}) {
      for (const auto& part : c.parts) {
        const auto& rep = report(part.suite, n, part.max_xdeg);
        secs += rep.seconds;
        for (const auto& g : part.groups) {
          if (rep.group_passed(g)) continue;
          ok = false;
          for (const auto& chk : rep.checks) {
            if (chk.group == g && !chk.passed) {
              std::cerr << "  n=" << n << " " << g << ": " << chk.name << "\n    " << chk.counterexample.dump() << "\n";
            }
          }
        }
      }
    }
    std::printf("criterion %2d  %-4s  %-52s %7.2f s\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
  return failed == 0 ? 0 : 1;
}
