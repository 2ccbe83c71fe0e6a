#include <doctest.h>

#include "helpers.hpp"
#include "pquant/errors.hpp"
#include "pquant/quantization.hpp"
#include "pquant/serialize.hpp"

using namespace pquant;
using namespace pquant::testing;

TEST_CASE("canonical symbol text") {
  const Symbol u = S(1, M(2, {1, 0}), W(2, {1}), M(2, {1, 0})) + S(frac(2, 5), M(2, {0, 0}), W(2, {1}), M(2, {0, 0}));
  const std::string expected =
      "{\n"
      "  \"n\": 2,\n"
      "  \"p\": 1,\n"
      "  \"terms\": [\n"
      "    {\n"
      "      \"coef\": \"2/5\",\n"
      "      \"wedge\": [\n"
      "        1\n"
      "      ],\n"
      "      \"x\": [\n"
      "        0,\n"
      "        0\n"
      "      ],\n"
      "      \"xi\": [\n"
      "        0,\n"
      "        0\n"
      "      ]\n"
      "    },\n"
      "    {\n"
      "      \"coef\": \"1/1\",\n"
      "      \"wedge\": [\n"
      "        1\n"
      "      ],\n"
      "      \"x\": [\n"
      "        1,\n"
      "        0\n"
      "      ],\n"
      "      \"xi\": [\n"
      "        1,\n"
      "        0\n"
      "      ]\n"
      "    }\n"
      "  ]\n"
      "}\n";
  CHECK(canonical_dump(to_json(u)) == expected);
  CHECK(symbol_from_json(parse_json(expected)) == u);
}

TEST_CASE("round trips are bit-exact") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int t = 0; t < 5; ++t) {
        const Symbol s = random_symbol(rng, n, p, 3, 3, 6) * frac(7, 3);
        const std::string text = canonical_dump(to_json(s));
        const Symbol back = symbol_from_json(parse_json(text));
        CHECK(back == s);
        CHECK(canonical_dump(to_json(back)) == text);

        const DiffOp d = random_diffop(rng, n, p, 3, 2);
        const std::string dt = canonical_dump(to_json(d));
        CHECK(diffop_from_json(parse_json(dt)) == d);
        CHECK(canonical_dump(to_json(diffop_from_json(parse_json(dt)))) == dt);

        const PForm f = random_form(rng, n, p, 2);
        CHECK(pform_from_json(parse_json(canonical_dump(to_json(f)))) == f);

        const VectorField x = random_field(rng, n, 3);
        CHECK(vector_field_from_json(parse_json(canonical_dump(to_json(x)))) == x);
      }
    }
  }
}

TEST_CASE("quantize then symbol through JSON is the identity") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    const Symbol s = random_symbol(rng, 3, t % 4, 3, 2, 6);
    const std::string text = canonical_dump(to_json(s));
    const std::string op_text = canonical_dump(to_json(quantize_operator(s)));
    const Symbol back = operator_symbol(diffop_from_json(parse_json(op_text)));
    CHECK(canonical_dump(to_json(back)) == text);
  }
}

TEST_CASE("schema violations are parse errors") {
  auto parse_symbol = [](const std::string& text) { return symbol_from_json(parse_json(text)); };
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(parse_symbol(R"({"n":2,"p":1})"), ParseError);
  CHECK_THROWS_AS(parse_symbol(R"({"n":2,"p":1,"terms":[],"extra":1})"), ParseError);
  CHECK_THROWS_AS(parse_symbol(R"({"n":9,"p":1,"terms":[]})"), ParseError);
  CHECK_THROWS_AS(parse_symbol(R"({"n":2,"p":3,"terms":[]})"), ParseError);
  CHECK_THROWS_AS(parse_symbol(R"({"n":2,"p":1,"terms":[{"coef":"1/0","wedge":[1],"x":[0,0],"xi":[0,0]}]})"), ParseError);
  CHECK_THROWS_AS(parse_symbol(R"({"n":2,"p":1,"terms":[{"coef":1,"wedge":[1],"x":[0,0],"xi":[0,0]}]})"), ParseError);
  CHECK_THROWS_AS(parse_symbol(R"({"n":2,"p":1,"terms":[{"coef":"1","wedge":[3],"x":[0,0],"xi":[0,0]}]})"), ParseError);
  CHECK_THROWS_AS(parse_symbol(R"({"n":2,"p":2,"terms":[{"coef":"1","wedge":[2,1],"x":[0,0],"xi":[0,0]}]})"), ParseError);
  CHECK_THROWS_AS(parse_symbol(R"({"n":2,"p":1,"terms":[{"coef":"1","wedge":[1],"x":[0],"xi":[0,0]}]})"), ParseError);
  CHECK_THROWS_AS(parse_symbol(R"({"n":2,"p":1,"terms":[{"coef":"1","wedge":[1],"x":[-1,0],"xi":[0,0]}]})"), ParseError);
  CHECK_THROWS_AS(diffop_from_json(parse_json(R"({"n":2,"p":0,"terms":[{"alpha":[1,0],"coef":"1","wedge":[]}]})")), ParseError);
  CHECK_THROWS_AS(vector_field_from_json(parse_json(R"({"n":2,"components":[[]]})")), ParseError);
  // Non-canonical input is accepted and normalized.
  const Symbol s = parse_symbol(R"({"n":2,"p":0,"terms":[{"coef":"2/4","wedge":[],"x":[0,0],"xi":[0,0]},{"coef":"1/2","wedge":[],"x":[0,0],"xi":[0,0]}]})");
  CHECK(s == S(1, M(2, {0, 0}), W(2, {}), M(2, {0, 0})));
}
