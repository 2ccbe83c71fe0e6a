#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pquant/errors.hpp"
#include "pquant/linear_algebra.hpp"

using namespace pquant;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int rank) {
  std::uniform_int_distribution<int> d(-3, 3);
  RatMatrix a(rows, rank), b(rank, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < rank; ++j) a(i, j) = d(rng);
  }
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < cols; ++j) b(i, j) = frac(d(rng), 1 + (i + j) % 3);
  }
  return a * b;
}

}  // namespace

TEST_CASE("dense rank, nullspace, inverse") {
  RatMatrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 6;
  CHECK(m.rank() == 1);
  const auto ns = m.nullspace();
  REQUIRE(ns.size() == 2);
  CHECK(ns[0] == std::vector<Rat>{2, -1, 0});
  CHECK(ns[1] == std::vector<Rat>{3, 0, -1});

  RatMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  CHECK(a * a.inverse() == RatMatrix::identity(2));
  CHECK_THROWS_AS(RatMatrix(2, 2).inverse(), ArgumentError);
  CHECK_THROWS_AS(m.inverse(), ArgumentError);

  CHECK(a.solve({3, 2}) == std::vector<Rat>{1, 1});
  CHECK_FALSE(m.solve({1, 1}).has_value());
  CHECK(m.solve({1, 2}).has_value());
  CHECK_THROWS_AS(a * m.transpose(), DimensionMismatch);
}

TEST_CASE("random matrices: rank and nullspace") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const int rows = 2 + t % 5, cols = 3 + t % 4, rank = 1 + t % std::min(rows, cols);
    const RatMatrix m = random_matrix(rng, rows, cols, rank);
    const auto ns = m.nullspace();
    CHECK(m.rank() + static_cast<int>(ns.size()) == cols);
    for (const auto& v : ns) {
      RatMatrix col(cols, 1);
      for (int j = 0; j < cols; ++j) col(j, 0) = v[static_cast<std::size_t>(j)];
      CHECK((m * col).is_zero());
    }

    SparseLinearSystem sys(cols);
    for (int i = 0; i < rows; ++i) {
      SparseLinearSystem::Row row;
      for (int j = 0; j < cols; ++j) {
        if (sgn(m(i, j)) != 0) row[j] = m(i, j);
      }
      sys.add_equation(row);
    }
    CHECK(sys.rank() == m.rank());
    CHECK(sys.nullspace() == ns);
  }
}

TEST_CASE("sparse system bookkeeping") {
  SparseLinearSystem sys(3);
  CHECK(sys.add_equation({{0, 1}, {1, 1}}));
  CHECK_FALSE(sys.add_equation({{0, 2}, {1, 2}}));
  CHECK_FALSE(sys.add_equation({{2, 0}}));
  CHECK(sys.add_equation({{1, 1}, {2, 1}}));
  CHECK(sys.rank() == 2);
  CHECK(sys.nullspace() == std::vector<std::vector<Rat>>{{1, -1, 1}});
  CHECK(sys.add_equation({{2, 5}}));
  CHECK(sys.full_rank());
  CHECK(sys.nullspace().empty());
  CHECK_THROWS_AS(sys.add_equation({{3, 1}}), ArgumentError);
}

TEST_CASE("primitive scaling") {
  CHECK(primitive({frac(1, 2), frac(-1, 3), 0}) == std::vector<Rat>{3, -2, 0});
  CHECK(primitive({0, frac(-4, 6)}) == std::vector<Rat>{0, 1});
}
