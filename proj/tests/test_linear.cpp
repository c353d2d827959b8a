#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mbstar/linear.hpp"
#include "testutil.hpp"

using namespace mbstar;

namespace {

bool satisfies(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
               const std::vector<Rat>& x) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat acc(0);
    for (std::size_t j = 0; j < x.size(); ++j) acc += a[i][j] * x[j];
    if (acc != b[i]) return false;
  }
  for (const Rat& v : x)
    if (v < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("solves a simple feasible system exactly") {
  std::vector<std::vector<Rat>> a = {{Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(0)}};
  std::vector<Rat> b = {Rat(1), rat(1, 2)};
  auto x = solve_nonneg_exact(a, b);
  REQUIRE(x.has_value());
  CHECK(satisfies(a, b, *x));
  CHECK((*x)[0] == rat(1, 2));
}

TEST_CASE("detects infeasibility") {
  // x0 = 2 conflicts with x0 + x1 = 1, x >= 0.
  CHECK(!solve_nonneg_exact({{Rat(1), Rat(0)}, {Rat(1), Rat(1)}}, {Rat(2), Rat(1)}));
  // Directly contradictory rows.
  CHECK(!solve_nonneg_exact({{Rat(1)}, {Rat(1)}}, {Rat(1), Rat(0)}));
  // Negativity forced.
  CHECK(!solve_nonneg_exact({{Rat(1), Rat(1)}, {Rat(1), Rat(0)}}, {rat(1, 2), Rat(1)}));
}

TEST_CASE("redundant and zero rows are harmless") {
  std::vector<std::vector<Rat>> a = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {Rat(0), Rat(0)}};
  std::vector<Rat> b = {Rat(1), Rat(2), Rat(0)};
  auto x = solve_nonneg_exact(a, b);
  REQUIRE(x.has_value());
  CHECK(satisfies(a, b, *x));
}

TEST_CASE("negative rhs rows are normalized internally") {
  std::vector<std::vector<Rat>> a = {{Rat(-1), Rat(0)}, {Rat(1), Rat(1)}};
  std::vector<Rat> b = {rat(-1, 3), Rat(1)};
  auto x = solve_nonneg_exact(a, b);
  REQUIRE(x.has_value());
  CHECK(satisfies(a, b, *x));
  CHECK((*x)[0] == rat(1, 3));
}

TEST_CASE("random systems with a known nonnegative solution are solved") {
  mbstar::testing::Rng rng(123);
  for (int round = 0; round < 200; ++round) {
    std::size_t cols = 1 + mbstar::testing::pick(rng, 6);
    std::size_t rows = 1 + mbstar::testing::pick(rng, 4);
    std::vector<Rat> planted(cols);
    for (auto& v : planted) v = rat(mbstar::testing::pick(rng, 5), 1 + mbstar::testing::pick(rng, 4));

    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    std::vector<Rat> b(rows, Rat(0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        a[i][j] = rat(mbstar::testing::pick(rng, 7) - 3, 1 + mbstar::testing::pick(rng, 3));
        b[i] += a[i][j] * planted[j];
      }

    auto x = solve_nonneg_exact(a, b);
    REQUIRE(x.has_value());
    CHECK(satisfies(a, b, *x));
  }
}
