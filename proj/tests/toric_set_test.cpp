#include <doctest.h>

#include "toricode/toric_set.hpp"

using namespace toricode;

namespace {
FieldPtr gf(std::uint32_t q) { return std::make_shared<FiniteField>(FiniteField::of_order(q)); }
}  // namespace

TEST_CASE("cycle point sets over small fields") {
  auto X = enumerate_points(cycle_graph(4), gf(3));
  CHECK(X.size() == 4);  // (q-1)^(2k-2)
  for (std::size_t i = 0; i < X.size(); ++i) {
    auto pt = X.point(i);
    CHECK(pt[0] == 1);
    for (auto c : pt) CHECK(c != 0);
  }
  // Points are sorted ascending on encoded vectors.
  for (std::size_t i = 1; i < X.size(); ++i) {
    std::vector<std::uint16_t> prev(X.point(i - 1).begin(), X.point(i - 1).end());
    std::vector<std::uint16_t> cur(X.point(i).begin(), X.point(i).end());
    CHECK(prev < cur);
  }

  CHECK(enumerate_points(cycle_graph(8), gf(3)).size() == 64);
  CHECK(enumerate_points(cycle_graph(3), gf(3)).size() == 4);  // torus T^2
}

TEST_CASE("paths give the full torus") {
  CHECK(enumerate_points(path_graph(2), gf(3)).size() == 2);   // T^1
  CHECK(enumerate_points(path_graph(3), gf(5)).size() == 16);  // T^2
}

TEST_CASE("fiber uniformity on connected bipartite graphs") {
  for (auto [n, q] : {std::pair{4, 3u}, std::pair{6, 3u}, std::pair{4, 4u}}) {
    auto X = enumerate_points(cycle_graph(n), gf(q));
    std::uint64_t tuples = 1;
    for (int i = 0; i < n; ++i) tuples *= (q - 1);
    const std::uint64_t expected = tuples / X.size();
    std::uint64_t sum = 0;
    for (auto f : X.fiber_counts()) {
      CHECK(f == expected);
      sum += f;
    }
    CHECK(sum == tuples);
  }
}

TEST_CASE("enumeration does not depend on the tuple visit order") {
  // Different worker counts partition the tuple space differently.
  auto a = enumerate_points(cycle_graph(6), gf(4), Budget{Budget::kDefaultOps, 1});
  auto b = enumerate_points(cycle_graph(6), gf(4), Budget{Budget::kDefaultOps, 3});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto pa = a.point(i), pb = b.point(i);
    CHECK(std::vector<std::uint16_t>(pa.begin(), pa.end()) ==
          std::vector<std::uint16_t>(pb.begin(), pb.end()));
  }
  CHECK(a.fiber_counts() == b.fiber_counts());
}

TEST_CASE("expected length formula") {
  CHECK(expected_length(cycle_graph(6), *gf(4)) == 81);
  CHECK(expected_length(cycle_graph(3), *gf(3)) == 4);
  CHECK(expected_length(cycle_graph(3), *gf(4)) == 9);
  CHECK(expected_length(complete_bipartite(2, 2), *gf(3)) == 4);
  CHECK(expected_length(path_graph(1), *gf(5)) == 1);
  // Isolated vertex counts as a bipartite component.
  CHECK(expected_length(Graph(3, {{1, 2}}), *gf(3)) == 1);
  CHECK_THROWS_AS(expected_length(Graph(2, {}), *gf(3)), std::domain_error);
}

TEST_CASE("verify_length agreement") {
  auto r1 = verify_length(cycle_graph(4), gf(3));
  CHECK(r1.expected == 4);
  CHECK(r1.enumerated == 4);
  CHECK(r1.match);

  auto r2 = verify_length(cycle_graph(8), gf(3));
  CHECK(r2.expected == 64);
  CHECK(r2.match);

  auto r3 = verify_length(path_graph(3), gf(5));
  CHECK(r3.expected == 16);
  CHECK(r3.match);

  // Formula and enumeration agree here even though q is even (open reading).
  CHECK(verify_length(cycle_graph(3), gf(4)).match);

  // Isolated vertices: enumeration skips them, the formula counts them.
  CHECK(verify_length(Graph(3, {{1, 2}}), gf(3)).match);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(enumerate_points(Graph(2, {}), gf(3)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_points(cycle_graph(4), gf(2)), std::invalid_argument);
  try {
    enumerate_points(cycle_graph(4), gf(3), Budget{8, 1});
    FAIL("budget should have been exceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == 16);
    CHECK(e.budget() == 8);
  }
}
