#include "toricode/toric_set.hpp"

#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace toricode {
namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint16_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint16_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using PointCounts = std::unordered_map<std::vector<std::uint16_t>, std::uint64_t, VecHash>;

// Enumerates unit tuples with global indices in [lo, hi). Tuple digits are
// unit indices 0..q-2; unit encodings are exactly 1..q-1 in ascending order.
void scan_tuples(const Graph& g, const FiniteField& F, const std::vector<int>& vertices,
                 std::uint64_t lo, std::uint64_t hi, PointCounts& out) {
  const std::uint32_t units = F.order() - 1;
  const std::size_t nv = vertices.size();
  const std::size_t s = static_cast<std::size_t>(g.edge_count());

  // Map original vertex id -> tuple slot.
  std::vector<int> slot(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
  for (std::size_t i = 0; i < nv; ++i) slot[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);

  std::vector<std::uint32_t> digit(nv, 0);
  {
    std::uint64_t t = lo;
    for (std::size_t i = 0; i < nv; ++i) {
      digit[i] = static_cast<std::uint32_t>(t % units);
      t /= units;
    }
  }
  std::vector<std::uint16_t> x(nv);
  auto sync_values = [&] {
    for (std::size_t i = 0; i < nv; ++i) x[i] = static_cast<std::uint16_t>(digit[i] + 1);
  };
  sync_values();

  std::vector<std::uint16_t> coords(s);
  const auto& edges = g.edges();
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    for (std::size_t k = 0; k < s; ++k) {
      auto [i, j] = edges[k];
      coords[k] = F.mul(x[static_cast<std::size_t>(slot[static_cast<std::size_t>(i)])],
                        x[static_cast<std::size_t>(slot[static_cast<std::size_t>(j)])]);
    }
    const std::uint16_t scale = F.inv(coords[0]);
    coords[0] = 1;
    for (std::size_t k = 1; k < s; ++k) coords[k] = F.mul(coords[k], scale);
    ++out[coords];

    // Odometer step.
    for (std::size_t i = 0; i < nv; ++i) {
      if (++digit[i] < units) {
        x[i] = static_cast<std::uint16_t>(digit[i] + 1);
        break;
      }
      digit[i] = 0;
      x[i] = 1;
    }
  }
}

}  // namespace

ToricSet enumerate_points(const Graph& g, FieldPtr field, const Budget& budget) {
  if (g.edge_count() == 0) throw std::invalid_argument("toric set needs a graph with at least one edge");
  if (field->order() < 3) throw std::invalid_argument("toric constructions require field order q >= 3");

  const std::vector<int> vertices = g.non_isolated_vertices();
  const std::uint32_t units = field->order() - 1;
  Int total = 1;
  for (std::size_t i = 0; i < vertices.size(); ++i) total *= units;
  if (total > budget.ops) throw BudgetExceeded("point enumeration", total, budget.ops);
  const std::uint64_t total64 = static_cast<std::uint64_t>(total);

  const auto ranges = detail::split_ranges(total64, budget.workers);
  std::vector<PointCounts> partial(ranges.size());
  if (ranges.size() == 1) {
    scan_tuples(g, *field, vertices, ranges[0].first, ranges[0].second, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < ranges.size(); ++w)
      pool.emplace_back([&, w] {
        scan_tuples(g, *field, vertices, ranges[w].first, ranges[w].second, partial[w]);
      });
    for (auto& t : pool) t.join();
  }

  std::map<std::vector<std::uint16_t>, std::uint64_t> merged;
  for (auto& part : partial)
    for (auto& [pt, count] : part) merged[pt] += count;

  ToricSet X(g, std::move(field), static_cast<std::size_t>(g.edge_count()));
  X.coords_.reserve(merged.size() * X.s_);
  X.fiber_counts_.reserve(merged.size());
  for (auto& [pt, count] : merged) {
    X.coords_.insert(X.coords_.end(), pt.begin(), pt.end());
    X.fiber_counts_.push_back(count);
  }
  return X;
}

Int expected_length(const Graph& g, const FiniteField& field) {
  const ComponentProfile profile = component_profile(g);
  const int n = g.vertex_count();
  const int b0 = profile.components;
  const int gamma = profile.non_bipartite;
  const std::uint32_t q = field.order();

  const int exponent = gamma >= 1 ? n - b0 + gamma - 1 : n - b0 - 1;
  if (exponent < 0)
    throw std::domain_error("length formula undefined for a graph with no edges");

  Int value = 1;
  for (int i = 0; i < exponent; ++i) value *= (q - 1);
  if (gamma >= 1 && q % 2 == 1) {
    Int div = Int(1) << (gamma - 1);
    if (value % div != 0) throw std::logic_error("length formula division is not exact");
    value /= div;
  }
  return value;
}

LengthCheck verify_length(const Graph& g, FieldPtr field, const Budget& budget) {
  LengthCheck out;
  out.expected = expected_length(g, *field);
  const ToricSet X = enumerate_points(g, std::move(field), budget);
  out.enumerated = X.size();
  out.match = (out.expected == out.enumerated);
  return out;
}

}  // namespace toricode
