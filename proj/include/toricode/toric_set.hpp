#ifndef TORICODE_TORIC_SET_HPP
#define TORICODE_TORIC_SET_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "toricode/budget.hpp"
#include "toricode/field.hpp"
#include "toricode/graph.hpp"

namespace toricode {

using FieldPtr = std::shared_ptr<const FiniteField>;

// The deduplicated, ordered point set X in the projective torus: one point per
// distinct normalized edge-product vector (e1(x) : ... : es(x)), x ranging over
// unit assignments of the non-isolated vertices. Points are normalized so the
// first coordinate is 1 and sorted ascending on their encoded coordinate
// vectors. fiber_counts()[i] is the number of unit tuples mapping to point i.
class ToricSet {
 public:
  const Graph& graph() const noexcept { return graph_; }
  const FiniteField& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }

  std::size_t size() const noexcept { return fiber_counts_.size(); }
  std::size_t coord_count() const noexcept { return s_; }
  std::span<const std::uint16_t> point(std::size_t i) const {
    return {coords_.data() + i * s_, s_};
  }
  const std::vector<std::uint64_t>& fiber_counts() const noexcept { return fiber_counts_; }

  friend ToricSet enumerate_points(const Graph&, FieldPtr, const Budget&);

 private:
  ToricSet(Graph g, FieldPtr f, std::size_t s) : graph_(std::move(g)), field_(std::move(f)), s_(s) {}

  Graph graph_;
  FieldPtr field_;
  std::size_t s_;
  std::vector<std::uint16_t> coords_;  // size() x s_, row-major
  std::vector<std::uint64_t> fiber_counts_;
};

// Brute-force enumeration of X over all (q-1)^n' unit tuples (n' = non-isolated
// vertices). Requires q >= 3 and at least one edge; throws BudgetExceeded with
// the required tuple count when the budget does not suffice.
ToricSet enumerate_points(const Graph& g, FieldPtr field, const Budget& budget = {});

// Closed-form cardinality of X: with b0 components, gamma of them
// non-bipartite, and n vertices,
//   gamma >= 1, q odd:  (q-1)^(n-b0+gamma-1) / 2^(gamma-1)
//   gamma >= 1, q even: (q-1)^(n-b0+gamma-1)
//   gamma  = 0:         (q-1)^(n-b0-1)
Int expected_length(const Graph& g, const FiniteField& field);

struct LengthCheck {
  Int expected;
  std::uint64_t enumerated = 0;
  bool match = false;
};

// Runs both the formula and the enumeration and reports both numbers.
LengthCheck verify_length(const Graph& g, FieldPtr field, const Budget& budget = {});

}  // namespace toricode

#endif
