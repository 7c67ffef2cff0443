#ifndef TORICODE_BUDGET_HPP
#define TORICODE_BUDGET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricode {

using Int = boost::multiprecision::cpp_int;

// Enumeration limits shared by every brute-force loop. `ops` caps the number
// of elementary steps (unit tuples, projective codewords, projective forms);
// exceeding it raises BudgetExceeded instead of running long. `workers` bounds
// the threads used by partitionable loops.
struct Budget {
  static constexpr std::uint64_t kDefaultOps = std::uint64_t{1} << 26;
  std::uint64_t ops = kDefaultOps;
  unsigned workers = 1;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what_kind, Int required, std::uint64_t budget)
      : std::runtime_error(what_kind + " needs " + required.str() +
                           " steps, budget is " + std::to_string(budget)),
        required_(std::move(required)),
        budget_(budget) {}

  const Int& required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  Int required_;
  std::uint64_t budget_;
};

namespace detail {

// Splits [0, total) into at most `workers` contiguous ranges.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> split_ranges(
    std::uint64_t total, unsigned workers) {
  if (workers == 0) workers = 1;
  std::uint64_t parts = workers;
  if (parts > total) parts = total == 0 ? 1 : total;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(static_cast<std::size_t>(parts));
  std::uint64_t chunk = total / parts, extra = total % parts, lo = 0;
  for (std::uint64_t i = 0; i < parts; ++i) {
    std::uint64_t hi = lo + chunk + (i < extra ? 1 : 0);
    out.emplace_back(lo, hi);
    lo = hi;
  }
  return out;
}

}  // namespace detail
}  // namespace toricode

#endif
