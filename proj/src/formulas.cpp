#include "toricode/formulas.hpp"

#include <stdexcept>

namespace toricode {
namespace {

void check_cycle_args(int k, std::uint32_t q) {
  if (k < 2) throw std::invalid_argument("cycle parameter k must be at least 2");
  if (q < 3) throw std::invalid_argument("field order must be at least 3");
}

Int exact_div(Int num, const Int& den, const char* what) {
  if (num % den != 0)
    throw std::logic_error(std::string("inexact division in ") + what);
  return num / den;
}

}  // namespace

Int pow_int(Int base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Int r = 1;
  while (exponent > 0) {
    if (exponent & 1) r *= base;
    base *= base;
    exponent >>= 1;
  }
  return r;
}

Int delta(int k, std::uint32_t q) {
  check_cycle_args(k, q);
  return pow_int(Int(q) - 1, 2 * k - 2) - pow_int(Int(q), k) * (Int(q) - 2);
}

const char* branch_name(CycleBranch b) {
  return b == CycleBranch::incomplete_dominates ? "incomplete-dominates" : "complete-dominates";
}

CycleBranch theorem_branch(int k, std::uint32_t q) {
  check_cycle_args(k, q);
  if ((k == 4 && q > 3) || k >= 5) return CycleBranch::incomplete_dominates;
  return CycleBranch::complete_dominates;
}

CycleBranch branch_predicate(int k, std::uint32_t q) {
  return delta(k, q) > 0 ? CycleBranch::incomplete_dominates : CycleBranch::complete_dominates;
}

Int cycle_min_distance(int k, std::uint32_t q) {
  check_cycle_args(k, q);
  if (theorem_branch(k, q) == CycleBranch::incomplete_dominates)
    return pow_int(Int(q) - 1, 2 * k - 3) * (Int(q) - 2);
  Int num = pow_int(Int(q) - 1, 2 * k) - pow_int(Int(q), k) * (Int(q) - 2) - 1;
  return exact_div(std::move(num), Int(q) * (Int(q) - 1), "cycle_min_distance");
}

Int path_zero_count(int r, std::uint32_t q, int k) {
  check_cycle_args(k, q);
  if (r < 2 || r > 2 * k) throw std::invalid_argument("path support r must satisfy 2 <= r <= 2k");
  Int bracket = pow_int(Int(q) - 1, r);
  Int corr = pow_int(Int(q) - 1, 2);
  bracket += (r % 2 == 1) ? corr : -corr;
  return exact_div(std::move(bracket), Int(q), "path_zero_count") * pow_int(Int(q) - 1, 2 * k - r);
}

Int incomplete_max(int k, std::uint32_t q) {
  check_cycle_args(k, q);
  return pow_int(Int(q) - 1, 2 * k - 3);
}

Int complete_max(int k, std::uint32_t q) {
  check_cycle_args(k, q);
  Int num = pow_int(Int(q) - 1, 2 * k - 1) + pow_int(Int(q), k) * (Int(q) - 2) + 1;
  return exact_div(std::move(num), Int(q) * (Int(q) - 1), "complete_max");
}

bool equality_condition(std::span<const std::uint16_t> alphas, const FiniteField& F) {
  if (alphas.size() < 2 || alphas.size() % 2 != 0)
    throw std::invalid_argument("coefficient vector must have even length >= 2");
  std::uint16_t odd = 1, even = 1;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i] == 0) throw std::invalid_argument("equality condition needs nonzero coefficients");
    if (i % 2 == 0)
      odd = F.mul(odd, alphas[i]);  // alpha_1, alpha_3, ... (1-based)
    else
      even = F.mul(even, alphas[i]);
  }
  const std::size_t k = alphas.size() / 2;
  if (k % 2 == 1) even = F.neg(even);
  return odd == even;
}

Int torus_min_distance(int s, std::uint32_t q, int d) {
  if (s < 2) throw std::invalid_argument("torus dimension needs s >= 2");
  if (q < 3) throw std::invalid_argument("field order must be at least 3");
  const int bound = static_cast<int>(q - 2) * (s - 1);
  if (d < 1 || d > bound)
    throw std::domain_error("degree " + std::to_string(d) + " outside 1..(q-2)(s-1) = 1.." +
                            std::to_string(bound));
  const int kk = (d - 1) / static_cast<int>(q - 2);
  const int ll = d - kk * static_cast<int>(q - 2);
  return pow_int(Int(q) - 1, s - (kk + 2)) * (Int(q) - 1 - ll);
}

Int even_cycle_regularity(int k, std::uint32_t q) {
  check_cycle_args(k, q);
  return Int(k - 1) * (Int(q) - 2);
}

CyclePrediction predict_cycle(int k, std::uint32_t q) {
  check_cycle_args(k, q);
  CyclePrediction out;
  out.k = k;
  out.q = q;
  out.length = pow_int(Int(q) - 1, 2 * k - 2);
  out.dimension = 2 * k;
  out.min_distance = cycle_min_distance(k, q);
  out.delta_value = delta(k, q);
  out.branch = branch_predicate(k, q);
  return out;
}

}  // namespace toricode
