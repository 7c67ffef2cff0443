#include "toricode/eval_code.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace toricode {
namespace {

Int binomial(std::uint64_t n, std::uint64_t k) {
  Int r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

void apply_delta(std::vector<std::uint16_t>& w, std::span<const std::uint16_t> row,
                 std::uint16_t delta, const FiniteField& F) {
  for (std::size_t c = 0; c < w.size(); ++c) w[c] = F.add(w[c], F.mul(delta, row[c]));
}

// Walks every projective codeword with global index in [lo, hi). Messages have
// first nonzero entry 1 at a leading row; the tail coordinates run through an
// odometer whose steps update the codeword incrementally (one row per digit
// change, amortized ~1 change per message). on_weight returning false, or the
// shared stop flag, aborts the range.
template <class OnWeight>
void scan_projective_range(const FqMatrix& basis, const FiniteField& F, std::uint64_t lo,
                           std::uint64_t hi, const std::atomic<bool>* stop,
                           OnWeight&& on_weight) {
  const std::size_t dim = basis.rows, m = basis.cols;
  const std::uint32_t q = F.order();

  std::vector<std::uint64_t> block(dim);  // block[i] = q^(dim-1-i)
  block[dim - 1] = 1;
  for (std::size_t i = dim - 1; i-- > 0;) block[i] = block[i + 1] * q;

  std::size_t lead = 0;
  std::uint64_t offset = lo;
  while (lead < dim && offset >= block[lead]) {
    offset -= block[lead];
    ++lead;
  }

  std::uint64_t remaining = hi - lo;
  std::vector<std::uint16_t> w(m);
  std::vector<std::uint32_t> digit;  // digit[j] drives basis row dim-1-j

  while (remaining > 0 && lead < dim) {
    const std::size_t tails = dim - 1 - lead;
    digit.assign(tails, 0);
    std::uint64_t t = offset;
    for (std::size_t j = 0; j < tails; ++j) {
      digit[j] = static_cast<std::uint32_t>(t % q);
      t /= q;
    }
    const auto lead_row = basis.row(lead);
    std::copy(lead_row.begin(), lead_row.end(), w.begin());
    for (std::size_t j = 0; j < tails; ++j)
      if (digit[j] != 0)
        apply_delta(w, basis.row(dim - 1 - j), static_cast<std::uint16_t>(digit[j]), F);

    const std::uint64_t steps = std::min(block[lead] - offset, remaining);
    for (std::uint64_t done = 0; done < steps; ++done) {
      std::uint64_t wt = 0;
      for (std::size_t c = 0; c < m; ++c) wt += (w[c] != 0);
      if (!on_weight(wt)) return;
      if (stop != nullptr && (done & 0xFFF) == 0xFFF && stop->load(std::memory_order_relaxed))
        return;
      if (done + 1 < steps) {
        for (std::size_t j = 0; j < tails; ++j) {
          const std::uint16_t old = static_cast<std::uint16_t>(digit[j]);
          if (++digit[j] < q) {
            apply_delta(w, basis.row(dim - 1 - j),
                        F.sub(static_cast<std::uint16_t>(digit[j]), old), F);
            break;
          }
          digit[j] = 0;
          apply_delta(w, basis.row(dim - 1 - j), F.neg(old), F);
        }
      }
    }
    remaining -= steps;
    offset = 0;
    ++lead;
  }
}

// Projective message count (q^dim - 1)/(q - 1), checked against the budget.
std::uint64_t checked_projective_count(const LinearCode& code, const Budget& budget,
                                       const char* what) {
  if (code.dimension == 0) throw std::logic_error("code has dimension zero");
  const std::uint32_t q = code.field->order();
  Int total = 0, power = 1;
  for (std::size_t i = 0; i < code.dimension; ++i) {
    total += power;
    power *= q;
  }
  if (total > budget.ops) throw BudgetExceeded(what, total, budget.ops);
  return static_cast<std::uint64_t>(total);
}

}  // namespace

std::vector<std::vector<int>> monomial_exponents(std::size_t vars, int degree) {
  if (vars == 0) throw std::invalid_argument("monomials need at least one variable");
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<std::vector<int>> out;
  std::vector<int> current(vars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rest) {
    if (pos + 1 == vars) {
      current[pos] = rest;
      out.push_back(current);
      return;
    }
    for (int a = rest; a >= 0; --a) {
      current[pos] = a;
      rec(pos + 1, rest - a);
    }
  };
  rec(0, degree);
  return out;
}

FqMatrix evaluation_matrix(const ToricSet& X, int degree, const Budget& budget) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (X.size() == 0) throw std::invalid_argument("point set is empty");
  const std::size_t s = X.coord_count(), m = X.size();
  const Int entries =
      binomial(s + static_cast<std::uint64_t>(degree) - 1, static_cast<std::uint64_t>(degree)) * m;
  if (entries > budget.ops) throw BudgetExceeded("evaluation matrix", entries, budget.ops);

  const auto monos = monomial_exponents(s, degree);
  const FiniteField& F = X.field();
  FqMatrix out(monos.size(), m);
  for (std::size_t r = 0; r < monos.size(); ++r) {
    const auto& exp = monos[r];
    for (std::size_t j = 0; j < m; ++j) {
      const auto pt = X.point(j);
      std::uint16_t acc = 1;
      for (std::size_t c = 0; c < s; ++c)
        if (exp[c] != 0) acc = F.mul(acc, F.pow(pt[c], exp[c]));
      out.at(r, j) = acc;
    }
  }
  return out;
}

LinearCode code_from(const ToricSet& X, int degree, const Budget& budget) {
  LinearCode code;
  code.field = X.field_ptr();
  code.length = X.size();
  code.generator = evaluation_matrix(X, degree, budget);
  FqMatrix work = code.generator;
  code.dimension = rref_in_place(work, X.field());
  code.basis = top_rows(work, code.dimension);
  return code;
}

std::uint64_t minimum_distance(const LinearCode& code, const Budget& budget) {
  const std::uint64_t total = checked_projective_count(code, budget, "codeword enumeration");
  const auto ranges = detail::split_ranges(total, budget.workers);
  std::atomic<bool> stop{false};
  std::vector<std::uint64_t> local(ranges.size(), UINT64_MAX);

  auto work = [&](std::size_t w) {
    scan_projective_range(code.basis, *code.field, ranges[w].first, ranges[w].second, &stop,
                          [&](std::uint64_t wt) {
                            if (wt < local[w]) {
                              local[w] = wt;
                              if (wt <= 1) {
                                stop.store(true, std::memory_order_relaxed);
                                return false;
                              }
                            }
                            return true;
                          });
  };
  if (ranges.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < ranges.size(); ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::uint64_t best = UINT64_MAX;
  for (auto v : local) best = std::min(best, v);
  if (best == 0) throw std::logic_error("reduced basis produced the zero codeword");
  return best;
}

std::map<std::uint64_t, std::uint64_t> weight_distribution(const LinearCode& code,
                                                           const Budget& budget) {
  const std::uint64_t total = checked_projective_count(code, budget, "codeword enumeration");
  const auto ranges = detail::split_ranges(total, budget.workers);
  std::vector<std::map<std::uint64_t, std::uint64_t>> local(ranges.size());

  auto work = [&](std::size_t w) {
    scan_projective_range(code.basis, *code.field, ranges[w].first, ranges[w].second, nullptr,
                          [&](std::uint64_t wt) {
                            ++local[w][wt];
                            return true;
                          });
  };
  if (ranges.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < ranges.size(); ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  // Each projective representative stands for q-1 scalar multiples of equal weight.
  const std::uint64_t units = code.field->order() - 1;
  std::map<std::uint64_t, std::uint64_t> out;
  out[0] = 1;
  for (const auto& part : local)
    for (const auto& [wt, count] : part) out[wt] += count * units;
  return out;
}

std::size_t hilbert_function(const ToricSet& X, int degree, const Budget& budget) {
  FqMatrix m = evaluation_matrix(X, degree, budget);
  return rref_in_place(m, X.field());
}

int regularity_index(const ToricSet& X, const Budget& budget) {
  const std::size_t m = X.size();
  std::size_t prev = 0;
  for (int d = 0;; ++d) {
    const std::size_t hf = hilbert_function(X, d, budget);
    if (hf < prev) throw std::logic_error("Hilbert function decreased");
    prev = hf;
    if (hf == m) return d;
  }
}

}  // namespace toricode
