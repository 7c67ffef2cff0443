#include "toricode/zeros.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace toricode {
namespace {

void check_vars(std::span<const SparsePoly> polys, int vars) {
  if (vars < 1) throw std::invalid_argument("zero counting needs at least one variable");
  for (const auto& p : polys)
    if (p.vars != vars)
      throw std::invalid_argument("polynomial variable count does not match the ambient space");
}

std::uint64_t checked_tuple_count(int vars, const FiniteField& F, const Budget& budget,
                                  const char* what) {
  Int total = 1;
  for (int i = 0; i < vars; ++i) total *= (F.order() - 1);
  if (total > budget.ops) throw BudgetExceeded(what, total, budget.ops);
  return static_cast<std::uint64_t>(total);
}

// Incremental unit-tuple walk for a range of global tuple indices: per
// coordinate change, each term containing the coordinate is rescaled by
// (new/old)^e and the owning polynomial's running sum adjusted.
std::uint64_t z_count_range(std::span<const SparsePoly> polys, int vars, const FiniteField& F,
                            std::uint64_t lo, std::uint64_t hi) {
  const std::uint32_t units = F.order() - 1;
  const std::size_t nv = static_cast<std::size_t>(vars);

  struct Touch {
    std::size_t poly, term;
    int exp;
  };
  std::vector<std::vector<Touch>> touch(nv);
  for (std::size_t p = 0; p < polys.size(); ++p)
    for (std::size_t t = 0; t < polys[p].terms.size(); ++t)
      for (std::size_t v = 0; v < nv; ++v)
        if (polys[p].terms[t].exp[v] != 0) touch[v].push_back({p, t, polys[p].terms[t].exp[v]});

  std::vector<std::uint32_t> digit(nv);
  {
    std::uint64_t t = lo;
    for (std::size_t v = 0; v < nv; ++v) {
      digit[v] = static_cast<std::uint32_t>(t % units);
      t /= units;
    }
  }
  std::vector<std::vector<std::uint16_t>> termval(polys.size());
  std::vector<std::uint16_t> sum(polys.size(), 0);
  for (std::size_t p = 0; p < polys.size(); ++p) {
    termval[p].resize(polys[p].terms.size());
    for (std::size_t t = 0; t < polys[p].terms.size(); ++t) {
      std::uint16_t acc = polys[p].terms[t].coeff;
      for (std::size_t v = 0; v < nv; ++v) {
        const int e = polys[p].terms[t].exp[v];
        if (e != 0) acc = F.mul(acc, F.pow(static_cast<std::uint16_t>(digit[v] + 1), e));
      }
      termval[p][t] = acc;
      sum[p] = F.add(sum[p], acc);
    }
  }

  auto apply = [&](std::size_t v, std::uint16_t old_enc, std::uint16_t new_enc) {
    const std::uint16_t ratio = F.mul(new_enc, F.inv(old_enc));
    for (const Touch& tc : touch[v]) {
      const std::uint16_t r = tc.exp == 1 ? ratio : F.pow(ratio, tc.exp);
      const std::uint16_t old_tv = termval[tc.poly][tc.term];
      const std::uint16_t new_tv = F.mul(old_tv, r);
      sum[tc.poly] = F.add(sum[tc.poly], F.sub(new_tv, old_tv));
      termval[tc.poly][tc.term] = new_tv;
    }
  };

  std::uint64_t count = 0;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    bool all_zero = true;
    for (std::size_t p = 0; p < polys.size(); ++p)
      if (sum[p] != 0) {
        all_zero = false;
        break;
      }
    count += all_zero;

    for (std::size_t v = 0; v < nv; ++v) {
      const std::uint16_t old_enc = static_cast<std::uint16_t>(digit[v] + 1);
      if (++digit[v] < units) {
        apply(v, old_enc, static_cast<std::uint16_t>(digit[v] + 1));
        break;
      }
      digit[v] = 0;
      apply(v, old_enc, 1);
    }
  }
  return count;
}

}  // namespace

SparsePoly SparsePoly::from_terms(int vars, std::vector<Term> raw, const FiniteField& F) {
  if (vars < 0) throw std::invalid_argument("negative variable count");
  std::map<std::vector<int>, std::uint16_t> acc;
  for (auto& term : raw) {
    if (term.exp.size() != static_cast<std::size_t>(vars))
      throw std::invalid_argument("exponent vector length does not match variable count");
    for (int e : term.exp)
      if (e < 0) throw std::invalid_argument("negative exponent");
    auto [it, fresh] = acc.try_emplace(std::move(term.exp), term.coeff);
    if (!fresh) it->second = F.add(it->second, term.coeff);
  }
  SparsePoly out;
  out.vars = vars;
  for (auto& [exp, coeff] : acc)
    if (coeff != 0) out.terms.push_back({exp, coeff});
  return out;
}

SparsePoly SparsePoly::linear_form(std::span<const std::uint16_t> coeffs) {
  SparsePoly out;
  out.vars = static_cast<int>(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    Term t;
    t.exp.assign(coeffs.size(), 0);
    t.exp[k] = 1;
    t.coeff = coeffs[k];
    out.terms.push_back(std::move(t));
  }
  return out;
}

bool SparsePoly::is_homogeneous(int* degree) const {
  int deg = -1;
  for (const auto& term : terms) {
    int d = 0;
    for (int e : term.exp) d += e;
    if (deg == -1)
      deg = d;
    else if (d != deg)
      return false;
  }
  if (degree != nullptr) *degree = deg;
  return true;
}

std::uint16_t SparsePoly::evaluate(std::span<const std::uint16_t> point,
                                   const FiniteField& F) const {
  if (point.size() != static_cast<std::size_t>(vars))
    throw std::invalid_argument("point dimension does not match variable count");
  std::uint16_t acc = 0;
  for (const auto& term : terms) {
    std::uint16_t v = term.coeff;
    for (std::size_t c = 0; c < point.size(); ++c)
      if (term.exp[c] != 0) v = F.mul(v, F.pow(point[c], term.exp[c]));
    acc = F.add(acc, v);
  }
  return acc;
}

SparsePoly pullback(const SparsePoly& form, const Graph& g, const FiniteField& F) {
  if (form.vars != g.edge_count())
    throw std::invalid_argument("form has " + std::to_string(form.vars) +
                                " variables, graph has " + std::to_string(g.edge_count()) +
                                " edges");
  if (!form.is_homogeneous()) throw std::invalid_argument("pullback requires a homogeneous form");

  const auto& edges = g.edges();
  std::vector<SparsePoly::Term> raw;
  raw.reserve(form.terms.size());
  for (const auto& term : form.terms) {
    SparsePoly::Term out;
    out.coeff = term.coeff;
    out.exp.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const int e = term.exp[k];
      if (e == 0) continue;
      out.exp[static_cast<std::size_t>(edges[k].first) - 1] += e;
      out.exp[static_cast<std::size_t>(edges[k].second) - 1] += e;
    }
    raw.push_back(std::move(out));
  }
  return SparsePoly::from_terms(g.vertex_count(), std::move(raw), F);
}

std::uint64_t z_count(std::span<const SparsePoly> polys, int vars, const FiniteField& F,
                      const Budget& budget) {
  check_vars(polys, vars);
  const std::uint64_t total = checked_tuple_count(vars, F, budget, "unit tuple enumeration");
  const auto ranges = detail::split_ranges(total, budget.workers);
  if (ranges.size() == 1) return z_count_range(polys, vars, F, 0, total);

  std::vector<std::uint64_t> local(ranges.size(), 0);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < ranges.size(); ++w)
    pool.emplace_back([&, w] {
      local[w] = z_count_range(polys, vars, F, ranges[w].first, ranges[w].second);
    });
  for (auto& t : pool) t.join();
  std::uint64_t count = 0;
  for (auto v : local) count += v;
  return count;
}

std::uint64_t z_count_reference(std::span<const SparsePoly> polys, int vars,
                                const FiniteField& F, const Budget& budget) {
  check_vars(polys, vars);
  const std::uint64_t total = checked_tuple_count(vars, F, budget, "unit tuple enumeration");
  const std::uint32_t units = F.order() - 1;
  const std::size_t nv = static_cast<std::size_t>(vars);

  std::vector<std::uint32_t> digit(nv, 0);
  std::vector<std::uint16_t> x(nv, 1);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    bool all_zero = true;
    for (const auto& p : polys)
      if (p.evaluate(x, F) != 0) {
        all_zero = false;
        break;
      }
    count += all_zero;
    for (std::size_t v = 0; v < nv; ++v) {
      if (++digit[v] < units) {
        x[v] = static_cast<std::uint16_t>(digit[v] + 1);
        break;
      }
      digit[v] = 0;
      x[v] = 1;
    }
  }
  return count;
}

std::uint64_t zeros_on_X(const SparsePoly& form, const ToricSet& X) {
  if (form.vars != static_cast<int>(X.coord_count()))
    throw std::invalid_argument("form variable count does not match point coordinates");
  const FiniteField& F = X.field();
  std::uint64_t count = 0;
  for (std::size_t j = 0; j < X.size(); ++j) count += (form.evaluate(X.point(j), F) == 0);
  return count;
}

std::uint64_t zeros_on_X(std::span<const std::uint16_t> linear_coeffs, const ToricSet& X) {
  if (linear_coeffs.size() != X.coord_count())
    throw std::invalid_argument("coefficient count does not match point coordinates");
  const FiniteField& F = X.field();
  std::uint64_t count = 0;
  for (std::size_t j = 0; j < X.size(); ++j) {
    const auto pt = X.point(j);
    std::uint16_t acc = 0;
    for (std::size_t c = 0; c < linear_coeffs.size(); ++c)
      acc = F.add(acc, F.mul(linear_coeffs[c], pt[c]));
    count += (acc == 0);
  }
  return count;
}

namespace {

struct LocalMax {
  std::uint64_t max = 0;
  bool seen = false;
  std::vector<std::vector<std::uint16_t>> argmax;
  std::uint64_t scanned = 0;
};

// Projective linear forms with global index lo..hi: leading coefficient 1 at
// position `lead`, zeros before it, free tail after it. Point evaluations are
// maintained incrementally across odometer steps.
void max_zeros_range(const ToricSet& X, FormClass cls, std::uint64_t lo, std::uint64_t hi,
                     LocalMax& out) {
  const FiniteField& F = X.field();
  const std::uint32_t q = F.order();
  const std::size_t s = X.coord_count(), m = X.size();

  std::vector<std::uint64_t> block(s);  // block[i] = q^(s-1-i)
  block[s - 1] = 1;
  for (std::size_t i = s - 1; i-- > 0;) block[i] = block[i + 1] * q;

  std::size_t lead = 0;
  std::uint64_t offset = lo;
  while (lead < s && offset >= block[lead]) {
    offset -= block[lead];
    ++lead;
  }

  std::uint64_t remaining = hi - lo;
  std::vector<std::uint16_t> vals(m);
  std::vector<std::uint32_t> digit;  // digit[j] is the coefficient at position s-1-j

  auto add_coeff = [&](std::size_t pos, std::uint16_t delta) {
    for (std::size_t j = 0; j < m; ++j) vals[j] = F.add(vals[j], F.mul(delta, X.point(j)[pos]));
  };

  while (remaining > 0 && lead < s) {
    const std::size_t tails = s - 1 - lead;
    digit.assign(tails, 0);
    std::uint64_t t = offset;
    for (std::size_t j = 0; j < tails; ++j) {
      digit[j] = static_cast<std::uint32_t>(t % q);
      t /= q;
    }
    for (std::size_t j = 0; j < m; ++j) vals[j] = X.point(j)[lead];
    for (std::size_t j = 0; j < tails; ++j)
      if (digit[j] != 0) add_coeff(s - 1 - j, static_cast<std::uint16_t>(digit[j]));

    const std::uint64_t steps = std::min(block[lead] - offset, remaining);
    for (std::uint64_t done = 0; done < steps; ++done) {
      bool in_class = true;
      if (cls != FormClass::all) {
        bool has_zero = lead > 0;
        if (!has_zero)
          for (std::size_t j = 0; j < tails; ++j)
            if (digit[j] == 0) {
              has_zero = true;
              break;
            }
        in_class = (cls == FormClass::incomplete) ? has_zero : !has_zero;
      }
      if (in_class) {
        ++out.scanned;
        std::uint64_t zeros = 0;
        for (std::size_t j = 0; j < m; ++j) zeros += (vals[j] == 0);
        if (!out.seen || zeros > out.max) {
          out.seen = true;
          out.max = zeros;
          out.argmax.clear();
        }
        if (zeros == out.max) {
          std::vector<std::uint16_t> coeffs(s, 0);
          coeffs[lead] = 1;
          for (std::size_t j = 0; j < tails; ++j)
            coeffs[s - 1 - j] = static_cast<std::uint16_t>(digit[j]);
          out.argmax.push_back(std::move(coeffs));
        }
      }
      if (done + 1 < steps) {
        for (std::size_t j = 0; j < tails; ++j) {
          const std::uint16_t old = static_cast<std::uint16_t>(digit[j]);
          if (++digit[j] < q) {
            add_coeff(s - 1 - j, F.sub(static_cast<std::uint16_t>(digit[j]), old));
            break;
          }
          digit[j] = 0;
          add_coeff(s - 1 - j, F.neg(old));
        }
      }
    }
    remaining -= steps;
    offset = 0;
    ++lead;
  }
}

}  // namespace

MaxZerosResult max_zeros_search(const ToricSet& X, FormClass cls, const Budget& budget) {
  const std::uint32_t q = X.field().order();
  const std::size_t s = X.coord_count();
  Int total = 0, power = 1;
  for (std::size_t i = 0; i < s; ++i) {
    total += power;
    power *= q;
  }
  if (total > budget.ops) throw BudgetExceeded("projective form enumeration", total, budget.ops);
  const std::uint64_t total64 = static_cast<std::uint64_t>(total);

  const auto ranges = detail::split_ranges(total64, budget.workers);
  std::vector<LocalMax> local(ranges.size());
  if (ranges.size() == 1) {
    max_zeros_range(X, cls, ranges[0].first, ranges[0].second, local[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < ranges.size(); ++w)
      pool.emplace_back(
          [&, w] { max_zeros_range(X, cls, ranges[w].first, ranges[w].second, local[w]); });
    for (auto& t : pool) t.join();
  }

  MaxZerosResult out;
  bool seen = false;
  for (const auto& part : local) {
    out.forms_scanned += part.scanned;
    if (!part.seen) continue;
    if (!seen || part.max > out.max) {
      seen = true;
      out.max = part.max;
      out.maximizers.clear();
    }
    if (part.max == out.max)
      out.maximizers.insert(out.maximizers.end(), part.argmax.begin(), part.argmax.end());
  }
  if (!seen) throw std::invalid_argument("no forms in the requested class");
  std::sort(out.maximizers.begin(), out.maximizers.end());
  return out;
}

}  // namespace toricode
