// Acceptance suite: every closed formula is checked against independent
// exhaustive enumeration, one line per criterion, exact integer equality
// everywhere. Exit code is the number of failed criteria.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "toricode/eval_code.hpp"
#include "toricode/formulas.hpp"
#include "toricode/graph.hpp"
#include "toricode/toric_set.hpp"
#include "toricode/zeros.hpp"

using namespace toricode;

namespace {

FieldPtr gf(std::uint32_t q) { return std::make_shared<FiniteField>(FiniteField::of_order(q)); }

struct Criterion {
  Criterion(int n, std::string what) : number(n), name(std::move(what)) {}

  int number;
  std::string name;
  bool pass = true;
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      problems.push_back(what);
    }
  }
};

std::vector<std::vector<std::uint16_t>> projective_forms(std::size_t s, std::uint32_t q) {
  std::vector<std::vector<std::uint16_t>> out;
  std::vector<std::uint16_t> coeffs(s, 0);
  std::function<void(std::size_t, bool)> walk = [&](std::size_t pos, bool lead) {
    if (pos == s) {
      if (lead) out.push_back(coeffs);
      return;
    }
    if (!lead) {
      coeffs[pos] = 0;
      walk(pos + 1, false);
      coeffs[pos] = 1;
      walk(pos + 1, true);
    } else {
      for (std::uint32_t v = 0; v < q; ++v) {
        coeffs[pos] = static_cast<std::uint16_t>(v);
        walk(pos + 1, true);
      }
    }
  };
  walk(0, false);
  return out;
}

struct CycleData {
  int k;
  std::uint32_t q;
  ToricSet X;
  LinearCode code;
  std::uint64_t min_distance;
};

constexpr std::pair<int, std::uint32_t> kTheoremGrid[] = {{2, 3u}, {2, 4u}, {2, 5u}, {3, 3u},
                                                          {3, 4u}, {4, 3u}, {4, 4u}, {5, 3u}};

}  // namespace

int main() {
  std::vector<Criterion> results;
  std::vector<CycleData> cells;

  for (auto [k, q] : kTheoremGrid) {
    ToricSet X = enumerate_points(cycle_graph(2 * k), gf(q));
    LinearCode code = code_from(X, 1);
    const std::uint64_t md = minimum_distance(code);
    cells.push_back({k, q, std::move(X), std::move(code), md});
  }

  // 1. Theorem reproduction: exhaustive minimum distance equals the formula.
  {
    Criterion c{1, "theorem minimum distance on the (k,q) grid"};
    for (const auto& cell : cells) {
      std::ostringstream tag;
      tag << "(k=" << cell.k << ",q=" << cell.q << ")";
      c.expect(Int(cell.min_distance) == cycle_min_distance(cell.k, cell.q),
               tag.str() + " exhaustive " + std::to_string(cell.min_distance) +
                   " != formula " + cycle_min_distance(cell.k, cell.q).str());
    }
    c.expect(cycle_min_distance(2, 4) == 4, "spot value (2,4) != 4");
    c.expect(cycle_min_distance(4, 3) == 29, "spot value (4,3) != 29");
    c.expect(cycle_min_distance(5, 3) == 128, "spot value (5,3) != 128");
    results.push_back(std::move(c));
  }

  // 2. Branch boundary and the delta recurrence.
  {
    Criterion c{2, "branch boundary and delta recurrence"};
    c.expect(delta(4, 3) == -17, "delta(4,3) != -17");
    c.expect(delta(4, 4) == 217, "delta(4,4) != 217");
    c.expect(theorem_branch(4, 3) == CycleBranch::complete_dominates, "(4,3) branch");
    c.expect(theorem_branch(4, 4) == CycleBranch::incomplete_dominates, "(4,4) branch");
    for (int k = 3; k <= 8; ++k)
      for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
        const Int rhs = pow_int(Int(q) - 1, 2) * delta(k - 1, q) +
                        (Int(q) * q - 3 * Int(q) + 1) * pow_int(Int(q), k - 1) * (Int(q) - 2);
        std::ostringstream tag;
        tag << "recurrence fails at (k=" << k << ",q=" << q << ")";
        c.expect(delta(k, q) == rhs, tag.str());
      }
    results.push_back(std::move(c));
  }

  // 3. Path lemma: z_count equals the closed form, independent of coefficients.
  {
    Criterion c{3, "path zero-count lemma over seeded coefficient draws"};
    for (auto [k, q] : {std::pair{2, 3u}, std::pair{2, 4u}, std::pair{3, 3u}}) {
      auto F = gf(q);
      for (int r = 2; r <= 2 * k; ++r) {
        const Int expected = path_zero_count(r, q, k);
        std::mt19937_64 rng(static_cast<std::uint64_t>(1000 * k + 10 * q + r));
        for (int draw = 0; draw < 20; ++draw) {
          std::vector<SparsePoly::Term> terms;
          for (int i = 0; i < r - 1; ++i) {
            SparsePoly::Term term;
            term.exp.assign(static_cast<std::size_t>(2 * k), 0);
            term.exp[static_cast<std::size_t>(i)] = 1;
            term.exp[static_cast<std::size_t>(i) + 1] = 1;
            term.coeff = static_cast<std::uint16_t>(rng() % (q - 1) + 1);
            terms.push_back(std::move(term));
          }
          const SparsePoly g = SparsePoly::from_terms(2 * k, std::move(terms), *F);
          const std::uint64_t count = z_count({&g, 1}, 2 * k, *F);
          std::ostringstream tag;
          tag << "(k=" << k << ",q=" << q << ",r=" << r << ") draw " << draw;
          c.expect(Int(count) == expected, tag.str());
        }
      }
    }
    results.push_back(std::move(c));
  }

  // 4. Kernel lemma: |Z(F) ∩ X| (q-1)^2 = z(pullback F) for every projective form.
  {
    Criterion c{4, "kernel identity over every projective linear form"};
    for (auto [k, q] : {std::pair{2, 3u}, std::pair{2, 4u}, std::pair{3, 3u}}) {
      auto F = gf(q);
      const Graph g = cycle_graph(2 * k);
      const ToricSet X = enumerate_points(g, F);
      const std::uint64_t square = static_cast<std::uint64_t>(q - 1) * (q - 1);
      for (const auto& alpha : projective_forms(static_cast<std::size_t>(2 * k), q)) {
        const SparsePoly f = pullback(SparsePoly::linear_form(alpha), g, *F);
        if (zeros_on_X(alpha, X) * square != z_count({&f, 1}, 2 * k, *F)) {
          std::ostringstream tag;
          tag << "(k=" << k << ",q=" << q << ") form failed";
          c.expect(false, tag.str());
          break;
        }
      }
    }
    results.push_back(std::move(c));
  }

  // 5. Propositions: searched maxima match the class formulas, witness attains
  //    the incomplete bound, and the complete argmax set is the equality set.
  {
    Criterion c{5, "per-class maxima, witness and argmax set"};
    for (auto [k, q] : {std::pair{2, 3u}, std::pair{2, 4u}, std::pair{2, 5u}, std::pair{3, 3u}}) {
      auto F = gf(q);
      const ToricSet X = enumerate_points(cycle_graph(2 * k), F);
      std::ostringstream tag;
      tag << "(k=" << k << ",q=" << q << ")";

      const MaxZerosResult inc = max_zeros_search(X, FormClass::incomplete);
      c.expect(Int(inc.max) == incomplete_max(k, q), tag.str() + " incomplete max");
      std::vector<std::uint16_t> witness(static_cast<std::size_t>(2 * k), 0);
      witness[0] = 1;
      witness[1] = F->neg(1);
      c.expect(Int(zeros_on_X(witness, X)) == incomplete_max(k, q),
               tag.str() + " witness t1 - t2");

      const MaxZerosResult comp = max_zeros_search(X, FormClass::complete);
      c.expect(Int(comp.max) == complete_max(k, q), tag.str() + " complete max");
      std::vector<std::vector<std::uint16_t>> predicted;
      for (const auto& alpha : projective_forms(static_cast<std::size_t>(2 * k), q)) {
        bool complete = true;
        for (auto a : alpha) complete = complete && (a != 0);
        if (complete && equality_condition(alpha, *F)) predicted.push_back(alpha);
      }
      c.expect(comp.maximizers == predicted, tag.str() + " argmax set != equality set");
    }
    results.push_back(std::move(c));
  }

  // 6. Length formula against enumeration.
  {
    Criterion c{6, "length formula on cycles, paths and complete bipartite graphs"};
    auto check = [&c](const std::string& tag, const Graph& g, std::uint32_t q) {
      const LengthCheck r = verify_length(g, gf(q));
      c.expect(r.match, tag + ": formula " + r.expected.str() + " != enumerated " +
                            std::to_string(r.enumerated));
    };
    for (int n : {4, 6, 8, 10})
      for (std::uint32_t q : {3u, 4u, 5u})
        check("C" + std::to_string(n) + "/q" + std::to_string(q), cycle_graph(n), q);
    for (int e : {1, 2, 3, 4})
      for (std::uint32_t q : {3u, 4u, 5u})
        check("P" + std::to_string(e + 1) + "/q" + std::to_string(q), path_graph(e), q);
    for (int n : {3, 5})
      for (std::uint32_t q : {3u, 5u})
        check("C" + std::to_string(n) + "/q" + std::to_string(q), cycle_graph(n), q);
    for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}})
      for (std::uint32_t q : {3u, 4u})
        check("K" + std::to_string(a) + "," + std::to_string(b) + "/q" + std::to_string(q),
              complete_bipartite(a, b), q);
    results.push_back(std::move(c));
  }

  // 7. Dimension 2k for every grid cell.
  {
    Criterion c{7, "dimension of C_X(1) equals 2k on the grid"};
    for (const auto& cell : cells) {
      std::ostringstream tag;
      tag << "(k=" << cell.k << ",q=" << cell.q << ") dim " << cell.code.dimension;
      c.expect(cell.code.dimension == static_cast<std::size_t>(2 * cell.k), tag.str());
    }
    results.push_back(std::move(c));
  }

  // 8. Regularity probe by rank saturation.
  {
    Criterion c{8, "regularity index for cycles and torus paths"};
    for (auto [k, q] : {std::pair{2, 3u}, std::pair{2, 4u}, std::pair{3, 3u}}) {
      const ToricSet X = enumerate_points(cycle_graph(2 * k), gf(q));
      std::ostringstream tag;
      tag << "C" << 2 * k << "/q" << q;
      c.expect(Int(regularity_index(X)) == even_cycle_regularity(k, q), tag.str());
    }
    for (std::uint32_t q : {3u, 4u, 5u}) {
      const ToricSet X = enumerate_points(path_graph(1), gf(q));
      c.expect(regularity_index(X) == 0, "P2/q" + std::to_string(q));  // (s-1)(q-2), s = 1
    }
    results.push_back(std::move(c));
  }

  // 9. Closing identity: the k=2 distance is the square of the T^1 distance.
  {
    Criterion c{9, "k=2 distance equals the squared torus distance"};
    for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
      const Int t = torus_min_distance(2, q, 1);
      c.expect(cycle_min_distance(2, q) == t * t, "q=" + std::to_string(q));
    }
    results.push_back(std::move(c));
  }

  // 10. Property suites: field axioms, Singleton bound, weight/zero duality.
  {
    Criterion c{10, "field axioms, Singleton bound, weight/zero duality"};
    for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
      const FiniteField F = FiniteField::of_order(q);
      bool ok = true;
      for (std::uint16_t a = 0; a < q && ok; ++a)
        for (std::uint16_t b = 0; b < q && ok; ++b)
          for (std::uint16_t e = 0; e < q && ok; ++e)
            ok = F.add(F.add(a, b), e) == F.add(a, F.add(b, e)) &&
                 F.mul(F.mul(a, b), e) == F.mul(a, F.mul(b, e)) &&
                 F.mul(a, F.add(b, e)) == F.add(F.mul(a, b), F.mul(a, e)) &&
                 F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a);
      for (std::uint16_t a = 1; a < q && ok; ++a) ok = F.mul(a, F.inv(a)) == 1;
      c.expect(ok, "field axioms fail for q=" + std::to_string(q));
    }
    for (const auto& cell : cells) {
      std::ostringstream tag;
      tag << "(k=" << cell.k << ",q=" << cell.q << ")";
      c.expect(cell.min_distance <= cell.code.length - cell.code.dimension + 1,
               tag.str() + " Singleton bound");

      const FiniteField& F = *cell.code.field;
      const std::size_t s = cell.X.coord_count();
      std::mt19937_64 rng(static_cast<std::uint64_t>(97 * cell.k + cell.q));
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::uint16_t> alpha(s);
        bool nonzero = false;
        for (auto& a : alpha) {
          a = static_cast<std::uint16_t>(rng() % cell.q);
          nonzero = nonzero || a != 0;
        }
        if (!nonzero) alpha[0] = 1;
        std::vector<std::uint16_t> w(cell.code.length, 0);
        for (std::size_t r = 0; r < s; ++r) {
          if (alpha[r] == 0) continue;
          for (std::size_t col = 0; col < cell.code.length; ++col)
            w[col] = F.add(w[col], F.mul(alpha[r], cell.code.generator.at(r, col)));
        }
        std::uint64_t weight = 0;
        for (auto v : w) weight += (v != 0);
        if (cell.code.length - weight != zeros_on_X(alpha, cell.X)) {
          c.expect(false, tag.str() + " weight/zero duality");
          break;
        }
      }
    }
    results.push_back(std::move(c));
  }

  int failures = 0;
  for (const auto& c : results) {
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name
              << '\n';
    if (!c.pass) {
      ++failures;
      for (const auto& p : c.problems) std::cout << "       " << p << '\n';
    }
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures;
}
