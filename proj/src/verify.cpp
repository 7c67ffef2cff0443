#include "toricode/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "toricode/eval_code.hpp"
#include "toricode/formulas.hpp"
#include "toricode/graph.hpp"
#include "toricode/specs.hpp"
#include "toricode/toric_set.hpp"
#include "toricode/zeros.hpp"

namespace toricode {
namespace {

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

// Deterministic per-scenario stream: the seed flag mixed with the scenario id.
std::mt19937_64 rng_for(const VerifyConfig& cfg, const std::string& id) {
  return std::mt19937_64(cfg.seed * 0x9E3779B97F4A7C15ull + fnv1a(id));
}

Budget inner_budget(const VerifyConfig& cfg) { return Budget{cfg.budget_ops, 1}; }

std::string istr(const Int& v) { return v.str(); }
std::string istr(std::uint64_t v) { return std::to_string(v); }
std::string istr(int v) { return std::to_string(v); }

CheckResult make_check(std::string name, std::string exp_src, std::string exp_val,
                       std::string comp_src, std::string comp_val, double ms = 0.0) {
  CheckResult c;
  c.name = std::move(name);
  c.expected_source = std::move(exp_src);
  c.expected_value = std::move(exp_val);
  c.computed_source = std::move(comp_src);
  c.computed_value = std::move(comp_val);
  c.pass = (c.expected_value == c.computed_value);
  c.wall_ms = ms;
  return c;
}

FieldPtr field_of(std::uint32_t q) {
  return std::make_shared<FiniteField>(FiniteField::of_order(q));
}

std::string serialize_forms(const std::vector<std::vector<std::uint16_t>>& forms) {
  std::ostringstream os;
  for (const auto& f : forms) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << ';';
  }
  return os.str();
}

std::string form_set_summary(const std::vector<std::vector<std::uint16_t>>& forms) {
  std::ostringstream os;
  os << "count=" << forms.size() << " fnv=" << std::hex << fnv1a(serialize_forms(forms));
  return os.str();
}

// All projective linear forms in s variables over F (first nonzero coefficient
// fixed to 1), optionally restricted to one support class.
std::vector<std::vector<std::uint16_t>> projective_forms(std::size_t s, const FiniteField& F,
                                                         FormClass cls) {
  const std::uint32_t q = F.order();
  std::vector<std::vector<std::uint16_t>> out;
  std::vector<std::uint16_t> coeffs(s, 0);
  for (std::size_t lead = 0; lead < s; ++lead) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    coeffs[lead] = 1;
    const std::size_t tails = s - 1 - lead;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < tails; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      bool has_zero = lead > 0;
      for (std::size_t j = 0; j < tails; ++j) {
        coeffs[lead + 1 + j] = static_cast<std::uint16_t>(t % q);
        if (coeffs[lead + 1 + j] == 0) has_zero = true;
        t /= q;
      }
      if (cls == FormClass::incomplete && !has_zero) continue;
      if (cls == FormClass::complete && has_zero) continue;
      out.push_back(coeffs);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- length suite ----------------------------------------------------------

Scenario length_scenario(std::string id, std::string graph_spec, Graph g, std::uint32_t q,
                         bool gated, bool torus_check) {
  Scenario s;
  s.id = std::move(id);
  s.suite = "length";
  s.graph = std::move(graph_spec);
  s.field = FiniteField::of_order(q).spec_string();
  s.gated = gated;
  s.run = [g = std::move(g), q, torus_check](const VerifyConfig& cfg) {
    std::vector<CheckResult> checks;
    auto F = field_of(q);
    const Int expected = expected_length(g, *F);
    Timer t;
    const ToricSet X = enumerate_points(g, F, inner_budget(cfg));
    checks.push_back(make_check("cardinality", "length_formula", istr(expected), "enumeration",
                                istr(X.size()), t.ms()));
    if (torus_check) {
      const Int torus = pow_int(Int(q) - 1, g.edge_count() - 1);
      checks.push_back(
          make_check("torus_cardinality", "torus_formula", istr(torus), "enumeration",
                     istr(X.size())));
    }
    return checks;
  };
  return s;
}

void add_length_scenarios(std::vector<Scenario>& out) {
  for (int n : {4, 6, 8, 10})
    for (std::uint32_t q : {3u, 4u, 5u})
      out.push_back(length_scenario("length/cycle" + std::to_string(n) + "_q" + std::to_string(q),
                                    "cycle:" + std::to_string(n), cycle_graph(n), q, true, false));
  for (int e : {1, 2, 3, 4})
    for (std::uint32_t q : {3u, 4u, 5u})
      out.push_back(length_scenario("length/path" + std::to_string(e) + "_q" + std::to_string(q),
                                    "path:" + std::to_string(e), path_graph(e), q, true, true));
  for (int n : {3, 5})
    for (std::uint32_t q : {3u, 5u})
      out.push_back(length_scenario("length/cycle" + std::to_string(n) + "_q" + std::to_string(q),
                                    "cycle:" + std::to_string(n), cycle_graph(n), q, true, true));
  for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}})
    for (std::uint32_t q : {3u, 4u})
      out.push_back(length_scenario("length/kbip" + std::to_string(a) + "x" + std::to_string(b) +
                                        "_q" + std::to_string(q),
                                    "kbip:" + std::to_string(a) + "," + std::to_string(b),
                                    complete_bipartite(a, b), q, true, false));

  // Mixed cases under the formula's open reading: reported, never gated.
  for (int n : {3, 5})
    out.push_back(length_scenario("length/cycle" + std::to_string(n) + "_q4",
                                  "cycle:" + std::to_string(n), cycle_graph(n), 4, false, true));
  for (std::uint32_t q : {3u, 4u})
    out.push_back(length_scenario("length/union_c3c4_q" + std::to_string(q),
                                  "union(cycle:3,cycle:4)",
                                  disjoint_union(cycle_graph(3), cycle_graph(4)), q, false,
                                  false));
}

// ---- lemma-path suite ------------------------------------------------------

void add_lemma_path_scenarios(std::vector<Scenario>& out) {
  for (auto [k, q] : {std::pair{2, 3u}, std::pair{2, 4u}, std::pair{3, 3u}}) {
    for (int r = 2; r <= 2 * k; ++r) {
      Scenario s;
      s.id = "lemma-path/k" + std::to_string(k) + "q" + std::to_string(q) + "r" +
             std::to_string(r);
      s.suite = "lemma-path";
      s.graph = "cycle:" + std::to_string(2 * k);
      s.field = std::to_string(q);
      s.run = [k = k, q = q, r, id = s.id](const VerifyConfig& cfg) {
        auto F = field_of(q);
        const Int expected = path_zero_count(r, q, k);
        auto rng = rng_for(cfg, id);
        Timer t;
        std::vector<std::uint64_t> counts;
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
          counts.push_back(z_count({&g, 1}, 2 * k, *F, inner_budget(cfg)));
        }
        bool uniform = true;
        for (auto c : counts) uniform = uniform && (c == counts.front());
        std::string computed =
            uniform ? istr(counts.front()) : "coefficient-dependent counts";
        std::vector<CheckResult> checks;
        checks.push_back(make_check("count_matches_formula", "path_zero_count", istr(expected),
                                    "z_count over 20 coefficient draws", std::move(computed),
                                    t.ms()));
        return checks;
      };
      out.push_back(std::move(s));
    }
  }
}

// ---- proposition suites ----------------------------------------------------

constexpr std::pair<int, std::uint32_t> kPropGrid[] = {{2, 3u}, {2, 4u}, {2, 5u}, {3, 3u}};
constexpr std::pair<int, std::uint32_t> kKernelGrid[] = {{2, 3u}, {2, 4u}, {3, 3u}};

Scenario kernel_scenario(int k, std::uint32_t q, FormClass cls, const std::string& suite) {
  Scenario s;
  s.id = suite + "/kernel_k" + std::to_string(k) + "q" + std::to_string(q);
  s.suite = suite;
  s.graph = "cycle:" + std::to_string(2 * k);
  s.field = std::to_string(q);
  s.degree = 1;
  s.run = [k, q, cls](const VerifyConfig& cfg) {
    auto F = field_of(q);
    const Graph g = cycle_graph(2 * k);
    Timer t;
    const ToricSet X = enumerate_points(g, F, inner_budget(cfg));
    const auto forms = projective_forms(static_cast<std::size_t>(2 * k), *F, cls);
    const std::uint64_t square = static_cast<std::uint64_t>(q - 1) * (q - 1);
    std::uint64_t holds = 0;
    for (const auto& coeffs : forms) {
      const std::uint64_t on_x = zeros_on_X(coeffs, X);
      const SparsePoly f = pullback(SparsePoly::linear_form(coeffs), g, *F);
      const std::uint64_t on_torus = z_count({&f, 1}, g.vertex_count(), *F, inner_budget(cfg));
      if (on_x * square == on_torus) ++holds;
    }
    std::vector<CheckResult> checks;
    checks.push_back(make_check("kernel_identity_all_forms", "form count", istr(forms.size()),
                                "forms with zeros_on_X*(q-1)^2 == z_count(pullback)",
                                istr(holds), t.ms()));
    return checks;
  };
  return s;
}

void add_prop_incomplete_scenarios(std::vector<Scenario>& out) {
  for (auto [k, q] : kPropGrid) {
    Scenario s;
    s.id = "prop-incomplete/k" + std::to_string(k) + "q" + std::to_string(q);
    s.suite = "prop-incomplete";
    s.graph = "cycle:" + std::to_string(2 * k);
    s.field = std::to_string(q);
    s.degree = 1;
    s.run = [k = k, q = q](const VerifyConfig& cfg) {
      auto F = field_of(q);
      const ToricSet X = enumerate_points(cycle_graph(2 * k), F, inner_budget(cfg));
      const Int bound = incomplete_max(k, q);
      Timer t;
      const MaxZerosResult res = max_zeros_search(X, FormClass::incomplete, inner_budget(cfg));
      std::vector<CheckResult> checks;
      checks.push_back(make_check("max_zeros", "incomplete_max", istr(bound),
                                  "exhaustive form search", istr(res.max), t.ms()));
      std::vector<std::uint16_t> witness(static_cast<std::size_t>(2 * k), 0);
      witness[0] = 1;
      witness[1] = F->neg(1);
      checks.push_back(make_check("witness_t1_minus_t2", "incomplete_max", istr(bound),
                                  "zeros of t1 - t2 on X", istr(zeros_on_X(witness, X))));
      return checks;
    };
    out.push_back(std::move(s));
  }
  for (auto [k, q] : kKernelGrid)
    out.push_back(kernel_scenario(k, q, FormClass::incomplete, "prop-incomplete"));
}

void add_prop_complete_scenarios(std::vector<Scenario>& out) {
  for (auto [k, q] : kPropGrid) {
    Scenario s;
    s.id = "prop-complete/k" + std::to_string(k) + "q" + std::to_string(q);
    s.suite = "prop-complete";
    s.graph = "cycle:" + std::to_string(2 * k);
    s.field = std::to_string(q);
    s.degree = 1;
    s.run = [k = k, q = q](const VerifyConfig& cfg) {
      auto F = field_of(q);
      const ToricSet X = enumerate_points(cycle_graph(2 * k), F, inner_budget(cfg));
      const Int bound = complete_max(k, q);
      Timer t;
      const MaxZerosResult res = max_zeros_search(X, FormClass::complete, inner_budget(cfg));
      std::vector<CheckResult> checks;
      checks.push_back(make_check("max_zeros", "complete_max", istr(bound),
                                  "exhaustive form search", istr(res.max), t.ms()));

      std::vector<std::vector<std::uint16_t>> predicted;
      for (const auto& coeffs : projective_forms(static_cast<std::size_t>(2 * k), *F,
                                                 FormClass::complete))
        if (equality_condition(coeffs, *F)) predicted.push_back(coeffs);
      checks.push_back(make_check("argmax_set_equals_equality_condition", "equality_condition",
                                  form_set_summary(predicted), "exhaustive argmax set",
                                  form_set_summary(res.maximizers)));
      return checks;
    };
    out.push_back(std::move(s));
  }
  for (auto [k, q] : kKernelGrid)
    out.push_back(kernel_scenario(k, q, FormClass::complete, "prop-complete"));
}

// ---- theorem suite ---------------------------------------------------------

void add_theorem_scenarios(std::vector<Scenario>& out) {
  constexpr std::pair<int, std::uint32_t> grid[] = {{2, 3u}, {2, 4u}, {2, 5u}, {3, 3u},
                                                    {3, 4u}, {4, 3u}, {4, 4u}, {5, 3u}};
  for (auto [k, q] : grid) {
    Scenario s;
    s.id = "theorem/k" + std::to_string(k) + "q" + std::to_string(q);
    s.suite = "theorem";
    s.graph = "cycle:" + std::to_string(2 * k);
    s.field = std::to_string(q);
    s.degree = 1;
    s.run = [k = k, q = q](const VerifyConfig& cfg) {
      auto F = field_of(q);
      std::vector<CheckResult> checks;
      Timer t_pts;
      const ToricSet X = enumerate_points(cycle_graph(2 * k), F, inner_budget(cfg));
      checks.push_back(make_check("length", "cycle_length_formula",
                                  istr(pow_int(Int(q) - 1, 2 * k - 2)), "enumeration",
                                  istr(X.size()), t_pts.ms()));
      Timer t_code;
      const LinearCode code = code_from(X, 1, inner_budget(cfg));
      checks.push_back(make_check("dimension", "dimension_formula", istr(2 * k), "matrix rank",
                                  istr(code.dimension), t_code.ms()));
      Timer t_md;
      const std::uint64_t md = minimum_distance(code, inner_budget(cfg));
      checks.push_back(make_check("min_distance", "theorem_formula",
                                  istr(cycle_min_distance(k, q)), "exhaustive search", istr(md),
                                  t_md.ms()));
      return checks;
    };
    out.push_back(std::move(s));
  }

  {
    Scenario s;
    s.id = "theorem/delta_spot_values";
    s.suite = "theorem";
    s.run = [](const VerifyConfig&) {
      std::vector<CheckResult> checks;
      checks.push_back(make_check("delta_4_3", "pinned_constant", "-17", "delta",
                                  istr(delta(4, 3))));
      checks.push_back(make_check("delta_4_4", "pinned_constant", "217", "delta",
                                  istr(delta(4, 4))));
      return checks;
    };
    out.push_back(std::move(s));
  }
  {
    Scenario s;
    s.id = "theorem/delta_recurrence";
    s.suite = "theorem";
    s.run = [](const VerifyConfig&) {
      int holds = 0, cells = 0;
      for (int k = 3; k <= 8; ++k)
        for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
          ++cells;
          const Int lhs = delta(k, q);
          const Int rhs = pow_int(Int(q) - 1, 2) * delta(k - 1, q) +
                          (Int(q) * q - 3 * Int(q) + 1) * pow_int(Int(q), k - 1) * (Int(q) - 2);
          if (lhs == rhs) ++holds;
        }
      std::vector<CheckResult> checks;
      checks.push_back(make_check("recurrence_identity", "grid size", istr(cells),
                                  "cells where delta(k,q) == (q-1)^2 delta(k-1,q) + "
                                  "(q^2-3q+1) q^(k-1) (q-2)",
                                  istr(holds)));
      return checks;
    };
    out.push_back(std::move(s));
  }
  {
    Scenario s;
    s.id = "theorem/branch_agreement";
    s.suite = "theorem";
    s.run = [](const VerifyConfig&) {
      int agree = 0, cells = 0;
      for (int k = 2; k <= 8; ++k)
        for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
          ++cells;
          if (theorem_branch(k, q) == branch_predicate(k, q)) ++agree;
        }
      std::vector<CheckResult> checks;
      checks.push_back(make_check("case_list_matches_sign_delta", "grid size", istr(cells),
                                  "cells where the case list agrees with sign(delta)",
                                  istr(agree)));
      return checks;
    };
    out.push_back(std::move(s));
  }
}

// ---- regularity suite ------------------------------------------------------

void add_regularity_scenarios(std::vector<Scenario>& out) {
  for (auto [k, q] : {std::pair{2, 3u}, std::pair{2, 4u}, std::pair{3, 3u}}) {
    Scenario s;
    s.id = "regularity/k" + std::to_string(k) + "q" + std::to_string(q);
    s.suite = "regularity";
    s.graph = "cycle:" + std::to_string(2 * k);
    s.field = std::to_string(q);
    s.run = [k = k, q = q](const VerifyConfig& cfg) {
      auto F = field_of(q);
      const ToricSet X = enumerate_points(cycle_graph(2 * k), F, inner_budget(cfg));
      Timer t;
      const int reg = regularity_index(X, inner_budget(cfg));
      std::vector<CheckResult> checks;
      checks.push_back(make_check("regularity_index", "even_cycle_regularity",
                                  istr(even_cycle_regularity(k, q)), "rank saturation probe",
                                  istr(reg), t.ms()));
      return checks;
    };
    out.push_back(std::move(s));
  }
  struct TorusReg {
    int edges;
    std::uint32_t q;
  };
  for (TorusReg c : {TorusReg{1, 3u}, TorusReg{1, 4u}, TorusReg{1, 5u}, TorusReg{2, 4u}}) {
    Scenario s;
    s.id = "regularity/torus_p" + std::to_string(c.edges + 1) + "_q" + std::to_string(c.q);
    s.suite = "regularity";
    s.graph = "path:" + std::to_string(c.edges);
    s.field = std::to_string(c.q);
    s.run = [c](const VerifyConfig& cfg) {
      auto F = field_of(c.q);
      const ToricSet X = enumerate_points(path_graph(c.edges), F, inner_budget(cfg));
      Timer t;
      const int reg = regularity_index(X, inner_budget(cfg));
      const Int expected = Int(c.edges - 1) * (Int(c.q) - 2);  // (s-1)(q-2)
      std::vector<CheckResult> checks;
      checks.push_back(make_check("regularity_index", "torus_regularity_formula", istr(expected),
                                  "rank saturation probe", istr(reg), t.ms()));
      return checks;
    };
    out.push_back(std::move(s));
  }
}

// ---- torus suite -----------------------------------------------------------

void add_torus_scenarios(std::vector<Scenario>& out) {
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    Scenario s;
    s.id = "torus/square_identity_q" + std::to_string(q);
    s.suite = "torus";
    s.field = std::to_string(q);
    s.run = [q](const VerifyConfig&) {
      const Int torus = torus_min_distance(2, q, 1);
      std::vector<CheckResult> checks;
      checks.push_back(make_check("k2_distance_is_torus_square", "theorem_formula",
                                  istr(cycle_min_distance(2, q)), "torus_formula_squared",
                                  istr(torus * torus)));
      return checks;
    };
    out.push_back(std::move(s));
  }
  struct TorusCell {
    int edges;
    std::uint32_t q;
    int d;
  };
  for (TorusCell c : {TorusCell{2, 3u, 1}, TorusCell{2, 4u, 1}, TorusCell{3, 3u, 1},
                      TorusCell{2, 5u, 2}}) {
    Scenario s;
    s.id = "torus/mindist_s" + std::to_string(c.edges) + "_q" + std::to_string(c.q) + "_d" +
           std::to_string(c.d);
    s.suite = "torus";
    s.graph = "path:" + std::to_string(c.edges);
    s.field = std::to_string(c.q);
    s.degree = c.d;
    s.run = [c](const VerifyConfig& cfg) {
      auto F = field_of(c.q);
      const ToricSet X = enumerate_points(path_graph(c.edges), F, inner_budget(cfg));
      Timer t;
      const LinearCode code = code_from(X, c.d, inner_budget(cfg));
      const std::uint64_t md = minimum_distance(code, inner_budget(cfg));
      std::vector<CheckResult> checks;
      checks.push_back(make_check("min_distance", "torus_formula",
                                  istr(torus_min_distance(c.edges, c.q, c.d)),
                                  "exhaustive search", istr(md), t.ms()));
      return checks;
    };
    out.push_back(std::move(s));
  }
}

ScenarioResult run_scenario(const Scenario& s, const VerifyConfig& cfg) {
  ScenarioResult r;
  r.id = s.id;
  r.suite = s.suite;
  r.graph = s.graph;
  r.field = s.field;
  r.degree = s.degree;
  r.gated = s.gated;
  Timer t;
  if (cfg.budget_ops == 0) {
    r.status = "skipped";
    r.note = "budget 0";
    r.wall_ms = t.ms();
    return r;
  }
  try {
    r.checks = s.run(cfg);
    bool all = true;
    for (const auto& c : r.checks) all = all && c.pass;
    if (s.gated) {
      r.status = all ? "pass" : "fail";
    } else {
      r.status = "report";
      r.note = all ? "all comparisons agree" : "comparisons disagree (not gated)";
    }
  } catch (const BudgetExceeded& e) {
    r.status = "skipped";
    r.note = e.what();
  } catch (const std::exception& e) {
    r.status = s.gated ? "fail" : "report";
    r.note = std::string("error: ") + e.what();
  }
  r.wall_ms = t.ms();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "length", "lemma-path", "prop-incomplete", "prop-complete",
      "theorem", "regularity", "torus"};
  return names;
}

std::vector<Scenario> scenarios_for(const std::string& suite) {
  std::vector<Scenario> out;
  auto add = [&out](const std::string& name) {
    if (name == "length")
      add_length_scenarios(out);
    else if (name == "lemma-path")
      add_lemma_path_scenarios(out);
    else if (name == "prop-incomplete")
      add_prop_incomplete_scenarios(out);
    else if (name == "prop-complete")
      add_prop_complete_scenarios(out);
    else if (name == "theorem")
      add_theorem_scenarios(out);
    else if (name == "regularity")
      add_regularity_scenarios(out);
    else if (name == "torus")
      add_torus_scenarios(out);
    else
      throw std::invalid_argument("unknown suite '" + name + "'");
  };
  if (suite == "all")
    for (const auto& name : suite_names()) add(name);
  else
    add(suite);
  return out;
}

Report run_suite(const std::string& suite, const VerifyConfig& cfg) {
  const std::vector<Scenario> scenarios = scenarios_for(suite);
  Report report;
  report.suite = suite;
  report.seed = cfg.seed;
  report.budget_ops = cfg.budget_ops;
  report.workers = cfg.workers;
  report.scenarios.resize(scenarios.size());

  if (cfg.workers <= 1) {
    for (std::size_t i = 0; i < scenarios.size(); ++i)
      report.scenarios[i] = run_scenario(scenarios[i], cfg);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= scenarios.size()) return;
        report.scenarios[i] = run_scenario(scenarios[i], cfg);
      }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(cfg.workers, static_cast<unsigned>(scenarios.size()));
    for (unsigned w = 0; w < count; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const auto& r : report.scenarios) {
    if (r.status == "pass")
      ++report.passed;
    else if (r.status == "fail")
      ++report.failed;
    else if (r.status == "skipped")
      ++report.skipped;
    else
      ++report.report_only;
  }
  return report;
}

nlohmann::json report_json(const Report& report) {
  nlohmann::json scenarios = nlohmann::json::array();
  for (const auto& r : report.scenarios) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name},
                        {"expected", {{"source", c.expected_source}, {"value", c.expected_value}}},
                        {"computed", {{"source", c.computed_source}, {"value", c.computed_value}}},
                        {"pass", c.pass},
                        {"wall_ms", c.wall_ms}});
    nlohmann::json s = {{"id", r.id},       {"suite", r.suite},   {"graph", r.graph},
                        {"field", r.field}, {"gated", r.gated},   {"status", r.status},
                        {"note", r.note},   {"wall_ms", r.wall_ms}, {"checks", std::move(checks)}};
    if (r.degree >= 0) s["d"] = r.degree;
    scenarios.push_back(std::move(s));
  }
  return {{"suite", report.suite},
          {"seed", report.seed},
          {"budget", report.budget_ops},
          {"workers", report.workers},
          {"scenarios", std::move(scenarios)},
          {"summary",
           {{"total", report.scenarios.size()},
            {"passed", report.passed},
            {"failed", report.failed},
            {"skipped", report.skipped},
            {"report_only", report.report_only}}}};
}

void print_report_table(const Report& report, std::ostream& out) {
  out << std::left << std::setw(9) << "STATUS" << std::setw(34) << "SCENARIO" << std::setw(9)
      << "MS" << "DETAIL\n";
  for (const auto& r : report.scenarios) {
    std::string detail;
    if (r.status == "pass") {
      detail = std::to_string(r.checks.size()) + " checks";
    } else if (r.status == "fail") {
      for (const auto& c : r.checks)
        if (!c.pass) {
          detail = c.name + ": expected " + c.expected_value + ", got " + c.computed_value;
          break;
        }
      if (detail.empty()) detail = r.note;
    } else {
      detail = r.note;
    }
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << r.wall_ms;
    out << std::left << std::setw(9) << r.status << std::setw(34) << r.id << std::setw(9)
        << ms.str() << detail << '\n';
  }
  out << report.passed << " passed, " << report.failed << " failed, " << report.skipped
      << " skipped, " << report.report_only << " report-only\n";
}

int report_exit_code(const Report& report, bool strict) {
  if (report.failed > 0) return 1;
  if (strict && report.skipped > 0) return 1;
  return 0;
}

ReplayResult replay_report(const nlohmann::json& saved, unsigned workers) {
  VerifyConfig cfg;
  cfg.budget_ops = saved.at("budget").get<std::uint64_t>();
  cfg.seed = saved.at("seed").get<std::uint64_t>();
  cfg.workers = workers;

  std::map<std::string, Scenario> registry;
  for (auto& s : scenarios_for("all")) registry.emplace(s.id, std::move(s));

  ReplayResult out;
  out.fresh.suite = saved.value("suite", "all") + " (replay)";
  out.fresh.seed = cfg.seed;
  out.fresh.budget_ops = cfg.budget_ops;
  out.fresh.workers = cfg.workers;

  for (const auto& rec : saved.at("scenarios")) {
    const std::string id = rec.at("id").get<std::string>();
    const auto it = registry.find(id);
    if (it == registry.end()) {
      out.mismatches.push_back(id + ": unknown scenario id");
      continue;
    }
    ScenarioResult fresh = run_scenario(it->second, cfg);
    if (fresh.status != rec.at("status").get<std::string>())
      out.mismatches.push_back(id + ": status " + fresh.status + " != " +
                               rec.at("status").get<std::string>());
    const auto& saved_checks = rec.at("checks");
    if (saved_checks.size() != fresh.checks.size()) {
      out.mismatches.push_back(id + ": check count differs");
    } else {
      for (std::size_t i = 0; i < fresh.checks.size(); ++i) {
        const auto& sc = saved_checks[i];
        const auto& fc = fresh.checks[i];
        if (sc.at("name").get<std::string>() != fc.name ||
            sc.at("expected").at("value").get<std::string>() != fc.expected_value ||
            sc.at("computed").at("value").get<std::string>() != fc.computed_value ||
            sc.at("pass").get<bool>() != fc.pass)
          out.mismatches.push_back(id + "/" + fc.name + ": values differ from saved report");
      }
    }
    out.fresh.scenarios.push_back(std::move(fresh));
  }
  for (const auto& r : out.fresh.scenarios) {
    if (r.status == "pass")
      ++out.fresh.passed;
    else if (r.status == "fail")
      ++out.fresh.failed;
    else if (r.status == "skipped")
      ++out.fresh.skipped;
    else
      ++out.fresh.report_only;
  }
  out.identical = out.mismatches.empty();
  return out;
}

}  // namespace toricode
