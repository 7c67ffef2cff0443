#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricode/eval_code.hpp"
#include "toricode/formulas.hpp"
#include "toricode/json_io.hpp"
#include "toricode/specs.hpp"
#include "toricode/toric_set.hpp"
#include "toricode/verify.hpp"
#include "toricode/zeros.hpp"

namespace {

using nlohmann::json;
using namespace toricode;

struct CommonOpts {
  std::string graph_spec;
  std::string field_spec;
  int degree = 1;
  std::uint64_t budget = Budget::kDefaultOps;
  unsigned workers = 1;
  bool as_json = false;
};

void add_graph_field(CLI::App* cmd, CommonOpts& o, bool with_degree) {
  cmd->add_option("--graph", o.graph_spec, "graph spec: cycle:N, path:N, kbip:A,B or @file")
      ->required();
  cmd->add_option("--field", o.field_spec, "field spec: prime power Q or P^E")->required();
  if (with_degree) cmd->add_option("--d", o.degree, "form degree")->capture_default_str();
  cmd->add_option("--budget", o.budget, "max enumeration steps per stage")->capture_default_str();
  cmd->add_option("--workers", o.workers, "worker threads")->capture_default_str();
}

Budget budget_of(const CommonOpts& o) { return Budget{o.budget, o.workers}; }

ToricSet points_of(const CommonOpts& o) {
  return enumerate_points(parse_graph_spec(o.graph_spec), parse_field_spec(o.field_spec),
                          budget_of(o));
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

int run(int argc, char** argv) {
  CLI::App app{"exact parameters and verification for graph-parameterized evaluation codes"};
  app.require_subcommand(1);

  // params
  CommonOpts params_opts;
  bool no_mindist = false, emit_matrix = false, matrix_text_only = false;
  auto* params = app.add_subcommand("params", "length, dimension and minimum distance of C_X(d)");
  add_graph_field(params, params_opts, true);
  params->add_flag("--no-mindist", no_mindist, "skip the exhaustive minimum distance");
  params->add_flag("--emit-matrix", emit_matrix, "include the generator matrix in the JSON");
  params->add_flag("--matrix-text", matrix_text_only, "print only the generator matrix as text");
  params->callback([&] {
    const ToricSet X = points_of(params_opts);
    const LinearCode code = code_from(X, params_opts.degree, budget_of(params_opts));
    if (matrix_text_only) {
      std::cout << matrix_text(code.generator);
      return;
    }
    json doc = {{"graph", params_opts.graph_spec},
                {"field", X.field().spec_string()},
                {"d", params_opts.degree},
                {"length", code.length},
                {"dimension", code.dimension}};
    if (!no_mindist) doc["min_distance"] = minimum_distance(code, budget_of(params_opts));
    if (emit_matrix) doc["generator"] = matrix_json(code.generator);
    emit(doc);
  });

  // points
  CommonOpts points_opts;
  auto* points = app.add_subcommand("points", "enumerate the projective toric subset X");
  add_graph_field(points, points_opts, false);
  points->callback([&] {
    const ToricSet X = points_of(points_opts);
    emit(json{{"graph", points_opts.graph_spec},
              {"field", X.field().spec_string()},
              {"size", X.size()},
              {"points", points_json(X)}});
  });

  // dim
  CommonOpts dim_opts;
  auto* dim = app.add_subcommand("dim", "Hilbert function value dim C_X(d)");
  add_graph_field(dim, dim_opts, true);
  dim->callback([&] {
    const ToricSet X = points_of(dim_opts);
    const std::size_t value = hilbert_function(X, dim_opts.degree, budget_of(dim_opts));
    if (dim_opts.as_json)
      emit(json{{"graph", dim_opts.graph_spec},
                {"field", X.field().spec_string()},
                {"d", dim_opts.degree},
                {"dimension", value}});
    else
      std::cout << value << '\n';
  });
  dim->add_flag("--json", dim_opts.as_json, "JSON output");

  // mindist
  CommonOpts md_opts;
  auto* mindist = app.add_subcommand("mindist", "exhaustive minimum distance of C_X(d)");
  add_graph_field(mindist, md_opts, true);
  mindist->add_flag("--json", md_opts.as_json, "JSON output");
  mindist->callback([&] {
    const ToricSet X = points_of(md_opts);
    const LinearCode code = code_from(X, md_opts.degree, budget_of(md_opts));
    const std::uint64_t value = minimum_distance(code, budget_of(md_opts));
    if (md_opts.as_json)
      emit(json{{"graph", md_opts.graph_spec},
                {"field", X.field().spec_string()},
                {"d", md_opts.degree},
                {"length", code.length},
                {"dimension", code.dimension},
                {"min_distance", value}});
    else
      std::cout << value << '\n';
  });

  // regindex
  CommonOpts reg_opts;
  auto* regindex = app.add_subcommand("regindex", "regularity index: first d with dim = |X|");
  add_graph_field(regindex, reg_opts, false);
  regindex->add_flag("--json", reg_opts.as_json, "JSON output");
  regindex->callback([&] {
    const ToricSet X = points_of(reg_opts);
    const int value = regularity_index(X, budget_of(reg_opts));
    if (reg_opts.as_json)
      emit(json{{"graph", reg_opts.graph_spec},
                {"field", X.field().spec_string()},
                {"regularity_index", value}});
    else
      std::cout << value << '\n';
  });

  // zeros
  CommonOpts zeros_opts;
  std::string form_text;
  auto* zeros = app.add_subcommand("zeros", "zeros of a linear form on X, with the torus pullback count");
  add_graph_field(zeros, zeros_opts, false);
  zeros->add_option("--form", form_text, "comma-separated integer coefficients, e.g. 1,-1,0,0")
      ->required();
  zeros->callback([&] {
    const Graph g = parse_graph_spec(zeros_opts.graph_spec);
    auto F = parse_field_spec(zeros_opts.field_spec);
    const auto coeffs = parse_form_coeffs(form_text, *F);
    const ToricSet X = enumerate_points(g, F, budget_of(zeros_opts));
    const std::uint64_t on_x = zeros_on_X(coeffs, X);
    json doc = {{"graph", zeros_opts.graph_spec},
                {"field", F->spec_string()},
                {"form", coeffs},
                {"zeros_on_x", on_x}};
    try {
      const SparsePoly f = pullback(SparsePoly::linear_form(coeffs), g, *F);
      const std::uint64_t z = z_count({&f, 1}, g.vertex_count(), *F, budget_of(zeros_opts));
      const std::uint64_t units = F->order() - 1;
      doc["pullback_z_count"] = z;
      doc["kernel_identity_holds"] = (on_x * units * units == z);
    } catch (const BudgetExceeded& e) {
      doc["pullback_z_count"] = nullptr;
      doc["note"] = e.what();
    }
    emit(doc);
  });

  // maxzeros
  CommonOpts mz_opts;
  std::string class_name = "all";
  std::size_t sample_cap = 10;
  auto* maxzeros = app.add_subcommand("maxzeros", "maximum of |Z(F) ∩ X| over a class of linear forms");
  add_graph_field(maxzeros, mz_opts, false);
  maxzeros->add_option("--class", class_name, "incomplete, complete or all")->capture_default_str()
      ->check(CLI::IsMember({"incomplete", "complete", "all"}));
  maxzeros->add_option("--max-samples", sample_cap, "maximizers to include in the JSON")->capture_default_str();
  maxzeros->callback([&] {
    const ToricSet X = points_of(mz_opts);
    const FormClass cls = class_name == "incomplete" ? FormClass::incomplete
                          : class_name == "complete" ? FormClass::complete
                                                     : FormClass::all;
    const MaxZerosResult res = max_zeros_search(X, cls, budget_of(mz_opts));
    json samples = json::array();
    for (std::size_t i = 0; i < res.maximizers.size() && i < sample_cap; ++i)
      samples.push_back(res.maximizers[i]);
    emit(json{{"graph", mz_opts.graph_spec},
              {"field", X.field().spec_string()},
              {"class", class_name},
              {"max", res.max},
              {"forms_scanned", res.forms_scanned},
              {"maximizer_count", res.maximizers.size()},
              {"sample_maximizers", std::move(samples)}});
  });

  // predict
  int predict_k = 0;
  std::uint32_t predict_q = 0;
  auto* predict = app.add_subcommand("predict", "closed-form prediction for the cycle C_2k");
  predict->add_option("--k", predict_k, "half cycle length, k >= 2")->required();
  predict->add_option("--q", predict_q, "field order, q >= 3")->required();
  predict->callback([&] { emit(prediction_json(predict_cycle(predict_k, predict_q))); });

  // verify
  std::string suite = "all", out_path, replay_path;
  VerifyConfig vcfg;
  bool strict = false, verify_json = false;
  auto* verify = app.add_subcommand("verify", "run formula-vs-brute-force verification suites");
  verify->add_option("suite", suite,
                     "length, lemma-path, prop-incomplete, prop-complete, theorem, regularity, "
                     "torus or all");
  verify->add_option("--budget", vcfg.budget_ops, "max enumeration steps per stage")->capture_default_str();
  verify->add_option("--workers", vcfg.workers, "concurrent scenarios")->capture_default_str();
  verify->add_option("--seed", vcfg.seed, "seed for randomized coefficient draws")->capture_default_str();
  verify->add_flag("--strict", strict, "fail when anything was skipped");
  verify->add_flag("--json", verify_json, "print the JSON report instead of the table");
  verify->add_option("--out", out_path, "also write the JSON report to a file");
  verify->add_option("--replay", replay_path, "re-run a saved report and compare every number");
  verify->callback([&] {
    if (!replay_path.empty()) {
      std::ifstream in(replay_path);
      if (!in) throw std::runtime_error("cannot open report '" + replay_path + "'");
      const json saved = json::parse(in);
      const ReplayResult res = replay_report(saved, vcfg.workers);
      if (verify_json)
        emit(json{{"replay_of", replay_path},
                  {"identical", res.identical},
                  {"mismatches", res.mismatches},
                  {"report", report_json(res.fresh)}});
      else {
        print_report_table(res.fresh, std::cout);
        if (res.identical) {
          std::cout << "replay identical to " << replay_path << '\n';
        } else {
          std::cout << "replay mismatches:\n";
          for (const auto& m : res.mismatches) std::cout << "  " << m << '\n';
        }
      }
      if (!res.identical) throw CLI::RuntimeError(1);
      return;
    }
    const Report report = run_suite(suite, vcfg);
    const json doc = report_json(report);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write report '" + out_path + "'");
      out << doc.dump(2) << '\n';
    }
    if (verify_json)
      emit(doc);
    else
      print_report_table(report, std::cout);
    const int code = report_exit_code(report, strict);
    if (code != 0) throw CLI::RuntimeError(code);
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
