// Command-line front end: constructions, checks, enumeration, derivation,
// completion and bundled fixtures, with JSON/text file I/O.
//
// Exit codes: 0 success or predicate-true, 1 predicate-false, 2 input error,
// 3 search budget exhausted.

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heffter/fixtures.hpp"
#include "heffter/io.hpp"

using nlohmann::json;
using namespace heffter;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct Output {
  std::string path;  // empty = stdout

  void emit(const std::string& content) const {
    if (path.empty())
      std::cout << content;
    else
      write_text_file(path, content);
  }
  void emit(const json& j) const { emit(j.dump(2) + "\n"); }
};

std::vector<int> parse_symbol_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("bad symbol list entry \"" + item + "\"");
    }
  }
  if (out.empty()) throw InputError("empty symbol list");
  return out;
}

json affine_report_to_json(const AffineReport& r) {
  json pairs = json::array();
  for (const auto& v : r.intersection_violations)
    pairs.push_back({{"class_a", v.class_a},
                     {"block_a", v.block_a},
                     {"class_b", v.class_b},
                     {"block_b", v.block_b},
                     {"count", v.count}});
  json weights = json::array();
  for (const auto& v : r.weight_violations)
    weights.push_back({{"class", v.class_index}, {"block", v.block_index}, {"weight", v.weight}});
  return json{{"is_affine_1_design", r.is_affine_1_design},
              {"in_aff_lambda", r.in_aff_lambda},
              {"lambda", r.lambda},
              {"mu", r.mu.has_value() ? json(*r.mu) : json(nullptr)},
              {"partitions_ok", r.partitions_ok},
              {"partition_violations", r.partition_violations},
              {"intersection_violations", pairs},
              {"weight_violations", weights}};
}

json heffter_report_to_json(const HeffterReport& r, const std::vector<SumPolynomial>& polys) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    json item{{"poly", polys[f.poly_index].str()}};
    item["value"] = f.value.defined() ? json(f.value.value()) : json(nullptr);
    failures.push_back(std::move(item));
  }
  json unmatched = json::array();
  for (int i : r.dsps.unmatched_polys) unmatched.push_back(polys[i].str());
  json uncovered = json::array();
  for (const auto& [c, b] : r.dsps.uncovered_blocks) uncovered.push_back({{"class", c}, {"block", b}});
  return json{{"holds", r.holds},
              {"evaluations", r.evaluations},
              {"failures", failures},
              {"dsps_valid", r.dsps.valid},
              {"unmatched_polys", unmatched},
              {"uncovered_blocks", uncovered}};
}

json classical_report_to_json(const ClassicalReport& r) {
  json c1 = json::array(), c2 = json::array(), c3 = json::array();
  for (const auto& v : r.condition1)
    c1.push_back({{"line", v.row ? "row" : "col"},
                  {"index", v.index},
                  {"count", v.count},
                  {"expected", v.expected}});
  for (const auto& v : r.condition2)
    c2.push_back({{"base", v.base}, {"pos", v.pos_count}, {"neg", v.neg_count}});
  for (const auto& v : r.condition3)
    c3.push_back({{"line", v.row ? "row" : "col"}, {"index", v.index}, {"sum", v.sum}});
  return json{{"valid", r.valid},
              {"condition1_fill", c1},
              {"condition2_pairs", c2},
              {"condition3_sums", c3}};
}

json loop_report_to_json(const LoopReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"row", v.row.str()}, {"col", v.col.str()}, {"detail", v.detail}});
  json out{{"valid", r.valid},
           {"is_total", r.is_total},
           {"is_associative", r.is_associative},
           {"is_commutative", r.is_commutative},
           {"weight", r.weight},
           {"violations", violations}};
  if (r.associativity_counterexample) {
    const auto& t = *r.associativity_counterexample;
    out["associativity_counterexample"] = {t[0].str(), t[1].str(), t[2].str()};
  }
  if (r.commutativity_counterexample) {
    const auto& p = *r.commutativity_counterexample;
    out["commutativity_counterexample"] = {p[0].str(), p[1].str()};
  }
  return out;
}

json completion_to_json(const CompletionResult& r) {
  json out{{"nodes", r.nodes}};
  switch (r.status) {
    case CompletionStatus::Completed: out["status"] = "completed"; break;
    case CompletionStatus::BudgetExhausted: out["status"] = "budget-exhausted"; break;
    case CompletionStatus::Infeasible: out["status"] = "infeasible"; break;
  }
  if (r.loop) out["loop"] = loop_to_json(*r.loop);
  return out;
}

json forced_to_json(const ForcedBlockStructure& f) {
  json entries = json::array();
  for (const LoopEntry& e : f.entries)
    entries.push_back({e.lhs.value(), e.rhs.value(), e.value.value()});
  static const char* kUnknownNames[] = {"alpha", "beta", "gamma", "delta", "epsilon", "phi"};
  json unknowns = json::array();
  for (size_t u = 0; u < f.unknown_cells.size(); ++u) {
    json cells = json::array();
    for (const auto& [a, b] : f.unknown_cells[u]) cells.push_back({a.value(), b.value()});
    unknowns.push_back({{"name", kUnknownNames[u]}, {"cells", cells}});
  }
  json pairs = json::array();
  for (const auto& [a, b] : f.negation_pairs)
    pairs.push_back({kUnknownNames[a], kUnknownNames[b]});
  return json{{"symbols", f.symbols},
              {"entries", entries},
              {"unknowns", unknowns},
              {"negation_pairs", pairs}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heffter arrays over partial loops: constructions, checks and search"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format: json, text-table or csv")
      ->check(CLI::IsMember({"json", "text-table", "csv"}));
  Output output;
  app.add_option("-o,--output", output.path, "Write output to a file instead of stdout");
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads for parallel-capable checks")
      ->check(CLI::PositiveNumber);

  // construct ------------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "Build the explicit constructions");
  construct->require_subcommand(1);

  int p = 0, r = 0, k = 0;
  auto* hpr = construct->add_subcommand("hpr", "Diagonally cyclic Latin square H_{p,r}");
  hpr->add_option("--p", p, "odd prime")->required();
  hpr->add_option("--r", r, "primitive root of p")->required();

  auto* lpr = construct->add_subcommand("lpr", "The loop L_{p,r} on {0,+-1..+-p}");
  lpr->add_option("--p", p, "odd prime")->required();
  lpr->add_option("--r", r, "primitive root of p")->required();

  std::string idem_file;
  auto* general = construct->add_subcommand("general", "The loop on k*p symbols");
  general->add_option("--p", p, "odd prime")->required();
  general->add_option("--r", r, "primitive root of p")->required();
  general->add_option("--k", k, "block count, k != 2")->required();
  general->add_option("--idempotent", idem_file,
                      "idempotent Latin square JSON (defaults to the canonical one)");

  std::string array_file, design_file, loop_file, polys_file;
  long long budget = kDefaultCompletionBudget;
  auto* theorem = construct->add_subcommand(
      "theorem", "Partial loop and polynomial set making the array P-Heffter");
  theorem->add_option("--array", array_file, "array JSON")->required();
  theorem->add_option("--design", design_file, "design JSON")->required();
  theorem->add_option("--budget", budget, "completion budget for uniform block sizes");

  // check ------------------------------------------------------------------
  auto* check = app.add_subcommand("check", "Verify predicates");
  check->require_subcommand(1);

  auto* check_affine = check->add_subcommand("affine", "Affine 1-design validation");
  check_affine->add_option("--array", array_file, "array JSON")->required();
  check_affine->add_option("--design", design_file, "design JSON")->required();

  bool all_polys = false;
  int cap = kBlockWeightCap;
  auto* check_heffter = check->add_subcommand("heffter", "P-/D-Heffter over a loop");
  check_heffter->add_option("--array", array_file, "array JSON")->required();
  check_heffter->add_option("--design", design_file, "design JSON")->required();
  check_heffter->add_option("--loop", loop_file, "loop JSON")->required();
  check_heffter->add_flag("--all-polys", all_polys, "check every block polynomial (D-Heffter)");
  check_heffter->add_option("--polys", polys_file, "polynomial set JSON (P-Heffter)");
  check_heffter->add_option("--cap", cap, "block weight cap for --all-polys");

  int h_cells = 0, k_cells = 0;
  auto* check_classical = check->add_subcommand("classical", "Classical Heffter array conditions");
  check_classical->set_help_flag("--help", "Print help");  // frees -h for --h below
  check_classical->add_option("--array", array_file, "grid JSON with signed entries")->required();
  check_classical->add_option("--h", h_cells, "filled cells per row")->required();
  check_classical->add_option("--k", k_cells, "filled cells per column")->required();

  auto* check_loop = check->add_subcommand("loop", "Partial loop axioms and classification");
  check_loop->add_option("--loop", loop_file, "loop JSON")->required();

  // enumerate / derive / complete -------------------------------------------
  std::string symbols_csv;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate combinatorial families");
  enumerate->require_subcommand(1);
  auto* enum_sumpoly = enumerate->add_subcommand("sumpoly", "All T-sum polynomials");
  enum_sumpoly->add_option("--symbols", symbols_csv, "comma-separated symbol list")->required();
  int enum_cap = kEnumerateCap;
  enum_sumpoly->add_option("--cap", enum_cap, "size cap");

  auto* derive = app.add_subcommand("derive", "Derive forced structures");
  derive->require_subcommand(1);
  auto* derive_forced_cmd = derive->add_subcommand("forced", "Forced block fragment");
  derive_forced_cmd->add_option("--symbols", symbols_csv, "comma-separated block symbols")
      ->required();

  auto* complete_cmd = app.add_subcommand("complete", "Backtracking completion to a total loop");
  complete_cmd->add_option("--loop", loop_file, "loop JSON")->required();
  complete_cmd->add_option("--budget", budget, "node budget");

  // fixtures -----------------------------------------------------------------
  std::string fixture_name, fixture_dir = ".";
  bool fixture_list = false;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write bundled worked-example files");
  fixtures_cmd->add_option("name", fixture_name, "fixture name, e.g. example-4-2");
  fixtures_cmd->add_option("--dir", fixture_dir, "output directory");
  fixtures_cmd->add_flag("--list", fixture_list, "list available fixtures");

  // Let --format/-o/--threads appear after any subcommand.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  try {
    if (hpr->parsed()) {
      const SquareTable t = build_hpr(p, r);
      output.emit(format == "json" ? json(square_to_json(t)).dump(2) + "\n" : square_to_text(t));
      return kExitTrue;
    }
    if (lpr->parsed()) {
      const PartialLoop loop = build_lpr(p, r);
      output.emit(format == "json" ? loop_to_json(loop).dump(2) + "\n" : loop_to_text(loop));
      return kExitTrue;
    }
    if (general->parsed()) {
      const SquareTable idem =
          idem_file.empty() ? idempotent_square(k) : square_from_json(load_json_file(idem_file));
      const PartialLoop loop = build_general(p, r, k, idem);
      output.emit(format == "json" ? loop_to_json(loop).dump(2) + "\n" : loop_to_text(loop));
      return kExitTrue;
    }
    if (theorem->parsed()) {
      const PartiallyFilledArray a = array_from_json(load_json_file(array_file));
      const AffineDesign d = design_from_json(load_json_file(design_file), a.m());
      const TheoremResult result = theorem_construct(a, d, budget);
      json out{{"loop", loop_to_json(result.loop)},
               {"polys", polys_to_json(result.polys)},
               {"uniform_block_sizes", result.uniform_block_sizes}};
      if (result.completion) out["completion"] = completion_to_json(*result.completion);
      output.emit(out);
      return kExitTrue;
    }
    if (check_affine->parsed()) {
      const PartiallyFilledArray a = array_from_json(load_json_file(array_file));
      const AffineDesign d = design_from_json(load_json_file(design_file), a.m());
      const AffineReport report = validate_affine(a, d);
      output.emit(affine_report_to_json(report));
      return report.in_aff_lambda ? kExitTrue : kExitFalse;
    }
    if (check_heffter->parsed()) {
      const PartiallyFilledArray a = array_from_json(load_json_file(array_file));
      const AffineDesign d = design_from_json(load_json_file(design_file), a.m());
      const PartialLoop loop = loop_from_json(load_json_file(loop_file));
      if (all_polys == polys_file.empty()) {
        // exactly one of --all-polys / --polys
        if (all_polys) throw InputError("--all-polys and --polys are mutually exclusive");
        throw InputError("check heffter needs --all-polys or --polys FILE");
      }
      if (all_polys) {
        const ClassifyReport cls = classify(a, d, loop, cap);
        std::vector<SumPolynomial> polys;  // rebuilt for failure formatting
        for (auto id : d.block_ids()) {
          const auto symbols = symb(a, d.block(id));
          if (!symbols.empty())
            for (SumPolynomial& q : enumerate_all(symbols, cap)) polys.push_back(std::move(q));
        }
        json out = heffter_report_to_json(cls.detail, polys);
        out["d_heffter"] = cls.d_heffter;
        out["heffter_linear_space"] = cls.heffter_linear_space;
        out["heffter_array"] = cls.heffter_array;
        output.emit(out);
        return cls.d_heffter ? kExitTrue : kExitFalse;
      }
      const std::vector<SumPolynomial> polys = polys_from_json(load_json_file(polys_file));
      const HeffterReport report = is_p_heffter(a, d, polys, loop, threads);
      output.emit(heffter_report_to_json(report, polys));
      return report.holds ? kExitTrue : kExitFalse;
    }
    if (check_classical->parsed()) {
      const ClassicalGrid grid = classical_from_json(load_json_file(array_file));
      const ClassicalReport report = verify_classical(grid, h_cells, k_cells);
      output.emit(classical_report_to_json(report));
      return report.valid ? kExitTrue : kExitFalse;
    }
    if (check_loop->parsed()) {
      const PartialLoop loop = loop_from_json(load_json_file(loop_file));
      const LoopReport report = validate_partial_loop(loop);
      output.emit(loop_report_to_json(report));
      return report.valid ? kExitTrue : kExitFalse;
    }
    if (enum_sumpoly->parsed()) {
      const std::vector<SumPolynomial> polys =
          enumerate_all(parse_symbol_list(symbols_csv), enum_cap);
      if (format == "json") {
        output.emit(polys_to_json(polys));
      } else {
        std::string lines;
        for (const SumPolynomial& q : polys) lines += q.str() + "\n";
        output.emit(lines);
      }
      return kExitTrue;
    }
    if (derive_forced_cmd->parsed()) {
      output.emit(forced_to_json(derive_forced(parse_symbol_list(symbols_csv))));
      return kExitTrue;
    }
    if (complete_cmd->parsed()) {
      const PartialLoop loop = loop_from_json(load_json_file(loop_file));
      const CompletionResult result = complete(loop, budget);
      if (format == "text-table" && result.loop) {
        output.emit(loop_to_text(*result.loop));
      } else {
        output.emit(completion_to_json(result));
      }
      if (result.status == CompletionStatus::BudgetExhausted) return kExitBudget;
      return result.status == CompletionStatus::Completed ? kExitTrue : kExitFalse;
    }
    if (fixtures_cmd->parsed()) {
      if (fixture_list) {
        std::string lines;
        for (const std::string& name : fixtures::fixture_names()) lines += name + "\n";
        output.emit(lines);
        return kExitTrue;
      }
      if (fixture_name.empty()) {
        std::cerr << "error: missing fixture name; available:\n";
        for (const std::string& name : fixtures::fixture_names()) std::cerr << "  " << name << "\n";
        return kExitInputError;
      }
      for (const std::string& path : fixtures::write_fixture(fixture_name, fixture_dir))
        std::cout << path << "\n";
      return kExitTrue;
    }
  } catch (const SearchTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
