// otm: build the oriented transformation monoids on a chain, enumerate and
// classify their endomorphisms, evaluate the exact counting formulas, and
// cross-verify everything against brute force.
//
// Subcommands: build, groups, endos, count, table, verify.  Exit codes:
// 0 success / all checks pass, 1 check failure (counterexample JSON on
// stderr), 2 usage error.  Output is deterministic byte for byte for fixed
// flags; no timestamps in any payload.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "otm/counting.hpp"
#include "otm/endo_search.hpp"
#include "otm/json_io.hpp"
#include "otm/verify.hpp"

using namespace otm;

namespace {

double default_budget() {
  if (const char* raw = std::getenv("OTM_BUDGET")) {
    try {
      return std::stod(raw);
    } catch (...) {
    }
  }
  return 600.0;
}

std::vector<Kind> parse_kinds(const std::string& spec) {
  const std::vector<Kind> six = {Kind::OP,   Kind::OR,  Kind::POPI,
                                 Kind::PORI, Kind::POP, Kind::POR};
  if (spec == "all") {
    return six;
  }
  std::vector<Kind> kinds;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    kinds.push_back(kind_from_string(token));
  }
  return kinds;
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << payload << "\n";
}

std::string csv_row(const CountReport& r) {
  std::ostringstream os;
  os << to_string(r.kind) << "," << r.n << "," << r.t1 << "," << r.t2 << ","
     << r.t37 << "," << r.t4 << "," << r.t5 << "," << r.t6 << ","
     << r.formula_total << ",";
  if (r.enumerated_total) {
    os << *r.enumerated_total;
  }
  return os.str();
}

constexpr const char* csv_header = "kind,n,T1,T2,T34_7,T4,T5,T6,total,enumerated";

int run_build(const std::string& kind_tag, uint32_t n, const std::string& out,
              const std::string& cayley_out) {
  auto S = make_semigroup(kind_from_string(kind_tag), n);
  std::cout << to_string(S.kind) << "_" << n << ": " << S.size()
            << " elements, " << S.generators.size() << " generators"
            << std::endl;
  if (!out.empty()) {
    write_output(out, to_json(S).dump());
  }
  if (!cayley_out.empty()) {
    std::ofstream os(cayley_out, std::ios::binary);
    if (!os) {
      throw std::runtime_error("cannot open output file: " + cayley_out);
    }
    write_cayley(S, os);
  }
  return 0;
}

int run_groups(const std::string& tag, uint32_t n, const std::string& report) {
  GroupEndoReport rep = tag == "c" ? group_endomorphisms_c(n)
                                   : group_endomorphisms_d2(n);
  if (report == "json") {
    std::cout << to_json(rep).dump() << std::endl;
  } else {
    std::cout << tag << "_" << n << ": " << rep.total << " endomorphisms, "
              << rep.automorphisms << " automorphisms" << std::endl;
  }
  return 0;
}

int run_endos(const std::string& kind_tag, uint32_t n, const std::string& emit,
              double budget, unsigned threads, const std::string& out) {
  auto S = make_semigroup(kind_from_string(kind_tag), n);
  SearchOptions so;
  so.budget_seconds = budget;
  so.threads = threads;
  auto endos = enumerate_endomorphisms(S, so);
  if (emit == "json") {
    json arr = json::array();
    for (const Endo& phi : endos) {
      arr.push_back(endo_json(classify(S, phi), phi));
    }
    write_output(out, arr.dump());
  } else {
    std::map<int, size_t> per_type;
    for (const Endo& phi : endos) {
      ++per_type[endo_type(classify(S, phi))];
    }
    std::cout << to_string(S.kind) << "_" << n << ": " << endos.size()
              << " endomorphisms";
    for (auto& [t, c] : per_type) {
      std::cout << " T" << t << "=" << c;
    }
    std::cout << std::endl;
  }
  return 0;
}

int run_count(const std::string& kind_tag, uint32_t n, const std::string& mode,
              const std::string& emit, double budget, unsigned threads) {
  Kind kind = kind_from_string(kind_tag);
  if (kind == Kind::C || kind == Kind::D2) {
    Int formula = group_endo_count_formula(kind, n);
    Int autos = group_auto_count_formula(kind, n);
    std::optional<Int> enumerated;
    if (mode != "formula") {
      auto rep = kind == Kind::C ? group_endomorphisms_c(n)
                                 : group_endomorphisms_d2(n);
      enumerated = rep.total;
    }
    std::cout << kind_tag << "_" << n << ": " << formula
              << " endomorphisms (formula), " << autos << " automorphisms";
    if (enumerated) {
      std::cout << "; enumerated " << *enumerated
                << (*enumerated == formula ? " (agrees)" : " (MISMATCH)");
    }
    std::cout << std::endl;
    return enumerated && *enumerated != formula ? 1 : 0;
  }

  CountReport r = count_report(kind, n);
  if (mode == "enumerate" || mode == "both") {
    auto S = make_semigroup(kind, n);
    SearchOptions so;
    so.budget_seconds = budget;
    so.threads = threads;
    r.enumerated_total = Int(enumerate_endomorphisms(S, so).size());
  }
  if (emit == "csv") {
    std::cout << csv_header << "\n" << csv_row(r) << std::endl;
  } else {
    std::cout << to_json(r).dump() << std::endl;
  }
  if (r.enumerated_total && *r.enumerated_total != r.formula_total) {
    std::cerr << json{{"check", "count/total/" + kind_tag},
                      {"formula", r.formula_total.str()},
                      {"enumerated", r.enumerated_total->str()}}
                     .dump()
              << std::endl;
    return 1;
  }
  return 0;
}

int run_table(const std::string& kinds_spec, uint32_t n_max,
              const std::string& mode, double budget, unsigned threads,
              const std::string& out) {
  std::ostringstream os;
  os << csv_header;
  for (Kind kind : parse_kinds(kinds_spec)) {
    for (uint32_t n = 3; n <= n_max; ++n) {
      CountReport r = count_report(kind, n);
      if (mode == "both" || mode == "enumerate") {
        try {
          auto S = make_semigroup(kind, n);
          SearchOptions so;
          so.budget_seconds = budget;
          so.threads = threads;
          r.enumerated_total = Int(enumerate_endomorphisms(S, so).size());
        } catch (const BudgetError&) {
        } catch (const CapacityError&) {
        }
      }
      os << "\n" << csv_row(r);
    }
  }
  write_output(out, os.str());
  return 0;
}

int run_verify(const std::string& suite, const std::string& kinds_spec,
               uint32_t n, uint32_t n_max, double budget, unsigned threads) {
  verify::Options opt;
  opt.kinds = parse_kinds(kinds_spec);
  opt.n_min = n;
  opt.n_max = std::max(n, n_max);
  opt.budget_seconds = budget;
  opt.threads = threads;

  verify::CheckList checks;
  bool known = false;
  auto want = [&](const char* name) {
    bool match = suite == name || suite == "all";
    known = known || suite == name;
    return match;
  };
  if (want("orientation")) {
    verify::orientation_suite(checks);
  }
  if (want("green")) {
    verify::green_suite(checks, opt);
  }
  if (want("idempotents")) {
    verify::idempotents_suite(checks);
  }
  if (want("normalizer")) {
    verify::normalizer_suite(checks);
  }
  if (want("groups")) {
    verify::groups_suite(checks);
  }
  if (want("autos")) {
    verify::autos_suite(checks, opt);
  }
  if (want("endo-soundness")) {
    verify::endo_soundness_suite(checks, opt);
  }
  if (want("endo-completeness")) {
    verify::endo_completeness_suite(checks, opt);
    verify::kernel_shape_suite(checks, opt);
    verify::structural_suite(checks, opt);
  }
  if (want("counts")) {
    verify::counts_suite(checks, opt);
  }
  if (!known && suite != "all") {
    std::cerr << "unknown suite: " << suite << std::endl;
    return 2;
  }

  for (const auto& c : checks.checks()) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.detail
              << "\n";
  }
  size_t failed = 0;
  for (const auto& c : checks.checks()) {
    if (!c.pass) {
      ++failed;
      std::cerr << json{{"check", c.id}, {"counterexample", c.counterexample}}
                       .dump()
                << std::endl;
    }
  }
  std::cout << (failed == 0 ? "all checks passed (" : "FAILURES: ")
            << (failed == 0 ? std::to_string(checks.checks().size()) + ")"
                            : std::to_string(failed) + " of "
                                  + std::to_string(checks.checks().size()))
            << std::endl;
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented transformation monoids: construction, endomorphism "
               "classification and exact counting"};
  app.require_subcommand(1);

  std::string kind = "op", tag = "d2", mode = "formula", emit = "json";
  std::string report = "summary";
  std::string suite = "all", kinds_spec = "all", out, cayley_out;
  uint32_t n = 3, n_max = 3;
  double budget = default_budget();
  unsigned threads = 0;

  auto* build = app.add_subcommand("build", "construct a monoid and export it");
  build->add_option("--kind", kind, "monoid tag")->required();
  build->add_option("--n", n, "chain size")->required();
  build->add_option("--out", out, "JSON output file ('-' for stdout)");
  build->add_option("--cayley-out", cayley_out, "binary Cayley table file");

  auto* groups = app.add_subcommand("groups", "unit group endomorphisms");
  groups->add_option("--tag", tag, "c or d2")
      ->check(CLI::IsMember({"c", "d2"}));
  groups->add_option("--n", n, "chain size")->required();
  groups->add_option("--report", report, "summary or json")
      ->check(CLI::IsMember({"summary", "json"}));

  auto* endos = app.add_subcommand("endos", "enumerate and classify all "
                                            "endomorphisms");
  endos->add_option("--kind", kind, "monoid tag")->required();
  endos->add_option("--n", n, "chain size")->required();
  endos->add_option("--emit", emit, "json or summary")
      ->check(CLI::IsMember({"json", "summary"}));
  endos->add_option("--budget", budget, "search budget in seconds");
  endos->add_option("--threads", threads, "worker threads (0 = auto)");
  endos->add_option("--out", out, "output file ('-' for stdout)");

  auto* count = app.add_subcommand("count", "endomorphism count report");
  count->add_option("--kind", kind, "monoid tag (or c/d2 for unit groups)")
      ->required();
  count->add_option("--n", n, "chain size")->required();
  count->add_option("--mode", mode, "formula, enumerate or both")
      ->check(CLI::IsMember({"formula", "enumerate", "both"}));
  count->add_option("--emit", emit, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  count->add_option("--budget", budget, "search budget in seconds");
  count->add_option("--threads", threads, "worker threads (0 = auto)");

  auto* table = app.add_subcommand("table", "per-kind, per-n CSV of counts");
  table->add_option("--kinds", kinds_spec, "comma list of tags, or 'all'");
  table->add_option("--n-max", n_max, "largest chain size")->required();
  bool csv = true;
  table->add_flag("--csv", csv, "emit CSV (the only format)");
  table->add_option("--mode", mode, "formula, enumerate or both")
      ->check(CLI::IsMember({"formula", "enumerate", "both"}));
  table->add_option("--budget", budget, "search budget in seconds");
  table->add_option("--threads", threads, "worker threads (0 = auto)");
  table->add_option("--out", out, "output file ('-' for stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite,
                         "orientation, green, idempotents, normalizer, "
                         "groups, autos, endo-soundness, endo-completeness, "
                         "counts, or all");
  verify_cmd->add_option("--kind", kinds_spec, "comma list of tags, or 'all'");
  verify_cmd->add_option("--n", n, "chain size");
  verify_cmd->add_option("--n-max", n_max, "upper chain size (default --n)");
  verify_cmd->add_option("--budget", budget, "search budget in seconds");
  verify_cmd->add_option("--threads", threads, "worker threads (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      return run_build(kind, n, out, cayley_out);
    }
    if (groups->parsed()) {
      return run_groups(tag, n, report);
    }
    if (endos->parsed()) {
      return run_endos(kind, n, emit, budget, threads, out);
    }
    if (count->parsed()) {
      return run_count(kind, n, mode, emit, budget, threads);
    }
    if (table->parsed()) {
      return run_table(kinds_spec, n_max, mode, budget, threads, out);
    }
    if (verify_cmd->parsed()) {
      return run_verify(suite, kinds_spec, n, n_max, budget, threads);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 2;
}
