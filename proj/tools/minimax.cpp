// Batch front end: solve / reduce / verify / generate over problem files.
// Exit codes: 0 ok, 1 usage or parse error, 2 decline, 3 oracle budget
// exceeded. Declines are a distinct outcome, not an error: scripts must be
// able to tell "no answer for this instance" from "bad invocation".

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "minimax/io.hpp"
#include "minimax/oracle.hpp"
#include "minimax/reductions.hpp"
#include "minimax/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDecline = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::vector<int> parse_order(const std::string& text) {
  std::vector<int> order;
  std::istringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');)
    order.push_back(std::stoi(tok));
  return order;
}

minimax::LabelCountConstraint parse_filter(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::runtime_error("--filter expects LABEL:COUNT");
  minimax::LabelCountConstraint c;
  c.label = std::stoi(text.substr(0, colon));
  c.max_count = std::stoi(text.substr(colon + 1));
  return c;
}

std::string labeling_text(const minimax::Labeling& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(x[i]);
  }
  return out;
}

int run_solve(const std::string& file, std::uint64_t d,
              const std::string& mode, const std::string& order_text,
              const std::string& filter_text) {
  auto parsed = minimax::parse_problem(read_input(file));

  minimax::SolverConfig cfg;
  cfg.d = d;
  if (mode == "algorithm4")
    cfg.use_equivalent_transform = true;
  else if (mode == "greedy")
    cfg.use_equivalent_transform = false;
  else
    throw std::runtime_error("--mode must be algorithm4 or greedy");
  if (!order_text.empty()) cfg.elimination_order = parse_order(order_text);

  auto result = minimax::solve_general(parsed.problem, cfg);
  if (result.reduce_witness) {
    std::cerr << "decline: scope #" << result.reduce_witness->scope_index
              << " is not pairwise-decomposable at labeling ("
              << labeling_text(result.reduce_witness->scope_labeling)
              << ")\n";
    std::cout << minimax::serialize_solution(result.solution,
                                             parsed.object_names,
                                             parsed.label_names);
    return kExitDecline;
  }
  if (result.solution.status == minimax::Status::Declined) {
    std::cerr << "decline: pivot " << result.solution.decline.pivot
              << " at labeling ("
              << labeling_text(result.solution.decline.labeling) << ")\n";
    std::cout << minimax::serialize_solution(result.solution,
                                             parsed.object_names,
                                             parsed.label_names);
    return kExitDecline;
  }

  std::optional<minimax::FilterReport> report;
  if (!filter_text.empty()) {
    auto constraint = parse_filter(filter_text);
    auto filtered = minimax::filter_dbest(result.solution, constraint);
    report = minimax::FilterReport{constraint, std::nullopt};
    if (filtered.certified) report->rank = filtered.rank;
  }
  std::cout << minimax::serialize_solution(result.solution,
                                           parsed.object_names,
                                           parsed.label_names, report);
  return kExitOk;
}

int run_reduce(const std::string& file) {
  auto parsed = minimax::parse_problem(read_input(file));
  auto outcome = minimax::reduce_order(parsed.problem);
  if (!outcome.accepted()) {
    std::cerr << "decline: scope #" << outcome.witness->scope_index
              << " is not pairwise-decomposable at labeling ("
              << labeling_text(outcome.witness->scope_labeling) << ")\n";
    return kExitDecline;
  }
  std::cout << minimax::serialize_problem(minimax::to_general(
                                              *outcome.pairwise),
                                          parsed.object_names,
                                          parsed.label_names);
  return kExitOk;
}

int run_verify(const std::string& file, const std::string& operator_file,
               std::uint64_t budget_cap) {
  auto parsed = minimax::parse_problem(read_input(file));
  minimax::OracleBudget budget{budget_cap};
  if (!operator_file.empty()) {
    auto op = minimax::parse_operator(read_input(operator_file));
    if (op.num_objects != parsed.problem.num_objects ||
        op.op.num_labels != parsed.problem.num_labels)
      throw std::runtime_error("operator dimensions do not match problem");
    if (!op.op.is_majority()) {
      std::cout << "operator: rejected (majority identities violated)\n";
      return kExitUsage;
    }
    std::cout << "operator: majority\n";
    bool holds = minimax::is_polymorphism(parsed.problem, op.op, budget);
    std::cout << "polymorphism: " << (holds ? "yes" : "no") << "\n";
    return kExitOk;
  }
  auto found = minimax::find_majority_polymorphism(parsed.problem, budget);
  if (!found) {
    std::cout << "majority polymorphism: none\n";
    return kExitOk;
  }
  bool is_median = *found == minimax::median_operator(
                                 parsed.problem.num_objects,
                                 parsed.problem.num_labels);
  std::cout << "majority polymorphism: found" << (is_median ? " (median)" : "")
            << "\n";
  std::cout << minimax::serialize_operator(*found);
  return kExitOk;
}

int run_generate(const minimax::InstanceGenSpec& spec) {
  std::cout << minimax::serialize_problem(minimax::generate_instance(spec));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"d-best minimax labeling solver"};
  app.require_subcommand(1);

  std::string file = "-";
  std::uint64_t d = 1;
  std::string mode = "algorithm4";
  std::string order_text;
  std::string filter_text;

  auto* solve = app.add_subcommand("solve", "solve a problem file");
  solve->add_option("file", file, "problem file, '-' for stdin");
  solve->add_option("-d,--dbest", d, "number of labelings to return");
  solve->add_option("--mode", mode, "algorithm4 (default) or greedy");
  solve->add_option("--order", order_text,
                    "elimination order, e.g. 0,2,1 (excluded from the back)");
  solve->add_option("--filter", filter_text,
                    "LABEL:COUNT at-most constraint applied to the d-best "
                    "sequence");

  auto* reduce = app.add_subcommand("reduce",
                                    "transform to an order-two problem file");
  reduce->add_option("file", file, "problem file, '-' for stdin");

  std::string operator_file;
  std::uint64_t budget = minimax::OracleBudget{}.max_enumeration;
  auto* verify = app.add_subcommand(
      "verify", "check or search for a majority polymorphism");
  verify->add_option("file", file, "problem file, '-' for stdin");
  verify->add_option("--operator", operator_file, "operator file to check");
  verify->add_option("--budget", budget, "enumeration cap");

  minimax::InstanceGenSpec spec;
  std::string family = "pairwise";
  auto* generate = app.add_subcommand("generate",
                                      "emit a deterministic random instance");
  generate->add_option("--seed", spec.seed, "generator seed");
  generate->add_option("--objects", spec.num_objects, "number of objects");
  generate->add_option("--labels", spec.num_labels, "number of labels");
  generate->add_option("--family", family,
                       "pairwise | random-scopes | clustering");
  generate->add_option("--scope-order", spec.scope_order,
                       "scope size (random-scopes)");
  generate->add_option("--scope-count", spec.scope_count,
                       "scope count (random-scopes)");
  generate->add_option("--lo", spec.value_lo, "smallest finite value");
  generate->add_option("--hi", spec.value_hi, "largest finite value");
  generate->add_option("--p-bottom", spec.p_bottom,
                       "probability of a -inf entry");
  generate->add_option("--p-top", spec.p_top, "probability of a +inf entry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(file, d, mode, order_text,
                                          filter_text);
    if (reduce->parsed()) return run_reduce(file);
    if (verify->parsed()) return run_verify(file, operator_file, budget);
    if (family == "pairwise")
      spec.family = minimax::StructureFamily::PairwiseComplete;
    else if (family == "random-scopes")
      spec.family = minimax::StructureFamily::RandomScopes;
    else if (family == "clustering")
      spec.family = minimax::StructureFamily::Clustering;
    else
      throw std::runtime_error("unknown family '" + family + "'");
    return run_generate(spec);
  } catch (const std::length_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
