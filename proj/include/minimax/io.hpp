#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minimax/problem.hpp"
#include "minimax/reductions.hpp"

namespace minimax {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A problem plus the optional display names declared in its file. Ids stay
// dense integers everywhere else; names exist only at this boundary.
struct ParsedProblem {
  GeneralProblem problem;
  std::vector<std::string> object_names;  // empty or num_objects entries
  std::vector<std::string> label_names;   // empty or num_labels entries
};

// Grammar: see docs/FORMAT.md. Throws ParseError; the returned problem passes
// validate() and has duplicate scopes merged.
ParsedProblem parse_problem(std::string_view text);

// Canonical form: scopes sorted by id tuple, entries lexicographic, weights
// as exact decimals. parse(serialize(p)) == p for canonical problems.
std::string serialize_problem(const GeneralProblem& p,
                              const std::vector<std::string>& object_names = {},
                              const std::vector<std::string>& label_names = {});

// Rendered after the machine-readable lines of a solution file.
struct FilterReport {
  LabelCountConstraint constraint;
  std::optional<std::size_t> rank;  // 1-based; empty = nothing passed
};

std::string serialize_solution(
    const SolutionSet& sol,
    const std::vector<std::string>& object_names = {},
    const std::vector<std::string>& label_names = {},
    const std::optional<FilterReport>& filter = std::nullopt);

struct ParsedOperator {
  NonUniformOperator op;
  int num_objects = 0;
};

ParsedOperator parse_operator(std::string_view text);
std::string serialize_operator(const NonUniformOperator& op);

enum class StructureFamily { PairwiseComplete, RandomScopes, Clustering };

// Deterministic instance generator: same spec, same bytes, any platform.
struct InstanceGenSpec {
  std::uint64_t seed = 0;
  int num_objects = 3;
  int num_labels = 2;
  StructureFamily family = StructureFamily::PairwiseComplete;
  int scope_order = 3;   // random-scopes only
  int scope_count = 4;   // random-scopes only
  std::int64_t value_lo = 0;
  std::int64_t value_hi = 9;
  double p_bottom = 0.0;
  double p_top = 0.0;
};

GeneralProblem generate_instance(const InstanceGenSpec& spec);

}  // namespace minimax
