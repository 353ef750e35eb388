#pragma once

#include <cstdint>
#include <optional>

#include "minimax/problem.hpp"

namespace minimax {

// Cap on exhaustive enumeration; explicit so CI behavior is reproducible.
struct OracleBudget {
  std::uint64_t max_enumeration = 1u << 20;
};

// Ground truth by full enumeration of K^T in lexicographic order.
// Throws std::length_error when |K|^|T| exceeds the budget.
SolutionSet brute_force_dbest(const GeneralProblem& p, std::uint64_t d,
                              const OracleBudget& budget = {});
SolutionSet brute_force_dbest(const PairwiseProblem& p, std::uint64_t d,
                              const OracleBudget& budget = {});

// Full triple enumeration of the invariance property, per scope.
bool is_polymorphism(const GeneralProblem& p, const NonUniformOperator& op,
                     const OracleBudget& budget = {});
bool is_polymorphism(const PairwiseProblem& p, const NonUniformOperator& op,
                     const OracleBudget& budget = {});

// Exhaustive backtracking over per-object ternary tables with the majority
// identities fixed. Exponential; practical only for |K| <= 3, |T| <= 4.
std::optional<NonUniformOperator> find_majority_polymorphism(
    const GeneralProblem& p, const OracleBudget& budget = {});
std::optional<NonUniformOperator> find_majority_polymorphism(
    const PairwiseProblem& p, const OracleBudget& budget = {});

// Canonical majority operator: per-object median under the label order.
NonUniformOperator median_operator(int num_objects, int num_labels);

}  // namespace minimax
