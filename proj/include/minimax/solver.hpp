#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minimax/problem.hpp"
#include "minimax/reduce.hpp"

namespace minimax {

struct SolverConfig {
  std::uint64_t d = 1;
  // true: transform before each exclusion (solves everything with a majority
  // polymorphism); false: plain greedy exclusion.
  bool use_equivalent_transform = true;
  // Objects are excluded from the back of this permutation; empty means
  // 0..|T|-1, i.e. highest id first.
  std::vector<int> elimination_order;
};

// Base case |T| <= 2: direct d-best scan over K^|T|.
SolutionSet solve_base(const PairwiseProblem& p, std::uint64_t d);

// Builds the d*|K| extensions of sol_prev by the pivot's label, evaluates the
// full objective and selects the d best. Entry labelings are full length;
// position t of sol_prev entries is ignored.
SolutionSet extend_and_select(const SolutionSet& sol_prev,
                              const PairwiseProblem& p, int t,
                              std::uint64_t d);

// Safety test: declines iff some labeling of sol_prev has its restricted
// objective strictly below the cheapest pivot extension.
std::optional<DeclineInfo> safety_check(const SolutionSet& sol_prev,
                                        const PairwiseProblem& p, int t);

// Recursive variable exclusion over a second-order problem. Accepted results
// are exact d-best sets; declines are possible only without the transform or
// when no majority polymorphism exists.
SolutionSet solve(const PairwiseProblem& p, const SolverConfig& cfg);

struct GeneralSolveResult {
  SolutionSet solution;
  // Set when the order-reduction step declined (solution is then Declined
  // with no pivot diagnostics).
  std::optional<ReduceWitness> reduce_witness;
};

// Full pipeline for arbitrary-order input: reduce to order two, then solve.
// |T| = 1 is solved directly (pairwise form cannot carry unary values).
GeneralSolveResult solve_general(const GeneralProblem& p,
                                 const SolverConfig& cfg);

}  // namespace minimax
