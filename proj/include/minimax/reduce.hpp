#pragma once

#include <optional>
#include <vector>

#include "minimax/problem.hpp"

namespace minimax {

struct ReduceWitness {
  std::size_t scope_index = 0;
  Labeling scope_labeling;  // entry of the failing table, in scope order
};

// Result of the order-reduction pass: an equivalent second-order problem, or
// a decline with the first table entry whose value the pairwise projections
// cannot reconstruct.
struct ReduceOutcome {
  std::optional<PairwiseProblem> pairwise;
  std::optional<ReduceWitness> witness;

  bool accepted() const { return pairwise.has_value(); }
};

// Projection of a table onto the pair (i,j) in its scope:
// M(k,k') = min over entries with x_i=k, x_j=k' of the entry value.
std::vector<Weight> project_table_to_pair(const ScopeTable& tab, int i, int j,
                                          int num_labels);

// Verifies that every entry equals the max of its pair projections; returns
// the first failing scope labeling in lexicographic order, if any.
// `projections[a][b]` is the projection onto scope positions (a,b), a<b.
std::optional<Labeling> check_reconstruction(
    const ScopeTable& tab,
    const std::vector<std::vector<std::vector<Weight>>>& projections,
    int num_labels);

// Transforms an arbitrary-order problem into an equivalent pairwise problem,
// or declines. Unary tables are folded into the matrix toward the smallest
// other object; for |T| = 1 their values cannot be represented pairwise and
// callers solve that case directly (see solve_general).
ReduceOutcome reduce_order(const GeneralProblem& p);

}  // namespace minimax
