#pragma once

#include <span>
#include <vector>

#include "minimax/problem.hpp"

namespace minimax {

// One entry of the star-to-simplex projection:
//   min over k of max{ phi_ti(k,x_i), phi_tj(k,x_j), q(k) }
// where phi_ti / phi_tj are |K|x|K| matrices indexed (k * K + x) and
// q(k) = max over star arms i of min over x of phi_ti(k,x).
Weight star_to_simplex_entry(std::span<const Weight> phi_ti,
                             std::span<const Weight> phi_tj,
                             std::span<const Weight> q, Label x_i, Label x_j,
                             int num_labels);

// q vector for pivot t over the remaining objects.
std::vector<Weight> pivot_floor(const PairwiseProblem& p, int t,
                                std::span<const int> others);

// Equivalent transformation for pivot t: omega_ij = max{phi_ij, psi_ij} for
// i,j != t, pivot rows unchanged. The objective function is preserved for
// every labeling, with or without a majority polymorphism.
PairwiseProblem equivalent_transform(const PairwiseProblem& p, int t);

// In-place variant restricted to an active object subset; used by the solver
// while excluding variables one by one. Only matrices among `others` change.
void equivalent_transform_over(PairwiseProblem& p, int t,
                               std::span<const int> others);

}  // namespace minimax
