#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "minimax/problem.hpp"

namespace minimax {

// Symmetric dissimilarity over n points, BOTTOM on the diagonal.
class DissimilarityMatrix {
 public:
  explicit DissimilarityMatrix(int n);

  int size() const { return n_; }
  Weight at(int s, int t) const;
  void set(int s, int t, const Weight& w);

 private:
  int n_;
  std::vector<Weight> values_;  // row-major, kept symmetric
};

// "at most l occurrences of label k0" membership test.
struct LabelCountConstraint {
  Label label = 0;
  int max_count = 0;

  bool operator()(const Labeling& x) const;
};

// Min-max 2-clustering as a binary second-order problem:
// phi_st(k,k) = r(s,t), off-diagonal BOTTOM.
PairwiseProblem clustering_to_problem(const DissimilarityMatrix& m);

// The two clusters of a binary labeling; first set is label 0.
std::pair<std::vector<int>, std::vector<int>> labeling_to_partition(
    const Labeling& x);

struct FilterResult {
  std::optional<Solution> solution;
  std::size_t rank = 0;  // 1-based position within the d-best sequence
  // True when a labeling was found; it is then optimal within the constraint
  // set, since every better labeling failed the test.
  bool certified = false;
};

// Walks an accepted d-best sequence and returns the first labeling passing
// the membership test, or none (the constrained problem stays unsolved).
FilterResult filter_dbest(const SolutionSet& sol,
                          const std::function<bool(const Labeling&)>& pred);

}  // namespace minimax
