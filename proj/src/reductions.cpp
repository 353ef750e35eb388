#include "minimax/reductions.hpp"

#include <stdexcept>

namespace minimax {

DissimilarityMatrix::DissimilarityMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("need at least one point");
  values_.assign(static_cast<std::size_t>(n) * n, Weight::bottom());
}

Weight DissimilarityMatrix::at(int s, int t) const {
  return values_[static_cast<std::size_t>(s) * n_ + t];
}

void DissimilarityMatrix::set(int s, int t, const Weight& w) {
  if (s == t && !w.is_bottom())
    throw std::invalid_argument("diagonal must stay BOTTOM");
  values_[static_cast<std::size_t>(s) * n_ + t] = w;
  values_[static_cast<std::size_t>(t) * n_ + s] = w;
}

bool LabelCountConstraint::operator()(const Labeling& x) const {
  int count = 0;
  for (Label l : x)
    if (l == label) ++count;
  return count <= max_count;
}

PairwiseProblem clustering_to_problem(const DissimilarityMatrix& m) {
  PairwiseProblem p(m.size(), 2);
  for (int s = 0; s < m.size(); ++s)
    for (int t = s + 1; t < m.size(); ++t)
      for (Label k = 0; k < 2; ++k) p.set(s, t, k, k, m.at(s, t));
  return p;
}

std::pair<std::vector<int>, std::vector<int>> labeling_to_partition(
    const Labeling& x) {
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (std::size_t s = 0; s < x.size(); ++s) {
    if (x[s] == 0)
      parts.first.push_back(static_cast<int>(s));
    else if (x[s] == 1)
      parts.second.push_back(static_cast<int>(s));
    else
      throw std::invalid_argument("labeling is not binary");
  }
  return parts;
}

FilterResult filter_dbest(const SolutionSet& sol,
                          const std::function<bool(const Labeling&)>& pred) {
  if (sol.status != Status::Accepted)
    throw std::invalid_argument("filter requires an accepted solution set");
  FilterResult result;
  for (std::size_t i = 0; i < sol.entries.size(); ++i) {
    if (pred(sol.entries[i].labeling)) {
      result.solution = sol.entries[i];
      result.rank = i + 1;
      result.certified = true;
      return result;
    }
  }
  return result;
}

}  // namespace minimax
