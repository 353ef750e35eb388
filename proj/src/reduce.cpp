#include "minimax/reduce.hpp"

#include <stdexcept>

namespace minimax {

namespace {

// All labelings of a scope in lexicographic order, synchronized with the
// table's value indexing.
struct ScopeEnumerator {
  Labeling labeling;
  bool first = true;

  explicit ScopeEnumerator(std::size_t scope_size) : labeling(scope_size, 0) {}

  bool next(int num_labels) {
    if (first) {
      first = false;
      return true;
    }
    return next_labeling(labeling, num_labels);
  }
};

}  // namespace

std::vector<Weight> project_table_to_pair(const ScopeTable& tab, int i, int j,
                                          int num_labels) {
  int pos_i = -1;
  int pos_j = -1;
  for (std::size_t p = 0; p < tab.scope.size(); ++p) {
    if (tab.scope.objects[p] == i) pos_i = static_cast<int>(p);
    if (tab.scope.objects[p] == j) pos_j = static_cast<int>(p);
  }
  if (pos_i < 0 || pos_j < 0 || i == j)
    throw std::invalid_argument("pair not contained in scope");

  std::vector<Weight> matrix(
      static_cast<std::size_t>(num_labels) * num_labels, Weight::top());
  ScopeEnumerator it(tab.scope.size());
  std::size_t entry = 0;
  while (it.next(num_labels)) {
    std::size_t cell = static_cast<std::size_t>(it.labeling[pos_i]) *
                           num_labels +
                       it.labeling[pos_j];
    matrix[cell] = Weight::min_of(matrix[cell], tab.values[entry]);
    ++entry;
  }
  return matrix;
}

std::optional<Labeling> check_reconstruction(
    const ScopeTable& tab,
    const std::vector<std::vector<std::vector<Weight>>>& projections,
    int num_labels) {
  std::size_t n = tab.scope.size();
  if (n < 2) return std::nullopt;  // unary: nothing to reconstruct
  ScopeEnumerator it(n);
  std::size_t entry = 0;
  while (it.next(num_labels)) {
    Weight recon = Weight::bottom();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        std::size_t cell = static_cast<std::size_t>(it.labeling[a]) *
                               num_labels +
                           it.labeling[b];
        recon = Weight::max_of(recon, projections[a][b][cell]);
      }
    if (recon != tab.values[entry]) return it.labeling;
    ++entry;
  }
  return std::nullopt;
}

ReduceOutcome reduce_order(const GeneralProblem& p) {
  auto errors = validate(p);
  for (const auto& e : errors)
    if (e.find("duplicate") == std::string::npos)
      throw std::invalid_argument("invalid problem: " + e);

  GeneralProblem merged = p;
  merge_duplicate_scopes(merged);

  const int k = merged.num_labels;
  PairwiseProblem psi(merged.num_objects, k);

  for (std::size_t s = 0; s < merged.tables.size(); ++s) {
    const ScopeTable& tab = merged.tables[s];
    std::size_t n = tab.scope.size();

    if (n == 1) {
      // Fold phi_i(k) into psi_{i,j0}(k,.) for the smallest j0 != i. A lone
      // object has no such neighbor; solve_general handles |T| = 1 directly.
      if (merged.num_objects < 2) continue;
      int i = tab.scope.objects[0];
      int j0 = i == 0 ? 1 : 0;
      for (Label ki = 0; ki < k; ++ki)
        for (Label kj = 0; kj < k; ++kj)
          psi.merge_max(i, j0, ki, kj, tab.values[ki]);
      continue;
    }

    std::vector<std::vector<std::vector<Weight>>> projections(
        n, std::vector<std::vector<Weight>>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        projections[a][b] = project_table_to_pair(
            tab, tab.scope.objects[a], tab.scope.objects[b], k);

    if (auto witness = check_reconstruction(tab, projections, k))
      return {.pairwise = std::nullopt,
              .witness = ReduceWitness{s, *witness}};

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        int i = tab.scope.objects[a];
        int j = tab.scope.objects[b];
        for (Label ki = 0; ki < k; ++ki)
          for (Label kj = 0; kj < k; ++kj)
            psi.merge_max(
                i, j, ki, kj,
                projections[a][b][static_cast<std::size_t>(ki) * k + kj]);
      }
  }

  return {.pairwise = std::move(psi), .witness = std::nullopt};
}

}  // namespace minimax
