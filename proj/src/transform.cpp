#include "minimax/transform.hpp"

#include <stdexcept>

namespace minimax {

Weight star_to_simplex_entry(std::span<const Weight> phi_ti,
                             std::span<const Weight> phi_tj,
                             std::span<const Weight> q, Label x_i, Label x_j,
                             int num_labels) {
  Weight best = Weight::top();
  for (Label k = 0; k < num_labels; ++k) {
    Weight inner = Weight::max_of(
        phi_ti[static_cast<std::size_t>(k) * num_labels + x_i],
        phi_tj[static_cast<std::size_t>(k) * num_labels + x_j]);
    inner = Weight::max_of(inner, q[k]);
    best = Weight::min_of(best, inner);
  }
  return best;
}

std::vector<Weight> pivot_floor(const PairwiseProblem& p, int t,
                                std::span<const int> others) {
  const int k = p.num_labels();
  std::vector<Weight> q(k, Weight::bottom());
  for (int i : others) {
    for (Label kt = 0; kt < k; ++kt) {
      Weight arm = Weight::top();
      for (Label x = 0; x < k; ++x)
        arm = Weight::min_of(arm, p.at(t, i, kt, x));
      q[kt] = Weight::max_of(q[kt], arm);
    }
  }
  return q;
}

namespace {

std::vector<Weight> pivot_row(const PairwiseProblem& p, int t, int i) {
  const int k = p.num_labels();
  std::vector<Weight> row(static_cast<std::size_t>(k) * k);
  for (Label kt = 0; kt < k; ++kt)
    for (Label x = 0; x < k; ++x)
      row[static_cast<std::size_t>(kt) * k + x] = p.at(t, i, kt, x);
  return row;
}

}  // namespace

void equivalent_transform_over(PairwiseProblem& p, int t,
                               std::span<const int> others) {
  const int k = p.num_labels();
  std::vector<Weight> q = pivot_floor(p, t, others);

  std::vector<std::vector<Weight>> rows(others.size());
  for (std::size_t a = 0; a < others.size(); ++a)
    rows[a] = pivot_row(p, t, others[a]);

  for (std::size_t a = 0; a < others.size(); ++a)
    for (std::size_t b = a + 1; b < others.size(); ++b)
      for (Label xi = 0; xi < k; ++xi)
        for (Label xj = 0; xj < k; ++xj)
          p.merge_max(others[a], others[b], xi, xj,
                      star_to_simplex_entry(rows[a], rows[b], q, xi, xj, k));
}

PairwiseProblem equivalent_transform(const PairwiseProblem& p, int t) {
  if (t < 0 || t >= p.num_objects())
    throw std::invalid_argument("pivot out of range");
  if (p.num_objects() < 3)
    throw std::invalid_argument("transform needs |T| >= 3");
  std::vector<int> others;
  for (int i = 0; i < p.num_objects(); ++i)
    if (i != t) others.push_back(i);
  PairwiseProblem omega = p;
  equivalent_transform_over(omega, t, others);
  return omega;
}

}  // namespace minimax
