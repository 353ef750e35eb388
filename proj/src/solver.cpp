#include "minimax/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "minimax/dbest.hpp"
#include "minimax/transform.hpp"

namespace minimax {

namespace {

// d-best over an explicit candidate list, canonical tie-break.
SolutionSet select(std::vector<RankedItem> candidates, std::uint64_t d) {
  auto best = argmind(candidates, d);
  SolutionSet sol;
  sol.entries.reserve(best.size());
  for (auto& item : best)
    sol.entries.push_back({std::move(item.payload), item.value});
  return sol;
}

// Base case over an active subset; labelings are full length with inactive
// positions fixed to 0.
SolutionSet base_over(const PairwiseProblem& p, std::span<const int> active,
                      std::uint64_t d) {
  const int k = p.num_labels();
  std::vector<RankedItem> candidates;
  if (active.size() == 1) {
    for (Label l = 0; l < k; ++l) {
      Labeling x(p.num_objects(), 0);
      x[active[0]] = l;
      candidates.push_back({std::move(x), Weight::bottom()});
    }
  } else {
    int a = std::min(active[0], active[1]);
    int b = std::max(active[0], active[1]);
    for (Label la = 0; la < k; ++la)
      for (Label lb = 0; lb < k; ++lb) {
        Labeling x(p.num_objects(), 0);
        x[a] = la;
        x[b] = lb;
        candidates.push_back({std::move(x), p.at(a, b, la, lb)});
      }
  }
  return select(std::move(candidates), d);
}

// min over k of max over arms of the pivot row at (k, x_i).
Weight cheapest_extension(const std::vector<std::vector<Weight>>& pivot_rows,
                          std::span<const int> others, const Labeling& x,
                          int k) {
  Weight best = Weight::top();
  for (Label kt = 0; kt < k; ++kt) {
    Weight arm_max = Weight::bottom();
    for (std::size_t a = 0; a < others.size(); ++a)
      arm_max = Weight::max_of(
          arm_max,
          pivot_rows[a][static_cast<std::size_t>(kt) * k + x[others[a]]]);
    best = Weight::min_of(best, arm_max);
  }
  return best;
}

}  // namespace

SolutionSet solve_base(const PairwiseProblem& p, std::uint64_t d) {
  if (p.num_objects() > 2)
    throw std::invalid_argument("solve_base requires |T| <= 2");
  if (d == 0) throw std::invalid_argument("d must be positive");
  std::vector<int> active(p.num_objects());
  std::iota(active.begin(), active.end(), 0);
  return base_over(p, active, d);
}

SolutionSet extend_and_select(const SolutionSet& sol_prev,
                              const PairwiseProblem& p, int t,
                              std::uint64_t d) {
  const int k = p.num_labels();
  std::vector<RankedItem> candidates;
  candidates.reserve(sol_prev.entries.size() * k);
  for (const auto& entry : sol_prev.entries) {
    for (Label kt = 0; kt < k; ++kt) {
      Labeling x = entry.labeling;
      x[t] = kt;
      Weight value = objective_pairwise(p, x);
      candidates.push_back({std::move(x), value});
    }
  }
  return select(std::move(candidates), d);
}

std::optional<DeclineInfo> safety_check(const SolutionSet& sol_prev,
                                        const PairwiseProblem& p, int t) {
  const int k = p.num_labels();
  std::vector<int> others;
  for (int i = 0; i < p.num_objects(); ++i)
    if (i != t) others.push_back(i);
  std::vector<std::vector<Weight>> rows(others.size());
  for (std::size_t a = 0; a < others.size(); ++a) {
    rows[a].resize(static_cast<std::size_t>(k) * k);
    for (Label kt = 0; kt < k; ++kt)
      for (Label x = 0; x < k; ++x)
        rows[a][static_cast<std::size_t>(kt) * k + x] =
            p.at(t, others[a], kt, x);
  }
  for (const auto& entry : sol_prev.entries) {
    Weight lhs = objective_over(p, entry.labeling, others);
    Weight rhs = cheapest_extension(rows, others, entry.labeling, k);
    if (lhs < rhs) return DeclineInfo{t, entry.labeling};
  }
  return std::nullopt;
}

SolutionSet solve(const PairwiseProblem& p, const SolverConfig& cfg) {
  if (cfg.d == 0) throw std::invalid_argument("d must be positive");
  const int n = p.num_objects();
  const int k = p.num_labels();

  std::vector<int> order = cfg.elimination_order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  } else {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (static_cast<std::size_t>(i) >= sorted.size() || sorted[i] != i)
        throw std::invalid_argument(
            "elimination order must be a permutation of 0..|T|-1");
  }

  struct Level {
    int pivot;
    std::vector<int> others;
    std::vector<std::vector<Weight>> pivot_rows;  // per arm, (kt * K + x)
  };

  PairwiseProblem work = p;
  std::vector<int> active = order;
  std::vector<Level> levels;

  while (active.size() > 2) {
    int t = active.back();
    active.pop_back();
    Level level{t, active, {}};
    if (cfg.use_equivalent_transform)
      equivalent_transform_over(work, t, level.others);
    level.pivot_rows.resize(level.others.size());
    for (std::size_t a = 0; a < level.others.size(); ++a) {
      auto& row = level.pivot_rows[a];
      row.resize(static_cast<std::size_t>(k) * k);
      for (Label kt = 0; kt < k; ++kt)
        for (Label x = 0; x < k; ++x)
          row[static_cast<std::size_t>(kt) * k + x] =
              work.at(t, level.others[a], kt, x);
    }
    levels.push_back(std::move(level));
  }

  SolutionSet sol = base_over(work, active, cfg.d);

  for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
    // Safety test against the recorded pivot rows.
    for (const auto& entry : sol.entries) {
      Weight rhs = cheapest_extension(level->pivot_rows, level->others,
                                      entry.labeling, k);
      if (entry.value < rhs) {
        SolutionSet declined;
        declined.status = Status::Declined;
        declined.decline = DeclineInfo{level->pivot, entry.labeling};
        return declined;
      }
    }
    // Extension: objective = max of the kept S-side value and the pivot arms.
    std::vector<RankedItem> candidates;
    candidates.reserve(sol.entries.size() * k);
    for (const auto& entry : sol.entries) {
      for (Label kt = 0; kt < k; ++kt) {
        Weight value = entry.value;
        for (std::size_t a = 0; a < level->others.size(); ++a)
          value = Weight::max_of(
              value, level->pivot_rows[a][static_cast<std::size_t>(kt) * k +
                                          entry.labeling[level->others[a]]]);
        Labeling x = entry.labeling;
        x[level->pivot] = kt;
        candidates.push_back({std::move(x), value});
      }
    }
    sol = select(std::move(candidates), cfg.d);
  }

  return sol;
}

GeneralSolveResult solve_general(const GeneralProblem& p,
                                 const SolverConfig& cfg) {
  if (p.num_objects == 1) {
    // Unary values have no pairwise slot; rank the |K| labelings directly.
    std::vector<RankedItem> candidates;
    for (Label l = 0; l < p.num_labels; ++l) {
      Labeling x{l};
      candidates.push_back({x, objective_general(p, x)});
    }
    return {select(std::move(candidates), cfg.d), std::nullopt};
  }
  ReduceOutcome reduced = reduce_order(p);
  if (!reduced.accepted()) {
    SolutionSet declined;
    declined.status = Status::Declined;
    return {std::move(declined), reduced.witness};
  }
  return {solve(*reduced.pairwise, cfg), std::nullopt};
}

}  // namespace minimax
