#include "minimax/oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "minimax/dbest.hpp"

namespace minimax {

namespace {

template <typename Objective>
SolutionSet brute_force_impl(int num_objects, int num_labels, std::uint64_t d,
                             const OracleBudget& budget,
                             Objective&& objective) {
  std::uint64_t count = pow_saturated(num_labels, num_objects);
  if (count > budget.max_enumeration)
    throw std::length_error("oracle budget exceeded");
  std::vector<RankedItem> candidates;
  candidates.reserve(std::min<std::uint64_t>(count, 1u << 16));
  Labeling x(num_objects, 0);
  do {
    candidates.push_back({x, objective(x)});
  } while (next_labeling(x, num_labels));
  auto best = argmind(candidates, d);
  SolutionSet sol;
  for (auto& item : best)
    sol.entries.push_back({std::move(item.payload), item.value});
  return sol;
}

// Invariance of a single table under the per-object operators of its scope:
// max of the three entry values dominates the entry at P(x,y,z), for every
// triple of scope labelings.
bool table_invariant(const ScopeTable& tab, int num_labels,
                     const NonUniformOperator& op, std::uint64_t* work,
                     std::uint64_t work_cap) {
  std::size_t n = tab.scope.size();
  Labeling x(n, 0), y(n, 0), z(n, 0), v(n, 0);
  do {
    std::fill(y.begin(), y.end(), 0);
    do {
      std::fill(z.begin(), z.end(), 0);
      do {
        if (++*work > work_cap)
          throw std::length_error("oracle budget exceeded");
        for (std::size_t i = 0; i < n; ++i)
          v[i] = op.apply(tab.scope.objects[i], x[i], y[i], z[i]);
        Weight lhs = Weight::max_of(
            Weight::max_of(tab.at(x, num_labels), tab.at(y, num_labels)),
            tab.at(z, num_labels));
        if (lhs < tab.at(v, num_labels)) return false;
      } while (next_labeling(z, num_labels));
    } while (next_labeling(y, num_labels));
  } while (next_labeling(x, num_labels));
  return true;
}

Label median3(Label a, Label b, Label c) {
  Label lo = std::min({a, b, c});
  Label hi = std::max({a, b, c});
  return a + b + c - lo - hi;
}

std::optional<NonUniformOperator> search_majority(const GeneralProblem& p,
                                                  const OracleBudget& budget) {
  const int n = p.num_objects;
  const int k = p.num_labels;
  for (const auto& tab : p.tables) {
    if (pow_saturated(k, 3 * tab.scope.size()) > budget.max_enumeration)
      throw std::length_error("oracle budget exceeded");
  }

  // Scopes become checkable once their largest object has a table.
  std::vector<std::vector<const ScopeTable*>> ready(n);
  for (const auto& tab : p.tables)
    ready[tab.scope.objects.back()].push_back(&tab);

  // Free cells are the all-distinct triples; majority identities fix the rest.
  std::vector<std::array<Label, 3>> free_cells;
  for (Label a = 0; a < k; ++a)
    for (Label b = 0; b < k; ++b)
      for (Label c = 0; c < k; ++c)
        if (a != b && b != c && a != c) free_cells.push_back({a, b, c});

  NonUniformOperator op;
  op.num_labels = k;
  op.tables.assign(n, {});

  auto majority_table = [&] {
    std::vector<Label> table(static_cast<std::size_t>(k) * k * k);
    for (Label a = 0; a < k; ++a)
      for (Label b = 0; b < k; ++b)
        for (Label c = 0; c < k; ++c) {
          Label v = a;
          if (a == b || a == c)
            v = a;
          else if (b == c)
            v = b;
          table[(static_cast<std::size_t>(a) * k + b) * k + c] = v;
        }
    return table;
  }();

  std::uint64_t work = 0;
  const std::uint64_t work_cap = budget.max_enumeration;

  // choice[i][cell] enumerates K values per free cell, starting at the median
  // so the uniform median operator is the first full candidate tried.
  std::vector<std::vector<Label>> choice(n,
                                         std::vector<Label>(free_cells.size(),
                                                            0));
  auto build_table = [&](int object) {
    std::vector<Label> table = majority_table;
    for (std::size_t c = 0; c < free_cells.size(); ++c) {
      auto [a, b, cc] = free_cells[c];
      Label v = (median3(a, b, cc) + choice[object][c]) % k;
      table[(static_cast<std::size_t>(a) * k + b) * k + cc] = v;
    }
    return table;
  };

  auto ok_at = [&](int object) {
    for (const ScopeTable* tab : ready[object])
      if (!table_invariant(*tab, k, op, &work, work_cap)) return false;
    return true;
  };

  int object = 0;
  std::fill(choice[0].begin(), choice[0].end(), 0);
  op.tables[0] = build_table(0);
  while (true) {
    if (ok_at(object)) {
      if (object + 1 == n) return op;
      ++object;
      std::fill(choice[object].begin(), choice[object].end(), 0);
      op.tables[object] = build_table(object);
      continue;
    }
    // advance choice[object] like an odometer; backtrack when exhausted
    while (object >= 0) {
      std::size_t c = 0;
      for (; c < free_cells.size(); ++c) {
        if (++choice[object][c] < k) break;
        choice[object][c] = 0;
      }
      if (c < free_cells.size()) {
        op.tables[object] = build_table(object);
        break;
      }
      --object;
    }
    if (object < 0) return std::nullopt;
  }
}

}  // namespace

SolutionSet brute_force_dbest(const GeneralProblem& p, std::uint64_t d,
                              const OracleBudget& budget) {
  if (d == 0) throw std::invalid_argument("d must be positive");
  return brute_force_impl(p.num_objects, p.num_labels, d, budget,
                          [&](const Labeling& x) {
                            return objective_general(p, x);
                          });
}

SolutionSet brute_force_dbest(const PairwiseProblem& p, std::uint64_t d,
                              const OracleBudget& budget) {
  if (d == 0) throw std::invalid_argument("d must be positive");
  return brute_force_impl(p.num_objects(), p.num_labels(), d, budget,
                          [&](const Labeling& x) {
                            return objective_pairwise(p, x);
                          });
}

bool is_polymorphism(const GeneralProblem& p, const NonUniformOperator& op,
                     const OracleBudget& budget) {
  std::uint64_t work = 0;
  for (const auto& tab : p.tables) {
    if (pow_saturated(p.num_labels, 3 * tab.scope.size()) >
        budget.max_enumeration)
      throw std::length_error("oracle budget exceeded");
    std::uint64_t scope_work = 0;
    if (!table_invariant(tab, p.num_labels, op, &scope_work,
                         budget.max_enumeration))
      return false;
    work += scope_work;
  }
  (void)work;
  return true;
}

bool is_polymorphism(const PairwiseProblem& p, const NonUniformOperator& op,
                     const OracleBudget& budget) {
  return is_polymorphism(to_general(p), op, budget);
}

std::optional<NonUniformOperator> find_majority_polymorphism(
    const GeneralProblem& p, const OracleBudget& budget) {
  return search_majority(p, budget);
}

std::optional<NonUniformOperator> find_majority_polymorphism(
    const PairwiseProblem& p, const OracleBudget& budget) {
  return search_majority(to_general(p), budget);
}

NonUniformOperator median_operator(int num_objects, int num_labels) {
  NonUniformOperator op;
  op.num_labels = num_labels;
  std::vector<Label> table(static_cast<std::size_t>(num_labels) * num_labels *
                           num_labels);
  for (Label a = 0; a < num_labels; ++a)
    for (Label b = 0; b < num_labels; ++b)
      for (Label c = 0; c < num_labels; ++c)
        table[(static_cast<std::size_t>(a) * num_labels + b) * num_labels +
              c] = median3(a, b, c);
  op.tables.assign(num_objects, table);
  return op;
}

}  // namespace minimax
