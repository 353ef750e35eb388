#include "minimax/problem.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace minimax {

Weight ScopeTable::at(std::span<const Label> scope_labeling,
                      int num_labels) const {
  std::size_t idx = 0;
  for (Label l : scope_labeling) idx = idx * num_labels + l;
  return values[idx];
}

int GeneralProblem::order() const {
  std::size_t n = 0;
  for (const auto& t : tables) n = std::max(n, t.scope.size());
  return static_cast<int>(n);
}

PairwiseProblem::PairwiseProblem(int num_objects, int num_labels)
    : num_objects_(num_objects), num_labels_(num_labels) {
  if (num_objects < 1 || num_labels < 1)
    throw std::invalid_argument("pairwise problem needs |T| >= 1, |K| >= 1");
  std::size_t n = static_cast<std::size_t>(num_objects);
  matrices_.assign(n * (n - 1) / 2,
                   std::vector<Weight>(
                       static_cast<std::size_t>(num_labels) * num_labels,
                       Weight::bottom()));
}

std::size_t PairwiseProblem::pair_index(int i, int j) const {
  // i < j required; pairs ordered (0,1),(0,2),...,(0,n-1),(1,2),...
  std::size_t n = static_cast<std::size_t>(num_objects_);
  std::size_t a = static_cast<std::size_t>(i);
  return a * n - a * (a + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

Weight PairwiseProblem::at(int i, int j, Label ki, Label kj) const {
  if (i == j) return Weight::bottom();
  if (i > j) {
    std::swap(i, j);
    std::swap(ki, kj);
  }
  return matrices_[pair_index(i, j)][static_cast<std::size_t>(ki) *
                                         num_labels_ +
                                     kj];
}

void PairwiseProblem::set(int i, int j, Label ki, Label kj, const Weight& w) {
  if (i == j) throw std::invalid_argument("diagonal entries are implicit");
  if (i > j) {
    std::swap(i, j);
    std::swap(ki, kj);
  }
  matrices_[pair_index(i, j)]
           [static_cast<std::size_t>(ki) * num_labels_ + kj] = w;
}

void PairwiseProblem::merge_max(int i, int j, Label ki, Label kj,
                                const Weight& w) {
  if (i == j) throw std::invalid_argument("diagonal entries are implicit");
  if (i > j) {
    std::swap(i, j);
    std::swap(ki, kj);
  }
  Weight& cell = matrices_[pair_index(i, j)]
                          [static_cast<std::size_t>(ki) * num_labels_ + kj];
  cell = Weight::max_of(cell, w);
}

bool NonUniformOperator::is_majority() const {
  for (const auto& table : tables) {
    for (Label x = 0; x < num_labels; ++x) {
      for (Label y = 0; y < num_labels; ++y) {
        std::size_t k = static_cast<std::size_t>(num_labels);
        auto cell = [&](Label a, Label b, Label c) {
          return table[(static_cast<std::size_t>(a) * k + b) * k + c];
        };
        if (cell(y, x, x) != x || cell(x, y, x) != x || cell(x, x, y) != x)
          return false;
      }
    }
  }
  return true;
}

Weight objective_general(const GeneralProblem& p, const Labeling& x) {
  if (static_cast<int>(x.size()) != p.num_objects)
    throw std::invalid_argument("labeling length != num_objects");
  Weight result = Weight::bottom();
  std::vector<Label> restriction;
  for (const auto& table : p.tables) {
    restriction.clear();
    for (int id : table.scope.objects) restriction.push_back(x[id]);
    result = Weight::max_of(result, table.at(restriction, p.num_labels));
  }
  return result;
}

Weight objective_pairwise(const PairwiseProblem& p, const Labeling& x) {
  if (static_cast<int>(x.size()) != p.num_objects())
    throw std::invalid_argument("labeling length != num_objects");
  Weight result = Weight::bottom();
  for (int i = 0; i < p.num_objects(); ++i)
    for (int j = i + 1; j < p.num_objects(); ++j)
      result = Weight::max_of(result, p.at(i, j, x[i], x[j]));
  return result;
}

Weight objective_over(const PairwiseProblem& p, const Labeling& x,
                      std::span<const int> objects) {
  Weight result = Weight::bottom();
  for (std::size_t a = 0; a < objects.size(); ++a)
    for (std::size_t b = a + 1; b < objects.size(); ++b) {
      int i = objects[a];
      int j = objects[b];
      result = Weight::max_of(result, p.at(i, j, x[i], x[j]));
    }
  return result;
}

std::vector<std::string> validate(const GeneralProblem& p) {
  std::vector<std::string> errors;
  if (p.num_objects < 1) errors.push_back("num_objects must be positive");
  if (p.num_labels < 1) errors.push_back("num_labels must be positive");
  if (!errors.empty()) return errors;
  std::map<std::vector<int>, int> seen;
  for (std::size_t s = 0; s < p.tables.size(); ++s) {
    const auto& table = p.tables[s];
    std::string where = "scope #" + std::to_string(s);
    if (table.scope.objects.empty()) {
      errors.push_back(where + ": empty scope");
      continue;
    }
    bool ids_ok = true;
    for (int id : table.scope.objects)
      if (id < 0 || id >= p.num_objects) {
        errors.push_back(where + ": object id out of range");
        ids_ok = false;
        break;
      }
    for (std::size_t a = 0; ids_ok && a + 1 < table.scope.objects.size(); ++a)
      if (table.scope.objects[a] >= table.scope.objects[a + 1]) {
        errors.push_back(where + ": scope not strictly increasing");
        ids_ok = false;
      }
    if (!ids_ok) continue;
    if (auto [it, inserted] = seen.emplace(table.scope.objects, s); !inserted)
      errors.push_back(where + ": duplicate of scope #" +
                       std::to_string(it->second) + " (merge on load)");
    std::uint64_t expected = pow_saturated(
        static_cast<std::uint64_t>(p.num_labels), table.scope.size());
    if (table.values.size() != expected)
      errors.push_back(where + ": incomplete table (" +
                       std::to_string(table.values.size()) + " of " +
                       std::to_string(expected) + " entries)");
  }
  return errors;
}

std::vector<std::string> validate(const PairwiseProblem& p) {
  std::vector<std::string> errors;
  if (p.num_objects() < 1) errors.push_back("num_objects must be positive");
  if (p.num_labels() < 1) errors.push_back("num_labels must be positive");
  return errors;
}

Labeling apply_operator(const NonUniformOperator& op, const Labeling& x,
                        const Labeling& y, const Labeling& z) {
  if (x.size() != y.size() || x.size() != z.size())
    throw std::invalid_argument("operator arguments differ in length");
  if (x.size() > op.tables.size())
    throw std::invalid_argument("labeling longer than operator family");
  Labeling v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    v[i] = op.apply(static_cast<int>(i), x[i], y[i], z[i]);
  return v;
}

void merge_duplicate_scopes(GeneralProblem& p) {
  std::map<std::vector<int>, std::size_t> first;
  std::vector<ScopeTable> merged;
  for (auto& table : p.tables) {
    auto [it, inserted] = first.emplace(table.scope.objects, merged.size());
    if (inserted) {
      merged.push_back(std::move(table));
    } else {
      auto& target = merged[it->second].values;
      for (std::size_t e = 0; e < target.size(); ++e)
        target[e] = Weight::max_of(target[e], table.values[e]);
    }
  }
  p.tables = std::move(merged);
}

GeneralProblem to_general(const PairwiseProblem& p) {
  GeneralProblem g;
  g.num_objects = p.num_objects();
  g.num_labels = p.num_labels();
  const int k = p.num_labels();
  for (int i = 0; i < p.num_objects(); ++i)
    for (int j = i + 1; j < p.num_objects(); ++j) {
      ScopeTable table;
      table.scope.objects = {i, j};
      table.values.reserve(static_cast<std::size_t>(k) * k);
      for (Label ki = 0; ki < k; ++ki)
        for (Label kj = 0; kj < k; ++kj)
          table.values.push_back(p.at(i, j, ki, kj));
      g.tables.push_back(std::move(table));
    }
  return g;
}

std::uint64_t pow_saturated(std::uint64_t base, std::uint64_t exp) {
  const std::uint64_t cap = std::numeric_limits<std::int64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t e = 0; e < exp; ++e) {
    if (base != 0 && result > cap / base) return cap;
    result *= base;
  }
  return result;
}

bool next_labeling(Labeling& x, int num_labels) {
  for (std::size_t pos = x.size(); pos-- > 0;) {
    if (++x[pos] < num_labels) return true;
    x[pos] = 0;
  }
  return false;
}

}  // namespace minimax
