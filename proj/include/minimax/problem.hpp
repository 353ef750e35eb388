#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "minimax/weight.hpp"

namespace minimax {

using Label = int;

// A total assignment T -> K, stored densely by object id.
using Labeling = std::vector<Label>;

// Sorted, duplicate-free, non-empty set of object ids.
struct Scope {
  std::vector<int> objects;

  std::size_t size() const { return objects.size(); }
  bool operator==(const Scope&) const = default;
};

// Complete value table of one constraint function: one Weight per element of
// K^|scope|, in lexicographic order (first scope object most significant).
struct ScopeTable {
  Scope scope;
  std::vector<Weight> values;

  Weight at(std::span<const Label> scope_labeling, int num_labels) const;
};

// Arbitrary-order problem with explicit tables.
struct GeneralProblem {
  int num_objects = 0;
  int num_labels = 0;
  std::vector<ScopeTable> tables;

  int order() const;
};

// Second-order problem: one |K|x|K| matrix per unordered pair i<j.
// phi_ij(k,k') is read as phi_ji(k',k); the diagonal is implicitly BOTTOM.
class PairwiseProblem {
 public:
  PairwiseProblem() = default;
  PairwiseProblem(int num_objects, int num_labels);

  int num_objects() const { return num_objects_; }
  int num_labels() const { return num_labels_; }

  Weight at(int i, int j, Label ki, Label kj) const;
  void set(int i, int j, Label ki, Label kj, const Weight& w);
  // phi_ij(ki,kj) := max{phi_ij(ki,kj), w}
  void merge_max(int i, int j, Label ki, Label kj, const Weight& w);

  bool operator==(const PairwiseProblem&) const = default;

 private:
  std::size_t pair_index(int i, int j) const;

  int num_objects_ = 0;
  int num_labels_ = 0;
  std::vector<std::vector<Weight>> matrices_;  // one per pair i<j
};

// Per-object ternary operators p_i: K^3 -> K.
struct NonUniformOperator {
  int num_labels = 0;
  std::vector<std::vector<Label>> tables;  // tables[i] has K^3 entries

  Label apply(int object, Label a, Label b, Label c) const {
    int k = num_labels;
    return tables[object][(static_cast<std::size_t>(a) * k + b) * k + c];
  }
  bool is_majority() const;
  bool operator==(const NonUniformOperator&) const = default;
};

enum class Status { Accepted, Declined };

struct Solution {
  Labeling labeling;
  Weight value;
};

struct DeclineInfo {
  int pivot = -1;
  Labeling labeling;  // the offending labeling over the remaining objects
};

struct SolutionSet {
  Status status = Status::Accepted;
  std::vector<Solution> entries;  // sorted by (value, lexicographic labeling)
  DeclineInfo decline;            // meaningful only when Declined
};

// max over all tables of the entry at the restriction of x; BOTTOM when the
// structure is empty.
Weight objective_general(const GeneralProblem& p, const Labeling& x);

// max over stored pairs i<j of phi_ij(x_i,x_j); BOTTOM for |T| = 1.
Weight objective_pairwise(const PairwiseProblem& p, const Labeling& x);

// Same max restricted to pairs within the given object subset.
Weight objective_over(const PairwiseProblem& p, const Labeling& x,
                      std::span<const int> objects);

std::vector<std::string> validate(const GeneralProblem& p);
std::vector<std::string> validate(const PairwiseProblem& p);

// Component-wise application P(x,y,z); throws on length mismatch.
Labeling apply_operator(const NonUniformOperator& op, const Labeling& x,
                        const Labeling& y, const Labeling& z);

// Pointwise-max merge of tables sharing a scope (no-op on the objective).
void merge_duplicate_scopes(GeneralProblem& p);

// Explicit-table view of a pairwise problem (one scope per stored pair).
GeneralProblem to_general(const PairwiseProblem& p);

// |K|^n capped at 2^63-1; enough for "does d exceed the labeling count".
std::uint64_t pow_saturated(std::uint64_t base, std::uint64_t exp);

// Lexicographic successor of a labeling over 0..num_labels-1 per position;
// returns false after the last one.
bool next_labeling(Labeling& x, int num_labels);

}  // namespace minimax
