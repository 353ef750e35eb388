#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

#include "minimax/problem.hpp"

namespace minimax {

struct RankedItem {
  Labeling payload;
  Weight value;
};

namespace detail {
// Canonical order: by value, ties by lexicographic payload.
inline bool ranked_less(const RankedItem& a, const RankedItem& b) {
  int c = a.value.compare(b.value);
  if (c != 0) return c < 0;
  return a.payload < b.payload;
}
}  // namespace detail

// Selects the d best items (worst selected value <= best excluded value).
// Ties at the threshold are broken by lexicographic payload; the result is
// sorted ascending by (value, payload). Payloads must be pairwise distinct.
inline std::vector<RankedItem> argmind(const std::vector<RankedItem>& items,
                                       std::size_t d) {
  if (d == 0) throw std::invalid_argument("argmind requires d >= 1");
  // Size-d max-selection: the heap top is the current worst kept item.
  std::priority_queue<RankedItem, std::vector<RankedItem>,
                      decltype(&detail::ranked_less)>
      heap(&detail::ranked_less);
  for (const auto& item : items) {
    heap.push(item);
    if (heap.size() > d) heap.pop();
  }
  std::vector<RankedItem> result;
  result.reserve(heap.size());
  while (!heap.empty()) {
    result.push_back(heap.top());
    heap.pop();
  }
  std::reverse(result.begin(), result.end());
  return result;
}

}  // namespace minimax
