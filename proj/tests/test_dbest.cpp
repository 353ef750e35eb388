#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "minimax/dbest.hpp"
#include "test_util.hpp"

using namespace minimax;
using testutil::W;

namespace {

std::vector<RankedItem> items_from(const std::vector<std::int64_t>& values) {
  std::vector<RankedItem> items;
  for (std::size_t i = 0; i < values.size(); ++i)
    items.push_back({Labeling{static_cast<Label>(i)}, W(values[i])});
  return items;
}

Weight max_value(const std::vector<RankedItem>& items) {
  Weight m = Weight::bottom();
  for (const auto& item : items) m = Weight::max_of(m, item.value);
  return m;
}

}  // namespace

TEST_CASE("argmind picks strictly smaller values") {
  auto result = argmind(items_from({5, 3, 3}), 2);
  REQUIRE(result.size() == 2);
  CHECK(result[0].payload == Labeling{1});
  CHECK(result[1].payload == Labeling{2});
}

TEST_CASE("argmind with d >= |items| returns everything") {
  auto items = items_from({4, 1, 2});
  CHECK(argmind(items, 3).size() == 3);
  CHECK(argmind(items, 100).size() == 3);
}

TEST_CASE("argmind tie-break is lexicographic and subset-optimal") {
  auto items = items_from({2, 2, 2, 7});
  auto result = argmind(items, 2);
  REQUIRE(result.size() == 2);
  CHECK(result[0].payload == Labeling{0});
  CHECK(result[1].payload == Labeling{1});
  // subset property over all six 2-subsets
  for (std::size_t a = 0; a < items.size(); ++a)
    for (std::size_t b = a + 1; b < items.size(); ++b)
      CHECK(max_value(result) <=
            Weight::max_of(items[a].value, items[b].value));
}

TEST_CASE("argmind rejects d = 0") {
  CHECK_THROWS_AS(argmind(items_from({1}), 0), std::invalid_argument);
}

TEST_CASE("argmind subset property, determinism and cardinality") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng() % 10;
    std::vector<std::int64_t> values(n);
    for (auto& v : values) v = rng() % 5;
    auto items = items_from(values);
    for (std::size_t d = 1; d <= n; ++d) {
      auto result = argmind(items, d);
      CHECK(result.size() == std::min(d, n));
      CHECK(std::is_sorted(result.begin(), result.end(),
                           [](const RankedItem& a, const RankedItem& b) {
                             return detail::ranked_less(a, b);
                           }));

      // worst selected <= worst of every other d-subset, via bitmasks
      Weight worst = max_value(result);
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != d) continue;
        Weight other = Weight::bottom();
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) other = Weight::max_of(other, items[i].value);
        CHECK(worst <= other);
      }

      auto shuffled = items;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      auto again = argmind(shuffled, d);
      REQUIRE(again.size() == result.size());
      for (std::size_t i = 0; i < result.size(); ++i) {
        CHECK(again[i].payload == result[i].payload);
        CHECK(again[i].value == result[i].value);
      }
    }
  }
}
