#include <doctest.h>

#include "minimax/reduce.hpp"
#include "minimax/reductions.hpp"
#include "test_util.hpp"

using namespace minimax;
using testutil::W;

namespace {

// Brute-force pair projection straight from the definition.
std::vector<Weight> oracle_projection(const ScopeTable& tab, int i, int j,
                                      int k) {
  std::vector<Weight> m(static_cast<std::size_t>(k) * k, Weight::top());
  int pi = -1, pj = -1;
  for (std::size_t p = 0; p < tab.scope.size(); ++p) {
    if (tab.scope.objects[p] == i) pi = static_cast<int>(p);
    if (tab.scope.objects[p] == j) pj = static_cast<int>(p);
  }
  std::size_t e = 0;
  for (const auto& x : testutil::all_labelings(
           static_cast<int>(tab.scope.size()), k)) {
    auto& cell = m[static_cast<std::size_t>(x[pi]) * k + x[pj]];
    cell = Weight::min_of(cell, tab.values[e]);
    ++e;
  }
  return m;
}

}  // namespace

TEST_CASE("project_table_to_pair on a full binary scope is the table") {
  ScopeTable tab{{{0, 1}}, {W(1), W(4), W(2), W(0)}};
  CHECK(project_table_to_pair(tab, 0, 1, 2) == tab.values);
}

TEST_CASE("projection of a constant table is constant") {
  ScopeTable tab{{{0, 1, 2}}, std::vector<Weight>(8, W(6))};
  auto m = project_table_to_pair(tab, 0, 2, 2);
  for (const auto& w : m) CHECK(w == W(6));
}

TEST_CASE("projection minimizes over the excluded variable") {
  ScopeTable tab{{{0, 1, 2}}, std::vector<Weight>(8, Weight::top())};
  tab.values[0] = W(1);  // (0,0,0)
  tab.values[3] = W(4);  // (0,1,1)
  auto m = project_table_to_pair(tab, 0, 1, 2);
  CHECK(m[0] == W(1));          // (0,0)
  CHECK(m[1] == W(4));          // (0,1)
  CHECK(m[2] == Weight::top()); // (1,0)
  CHECK(m[3] == Weight::top()); // (1,1)
  CHECK(m == oracle_projection(tab, 0, 1, 2));
}

TEST_CASE("projection errors when the pair is not in the scope") {
  ScopeTable tab{{{0, 1}}, {W(1), W(1), W(1), W(1)}};
  CHECK_THROWS_AS(project_table_to_pair(tab, 0, 2, 2), std::invalid_argument);
}

TEST_CASE("check_reconstruction") {
  SUBCASE("binary scopes always pass") {
    ScopeTable tab{{{0, 1}}, {W(1), W(4), W(2), W(0)}};
    std::vector<std::vector<std::vector<Weight>>> proj(
        2, std::vector<std::vector<Weight>>(2));
    proj[0][1] = project_table_to_pair(tab, 0, 1, 2);
    CHECK(!check_reconstruction(tab, proj, 2));
  }
  SUBCASE("max-of-pairwise tables pass") {
    auto g = to_general(testutil::random_pairwise(3, 3, 2));
    // assemble one order-3 table as the max of the three pair tables
    ScopeTable tab{{{0, 1, 2}}, {}};
    for (const auto& x : testutil::all_labelings(3, 2))
      tab.values.push_back(objective_general(g, x));
    std::vector<std::vector<std::vector<Weight>>> proj(
        3, std::vector<std::vector<Weight>>(3));
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        proj[a][b] = project_table_to_pair(tab, a, b, 2);
    CHECK(!check_reconstruction(tab, proj, 2));
  }
  SUBCASE("parity table fails with the first lexicographic witness") {
    auto p = testutil::parity_problem();
    const auto& tab = p.tables[0];
    std::vector<std::vector<std::vector<Weight>>> proj(
        3, std::vector<std::vector<Weight>>(3));
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        proj[a][b] = project_table_to_pair(tab, a, b, 2);
    auto witness = check_reconstruction(tab, proj, 2);
    REQUIRE(witness);
    CHECK(*witness == Labeling{0, 0, 1});
  }
}

TEST_CASE("reduce_order keeps order-2 problems intact") {
  auto pair = testutil::random_pairwise(21, 4, 2);
  auto outcome = reduce_order(to_general(pair));
  REQUIRE(outcome.accepted());
  for (const auto& x : testutil::all_labelings(4, 2))
    CHECK(objective_pairwise(*outcome.pairwise, x) ==
          objective_pairwise(pair, x));
}

TEST_CASE("reduce_order accepts clustering instances") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    InstanceGenSpec spec;
    spec.seed = seed;
    spec.num_objects = 5;
    spec.family = StructureFamily::Clustering;
    auto g = generate_instance(spec);
    auto outcome = reduce_order(g);
    REQUIRE(outcome.accepted());
    for (const auto& x : testutil::all_labelings(5, 2))
      CHECK(objective_pairwise(*outcome.pairwise, x) ==
            objective_general(g, x));
  }
}

TEST_CASE("reduce_order declines the parity table") {
  auto outcome = reduce_order(testutil::parity_problem());
  REQUIRE(!outcome.accepted());
  CHECK(outcome.witness->scope_index == 0);
  CHECK(outcome.witness->scope_labeling == Labeling{0, 0, 1});

  // soundness of the witness: the reconstruction really differs there
  auto parity = testutil::parity_problem();
  const auto& tab = parity.tables[0];
  std::vector<std::vector<std::vector<Weight>>> proj(
      3, std::vector<std::vector<Weight>>(3));
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      proj[a][b] = project_table_to_pair(tab, a, b, 2);
  const auto& x = outcome.witness->scope_labeling;
  Weight recon = Weight::bottom();
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      recon = Weight::max_of(recon,
                             proj[a][b][static_cast<std::size_t>(x[a]) * 2 +
                                        x[b]]);
  CHECK(recon != tab.at(x, 2));
}

TEST_CASE("reduce_order folds unary scopes into a neighbor") {
  GeneralProblem p;
  p.num_objects = 3;
  p.num_labels = 2;
  p.tables.push_back({{{1}}, {W(4), W(7)}});
  p.tables.push_back({{{0, 2}}, {W(1), W(2), W(3), W(0)}});
  auto outcome = reduce_order(p);
  REQUIRE(outcome.accepted());
  for (const auto& x : testutil::all_labelings(3, 2))
    CHECK(objective_pairwise(*outcome.pairwise, x) ==
          objective_general(p, x));
}

TEST_CASE("reduce_order equivalence on accepted random order-3 input") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    InstanceGenSpec spec;
    spec.seed = seed;
    spec.num_objects = 4;
    spec.num_labels = 2;
    spec.family = StructureFamily::RandomScopes;
    spec.scope_order = 3;
    spec.scope_count = 3;
    spec.p_top = 0.2;
    auto g = generate_instance(spec);
    auto outcome = reduce_order(g);
    if (!outcome.accepted()) {
      // the witness must be genuine
      const auto& tab = g.tables[outcome.witness->scope_index];
      std::vector<std::vector<std::vector<Weight>>> proj(
          tab.scope.size(),
          std::vector<std::vector<Weight>>(tab.scope.size()));
      for (std::size_t a = 0; a < tab.scope.size(); ++a)
        for (std::size_t b = a + 1; b < tab.scope.size(); ++b)
          proj[a][b] = project_table_to_pair(tab, tab.scope.objects[a],
                                             tab.scope.objects[b], 2);
      const auto& x = outcome.witness->scope_labeling;
      Weight recon = Weight::bottom();
      for (std::size_t a = 0; a < tab.scope.size(); ++a)
        for (std::size_t b = a + 1; b < tab.scope.size(); ++b)
          recon = Weight::max_of(
              recon,
              proj[a][b][static_cast<std::size_t>(x[a]) * 2 + x[b]]);
      CHECK(recon != tab.at(x, 2));
      continue;
    }
    for (const auto& x : testutil::all_labelings(4, 2))
      CHECK(objective_pairwise(*outcome.pairwise, x) ==
            objective_general(g, x));
  }
}

TEST_CASE("reduce_order operation count stays within the stated envelope") {
  InstanceGenSpec spec;
  spec.seed = 5;
  spec.num_objects = 6;
  spec.num_labels = 3;
  spec.family = StructureFamily::RandomScopes;
  spec.scope_order = 3;
  spec.scope_count = 8;
  auto g = generate_instance(spec);
  std::uint64_t l = 0;
  for (const auto& tab : g.tables) l += tab.values.size();
  std::uint64_t n = 3, t = 6, k = 3, s = g.tables.size();
  reset_weight_op_count();
  reduce_order(g);
  std::uint64_t bound = 64 * (t * t * k * k + s * k * k * n * n + l * n * n);
  CHECK(weight_op_count() <= bound);
}
