#include <doctest.h>

#include "minimax/oracle.hpp"
#include "minimax/problem.hpp"
#include "test_util.hpp"

using namespace minimax;
using testutil::W;

TEST_CASE("weight order is total with sentinels at the ends") {
  std::vector<Weight> sample{Weight::bottom(), W(-7), W(0),
                             Weight::finite(25, 1),  // 2.5
                             W(3), Weight::top()};
  for (std::size_t a = 0; a < sample.size(); ++a) {
    for (std::size_t b = 0; b < sample.size(); ++b) {
      int lt = sample[a] < sample[b];
      int eq = sample[a] == sample[b];
      int gt = sample[a] > sample[b];
      CHECK(lt + eq + gt == 1);
      CHECK(eq == (a == b));
      CHECK(lt == (a < b));
    }
  }
}

TEST_CASE("bottom and top are identities of max and min") {
  Weight v = W(42);
  CHECK(Weight::max_of(Weight::bottom(), v) == v);
  CHECK(Weight::min_of(Weight::top(), v) == v);
  CHECK(Weight::max_of(v, v) == v);
  CHECK(Weight::min_of(v, v) == v);
}

TEST_CASE("weight decimal comparison is exact") {
  CHECK(Weight::finite(25, 1) == Weight::finite(250, 2));
  CHECK(Weight::finite(1, 1) < Weight::finite(11, 2));  // 0.1 < 0.11
  CHECK(*Weight::parse("2.50") == Weight::finite(25, 1));
  CHECK(Weight::parse("2.50")->to_string() == "2.5");
  CHECK(Weight::parse("-inf")->is_bottom());
  CHECK(Weight::parse("+inf")->is_top());
  CHECK(!Weight::parse("abc"));
}

TEST_CASE("objective_general") {
  GeneralProblem p;
  p.num_objects = 2;
  p.num_labels = 2;
  p.tables.push_back({{{0, 1}}, {W(3), W(7), W(7), W(7)}});
  CHECK(objective_general(p, {0, 0}) == W(3));

  SUBCASE("empty structure is the identity of max") {
    GeneralProblem empty;
    empty.num_objects = 2;
    empty.num_labels = 2;
    CHECK(objective_general(empty, {1, 0}).is_bottom());
  }

  SUBCASE("two overlapping scopes") {
    GeneralProblem q;
    q.num_objects = 3;
    q.num_labels = 2;
    q.tables.push_back({{{0, 1}}, {W(0), W(2), W(0), W(0)}});   // phi(0,1)=2
    q.tables.push_back({{{1, 2}}, {W(0), W(0), W(5), W(0)}});   // phi(1,0)=5
    CHECK(objective_general(q, {0, 1, 0}) == W(5));
  }

  SUBCASE("dimension mismatch throws") {
    CHECK_THROWS_AS(objective_general(p, {0, 0, 0}), std::invalid_argument);
  }
}

TEST_CASE("objective_general dominates every table entry") {
  auto g = to_general(testutil::random_pairwise(7, 4, 3));
  for (const auto& x : testutil::all_labelings(4, 3)) {
    Weight obj = objective_general(g, x);
    for (const auto& tab : g.tables) {
      Labeling r;
      for (int id : tab.scope.objects) r.push_back(x[id]);
      CHECK(obj >= tab.at(r, 3));
    }
  }
}

TEST_CASE("objective_pairwise") {
  SUBCASE("single object is constantly BOTTOM") {
    PairwiseProblem p(1, 3);
    CHECK(objective_pairwise(p, {2}).is_bottom());
  }
  SUBCASE("two objects is a matrix lookup") {
    auto p = testutil::make_pairwise(2, 2, {{{0, 1}, {1, 4, 2, 0}}});
    CHECK(objective_pairwise(p, {1, 0}) == W(2));
  }
  SUBCASE("max over all stored pairs") {
    PairwiseProblem p(3, 2);
    p.set(0, 2, 1, 1, W(9));
    CHECK(objective_pairwise(p, {1, 0, 1}) == W(9));
  }
}

TEST_CASE("pairwise accessor symmetry") {
  auto p = testutil::random_pairwise(11, 4, 3);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (Label k = 0; k < 3; ++k)
        for (Label kp = 0; kp < 3; ++kp)
          CHECK(p.at(i, j, k, kp) == p.at(j, i, kp, k));
}

TEST_CASE("validate") {
  GeneralProblem p;
  p.num_objects = 2;
  p.num_labels = 2;
  p.tables.push_back({{{0, 1}}, {W(1), W(2), W(3), W(4)}});
  CHECK(validate(p).empty());

  SUBCASE("incomplete table") {
    p.tables[0].values.pop_back();
    auto errors = validate(p);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].find("incomplete table") != std::string::npos);
  }
  SUBCASE("object id out of range") {
    p.tables[0].scope.objects = {0, 5};
    auto errors = validate(p);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].find("out of range") != std::string::npos);
  }
}

TEST_CASE("apply_operator") {
  SUBCASE("majority of two equal arguments") {
    auto op = median_operator(2, 2);
    CHECK(apply_operator(op, {0, 1}, {0, 1}, {1, 0}) == Labeling{0, 1});
  }
  SUBCASE("idempotence") {
    auto op = median_operator(3, 3);
    Labeling x{2, 0, 1};
    CHECK(apply_operator(op, x, x, x) == x);
  }
  SUBCASE("per-object distinct operators") {
    // p_0 = median, p_1 = first argument on all-distinct triples.
    NonUniformOperator op = median_operator(2, 3);
    for (Label a = 0; a < 3; ++a)
      for (Label b = 0; b < 3; ++b)
        for (Label c = 0; c < 3; ++c)
          if (a != b && b != c && a != c)
            op.tables[1][(static_cast<std::size_t>(a) * 3 + b) * 3 + c] = a;
    CHECK(op.is_majority());
    CHECK(apply_operator(op, {0, 0}, {1, 1}, {2, 2}) == Labeling{1, 0});
  }
  SUBCASE("length mismatch throws") {
    auto op = median_operator(2, 2);
    CHECK_THROWS_AS(apply_operator(op, {0, 1}, {0}, {1, 0}),
                    std::invalid_argument);
  }
}

TEST_CASE("majority identities hold for apply_operator on samples") {
  auto op = median_operator(3, 3);
  for (const auto& x : testutil::all_labelings(3, 3))
    for (const auto& y : testutil::all_labelings(3, 3)) {
      CHECK(apply_operator(op, x, x, y) == x);
      CHECK(apply_operator(op, x, y, x) == x);
      CHECK(apply_operator(op, y, x, x) == x);
    }
}

TEST_CASE("duplicate scopes merge by pointwise max") {
  GeneralProblem p;
  p.num_objects = 2;
  p.num_labels = 2;
  p.tables.push_back({{{0, 1}}, {W(1), W(5), W(0), W(2)}});
  p.tables.push_back({{{0, 1}}, {W(3), W(1), W(0), W(7)}});
  merge_duplicate_scopes(p);
  REQUIRE(p.tables.size() == 1);
  CHECK(p.tables[0].values == std::vector<Weight>{W(3), W(5), W(0), W(7)});
}
