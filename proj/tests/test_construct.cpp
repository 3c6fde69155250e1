#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "zarank/construct.hpp"
#include "zarank/oracle.hpp"
#include "zarank/sample.hpp"

using namespace zarank;

namespace {

long long isqrt_exact(long long x) {
  long long r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

TEST_CASE("chain lower bound counts") {
  CHECK(build_graph(construct::chain_lower_bound(3, 3, 2)).edge_count() == 5);
  CHECK(build_graph(construct::chain_lower_bound(5, 5, 3)).edge_count() == 16);
  CHECK(build_graph(construct::chain_lower_bound(4, 6, 1)).edge_count() == 0);
  CHECK_THROWS_AS(construct::chain_lower_bound(1, 3, 2), std::invalid_argument);

  for (int m : {3, 5, 8})
    for (int n : {3, 6})
      for (int k : {1, 2, 3}) {
        if (m < k || n < k - 1) continue;
        auto rep = construct::chain_lower_bound(m, n, k);
        CHECK(validate_representation(rep).empty());
        auto g = build_graph(rep);
        const long long expect =
            static_cast<long long>(n + m) * (k - 1) - static_cast<long long>(k - 1) * (k - 1);
        CHECK(static_cast<long long>(g.edge_count()) == expect);
        CHECK(expect <= static_cast<long long>(m + n) * (k - 1));
        if (k >= 1 && std::max(g.u_count, g.v_count) <= 12)
          CHECK_FALSE(oracle::find_biclique(g, k, oracle::limits{60, 8}).has_value());
      }
}

TEST_CASE("unit grid construction counts") {
  auto r1 = construct::ugig_construction(1);
  CHECK(r1.u_objects.size() == 4);
  CHECK(r1.v_objects.size() == 4);
  CHECK(build_graph(r1).edge_count() == 8);

  auto r3 = construct::ugig_construction(3);
  CHECK(r3.u_objects.size() == 36);
  CHECK(r3.v_objects.size() == 36);
  CHECK(build_graph(r3).edge_count() == 96);
  CHECK(validate_representation(r3).empty());

  for (int t = 1; t <= 3; ++t) {
    auto g = build_graph(construct::ugig_construction(t));
    CHECK_FALSE(oracle::find_biclique(g, 2, oracle::limits{200, 3}).has_value());
  }
}

TEST_CASE("unit grid edge count meets the exact lower-bound formula") {
  // |E| = (k-1)^2 (12 t^2 - 4 t) equals (k-1)(3n - 2 sqrt((k-1) n)) exactly
  // at n = 4 (k-1) t^2.
  for (int t = 1; t <= 8; ++t) {
    for (int k = 2; k <= 4; ++k) {
      const long long edges =
          static_cast<long long>(k - 1) * (k - 1) * (12LL * t * t - 4 * t);
      const long long n = 4LL * (k - 1) * t * t;
      const long long root = isqrt_exact((k - 1) * n);
      CHECK(root * root == (k - 1) * n);
      CHECK(edges == (k - 1) * (3 * n - 2 * root));
    }
  }
}

TEST_CASE("duplicate multiplies counts") {
  auto p4 = test_helpers::p4();
  // p4 drawn as a grid representation
  representation rep{rep_class::gig,
                     {geom_object{hsegment{0, 1, 0}}, geom_object{hsegment{1, 3, 2}}},
                     {geom_object{vsegment{1, 0, 2}}, geom_object{vsegment{3, 2, 2}}}};
  REQUIRE(test_helpers::edge_set(build_graph(rep)) == test_helpers::edge_set(p4));

  CHECK(construct::duplicate(rep, 2) == rep);

  auto d3 = construct::duplicate(rep, 3);
  CHECK(d3.u_objects.size() == 4);
  CHECK(d3.v_objects.size() == 4);
  CHECK(build_graph(d3).edge_count() == 12);

  auto base = construct::ugig_construction(2);
  auto dup = construct::duplicate(base, 3);
  CHECK(dup.u_objects.size() == 32);
  CHECK(dup.v_objects.size() == 32);
  auto g = build_graph(dup);
  CHECK(g.edge_count() == 160);
  CHECK_FALSE(oracle::find_biclique(g, 3, oracle::limits{60, 3}).has_value());
}

TEST_CASE("duplicate preserves validity where copies are legal") {
  for (auto cls : {rep_class::chain, rep_class::gig, rep_class::prig, rep_class::sr}) {
    auto rep = sample::sample_representation(cls, 6, 6, 52000 + static_cast<int>(cls));
    auto dup = construct::duplicate(rep, 4);
    CHECK(validate_representation(dup).empty());
    CHECK(dup.u_objects.size() == 18);
  }
  auto c3 = sample::sample_representation(rep_class::chain3_brc, 4, 4, 52100);
  CHECK(construct::duplicate(c3, 2) == c3);
  CHECK_THROWS_AS(construct::duplicate(c3, 3), std::invalid_argument);
  CHECK_THROWS_AS(construct::duplicate(c3, 1), std::invalid_argument);
}

TEST_CASE("complete grid is complete") {
  auto g = build_graph(construct::complete_grid(5, 7));
  CHECK(g.edge_count() == 35);
  CHECK(g.u_count == 5);
  CHECK(g.v_count == 7);
}
