#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "helpers.hpp"
#include "zarank/construct.hpp"
#include "zarank/convert.hpp"
#include "zarank/sample.hpp"

using namespace zarank;
using convert::labeled_rep;
using test_helpers::edge_set;

TEST_CASE("chain3 projections factor the graph") {
  representation single{rep_class::chain3_brc,
                        {geom_object{hsegment{1, 2, 3}}},
                        {geom_object{bottomless_rect{0, 4, 5}}}};
  auto [fx, fy] = convert::chain3_projections(single);
  CHECK(build_graph(fx).edge_count() == 1);
  CHECK(build_graph(fy).edge_count() == 1);
  CHECK(build_graph(single).edge_count() == 1);

  // containment failing only in y: present in the x factor, absent overall
  representation ymiss{rep_class::chain3_brc,
                       {geom_object{hsegment{1, 2, 9}}},
                       {geom_object{bottomless_rect{0, 4, 5}}}};
  auto [gx, gy] = convert::chain3_projections(ymiss);
  CHECK(build_graph(ymiss).edge_count() == 0);
  CHECK(build_graph(gx).edge_count() == 1);
  CHECK(build_graph(gy).edge_count() == 0);

  representation empty{rep_class::chain3_brc, {}, {}};
  auto [ex, ey] = convert::chain3_projections(empty);
  CHECK(build_graph(ex).edge_count() == 0);
  CHECK(build_graph(ey).edge_count() == 0);
}

TEST_CASE("assemble intersects the two factors") {
  for (int it = 0; it < 200; ++it) {
    auto rep = sample::sample_representation(rep_class::chain3_brc, 4 + it % 12,
                                             4 + (it * 3) % 12, 41000 + it);
    auto g = build_graph(rep);
    auto [fx, fy] = convert::chain3_projections(rep);
    auto back = convert::assemble_chain3(fx, fy);
    CHECK(validate_representation(back).empty());
    CHECK(edge_set(build_graph(back)) == edge_set(g));

    // the factors really intersect to the original
    auto ex = edge_set(build_graph(fx));
    auto ey = edge_set(build_graph(fy));
    std::set<std::pair<int, int>> meet;
    for (const auto& e : ex)
      if (ey.count(e)) meet.insert(e);
    CHECK(meet == edge_set(g));
  }
}

TEST_CASE("assemble handles colliding ray starts") {
  representation fx{rep_class::interval_containment,
                    {geom_object{interval{0, 2}}, geom_object{interval{1, 3}}},
                    {geom_object{interval{0, 3}}}};
  representation fy{rep_class::chain,
                    {geom_object{right_ray{5}}, geom_object{right_ray{5}}},
                    {geom_object{point1{5}}}};
  auto rep = convert::assemble_chain3(fx, fy);
  CHECK(validate_representation(rep).empty());
  CHECK(build_graph(rep).edge_count() == 2);
}

TEST_CASE("flip_chain_rep is a graph-preserving involution") {
  representation rep{rep_class::chain,
                     {geom_object{right_ray{2}}},
                     {geom_object{point1{3}}}};
  auto f = convert::flip_chain_rep(rep);
  CHECK(build_graph(f).edge_count() == 1);
  CHECK(std::holds_alternative<point1>(f.u_objects[0]));
  CHECK(convert::flip_chain_rep(f) == rep);

  auto lb = construct::chain_lower_bound(3, 3, 2);
  auto flipped = convert::flip_chain_rep(lb);
  CHECK(edge_set(build_graph(flipped)) == edge_set(build_graph(lb)));
  CHECK(convert::flip_chain_rep(flipped) == lb);

  for (int it = 0; it < 100; ++it) {
    auto r = sample::sample_representation(rep_class::chain, 6, 7, 42000 + it);
    CHECK(edge_set(build_graph(convert::flip_chain_rep(r))) == edge_set(build_graph(r)));
  }
}

TEST_CASE("prig and gig round trip through conv^2") {
  for (int it = 0; it < 150; ++it) {
    auto prig = sample::sample_representation(rep_class::prig, 3 + it % 10,
                                              3 + (it * 3) % 10, 43000 + it);
    auto [fx, fy] = convert::prig_to_conv2(prig);
    auto parts = convert::conv2_decompose(fx, fy);
    CHECK(parts.gig.u_ids.empty());
    CHECK(parts.gig.v_ids.empty());
    CHECK(convert::labeled_edges(parts.prig) ==
          convert::labeled_edges(convert::with_default_ids(prig)));
  }
  for (int it = 0; it < 150; ++it) {
    auto gig = sample::sample_representation(rep_class::gig, 3 + it % 10,
                                             3 + (it * 3) % 10, 44000 + it);
    auto [fx, fy] = convert::gig_to_conv2(gig);
    auto parts = convert::conv2_decompose(fx, fy);
    CHECK(parts.prig.u_ids.empty());
    CHECK(parts.prig.v_ids.empty());
    CHECK(convert::labeled_edges(parts.gig) ==
          convert::labeled_edges(convert::with_default_ids(gig)));
  }
}

TEST_CASE("conv2_decompose splits a mixed instance") {
  // universe: 0 interval/interval, 1 point/point, 2 interval/point,
  // 3 point/interval; factor edges chosen so both components are populated.
  labeled_rep g1;
  g1.rep.cls = rep_class::conv;
  g1.rep.u_objects = {geom_object{interval{0, 4}}, geom_object{interval{2, 6}}};
  g1.u_ids = {0, 2};
  g1.rep.v_objects = {geom_object{point1{1}}, geom_object{point1{3}}};
  g1.v_ids = {1, 3};

  labeled_rep g2;
  g2.rep.cls = rep_class::conv;
  g2.rep.u_objects = {geom_object{interval{0, 5}}, geom_object{interval{4, 9}}};
  g2.u_ids = {0, 3};
  g2.rep.v_objects = {geom_object{point1{2}}, geom_object{point1{5}}};
  g2.v_ids = {1, 2};

  auto parts = convert::conv2_decompose(g1, g2);
  CHECK(parts.prig.u_ids == std::vector<int>{0});
  CHECK(parts.prig.v_ids == std::vector<int>{1});
  CHECK(parts.gig.u_ids == std::vector<int>{2});
  CHECK(parts.gig.v_ids == std::vector<int>{3});

  // intersection of the two factor edge sets, restricted per component
  auto e1 = convert::labeled_edges(g1);
  auto e2 = convert::labeled_edges(g2);
  std::set<std::pair<int, int>> meet;
  for (const auto& e : e1)
    if (e2.count(e)) meet.insert(e);
  std::set<std::pair<int, int>> got;
  for (const auto& e : convert::labeled_edges(parts.prig)) got.insert(e);
  for (const auto& e : convert::labeled_edges(parts.gig)) got.insert(e);
  CHECK(got == meet);

  labeled_rep mismatched = g2;
  mismatched.v_ids = {1, 9};
  CHECK_THROWS_AS(convert::conv2_decompose(g1, mismatched), std::invalid_argument);
}

TEST_CASE("dyadic cover matches the closed forms") {
  using convert::dyadic_range;
  CHECK(convert::dyadic_cover(0, 8) == std::vector<dyadic_range>{{0, 7}});
  CHECK(convert::dyadic_cover(5, 8) == std::vector<dyadic_range>{{5, 5}, {6, 7}});
  CHECK(convert::dyadic_cover(1, 8) ==
        std::vector<dyadic_range>{{1, 1}, {2, 3}, {4, 7}});
  CHECK_THROWS_AS(convert::dyadic_cover(8, 8), std::invalid_argument);
  CHECK_THROWS_AS(convert::dyadic_cover(0, 6), std::invalid_argument);
}

TEST_CASE("dyadic cover is disjoint, exact, aligned, and minimal") {
  for (coord n : {2, 4, 8, 16, 64, 256, 1024}) {
    for (coord a = 0; a < n; ++a) {
      auto cover = convert::dyadic_cover(a, n);
      coord expect = a;
      for (const auto& r : cover) {
        CHECK(r.lo == expect);
        const coord len = r.hi - r.lo + 1;
        CHECK(convert::is_power_of_two(len));
        CHECK(r.lo % len == 0);
        expect = r.hi + 1;
      }
      CHECK(expect == n);
      CHECK(static_cast<int>(cover.size()) <= convert::ceil_log2(n));
    }
  }
  // minimality cross-check by dynamic programming over all dyadic tilings
  for (coord a = 0; a < 64; ++a) {
    auto cover = convert::dyadic_cover(a, 64);
    std::vector<int> best(65, 1 << 20);
    best[64] = 0;
    for (coord p = 63; p >= a; --p) {
      for (coord len = 1; p + len <= 64; len <<= 1) {
        if (p % len != 0) break;
        best[p] = std::min<int>(best[p], 1 + best[p + len]);
      }
    }
    CHECK(static_cast<int>(cover.size()) == best[a]);
  }
}

TEST_CASE("dyadic decompose partitions realized edges") {
  // single edge: one ray, one point
  representation tiny{rep_class::chain,
                      {geom_object{right_ray{3}}},
                      {geom_object{point1{5}}}};
  auto g1 = build_graph(tiny);
  auto pieces = convert::dyadic_decompose(tiny, g1);
  int with_edge = 0;
  for (const auto& p : pieces) with_edge += p.graph.edge_count() > 0;
  CHECK(with_edge == 1);

  // the lower-bound instance partitions exactly
  auto lb = construct::chain_lower_bound(8, 4, 2);
  auto g = build_graph(lb);
  auto ps = convert::dyadic_decompose(lb, g);
  std::size_t total = 0;
  std::map<int, int> u_mult, v_mult;
  for (const auto& p : ps) {
    total += p.graph.edge_count();
    for (int a : p.u_members) ++u_mult[a];
    for (int b : p.v_members) ++v_mult[b];
  }
  CHECK(total == g.edge_count());
  const int j = convert::ceil_log2(8);
  for (const auto& [a, c] : u_mult) CHECK(c <= std::max(1, j));
  for (const auto& [b, c] : v_mult) CHECK(c <= j + 1);

  // empty residual: all pieces empty
  bipartite_graph none{g.u_count, g.v_count, {}};
  for (const auto& p : convert::dyadic_decompose(lb, none))
    CHECK(p.graph.edge_count() == 0);
}

TEST_CASE("chaind_bound closed form") {
  CHECK(convert::chaind_bound(3, 10, 10, 3) == 180);
  CHECK(convert::chaind_bound(4, 16, 16, 2) == 576);
  CHECK(convert::chaind_bound(5, 16, 16, 1) == 0);
  CHECK(convert::chaind_bound(6, 1, 1, 2) == 0);  // log factor is zero at n = 1
  CHECK_THROWS_AS(convert::chaind_bound(2, 4, 4, 2), std::invalid_argument);
}
