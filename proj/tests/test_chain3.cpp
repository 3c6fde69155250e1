#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "zarank/chain3.hpp"
#include "zarank/oracle.hpp"
#include "zarank/sample.hpp"

using namespace zarank;
using oracle::po_kind;
using certify::classify_edges_chain3;

namespace {

geom_object seg(coord lo, coord hi, coord y) { return geom_object{hsegment{lo, hi, y}}; }
geom_object box(coord lo, coord hi, coord top) {
  return geom_object{bottomless_rect{lo, hi, top}};
}

}  // namespace

TEST_CASE("classify_edges_chain3 basics") {
  // single edge: no successors exist, so it is thin
  representation single{rep_class::chain3_brc, {seg(0, 4, 1)}, {box(0, 5, 2)}};
  auto cls = classify_edges_chain3(single, 2);
  CHECK(cls.thin_edges == 1);
  CHECK(cls.bulky_edges == 0);
  CHECK(cls.tags.at({0, 0}).empty());

  // one dl-successor inside the rectangle; threshold k-1 = 1
  representation dl{rep_class::chain3_brc,
                    {seg(2, 6, 5), seg(0, 4, 3)},
                    {box(0, 7, 6)}};
  auto cls2 = classify_edges_chain3(dl, 2);
  CHECK(cls2.tags.at({0, 0}) == std::set{po_kind::dl});
}

TEST_CASE("nested family tags containment order") {
  representation rep{rep_class::chain3_brc,
                     {seg(0, 10, 3), seg(2, 8, 1), seg(4, 6, 2)},
                     {box(-1, 11, 5)}};
  auto cls = classify_edges_chain3(rep, 2);
  // the two outer segments have nested successors inside the rectangle
  CHECK(cls.tags.at({0, 0}).count(po_kind::c) == 1);
  CHECK(cls.tags.at({1, 0}).count(po_kind::c) == 1);
  CHECK(cls.tags.at({2, 0}).empty());
}

TEST_CASE("certify_chain3 fixed cases") {
  representation edgeless{rep_class::chain3_brc, {seg(0, 1, 0)}, {box(5, 6, -10)}};
  auto c0 = certify::certify_chain3(edgeless, 1);
  REQUIRE(c0.is_within_bound());
  CHECK(c0.bound().bound_value == 0);

  representation single{rep_class::chain3_brc, {seg(0, 4, 1)}, {box(0, 5, 2)}};
  auto c1 = certify::certify_chain3(single, 1);
  REQUIRE_FALSE(c1.is_within_bound());
  CHECK(oracle::verify_witness(build_graph(single), c1.witness()));

  // bound value for m = n = 10, k = 3
  representation ten{rep_class::chain3_brc, {}, {}};
  for (int i = 0; i < 10; ++i) {
    ten.u_objects.push_back(seg(50, 52, i));
    ten.v_objects.push_back(box(100 + i, 101 + i, -5));
  }
  auto c2 = certify::certify_chain3(ten, 3);
  REQUIRE(c2.is_within_bound());
  CHECK(c2.bound().bound_value == 180);
}

TEST_CASE("certify_chain3 extracts a dl-bulky biclique") {
  // two nested-left successors under u0, two wide rectangles containing all
  representation rep{rep_class::chain3_brc,
                     {seg(4, 10, 9), seg(2, 8, 5), seg(0, 6, 3)},
                     {box(-1, 11, 20), box(-2, 12, 21)}};
  auto cls = classify_edges_chain3(rep, 2);
  CHECK(cls.bulky_count_per_u[0][0] >= 2);
  auto cert = certify::certify_chain3(rep, 2);
  REQUIRE_FALSE(cert.is_within_bound());
  CHECK(cert.witness().u_vertices.size() == 2);
  CHECK(oracle::verify_witness(build_graph(rep), cert.witness()));
}

TEST_CASE("chain3 accounting on random instances") {
  int bicliques = 0;
  for (int it = 0; it < 400; ++it) {
    const int m = 4 + it % 20;
    const int n = 4 + (it * 3) % 20;
    const int k = 2 + it % 2;
    auto rep = sample::sample_representation(rep_class::chain3_brc, m, n, 31000 + it);
    auto g = build_graph(rep);
    auto cert = certify::certify_chain3(rep, k);
    auto cls = classify_edges_chain3(rep, k);

    // thin degrees are capped unconditionally
    for (int v = 0; v < g.v_count; ++v) CHECK(cls.thin_count_per_v[v] <= 6 * (k - 1));

    if (cert.is_within_bound()) {
      CHECK(static_cast<long long>(g.edge_count()) <= cert.bound().bound_value);
      for (int u = 0; u < g.u_count; ++u)
        for (int t = 0; t < 3; ++t) CHECK(cls.bulky_count_per_u[u][t] <= k - 1);
      REQUIRE(cert.bound().tally.has_value());
      CHECK(cert.bound().tally->bulky_edges + cert.bound().tally->thin_edges ==
            static_cast<long long>(g.edge_count()));
    } else {
      ++bicliques;
      CHECK(oracle::verify_witness(g, cert.witness()));
      CHECK(cert.witness().u_vertices.size() == static_cast<std::size_t>(k));
    }
  }
  CHECK(bicliques > 0);  // the sampler must exercise both branches
}

TEST_CASE("classify rejects bad inputs") {
  representation single{rep_class::chain3_brc, {seg(0, 4, 1)}, {box(0, 5, 2)}};
  CHECK_THROWS_AS(classify_edges_chain3(single, 1), std::invalid_argument);
  representation wrong{rep_class::gig, {}, {}};
  CHECK_THROWS_AS(certify::certify_chain3(wrong, 2), std::invalid_argument);
}
