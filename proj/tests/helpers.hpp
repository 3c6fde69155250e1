#pragma once

#include <set>
#include <utility>
#include <vector>

#include "zarank/geom.hpp"
#include "zarank/sample.hpp"

namespace test_helpers {

using namespace zarank;

inline std::set<std::pair<int, int>> edge_set(const bipartite_graph& g) {
  return {g.edges.begin(), g.edges.end()};
}

inline bipartite_graph graph_from(std::initializer_list<std::pair<int, int>> edges,
                                  int u_count, int v_count) {
  return make_graph(u_count, v_count, std::vector<std::pair<int, int>>(edges));
}

// path u0 - v0 - u1 - v1
inline bipartite_graph p4() { return graph_from({{0, 0}, {1, 0}, {1, 1}}, 2, 2); }

inline bipartite_graph complete(int m, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, j);
  return make_graph(m, n, std::move(edges));
}

// cycle u0 - v0 - u1 - v1 - u2 - v2 - u0
inline bipartite_graph c6() {
  return graph_from({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}}, 3, 3);
}

inline geom_object random_object(sample::rng& r, int kind_index, coord box) {
  auto span = [&]() {
    coord lo = r.uniform(0, box);
    coord hi = r.uniform(lo, box);
    return std::pair(lo, hi);
  };
  switch (kind_index) {
    case 0: return geom_object{point1{r.uniform(0, box)}};
    case 1: return geom_object{right_ray{r.uniform(0, box)}};
    case 2: {
      auto [lo, hi] = span();
      return geom_object{interval{lo, hi}};
    }
    case 3: return geom_object{point2{r.uniform(0, box), r.uniform(0, box)}};
    case 4: return geom_object{up_ray{r.uniform(0, box), r.uniform(0, box)}};
    case 5: {
      auto [lo, hi] = span();
      return geom_object{hsegment{lo, hi, r.uniform(0, box)}};
    }
    case 6: {
      auto [lo, hi] = span();
      return geom_object{vsegment{r.uniform(0, box), lo, hi}};
    }
    case 7: {
      auto [lo, hi] = span();
      return geom_object{bottomless_rect{lo, hi, r.uniform(0, box)}};
    }
    default: {
      auto [xlo, xhi] = span();
      auto [ylo, yhi] = span();
      return geom_object{rect_obj{xlo, xhi, ylo, yhi}};
    }
  }
}

}  // namespace test_helpers
