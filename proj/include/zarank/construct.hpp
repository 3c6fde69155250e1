#pragma once

#include <stdexcept>
#include <vector>

#include "zarank/geom.hpp"

namespace zarank::construct {

// Chain instance with (n+m)(k-1) - (k-1)^2 edges and no K_{k,k}:
// m points at even coordinates, k-1 rays covering everything, and n-k+1 rays
// starting just past the (k-1)-th point from the right. Half-integer starts
// are avoided by scaling all coordinates by two.
inline representation chain_lower_bound(int m, int n, int k) {
  if (k < 1 || m < k || n < k - 1)
    throw std::invalid_argument("chain_lower_bound: need m >= k >= 1 and n >= k-1");
  representation rep{rep_class::chain, {}, {}};
  for (int i = 0; i < k - 1; ++i) rep.u_objects.push_back(right_ray{0});
  const coord late_start = 2LL * (m - k + 1) + 1;
  for (int i = 0; i < n - k + 1; ++i) rep.u_objects.push_back(right_ray{late_start});
  for (int i = 1; i <= m; ++i) rep.v_objects.push_back(point1{2LL * i});
  return rep;
}

// Unit grid instance on 4t^2 + 4t^2 vertices with exactly 12t^2 - 4t edges
// and no K_{2,2}. Horizontal segments come in two families per cell row;
// vertical segments in four families per cell. Coordinates may be negative.
inline representation ugig_construction(int t) {
  if (t < 1) throw std::invalid_argument("ugig_construction: t must be at least 1");
  representation rep{rep_class::gig, {}, {}};
  for (int i = 0; i <= t - 1; ++i) {
    for (int j = 0; j <= 2 * t - 1; ++j) {
      rep.u_objects.push_back(hsegment{8LL * i, 8LL * i + 7, 4LL * j + 1});
      rep.u_objects.push_back(hsegment{8LL * i - 4, 8LL * i + 3, 4LL * j + 3});
    }
  }
  for (int i = 0; i <= t - 1; ++i) {
    for (int j = 0; j <= t - 1; ++j) {
      rep.v_objects.push_back(vsegment{8LL * j + 1, 8LL * i + 2, 8LL * i + 8});
      rep.v_objects.push_back(vsegment{8LL * j + 2, 8LL * i - 2, 8LL * i + 4});
      rep.v_objects.push_back(vsegment{8LL * j + 5, 8LL * i, 8LL * i + 6});
      rep.v_objects.push_back(vsegment{8LL * j + 6, 8LL * i + 4, 8LL * i + 10});
    }
  }
  return rep;
}

// Replaces every object by k-1 coincident copies in contiguous index blocks,
// multiplying vertex counts by k-1 and edges by (k-1)^2. A K_{2,2}-free
// input yields a K_{k,k}-free output.
inline representation duplicate(const representation& rep, int k) {
  if (k < 2) throw std::invalid_argument("duplicate: k must be at least 2");
  if (rep.cls == rep_class::chain3_brc && k > 2)
    throw std::invalid_argument(
        "duplicate: coincident copies would violate the distinct-y requirement");
  representation out{rep.cls, {}, {}};
  for (const auto& o : rep.u_objects)
    for (int c = 0; c < k - 1; ++c) out.u_objects.push_back(o);
  for (const auto& o : rep.v_objects)
    for (int c = 0; c < k - 1; ++c) out.v_objects.push_back(o);
  return out;
}

// Complete bipartite grid K_{m,n}: m long horizontals stabbed by n long
// verticals.
inline representation complete_grid(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("complete_grid: negative side");
  representation rep{rep_class::gig, {}, {}};
  for (int i = 0; i < m; ++i)
    rep.u_objects.push_back(hsegment{-1, static_cast<coord>(n), static_cast<coord>(i)});
  for (int j = 0; j < n; ++j)
    rep.v_objects.push_back(
        vsegment{static_cast<coord>(j), -1, static_cast<coord>(m)});
  return rep;
}

}  // namespace zarank::construct
