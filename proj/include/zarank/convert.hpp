#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "zarank/geom.hpp"

namespace zarank::convert {

// A representation whose rep-local indices are tied to vertices of a shared
// universe; used by the two-factor conversions where the factors partition
// the same vertex set differently.
struct labeled_rep {
  representation rep;
  std::vector<int> u_ids;
  std::vector<int> v_ids;
  bool operator==(const labeled_rep&) const = default;
};

inline labeled_rep with_default_ids(representation rep) {
  labeled_rep out{std::move(rep), {}, {}};
  out.u_ids.resize(out.rep.u_objects.size());
  std::iota(out.u_ids.begin(), out.u_ids.end(), 0);
  out.v_ids.resize(out.rep.v_objects.size());
  std::iota(out.v_ids.begin(), out.v_ids.end(),
            static_cast<int>(out.rep.u_objects.size()));
  return out;
}

// Labeled edge set of a factor: pairs of universe ids, smaller role first.
inline std::set<std::pair<int, int>> labeled_edges(const labeled_rep& lr) {
  auto g = build_graph(lr.rep);
  std::set<std::pair<int, int>> out;
  for (const auto& [i, j] : g.edges) {
    int a = lr.u_ids[i], b = lr.v_ids[j];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// chain3 <-> axis factors
// ---------------------------------------------------------------------------

namespace detail_ {
inline void require_class(const representation& rep, rep_class cls, const char* who) {
  if (rep.cls != cls)
    throw std::invalid_argument(std::string(who) + ": unexpected representation class");
  auto violations = validate_representation(rep);
  if (!violations.empty())
    throw std::invalid_argument(std::string(who) + ": invalid representation (" +
                                violations.front().rule + ")");
}
}  // namespace detail_

// x-projections give an interval containment factor, y-projections a
// point-in-ray factor; their edge sets intersect to the original graph.
inline std::pair<representation, representation> chain3_projections(
    const representation& rep) {
  detail_::require_class(rep, rep_class::chain3_brc, "chain3_projections");
  representation x_rep{rep_class::interval_containment, {}, {}};
  representation y_rep{rep_class::chain, {}, {}};
  for (const auto& o : rep.u_objects) {
    const auto& s = std::get<hsegment>(o);
    x_rep.u_objects.push_back(interval{s.x_lo, s.x_hi});
    y_rep.u_objects.push_back(right_ray{s.y});
  }
  for (const auto& o : rep.v_objects) {
    const auto& b = std::get<bottomless_rect>(o);
    x_rep.v_objects.push_back(interval{b.x_lo, b.x_hi});
    y_rep.v_objects.push_back(point1{b.y_top});
  }
  return {std::move(x_rep), std::move(y_rep)};
}

// Swaps the point/ray roles of a chain representation while preserving the
// labeled graph: every start point is mirrored through the origin.
inline representation flip_chain_rep(const representation& rep) {
  detail_::require_class(rep, rep_class::chain, "flip_chain_rep");
  representation out{rep_class::chain, {}, {}};
  auto flip_one = [](const geom_object& o) -> geom_object {
    if (const auto* r = std::get_if<right_ray>(&o)) return point1{-r->x_start};
    return right_ray{-std::get<point1>(o).x};
  };
  for (const auto& o : rep.u_objects) out.u_objects.push_back(flip_one(o));
  for (const auto& o : rep.v_objects) out.v_objects.push_back(flip_one(o));
  return out;
}

// Rebuilds a segment/bottomless-rectangle representation from an interval
// containment factor (x) and a chain factor (y). Segments are re-ranked to
// pairwise distinct integer y-coordinates, stable by index.
inline representation assemble_chain3(const representation& x_rep,
                                      const representation& y_in) {
  detail_::require_class(x_rep, rep_class::interval_containment, "assemble_chain3");
  representation y_rep = y_in;
  detail_::require_class(y_rep, rep_class::chain, "assemble_chain3");
  auto rays_on_u = [](const representation& r) {
    for (const auto& o : r.u_objects)
      if (!std::holds_alternative<right_ray>(o)) return false;
    for (const auto& o : r.v_objects)
      if (!std::holds_alternative<point1>(o)) return false;
    return true;
  };
  if (!rays_on_u(y_rep)) y_rep = flip_chain_rep(y_rep);
  if (!rays_on_u(y_rep))
    throw std::invalid_argument("assemble_chain3: chain factor orientation mismatch");
  if (x_rep.u_objects.size() != y_rep.u_objects.size() ||
      x_rep.v_objects.size() != y_rep.v_objects.size())
    throw std::invalid_argument("assemble_chain3: factor vertex counts differ");

  const int m = static_cast<int>(x_rep.u_objects.size());
  std::vector<coord> seg_y(m);
  for (int i = 0; i < m; ++i) seg_y[i] = std::get<right_ray>(y_rep.u_objects[i]).x_start;

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::pair(seg_y[a], a) < std::pair(seg_y[b], b); });
  std::vector<coord> rank(m);
  for (int p = 0; p < m; ++p) rank[order[p]] = p;

  std::vector<coord> sorted_y(m);
  for (int p = 0; p < m; ++p) sorted_y[p] = seg_y[order[p]];

  representation out{rep_class::chain3_brc, {}, {}};
  for (int i = 0; i < m; ++i) {
    const auto& iv = std::get<interval>(x_rep.u_objects[i]);
    out.u_objects.push_back(hsegment{iv.lo, iv.hi, rank[i]});
  }
  for (std::size_t j = 0; j < x_rep.v_objects.size(); ++j) {
    const auto& iv = std::get<interval>(x_rep.v_objects[j]);
    const coord top = std::get<point1>(y_rep.v_objects[j]).x;
    // number of segments with y <= top, minus one
    const coord below =
        std::upper_bound(sorted_y.begin(), sorted_y.end(), top) - sorted_y.begin();
    out.v_objects.push_back(bottomless_rect{iv.lo, iv.hi, below - 1});
  }
  return out;
}

// ---------------------------------------------------------------------------
// conv^2 <-> prig / gig
// ---------------------------------------------------------------------------

namespace detail_ {

struct conv_view {
  // universe id -> object, split by role
  std::vector<int> interval_ids, point_ids;
  std::vector<interval> intervals;
  std::vector<point1> points;

  bool is_interval(int id) const {
    return std::find(interval_ids.begin(), interval_ids.end(), id) != interval_ids.end();
  }
  interval interval_of(int id) const {
    for (std::size_t i = 0; i < interval_ids.size(); ++i)
      if (interval_ids[i] == id) return intervals[i];
    throw std::invalid_argument("conv factor: id is not on the interval side");
  }
  point1 point_of(int id) const {
    for (std::size_t i = 0; i < point_ids.size(); ++i)
      if (point_ids[i] == id) return points[i];
    throw std::invalid_argument("conv factor: id is not on the point side");
  }
};

inline conv_view view_conv(const labeled_rep& lr, const char* who) {
  require_class(lr.rep, rep_class::conv, who);
  if (lr.u_ids.size() != lr.rep.u_objects.size() ||
      lr.v_ids.size() != lr.rep.v_objects.size())
    throw std::invalid_argument(std::string(who) + ": id lists do not match object lists");
  conv_view view;
  auto add = [&](const geom_object& o, int id) {
    if (const auto* iv = std::get_if<interval>(&o)) {
      view.interval_ids.push_back(id);
      view.intervals.push_back(*iv);
    } else {
      view.point_ids.push_back(id);
      view.points.push_back(std::get<point1>(o));
    }
  };
  for (std::size_t i = 0; i < lr.rep.u_objects.size(); ++i)
    add(lr.rep.u_objects[i], lr.u_ids[i]);
  for (std::size_t j = 0; j < lr.rep.v_objects.size(); ++j)
    add(lr.rep.v_objects[j], lr.v_ids[j]);
  return view;
}

}  // namespace detail_

struct conv2_parts {
  labeled_rep prig;
  labeled_rep gig;
};

// Splits the intersection of two convex factors over a common vertex
// universe into a point/rectangle component and a grid component. The first
// factor supplies x-coordinates, the second y-coordinates.
inline conv2_parts conv2_decompose(const labeled_rep& g1, const labeled_rep& g2) {
  const auto v1 = detail_::view_conv(g1, "conv2_decompose");
  const auto v2 = detail_::view_conv(g2, "conv2_decompose");

  std::set<int> universe1, universe2;
  for (int id : v1.interval_ids) universe1.insert(id);
  for (int id : v1.point_ids) universe1.insert(id);
  for (int id : v2.interval_ids) universe2.insert(id);
  for (int id : v2.point_ids) universe2.insert(id);
  if (universe1 != universe2)
    throw std::invalid_argument("conv2_decompose: factor vertex universes differ");

  conv2_parts parts;
  parts.prig.rep.cls = rep_class::prig;
  parts.gig.rep.cls = rep_class::gig;

  for (int id : universe1) {
    const bool i1 = v1.is_interval(id);
    const bool i2 = v2.is_interval(id);
    if (i1 && i2) {
      const auto a = v1.interval_of(id);
      const auto b = v2.interval_of(id);
      parts.prig.rep.u_objects.push_back(rect_obj{a.lo, a.hi, b.lo, b.hi});
      parts.prig.u_ids.push_back(id);
    } else if (!i1 && !i2) {
      parts.prig.rep.v_objects.push_back(point2{v1.point_of(id).x, v2.point_of(id).x});
      parts.prig.v_ids.push_back(id);
    } else if (i1 && !i2) {
      const auto a = v1.interval_of(id);
      parts.gig.rep.u_objects.push_back(hsegment{a.lo, a.hi, v2.point_of(id).x});
      parts.gig.u_ids.push_back(id);
    } else {
      const auto b = v2.interval_of(id);
      parts.gig.rep.v_objects.push_back(vsegment{v1.point_of(id).x, b.lo, b.hi});
      parts.gig.v_ids.push_back(id);
    }
  }
  return parts;
}

inline std::pair<labeled_rep, labeled_rep> prig_to_conv2(const representation& rep) {
  detail_::require_class(rep, rep_class::prig, "prig_to_conv2");
  auto base = with_default_ids(rep);
  labeled_rep fx{{rep_class::conv, {}, {}}, base.u_ids, base.v_ids};
  labeled_rep fy{{rep_class::conv, {}, {}}, base.u_ids, base.v_ids};
  for (const auto& o : rep.u_objects) {
    const auto& r = std::get<rect_obj>(o);
    fx.rep.u_objects.push_back(interval{r.x_lo, r.x_hi});
    fy.rep.u_objects.push_back(interval{r.y_lo, r.y_hi});
  }
  for (const auto& o : rep.v_objects) {
    const auto& p = std::get<point2>(o);
    fx.rep.v_objects.push_back(point1{p.x});
    fy.rep.v_objects.push_back(point1{p.y});
  }
  return {std::move(fx), std::move(fy)};
}

inline std::pair<labeled_rep, labeled_rep> gig_to_conv2(const representation& rep) {
  detail_::require_class(rep, rep_class::gig, "gig_to_conv2");
  auto base = with_default_ids(rep);
  labeled_rep fx{{rep_class::conv, {}, {}}, base.u_ids, base.v_ids};
  labeled_rep fy{{rep_class::conv, {}, {}}, base.u_ids, base.v_ids};
  for (const auto& o : rep.u_objects) {
    const auto& s = std::get<hsegment>(o);
    fx.rep.u_objects.push_back(interval{s.x_lo, s.x_hi});
    fy.rep.u_objects.push_back(point1{s.y});
  }
  for (const auto& o : rep.v_objects) {
    const auto& s = std::get<vsegment>(o);
    fx.rep.v_objects.push_back(point1{s.x});
    fy.rep.v_objects.push_back(interval{s.y_lo, s.y_hi});
  }
  return {std::move(fx), std::move(fy)};
}

// ---------------------------------------------------------------------------
// Dyadic machinery
// ---------------------------------------------------------------------------

struct dyadic_range {
  coord lo = 0, hi = 0;  // hi = lo + 2^i - 1, lo a multiple of 2^i
  bool operator==(const dyadic_range&) const = default;
  bool operator<(const dyadic_range& o) const {
    return std::pair(lo, hi) < std::pair(o.lo, o.hi);
  }
};

inline bool is_power_of_two(coord n) { return n > 0 && (n & (n - 1)) == 0; }

inline int ceil_log2(coord n) {
  int j = 0;
  coord p = 1;
  while (p < n) {
    p <<= 1;
    ++j;
  }
  return j;
}

// Unique minimal disjoint dyadic cover of [ray_lo, n-1].
inline std::vector<dyadic_range> dyadic_cover(coord ray_lo, coord n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("dyadic_cover: n must be a power of two");
  if (ray_lo < 0 || ray_lo >= n) throw std::invalid_argument("dyadic_cover: start out of range");
  std::vector<dyadic_range> out;
  coord p = ray_lo;
  while (p < n) {
    coord align = p == 0 ? n : (p & -p);  // largest power of two dividing p
    coord size = std::min(align, n - p);
    while (!is_power_of_two(size)) size &= size - 1;  // round down to a power of two
    out.push_back({p, p + size - 1});
    p += size;
  }
  return out;
}

struct dyadic_piece {
  dyadic_range range;
  std::vector<int> u_members;  // ray vertices whose cover uses this range
  std::vector<int> v_members;  // point vertices whose rank lies in this range
  bipartite_graph graph;       // induced piece, local indices
};

// Ranks the points by (coordinate, index), pads to a power of two, covers
// each ray, and splits the residual edges across the ranges. Every realized
// residual edge lands in exactly one piece.
inline std::vector<dyadic_piece> dyadic_decompose(const representation& chain_rep,
                                                  const bipartite_graph& residual) {
  detail_::require_class(chain_rep, rep_class::chain, "dyadic_decompose");
  for (const auto& o : chain_rep.u_objects)
    if (!std::holds_alternative<right_ray>(o))
      throw std::invalid_argument("dyadic_decompose: chain factor must have rays on the u side");
  const int m = static_cast<int>(chain_rep.u_objects.size());
  const int q = static_cast<int>(chain_rep.v_objects.size());
  if (residual.u_count != m || residual.v_count != q)
    throw std::invalid_argument("dyadic_decompose: residual size mismatch");

  std::vector<int> order(q);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const coord xa = std::get<point1>(chain_rep.v_objects[a]).x;
    const coord xb = std::get<point1>(chain_rep.v_objects[b]).x;
    return std::pair(xa, a) < std::pair(xb, b);
  });
  std::vector<int> rank(q);
  for (int p = 0; p < q; ++p) rank[order[p]] = p;

  coord n = 1;
  while (n < q) n <<= 1;

  std::map<dyadic_range, std::size_t> piece_of;
  std::vector<dyadic_piece> pieces;
  for (int a = 0; a < m; ++a) {
    const coord start = std::get<right_ray>(chain_rep.u_objects[a]).x_start;
    // first covered rank
    int t = q;
    for (int p = 0; p < q; ++p)
      if (std::get<point1>(chain_rep.v_objects[order[p]]).x >= start) {
        t = p;
        break;
      }
    if (t >= q) continue;  // ray covers no point
    for (const auto& rng : dyadic_cover(t, n)) {
      auto [it, inserted] = piece_of.try_emplace(rng, pieces.size());
      if (inserted) pieces.push_back({rng, {}, {}, {}});
      pieces[it->second].u_members.push_back(a);
    }
  }

  for (auto& piece : pieces) {
    for (int p = static_cast<int>(piece.range.lo);
         p <= piece.range.hi && p < q; ++p)
      piece.v_members.push_back(order[p]);
    std::map<int, int> u_local, v_local;
    for (std::size_t i = 0; i < piece.u_members.size(); ++i)
      u_local[piece.u_members[i]] = static_cast<int>(i);
    for (std::size_t j = 0; j < piece.v_members.size(); ++j)
      v_local[piece.v_members[j]] = static_cast<int>(j);
    piece.graph.u_count = static_cast<int>(piece.u_members.size());
    piece.graph.v_count = static_cast<int>(piece.v_members.size());
    for (const auto& [a, b] : residual.edges) {
      auto ia = u_local.find(a);
      auto ib = v_local.find(b);
      if (ia != u_local.end() && ib != v_local.end())
        piece.graph.edges.emplace_back(ia->second, ib->second);
    }
    piece.graph.normalize();
  }

  std::sort(pieces.begin(), pieces.end(),
            [](const dyadic_piece& a, const dyadic_piece& b) { return a.range < b.range; });
  return pieces;
}

// Explicit edge bound for Ferrers dimension d >= 3:
// (3m + 6n)(k-1) * ceil(log2 n)^(d-3).
inline long long chaind_bound(int d, long long m, long long n, int k) {
  if (d < 3) throw std::invalid_argument("chaind_bound: d must be at least 3");
  if (k < 1) throw std::invalid_argument("chaind_bound: k must be at least 1");
  long long value = (3 * m + 6 * n) * (k - 1);
  const long long factor = ceil_log2(std::max<coord>(n, 1));
  for (int level = 3; level < d; ++level) {
    if (factor != 0 && value > std::numeric_limits<long long>::max() / std::max(factor, 1LL))
      throw std::overflow_error("chaind_bound: value does not fit in 64 bits");
    value *= factor;
  }
  return value;
}

}  // namespace zarank::convert
