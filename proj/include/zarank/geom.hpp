#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace zarank {

// All coordinates are exact integers. Unbounded extents use the sentinel
// values below; they only ever participate in comparisons.
using coord = std::int64_t;
inline constexpr coord coord_neg_inf = std::numeric_limits<coord>::min();
inline constexpr coord coord_pos_inf = std::numeric_limits<coord>::max();

// ---------------------------------------------------------------------------
// Geometric primitives. Every object is a product of (possibly unbounded)
// closed intervals, one per axis.
// ---------------------------------------------------------------------------

struct point1 {
  coord x = 0;
  bool operator==(const point1&) const = default;
};

struct right_ray {
  coord x_start = 0;  // [x_start, +inf)
  bool operator==(const right_ray&) const = default;
};

struct interval {
  coord lo = 0, hi = 0;
  bool operator==(const interval&) const = default;
};

struct point2 {
  coord x = 0, y = 0;
  bool operator==(const point2&) const = default;
};

struct up_ray {
  coord x = 0;
  coord y_start = 0;  // x fixed, [y_start, +inf)
  bool operator==(const up_ray&) const = default;
};

struct hsegment {
  coord x_lo = 0, x_hi = 0, y = 0;
  bool operator==(const hsegment&) const = default;
};

struct vsegment {
  coord x = 0, y_lo = 0, y_hi = 0;
  bool operator==(const vsegment&) const = default;
};

struct bottomless_rect {
  coord x_lo = 0, x_hi = 0;
  coord y_top = 0;  // y extent is (-inf, y_top]
  bool operator==(const bottomless_rect&) const = default;
};

struct rect_obj {
  coord x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
  bool operator==(const rect_obj&) const = default;
};

using geom_object = std::variant<point1, right_ray, interval, point2, up_ray,
                                 hsegment, vsegment, bottomless_rect, rect_obj>;

struct extent {
  coord lo = 0, hi = 0;
};

inline bool overlaps(extent a, extent b) { return a.lo <= b.hi && b.lo <= a.hi; }
inline bool covers(extent outer, extent inner) {
  return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

inline int dimension(const geom_object& o) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, point1> || std::is_same_v<T, right_ray> ||
                      std::is_same_v<T, interval>)
          return 1;
        else
          return 2;
      },
      o);
}

inline extent x_extent(const geom_object& o) {
  return std::visit(
      [](const auto& v) -> extent {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, point1>) return {v.x, v.x};
        else if constexpr (std::is_same_v<T, right_ray>) return {v.x_start, coord_pos_inf};
        else if constexpr (std::is_same_v<T, interval>) return {v.lo, v.hi};
        else if constexpr (std::is_same_v<T, point2>) return {v.x, v.x};
        else if constexpr (std::is_same_v<T, up_ray>) return {v.x, v.x};
        else if constexpr (std::is_same_v<T, hsegment>) return {v.x_lo, v.x_hi};
        else if constexpr (std::is_same_v<T, vsegment>) return {v.x, v.x};
        else if constexpr (std::is_same_v<T, bottomless_rect>) return {v.x_lo, v.x_hi};
        else return {v.x_lo, v.x_hi};
      },
      o);
}

inline extent y_extent(const geom_object& o) {
  return std::visit(
      [](const auto& v) -> extent {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, point2>) return {v.y, v.y};
        else if constexpr (std::is_same_v<T, up_ray>) return {v.y_start, coord_pos_inf};
        else if constexpr (std::is_same_v<T, hsegment>) return {v.y, v.y};
        else if constexpr (std::is_same_v<T, vsegment>) return {v.y_lo, v.y_hi};
        else if constexpr (std::is_same_v<T, bottomless_rect>)
          return {coord_neg_inf, v.y_top};
        else if constexpr (std::is_same_v<T, rect_obj>) return {v.y_lo, v.y_hi};
        else
          throw std::invalid_argument("1-dimensional object has no y extent");
      },
      o);
}

inline const char* kind_name(const geom_object& o) {
  static constexpr const char* names[] = {"point", "rray", "interval", "point2",
                                          "uray",  "hseg", "vseg",     "brect",
                                          "rect"};
  return names[o.index()];
}

// Closed-set intersection test. Touching boundaries count.
inline bool intersects(const geom_object& a, const geom_object& b) {
  if (dimension(a) != dimension(b))
    throw std::invalid_argument("intersects: objects live in different ambient dimensions");
  if (!overlaps(x_extent(a), x_extent(b))) return false;
  if (dimension(a) == 1) return true;
  return overlaps(y_extent(a), y_extent(b));
}

namespace detail {
inline bool legal_containment_pair(const geom_object& outer, const geom_object& inner) {
  const bool o_interval = std::holds_alternative<interval>(outer);
  if (o_interval)
    return std::holds_alternative<point1>(inner) || std::holds_alternative<interval>(inner);
  if (std::holds_alternative<bottomless_rect>(outer))
    return std::holds_alternative<hsegment>(inner);
  if (std::holds_alternative<rect_obj>(outer)) return std::holds_alternative<point2>(inner);
  if (std::holds_alternative<up_ray>(outer)) return std::holds_alternative<point2>(inner);
  return false;
}
}  // namespace detail

// Non-strict containment of closed point sets, defined on the pairs the
// representation classes use.
inline bool contains(const geom_object& outer, const geom_object& inner) {
  if (!detail::legal_containment_pair(outer, inner))
    throw std::invalid_argument(std::string("contains: unsupported pair (") +
                                kind_name(outer) + ", " + kind_name(inner) + ")");
  if (!covers(x_extent(outer), x_extent(inner))) return false;
  if (dimension(outer) == 1) return true;
  return covers(y_extent(outer), y_extent(inner));
}

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

enum class rep_class {
  chain,
  conv,
  interval_containment,
  sr,
  gig,
  prig,
  chain3_brc,
};

inline const char* to_string(rep_class c) {
  switch (c) {
    case rep_class::chain: return "chain";
    case rep_class::conv: return "conv";
    case rep_class::interval_containment: return "interval_containment";
    case rep_class::sr: return "sr";
    case rep_class::gig: return "gig";
    case rep_class::prig: return "prig";
    case rep_class::chain3_brc: return "chain3_brc";
  }
  return "?";
}

inline rep_class parse_rep_class(const std::string& s) {
  if (s == "chain") return rep_class::chain;
  if (s == "conv") return rep_class::conv;
  if (s == "interval_containment") return rep_class::interval_containment;
  if (s == "sr") return rep_class::sr;
  if (s == "gig") return rep_class::gig;
  if (s == "prig") return rep_class::prig;
  if (s == "chain3_brc") return rep_class::chain3_brc;
  throw std::invalid_argument("unknown representation class: " + s);
}

struct representation {
  rep_class cls = rep_class::gig;
  std::vector<geom_object> u_objects;
  std::vector<geom_object> v_objects;
  bool operator==(const representation&) const = default;
};

struct rep_violation {
  std::string rule;  // "kind-mismatch", "interval-order", "duplicate-y"
  char side = 'u';
  int index = 0;
  std::string detail;
};

namespace detail {

inline bool interval_fields_ordered(const geom_object& o) {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, interval>) return v.lo <= v.hi;
        else if constexpr (std::is_same_v<T, hsegment>) return v.x_lo <= v.x_hi;
        else if constexpr (std::is_same_v<T, vsegment>) return v.y_lo <= v.y_hi;
        else if constexpr (std::is_same_v<T, bottomless_rect>) return v.x_lo <= v.x_hi;
        else if constexpr (std::is_same_v<T, rect_obj>)
          return v.x_lo <= v.x_hi && v.y_lo <= v.y_hi;
        else return true;
      },
      o);
}

template <typename T>
inline bool all_of_kind(const std::vector<geom_object>& objs) {
  return std::all_of(objs.begin(), objs.end(),
                     [](const geom_object& o) { return std::holds_alternative<T>(o); });
}

template <typename T>
inline std::size_t count_of_kind(const std::vector<geom_object>& objs) {
  std::size_t c = 0;
  for (const auto& o : objs)
    if (std::holds_alternative<T>(o)) ++c;
  return c;
}

template <typename TU, typename TV>
inline void report_kind_mismatches(const representation& rep,
                                   std::vector<rep_violation>& out) {
  for (std::size_t i = 0; i < rep.u_objects.size(); ++i)
    if (!std::holds_alternative<TU>(rep.u_objects[i]))
      out.push_back({"kind-mismatch", 'u', static_cast<int>(i),
                     std::string("expected ") +
                         kind_name(geom_object{TU{}}) + ", got " +
                         kind_name(rep.u_objects[i])});
  for (std::size_t j = 0; j < rep.v_objects.size(); ++j)
    if (!std::holds_alternative<TV>(rep.v_objects[j]))
      out.push_back({"kind-mismatch", 'v', static_cast<int>(j),
                     std::string("expected ") +
                         kind_name(geom_object{TV{}}) + ", got " +
                         kind_name(rep.v_objects[j])});
}

// chain and conv admit both side orientations; pick the one that matches more
// objects when reporting.
template <typename A, typename B>
inline void report_two_orientation(const representation& rep,
                                   std::vector<rep_violation>& out) {
  const std::size_t fwd = count_of_kind<A>(rep.u_objects) + count_of_kind<B>(rep.v_objects);
  const std::size_t rev = count_of_kind<B>(rep.u_objects) + count_of_kind<A>(rep.v_objects);
  if (fwd >= rev)
    report_kind_mismatches<A, B>(rep, out);
  else
    report_kind_mismatches<B, A>(rep, out);
}

}  // namespace detail

// Total function: an empty result means the representation is well formed.
inline std::vector<rep_violation> validate_representation(const representation& rep) {
  std::vector<rep_violation> out;
  switch (rep.cls) {
    case rep_class::chain:
      detail::report_two_orientation<right_ray, point1>(rep, out);
      break;
    case rep_class::conv:
      detail::report_two_orientation<interval, point1>(rep, out);
      break;
    case rep_class::interval_containment:
      detail::report_kind_mismatches<interval, interval>(rep, out);
      break;
    case rep_class::sr:
      detail::report_kind_mismatches<hsegment, up_ray>(rep, out);
      break;
    case rep_class::gig:
      detail::report_kind_mismatches<hsegment, vsegment>(rep, out);
      break;
    case rep_class::prig:
      detail::report_kind_mismatches<rect_obj, point2>(rep, out);
      break;
    case rep_class::chain3_brc:
      detail::report_kind_mismatches<hsegment, bottomless_rect>(rep, out);
      break;
  }

  auto check_ordered = [&](const std::vector<geom_object>& objs, char side) {
    for (std::size_t i = 0; i < objs.size(); ++i)
      if (!detail::interval_fields_ordered(objs[i]))
        out.push_back({"interval-order", side, static_cast<int>(i),
                       "interval endpoints out of order"});
  };
  check_ordered(rep.u_objects, 'u');
  check_ordered(rep.v_objects, 'v');

  if (rep.cls == rep_class::chain3_brc) {
    std::map<coord, int> seen;
    for (std::size_t i = 0; i < rep.u_objects.size(); ++i) {
      const auto* seg = std::get_if<hsegment>(&rep.u_objects[i]);
      if (!seg) continue;
      auto [it, inserted] = seen.emplace(seg->y, static_cast<int>(i));
      if (!inserted)
        out.push_back({"duplicate-y", 'u', static_cast<int>(i),
                       "segment shares y-coordinate with segment " +
                           std::to_string(it->second)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bipartite graphs
// ---------------------------------------------------------------------------

struct bipartite_graph {
  int u_count = 0;
  int v_count = 0;
  std::vector<std::pair<int, int>> edges;  // sorted, unique (u_index, v_index)

  bool operator==(const bipartite_graph&) const = default;

  void normalize() {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [u, v] : edges)
      if (u < 0 || u >= u_count || v < 0 || v >= v_count)
        throw std::invalid_argument("bipartite_graph: edge index out of range");
  }

  bool has_edge(int u, int v) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
  }

  std::size_t edge_count() const { return edges.size(); }
};

inline bipartite_graph make_graph(int u_count, int v_count,
                                  std::vector<std::pair<int, int>> edges) {
  bipartite_graph g{u_count, v_count, std::move(edges)};
  g.normalize();
  return g;
}

namespace detail {
inline bool conv_u_is_interval(const representation& rep) {
  for (const auto& o : rep.u_objects)
    return std::holds_alternative<interval>(o);
  for (const auto& o : rep.v_objects)
    return !std::holds_alternative<interval>(o);
  return true;
}
}  // namespace detail

// Edge (i, j) is present iff the class relation holds between u_objects[i]
// and v_objects[j]: intersection for chain/sr/gig/prig, containment for
// conv/interval_containment/chain3_brc.
inline bipartite_graph build_graph(const representation& rep) {
  auto violations = validate_representation(rep);
  if (!violations.empty()) {
    std::string msg = "invalid representation:";
    for (const auto& v : violations)
      msg += " [" + v.rule + " " + v.side + std::to_string(v.index) + "]";
    throw std::invalid_argument(msg);
  }

  const int m = static_cast<int>(rep.u_objects.size());
  const int n = static_cast<int>(rep.v_objects.size());
  bipartite_graph g{m, n, {}};

  const bool conv_u_interval =
      rep.cls == rep_class::conv && detail::conv_u_is_interval(rep);

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      bool edge = false;
      switch (rep.cls) {
        case rep_class::chain:
        case rep_class::sr:
        case rep_class::gig:
        case rep_class::prig:
          edge = intersects(rep.u_objects[i], rep.v_objects[j]);
          break;
        case rep_class::conv:
          edge = conv_u_interval ? contains(rep.u_objects[i], rep.v_objects[j])
                                 : contains(rep.v_objects[j], rep.u_objects[i]);
          break;
        case rep_class::interval_containment:
        case rep_class::chain3_brc:
          edge = contains(rep.v_objects[j], rep.u_objects[i]);
          break;
      }
      if (edge) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

}  // namespace zarank
