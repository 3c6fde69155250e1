#pragma once

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "zarank/certificates.hpp"
#include "zarank/certify.hpp"
#include "zarank/geom.hpp"
#include "zarank/oracle.hpp"

namespace zarank::certify {

// Bulky/thin classification of containment edges. An edge (u, v) is O-bulky
// when the rectangle of v contains at least k-1 of the O-successors of u's
// segment; edges with no bulky tag are thin.
struct edge_classification {
  std::map<std::pair<int, int>, std::set<oracle::po_kind>> tags;
  std::vector<std::array<int, 3>> bulky_count_per_u;  // [dl, dr, c]
  std::vector<int> thin_count_per_v;
  long long bulky_edges = 0;
  long long thin_edges = 0;
};

namespace detail_ {

inline void validate_chain3(const representation& rep, const char* who) {
  if (rep.cls != rep_class::chain3_brc)
    throw std::invalid_argument(std::string(who) + ": representation class is not chain3_brc");
  auto violations = validate_representation(rep);
  if (!violations.empty())
    throw std::invalid_argument(std::string(who) + ": invalid representation (" +
                                violations.front().rule + ")");
}

struct chain3_succ {
  // successor index lists per segment, for each partial order
  std::vector<std::vector<int>> dl, dr, c;
};

inline chain3_succ successors(const representation& rep) {
  const int m = static_cast<int>(rep.u_objects.size());
  chain3_succ s{std::vector<std::vector<int>>(m), std::vector<std::vector<int>>(m),
                std::vector<std::vector<int>>(m)};
  auto seg = [&](int i) { return std::get<hsegment>(rep.u_objects[i]); };
  for (int i = 0; i < m; ++i) {
    const auto a = seg(i);
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const auto b = seg(j);
      if (b.x_lo <= a.x_lo && b.x_hi <= a.x_hi && b.y < a.y) s.dl[i].push_back(j);
      if (a.x_lo <= b.x_lo && a.x_hi <= b.x_hi && b.y < a.y) s.dr[i].push_back(j);
      if (b.x_lo >= a.x_lo && b.x_hi <= a.x_hi && (b.x_lo > a.x_lo || b.x_hi < a.x_hi))
        s.c[i].push_back(j);
    }
  }
  return s;
}

}  // namespace detail_

inline edge_classification classify_edges_chain3(const representation& rep, int k) {
  detail_::validate_chain3(rep, "classify_edges_chain3");
  if (k < 2) throw std::invalid_argument("classify_edges_chain3: k must be at least 2");

  const auto g = build_graph(rep);
  const auto succ = detail_::successors(rep);

  edge_classification out;
  out.bulky_count_per_u.assign(g.u_count, {0, 0, 0});
  out.thin_count_per_v.assign(g.v_count, 0);

  for (const auto& [u, v] : g.edges) {
    const auto& rect = rep.v_objects[v];
    std::set<oracle::po_kind> tag;
    const std::vector<int>* lists[3] = {&succ.dl[u], &succ.dr[u], &succ.c[u]};
    constexpr oracle::po_kind kinds[3] = {oracle::po_kind::dl, oracle::po_kind::dr,
                                          oracle::po_kind::c};
    for (int t = 0; t < 3; ++t) {
      int cnt = 0;
      for (int j : *lists[t])
        if (contains(rect, rep.u_objects[j]) && ++cnt >= k - 1) break;
      if (cnt >= k - 1) {
        tag.insert(kinds[t]);
        ++out.bulky_count_per_u[u][t];
      }
    }
    if (tag.empty()) {
      ++out.thin_count_per_v[v];
      ++out.thin_edges;
    } else {
      ++out.bulky_edges;
    }
    out.tags.emplace(std::make_pair(u, v), std::move(tag));
  }
  return out;
}

// Certifier for segment/bottomless-rectangle containment graphs. Either every
// vertex has at most k-1 bulky edges per order (giving the edge bound), or a
// biclique is extracted from an overloaded vertex.
inline certificate certify_chain3(const representation& rep, int k) {
  detail_::validate_chain3(rep, "certify_chain3");
  if (k < 1) throw std::invalid_argument("certify_chain3: k must be at least 1");
  const auto g = build_graph(rep);
  const long long m = g.u_count, n = g.v_count;
  const long long bound = (3 * m + 6 * n) * (k - 1);

  if (k == 1) {
    certificate c;
    if (g.edges.empty()) {
      c.value = within_bound_certificate{0, std::nullopt, chain3_tally{0, 0}};
    } else {
      c.value = biclique_witness{{g.edges.front().first}, {g.edges.front().second}};
    }
    return c;
  }

  const auto cls = classify_edges_chain3(rep, k);
  auto seg = [&](int i) { return std::get<hsegment>(rep.u_objects[i]); };
  const auto succ = detail_::successors(rep);

  for (int u = 0; u < g.u_count; ++u) {
    for (int t = 0; t < 3; ++t) {
      if (cls.bulky_count_per_u[u][t] < k) continue;
      const auto kind = std::array{oracle::po_kind::dl, oracle::po_kind::dr,
                                   oracle::po_kind::c}[t];
      std::vector<int> b;  // k rectangles whose edge at u carries this tag
      for (const auto& [edge, tags] : cls.tags) {
        if (edge.first != u || !tags.count(kind)) continue;
        b.push_back(edge.second);
        if (static_cast<int>(b.size()) == k) break;
      }

      // The k-1 successors every tagged rectangle necessarily contains:
      // largest min-x for dl, smallest max-x for dr, lowest y for c.
      auto order = t == 0 ? succ.dl[u] : t == 1 ? succ.dr[u] : succ.c[u];
      std::sort(order.begin(), order.end(), [&](int a2, int b2) {
        if (t == 0) return std::pair(seg(a2).x_lo, -a2) > std::pair(seg(b2).x_lo, -b2);
        if (t == 1) return std::pair(seg(a2).x_hi, a2) < std::pair(seg(b2).x_hi, b2);
        return std::pair(seg(a2).y, a2) < std::pair(seg(b2).y, b2);
      });

      biclique_witness w;
      w.u_vertices.assign(order.begin(), order.begin() + (k - 1));
      w.u_vertices.push_back(u);
      w.v_vertices = b;
      if (!oracle::verify_witness(g, w))
        throw std::logic_error("certify_chain3: extracted witness failed verification");
      certificate c;
      c.value = std::move(w);
      return c;
    }
  }

  if (static_cast<long long>(g.edges.size()) > bound)
    throw std::logic_error("certify_chain3: edge tally exceeds bound without an overloaded vertex");
  certificate c;
  c.value = within_bound_certificate{bound, std::nullopt,
                                     chain3_tally{cls.bulky_edges, cls.thin_edges}};
  return c;
}

}  // namespace zarank::certify
