#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "zarank/certificates.hpp"
#include "zarank/detail/bitset.hpp"
#include "zarank/detail/peel.hpp"
#include "zarank/geom.hpp"

namespace zarank::oracle {

// Exhaustive searches refuse instances beyond these caps instead of silently
// degrading. Raise them explicitly where larger runs are intended.
struct limits {
  int max_side = 60;
  int max_k = 3;
};

inline limits unbounded_limits() {
  return limits{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
}

struct oracle_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct tie_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool verify_witness(const bipartite_graph& g, const biclique_witness& w) {
  const std::size_t k = w.u_vertices.size();
  if (k == 0 || w.v_vertices.size() != k) return false;
  std::set<int> us(w.u_vertices.begin(), w.u_vertices.end());
  std::set<int> vs(w.v_vertices.begin(), w.v_vertices.end());
  if (us.size() != k || vs.size() != k) return false;
  for (int u : us)
    if (u < 0 || u >= g.u_count) return false;
  for (int v : vs)
    if (v < 0 || v >= g.v_count) return false;
  for (int u : us)
    for (int v : vs)
      if (!g.has_edge(u, v)) return false;
  return true;
}

namespace detail_ {

using zarank::detail::bitrow;

struct side_view {
  // rows[a] = neighborhood of a-side vertex a as a bitset over the b side.
  std::vector<bitrow> rows;
  std::vector<int> alive;  // indices still eligible, ascending
};

inline std::optional<biclique_witness> enumerate_side(
    const std::vector<bitrow>& rows, const std::vector<int>& alive,
    const bitrow& alive_b_mask, int k, bool a_is_u) {
  std::vector<int> chosen;
  chosen.reserve(k);
  std::optional<biclique_witness> found;

  // Depth-first enumeration of k-subsets in ascending index order with a
  // running intersection; the first full subset with a large enough common
  // neighborhood is the lexicographically first witness.
  const int a_count = static_cast<int>(alive.size());
  std::vector<bitrow> stack;
  stack.reserve(k + 1);
  stack.push_back(alive_b_mask);

  auto rec = [&](auto&& self, int start_pos) -> bool {
    if (static_cast<int>(chosen.size()) == k) {
      const bitrow& common = stack.back();
      std::vector<int> bs;
      int bit = common.first_set();
      while (bit != -1 && static_cast<int>(bs.size()) < k) {
        bs.push_back(bit);
        bit = common.next_set(bit + 1);
      }
      biclique_witness w;
      if (a_is_u) {
        w.u_vertices = chosen;
        w.v_vertices = bs;
      } else {
        w.u_vertices = bs;
        w.v_vertices = chosen;
      }
      found = std::move(w);
      return true;
    }
    const int need = k - static_cast<int>(chosen.size());
    for (int pos = start_pos; pos + need <= a_count; ++pos) {
      const int a = alive[pos];
      bitrow next = stack.back();
      next &= rows[a];
      if (next.count() < k) continue;
      chosen.push_back(a);
      stack.push_back(std::move(next));
      if (self(self, pos + 1)) return true;
      stack.pop_back();
      chosen.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace detail_

// Exhaustive K_{k,k} search. Enumerates k-subsets of the smaller side after
// iterated degree-< k pruning, intersecting neighborhoods; it never misses a
// biclique within the caps.
inline std::optional<biclique_witness> find_biclique(const bipartite_graph& g, int k,
                                                     limits caps = {}) {
  if (k < 1) throw std::invalid_argument("find_biclique: k must be at least 1");
  if (g.u_count > caps.max_side || g.v_count > caps.max_side)
    throw oracle_limit_error("find_biclique: instance side exceeds cap " +
                             std::to_string(caps.max_side));
  if (k > caps.max_k)
    throw oracle_limit_error("find_biclique: k exceeds cap " + std::to_string(caps.max_k));

  using zarank::detail::bitrow;
  const int m = g.u_count, n = g.v_count;
  std::vector<bitrow> u_rows(m, bitrow(n)), v_rows(n, bitrow(m));
  for (const auto& [u, v] : g.edges) {
    u_rows[u].set(v);
    v_rows[v].set(u);
  }

  std::vector<char> u_alive(m, 1), v_alive(n, 1);
  bitrow u_mask(m), v_mask(n);
  for (int i = 0; i < m; ++i) u_mask.set(i);
  for (int j = 0; j < n; ++j) v_mask.set(j);

  // Vertices of degree < k cannot participate; prune to a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < m; ++i)
      if (u_alive[i] && zarank::detail::count_and(u_rows[i], v_mask) < k) {
        u_alive[i] = 0;
        u_mask.reset(i);
        changed = true;
      }
    for (int j = 0; j < n; ++j)
      if (v_alive[j] && zarank::detail::count_and(v_rows[j], u_mask) < k) {
        v_alive[j] = 0;
        v_mask.reset(j);
        changed = true;
      }
  }

  std::vector<int> u_live, v_live;
  for (int i = 0; i < m; ++i)
    if (u_alive[i]) u_live.push_back(i);
  for (int j = 0; j < n; ++j)
    if (v_alive[j]) v_live.push_back(j);
  if (static_cast<int>(u_live.size()) < k || static_cast<int>(v_live.size()) < k)
    return std::nullopt;

  if (u_live.size() <= v_live.size())
    return detail_::enumerate_side(u_rows, u_live, v_mask, k, /*a_is_u=*/true);
  return detail_::enumerate_side(v_rows, v_live, u_mask, k, /*a_is_u=*/false);
}

// Min-degree peel of the whole graph; d is the largest degree recorded.
inline std::pair<int, elimination_certificate> degeneracy(const bipartite_graph& g) {
  auto out = zarank::detail::run_min_degree_peel(g, std::numeric_limits<long long>::max());
  elimination_certificate cert{out.steps, out.max_degree};
  return {out.max_degree, cert};
}

struct gamma_violation {
  int i = 0, j = 0, i2 = 0, j2 = 0;  // row/column positions, 0-based
  bool operator==(const gamma_violation&) const = default;
};

namespace detail_ {

inline void check_permutation(const std::vector<int>& order, int n, const char* what) {
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument(std::string(what) + ": wrong length");
  std::vector<char> seen(n, 0);
  for (int x : order) {
    if (x < 0 || x >= n || seen[x])
      throw std::invalid_argument(std::string(what) + ": not a permutation");
    seen[x] = 1;
  }
}

}  // namespace detail_

// Scans the reordered biadjacency matrix for the ordered submatrix
// (0 1 / 1 1); returns the lexicographically first (i, j, i', j') hit.
inline std::optional<gamma_violation> is_gamma_free(const bipartite_graph& g,
                                                    const std::vector<int>& row_order,
                                                    const std::vector<int>& col_order) {
  detail_::check_permutation(row_order, g.u_count, "row_order");
  detail_::check_permutation(col_order, g.v_count, "col_order");

  using zarank::detail::bitrow;
  const int m = g.u_count, n = g.v_count;
  std::vector<int> col_pos(n);
  for (int q = 0; q < n; ++q) col_pos[col_order[q]] = q;

  std::vector<bitrow> rows(m, bitrow(n));  // rows[p] over column positions
  std::vector<int> row_pos(m);
  for (int p = 0; p < m; ++p) row_pos[row_order[p]] = p;
  for (const auto& [u, v] : g.edges) rows[row_pos[u]].set(col_pos[v]);

  bool exists = false;
  for (int i = 0; i < m && !exists; ++i) {
    for (int i2 = i + 1; i2 < m && !exists; ++i2) {
      bitrow zeros_ones = rows[i2];  // positions with M[i]=0, M[i2]=1
      for (std::size_t w = 0; w < zeros_ones.w.size(); ++w)
        zeros_ones.w[w] &= ~rows[i].w[w];
      bitrow both = rows[i];
      both &= rows[i2];
      const int lo = zeros_ones.first_set();
      if (lo != -1 && lo < both.last_set()) exists = true;
    }
  }
  if (!exists) return std::nullopt;

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rows[i].test(j)) continue;
      for (int i2 = i + 1; i2 < m; ++i2) {
        if (!rows[i2].test(j)) continue;
        bitrow both = rows[i];
        both &= rows[i2];
        const int j2 = both.next_set(j + 1);
        if (j2 != -1) return gamma_violation{i, j, i2, j2};
      }
    }
  }
  return std::nullopt;  // unreachable given the existence scan
}

enum class po_kind { dl, dr, c };

// Reports every partial order (left-descending, right-descending, strict
// x-nesting) in which the two segments are comparable, in either direction.
inline std::set<po_kind> comparability(const hsegment& a, const hsegment& b) {
  auto dl_succ = [](const hsegment& s, const hsegment& s2) {
    return s2.x_lo <= s.x_lo && s2.x_hi <= s.x_hi && s2.y < s.y;
  };
  auto dr_succ = [](const hsegment& s, const hsegment& s2) {
    return s.x_lo <= s2.x_lo && s.x_hi <= s2.x_hi && s2.y < s.y;
  };
  auto c_succ = [](const hsegment& s, const hsegment& s2) {
    return s2.x_lo >= s.x_lo && s2.x_hi <= s.x_hi &&
           (s2.x_lo > s.x_lo || s2.x_hi < s.x_hi);
  };

  std::set<po_kind> out;
  if (c_succ(a, b) || c_succ(b, a)) out.insert(po_kind::c);
  if (a.y == b.y) {
    if (out.empty())
      throw tie_error("comparability: equal y with non-nested x-intervals");
    return out;
  }
  if (dl_succ(a, b) || dl_succ(b, a)) out.insert(po_kind::dl);
  if (dr_succ(a, b) || dr_succ(b, a)) out.insert(po_kind::dr);
  return out;
}

// True iff no induced cycle of length >= 6 exists. Checks every vertex
// subset, so it is capped.
inline bool is_chordal_bipartite(const bipartite_graph& g, int max_vertices = 14) {
  const int n = g.u_count + g.v_count;
  if (n > max_vertices || n > 24)
    throw oracle_limit_error("is_chordal_bipartite: instance exceeds cap " +
                             std::to_string(std::min(max_vertices, 24)));
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [u, v] : g.edges) {
    adj[u] |= std::uint64_t{1} << (g.u_count + v);
    adj[g.u_count + v] |= std::uint64_t{1} << u;
  }

  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const int size = std::popcount(mask);
    if (size < 6 || size % 2 != 0) continue;
    // An induced subgraph is a chordless cycle iff every vertex has induced
    // degree two and it is connected.
    bool all_deg2 = true;
    int first = -1;
    for (int v = 0; v < n && all_deg2; ++v) {
      if (!((mask >> v) & 1)) continue;
      if (first == -1) first = v;
      if (std::popcount(adj[v] & mask) != 2) all_deg2 = false;
    }
    if (!all_deg2) continue;
    std::uint64_t seen = std::uint64_t{1} << first;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v] & mask & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    if (seen == mask) return false;
  }
  return true;
}

}  // namespace zarank::oracle
