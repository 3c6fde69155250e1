#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "zarank/certificates.hpp"
#include "zarank/detail/peel.hpp"
#include "zarank/geom.hpp"
#include "zarank/oracle.hpp"

namespace zarank::certify {

// Re-executes a recorded peel against the original graph: every recorded
// degree must match exactly, every vertex must be removed exactly once, and
// no degree may exceed the claimed degeneracy.
inline bool replay_elimination(const bipartite_graph& g,
                               const elimination_certificate& cert) {
  const int n = g.u_count + g.v_count;
  if (static_cast<int>(cert.steps.size()) != n) return false;
  auto adj = zarank::detail::unified_adjacency(g);
  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(adj[i].size());
  std::vector<char> removed(n, 0);
  for (const auto& step : cert.steps) {
    if (step.vertex < 0 || step.vertex >= n || removed[step.vertex]) return false;
    if (deg[step.vertex] != step.degree) return false;
    if (step.degree > cert.claimed_degeneracy) return false;
    removed[step.vertex] = 1;
    for (int nb : adj[step.vertex])
      if (!removed[nb]) --deg[nb];
  }
  return true;
}

// ---------------------------------------------------------------------------
// Gamma-free ordering
// ---------------------------------------------------------------------------

enum class order_status { found, none_exists, not_found };

struct gamma_order_result {
  order_status status = order_status::not_found;
  std::vector<int> row_order;  // row_order[p] = u index shown at row p
  std::vector<int> col_order;
};

namespace detail_ {

struct matrix_view {
  int m = 0, n = 0;
  std::vector<std::vector<char>> cell;  // cell[u][v]
};

inline matrix_view to_matrix(const bipartite_graph& g) {
  matrix_view mv{g.u_count, g.v_count,
                 std::vector<std::vector<char>>(g.u_count, std::vector<char>(g.v_count, 0))};
  for (const auto& [u, v] : g.edges) mv.cell[u][v] = 1;
  return mv;
}

// Greedy doubly lexical refinement: repeatedly emit the column whose counts
// against the ordered row partition are lexicographically largest, then split
// each block into (ones, zeros). The result has nonincreasing rows and
// columns with the first position most significant.
inline std::pair<std::vector<int>, std::vector<int>> doubly_lexical(const matrix_view& mv) {
  std::vector<std::vector<int>> blocks;
  if (mv.m > 0) {
    blocks.emplace_back(mv.m);
    std::iota(blocks[0].begin(), blocks[0].end(), 0);
  }
  std::vector<int> remaining(mv.n);
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> col_order;
  col_order.reserve(mv.n);

  std::vector<int> best_trace, trace;
  while (!remaining.empty()) {
    int best = -1;
    best_trace.clear();
    for (int c : remaining) {
      trace.clear();
      trace.reserve(blocks.size());
      for (const auto& b : blocks) {
        int cnt = 0;
        for (int r : b) cnt += mv.cell[r][c];
        trace.push_back(cnt);
      }
      if (best == -1 || trace > best_trace) {
        best = c;
        best_trace = trace;
      }
    }
    col_order.push_back(best);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));

    std::vector<std::vector<int>> next;
    next.reserve(blocks.size() * 2);
    for (auto& b : blocks) {
      std::vector<int> ones, zeros;
      for (int r : b)
        (mv.cell[r][best] ? ones : zeros).push_back(r);
      if (!ones.empty()) next.push_back(std::move(ones));
      if (!zeros.empty()) next.push_back(std::move(zeros));
    }
    blocks = std::move(next);
  }

  std::vector<int> row_order;
  row_order.reserve(mv.m);
  for (const auto& b : blocks)
    for (int r : b) row_order.push_back(r);
  return {row_order, col_order};
}

// With the row order fixed, a pattern-free column order exists iff the
// forced precedences between columns are acyclic; any topological order of
// them is pattern-free.
inline std::optional<std::vector<int>> column_order_for_rows(
    const matrix_view& mv, const std::vector<int>& row_order) {
  const int n = mv.n;
  std::vector<std::vector<char>> before(n, std::vector<char>(n, 0));  // a must precede b

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      // Placing a before b is forbidden iff rows i < i' exist with
      // (M[i][a], M[i][b], M[i'][a], M[i'][b]) = (0, 1, 1, 1).
      bool bad = false;
      bool seen_01 = false;
      for (int p = 0; p < mv.m && !bad; ++p) {
        const int r = row_order[p];
        const char xa = mv.cell[r][a], xb = mv.cell[r][b];
        if (seen_01 && xa && xb) bad = true;
        if (!xa && xb) seen_01 = true;
      }
      if (bad) before[b][a] = 1;
    }
  }

  std::vector<int> indeg(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (before[a][b]) ++indeg[b];
  std::set<int> ready;
  for (int c = 0; c < n; ++c)
    if (indeg[c] == 0) ready.insert(c);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int c = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(c);
    for (int b = 0; b < n; ++b)
      if (before[c][b] && --indeg[b] == 0) ready.insert(b);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;  // cycle
  return order;
}

inline matrix_view transpose(const matrix_view& mv) {
  matrix_view t{mv.n, mv.m,
                std::vector<std::vector<char>>(mv.n, std::vector<char>(mv.m, 0))};
  for (int r = 0; r < mv.m; ++r)
    for (int c = 0; c < mv.n; ++c) t.cell[c][r] = mv.cell[r][c];
  return t;
}

}  // namespace detail_

// Looks for row/column orders whose reordered biadjacency matrix avoids the
// ordered pattern (0 1 / 1 1). Refinement first; when the smaller side has at
// most 7 vertices, an exhaustive fallback decides existence completely.
inline gamma_order_result gamma_free_order(const bipartite_graph& g) {
  const auto mv = detail_::to_matrix(g);

  auto accept = [&](std::vector<int> ro, std::vector<int> co) -> std::optional<gamma_order_result> {
    if (!oracle::is_gamma_free(g, ro, co))
      return gamma_order_result{order_status::found, std::move(ro), std::move(co)};
    return std::nullopt;
  };

  {
    auto [ro, co] = detail_::doubly_lexical(mv);
    if (auto r = accept(ro, co)) return *r;
    std::reverse(ro.begin(), ro.end());
    std::reverse(co.begin(), co.end());
    if (auto r = accept(ro, co)) return *r;
  }
  {
    auto [co, ro] = detail_::doubly_lexical(detail_::transpose(mv));
    if (auto r = accept(ro, co)) return *r;
    std::reverse(ro.begin(), ro.end());
    std::reverse(co.begin(), co.end());
    if (auto r = accept(ro, co)) return *r;
  }

  const bool rows_small = mv.m <= 7, cols_small = mv.n <= 7;
  if (!rows_small && !cols_small)
    return gamma_order_result{order_status::not_found, {}, {}};

  // The pattern is symmetric under transposition, so permute the smaller
  // side as rows.
  const bool use_transpose = !rows_small || (cols_small && mv.n < mv.m);
  const auto base = use_transpose ? detail_::transpose(mv) : mv;
  std::vector<int> perm(base.m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (auto cols = detail_::column_order_for_rows(base, perm)) {
      std::vector<int> ro = perm, co = *cols;
      if (use_transpose) std::swap(ro, co);
      auto r = accept(std::move(ro), std::move(co));
      if (!r) throw std::logic_error("gamma_free_order: exhaustive order failed recheck");
      return *r;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return gamma_order_result{order_status::none_exists, {}, {}};
}

// ---------------------------------------------------------------------------
// Chordal-bipartite certifier
// ---------------------------------------------------------------------------

inline certificate certify_chordal(const bipartite_graph& g,
                                   const std::vector<int>& row_order,
                                   const std::vector<int>& col_order, int k) {
  if (k < 1) throw std::invalid_argument("certify_chordal: k must be at least 1");
  if (oracle::is_gamma_free(g, row_order, col_order))
    throw std::invalid_argument("certify_chordal: ordering is not gamma-free");

  const long long bound =
      static_cast<long long>(g.u_count + g.v_count) * (k - 1);
  auto peel = zarank::detail::run_min_degree_peel(g, k - 1);
  if (peel.complete) {
    certificate c;
    c.value = within_bound_certificate{bound,
                                       elimination_certificate{peel.steps, peel.max_degree},
                                       std::nullopt};
    return c;
  }

  // Residual minimum degree is at least k. In the reordered residual matrix,
  // the neighbors of the last residual column and of the bottommost row with
  // a one in it span an all-ones submatrix.
  std::vector<int> row_pos(g.u_count), col_pos(g.v_count);
  for (int p = 0; p < g.u_count; ++p) row_pos[row_order[p]] = p;
  for (int q = 0; q < g.v_count; ++q) col_pos[col_order[q]] = q;

  auto alive_u = [&](int u) { return !peel.removed[u]; };
  auto alive_v = [&](int v) { return !peel.removed[g.u_count + v]; };

  int last_col = -1;  // v index with maximal residual column position
  for (int v = 0; v < g.v_count; ++v)
    if (alive_v(v) && (last_col == -1 || col_pos[v] > col_pos[last_col])) last_col = v;
  if (last_col == -1) throw std::logic_error("certify_chordal: stuck peel with no residual column");

  int bottom_row = -1;
  for (const auto& [u, v] : g.edges)
    if (v == last_col && alive_u(u) && (bottom_row == -1 || row_pos[u] > row_pos[bottom_row]))
      bottom_row = u;
  if (bottom_row == -1) throw std::logic_error("certify_chordal: residual column has no ones");

  std::vector<std::pair<int, int>> rows, cols;  // (position, index)
  for (const auto& [u, v] : g.edges) {
    if (v == last_col && alive_u(u)) rows.emplace_back(row_pos[u], u);
    if (u == bottom_row && alive_v(v)) cols.emplace_back(col_pos[v], v);
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  if (static_cast<int>(rows.size()) < k || static_cast<int>(cols.size()) < k)
    throw std::logic_error("certify_chordal: extraction found too few candidates");

  biclique_witness w;
  for (int t = 0; t < k; ++t) {
    w.u_vertices.push_back(rows[t].second);
    w.v_vertices.push_back(cols[t].second);
  }
  if (!oracle::verify_witness(g, w))
    throw std::logic_error("certify_chordal: extracted witness failed verification");
  certificate c;
  c.value = std::move(w);
  return c;
}

// ---------------------------------------------------------------------------
// Segment-ray certifier
// ---------------------------------------------------------------------------

inline certificate certify_sr(const representation& rep, int k) {
  if (k < 1) throw std::invalid_argument("certify_sr: k must be at least 1");
  if (rep.cls != rep_class::sr)
    throw std::invalid_argument("certify_sr: representation class is not sr");
  const auto g = build_graph(rep);

  const long long bound =
      2LL * (g.u_count + g.v_count) * (k - 1);
  auto peel = zarank::detail::run_min_degree_peel(g, 2LL * (k - 1));
  if (peel.complete) {
    certificate c;
    c.value = within_bound_certificate{bound,
                                       elimination_certificate{peel.steps, peel.max_degree},
                                       std::nullopt};
    return c;
  }

  // Residual degrees are at least 2k-1. Take the residual ray with the
  // highest start, strip the extreme k-1 segments on each side among its
  // neighbors, pick a middle segment, and close the biclique on whichever
  // side of the ray holds k-1 of that segment's rays.
  auto alive_u = [&](int u) { return !peel.removed[u]; };
  auto alive_v = [&](int v) { return !peel.removed[g.u_count + v]; };
  auto seg = [&](int u) { return std::get<hsegment>(rep.u_objects[u]); };
  auto ray = [&](int v) { return std::get<up_ray>(rep.v_objects[v]); };

  int r = -1;
  for (int v = 0; v < g.v_count; ++v)
    if (alive_v(v) && (r == -1 || std::pair(ray(v).y_start, -v) > std::pair(ray(r).y_start, -r)))
      r = v;
  if (r == -1) throw std::logic_error("certify_sr: stuck peel with no residual ray");

  std::vector<int> segs;  // residual segments meeting r
  for (const auto& [u, v] : g.edges)
    if (v == r && alive_u(u)) segs.push_back(u);

  auto by_left = segs;
  std::sort(by_left.begin(), by_left.end(), [&](int a, int b) {
    return std::pair(seg(a).x_lo, a) < std::pair(seg(b).x_lo, b);
  });
  auto by_right = segs;
  std::sort(by_right.begin(), by_right.end(), [&](int a, int b) {
    return std::pair(seg(a).x_hi, -a) > std::pair(seg(b).x_hi, -b);
  });
  std::set<int> extreme;
  std::vector<int> s_left(by_left.begin(), by_left.begin() + (k - 1));
  std::vector<int> s_right(by_right.begin(), by_right.begin() + (k - 1));
  extreme.insert(s_left.begin(), s_left.end());
  extreme.insert(s_right.begin(), s_right.end());

  int s = -1;
  for (int u : segs)
    if (!extreme.count(u)) {
      s = u;
      break;
    }
  if (s == -1) throw std::logic_error("certify_sr: no middle segment available");

  std::vector<int> r_left, r_right;
  for (const auto& [u, v] : g.edges) {
    if (u != s || !alive_v(v) || v == r) continue;
    if (std::pair(ray(v).x, v) < std::pair(ray(r).x, r))
      r_left.push_back(v);
    else
      r_right.push_back(v);
  }

  biclique_witness w;
  const bool left = static_cast<int>(r_left.size()) >= k - 1;
  const auto& side_rays = left ? r_left : r_right;
  const auto& side_segs = left ? s_left : s_right;
  if (static_cast<int>(side_rays.size()) < k - 1)
    throw std::logic_error("certify_sr: neither ray side is large enough");
  w.v_vertices.assign(side_rays.begin(), side_rays.begin() + (k - 1));
  w.v_vertices.push_back(r);
  w.u_vertices = side_segs;
  w.u_vertices.push_back(s);
  if (!oracle::verify_witness(g, w))
    throw std::logic_error("certify_sr: extracted witness failed verification");
  certificate c;
  c.value = std::move(w);
  return c;
}

}  // namespace zarank::certify
