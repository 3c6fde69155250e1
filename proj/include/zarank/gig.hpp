#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "zarank/certificates.hpp"
#include "zarank/certify.hpp"
#include "zarank/geom.hpp"
#include "zarank/oracle.hpp"

namespace zarank::certify {

// Quarter-credit payments: 18 quarters per neighbor payment, 9 per distant
// payment.
enum class pay_rule {
  alg1_ul,  // leftmost up-heavy neighbors
  alg1_ur,  // rightmost up-heavy neighbors
  alg1_dl,  // leftmost down-heavy neighbors
  alg1_dr,  // rightmost down-heavy neighbors
  alg2_lu,  // rightmost up-heavy strictly left
  alg2_ld,  // rightmost down-heavy strictly left
  alg2_ru,  // leftmost up-heavy strictly right
  alg2_rd,  // leftmost down-heavy strictly right
};

inline const char* to_string(pay_rule r) {
  switch (r) {
    case pay_rule::alg1_ul: return "alg1_ul";
    case pay_rule::alg1_ur: return "alg1_ur";
    case pay_rule::alg1_dl: return "alg1_dl";
    case pay_rule::alg1_dr: return "alg1_dr";
    case pay_rule::alg2_lu: return "alg2_lu";
    case pay_rule::alg2_ld: return "alg2_ld";
    case pay_rule::alg2_ru: return "alg2_ru";
    case pay_rule::alg2_rd: return "alg2_rd";
  }
  return "?";
}

struct payment {
  int payer_u = 0;
  int payee_v = 0;
  int amount_quarters = 0;  // 18 or 9
  pay_rule rule = pay_rule::alg1_ul;
};

struct credit_ledger {
  std::vector<payment> payments;
  std::vector<long long> balances;  // quarters, by v index
};

struct ledger_violation {
  int v = 0;
  int block = 0;  // -1 for the total-balance check
  std::vector<int> members;
  long long received_quarters = 0;
  long long required_quarters = 0;
};

namespace detail_ {

// Horizontal y-coordinates (and vertical x-coordinates) are ordered with the
// vertex index as an infinitesimal tie-break, so every instance behaves as if
// in general position.
struct gig_context {
  const representation* rep = nullptr;
  bipartite_graph g;
  std::vector<std::vector<int>> v_nbrs;  // per vertical: horizontals, sorted by (y, idx)
  std::vector<std::vector<int>> u_nbrs;  // per horizontal: verticals, sorted by (x, idx)

  const hsegment& seg(int u) const { return std::get<hsegment>(rep->u_objects[u]); }
  const vsegment& vseg_at(int v) const { return std::get<vsegment>(rep->v_objects[v]); }

  std::pair<coord, int> sym_y(int u) const { return {seg(u).y, u}; }
  std::pair<coord, int> sym_x(int v) const { return {vseg_at(v).x, v}; }
};

inline gig_context make_gig_context(const representation& rep, const char* who) {
  if (rep.cls != rep_class::gig)
    throw std::invalid_argument(std::string(who) + ": representation class is not gig");
  auto violations = validate_representation(rep);
  if (!violations.empty())
    throw std::invalid_argument(std::string(who) + ": invalid representation (" +
                                violations.front().rule + ")");
  gig_context ctx;
  ctx.rep = &rep;
  ctx.g = build_graph(rep);
  ctx.v_nbrs.assign(ctx.g.v_count, {});
  ctx.u_nbrs.assign(ctx.g.u_count, {});
  for (const auto& [u, v] : ctx.g.edges) {
    ctx.v_nbrs[v].push_back(u);
    ctx.u_nbrs[u].push_back(v);
  }
  for (auto& nb : ctx.v_nbrs)
    std::sort(nb.begin(), nb.end(),
              [&](int a, int b) { return ctx.sym_y(a) < ctx.sym_y(b); });
  for (auto& nb : ctx.u_nbrs)
    std::sort(nb.begin(), nb.end(),
              [&](int a, int b) { return ctx.sym_x(a) < ctx.sym_x(b); });
  return ctx;
}

inline bool strictly_inside_y(const gig_context& ctx, int v, int u) {
  const auto& s = ctx.seg(u);
  const auto& t = ctx.vseg_at(v);
  return t.y_lo < s.y && s.y < t.y_hi;
}

inline bool heavy_dir(const gig_context& ctx, int v, int u, int k, bool down) {
  if (!strictly_inside_y(ctx, v, u)) return false;
  const auto key = ctx.sym_y(u);
  int cnt = 0;
  for (int nb : ctx.v_nbrs[v]) {
    const bool below = ctx.sym_y(nb) < key;
    if (below == down && nb != u) ++cnt;
  }
  return cnt >= 3 * (k - 1);
}

// Leftmost (or rightmost) k-1 verticals by (x, index).
inline std::vector<int> pick_extreme(const gig_context& ctx, std::vector<int> cand,
                                     int count, bool leftmost) {
  std::sort(cand.begin(), cand.end(), [&](int a, int b) {
    return leftmost ? ctx.sym_x(a) < ctx.sym_x(b) : ctx.sym_x(a) > ctx.sym_x(b);
  });
  if (static_cast<int>(cand.size()) > count) cand.resize(count);
  return cand;
}

}  // namespace detail_

inline bool is_down_heavy(const representation& rep, int v, int u, int k) {
  auto ctx = detail_::make_gig_context(rep, "is_down_heavy");
  return detail_::heavy_dir(ctx, v, u, k, true);
}

inline bool is_up_heavy(const representation& rep, int v, int u, int k) {
  auto ctx = detail_::make_gig_context(rep, "is_up_heavy");
  return detail_::heavy_dir(ctx, v, u, k, false);
}

namespace detail_ {

inline credit_ledger compute_ledger(const gig_context& ctx, int k) {
  credit_ledger led;
  led.balances.assign(ctx.g.v_count, 0);
  if (k < 1) throw std::invalid_argument("credit ledger: k must be at least 1");

  auto pay = [&](int u, const std::vector<int>& vs, int quarters, pay_rule rule) {
    for (int v : vs) {
      led.payments.push_back({u, v, quarters, rule});
      led.balances[v] += quarters;
    }
  };

  for (int u = 0; u < ctx.g.u_count; ++u) {
    const auto& s = ctx.seg(u);

    std::vector<int> nb_up, nb_down;
    for (int v : ctx.u_nbrs[u]) {
      if (heavy_dir(ctx, v, u, k, false)) nb_up.push_back(v);
      if (heavy_dir(ctx, v, u, k, true)) nb_down.push_back(v);
    }
    pay(u, pick_extreme(ctx, nb_up, k - 1, true), 18, pay_rule::alg1_ul);
    pay(u, pick_extreme(ctx, nb_up, k - 1, false), 18, pay_rule::alg1_ur);
    pay(u, pick_extreme(ctx, nb_down, k - 1, true), 18, pay_rule::alg1_dl);
    pay(u, pick_extreme(ctx, nb_down, k - 1, false), 18, pay_rule::alg1_dr);

    std::vector<int> left_up, left_down, right_up, right_down;
    for (int v = 0; v < ctx.g.v_count; ++v) {
      const auto& t = ctx.vseg_at(v);
      const bool left = t.x < s.x_lo;
      const bool right = t.x > s.x_hi;
      if (!left && !right) continue;
      if (heavy_dir(ctx, v, u, k, false)) (left ? left_up : right_up).push_back(v);
      if (heavy_dir(ctx, v, u, k, true)) (left ? left_down : right_down).push_back(v);
    }
    pay(u, pick_extreme(ctx, left_up, k - 1, false), 9, pay_rule::alg2_lu);
    pay(u, pick_extreme(ctx, left_down, k - 1, false), 9, pay_rule::alg2_ld);
    pay(u, pick_extreme(ctx, right_up, k - 1, true), 9, pay_rule::alg2_ru);
    pay(u, pick_extreme(ctx, right_down, k - 1, true), 9, pay_rule::alg2_rd);
  }
  return led;
}

struct neighbor_blocks {
  // consecutive runs of 3(k-1) neighbors, skipping the 3(k-1) lowest and
  // highest; empty when the vertical's degree is below 27(k-1)
  std::vector<std::vector<int>> blocks;
};

inline neighbor_blocks blocks_for(const gig_context& ctx, int v, int k) {
  neighbor_blocks out;
  const auto& nbrs = ctx.v_nbrs[v];
  const long long deg = static_cast<long long>(nbrs.size());
  const long long unit = 3LL * (k - 1);
  if (k < 2 || deg < 27LL * (k - 1)) return out;
  const long long count = (deg - 2 * unit) / unit;
  for (long long b = 0; b < count; ++b) {
    std::vector<int> members(nbrs.begin() + unit + b * unit,
                             nbrs.begin() + unit + (b + 1) * unit);
    out.blocks.push_back(std::move(members));
  }
  return out;
}

inline std::vector<ledger_violation> verify_ledger_ctx(const gig_context& ctx,
                                                       const credit_ledger& led, int k) {
  std::vector<ledger_violation> out;
  if (k < 2) return out;

  // payments to v, keyed by the payer's symbolic y
  std::vector<std::vector<std::pair<std::pair<coord, int>, long long>>> incoming(
      ctx.g.v_count);
  for (const auto& p : led.payments)
    incoming[p.payee_v].push_back({ctx.sym_y(p.payer_u), p.amount_quarters});

  for (int v = 0; v < ctx.g.v_count; ++v) {
    const long long deg = static_cast<long long>(ctx.v_nbrs[v].size());
    if (deg < 27LL * (k - 1)) continue;
    const auto blocks = blocks_for(ctx, v, k);
    for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
      const auto& mem = blocks.blocks[b];
      const auto lo = ctx.sym_y(mem.front());
      const auto hi = ctx.sym_y(mem.back());
      long long received = 0;
      for (const auto& [key, amt] : incoming[v])
        if (lo <= key && key <= hi) received += amt;
      const long long required = 18LL * (k - 1);
      if (received < required)
        out.push_back({v, static_cast<int>(b), mem, received, required});
    }
    const long long required_total = 4 * deg;
    if (led.balances[v] < required_total)
      out.push_back({v, -1, {}, led.balances[v], required_total});
  }
  return out;
}

}  // namespace detail_

// Executes both payment algorithms literally and itemizes every payment.
inline credit_ledger compute_credit_ledger(const representation& rep, int k) {
  auto ctx = detail_::make_gig_context(rep, "compute_credit_ledger");
  return detail_::compute_ledger(ctx, k);
}

// Checks, for every vertical of degree at least 27(k-1), that each interior
// neighbor block attracted 9/2 (k-1) credits and that the total balance is at
// least four quarters per neighbor. A nonempty result localizes candidate
// biclique regions.
inline std::vector<ledger_violation> verify_ledger(const representation& rep,
                                                   const credit_ledger& led, int k) {
  auto ctx = detail_::make_gig_context(rep, "verify_ledger");
  return detail_::verify_ledger_ctx(ctx, led, k);
}

namespace detail_ {

inline std::optional<biclique_witness> witness_from_candidates(
    const gig_context& ctx, const std::vector<int>& row_cand,
    const std::vector<int>& cols, int k) {
  if (static_cast<int>(cols.size()) < k) return std::nullopt;
  std::vector<int> rows_ok;
  for (int u : row_cand) {
    bool all = true;
    for (int v : cols)
      if (!ctx.g.has_edge(u, v)) {
        all = false;
        break;
      }
    if (all) rows_ok.push_back(u);
    if (static_cast<int>(rows_ok.size()) == k) break;
  }
  if (static_cast<int>(rows_ok.size()) < k) return std::nullopt;
  biclique_witness w;
  w.u_vertices = rows_ok;
  w.v_vertices.assign(cols.begin(), cols.begin() + k);
  return w;
}

// Stage 1: replay the payment analysis on a failing block. For a stingy
// horizontal, the extreme heavy verticals it did pay, together with the
// stingy segments on one side of it, frequently close a biclique directly.
inline std::optional<biclique_witness> stage1_search(const gig_context& ctx,
                                                     const credit_ledger& led,
                                                     const std::vector<ledger_violation>& viols,
                                                     int k) {
  std::set<std::pair<int, int>> alg1_paid;  // (payer u, payee v)
  for (const auto& p : led.payments)
    if (p.amount_quarters == 18) alg1_paid.insert({p.payer_u, p.payee_v});

  for (const auto& viol : viols) {
    if (viol.block < 0) continue;
    const int v = viol.v;
    std::vector<int> stingy;
    for (int u : viol.members)
      if (!alg1_paid.count({u, v})) stingy.push_back(u);

    for (int u : stingy) {
      for (bool down : {true, false}) {
        std::vector<int> s_dir;
        for (int u2 : stingy)
          if (u2 != u && ((ctx.sym_y(u2) < ctx.sym_y(u)) == down)) s_dir.push_back(u2);

        std::vector<int> heavy;
        for (int nv : ctx.u_nbrs[u])
          if (heavy_dir(ctx, nv, u, k, down)) heavy.push_back(nv);

        for (bool rightmost : {true, false}) {
          auto q = pick_extreme(ctx, heavy, k - 1, !rightmost);
          if (static_cast<int>(q.size()) < k - 1) continue;
          int vprime = -1;
          for (int qq : q) {
            if (vprime == -1) {
              vprime = qq;
              continue;
            }
            const auto& a = ctx.vseg_at(qq);
            const auto& b = ctx.vseg_at(vprime);
            const bool better = down ? std::pair(a.y_lo, qq) > std::pair(b.y_lo, vprime)
                                     : std::pair(a.y_hi, -qq) < std::pair(b.y_hi, -vprime);
            if (better) vprime = qq;
          }

          std::vector<int> rows{u};
          if (vprime != -1)
            for (int u2 : s_dir)
              if (ctx.g.has_edge(u2, vprime)) rows.push_back(u2);

          std::vector<int> cols = q;
          if (std::find(cols.begin(), cols.end(), v) == cols.end()) cols.push_back(v);
          if (auto w = witness_from_candidates(ctx, rows, cols, k)) return w;
        }
      }
    }
  }
  return std::nullopt;
}

// Stage 2: exhaustive search restricted to the verticals spanning some
// neighbor of a high-degree vertical, plus their horizontal neighbors.
inline std::optional<biclique_witness> stage2_search(const gig_context& ctx, int k) {
  for (int v = 0; v < ctx.g.v_count; ++v) {
    if (static_cast<long long>(ctx.v_nbrs[v].size()) <= 27LL * (k - 1)) continue;
    std::set<int> region_v{v};
    for (int u : ctx.v_nbrs[v])
      for (int v2 = 0; v2 < ctx.g.v_count; ++v2)
        if (strictly_inside_y(ctx, v2, u)) region_v.insert(v2);
    std::set<int> region_u(ctx.v_nbrs[v].begin(), ctx.v_nbrs[v].end());
    for (int v2 : region_v)
      region_u.insert(ctx.v_nbrs[v2].begin(), ctx.v_nbrs[v2].end());

    std::vector<int> us(region_u.begin(), region_u.end());
    std::vector<int> vs(region_v.begin(), region_v.end());
    std::map<int, int> v_local;
    for (std::size_t j = 0; j < vs.size(); ++j) v_local[vs[j]] = static_cast<int>(j);
    std::map<int, int> u_local;
    for (std::size_t i = 0; i < us.size(); ++i) u_local[us[i]] = static_cast<int>(i);

    bipartite_graph sub{static_cast<int>(us.size()), static_cast<int>(vs.size()), {}};
    for (const auto& [u2, v2] : ctx.g.edges) {
      auto iu = u_local.find(u2);
      auto iv = v_local.find(v2);
      if (iu != u_local.end() && iv != v_local.end())
        sub.edges.emplace_back(iu->second, iv->second);
    }
    sub.normalize();
    auto w = oracle::find_biclique(sub, k, oracle::unbounded_limits());
    if (w) {
      biclique_witness mapped;
      for (int i : w->u_vertices) mapped.u_vertices.push_back(us[i]);
      for (int j : w->v_vertices) mapped.v_vertices.push_back(vs[j]);
      return mapped;
    }
  }
  return std::nullopt;
}

}  // namespace detail_

// Grid-intersection certifier: peel at 27(k-1); an unpeelable residue must
// contain a biclique, which is extracted in escalating stages (payment
// template, localized exhaustive search, whole-residue search).
inline certificate certify_gig(const representation& rep, int k) {
  if (k < 1) throw std::invalid_argument("certify_gig: k must be at least 1");
  auto ctx = detail_::make_gig_context(rep, "certify_gig");
  const auto& g = ctx.g;
  const long long bound = 27LL * (g.u_count + g.v_count) * (k - 1);

  if (k == 1) {
    certificate c;
    if (g.edges.empty()) {
      auto peel = zarank::detail::run_min_degree_peel(g, 0);
      c.value = within_bound_certificate{0,
                                         elimination_certificate{peel.steps, peel.max_degree},
                                         std::nullopt};
    } else {
      c.value = biclique_witness{{g.edges.front().first}, {g.edges.front().second}};
    }
    return c;
  }

  auto peel = zarank::detail::run_min_degree_peel(g, 27LL * (k - 1));
  if (peel.complete) {
    certificate c;
    c.value = within_bound_certificate{bound,
                                       elimination_certificate{peel.steps, peel.max_degree},
                                       std::nullopt};
    return c;
  }

  // Build the residual sub-representation with original indices tracked.
  std::vector<int> keep_u, keep_v;
  for (int u = 0; u < g.u_count; ++u)
    if (!peel.removed[u]) keep_u.push_back(u);
  for (int v = 0; v < g.v_count; ++v)
    if (!peel.removed[g.u_count + v]) keep_v.push_back(v);

  representation resid{rep_class::gig, {}, {}};
  for (int u : keep_u) resid.u_objects.push_back(rep.u_objects[u]);
  for (int v : keep_v) resid.v_objects.push_back(rep.v_objects[v]);
  auto rctx = detail_::make_gig_context(resid, "certify_gig");

  auto mapped_back = [&](const biclique_witness& w) {
    biclique_witness out;
    for (int i : w.u_vertices) out.u_vertices.push_back(keep_u[i]);
    for (int j : w.v_vertices) out.v_vertices.push_back(keep_v[j]);
    return out;
  };

  const auto led = detail_::compute_ledger(rctx, k);
  const auto viols = detail_::verify_ledger_ctx(rctx, led, k);

  std::optional<biclique_witness> w;
  int stage = 0;
  if ((w = detail_::stage1_search(rctx, led, viols, k))) stage = 1;
  if (!w && (w = detail_::stage2_search(rctx, k))) stage = 2;
  if (!w && (w = oracle::find_biclique(rctx.g, k, oracle::unbounded_limits()))) stage = 3;
  if (!w)
    throw std::logic_error(
        "certify_gig: residual minimum degree exceeds 27(k-1) but no biclique found");

  auto full = mapped_back(*w);
  if (!oracle::verify_witness(g, full))
    throw std::logic_error("certify_gig: extracted witness failed verification");
  certificate c;
  c.value = std::move(full);
  c.extraction_stage = stage;
  return c;
}

}  // namespace zarank::certify
