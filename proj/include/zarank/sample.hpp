#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>

#include "zarank/geom.hpp"

namespace zarank::sample {

// Deterministic splitmix64 stream; output is identical on every platform for
// a given seed, which keeps generated instances byte-stable.
struct rng {
  std::uint64_t state;
  explicit rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound]
  std::uint64_t below(std::uint64_t bound) {
    return bound == ~0ull ? next() : next() % (bound + 1);
  }

  coord uniform(coord lo, coord hi) {
    return lo + static_cast<coord>(below(static_cast<std::uint64_t>(hi - lo)));
  }
};

struct sample_options {
  // Coordinates are uniform integers in [0, box]; box defaults to 4(m+n).
  coord box = -1;
  // Maximum extent of interval-valued objects; defaults to the box width.
  coord max_len = -1;
};

namespace detail_ {

inline std::pair<coord, coord> random_span(rng& r, coord box, coord max_len) {
  const coord lo = r.uniform(0, box);
  const coord len = r.uniform(0, std::min(max_len, box - lo));
  return {lo, lo + len};
}

}  // namespace detail_

// Seeded uniform instance sampler. u side has m objects, v side n, drawn in
// index order so the stream of draws (and hence the instance) is reproducible.
inline representation sample_representation(rep_class cls, int m, int n,
                                            std::uint64_t seed,
                                            sample_options opt = {}) {
  if (m < 0 || n < 0) throw std::invalid_argument("sample_representation: negative side");
  rng r(seed);
  const coord box = opt.box > 0 ? opt.box : 4LL * (m + n);
  const coord max_len = opt.max_len >= 0 ? opt.max_len : box;
  representation rep{cls, {}, {}};

  switch (cls) {
    case rep_class::chain:
      for (int i = 0; i < m; ++i) rep.u_objects.push_back(right_ray{r.uniform(0, box)});
      for (int j = 0; j < n; ++j) rep.v_objects.push_back(point1{r.uniform(0, box)});
      break;
    case rep_class::conv:
      for (int i = 0; i < m; ++i) {
        auto [lo, hi] = detail_::random_span(r, box, max_len);
        rep.u_objects.push_back(interval{lo, hi});
      }
      for (int j = 0; j < n; ++j) rep.v_objects.push_back(point1{r.uniform(0, box)});
      break;
    case rep_class::interval_containment:
      for (int i = 0; i < m; ++i) {
        auto [lo, hi] = detail_::random_span(r, box, max_len);
        rep.u_objects.push_back(interval{lo, hi});
      }
      for (int j = 0; j < n; ++j) {
        auto [lo, hi] = detail_::random_span(r, box, max_len);
        rep.v_objects.push_back(interval{lo, hi});
      }
      break;
    case rep_class::sr:
      for (int i = 0; i < m; ++i) {
        auto [lo, hi] = detail_::random_span(r, box, max_len);
        rep.u_objects.push_back(hsegment{lo, hi, r.uniform(0, box)});
      }
      for (int j = 0; j < n; ++j)
        rep.v_objects.push_back(up_ray{r.uniform(0, box), r.uniform(0, box)});
      break;
    case rep_class::gig:
      for (int i = 0; i < m; ++i) {
        auto [lo, hi] = detail_::random_span(r, box, max_len);
        rep.u_objects.push_back(hsegment{lo, hi, r.uniform(0, box)});
      }
      for (int j = 0; j < n; ++j) {
        auto [lo, hi] = detail_::random_span(r, box, max_len);
        rep.v_objects.push_back(vsegment{r.uniform(0, box), lo, hi});
      }
      break;
    case rep_class::prig:
      for (int i = 0; i < m; ++i) {
        auto [xlo, xhi] = detail_::random_span(r, box, max_len);
        auto [ylo, yhi] = detail_::random_span(r, box, max_len);
        rep.u_objects.push_back(rect_obj{xlo, xhi, ylo, yhi});
      }
      for (int j = 0; j < n; ++j)
        rep.v_objects.push_back(point2{r.uniform(0, box), r.uniform(0, box)});
      break;
    case rep_class::chain3_brc: {
      if (box + 1 < m)
        throw std::invalid_argument(
            "sample_representation: box too small for distinct y-coordinates");
      std::set<coord> used;
      for (int i = 0; i < m; ++i) {
        auto [lo, hi] = detail_::random_span(r, box, max_len);
        coord y = r.uniform(0, box);
        while (used.count(y)) y = r.uniform(0, box);
        used.insert(y);
        rep.u_objects.push_back(hsegment{lo, hi, y});
      }
      for (int j = 0; j < n; ++j) {
        auto [lo, hi] = detail_::random_span(r, box, max_len);
        rep.v_objects.push_back(bottomless_rect{lo, hi, r.uniform(0, box)});
      }
      break;
    }
  }
  return rep;
}

}  // namespace zarank::sample
