#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace zarank::detail {

// Fixed-width bit row used for neighborhood intersections.
struct bitrow {
  int nbits = 0;
  std::vector<std::uint64_t> w;

  bitrow() = default;
  explicit bitrow(int n) : nbits(n), w((n + 63) / 64, 0) {}

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

  bitrow& operator&=(const bitrow& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] &= o.w[k];
    return *this;
  }

  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }

  // Lowest set bit at or after `from`, or -1.
  int next_set(int from) const {
    if (from >= nbits) return -1;
    int k = from >> 6;
    std::uint64_t cur = w[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) {
        int bit = (k << 6) + std::countr_zero(cur);
        return bit < nbits ? bit : -1;
      }
      if (++k >= static_cast<int>(w.size())) return -1;
      cur = w[k];
    }
  }

  int first_set() const { return next_set(0); }

  int last_set() const {
    for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k)
      if (w[k]) return (k << 6) + 63 - std::countl_zero(w[k]);
    return -1;
  }
};

inline int count_and(const bitrow& a, const bitrow& b) {
  int c = 0;
  for (std::size_t k = 0; k < a.w.size(); ++k) c += std::popcount(a.w[k] & b.w[k]);
  return c;
}

}  // namespace zarank::detail
