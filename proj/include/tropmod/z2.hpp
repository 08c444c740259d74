#pragma once

#include <cstdint>
#include <vector>

namespace tropmod {

/// Bit-packed vector over the two-element field.
using BitColumn = std::vector<std::uint64_t>;

inline BitColumn make_column(std::int64_t bits) {
  return BitColumn(static_cast<size_t>((bits + 63) / 64), 0);
}

inline void set_bit(BitColumn& c, std::int64_t i) { c[i >> 6] ^= (1ull << (i & 63)); }

inline bool get_bit(const BitColumn& c, std::int64_t i) { return (c[i >> 6] >> (i & 63)) & 1; }

inline void xor_into(BitColumn& a, const BitColumn& b) {
  for (size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
}

inline bool is_zero(const BitColumn& c) {
  for (std::uint64_t w : c)
    if (w) return false;
  return true;
}

inline int lowest_set(const BitColumn& c) {
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i]) return static_cast<int>(64 * i + __builtin_ctzll(c[i]));
  return -1;
}

/// Rank by plain column elimination; destroys its argument.
inline std::int64_t column_rank(std::vector<BitColumn> cols) {
  std::vector<std::pair<int, BitColumn>> pivots;  // (pivot row, reduced column)
  std::int64_t rank = 0;
  for (BitColumn& col : cols) {
    for (const auto& [p, pc] : pivots)
      if (get_bit(col, p)) xor_into(col, pc);
    int p = lowest_set(col);
    if (p == -1) continue;
    pivots.emplace_back(p, col);
    ++rank;
  }
  return rank;
}

}  // namespace tropmod
