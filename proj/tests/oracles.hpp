#pragma once

// Test-only reference implementations, deliberately independent of the
// library: crossings are decided with floating-point segment intersection on
// actual polygon coordinates, SHPs are found by filtering all permutations,
// and blockers are hitting sets of those SHPs' edge masks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using VertexPair = std::pair<int, int>;

struct Point {
  double x;
  double y;
};

inline Point corner(int v, int n) {
  const double t = 2.0 * std::numbers::pi * v / n;
  return {std::sin(t), std::cos(t)};
}

inline double orient(Point a, Point b, Point c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Proper intersection of two chords with four distinct endpoints.
inline bool segments_cross(int n, VertexPair e, VertexPair f) {
  if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second) return false;
  const Point a = corner(e.first, n), b = corner(e.second, n);
  const Point c = corner(f.first, n), d = corner(f.second, n);
  return (orient(a, b, c) > 0) != (orient(a, b, d) > 0) && (orient(c, d, a) > 0) != (orient(c, d, b) > 0);
}

inline bool permutation_is_simple(int n, const std::vector<int>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    for (std::size_t j = i + 2; j + 1 < p.size(); ++j)
      if (segments_cross(n, {p[i], p[i + 1]}, {p[j], p[j + 1]})) return false;
  return true;
}

/// Every non-crossing Hamiltonian vertex order with p.front() < p.back().
inline std::vector<std::vector<int>> shps_by_permutation(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    if (p.front() < p.back() && permutation_is_simple(n, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Index of {u, v} among the n(n-1)/2 vertex pairs, row-major over u < v.
inline int pair_index(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

/// Each SHP as a bit mask over pair indices (n <= 11 keeps this within 64 bits).
inline std::vector<std::uint64_t> shp_masks(int n, const std::vector<std::vector<int>>& shps) {
  std::vector<std::uint64_t> masks;
  for (const auto& p : shps) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) m |= std::uint64_t{1} << pair_index(p[i], p[i + 1], n);
    masks.push_back(m);
  }
  return masks;
}

inline bool hits_all(std::uint64_t set, const std::vector<std::uint64_t>& masks) {
  for (std::uint64_t m : masks)
    if (!(set & m)) return false;
  return true;
}

/// All `size`-subsets of vertex pairs meeting every SHP, as sorted pair lists
/// in lexicographic order.
inline std::vector<std::vector<VertexPair>> hitting_sets(int n, int size, const std::vector<std::uint64_t>& masks) {
  std::vector<VertexPair> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int total = static_cast<int>(pairs.size());
  std::vector<std::vector<VertexPair>> out;
  std::vector<int> c(size);
  for (int i = 0; i < size; ++i) c[i] = i;
  while (true) {
    std::uint64_t set = 0;
    for (int i : c) set |= std::uint64_t{1} << i;
    if (hits_all(set, masks)) {
      std::vector<VertexPair> s;
      for (int i : c) s.push_back(pairs[i]);
      out.push_back(std::move(s));
    }
    int i = size - 1;
    while (i >= 0 && c[i] == total - size + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

/// Smallest size of a hitting set, by increasing size.
inline int min_hitting_size(int n, const std::vector<std::uint64_t>& masks) {
  for (int size = 1;; ++size)
    if (!hitting_sets(n, size, masks).empty()) return size;
}

}  // namespace oracle
