#include "blockerlab/geometry.hpp"

#include <algorithm>
#include <string>

namespace blockerlab {

std::vector<Edge> parallel_class(int n, int dir) {
  std::vector<Edge> out;
  for (int x = 0; x < n; ++x) {
    const int y = mod(dir - x, n);
    if (x < y) out.emplace_back(x, y);
  }
  return out;
}

int missed_vertex(int n, int dir) {
  if (n % 2 == 0) throw std::invalid_argument("missed_vertex requires odd n");
  // 2 is invertible mod odd n with inverse (n+1)/2.
  return mod(static_cast<int>((static_cast<long long>(dir) * ((n + 1) / 2)) % n), n);
}

int edge_index(Edge e, int n) {
  // Row a holds edges [a, a+1..n-1]; rows before it contribute sum_{r<a}(n-1-r).
  return e.a * (2 * n - e.a - 1) / 2 + (e.b - e.a - 1);
}

std::vector<Edge> all_edges(int n) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

EdgeSet::EdgeSet(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 3) throw std::invalid_argument("graph order must be at least 3");
  for (const Edge& e : edges_) {
    if (e.a < 0 || e.b >= n)
      throw std::invalid_argument("edge [" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                  "] out of range for n=" + std::to_string(n));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge in edge set");
}

bool EdgeSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> EdgeSet::directions() const {
  std::vector<int> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(direction(e, n_));
  return out;
}

EdgeSet rotate(const EdgeSet& s, int k) {
  std::vector<Edge> out;
  out.reserve(s.size());
  for (const Edge& e : s) out.push_back(rotate(e, k, s.order()));
  return EdgeSet(s.order(), std::move(out));
}

EdgeSet reflect(const EdgeSet& s, int axis) {
  std::vector<Edge> out;
  out.reserve(s.size());
  for (const Edge& e : s) out.push_back(reflect(e, axis, s.order()));
  return EdgeSet(s.order(), std::move(out));
}

CanonicalForm canonical_rotation(const EdgeSet& s) {
  CanonicalForm best{s, 0};
  for (int k = 1; k < s.order(); ++k) {
    EdgeSet r = rotate(s, k);
    if (r < best.set) best = {std::move(r), k};
  }
  return best;
}

std::optional<int> boundary_consecutive_window(const EdgeSet& s) {
  const int n = s.order();
  if (n % 2 == 0) return std::nullopt;
  const int m = (n + 1) / 2;
  if (static_cast<int>(s.size()) != m) return std::nullopt;

  std::vector<char> present(n, 0);
  for (int d : s.directions()) {
    if (present[d]) return std::nullopt;
    present[d] = 1;
  }
  // The path <c..c+m> has edge directions 2c+1, 2c+3, ..., 2c+2m-1. For odd n
  // these m values determine c uniquely, so the first hit is the only one.
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int t = 0; t < m && ok; ++t) ok = present[mod(2 * c + 2 * t + 1, n)];
    if (ok) return c;
  }
  return std::nullopt;
}

}  // namespace blockerlab
