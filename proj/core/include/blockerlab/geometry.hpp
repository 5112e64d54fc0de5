#pragma once

// Cyclic arithmetic on the vertices of a convex n-gon.
//
// Vertices are labelled 0..n-1 clockwise. All predicates are exact: in convex
// position, whether two chords cross depends only on the cyclic order of
// their endpoints, so no coordinates are ever needed.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace blockerlab {

/// Reduces x into [0, n).
constexpr int mod(int x, int n) {
  const int r = x % n;
  return r < 0 ? r + n : r;
}

/// Unordered vertex pair, stored with the smaller label first.
struct Edge {
  int a = 0;
  int b = 1;

  constexpr Edge() = default;
  constexpr Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {
    if (u == v) throw std::invalid_argument("edge endpoints must differ");
  }

  constexpr bool has(int v) const { return a == v || b == v; }
  constexpr int other(int v) const { return v == a ? b : a; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds the edge {u mod n, v mod n}.
inline Edge make_edge(int u, int v, int n) { return Edge(mod(u, n), mod(v, n)); }

/// Direction of an edge: the sum of its endpoints mod n. Parallel edges share it.
constexpr int direction(Edge e, int n) { return mod(e.a + e.b, n); }

/// Cyclic distance between two vertices; zero iff they coincide.
constexpr int distance(int u, int v, int n) {
  const int d = mod(u - v, n);
  return d < n - d ? d : n - d;
}

constexpr bool is_boundary(Edge e, int n) { return distance(e.a, e.b, n) == 1; }

/// True iff the chords have four distinct endpoints that interleave.
/// Chords sharing an endpoint never cross. Independent of n because edges are
/// stored with a < b, so the open arc (a, b) is an integer interval.
constexpr bool crosses(Edge e1, Edge e2) {
  if (e1.has(e2.a) || e1.has(e2.b)) return false;
  const bool in_a = e1.a < e2.a && e2.a < e1.b;
  const bool in_b = e1.a < e2.b && e2.b < e1.b;
  return in_a != in_b;
}

constexpr Edge rotate(Edge e, int k, int n) {
  return Edge(mod(e.a + k, n), mod(e.b + k, n));
}

/// Mirror image x -> axis - x. Maps direction d to 2*axis - d.
constexpr Edge reflect(Edge e, int axis, int n) {
  return Edge(mod(axis - e.a, n), mod(axis - e.b, n));
}

/// True iff v lies on the clockwise arc from `from` to `to`, endpoints included.
constexpr bool on_arc(int v, int from, int to, int n) {
  return mod(v - from, n) <= mod(to - from, n);
}

/// The parallel class D_dir: every edge of direction `dir`.
std::vector<Edge> parallel_class(int n, int dir);

/// For odd n, the unique vertex x with 2x = dir (mod n), missed by D_dir.
int missed_vertex(int n, int dir);

/// Index of edge [a,b] in the lexicographic listing of all n(n-1)/2 edges.
int edge_index(Edge e, int n);
std::vector<Edge> all_edges(int n);

/// A duplicate-free, canonically sorted set of edges of CK(n).
class EdgeSet {
 public:
  EdgeSet() = default;
  /// Throws std::invalid_argument on n < 3, out-of-range endpoints, or duplicates.
  EdgeSet(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::span<const Edge> edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }

  bool contains(Edge e) const;
  std::vector<int> directions() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& x, const EdgeSet& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.edges_ <=> y.edges_;
  }

 private:
  int n_ = 3;
  std::vector<Edge> edges_;
};

/// Shifts every endpoint by +k (mod n).
EdgeSet rotate(const EdgeSet& s, int k);
EdgeSet reflect(const EdgeSet& s, int axis);

/// Lexicographically smallest rotation of s, with the shift that produces it.
struct CanonicalForm {
  EdgeSet set;
  int shift = 0;
};
CanonicalForm canonical_rotation(const EdgeSet& s);

/// If s has m = (n+1)/2 edges whose directions are exactly those of the
/// boundary path <c, c+1, ..., c+m>, returns c. Otherwise (wrong size, even n,
/// repeated or non-consecutive directions) returns nullopt.
std::optional<int> boundary_consecutive_window(const EdgeSet& s);

}  // namespace blockerlab
