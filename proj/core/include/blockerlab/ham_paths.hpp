#pragma once

// Simple (non-crossing) Hamiltonian paths of CK(n).
//
// Search relies on one structural fact about convex position: a path is
// simple and Hamiltonian iff, at every step, the unvisited vertices form a
// single boundary arc and the next vertex is one of that arc's two ends.
// Stepping into the interior of the arc would cut the remaining vertices into
// two sides that can only be joined across the chord just drawn. The search
// state is therefore (unvisited arc, which end we stand next to), which gives
// an O(n^2) memoised existence test and an exhaustive 2^(n-2)-per-start
// enumeration. Both are validated against permutation brute force in tests.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "blockerlab/geometry.hpp"

namespace blockerlab {

/// Ordered vertex sequence in CK(n).
class Path {
 public:
  Path() = default;
  /// Throws std::invalid_argument if a vertex is out of range.
  Path(int n, std::vector<int> vertices);

  int order() const { return n_; }
  std::size_t size() const { return vertices_.size(); }
  std::span<const int> vertices() const { return vertices_; }
  int front() const { return vertices_.front(); }
  int back() const { return vertices_.back(); }

  std::vector<Edge> edges() const;
  bool uses(Edge e) const;
  bool meets(const EdgeSet& s) const;
  Path reversed() const;
  Path rotated(int k) const;
  Path reflected(int axis) const;
  /// Orientation with front() < back(), the canonical undirected form.
  Path normalized() const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  int n_ = 0;
  std::vector<int> vertices_;
};

bool is_simple(const Path& p);
/// Visits all n vertices exactly once with pairwise non-crossing edges.
bool is_shp(const Path& p);

/// Calls fn for every SHP of CK(n), each undirected path once (front < back).
/// Order is deterministic: by start vertex, then clockwise-first branching.
void for_each_shp(int n, const std::function<void(const Path&)>& fn);
std::vector<Path> enumerate_shps(int n);
std::uint64_t count_shps(int n);

/// Reusable search for SHPs avoiding a forbidden edge set of CK(n). Holds
/// scratch buffers so that exhaustive enumerations can test millions of
/// candidates without allocating.
class AvoidanceSearch {
 public:
  explicit AvoidanceSearch(int n);

  int order() const { return n_; }
  void set_forbidden(std::span<const Edge> forbidden);
  /// True iff some SHP uses no forbidden edge.
  bool exists();
  /// Deterministic avoiding SHP in normalized orientation, if one exists.
  std::optional<Path> find();

 private:
  bool alive(int lo, int len, int side);
  int current(int lo, int len, int side) const;
  bool allowed(int u, int v) const { return !forbidden_[u * n_ + v]; }

  int n_;
  std::vector<char> forbidden_;
  std::vector<Edge> active_;
  std::vector<std::uint32_t> stamp_;
  std::vector<char> value_;
  std::uint32_t epoch_ = 0;
};

std::optional<Path> find_avoiding_shp(const EdgeSet& forbidden);
/// True iff every SHP of CK(n) uses an edge of s.
bool blocks(const EdgeSet& s);

}  // namespace blockerlab
