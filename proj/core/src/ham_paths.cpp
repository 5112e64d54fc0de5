#include "blockerlab/ham_paths.hpp"

#include <algorithm>
#include <string>

namespace blockerlab {

Path::Path(int n, std::vector<int> vertices) : n_(n), vertices_(std::move(vertices)) {
  if (n < 1) throw std::invalid_argument("path order must be positive");
  for (int v : vertices_) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                  std::to_string(n));
  }
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    out.emplace_back(vertices_[i], vertices_[i + 1]);
  return out;
}

bool Path::uses(Edge e) const {
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (Edge(vertices_[i], vertices_[i + 1]) == e) return true;
  }
  return false;
}

bool Path::meets(const EdgeSet& s) const {
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (s.contains(Edge(vertices_[i], vertices_[i + 1]))) return true;
  }
  return false;
}

Path Path::reversed() const {
  return Path(n_, std::vector<int>(vertices_.rbegin(), vertices_.rend()));
}

Path Path::rotated(int k) const {
  std::vector<int> out(vertices_);
  for (int& v : out) v = mod(v + k, n_);
  return Path(n_, std::move(out));
}

Path Path::reflected(int axis) const {
  std::vector<int> out(vertices_);
  for (int& v : out) v = mod(axis - v, n_);
  return Path(n_, std::move(out));
}

Path Path::normalized() const {
  if (vertices_.size() >= 2 && vertices_.front() > vertices_.back()) return reversed();
  return *this;
}

bool is_simple(const Path& p) {
  const std::vector<Edge> es = p.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (crosses(es[i], es[j])) return false;
  return true;
}

bool is_shp(const Path& p) {
  const int n = p.order();
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : p.vertices()) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return is_simple(p);
}

namespace {

// Walks every choice sequence from `start`; `trail` holds the prefix.
void extend_all(int n, int lo, int len, std::vector<int>& trail,
                const std::function<void(const Path&)>& fn) {
  if (len == 0) {
    if (trail.front() < trail.back()) fn(Path(n, trail));
    return;
  }
  trail.push_back(lo);
  extend_all(n, mod(lo + 1, n), len - 1, trail, fn);
  trail.pop_back();
  if (len > 1) {
    trail.push_back(mod(lo + len - 1, n));
    extend_all(n, lo, len - 1, trail, fn);
    trail.pop_back();
  }
}

}  // namespace

void for_each_shp(int n, const std::function<void(const Path&)>& fn) {
  if (n < 3) throw std::invalid_argument("SHP enumeration requires n >= 3");
  std::vector<int> trail;
  trail.reserve(n);
  for (int start = 0; start < n; ++start) {
    trail.assign(1, start);
    extend_all(n, mod(start + 1, n), n - 1, trail, fn);
  }
}

std::vector<Path> enumerate_shps(int n) {
  std::vector<Path> out;
  for_each_shp(n, [&](const Path& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_shps(int n) {
  std::uint64_t count = 0;
  for_each_shp(n, [&](const Path&) { ++count; });
  return count;
}

AvoidanceSearch::AvoidanceSearch(int n)
    : n_(n),
      forbidden_(static_cast<std::size_t>(n) * n, 0),
      stamp_(static_cast<std::size_t>(n) * n * 2, 0),
      value_(static_cast<std::size_t>(n) * n * 2, 0) {
  if (n < 3) throw std::invalid_argument("SHP search requires n >= 3");
}

void AvoidanceSearch::set_forbidden(std::span<const Edge> forbidden) {
  for (const Edge& e : active_) {
    forbidden_[e.a * n_ + e.b] = 0;
    forbidden_[e.b * n_ + e.a] = 0;
  }
  active_.assign(forbidden.begin(), forbidden.end());
  for (const Edge& e : active_) {
    forbidden_[e.a * n_ + e.b] = 1;
    forbidden_[e.b * n_ + e.a] = 1;
  }
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
}

int AvoidanceSearch::current(int lo, int len, int side) const {
  return side == 0 ? mod(lo - 1, n_) : mod(lo + len, n_);
}

// State: unvisited arc lo..lo+len-1, standing just before (side 0) or just
// after (side 1) it. Each state is solved at most once per epoch.
bool AvoidanceSearch::alive(int lo, int len, int side) {
  if (len == 0) return true;
  const std::size_t key = (static_cast<std::size_t>(lo) * n_ + len) * 2 + side;
  if (stamp_[key] == epoch_) return value_[key];
  const int c = current(lo, len, side);
  const int hi = mod(lo + len - 1, n_);
  bool ok = allowed(c, lo) && alive(mod(lo + 1, n_), len - 1, 0);
  if (!ok && len > 1) ok = allowed(c, hi) && alive(lo, len - 1, 1);
  stamp_[key] = epoch_;
  value_[key] = ok;
  return ok;
}

bool AvoidanceSearch::exists() {
  for (int start = 0; start < n_; ++start)
    if (alive(mod(start + 1, n_), n_ - 1, 0)) return true;
  return false;
}

std::optional<Path> AvoidanceSearch::find() {
  for (int start = 0; start < n_; ++start) {
    int lo = mod(start + 1, n_);
    int len = n_ - 1;
    int side = 0;
    if (!alive(lo, len, side)) continue;
    std::vector<int> vs{start};
    while (len > 0) {
      const int c = current(lo, len, side);
      if (allowed(c, lo) && alive(mod(lo + 1, n_), len - 1, 0)) {
        vs.push_back(lo);
        lo = mod(lo + 1, n_);
        side = 0;
      } else {
        vs.push_back(mod(lo + len - 1, n_));
        side = 1;
      }
      --len;
    }
    return Path(n_, std::move(vs)).normalized();
  }
  return std::nullopt;
}

std::optional<Path> find_avoiding_shp(const EdgeSet& forbidden) {
  AvoidanceSearch search(forbidden.order());
  search.set_forbidden(forbidden.edges());
  return search.find();
}

bool blocks(const EdgeSet& s) {
  AvoidanceSearch search(s.order());
  search.set_forbidden(s.edges());
  return !search.exists();
}

}  // namespace blockerlab
