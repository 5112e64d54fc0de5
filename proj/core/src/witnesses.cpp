#include "blockerlab/witnesses.hpp"

#include <algorithm>

namespace blockerlab {

namespace {

std::string str(int v) { return std::to_string(v); }

Path checked(Path p, const EdgeSet& s, const char* what) {
  if (!is_shp(p)) throw RefutationFailure(std::string(what) + ": construction is not an SHP");
  if (p.meets(s)) throw RefutationFailure(std::string(what) + ": construction meets the candidate");
  return p;
}

std::optional<Path> starting_at(const Path& p, int v) {
  if (p.front() == v) return p;
  if (p.back() == v) return p.reversed();
  return std::nullopt;
}

std::optional<Path> ending_at(const Path& p, int v) {
  if (auto q = starting_at(p, v)) return q->reversed();
  return std::nullopt;
}

// Alternately applies the partner maps x -> d1 - x and x -> d2 - x.
void zigzag_walk(std::vector<int>& vs, int n, int d1, int d2, int steps) {
  int cur = vs.back();
  for (int s = 0; s < steps; ++s) {
    cur = mod((s % 2 == 0 ? d1 : d2) - cur, n);
    vs.push_back(cur);
  }
}

// Clockwise boundary walk from -> to, both included.
std::vector<int> clockwise(int from, int to, int n) {
  std::vector<int> out;
  for (int v = from;; v = mod(v + 1, n)) {
    out.push_back(v);
    if (v == to) break;
  }
  return out;
}

// Concatenates vertex runs, merging a shared vertex at each seam.
Path concat(int n, std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& part : parts) {
    auto it = part.begin();
    if (!out.empty() && it != part.end() && *it == out.back()) ++it;
    out.insert(out.end(), it, part.end());
  }
  return Path(n, std::move(out));
}

std::vector<int> verts(const Path& p) { return {p.vertices().begin(), p.vertices().end()}; }

SupportAnalysis require_frame(const EdgeSet& s, const char* what) {
  auto a = analyze_support(s);
  if (!a) throw std::invalid_argument(std::string(what) + ": candidate has no direction window");
  if (a->boundary_count < 2)
    throw std::invalid_argument(std::string(what) + ": candidate has fewer than two boundary edges");
  return std::move(*a);
}

bool direction_present(const SupportAnalysis& a, int d) {
  for (const Edge& e : a.derotated)
    if (direction(e, a.n) == mod(d, a.n)) return true;
  return false;
}

// Root on the backbone interior and far end strictly off the backbone.
struct Beam {
  Edge edge;
  int root;
  int far;
};

std::optional<Beam> as_beam(const SupportAnalysis& a, Edge e) {
  if (a.backbone_internal(e.a) && a.complement_internal(e.b)) return Beam{e, e.a, e.b};
  if (a.backbone_internal(e.b) && a.complement_internal(e.a)) return Beam{e, e.b, e.a};
  return std::nullopt;
}

// Beams rooted at i < k are acceptable only if they turn away from each other:
// clockwise from m-delta the far ends appear as l then j, more than k-i apart.
bool beams_conflict(const SupportAnalysis& a, const Beam& first, const Beam& second) {
  const int base = a.m - a.delta;
  const int pos_j = mod(first.far - base, a.n);
  const int pos_l = mod(second.far - base, a.n);
  return pos_j - pos_l < second.root - first.root;
}

Path far_bridge_path(int n, int h, int nu) {
  auto p1 = zigzag_cover(n, h - nu, 2 * nu + 1, 2 * h, 2 * h + 1);
  auto p2 = zigzag_cover(n, h + nu + 1, n - 2 * nu - 1, 2 * h, 2 * h - 1);
  if (!p1 || !p2) throw RefutationFailure("far bridge: zigzag covers do not exist");
  auto upper = ending_at(*p1, mod(h - nu, n));
  auto lower = starting_at(*p2, mod(h - nu - 1, n));
  if (!upper || upper->front() != mod(h, n) || !lower)
    throw RefutationFailure("far bridge: zigzag endpoints differ from the construction");
  return concat(n, {verts(*upper), verts(*lower)});
}

}  // namespace

std::optional<Path> zigzag_cover(int n, int start, int len, int d1, int d2) {
  if (len < 1 || len > n) throw std::invalid_argument("zigzag_cover: arc length out of range");
  start = mod(start, n);
  if (len == 1) return Path(n, {start});
  auto in_arc = [&](int v) { return mod(v - start, n) < len; };

  std::vector<std::vector<int>> adj(n);
  int edges = 0;
  for (int t = 0; t < len; ++t) {
    const int x = mod(start + t, n);
    for (int d : {d1, d2}) {
      const int y = mod(d - x, n);
      if (y == x || !in_arc(y) || mod(y - start, n) < t) continue;
      if (std::find(adj[x].begin(), adj[x].end(), y) != adj[x].end()) continue;
      adj[x].push_back(y);
      adj[y].push_back(x);
      ++edges;
    }
  }
  if (edges != len - 1) return std::nullopt;

  int first = -1;
  for (int t = 0; t < len && first < 0; ++t) {
    const int x = mod(start + t, n);
    if (adj[x].size() > 2) return std::nullopt;
    if (adj[x].size() == 1) first = x;
  }
  if (first < 0) return std::nullopt;
  std::vector<int> vs{first};
  int prev = -1;
  int cur = first;
  while (true) {
    int next = -1;
    for (int y : adj[cur])
      if (y != prev) next = y;
    if (next < 0) break;
    prev = cur;
    cur = next;
    vs.push_back(cur);
    if (static_cast<int>(vs.size()) > len) return std::nullopt;
  }
  if (static_cast<int>(vs.size()) != len) return std::nullopt;
  return Path(n, std::move(vs));
}

Path zigzag_shp(int n, int a) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("zigzag_shp requires odd n >= 3");
  std::vector<int> vs{missed_vertex(n, a + 1)};
  zigzag_walk(vs, n, a, a + 1, n - 1);
  return Path(n, std::move(vs));
}

Path boundary_complement_shp(int n, Edge e) {
  if (e.b >= n || !is_boundary(e, n))
    throw std::invalid_argument("boundary_complement_shp requires a boundary edge");
  const int x = e.b == e.a + 1 ? e.a : e.b;  // e = [x, x+1]
  std::vector<int> vs;
  for (int t = 1; t <= n; ++t) vs.push_back(mod(x + t, n));
  return Path(n, std::move(vs));
}

std::string BackboneHoles::violation() const {
  if (alpha < 0 || delta < 0) return "alpha, delta >= 0";
  if (alpha + delta > m - 4) return "alpha+delta <= m-4";
  if (!(alpha < beta_p && beta_p < gamma_p && gamma_p < m - delta - 1))
    return "alpha < beta' < gamma' < m-delta-1";
  return {};
}

Path build_p_nu(const BackboneHoles& h, int nu) {
  if (auto why = h.violation(); !why.empty()) throw std::invalid_argument("build_p_nu: " + why);
  if (nu < -h.delta || nu > h.alpha)
    throw std::invalid_argument("build_p_nu: nu must satisfy -delta <= nu <= alpha");
  const int n = h.order();
  std::vector<int> vs{mod(nu, n)};
  zigzag_walk(vs, n, 2 * nu - 1, 2 * nu, 2 * (h.beta_p - nu));
  vs.push_back(mod(h.beta_p + 1, n));
  zigzag_walk(vs, n, 2 * nu, 2 * nu + 1, 2 * (h.gamma_p - h.beta_p - 1));
  vs.push_back(mod(h.gamma_p + 1, n));
  zigzag_walk(vs, n, 2 * nu + 1, 2 * nu + 2, 2 * (nu + h.m - h.gamma_p - 1));
  Path p(n, std::move(vs));
  if (!is_shp(p) || p.back() != mod(nu + h.m, n))
    throw RefutationFailure("build_p_nu: sections do not assemble into an SHP ending at nu+m");
  return p;
}

Path refute_two_holes(const EdgeSet& s) {
  const SupportAnalysis a = require_frame(s, "refute_two_holes");
  if (a.holes.size() < 2) throw std::invalid_argument("refute_two_holes: backbone has fewer than two holes");
  const BackboneHoles h{a.m, a.alpha, a.delta, a.holes[0] - 1, a.holes[1] - 1};
  for (int nu = -a.delta; nu <= a.alpha; ++nu) {
    Path p = build_p_nu(h, nu);
    if (!p.meets(a.derotated)) return checked(p.rotated(a.rotation), s, "refute_two_holes");
  }
  throw RefutationFailure("refute_two_holes: every P_nu meets the candidate");
}

Path refute_bad_beam(const EdgeSet& s, Edge e) {
  const SupportAnalysis a = require_frame(s, "refute_bad_beam");
  if (!s.contains(e)) throw std::invalid_argument("refute_bad_beam: edge is not in the candidate");
  const int n = a.n;
  const Edge f = rotate(e, -a.rotation, n);
  if (a.backbone_internal(f.a) || a.backbone_internal(f.b))
    throw std::invalid_argument("refute_bad_beam: edge touches an internal backbone vertex");

  // C is the side of f holding the backbone, clockwise from p to q.
  const bool forward = on_arc(a.alpha + 1, f.a, f.b, n);
  const int p = forward ? f.a : f.b;
  const int q = forward ? f.b : f.a;
  const int c_len = mod(q - p, n) + 1;
  const int d = direction(f, n);

  for (int x : {d - 1, d + 1}) {
    if (direction_present(a, x)) continue;
    // Cover C minus q ending at p, then walk the far side from p back to q.
    if (auto z = zigzag_cover(n, p, c_len - 1, d, x)) {
      if (auto zp = ending_at(*z, p)) {
        std::vector<int> far;
        for (int v = p;; v = mod(v - 1, n)) {
          far.push_back(v);
          if (v == q) break;
        }
        Path cand = concat(n, {verts(*zp), far});
        if (is_shp(cand) && !cand.meets(a.derotated))
          return checked(cand.rotated(a.rotation), s, "refute_bad_beam");
      }
    }
    // Or cover C minus p ending at q, then walk clockwise from q to p.
    if (auto z = zigzag_cover(n, p + 1, c_len - 1, d, x)) {
      if (auto zq = ending_at(*z, q)) {
        Path cand = concat(n, {verts(*zq), clockwise(q, p, n)});
        if (is_shp(cand) && !cand.meets(a.derotated))
          return checked(cand.rotated(a.rotation), s, "refute_bad_beam");
      }
    }
  }
  throw RefutationFailure("refute_bad_beam: no zigzag over the backbone side avoids the candidate");
}

Path refute_beam_pair(const EdgeSet& s, Edge e1, Edge e2) {
  const SupportAnalysis a = require_frame(s, "refute_beam_pair");
  if (!s.contains(e1) || !s.contains(e2))
    throw std::invalid_argument("refute_beam_pair: edges are not in the candidate");
  const int n = a.n;
  auto b1 = as_beam(a, rotate(e1, -a.rotation, n));
  auto b2 = as_beam(a, rotate(e2, -a.rotation, n));
  if (!b1 || !b2) throw std::invalid_argument("refute_beam_pair: both edges must be beams");
  if (b1->root > b2->root) std::swap(b1, b2);
  if (b1->root == b2->root) throw std::invalid_argument("refute_beam_pair: beams share their root");
  if (!beams_conflict(a, *b1, *b2))
    throw std::invalid_argument("refute_beam_pair: beams turn away from each other");

  const int i = b1->root;
  const int j = b1->far;
  const int b = direction(b1->edge, n);

  // P1: zigzag over the far side of [i, j] (clockwise i+1 .. j-1).
  std::optional<Path> p1;
  for (int bp : {b + 1, b - 1}) {
    if (direction_present(a, bp)) continue;
    auto q = zigzag_cover(n, i + 1, mod(j - i, n) - 1, b, bp);
    if (!q) continue;
    if (auto r = ending_at(*q, mod(j - 1, n))) {
      p1 = std::move(r);
    } else if (auto r2 = ending_at(*q, mod(i + 1, n))) {
      auto vs = verts(*r2);
      vs.push_back(j);
      p1 = Path(n, std::move(vs));
    }
    if (p1) break;
  }
  if (!p1) throw RefutationFailure("refute_beam_pair: no zigzag P1 beyond the first beam");

  // P3: zigzag over <s .. i>, where [i, s] is parallel to the second beam.
  const int c = direction(b2->edge, n);
  const int sv = mod(c - i, n);
  const int arc_len = mod(i - sv, n) + 1;
  std::vector<int> p3;
  if (c != 0) {
    auto z = zigzag_cover(n, sv, arc_len, c, c + 1);
    auto zs = z ? starting_at(*z, sv) : std::nullopt;
    if (!zs) throw RefutationFailure("refute_beam_pair: no zigzag P3 from s");
    p3 = verts(*zs);
  } else {
    auto z = zigzag_cover(n, sv, arc_len, 0, -1);
    auto zi = z ? starting_at(*z, i) : std::nullopt;
    if (!zi) throw RefutationFailure("refute_beam_pair: no zigzag P3 ending at i");
    p3.push_back(mod(sv - 1, n));
    const auto tail = verts(*zi);
    p3.insert(p3.end(), tail.begin(), tail.end());
  }

  // P2: boundary path joining them.
  const auto p2 = clockwise(p1->back(), p3.front(), n);
  Path cand = concat(n, {verts(*p1), p2, p3});
  return checked(cand.rotated(a.rotation), s, "refute_beam_pair");
}

Path refute_far_bridge(const EdgeSet& s, int nu) {
  const SupportAnalysis a = require_frame(s, "refute_far_bridge");
  if (a.holes.size() != 1) throw std::invalid_argument("refute_far_bridge: backbone must miss exactly one edge");
  const int n = a.n;
  const int h = a.holes.front() - 1;
  const int beta = h - a.alpha;
  const int gamma = a.m - a.delta - h - 1;
  if (nu < 1 || !a.derotated.contains(make_edge(h - nu, h + 1 + nu, n)))
    throw std::invalid_argument("refute_far_bridge: candidate has no bridge with offset " + str(nu));
  if (nu < beta && nu < gamma) throw std::invalid_argument("refute_far_bridge: nu < min(beta, gamma)");

  if (nu >= beta) {
    Path p = far_bridge_path(n, h, nu);
    return checked(p.rotated(a.rotation), s, "refute_far_bridge");
  }
  // Mirror through the perpendicular bisector of the hole, which swaps the
  // roles of beta and gamma and fixes both the hole and the bridge.
  Path p = far_bridge_path(n, h, nu).reflected(2 * h + 1);
  return checked(p.rotated(a.rotation), s, "refute_far_bridge");
}

std::string TestPathContext::violation() const {
  if (m < 2) return "m >= 2";
  if (alpha < 0 || delta < 0) return "alpha, delta >= 0";
  if (beta < 1 || gamma() < 1) return "beta, gamma >= 1";
  return {};
}

Path build_test_path_f(const TestPathContext& ctx, int i) {
  if (auto why = ctx.violation(); !why.empty()) throw std::invalid_argument("build_test_path_f: " + why);
  if (i < ctx.min_index() || i > ctx.max_index())
    throw std::invalid_argument("build_test_path_f: index must satisfy 1-2delta <= i <= 2alpha");
  const int n = ctx.order();
  const int h = ctx.hole();

  // P_i^+ : clockwise arc from the far end of d_i^+ = [h, i-h] to h.
  const int plus_len = mod(2 * h - i, n) + 1;
  auto fp = zigzag_cover(n, i - h, plus_len, i, i - 1);
  auto upper = fp ? ending_at(*fp, h) : std::nullopt;
  // P_i^- : clockwise arc from h+1 to the far end of d_i^- = [h+1, i-h-1].
  const int minus_len = n - plus_len;
  auto fm = zigzag_cover(n, h + 1, minus_len, i, i + 1);
  auto lower = fm ? starting_at(*fm, mod(h + 1, n)) : std::nullopt;
  if (!upper || !lower) throw RefutationFailure("build_test_path_f: half-polygon zigzags do not exist");

  Path f = concat(n, {verts(*upper), verts(*lower)});
  if (!is_shp(f)) throw RefutationFailure("build_test_path_f: F_i is not an SHP");
  return f;
}

std::map<Edge, std::vector<int>> fi_incidence(const TestPathContext& ctx, const EdgeSet& s) {
  std::map<Edge, std::vector<int>> table;
  for (const Edge& e : s) table[e];
  for (int i = ctx.min_index(); i <= ctx.max_index(); ++i) {
    const Path f = build_test_path_f(ctx, i);
    for (const Edge& e : s)
      if (f.uses(e)) table[e].push_back(i);
  }
  return table;
}

std::string method_name(WitnessMethod m) {
  switch (m) {
    case WitnessMethod::kZigzag: return "zigzag";
    case WitnessMethod::kBoundaryComplement: return "boundary_complement";
    case WitnessMethod::kTwoHoles: return "two_holes";
    case WitnessMethod::kBadBeam: return "bad_beam";
    case WitnessMethod::kBeamPair: return "beam_pair";
    case WitnessMethod::kFarBridge: return "far_bridge";
    case WitnessMethod::kTestPath: return "test_path";
    case WitnessMethod::kSearch: return "search";
  }
  return "unknown";
}

std::optional<StructuredWitness> find_structured_witness(const EdgeSet& s) {
  const int n = s.order();
  if (n % 2 == 0) throw std::invalid_argument("find_structured_witness requires odd n");
  if (static_cast<int>(s.size()) != (n + 1) / 2)
    throw std::invalid_argument("find_structured_witness requires exactly m = (n+1)/2 edges");

  const auto analysis = analyze_support(s);
  if (!analysis) {
    // Some pair of adjacent directions is missing entirely.
    std::vector<char> present(n, 0);
    for (int d : s.directions()) present[d] = 1;
    for (int d = 0; d < n; ++d) {
      if (!present[d] && !present[mod(d + 1, n)])
        return StructuredWitness{checked(zigzag_shp(n, d), s, "zigzag"), WitnessMethod::kZigzag};
    }
  } else {
    const SupportAnalysis& a = *analysis;
    if (a.boundary_count < 2) {
      Edge e = make_edge(0, 1, n);
      for (int t = 1; t <= a.m; ++t)
        if (a.offset[t - 1] == 0) e = rotate(a.position[t - 1], a.rotation, n);
      return StructuredWitness{checked(boundary_complement_shp(n, e), s, "boundary_complement"),
                               WitnessMethod::kBoundaryComplement};
    }
    if (a.holes.size() >= 2) return StructuredWitness{refute_two_holes(s), WitnessMethod::kTwoHoles};

    std::vector<Beam> beams;
    for (int t = 1; t <= a.m; ++t) {
      if (!a.is_beam_position(t)) continue;
      const Edge f = a.position[t - 1];
      if (!a.backbone_internal(f.a) && !a.backbone_internal(f.b))
        return StructuredWitness{refute_bad_beam(s, rotate(f, a.rotation, n)), WitnessMethod::kBadBeam};
      if (auto b = as_beam(a, f)) beams.push_back(*b);
    }
    std::sort(beams.begin(), beams.end(), [](const Beam& x, const Beam& y) { return x.root < y.root; });
    for (std::size_t p = 0; p < beams.size(); ++p) {
      for (std::size_t q = p + 1; q < beams.size(); ++q) {
        if (beams[p].root == beams[q].root || !beams_conflict(a, beams[p], beams[q])) continue;
        return StructuredWitness{refute_beam_pair(s, rotate(beams[p].edge, a.rotation, n),
                                                  rotate(beams[q].edge, a.rotation, n)),
                                 WitnessMethod::kBeamPair};
      }
    }

    if (a.holes.size() == 1) {
      const int t = a.holes.front();
      const int nu = a.offset[t - 1];
      const int beta = t - 1 - a.alpha;
      const int gamma = a.m - a.delta - t;
      if (nu >= std::min(beta, gamma))
        return StructuredWitness{refute_far_bridge(s, nu), WitnessMethod::kFarBridge};

      const TestPathContext ctx{a.m, a.alpha, beta, a.delta};
      for (int i = ctx.min_index(); i <= ctx.max_index(); ++i) {
        const Path f = build_test_path_f(ctx, i);
        if (!f.meets(a.derotated))
          return StructuredWitness{checked(f.rotated(a.rotation), s, "test_path"), WitnessMethod::kTestPath};
      }
    }
  }

  if (auto w = find_avoiding_shp(s)) return StructuredWitness{std::move(*w), WitnessMethod::kSearch};
  return std::nullopt;
}

}  // namespace blockerlab
