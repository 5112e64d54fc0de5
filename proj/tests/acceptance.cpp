// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "blockerlab/blocker_families.hpp"
#include "blockerlab/exhaustive.hpp"
#include "blockerlab/ham_paths.hpp"
#include "blockerlab/witnesses.hpp"
#include "oracles.hpp"

namespace bl = blockerlab;
using bl::ClassAParams;
using bl::ClassBParams;
using bl::Edge;
using bl::EdgeSet;
using bl::Path;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Failed checks accumulate here; a criterion passes when it stays empty.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    if (count_ > failures_.size()) s += "; ... " + std::to_string(count_) + " failures";
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

std::string str(const EdgeSet& s) {
  std::ostringstream os;
  for (const Edge& e : s) os << e.a << '-' << e.b << ' ';
  return os.str();
}

std::set<Edge> edges_of(const Path& p) {
  const auto es = p.edges();
  return {es.begin(), es.end()};
}

// ---------------------------------------------------------------------------

void ac1(Check& c, std::string& note) {
  std::string sizes;
  for (int n : {3, 5, 7, 9}) {
    const auto r = bl::min_blocking_size(n);
    c.require(r.computed() && *r.size == (n + 1) / 2, "n=" + std::to_string(n));
    if (r.example) c.require(bl::blocks(*r.example), "example does not block at n=" + std::to_string(n));
    sizes += (sizes.empty() ? "" : ",") + (r.computed() ? std::to_string(*r.size) : std::string("?"));
  }
  note = "sizes " + sizes + " for n=3,5,7,9";
}

void ac2(Check& c, std::string& note) {
  for (int n : {3, 5, 7, 9})
    c.require(bl::enumerate_blockers_pruned(n) == bl::enumerate_blockers_bruteforce(n),
              "pruned != brute at n=" + std::to_string(n));
  std::string counts;
  auto run = [&](int n, bl::OracleMethod m) {
    const auto r = bl::check_characterization(n, m);
    c.require(r.theorem_holds(), "differences at n=" + std::to_string(n));
    c.require(r.consistent(), "inconsistent report at n=" + std::to_string(n));
    c.require(r.descriptor_collisions == 0, "descriptor collision at n=" + std::to_string(n));
    counts += (counts.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ":" +
              std::to_string(r.count_oracle) + "(" + bl::oracle_name(r.method) + ")";
  };
  for (int n : {5, 7, 9}) run(n, bl::OracleMethod::kBruteForce);
  const auto t0 = Clock::now();
  run(11, bl::OracleMethod::kPruned);
  c.require(seconds_since(t0) < 600.0, "n=11 exceeded 600 s");
  note = counts;
}

void ac3(Check& c, std::string& note) {
  struct Fixture {
    const char* name;
    bl::BlockerDescriptor d;
    EdgeSet expected;
  };
  const std::vector<Fixture> fixtures = {
      {"caterpillar-15", ClassAParams{8, 0, 1, 3, {1}, {4, 2, 1}},
       EdgeSet(15, {Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(14, 2), Edge(3, 12), Edge(4, 9), Edge(4, 7)})},
      {"bridged-15", ClassBParams{8, 0, 1, 2, 2, 2, 1, {1}, {2, 1}},
       EdgeSet(15, {Edge(1, 2), Edge(2, 3), Edge(4, 5), Edge(5, 6), Edge(2, 5), Edge(14, 2), Edge(5, 10), Edge(5, 8)})},
      {"crossing-19", ClassBParams{10, 0, 1, 3, 4, 1, 2, {2}, {2}},
       EdgeSet(19, {Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(5, 6), Edge(6, 7), Edge(7, 8), Edge(8, 9), Edge(2, 7),
                    Edge(17, 3), Edge(7, 12)})},
  };
  std::string times;
  for (const auto& f : fixtures) {
    c.require(!bl::validate(f.d), std::string(f.name) + " descriptor invalid");
    const EdgeSet s = bl::generate(f.d);
    c.require(s == f.expected, std::string(f.name) + " generated " + str(s));
    const auto t0 = Clock::now();
    const bool b = bl::blocks(s);
    const double dt = seconds_since(t0);
    c.require(b, std::string(f.name) + " does not block");
    c.require(dt < 5.0, std::string(f.name) + " blocks() too slow");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s %.3fs", f.name, dt);
    times += (times.empty() ? "" : ", ") + std::string(buf);
  }
  const EdgeSet crossing19 = bl::generate(fixtures[2].d);
  bool crossing = false;
  for (const Edge& e : crossing19)
    for (const Edge& f : crossing19) crossing |= bl::crosses(e, f);
  c.require(crossing, "crossing19 has no crossing pair");
  note = times + (crossing ? "; crossing19 not simple" : "");
}

void ac4(Check& c, std::string& note) {
  std::size_t total = 0;
  for (int n : {5, 7, 9}) {
    for (const EdgeSet& s : bl::enumerate_blockers_bruteforce(n)) {
      ++total;
      const auto a = bl::analyze_support(s);
      c.require(bl::boundary_consecutive_window(s).has_value() && a.has_value(), "no window: " + str(s));
      if (!a) continue;
      c.require(a->boundary_count >= 2, "fewer than two boundary edges: " + str(s));
      c.require(a->holes.size() <= 1, "two backbone holes: " + str(s));
    }
  }
  note = std::to_string(total) + " blockers at n=5,7,9";
}

void check_p_nu(Check& c, const bl::BackboneHoles& h) {
  const int n = h.order();
  std::map<int, Path> paths;
  for (int nu = -h.delta; nu <= h.alpha; ++nu) {
    const Path p = bl::build_p_nu(h, nu);
    c.require(bl::is_shp(p), "P_nu not an SHP");
    for (const Edge& e : p.edges()) {
      if (e == h.h1() || e == h.h2()) continue;
      const int off = bl::mod(bl::direction(e, n) - (2 * nu - 1), n);
      c.require(off <= 3, "P_nu direction outside {2nu-1..2nu+2}");
    }
    paths.emplace(nu, p);
  }
  const std::set<Edge> junctions{h.h1(), h.h2()};
  for (auto i = paths.begin(); i != paths.end(); ++i) {
    for (auto j = std::next(i); j != paths.end(); ++j) {
      const auto a = edges_of(i->second), b = edges_of(j->second);
      std::set<Edge> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(common, common.end()));
      c.require(common == junctions, "P_nu pair shares more than the junctions");
    }
  }
}

void ac5(Check& c, std::string& note) {
  const bl::BackboneHoles two_holes{8, 2, 1, 3, 5};
  c.require(two_holes.violation().empty(), "two_holes parameters invalid");
  check_p_nu(c, two_holes);
  std::mt19937 rng(20161015);
  int made = 0;
  std::set<int> orders;
  while (made < 100) {
    bl::BackboneHoles h;
    h.m = std::uniform_int_distribution<int>(4, 10)(rng);
    h.alpha = std::uniform_int_distribution<int>(0, h.m - 4)(rng);
    h.delta = std::uniform_int_distribution<int>(0, h.m - 4 - h.alpha)(rng);
    h.beta_p = std::uniform_int_distribution<int>(h.alpha + 1, h.m)(rng);
    h.gamma_p = std::uniform_int_distribution<int>(h.beta_p + 1, h.m + 1)(rng);
    if (!h.violation().empty()) continue;
    check_p_nu(c, h);
    orders.insert(h.order());
    ++made;
  }
  note = "two_holes + 100 random, n in [" + std::to_string(*orders.begin()) + "," + std::to_string(*orders.rbegin()) + "]";
}

// Sorted F_i indices expected for the edge at position t; empty off the beams.
std::vector<int> expected_incidence(const bl::TestPathContext& ctx, int t) {
  if (t <= ctx.alpha) return {2 * t - 1, 2 * t};
  if (t > ctx.m - ctx.delta) return {2 * (t - ctx.m) - 1, 2 * (t - ctx.m)};
  return {};
}

void check_f_suite(Check& c, const ClassBParams& p) {
  const bl::TestPathContext ctx{p.m, p.alpha, p.beta, p.delta};
  c.require(ctx.gamma() == p.gamma, "context gamma mismatch");
  const EdgeSet s = bl::generate(p);
  const auto a = bl::analyze_support(s);
  c.require(a && a->rotation == 0, "candidate not in frame");
  if (!a) return;
  for (int i = ctx.min_index(); i <= ctx.max_index(); ++i) {
    const Path f = bl::build_test_path_f(ctx, i);
    c.require(bl::is_shp(f), "F_i not an SHP");
    c.require(f.uses(bl::make_edge(ctx.hole(), ctx.hole() + 1, ctx.order())), "F_i misses the junction");
  }
  const auto table = bl::fi_incidence(ctx, s);
  for (int t = 1; t <= p.m; ++t) {
    const Edge e = a->position[t - 1];
    const auto it = table.find(e);
    c.require(it != table.end(), "edge missing from incidence table");
    if (it != table.end()) c.require(it->second == expected_incidence(ctx, t), "incidence pattern at t=" + std::to_string(t));
  }
}

void ac6(Check& c, std::string& note) {
  // The unique k=0 Class B blocker with m=8, alpha=2, beta=2, delta=1.
  const ClassBParams broken8{8, 0, 2, 2, 2, 1, 1, {2, 1}, {1}};
  c.require(!bl::validate(broken8), "broken8 descriptor invalid");
  const bl::TestPathContext ctx{8, 2, 2, 1};
  c.require(ctx.max_index() - ctx.min_index() + 1 == 6, "broken8 should have six test paths");
  check_f_suite(c, broken8);

  std::mt19937 rng(8);
  int made = 0;
  while (made < 100) {
    ClassBParams p;
    p.m = std::uniform_int_distribution<int>(6, 12)(rng);
    p.alpha = std::uniform_int_distribution<int>(0, p.m - 5)(rng);
    p.delta = std::uniform_int_distribution<int>(0, p.m - 5 - p.alpha)(rng);
    const int rest = p.m - p.alpha - p.delta - 1;
    p.beta = std::uniform_int_distribution<int>(2, rest - 2)(rng);
    p.gamma = rest - p.beta;
    p.eta = std::uniform_int_distribution<int>(1, std::max(1, std::min(p.beta, p.gamma) - 1))(rng);
    auto pick = [&](int count, int hi) {
      std::vector<int> pool;
      for (int v = 1; v <= hi; ++v) pool.push_back(v);
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(std::min<std::size_t>(pool.size(), count));
      std::sort(pool.rbegin(), pool.rend());
      return pool;
    };
    p.eps = pick(p.alpha, p.alpha + p.beta - 2);
    p.xi = pick(p.delta, p.gamma + p.delta - 2);
    if (bl::validate(p)) continue;
    check_f_suite(c, p);
    ++made;
  }
  note = "broken8 (6 paths) + 100 random Class B";
}

void ac7(Check& c, std::string& note) {
  std::map<std::string, int> tally;
  auto check = [&](const EdgeSet& s) {
    const auto w = bl::find_structured_witness(s);
    c.require(w.has_value() != bl::blocks(s), "dispatcher disagrees on " + str(s));
    if (w) {
      c.require(bl::is_shp(w->path) && !w->path.meets(s), "bad witness for " + str(s));
      ++tally[bl::method_name(w->method)];
    } else {
      ++tally["none"];
    }
  };
  const auto edges7 = bl::all_edges(7);
  int exhaustive = 0;
  for (std::size_t a = 0; a < edges7.size(); ++a)
    for (std::size_t b = a + 1; b < edges7.size(); ++b)
      for (std::size_t d = b + 1; d < edges7.size(); ++d)
        for (std::size_t e = d + 1; e < edges7.size(); ++e) {
          check(EdgeSet(7, {edges7[a], edges7[b], edges7[d], edges7[e]}));
          ++exhaustive;
        }
  c.require(exhaustive == 5985, "n=7 candidate count");
  std::mt19937_64 rng(9);
  auto edges9 = bl::all_edges(9);
  for (int trial = 0; trial < 10000; ++trial) {
    std::shuffle(edges9.begin(), edges9.end(), rng);
    check(EdgeSet(9, std::vector<Edge>(edges9.begin(), edges9.begin() + 5)));
  }
  note = std::to_string(exhaustive) + " at n=7 + 10000 random at n=9;";
  for (const auto& [k, v] : tally) note += " " + k + "=" + std::to_string(v);
}

void ac8(Check& c, std::string& note) {
  int count = 0;
  for (int n = 3; n <= 15; n += 2) {
    for (const auto& d : bl::enumerate_descriptors(n)) {
      const auto* p = std::get_if<ClassAParams>(&d);
      if (!p) continue;
      const auto alt = bl::to_alt_description(*p);
      c.require(bl::alt_violation(alt).empty(), "alt invariants");
      c.require(bl::from_alt_description(alt, p->k) == *p, "alt round trip");
      ++count;
    }
  }
  const ClassAParams ancestor{8, 0, 1, 2, {1}, {2, 1}};
  const bl::BrokenAltDescription broken{bl::to_alt_description(ancestor), 2};
  const ClassBParams right{8, 0, 1, 2, 2, 2, 1, {1}, {2, 1}};
  c.require(bl::class_b_from_broken(broken, 1) == right, "bridged-15 from ancestor");
  c.require(bl::generate_broken(broken, 1) == bl::generate(right), "bridged-15 edge set from ancestor");
  note = std::to_string(count) + " Class A descriptors, n<=15; bridged-15 rebuilt";
}

void ac9(Check& c, std::string& note) {
  for (int n = 3; n <= 8; ++n)
    c.require(bl::count_shps(n) == oracle::shps_by_permutation(n).size(), "oracle count at n=" + std::to_string(n));
  const std::uint64_t regression[] = {3, 8, 20, 48, 112, 256, 576, 1280, 2816, 6144, 13312, 28672};
  for (int n = 3; n <= 14; ++n) c.require(bl::count_shps(n) == regression[n - 3], "regression at n=" + std::to_string(n));
  note = "oracle n=3..8, regression n<=14";
}

void ac10(Check& c, std::string& note) {
  struct Quoted {
    const char* name;
    Path path;
    EdgeSet target;
    std::function<Path()> rebuild;
  };
  const EdgeSet beam_target(15, {Edge(2, 3), Edge(3, 4), Edge(5, 6), Edge(6, 7), Edge(1, 8), Edge(3, 13), Edge(0, 3),
                                 Edge(6, 9)});
  const EdgeSet shared_end_13(15, {Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(5, 6), Edge(6, 7), Edge(3, 13), Edge(2, 13)});
  const EdgeSet shared_end_11(15, {Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(5, 6), Edge(14, 2), Edge(4, 11), Edge(2, 11)});
  const std::vector<Quoted> quoted = {
      {"bad-beam", Path(15, {4, 5, 3, 6, 2, 7, 1, 0, 14, 13, 12, 11, 10, 9, 8}), beam_target,
       [&] { return bl::refute_bad_beam(beam_target, Edge(1, 8)); }},
      {"shared_end_13", Path(15, {7, 8, 6, 9, 5, 10, 4, 11, 3, 12, 13, 14, 2, 0, 1}), shared_end_13,
       [&] { return bl::refute_beam_pair(shared_end_13, Edge(2, 13), Edge(3, 13)); }},
      {"shared_end_11", Path(15, {7, 6, 8, 5, 9, 4, 10, 3, 11, 12, 2, 13, 1, 14, 0}), shared_end_11,
       [&] { return bl::refute_beam_pair(shared_end_11, Edge(2, 11), Edge(4, 11)); }},
  };
  for (const auto& q : quoted) {
    c.require(bl::is_shp(q.path), std::string(q.name) + " not an SHP");
    c.require(!q.path.meets(q.target), std::string(q.name) + " meets its target");
    c.require(q.rebuild() == q.path, std::string(q.name) + " not reproduced by its refuter");
  }
  note = "3 quoted paths reproduced";
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limit;  // seconds
    void (*fn)(Check&, std::string&);
  };
  const Criterion criteria[] = {
      {"AC1", "minimum blocker size", 120, ac1},
      {"AC2", "characterization bijection", 600, ac2},
      {"AC3", "named fixtures", 15, ac3},
      {"AC4", "structural necessity", 120, ac4},
      {"AC5", "P_nu suite", 60, ac5},
      {"AC6", "F_i suite", 60, ac6},
      {"AC7", "dispatcher equivalence", 300, ac7},
      {"AC8", "alt round trips", 120, ac8},
      {"AC9", "SHP enumerator", 120, ac9},
      {"AC10", "quoted witness paths", 10, ac10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    std::string note;
    const auto t0 = Clock::now();
    try {
      cr.fn(check, note);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    check.require(dt < cr.limit, "time limit " + std::to_string(static_cast<int>(cr.limit)) + "s exceeded");
    const bool ok = check.ok();
    failed += !ok;
    std::printf("%-5s %s  %-28s %8.2fs  %s\n", cr.id, ok ? "PASS" : "FAIL", cr.title, dt,
                ok ? note.c_str() : check.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
