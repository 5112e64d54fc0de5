#pragma once

// Constructive SHPs that refute non-blockers, one builder per structural
// defect, plus a dispatcher that picks the first applicable refuter and falls
// back to exhaustive search.
//
// Refuters that take a candidate set work in its directional frame (see
// analyze_support) and return paths in the caller's original labels. Every
// returned path is re-checked: a structured construction that is not an SHP,
// or that meets the candidate, throws RefutationFailure instead of being
// silently replaced by search output.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blockerlab/blocker_families.hpp"
#include "blockerlab/geometry.hpp"
#include "blockerlab/ham_paths.hpp"

namespace blockerlab {

/// A structured construction produced something that is not a valid avoiding SHP.
class RefutationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Path through every vertex of the clockwise arc start..start+len-1 whose
/// edges are exactly the chords of directions d1 and d2 inside the arc.
/// nullopt when those chords do not form a single Hamiltonian path of the arc.
std::optional<Path> zigzag_cover(int n, int start, int len, int d1, int d2);

/// The SHP D_a u D_{a+1} of CK(n), n odd, starting at the vertex missed by D_{a+1}.
Path zigzag_shp(int n, int a);

/// Boundary circuit minus the boundary edge e, from one endpoint of e round to the other.
Path boundary_complement_shp(int n, Edge e);

/// Two missing backbone edges h1 = [beta', beta'+1], h2 = [gamma', gamma'+1].
struct BackboneHoles {
  int m = 4;
  int alpha = 0;
  int delta = 0;
  int beta_p = 1;
  int gamma_p = 2;

  int order() const { return 2 * m - 1; }
  Edge h1() const { return make_edge(beta_p, beta_p + 1, order()); }
  Edge h2() const { return make_edge(gamma_p, gamma_p + 1, order()); }
  /// Empty when alpha < beta' < gamma' < m-delta-1 and alpha+delta <= m-4.
  std::string violation() const;
};

/// Initial zigzag <nu, nu-1, nu+1, ..., beta'>, junction h1, middle zigzag
/// <beta'+1, 2nu-beta'-1, ..., gamma'>, junction h2, terminal zigzag
/// <gamma'+1, 2nu-gamma', ..., nu+m+1, nu+m>. Requires -delta <= nu <= alpha.
Path build_p_nu(const BackboneHoles& h, int nu);

/// Some P_nu avoiding s, for a candidate whose backbone misses two or more
/// edges (the two lowest holes are used).
Path refute_two_holes(const EdgeSet& s);

/// For a candidate edge e whose endpoints both lie on the complementary arc of
/// the backbone: a zigzag over the backbone side of e joined to the boundary
/// path of the far side.
Path refute_bad_beam(const EdgeSet& s, Edge e);

/// For beams e1 = [i, j], e2 = [k, l] rooted at backbone vertices i < k that
/// cross, share j = l, or approach each other: zigzag P1 on the far side of
/// e1, boundary path P2, zigzag P3 anchored at the parallel of e2 through i.
Path refute_beam_pair(const EdgeSet& s, Edge e1, Edge e2);

/// For a one-hole candidate whose bridge [h-nu, h+1+nu] (h = alpha+beta)
/// has nu >= beta or nu >= gamma.
Path refute_far_bridge(const EdgeSet& s, int nu);

/// Parameters of a broken backbone in the directional frame:
/// alpha + beta + gamma + delta = m - 1, hole [alpha+beta, alpha+beta+1].
struct TestPathContext {
  int m = 6;
  int alpha = 0;
  int beta = 2;
  int delta = 0;

  int order() const { return 2 * m - 1; }
  int gamma() const { return m - 1 - alpha - beta - delta; }
  int hole() const { return alpha + beta; }
  int min_index() const { return 1 - 2 * delta; }
  int max_index() const { return 2 * alpha; }
  std::string violation() const;
};

/// Test path F_i = F_i^+ + [h, h+1] + F_i^- for 1-2delta <= i <= 2alpha.
Path build_test_path_f(const TestPathContext& ctx, int i);

/// For every edge of s, the indices i whose test path F_i uses it.
std::map<Edge, std::vector<int>> fi_incidence(const TestPathContext& ctx, const EdgeSet& s);

enum class WitnessMethod {
  kZigzag,
  kBoundaryComplement,
  kTwoHoles,
  kBadBeam,
  kBeamPair,
  kFarBridge,
  kTestPath,
  kSearch,
};

std::string method_name(WitnessMethod m);

struct StructuredWitness {
  Path path;
  WitnessMethod method;
};

/// Highest-priority applicable refuter, else exhaustive search. nullopt only
/// when search proves that s blocks every SHP. Requires odd n and |s| = m.
std::optional<StructuredWitness> find_structured_witness(const EdgeSet& s);

}  // namespace blockerlab
