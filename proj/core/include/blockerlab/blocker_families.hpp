#pragma once

// The two parametric families of minimum blocking sets for simple Hamiltonian
// paths in CK(2m-1), with validation, generation, enumeration and a
// structural classifier.
//
// Frame: before rotation by k, every blocker has one edge parallel to each
// boundary edge [t-1, t] of the path <0, 1, ..., m>. The edge in that class is
// written e_t = [t-1-o, t+o] with offset 0 <= o <= m-2; offset 0 is the
// boundary edge itself. Class A keeps an unbroken boundary run
// <alpha, ..., m-delta>; Class B breaks it once and replaces the missing edge
// by a parallel "bridge".

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blockerlab/geometry.hpp"
#include "blockerlab/ham_paths.hpp"

namespace blockerlab {

struct ClassAParams {
  int m = 2;
  int k = 0;
  int alpha = 0;
  int delta = 0;
  std::vector<int> eps;  // eps_1 > ... > eps_alpha > 0
  std::vector<int> xi;   // xi_1 > ... > xi_delta > 0

  friend bool operator==(const ClassAParams&, const ClassAParams&) = default;
};

struct ClassBParams {
  int m = 6;
  int k = 0;
  int alpha = 0;
  int beta = 2;
  int gamma = 2;
  int delta = 0;
  int eta = 1;
  std::vector<int> eps;
  std::vector<int> xi;

  friend bool operator==(const ClassBParams&, const ClassBParams&) = default;
};

using BlockerDescriptor = std::variant<ClassAParams, ClassBParams>;

inline int order_of(const BlockerDescriptor& d) {
  return std::visit([](const auto& p) { return 2 * p.m - 1; }, d);
}

/// Each named constraint of the two families has its own code.
enum class Constraint {
  kOrder,              // m >= 2
  kRotation,           // 0 <= k < 2m-1
  kNonNegative,        // alpha, delta >= 0
  kListLength,         // |eps| = alpha, |xi| = delta
  kBackboneLength,     // A: alpha+delta <= m-2
  kEpsDecreasing,      // eps strictly decreasing and positive
  kEpsLowerBound,      // A: eps_i >= alpha-i+1
  kEpsUpperBound,      // A: eps_i <= m-delta-i-1;  B: eps_1 < alpha+beta-1
  kXiDecreasing,       // xi strictly decreasing and positive
  kXiLowerBound,       // A: xi_j >= delta+1-j
  kXiUpperBound,       // A: xi_j <= m-j-alpha-1;  B: xi_1 < gamma+delta-1
  kBeamSeparation,     // A: eps_1 + xi_1 <= m-2
  kBrokenSpan,         // B: alpha+delta <= m-5
  kRunLengths,         // B: beta, gamma >= 2
  kRunSum,             // B: beta+gamma = m-alpha-delta-1
  kBridgeOffset,       // B: 1 <= eta <= min(beta-1, gamma-1)
};

struct Violation {
  Constraint constraint;
  std::string message;
};

std::string constraint_name(Constraint c);

/// First violated constraint, or nullopt when the descriptor is valid.
std::optional<Violation> validate(const BlockerDescriptor& d);

/// The m edges described by d. Throws std::invalid_argument if d is invalid.
EdgeSet generate(const BlockerDescriptor& d);

/// Every valid descriptor for odd n: Class A before Class B, then by k,
/// alpha, delta (beta, eta for B) and lexicographic eps / xi lists.
std::vector<BlockerDescriptor> enumerate_descriptors(int n);

/// Edge sets of all descriptors for n, canonically sorted.
std::vector<EdgeSet> parametric_blockers(int n);

/// Reading of a size-m edge set in its directional frame (rotated so that
/// the directional support is <0..m>).
struct SupportAnalysis {
  int n = 0;
  int m = 0;
  int rotation = 0;              // window c; derotated = rotate(s, -c)
  EdgeSet derotated;
  std::vector<Edge> position;    // position[t-1] = e_t, t = 1..m
  std::vector<int> offset;       // offset[t-1] for e_t
  int boundary_count = 0;
  int alpha = -1;                // valid when boundary_count >= 2
  int delta = -1;
  std::vector<int> holes;        // t with alpha+1 <= t <= m-delta and e_t not boundary

  bool on_backbone(int v) const { return v >= alpha && v <= m - delta; }
  bool backbone_internal(int v) const { return v > alpha && v < m - delta; }
  /// Internal vertex of the complementary arc <m-delta, ..., 2m-2, 0, ..., alpha>.
  bool complement_internal(int v) const { return !on_backbone(v); }
  bool is_beam_position(int t) const { return t <= alpha || t > m - delta; }
};

/// nullopt when n is even, |s| != m, or the directions do not form a window.
std::optional<SupportAnalysis> analyze_support(const EdgeSet& s);

struct Matched {
  BlockerDescriptor descriptor;
};
struct NotBlocker {
  Path witness;
};
using ClassificationResult = std::variant<Matched, NotBlocker>;

/// Thrown when a structurally unmatched set turns out to block every SHP,
/// i.e. a counterexample to the characterization.
class CharacterizationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Reads the descriptor off a size-m edge set, or produces an avoiding SHP.
/// Throws std::invalid_argument for even n or |s| != m.
ClassificationResult classify(const EdgeSet& s);

/// Relabelled Class A: a-path a_t = alpha+t (t = 0..m-alpha-delta), b-path
/// b_j = alpha-1-j, and beams [a_{i_nu}, b_{j_nu}] in the order
/// u_alpha, ..., u_1, v_1, ..., v_delta.
struct AltDescriptionA {
  int m = 2;
  int alpha = 0;
  int delta = 0;
  struct Anchor {
    int i = 0;
    int j = 0;
    friend bool operator==(const Anchor&, const Anchor&) = default;
  };
  std::vector<Anchor> diagonals;

  int a_len() const { return m - alpha - delta; }
  int b_len() const { return m - 3 + alpha + delta; }
  int a_vertex(int t) const { return mod(alpha + t, 2 * m - 1); }
  int b_vertex(int j) const { return mod(alpha - 1 - j, 2 * m - 1); }

  friend bool operator==(const AltDescriptionA&, const AltDescriptionA&) = default;
};

/// Empty string when the a-path / anchor invariants hold, else the reason.
std::string alt_violation(const AltDescriptionA& a);
AltDescriptionA to_alt_description(const ClassAParams& p);
ClassAParams from_alt_description(const AltDescriptionA& a, int k);
EdgeSet generate_alt(const AltDescriptionA& a, int k);

/// A Class A alt description whose a-path is split after a_beta.
struct BrokenAltDescription {
  AltDescriptionA base;
  int beta = 2;
  int gamma() const { return base.a_len() - 1 - beta; }
};

/// B(eta): drop [a_beta, a_beta+1], add [a_beta-eta, a_beta+1+eta]. Each
/// precondition failure throws std::invalid_argument naming it.
ClassBParams class_b_from_broken(const BrokenAltDescription& a, int eta, int k = 0);
EdgeSet generate_broken(const BrokenAltDescription& a, int eta, int k = 0);

}  // namespace blockerlab
