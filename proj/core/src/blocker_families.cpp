#include "blockerlab/blocker_families.hpp"

#include <algorithm>
#include <functional>

namespace blockerlab {

namespace {

std::optional<Violation> fail(Constraint c, std::string msg) {
  return Violation{c, std::move(msg)};
}

std::string str(int v) { return std::to_string(v); }

// Strictly decreasing, positive.
std::optional<Violation> check_decreasing(const std::vector<int>& seq, Constraint c,
                                          const char* name) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] <= 0)
      return fail(c, std::string(name) + "_" + str(static_cast<int>(i) + 1) + " must be positive");
    if (i > 0 && seq[i] >= seq[i - 1])
      return fail(c, std::string(name) + " must be strictly decreasing");
  }
  return std::nullopt;
}

std::optional<Violation> validate_common(int m, int k, int alpha, int delta) {
  if (m < 2) return fail(Constraint::kOrder, "m >= 2");
  if (k < 0 || k >= 2 * m - 1) return fail(Constraint::kRotation, "0 <= k <= 2m-2");
  if (alpha < 0 || delta < 0) return fail(Constraint::kNonNegative, "alpha, delta >= 0");
  return std::nullopt;
}

std::optional<Violation> validate_a(const ClassAParams& p) {
  if (auto v = validate_common(p.m, p.k, p.alpha, p.delta)) return v;
  if (static_cast<int>(p.eps.size()) != p.alpha || static_cast<int>(p.xi.size()) != p.delta)
    return fail(Constraint::kListLength, "|eps| = alpha and |xi| = delta");
  if (p.alpha + p.delta > p.m - 2) return fail(Constraint::kBackboneLength, "alpha+delta <= m-2");
  if (auto v = check_decreasing(p.eps, Constraint::kEpsDecreasing, "eps")) return v;
  for (int i = 1; i <= p.alpha; ++i) {
    const int e = p.eps[i - 1];
    if (e < p.alpha - i + 1)
      return fail(Constraint::kEpsLowerBound, "eps_" + str(i) + " >= alpha-i+1 = " + str(p.alpha - i + 1));
    if (e > p.m - p.delta - i - 1)
      return fail(Constraint::kEpsUpperBound,
                  "eps_" + str(i) + " <= m-delta-i-1 = " + str(p.m - p.delta - i - 1));
  }
  if (auto v = check_decreasing(p.xi, Constraint::kXiDecreasing, "xi")) return v;
  for (int j = 1; j <= p.delta; ++j) {
    const int x = p.xi[j - 1];
    if (x < p.delta + 1 - j)
      return fail(Constraint::kXiLowerBound, "xi_" + str(j) + " >= delta+1-j = " + str(p.delta + 1 - j));
    if (x > p.m - j - p.alpha - 1)
      return fail(Constraint::kXiUpperBound,
                  "xi_" + str(j) + " <= m-j-alpha-1 = " + str(p.m - j - p.alpha - 1));
  }
  if (p.alpha > 0 && p.delta > 0 && p.eps[0] + p.xi[0] > p.m - 2)
    return fail(Constraint::kBeamSeparation, "eps_1 + xi_1 <= m-2");
  return std::nullopt;
}

std::optional<Violation> validate_b(const ClassBParams& p) {
  if (auto v = validate_common(p.m, p.k, p.alpha, p.delta)) return v;
  if (p.alpha + p.delta > p.m - 5) return fail(Constraint::kBrokenSpan, "alpha+delta <= m-5");
  if (static_cast<int>(p.eps.size()) != p.alpha || static_cast<int>(p.xi.size()) != p.delta)
    return fail(Constraint::kListLength, "|eps| = alpha and |xi| = delta");
  if (p.beta < 2 || p.gamma < 2) return fail(Constraint::kRunLengths, "beta, gamma >= 2");
  if (p.beta + p.gamma != p.m - p.alpha - p.delta - 1)
    return fail(Constraint::kRunSum, "beta+gamma = m-alpha-delta-1");
  if (p.eta < 1 || p.eta > std::min(p.beta, p.gamma) - 1)
    return fail(Constraint::kBridgeOffset, "1 <= eta <= min(beta-1, gamma-1)");
  if (auto v = check_decreasing(p.eps, Constraint::kEpsDecreasing, "eps")) return v;
  if (p.alpha > 0 && p.eps[0] >= p.alpha + p.beta - 1)
    return fail(Constraint::kEpsUpperBound, "eps_1 < alpha+beta-1");
  if (auto v = check_decreasing(p.xi, Constraint::kXiDecreasing, "xi")) return v;
  if (p.delta > 0 && p.xi[0] >= p.gamma + p.delta - 1)
    return fail(Constraint::kXiUpperBound, "xi_1 < gamma+delta-1");
  return std::nullopt;
}

void add_beams(std::vector<Edge>& out, int m, int n, const std::vector<int>& eps,
               const std::vector<int>& xi) {
  for (int i = 1; i <= static_cast<int>(eps.size()); ++i)
    out.push_back(make_edge(i - 1 - eps[i - 1], i + eps[i - 1], n));
  for (int j = 1; j <= static_cast<int>(xi.size()); ++j)
    out.push_back(make_edge(m - j - xi[j - 1], m - j + 1 + xi[j - 1], n));
}

// All strictly decreasing sequences s_1 > ... > s_len with lo(i) <= s_i <= hi(i).
void decreasing_sequences(int len, const std::function<int(int)>& lo,
                          const std::function<int(int)>& hi,
                          const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> seq;
  std::function<void(int)> rec = [&](int i) {
    if (i > len) {
      fn(seq);
      return;
    }
    int top = hi(i);
    if (i > 1) top = std::min(top, seq.back() - 1);
    for (int v = std::max(lo(i), 1); v <= top; ++v) {
      seq.push_back(v);
      rec(i + 1);
      seq.pop_back();
    }
  };
  rec(1);
}

}  // namespace

std::string constraint_name(Constraint c) {
  switch (c) {
    case Constraint::kOrder: return "order";
    case Constraint::kRotation: return "rotation";
    case Constraint::kNonNegative: return "non_negative";
    case Constraint::kListLength: return "list_length";
    case Constraint::kBackboneLength: return "backbone_length";
    case Constraint::kEpsDecreasing: return "eps_decreasing";
    case Constraint::kEpsLowerBound: return "eps_lower_bound";
    case Constraint::kEpsUpperBound: return "eps_upper_bound";
    case Constraint::kXiDecreasing: return "xi_decreasing";
    case Constraint::kXiLowerBound: return "xi_lower_bound";
    case Constraint::kXiUpperBound: return "xi_upper_bound";
    case Constraint::kBeamSeparation: return "beam_separation";
    case Constraint::kBrokenSpan: return "broken_span";
    case Constraint::kRunLengths: return "run_lengths";
    case Constraint::kRunSum: return "run_sum";
    case Constraint::kBridgeOffset: return "bridge_offset";
  }
  return "unknown";
}

std::optional<Violation> validate(const BlockerDescriptor& d) {
  return std::visit(
      [](const auto& p) -> std::optional<Violation> {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, ClassAParams>)
          return validate_a(p);
        else
          return validate_b(p);
      },
      d);
}

EdgeSet generate(const BlockerDescriptor& d) {
  if (auto v = validate(d))
    throw std::invalid_argument("invalid descriptor: " + constraint_name(v->constraint) + " (" +
                                v->message + ")");
  std::vector<Edge> out;
  int n = 0;
  int k = 0;
  if (const auto* a = std::get_if<ClassAParams>(&d)) {
    n = 2 * a->m - 1;
    k = a->k;
    for (int t = a->alpha; t < a->m - a->delta; ++t) out.push_back(make_edge(t, t + 1, n));
    add_beams(out, a->m, n, a->eps, a->xi);
  } else {
    const auto& b = std::get<ClassBParams>(d);
    n = 2 * b.m - 1;
    k = b.k;
    const int hole = b.alpha + b.beta;
    for (int t = b.alpha; t < b.m - b.delta; ++t)
      if (t != hole) out.push_back(make_edge(t, t + 1, n));
    out.push_back(make_edge(hole - b.eta, hole + 1 + b.eta, n));
    add_beams(out, b.m, n, b.eps, b.xi);
  }
  return rotate(EdgeSet(n, std::move(out)), k);
}

std::vector<BlockerDescriptor> enumerate_descriptors(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("descriptor enumeration requires odd n >= 3");
  const int m = (n + 1) / 2;
  std::vector<BlockerDescriptor> out;

  for (int k = 0; k < n; ++k) {
    for (int alpha = 0; alpha <= m - 2; ++alpha) {
      for (int delta = 0; alpha + delta <= m - 2; ++delta) {
        decreasing_sequences(
            alpha, [&](int i) { return alpha - i + 1; }, [&](int i) { return m - delta - i - 1; },
            [&](const std::vector<int>& eps) {
              decreasing_sequences(
                  delta, [&](int j) { return delta + 1 - j; },
                  [&](int j) { return m - j - alpha - 1; },
                  [&](const std::vector<int>& xi) {
                    if (alpha > 0 && delta > 0 && eps[0] + xi[0] > m - 2) return;
                    out.emplace_back(ClassAParams{m, k, alpha, delta, eps, xi});
                  });
            });
      }
    }
  }

  for (int k = 0; k < n; ++k) {
    for (int alpha = 0; alpha <= m - 5; ++alpha) {
      for (int delta = 0; alpha + delta <= m - 5; ++delta) {
        const int runs = m - alpha - delta - 1;
        for (int beta = 2; runs - beta >= 2; ++beta) {
          const int gamma = runs - beta;
          for (int eta = 1; eta <= std::min(beta, gamma) - 1; ++eta) {
            decreasing_sequences(
                alpha, [&](int i) { return alpha - i + 1; },
                [&](int i) { return alpha + beta - 2 - (i - 1); },
                [&](const std::vector<int>& eps) {
                  decreasing_sequences(
                      delta, [&](int j) { return delta + 1 - j; },
                      [&](int j) { return gamma + delta - 2 - (j - 1); },
                      [&](const std::vector<int>& xi) {
                        out.emplace_back(
                            ClassBParams{m, k, alpha, beta, gamma, delta, eta, eps, xi});
                      });
                });
          }
        }
      }
    }
  }
  return out;
}

std::vector<EdgeSet> parametric_blockers(int n) {
  std::vector<EdgeSet> out;
  for (const auto& d : enumerate_descriptors(n)) out.push_back(generate(d));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SupportAnalysis> analyze_support(const EdgeSet& s) {
  const auto window = boundary_consecutive_window(s);
  if (!window) return std::nullopt;

  SupportAnalysis a;
  a.n = s.order();
  a.m = (a.n + 1) / 2;
  a.rotation = *window;
  a.derotated = rotate(s, -*window);
  a.position.assign(a.m, Edge{});
  a.offset.assign(a.m, 0);

  const int n = a.n;
  const int m = a.m;
  const int half = (n + 1) / 2;  // inverse of 2 mod n
  for (const Edge& e : a.derotated) {
    const int t = mod(static_cast<int>(static_cast<long long>(direction(e, n) + 1) * half % n), n);
    // e = [t-1-o, t+o]: one endpoint sits at t+o with 0 <= o <= m-2.
    int o = mod(e.a - t, n);
    if (o > m - 2) o = mod(e.b - t, n);
    a.position[t - 1] = e;
    a.offset[t - 1] = o;
  }

  std::vector<int> boundary;
  for (int t = 1; t <= m; ++t)
    if (a.offset[t - 1] == 0) boundary.push_back(t);
  a.boundary_count = static_cast<int>(boundary.size());
  if (a.boundary_count >= 2) {
    a.alpha = boundary.front() - 1;
    a.delta = m - boundary.back();
    for (int t = a.alpha + 1; t <= m - a.delta; ++t)
      if (a.offset[t - 1] != 0) a.holes.push_back(t);
  }
  return a;
}

namespace {

std::optional<BlockerDescriptor> read_descriptor(const SupportAnalysis& a) {
  if (a.boundary_count < 2 || a.holes.size() > 1) return std::nullopt;
  const int m = a.m;
  std::vector<int> eps;
  std::vector<int> xi;
  for (int i = 1; i <= a.alpha; ++i) eps.push_back(a.offset[i - 1]);
  for (int j = 1; j <= a.delta; ++j) xi.push_back(a.offset[m - j]);

  BlockerDescriptor d;
  if (a.holes.empty()) {
    d = ClassAParams{m, a.rotation, a.alpha, a.delta, eps, xi};
  } else {
    const int t = a.holes.front();
    const int beta = t - 1 - a.alpha;
    const int gamma = m - a.delta - a.alpha - beta - 1;
    d = ClassBParams{m, a.rotation, a.alpha, beta, gamma, a.delta, a.offset[t - 1], eps, xi};
  }
  if (validate(d)) return std::nullopt;
  return d;
}

}  // namespace

ClassificationResult classify(const EdgeSet& s) {
  const int n = s.order();
  if (n % 2 == 0) throw std::invalid_argument("classify requires odd n");
  if (static_cast<int>(s.size()) != (n + 1) / 2)
    throw std::invalid_argument("classify requires exactly m = (n+1)/2 edges, got " +
                                std::to_string(s.size()));

  if (const auto a = analyze_support(s)) {
    if (auto d = read_descriptor(*a)) {
      if (generate(*d) != s)
        throw std::logic_error("descriptor read from edge set does not regenerate it");
      return Matched{std::move(*d)};
    }
  }
  if (auto w = find_avoiding_shp(s)) return NotBlocker{std::move(*w)};
  throw CharacterizationError("edge set blocks every SHP but matches neither class");
}

std::string alt_violation(const AltDescriptionA& a) {
  if (a.m < 2) return "m >= 2";
  if (a.alpha < 0 || a.delta < 0) return "alpha, delta >= 0";
  if (a.alpha + a.delta > a.m - 2) return "alpha+delta <= m-2";
  if (static_cast<int>(a.diagonals.size()) != a.alpha + a.delta)
    return "exactly alpha+delta diagonals";
  for (int nu = 1; nu <= a.alpha + a.delta; ++nu) {
    const auto& d = a.diagonals[nu - 1];
    if (d.i < 1 || d.i > a.a_len() - 1) return "1 <= i_nu <= m-alpha-delta-1";
    if (nu > 1 && d.i < a.diagonals[nu - 2].i) return "i_nu nondecreasing";
    const int expect = nu <= a.alpha ? d.i + 2 * nu - 2 : d.i + 2 * nu - 3;
    if (d.j != expect) return "j_nu = i_nu + 2nu - 2 (nu <= alpha) or i_nu + 2nu - 3";
  }
  return {};
}

AltDescriptionA to_alt_description(const ClassAParams& p) {
  if (auto v = validate(BlockerDescriptor{p}))
    throw std::invalid_argument("invalid Class A descriptor: " + v->message);
  AltDescriptionA a{p.m, p.alpha, p.delta, {}};
  // u_alpha, ..., u_1: u_i = [i-1-eps_i, i+eps_i] has a-vertex i+eps_i.
  for (int i = p.alpha; i >= 1; --i) {
    const int e = p.eps[i - 1];
    a.diagonals.push_back({i + e - p.alpha, p.alpha - i + e});
  }
  // v_1, ..., v_delta: v_j = [m-j-xi_j, m-j+1+xi_j] has a-vertex m-j-xi_j.
  for (int j = 1; j <= p.delta; ++j) {
    const int x = p.xi[j - 1];
    a.diagonals.push_back({p.m - j - x - p.alpha, p.alpha + p.m - 3 + j - x});
  }
  return a;
}

ClassAParams from_alt_description(const AltDescriptionA& a, int k) {
  if (auto why = alt_violation(a); !why.empty())
    throw std::invalid_argument("invalid alternative description: " + why);
  ClassAParams p{a.m, k, a.alpha, a.delta, std::vector<int>(a.alpha), std::vector<int>(a.delta)};
  for (int i = 1; i <= a.alpha; ++i) p.eps[i - 1] = a.diagonals[a.alpha - i].i - i + a.alpha;
  for (int j = 1; j <= a.delta; ++j)
    p.xi[j - 1] = a.m - j - a.alpha - a.diagonals[a.alpha + j - 1].i;
  if (auto v = validate(BlockerDescriptor{p}))
    throw std::invalid_argument("alternative description maps outside Class A: " + v->message);
  return p;
}

EdgeSet generate_alt(const AltDescriptionA& a, int k) {
  if (auto why = alt_violation(a); !why.empty())
    throw std::invalid_argument("invalid alternative description: " + why);
  const int n = 2 * a.m - 1;
  std::vector<Edge> out;
  for (int t = 0; t < a.a_len(); ++t) out.push_back(make_edge(a.a_vertex(t), a.a_vertex(t + 1), n));
  for (const auto& d : a.diagonals) out.push_back(make_edge(a.a_vertex(d.i), a.b_vertex(d.j), n));
  return rotate(EdgeSet(n, std::move(out)), k);
}

namespace {

void check_broken(const BrokenAltDescription& br, int eta) {
  const AltDescriptionA& a = br.base;
  if (auto why = alt_violation(a); !why.empty())
    throw std::invalid_argument("invalid alternative description: " + why);
  if (a.a_len() < 5) throw std::invalid_argument("broken backbone requires m-alpha-delta >= 5");
  if (br.beta < 2 || br.gamma() < 2) throw std::invalid_argument("split requires beta, gamma >= 2");
  if (eta < 1 || eta >= std::min(br.beta, br.gamma()))
    throw std::invalid_argument("bridge offset requires 1 <= eta < min(beta, gamma)");
  for (int nu = 1; nu <= a.alpha + a.delta; ++nu) {
    const int i = a.diagonals[nu - 1].i;
    if (nu <= a.alpha && (i < 1 || i > br.beta - 1))
      throw std::invalid_argument("upper beams must anchor on internal vertices of the upper a-path");
    if (nu > a.alpha && (i < br.beta + 2 || i > a.a_len() - 1))
      throw std::invalid_argument("lower beams must anchor on internal vertices of the lower a-path");
  }
}

}  // namespace

ClassBParams class_b_from_broken(const BrokenAltDescription& br, int eta, int k) {
  check_broken(br, eta);
  const ClassAParams base = from_alt_description(br.base, k);
  ClassBParams p{base.m, k, base.alpha, br.beta, br.gamma(), base.delta, eta, base.eps, base.xi};
  if (auto v = validate(BlockerDescriptor{p}))
    throw std::invalid_argument("broken description maps outside Class B: " + v->message);
  return p;
}

EdgeSet generate_broken(const BrokenAltDescription& br, int eta, int k) {
  check_broken(br, eta);
  const AltDescriptionA& a = br.base;
  const int n = 2 * a.m - 1;
  const EdgeSet unbroken = generate_alt(a, 0);
  const Edge removed = make_edge(a.a_vertex(br.beta), a.a_vertex(br.beta + 1), n);
  std::vector<Edge> out;
  for (const Edge& e : unbroken)
    if (e != removed) out.push_back(e);
  out.push_back(make_edge(a.a_vertex(br.beta - eta), a.a_vertex(br.beta + 1 + eta), n));
  return rotate(EdgeSet(n, std::move(out)), k);
}

}  // namespace blockerlab
