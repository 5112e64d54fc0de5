#include <gtest/gtest.h>

#include "blockerlab/geometry.hpp"
#include "oracles.hpp"

namespace bl = blockerlab;
using bl::Edge;
using bl::EdgeSet;

TEST(Direction, SumOfEndpointsModN) {
  EXPECT_EQ(bl::direction(Edge(1, 2), 15), 3);
  EXPECT_EQ(bl::direction(Edge(14, 2), 15), 1);
  EXPECT_EQ(bl::direction(Edge(7, 8), 15), 0);
}

TEST(Distance, Cyclic) {
  EXPECT_EQ(bl::distance(0, 1, 15), 1);
  EXPECT_EQ(bl::distance(0, 14, 15), 1);
  EXPECT_EQ(bl::distance(3, 10, 15), 7);
  EXPECT_EQ(bl::distance(4, 4, 15), 0);
}

TEST(Edge, CanonicalStorage) {
  const Edge e(5, 2);
  EXPECT_EQ(e.a, 2);
  EXPECT_EQ(e.b, 5);
  EXPECT_EQ(e, Edge(2, 5));
  EXPECT_THROW(Edge(3, 3), std::invalid_argument);
  EXPECT_TRUE(bl::is_boundary(Edge(0, 14), 15));
  EXPECT_FALSE(bl::is_boundary(Edge(0, 2), 15));
}

TEST(Crosses, Examples) {
  EXPECT_TRUE(bl::crosses(Edge(0, 2), Edge(1, 3)));
  EXPECT_FALSE(bl::crosses(Edge(0, 1), Edge(1, 2)));
  EXPECT_TRUE(bl::crosses(Edge(17, 3), Edge(2, 7)));
}

TEST(Crosses, AgreesWithCoordinateOracle) {
  for (int n = 3; n <= 12; ++n) {
    const auto edges = bl::all_edges(n);
    for (const Edge& e : edges) {
      EXPECT_FALSE(bl::crosses(e, e));
      for (const Edge& f : edges) {
        const bool c = bl::crosses(e, f);
        ASSERT_EQ(c, oracle::segments_cross(n, {e.a, e.b}, {f.a, f.b})) << n << " " << e.a << e.b << f.a << f.b;
        ASSERT_EQ(c, bl::crosses(f, e));
        for (int k = 1; k < n; ++k) ASSERT_EQ(c, bl::crosses(bl::rotate(e, k, n), bl::rotate(f, k, n)));
      }
    }
  }
}

TEST(Rotate, EdgeSets) {
  const EdgeSet s(5, {Edge(0, 1), Edge(1, 2)});
  EXPECT_EQ(bl::rotate(s, 0), s);
  EXPECT_EQ(bl::rotate(EdgeSet(5, {Edge(0, 1)}), 4), EdgeSet(5, {Edge(4, 0)}));
  EXPECT_EQ(bl::rotate(EdgeSet(5, {Edge(1, 2), Edge(2, 3), Edge(4, 2)}), 1),
            EdgeSet(5, {Edge(2, 3), Edge(3, 4), Edge(0, 3)}));
}

TEST(Rotate, ShiftsDirectionByTwiceK) {
  for (int n : {5, 8, 11}) {
    for (const Edge& e : bl::all_edges(n))
      for (int k = 0; k < n; ++k) EXPECT_EQ(bl::direction(bl::rotate(e, k, n), n), bl::mod(bl::direction(e, n) + 2 * k, n));
  }
}

TEST(ParallelClasses, OddOrderStructure) {
  for (int n = 3; n <= 15; n += 2) {
    const int m = (n + 1) / 2;
    for (int d = 0; d < n; ++d) {
      const auto cls = bl::parallel_class(n, d);
      EXPECT_EQ(static_cast<int>(cls.size()), m - 1);
      int boundary = 0;
      const int x = bl::missed_vertex(n, d);
      EXPECT_EQ(bl::mod(2 * x, n), d);
      for (const Edge& e : cls) {
        EXPECT_EQ(bl::direction(e, n), d);
        EXPECT_FALSE(e.has(x));
        boundary += bl::is_boundary(e, n);
      }
      EXPECT_EQ(boundary, 1) << "n=" << n << " d=" << d;
    }
  }
}

TEST(EdgeIndex, MatchesListing) {
  for (int n : {3, 6, 9}) {
    const auto edges = bl::all_edges(n);
    for (std::size_t i = 0; i < edges.size(); ++i) EXPECT_EQ(bl::edge_index(edges[i], n), static_cast<int>(i));
  }
}

TEST(EdgeSet, ValidatesInput) {
  EXPECT_THROW(EdgeSet(2, {}), std::invalid_argument);
  EXPECT_THROW(EdgeSet(5, {Edge(0, 5)}), std::invalid_argument);
  EXPECT_THROW(EdgeSet(5, {Edge(0, 1), Edge(1, 0)}), std::invalid_argument);
  const EdgeSet s(7, {Edge(3, 4), Edge(0, 6), Edge(1, 2)});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], Edge(0, 6));
  EXPECT_EQ(s[2], Edge(3, 4));
  EXPECT_TRUE(s.contains(Edge(6, 0)));
}

TEST(Window, Examples) {
  const EdgeSet path(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  EXPECT_EQ(bl::boundary_consecutive_window(path), 0);
  EXPECT_EQ(bl::boundary_consecutive_window(bl::rotate(path, 2)), 2);
  EXPECT_EQ(bl::boundary_consecutive_window(EdgeSet(5, {Edge(0, 1), Edge(1, 2), Edge(0, 2)})), std::nullopt);
  EXPECT_EQ(bl::boundary_consecutive_window(EdgeSet(5, {Edge(0, 1), Edge(1, 2)})), std::nullopt);
  EXPECT_EQ(bl::boundary_consecutive_window(EdgeSet(6, {Edge(0, 1), Edge(1, 2), Edge(2, 3)})), std::nullopt);
}

TEST(Window, DerotatedDirections) {
  for (int n = 5; n <= 13; n += 2) {
    const int m = (n + 1) / 2;
    std::vector<Edge> path;
    for (int t = 1; t <= m; ++t) path.emplace_back(t - 1, t);
    for (int c = 0; c < n; ++c) {
      const EdgeSet s = bl::rotate(EdgeSet(n, path), c);
      ASSERT_EQ(bl::boundary_consecutive_window(s), c);
      auto dirs = bl::rotate(s, -c).directions();
      std::sort(dirs.begin(), dirs.end());
      std::vector<int> want{0};
      for (int d = 1; d <= 2 * m - 3; d += 2) want.push_back(d);
      EXPECT_EQ(dirs, want);
    }
  }
}

TEST(Canonical, SmallestRotation) {
  const EdgeSet s(7, {Edge(3, 4), Edge(4, 5)});
  const auto c = bl::canonical_rotation(s);
  EXPECT_EQ(c.set, EdgeSet(7, {Edge(0, 1), Edge(0, 6)}));
  EXPECT_EQ(bl::rotate(s, c.shift), c.set);
  for (int k = 0; k < 7; ++k) EXPECT_LE(c.set, bl::rotate(s, k));
}
