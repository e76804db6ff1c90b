#include "polychora/errors.hpp"
#include "polychora/polytope.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>
#include <gmock/gmock.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

namespace polychora {
namespace {

struct Counts {
  PolytopeKind kind;
  std::size_t v, e, f, c;
  int dualDegree;
};

constexpr Counts kCounts[] = {
    {PolytopeKind::Cell5, 5, 10, 10, 5, 4},        {PolytopeKind::Cell8, 16, 32, 24, 8, 6},
    {PolytopeKind::Cell16, 8, 24, 32, 16, 4},      {PolytopeKind::Cell24, 24, 96, 96, 24, 8},
    {PolytopeKind::Cell120, 600, 1200, 720, 120, 12}, {PolytopeKind::Cell600, 120, 720, 1200, 600, 4},
};

class PerPolytope : public ::testing::TestWithParam<Counts> {};

std::string kindName(const ::testing::TestParamInfo<Counts>& info) {
  std::string s = "p" + std::string(polytopeName(info.param.kind));
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

TEST_P(PerPolytope, ElementCounts) {
  const Counts& c = GetParam();
  const Polychoron& p = catalog(c.kind);
  EXPECT_EQ(p.vertices.size(), c.v);
  EXPECT_EQ(p.edges.size(), c.e);
  EXPECT_EQ(p.faces.size(), c.f);
  EXPECT_EQ(p.cells.size(), c.c);
  EXPECT_EQ(p.cellCenters.size(), c.c);
  const long long euler = static_cast<long long>(c.v) - static_cast<long long>(c.e) + static_cast<long long>(c.f) -
                          static_cast<long long>(c.c);
  EXPECT_EQ(euler, 0);
}

TEST_P(PerPolytope, Validates) {
  const ValidationReport r = validate(catalog(GetParam().kind));
  EXPECT_TRUE(r.ok) << r.failure;
}

TEST_P(PerPolytope, GeometricInvariants) {
  const Polychoron& p = catalog(GetParam().kind);
  for (const Vec4& v : p.vertices) EXPECT_NEAR(norm(v), 1.0, 1e-12);
  const double len = norm(p.vertices[p.edges[0][0]] - p.vertices[p.edges[0][1]]);
  for (const auto& e : p.edges) EXPECT_NEAR(norm(p.vertices[e[0]] - p.vertices[e[1]]), len, 1e-9);
  for (const auto& f : p.faces) EXPECT_EQ(f.size(), p.faces[0].size());
  for (const auto& c : p.cells) EXPECT_EQ(c.size(), p.cells[0].size());
  for (const UnitQuaternion& c : p.cellCenters) EXPECT_NEAR(norm(c.vec()), 1.0, 1e-12);
}

TEST_P(PerPolytope, CentersAreCellCentroids) {
  const Polychoron& p = catalog(GetParam().kind);
  const auto centers = cellCenters(p);
  ASSERT_EQ(centers.size(), p.cells.size());
  for (std::size_t c = 0; c < centers.size(); ++c) {
    Vec4 sum{0, 0, 0, 0};
    const auto vs = cellVertices(p, static_cast<int>(c));
    for (int v : vs) sum = sum + p.vertices[v];
    const Vec4 avg = sum * (1.0 / norm(sum));
    EXPECT_LE(testing::maxAbsDiff(avg, centers[c].vec()), 1e-12);
    EXPECT_EQ(centers[c], p.cellCenters[c]);
  }
}

TEST_P(PerPolytope, CentersPairwiseDistinct) {
  const Polychoron& p = catalog(GetParam().kind);
  double minD = 10;
  for (std::size_t a = 0; a < p.cellCenters.size(); ++a)
    for (std::size_t b = a + 1; b < p.cellCenters.size(); ++b)
      minD = std::min(minD, geodesicDistance(p.cellCenters[a], p.cellCenters[b]));
  EXPECT_GT(minD, 1e-6);
}

// Independent oracle: two cells are dual-adjacent iff their vertex sets share
// a 2-face, which for these polytopes means at least three common vertices.
TEST_P(PerPolytope, DualDegreeMatchesIncidenceScan) {
  const Counts& c = GetParam();
  const Polychoron& p = catalog(c.kind);
  const int n = static_cast<int>(p.cells.size());
  std::vector<std::vector<int>> verts(n);
  for (int i = 0; i < n; ++i) {
    verts[i] = cellVertices(p, i);
    std::sort(verts[i].begin(), verts[i].end());
  }
  std::vector<int> degree(n, 0);
  std::set<std::pair<int, int>> oracleEdges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> common;
      std::set_intersection(verts[a].begin(), verts[a].end(), verts[b].begin(), verts[b].end(),
                            std::back_inserter(common));
      if (common.size() >= 3) {
        ++degree[a];
        ++degree[b];
        oracleEdges.insert({a, b});
      }
    }
  const DualGraph g = dualAdjacency(p);
  ASSERT_EQ(g.nodeCount, n);
  std::set<std::pair<int, int>> edges;
  for (const auto& e : g.edges) edges.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
  EXPECT_EQ(edges, oracleEdges);
  long long degreeSum = 0;
  for (int i = 0; i < n; ++i) {
    EXPECT_EQ(degree[i], c.dualDegree);
    EXPECT_EQ(g.degree(i), c.dualDegree);
    degreeSum += g.degree(i);
  }
  EXPECT_EQ(static_cast<long long>(g.edges.size()) * 2, degreeSum);
}

TEST_P(PerPolytope, Deterministic) {
  const Polychoron a = build(GetParam().kind);
  const Polychoron b = build(polytopeName(GetParam().kind));
  EXPECT_EQ(a.vertices.size(), b.vertices.size());
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    EXPECT_EQ(a.vertices[i].w, b.vertices[i].w);
    EXPECT_EQ(a.vertices[i].x, b.vertices[i].x);
    EXPECT_EQ(a.vertices[i].y, b.vertices[i].y);
    EXPECT_EQ(a.vertices[i].z, b.vertices[i].z);
  }
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_EQ(a.faces, b.faces);
  EXPECT_EQ(a.cells, b.cells);
  EXPECT_EQ(a.cellCenters, b.cellCenters);
}

TEST_P(PerPolytope, EveryFaceInTwoCells) {
  const Polychoron& p = catalog(GetParam().kind);
  const auto fc = faceCells(p);
  ASSERT_EQ(fc.size(), p.faces.size());
  for (const auto& cells : fc) EXPECT_EQ(cells.size(), 2u);
}

INSTANTIATE_TEST_SUITE_P(All, PerPolytope, ::testing::ValuesIn(kCounts), kindName);

TEST(Build, Names) {
  for (PolytopeKind k : allPolytopes()) {
    EXPECT_EQ(parsePolytope(polytopeName(k)), k);
    EXPECT_EQ(build(polytopeName(k)).name, polytopeName(k));
  }
  EXPECT_EQ(allPolytopes().size(), 6u);
  EXPECT_EQ(build("8-cell").cells.size(), 8u);
  EXPECT_THROW(build("7-cell"), UnknownPolytope);
  EXPECT_THROW(parsePolytope(""), UnknownPolytope);
  EXPECT_FALSE(tryParsePolytope("tesseract").has_value());
}

TEST(Build, FiveCellMatchesSubsetEnumeration) {
  // In a 4-simplex every k-subset of vertices spans a (k-1)-face.
  const Polychoron& p = catalog(PolytopeKind::Cell5);
  std::set<std::set<int>> edges, faces, cells;
  for (const auto& e : p.edges) edges.insert({e[0], e[1]});
  for (const auto& f : p.faces) faces.insert(std::set<int>(f.begin(), f.end()));
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    const auto vs = cellVertices(p, static_cast<int>(c));
    cells.insert(std::set<int>(vs.begin(), vs.end()));
  }
  std::set<std::set<int>> pairs, triples, quads;
  for (int mask = 0; mask < 32; ++mask) {
    std::set<int> s;
    for (int b = 0; b < 5; ++b)
      if (mask & (1 << b)) s.insert(b);
    if (s.size() == 2) pairs.insert(s);
    if (s.size() == 3) triples.insert(s);
    if (s.size() == 4) quads.insert(s);
  }
  EXPECT_EQ(edges, pairs);
  EXPECT_EQ(faces, triples);
  EXPECT_EQ(cells, quads);
}

TEST(Build, SixHundredCellByCliqueEnumeration) {
  // Brute force on vertices alone: edges are pairs at minimal chord length,
  // faces are triangles of that graph, cells are its 4-cliques.
  const Polychoron& p = catalog(PolytopeKind::Cell600);
  const int n = static_cast<int>(p.vertices.size());
  ASSERT_EQ(n, 120);
  double minChord = 10;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) minChord = std::min(minChord, norm(p.vertices[a] - p.vertices[b]));
  EXPECT_NEAR(minChord, 1 / std::numbers::phi, 1e-12);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  int edges = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (std::abs(norm(p.vertices[a] - p.vertices[b]) - minChord) < 1e-9) {
        adj[a][b] = adj[b][a] = 1;
        ++edges;
      }
  int triangles = 0, tetrahedra = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!adj[a][c] || !adj[b][c]) continue;
        ++triangles;
        for (int d = c + 1; d < n; ++d)
          if (adj[a][d] && adj[b][d] && adj[c][d]) ++tetrahedra;
      }
    }
  EXPECT_EQ(edges, 720);
  EXPECT_EQ(triangles, 1200);
  EXPECT_EQ(tetrahedra, 600);
  EXPECT_EQ(n - edges + triangles - tetrahedra, 0);
}

TEST(CellCenters, EightCellCentersAreSignedBasis) {
  // direct averaging of the cube vertices of (+-1/2, ...)
  const Polychoron& p = catalog(PolytopeKind::Cell8);
  std::set<std::array<int, 4>> got;
  for (const UnitQuaternion& c : p.cellCenters) {
    std::array<int, 4> r{};
    const auto comps = c.components();
    for (int i = 0; i < 4; ++i) {
      r[i] = static_cast<int>(std::lround(comps[i]));
      EXPECT_NEAR(comps[i], r[i], 1e-12);
    }
    got.insert(r);
  }
  std::set<std::array<int, 4>> expected;
  for (int i = 0; i < 4; ++i)
    for (int s : {-1, 1}) {
      std::array<int, 4> r{};
      r[i] = s;
      expected.insert(r);
    }
  EXPECT_EQ(got, expected);
}

std::vector<Vec4> centerVectors(const Polychoron& p) {
  std::vector<Vec4> out;
  for (const auto& c : p.cellCenters) out.push_back(c.vec());
  return out;
}

TEST(Duality, TwentyFourCellIsSelfDual) {
  const Polychoron dual = fromVertices("dual", centerVectors(catalog(PolytopeKind::Cell24)));
  const ValidationReport r = validate(dual);
  EXPECT_TRUE(r.ok) << r.failure;
  EXPECT_EQ(dual.vertices.size(), 24u);
  EXPECT_EQ(dual.cells.size(), 24u);
  EXPECT_EQ(dual.cells[0].size(), 8u);
}

TEST(Duality, EightAndSixteenCellArePaired) {
  const Polychoron from8 = fromVertices("dual8", centerVectors(catalog(PolytopeKind::Cell8)));
  EXPECT_TRUE(validate(from8).ok);
  EXPECT_EQ(from8.cells.size(), 16u);
  const Polychoron from16 = fromVertices("dual16", centerVectors(catalog(PolytopeKind::Cell16)));
  EXPECT_TRUE(validate(from16).ok);
  EXPECT_EQ(from16.cells.size(), 8u);
}

TEST(Duality, SixHundredAndOneTwentyCellArePaired) {
  const Polychoron from600 = fromVertices("dual600", centerVectors(catalog(PolytopeKind::Cell600)));
  const ValidationReport r600 = validate(from600);
  EXPECT_TRUE(r600.ok) << r600.failure;
  EXPECT_EQ(from600.vertices.size(), 600u);
  EXPECT_EQ(from600.cells.size(), 120u);
  const Polychoron from120 = fromVertices("dual120", centerVectors(catalog(PolytopeKind::Cell120)));
  const ValidationReport r120 = validate(from120);
  EXPECT_TRUE(r120.ok) << r120.failure;
  EXPECT_EQ(from120.vertices.size(), 120u);
  EXPECT_EQ(from120.cells.size(), 600u);
}

TEST(Validate, DetectsDeletedCell) {
  Polychoron p = build(PolytopeKind::Cell16);
  p.cells.erase(p.cells.begin() + 3);
  p.cellCenters.erase(p.cellCenters.begin() + 3);
  const ValidationReport r = validate(p);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(static_cast<bool>(r));
  EXPECT_THAT(r.failure, ::testing::HasSubstr("face shared by exactly 2 cells"));
}

TEST(Validate, DetectsPerturbedVertex) {
  for (PolytopeKind k : allPolytopes()) {
    Polychoron p = build(k);
    Vec4 v = p.vertices[0] + Vec4{0.003, -0.002, 0.001, 0.004};
    p.vertices[0] = v * (1 / norm(v));
    const ValidationReport r = validate(p);
    EXPECT_FALSE(r.ok) << polytopeName(k);
    EXPECT_THAT(r.failure, ::testing::HasSubstr("equal edge lengths")) << polytopeName(k);
  }
}

TEST(Validate, DetectsOffSphereVertex) {
  Polychoron p = build(PolytopeKind::Cell8);
  p.vertices[2] = p.vertices[2] * 1.01;
  EXPECT_FALSE(validate(p).ok);
}

TEST(Validate, DetectsBrokenEulerOrMissingFace) {
  Polychoron p = build(PolytopeKind::Cell24);
  p.edges.pop_back();
  EXPECT_FALSE(validate(p).ok);
}

TEST(FromVertices, RejectsZeroVertex) {
  const std::vector<Vec4> vs{{1, 0, 0, 0}, {0, 0, 0, 0}};
  EXPECT_THROW(fromVertices("bad", vs), DegenerateQuaternion);
}

TEST(FromVertices, OrderIndependent) {
  std::vector<Vec4> vs = catalog(PolytopeKind::Cell16).vertices;
  std::reverse(vs.begin(), vs.end());
  const Polychoron p = fromVertices("16-cell", vs);
  EXPECT_EQ(p.cells, build(PolytopeKind::Cell16).cells);
}

}  // namespace
}  // namespace polychora
