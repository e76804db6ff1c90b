#include "polychora/polytope.hpp"

#include "polychora/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace polychora {

namespace {

constexpr double kTol = kIncidenceTolerance;

constexpr std::array kKinds{PolytopeKind::Cell5,  PolytopeKind::Cell8,   PolytopeKind::Cell16,
                            PolytopeKind::Cell24, PolytopeKind::Cell120, PolytopeKind::Cell600};

// Integer grid key so that sorting is insensitive to last-bit noise.
std::array<long long, 4> quantize(const Vec4& v) {
  const auto q = [](double c) { return std::llround(c * 1e9); };
  return {q(v.w), q(v.x), q(v.y), q(v.z)};
}

std::vector<Vec4> normalizedSorted(std::span<const Vec4> input) {
  std::vector<Vec4> out;
  out.reserve(input.size());
  for (const Vec4& v : input) out.push_back(UnitQuaternion(v).vec());
  std::sort(out.begin(), out.end(),
            [](const Vec4& a, const Vec4& b) { return quantize(a) < quantize(b); });
  return out;
}

std::vector<std::array<int, 2>> findEdges(const std::vector<Vec4>& v) {
  const int n = static_cast<int>(v.size());
  double shortest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = norm(v[i] - v[j]);
      if (d > kTol) shortest = std::min(shortest, d);
    }
  std::vector<std::array<int, 2>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(norm(v[i] - v[j]) - shortest) <= kTol) edges.push_back({i, j});
  return edges;
}

bool isPlanar(const std::vector<Vec4>& v, std::span<const int> cycle) {
  if (cycle.size() < 3) return false;
  const Vec4 origin = v[cycle[0]];
  Vec4 e1 = v[cycle[1]] - origin;
  e1 = e1 * (1.0 / norm(e1));
  Vec4 e2 = v[cycle[2]] - origin;
  e2 = e2 - e1 * dot(e2, e1);
  const double n2 = norm(e2);
  if (n2 < kTol) return false;
  e2 = e2 * (1.0 / n2);
  for (std::size_t k = 3; k < cycle.size(); ++k) {
    Vec4 r = v[cycle[k]] - origin;
    r = r - e1 * dot(r, e1) - e2 * dot(r, e2);
    if (norm(r) > kTol) return false;
  }
  return true;
}

// Simple cycles of exactly `length` vertices, each reported once: it starts
// at its smallest vertex and its second vertex is below its last.
void cyclesOfLength(const std::vector<std::vector<int>>& adj,
                    const std::vector<std::vector<char>>& adjacent, int length,
                    std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> path;
  std::vector<char> onPath(n, 0);
  auto extend = [&](auto&& self) -> void {
    const int last = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (adjacent[last][path[0]] && path[1] < last) out.push_back(path);
      return;
    }
    for (int next : adj[last]) {
      if (next <= path[0] || onPath[next]) continue;
      path.push_back(next);
      onPath[next] = 1;
      self(self);
      onPath[next] = 0;
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    onPath[s] = 1;
    extend(extend);
    onPath[s] = 0;
  }
}

std::vector<std::vector<int>> findFaces(const std::vector<Vec4>& v,
                                        const std::vector<std::array<int, 2>>& edges) {
  const int n = static_cast<int>(v.size());
  std::vector<std::vector<int>> adj(n);
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    adjacent[a][b] = adjacent[b][a] = 1;
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  for (int length = 3; length <= 8; ++length) {
    std::vector<std::vector<int>> cycles;
    cyclesOfLength(adj, adjacent, length, cycles);
    std::vector<std::vector<int>> faces;
    for (auto& c : cycles)
      if (isPlanar(v, c)) faces.push_back(std::move(c));
    if (!faces.empty()) {
      std::sort(faces.begin(), faces.end());
      return faces;
    }
  }
  return {};
}

std::vector<std::vector<int>> findCells(const std::vector<Vec4>& v,
                                        const std::vector<std::array<int, 2>>& edges,
                                        const std::vector<std::vector<int>>& faces) {
  std::map<std::pair<int, int>, int> edgeId;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) edgeId[{edges[e][0], edges[e][1]}] = e;
  std::vector<std::vector<int>> edgeFaces(edges.size());
  std::vector<std::vector<int>> faceEdges(faces.size());
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const auto& cyc = faces[f];
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      const auto it = edgeId.find({std::min(a, b), std::max(a, b)});
      if (it == edgeId.end()) continue;
      edgeFaces[it->second].push_back(f);
      faceEdges[f].push_back(it->second);
    }
  }

  std::set<std::vector<int>> found;
  std::vector<int> cellCount(faces.size(), 0);
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const auto& face = faces[f];
    for (int e : faceEdges[f]) {
      if (cellCount[f] >= 2) break;
      for (int g : edgeFaces[e]) {
        if (g == f || cellCount[f] >= 2) continue;
        const auto& other = faces[g];
        const auto apex = std::find_if(other.begin(), other.end(), [&](int x) {
          return std::find(face.begin(), face.end(), x) == face.end();
        });
        if (apex == other.end()) continue;
        const Vec4 p0 = v[face[0]];
        Vec4 normal = cross(v[face[1]] - p0, v[face[2]] - p0, v[*apex] - p0);
        const double len = norm(normal);
        if (len < kTol) continue;
        normal = normal * (1.0 / len);
        double offset = dot(normal, p0);
        if (offset < 0) {
          normal = -normal;
          offset = -offset;
        }
        if (offset < kTol) continue;
        const bool supporting = std::all_of(v.begin(), v.end(), [&](const Vec4& x) {
          return dot(normal, x) <= offset + kTol;
        });
        if (!supporting) continue;

        std::vector<int> cell;
        for (int h = 0; h < static_cast<int>(faces.size()); ++h) {
          const bool inPlane = std::all_of(faces[h].begin(), faces[h].end(), [&](int x) {
            return std::abs(dot(normal, v[x]) - offset) <= kTol;
          });
          if (inPlane) cell.push_back(h);
        }
        if (found.insert(cell).second)
          for (int h : cell) ++cellCount[h];
      }
    }
  }
  return {found.begin(), found.end()};
}

bool isEvenPermutation(const std::array<int, 4>& p) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

std::vector<Vec4> simplexVertices() {
  const double s = 1.0 / std::sqrt(5.0);
  // centroid at the origin, one vertex on the positive w axis
  return {{-s, 1, 1, 1}, {-s, 1, -1, -1}, {-s, -1, 1, -1}, {-s, -1, -1, 1}, {4 * s, 0, 0, 0}};
}

std::vector<Vec4> tesseractVertices() {
  std::vector<Vec4> out;
  for (int mask = 0; mask < 16; ++mask) {
    const auto c = [&](int bit) { return (mask >> bit) & 1 ? -0.5 : 0.5; };
    out.push_back({c(3), c(2), c(1), c(0)});
  }
  return out;
}

std::vector<Vec4> orthoplexVertices() {
  return {{1, 0, 0, 0},  {-1, 0, 0, 0}, {0, 1, 0, 0},  {0, -1, 0, 0},
          {0, 0, 1, 0},  {0, 0, -1, 0}, {0, 0, 0, 1},  {0, 0, 0, -1}};
}

std::vector<Vec4> icositetrachoronVertices() {
  std::vector<Vec4> out;
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (double si : {s, -s})
        for (double sj : {s, -s}) {
          std::array<double, 4> c{};
          c[i] = si;
          c[j] = sj;
          out.push_back({c[0], c[1], c[2], c[3]});
        }
  return out;
}

std::vector<Vec4> hexacosichoronVertices() {
  std::vector<Vec4> out = orthoplexVertices();
  std::vector<Vec4> half = tesseractVertices();
  out.insert(out.end(), half.begin(), half.end());

  const double phi = std::numbers::phi;
  const std::array<double, 4> base{phi / 2, 0.5, 0.5 / phi, 0.0};
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    if (!isEvenPermutation(perm)) continue;
    for (int signs = 0; signs < 8; ++signs) {
      std::array<double, 4> c{};
      for (int k = 0; k < 3; ++k) c[perm[k]] = (signs >> k) & 1 ? -base[k] : base[k];
      c[perm[3]] = 0.0;
      out.push_back({c[0], c[1], c[2], c[3]});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Cell center with the largest w, ties broken by the largest quantized key.
UnitQuaternion homeCenter(const Polychoron& p) {
  const auto better = [](const UnitQuaternion& a, const UnitQuaternion& b) {
    if (std::abs(a.w() - b.w()) > kTol) return a.w() > b.w();
    return quantize(a.vec()) > quantize(b.vec());
  };
  UnitQuaternion best = p.cellCenters.front();
  for (const auto& c : p.cellCenters)
    if (better(c, best)) best = c;
  return best;
}

// Rebuilds p with its home cell center moved onto the identity, unless that
// would put a vertex on the antipode of 1 (the 5-cell, whose vertices are
// opposite its cell centers).
Polychoron centerOnHomeCell(Polychoron p) {
  const UnitQuaternion home = homeCenter(p);
  if (geodesicDistance(home, UnitQuaternion::identity()) <= 1e-12) return p;
  const UnitQuaternion g = conjugate(home);
  std::vector<Vec4> rotated;
  rotated.reserve(p.vertices.size());
  for (const Vec4& v : p.vertices) {
    rotated.push_back((g * UnitQuaternion(v)).vec());
    if (rotated.back().w <= -1.0 + 1e-6) return p;
  }
  return fromVertices(std::move(p.name), rotated);
}

}  // namespace

std::span<const PolytopeKind> allPolytopes() { return kKinds; }

std::string_view polytopeName(PolytopeKind kind) {
  switch (kind) {
    case PolytopeKind::Cell5: return "5-cell";
    case PolytopeKind::Cell8: return "8-cell";
    case PolytopeKind::Cell16: return "16-cell";
    case PolytopeKind::Cell24: return "24-cell";
    case PolytopeKind::Cell120: return "120-cell";
    case PolytopeKind::Cell600: return "600-cell";
  }
  return "unknown";
}

std::optional<PolytopeKind> tryParsePolytope(std::string_view name) {
  for (PolytopeKind k : kKinds)
    if (polytopeName(k) == name) return k;
  return std::nullopt;
}

PolytopeKind parsePolytope(std::string_view name) {
  if (auto k = tryParsePolytope(name)) return *k;
  throw UnknownPolytope("unknown polytope '" + std::string(name) +
                        "' (expected 5-cell, 8-cell, 16-cell, 24-cell, 120-cell or 600-cell)");
}

Polychoron fromVertices(std::string name, std::span<const Vec4> input) {
  Polychoron p;
  p.name = std::move(name);
  p.vertices = normalizedSorted(input);
  p.edges = findEdges(p.vertices);
  p.faces = findFaces(p.vertices, p.edges);
  p.cells = findCells(p.vertices, p.edges, p.faces);
  p.cellCenters = cellCenters(p);
  return p;
}

Polychoron build(PolytopeKind kind) {
  const std::string name(polytopeName(kind));
  switch (kind) {
    case PolytopeKind::Cell5: return centerOnHomeCell(fromVertices(name, simplexVertices()));
    case PolytopeKind::Cell8: return centerOnHomeCell(fromVertices(name, tesseractVertices()));
    case PolytopeKind::Cell16: return centerOnHomeCell(fromVertices(name, orthoplexVertices()));
    case PolytopeKind::Cell24:
      return centerOnHomeCell(fromVertices(name, icositetrachoronVertices()));
    case PolytopeKind::Cell600:
      return centerOnHomeCell(fromVertices(name, hexacosichoronVertices()));
    case PolytopeKind::Cell120: {
      std::vector<Vec4> dual;
      for (const auto& c : catalog(PolytopeKind::Cell600).cellCenters) dual.push_back(c.vec());
      return centerOnHomeCell(fromVertices(name, dual));
    }
  }
  throw UnknownPolytope("unknown polytope kind");
}

Polychoron build(std::string_view name) { return build(parsePolytope(name)); }

const Polychoron& catalog(PolytopeKind kind) {
  // one function-local static per kind so that building the 120-cell (which
  // needs the 600-cell) does not re-enter the same static initializer
  switch (kind) {
    case PolytopeKind::Cell5: { static const Polychoron p = build(kind); return p; }
    case PolytopeKind::Cell8: { static const Polychoron p = build(kind); return p; }
    case PolytopeKind::Cell16: { static const Polychoron p = build(kind); return p; }
    case PolytopeKind::Cell24: { static const Polychoron p = build(kind); return p; }
    case PolytopeKind::Cell120: { static const Polychoron p = build(kind); return p; }
    case PolytopeKind::Cell600: { static const Polychoron p = build(kind); return p; }
  }
  throw UnknownPolytope("unknown polytope kind");
}

std::vector<int> cellVertices(const Polychoron& p, int cell) {
  std::vector<int> out;
  for (int f : p.cells.at(cell)) out.insert(out.end(), p.faces.at(f).begin(), p.faces.at(f).end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<UnitQuaternion> cellCenters(const Polychoron& p) {
  std::vector<UnitQuaternion> out;
  out.reserve(p.cells.size());
  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c) {
    Vec4 sum;
    for (int v : cellVertices(p, c)) sum += p.vertices[v];
    out.emplace_back(sum);
  }
  return out;
}

std::vector<std::vector<int>> faceCells(const Polychoron& p) {
  std::vector<std::vector<int>> out(p.faces.size());
  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c)
    for (int f : p.cells[c]) out.at(f).push_back(c);
  return out;
}

DualGraph dualAdjacency(const Polychoron& p) {
  DualGraph g;
  g.nodeCount = static_cast<int>(p.cells.size());
  for (const auto& cells : faceCells(p))
    if (cells.size() == 2) g.edges.push_back({cells[0], cells[1]});
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  g.adjacency.assign(g.nodeCount, {});
  for (auto [a, b] : g.edges) {
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
  for (auto& list : g.adjacency) std::sort(list.begin(), list.end());
  return g;
}

ValidationReport validate(const Polychoron& p) {
  const auto fail = [](auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return ValidationReport{false, os.str()};
  };
  const int nv = static_cast<int>(p.vertices.size());
  const int nf = static_cast<int>(p.faces.size());
  const int nc = static_cast<int>(p.cells.size());
  if (nv == 0 || p.edges.empty() || nf == 0 || nc == 0) return fail("empty element list");

  for (int i = 0; i < nv; ++i)
    if (!isFinite(p.vertices[i]) || std::abs(norm(p.vertices[i]) - 1.0) > 1e-12)
      return fail("vertex ", i, " is not on the unit sphere");

  std::set<std::pair<int, int>> edgeSet;
  double chord = -1;
  for (int e = 0; e < static_cast<int>(p.edges.size()); ++e) {
    auto [a, b] = p.edges[e];
    if (a < 0 || b < 0 || a >= nv || b >= nv || a == b) return fail("edge ", e, " has bad indices");
    const double d = norm(p.vertices[a] - p.vertices[b]);
    if (chord < 0) chord = d;
    if (std::abs(d - chord) > kTol) return fail("edge ", e, " length differs (equal edge lengths violated)");
    edgeSet.insert({std::min(a, b), std::max(a, b)});
  }

  const std::size_t faceSize = p.faces[0].size();
  for (int f = 0; f < nf; ++f) {
    const auto& face = p.faces[f];
    if (face.size() != faceSize || faceSize < 3) return fail("face ", f, " has a different vertex count");
    for (std::size_t k = 0; k < face.size(); ++k) {
      const int a = face[k], b = face[(k + 1) % face.size()];
      if (a < 0 || b < 0 || a >= nv || b >= nv) return fail("face ", f, " has bad vertex indices");
      if (!edgeSet.count({std::min(a, b), std::max(a, b)}))
        return fail("face ", f, " boundary uses a non-edge ", a, "-", b);
    }
    if (!isPlanar(p.vertices, face)) return fail("face ", f, " is not planar");
  }

  const std::size_t cellSize = p.cells[0].size();
  for (int c = 0; c < nc; ++c) {
    if (p.cells[c].size() != cellSize) return fail("cell ", c, " has a different face count");
    for (int f : p.cells[c])
      if (f < 0 || f >= nf) return fail("cell ", c, " has bad face indices");
  }

  const auto fc = faceCells(p);
  for (int f = 0; f < nf; ++f)
    if (fc[f].size() != 2) return fail("face ", f, " is in ", fc[f].size(), " cells (face shared by exactly 2 cells violated)");

  // faces around each edge, linked by shared cells, must form one cycle
  std::map<std::pair<int, int>, std::vector<int>> edgeFaces;
  for (int f = 0; f < nf; ++f) {
    const auto& face = p.faces[f];
    for (std::size_t k = 0; k < face.size(); ++k) {
      const int a = face[k], b = face[(k + 1) % face.size()];
      edgeFaces[{std::min(a, b), std::max(a, b)}].push_back(f);
    }
  }
  for (const auto& [edge, around] : edgeFaces) {
    const int m = static_cast<int>(around.size());
    std::vector<std::vector<int>> link(m);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const auto& ci = fc[around[i]];
        const auto& cj = fc[around[j]];
        const bool share = std::any_of(ci.begin(), ci.end(), [&](int c) {
          return std::find(cj.begin(), cj.end(), c) != cj.end();
        });
        if (share) {
          link[i].push_back(j);
          link[j].push_back(i);
        }
      }
    bool cycle = m >= 3 && std::all_of(link.begin(), link.end(), [](const auto& l) { return l.size() == 2; });
    if (cycle) {
      int prev = -1, cur = 0, steps = 0;
      do {
        const int next = link[cur][0] == prev ? link[cur][1] : link[cur][0];
        prev = cur;
        cur = next;
        ++steps;
      } while (cur != 0 && steps <= m);
      cycle = steps == m;
    }
    if (!cycle)
      return fail("faces around edge ", edge.first, "-", edge.second, " do not form a single cycle");
  }

  double cellOffset = -1;
  for (int c = 0; c < nc; ++c) {
    const auto verts = cellVertices(p, c);
    Vec4 sum;
    for (int v : verts) sum += p.vertices[v];
    const Vec4 dir = sum * (1.0 / norm(sum));
    const double offset = dot(dir, p.vertices[verts[0]]);
    for (int v : verts)
      if (std::abs(dot(dir, p.vertices[v]) - offset) > kTol) return fail("cell ", c, " is not flat");
    if (cellOffset < 0) cellOffset = offset;
    if (std::abs(offset - cellOffset) > kTol) return fail("cell ", c, " is at a different distance from the origin");
  }

  const long long euler = static_cast<long long>(nv) - static_cast<long long>(p.edges.size()) + nf - nc;
  if (euler != 0) return fail("Euler relation V - E + F - C = ", euler, ", expected 0");

  if (static_cast<int>(p.cellCenters.size()) != nc) return fail("cell center count differs from cell count");
  const auto expected = cellCenters(p);
  for (int c = 0; c < nc; ++c) {
    if (std::abs(norm(p.cellCenters[c].vec()) - 1.0) > 1e-12) return fail("cell center ", c, " is not unit");
    if (norm(p.cellCenters[c].vec() - expected[c].vec()) > kTol) return fail("cell center ", c, " is not the cell centroid");
  }
  for (int a = 0; a < nc; ++a)
    for (int b = a + 1; b < nc; ++b)
      if (geodesicDistance(p.cellCenters[a], p.cellCenters[b]) <= 1e-6)
        return fail("cell centers ", a, " and ", b, " coincide");

  const DualGraph g = dualAdjacency(p);
  std::vector<char> seen(nc, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (int d : g.adjacency[c])
      if (!seen[d]) {
        seen[d] = 1;
        ++reached;
        stack.push_back(d);
      }
  }
  if (reached != nc) return fail("dual graph is disconnected");
  for (int c = 0; c < nc; ++c)
    if (g.degree(c) != g.degree(0)) return fail("dual graph is not regular at cell ", c);

  return {};
}

}  // namespace polychora
