// Test-only helpers: independent oracles, random instances and mesh fixtures.
#ifndef GVF_TESTS_SUPPORT_HPP
#define GVF_TESTS_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gvf/level_graph.hpp"
#include "gvf/manifold.hpp"

namespace gvf::testing {

inline constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

/// All-pairs hop distances by Floyd-Warshall on the raw edge list.
inline std::vector<std::vector<int>> floyd_warshall(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : edges) d[e.a][e.b] = d[e.b][e.a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Random connected graph: a random spanning tree plus extra random edges.
inline std::vector<Edge> random_connected_edges(std::mt19937_64& rng, int n, double extra_prob) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.push_back({static_cast<VertexId>(parent(rng)), v});
  }
  std::bernoulli_distribution extra(extra_prob);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (extra(rng)) edges.push_back({a, b});
  // Relabel so vertex 0 is not always the tree root.
  std::vector<VertexId> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& e : edges) e = {perm[e.a], perm[e.b]};
  return edges;
}

inline DomainGraph path_graph(int n) { return build_grid(n, 1); }

inline DomainGraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return DomainGraph::from_edges(n, edges);
}

/// Dense Gaussian elimination with partial pivoting; A is row-major n x n.
inline std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[p * n + c])) p = r;
    for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[p * n + k]);
    std::swap(b[c], b[p]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i * n + k] * x[k];
    x[i] = s / a[i * n + i];
  }
  return x;
}

/// Discrete harmonic interpolant by a direct solve of the graph Laplace
/// system on the free vertices: deg(v) F(v) - sum_{w~v} F(w) = 0.
inline std::vector<double> harmonic_direct(const DomainGraph& g, const RealGuidingSet& guides) {
  const int n = g.vertex_count();
  std::vector<double> value(n, 0.0);
  std::vector<int> slot(n, -1);
  std::vector<bool> pinned(n, false);
  for (const auto& e : guides) {
    pinned[e.vertex] = true;
    value[e.vertex] = e.value;
  }
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (!pinned[v]) slot[v] = m++;
  std::vector<double> a(static_cast<std::size_t>(m) * m, 0.0), b(m, 0.0);
  for (int v = 0; v < n; ++v) {
    if (pinned[v]) continue;
    const int r = slot[v];
    a[static_cast<std::size_t>(r) * m + r] = g.degree(v);
    for (VertexId w : g.neighbors(v)) {
      if (pinned[w]) b[r] += value[w];
      else a[static_cast<std::size_t>(r) * m + slot[w]] -= 1.0;
    }
  }
  const auto x = solve_dense(std::move(a), std::move(b));
  for (int v = 0; v < n; ++v)
    if (!pinned[v]) value[v] = x[slot[v]];
  return value;
}

inline TriMesh tetrahedron() {
  return TriMesh({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}},
                 {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}});
}

inline TriMesh octahedron() {
  return TriMesh({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                 {{4, 0, 2}, {4, 2, 1}, {4, 1, 3}, {4, 3, 0},
                  {5, 2, 0}, {5, 1, 2}, {5, 3, 1}, {5, 0, 3}});
}

/// Unit icosahedron refined `subdivisions` times by edge midpoints.
/// Two subdivisions give 162 vertices and 320 faces.
inline TriMesh icosphere(int subdivisions) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> v = {{-1, t, 0}, {1, t, 0},  {-1, -t, 0}, {1, -t, 0},
                         {0, -1, t}, {0, 1, t},  {0, -1, -t}, {0, 1, -t},
                         {t, 0, -1}, {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
  std::vector<Triangle> f = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                             {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                             {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                             {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  auto normalize = [](Vec3 p) {
    const double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    return Vec3{p[0] / r, p[1] / r, p[2] / r};
  };
  for (auto& p : v) p = normalize(p);
  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<VertexId, VertexId>, VertexId> mid;
    auto midpoint = [&](VertexId a, VertexId b) {
      const auto key = std::minmax(a, b);
      if (auto it = mid.find(key); it != mid.end()) return it->second;
      const Vec3 p{(v[a][0] + v[b][0]) / 2, (v[a][1] + v[b][1]) / 2, (v[a][2] + v[b][2]) / 2};
      v.push_back(normalize(p));
      const auto id = static_cast<VertexId>(v.size() - 1);
      mid.emplace(key, id);
      return id;
    };
    std::vector<Triangle> next;
    for (const auto& tri : f) {
      const VertexId ab = midpoint(tri[0], tri[1]);
      const VertexId bc = midpoint(tri[1], tri[2]);
      const VertexId ca = midpoint(tri[2], tri[0]);
      next.push_back({tri[0], ab, ca});
      next.push_back({tri[1], bc, ab});
      next.push_back({tri[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    f = std::move(next);
  }
  return TriMesh(std::move(v), std::move(f));
}

inline Vec3 centroid(const TriMesh& m, std::size_t face) {
  const auto& t = m.faces()[face];
  Vec3 c{};
  for (VertexId v : t)
    for (int k = 0; k < 3; ++k) c[k] += m.vertices()[v][k] / 3.0;
  return c;
}

/// Faces with vertices on both sides of the plane z = 0: a closed band of
/// cells separating the upper and lower caps.
inline std::vector<VertexId> equator_band(const TriMesh& m) {
  std::vector<VertexId> band;
  for (std::size_t f = 0; f < m.faces().size(); ++f) {
    bool above = false, below = false;
    for (VertexId v : m.faces()[f]) (m.vertices()[v][2] > 0 ? above : below) = true;
    if (above && below) band.push_back(static_cast<VertexId>(f));
  }
  return band;
}

inline std::filesystem::path temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "gvf_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace gvf::testing

#endif  // GVF_TESTS_SUPPORT_HPP
