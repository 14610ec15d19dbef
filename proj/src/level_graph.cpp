#include "gvf/level_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <type_traits>
#include <unordered_map>

namespace gvf {

// =============================================================================
// LevelScale

LevelScale::LevelScale(double origin, double delta, int count)
    : origin_(origin), delta_(delta), count_(count) {
  if (!std::isfinite(origin) || !std::isfinite(delta) || !(delta > 0.0)) {
    throw input_error("level scale needs a finite origin and a positive spacing");
  }
  if (count < 1) throw input_error("level scale needs at least one level");
}

double LevelScale::value(int k) const {
  if (k < 1 || k > count_) {
    throw input_error("level index " + std::to_string(k) + " outside 1.." +
                      std::to_string(count_));
  }
  return origin_ + static_cast<double>(k - 1) * delta_;
}

int LevelScale::index(double v) const noexcept {
  const double t = (v - origin_) / delta_;
  // ceil(t - 1/2) rounds to nearest with ties going down.
  const double r = std::ceil(t - 0.5);
  if (!(r > 0.0)) return 1;
  if (r >= static_cast<double>(count_ - 1)) return count_;
  return static_cast<int>(r) + 1;
}

// =============================================================================
// DomainGraph

namespace {

std::vector<VertexId> find_roots(int n, std::span<const Edge> edges) {
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& e : edges) {
    const VertexId ra = find(e.a);
    const VertexId rb = find(e.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  for (VertexId v = 0; v < n; ++v) parent[v] = find(v);
  return parent;
}

}  // namespace

int count_components(int vertex_count, std::span<const Edge> edges) {
  const auto roots = find_roots(vertex_count, edges);
  int components = 0;
  for (VertexId v = 0; v < vertex_count; ++v) components += (roots[v] == v);
  return components;
}

DomainGraph DomainGraph::from_edges(int vertex_count, std::span<const Edge> edges, GraphKind kind) {
  if (vertex_count < 1) throw input_error("graph needs at least one vertex");

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= vertex_count || e.b >= vertex_count) {
      throw input_error("edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                        ") references a vertex outside 0.." + std::to_string(vertex_count - 1));
    }
    if (e.a == e.b) throw input_error("self-loop on vertex " + std::to_string(e.a));
    normalized.push_back({std::min(e.a, e.b), std::max(e.a, e.b)});
  }
  std::sort(normalized.begin(), normalized.end(), [](const Edge& l, const Edge& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  });
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  if (const int components = count_components(vertex_count, normalized); components != 1) {
    throw input_error("graph is disconnected: " + std::to_string(components) + " components");
  }

  DomainGraph g;
  g.kind_ = kind;
  std::vector<int> degree(vertex_count, 0);
  for (const auto& e : normalized) {
    ++degree[e.a];
    ++degree[e.b];
  }
  g.offsets_.assign(vertex_count + 1, 0);
  for (int v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.neighbors_.resize(g.offsets_.back());
  std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : normalized) {
    g.neighbors_[cursor[e.a]++] = e.b;
    g.neighbors_[cursor[e.b]++] = e.a;
  }
  for (int v = 0; v < vertex_count; ++v) {
    std::sort(g.neighbors_.begin() + g.offsets_[v], g.neighbors_.begin() + g.offsets_[v + 1]);
  }
  return g;
}

int DomainGraph::max_degree() const noexcept {
  int best = 0;
  for (int v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> DomainGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId a = 0; a < vertex_count(); ++a) {
    for (VertexId b : neighbors(a)) {
      if (a < b) out.push_back({a, b});
    }
  }
  return out;
}

DomainGraph build_grid(int width, int height) {
  if (width < 1 || height < 1) {
    throw input_error("grid dimensions must be positive, got " + std::to_string(width) + "x" +
                      std::to_string(height));
  }
  DomainGraph g;
  g.kind_ = GraphKind::grid;
  g.grid_ = GridShape{width, height};
  const int n = width * height;
  g.offsets_.assign(n + 1, 0);
  g.neighbors_.reserve(static_cast<std::size_t>(4) * n);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const int v = y * width + x;
      // ascending id order: up, left, right, down
      if (y > 0) g.neighbors_.push_back(v - width);
      if (x > 0) g.neighbors_.push_back(v - 1);
      if (x + 1 < width) g.neighbors_.push_back(v + 1);
      if (y + 1 < height) g.neighbors_.push_back(v + width);
      g.offsets_[v + 1] = static_cast<int>(g.neighbors_.size());
    }
  }
  return g;
}

std::vector<int> multi_source_distances(const DomainGraph& g, std::span<const VertexId> sources) {
  if (sources.empty()) throw input_error("distance query needs at least one source");
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  for (VertexId s : sources) {
    if (!g.contains(s)) throw input_error("source vertex " + std::to_string(s) + " not in graph");
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// =============================================================================
// GuidingSet

template <class T>
GuidingSet<T>::GuidingSet(std::vector<entry_type> entries) {
  if (entries.empty()) throw input_error("guiding set is empty");
  entries_.reserve(entries.size());
  std::unordered_map<VertexId, std::size_t> position;
  for (const auto& e : entries) {
    if (e.vertex < 0) throw input_error("negative guiding id " + std::to_string(e.vertex));
    if constexpr (std::is_floating_point_v<T>) {
      if (!std::isfinite(e.value)) {
        throw input_error("guiding value at " + std::to_string(e.vertex) + " is not finite");
      }
    }
    const auto [it, inserted] = position.try_emplace(e.vertex, entries_.size());
    if (inserted) {
      entries_.push_back(e);
    } else if (entries_[it->second].value != e.value) {
      throw input_error("conflicting guiding values on vertex " + std::to_string(e.vertex));
    }
  }
}

template <class T>
std::vector<VertexId> GuidingSet<T>::vertices() const {
  std::vector<VertexId> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.vertex);
  return out;
}

template <class T>
void GuidingSet<T>::validate(int vertex_count) const {
  for (const auto& e : entries_) {
    if (e.vertex >= vertex_count) {
      throw input_error("guiding id " + std::to_string(e.vertex) + " outside 0.." +
                        std::to_string(vertex_count - 1));
    }
  }
}

template class GuidingSet<int>;
template class GuidingSet<double>;

// =============================================================================

GradualCheck is_gradually_varied(const DomainGraph& g, std::span<const int> levels) {
  if (static_cast<int>(levels.size()) != g.vertex_count()) {
    throw input_error("field length does not match the graph");
  }
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (VertexId b : g.neighbors(a)) {
      if (a < b && std::abs(levels[a] - levels[b]) > 1) return {Edge{a, b}};
    }
  }
  return {};
}

}  // namespace gvf
