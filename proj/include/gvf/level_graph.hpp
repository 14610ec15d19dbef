#ifndef GVF_LEVEL_GRAPH_HPP
#define GVF_LEVEL_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gvf/error.hpp"

namespace gvf {

using VertexId = std::int32_t;

struct Edge {
  VertexId a;
  VertexId b;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// =============================================================================
// Level scale

/// Uniform chain of admissible values A_1 < A_2 < ... < A_n.
/// Level indices are 1-based throughout the library.
class LevelScale {
 public:
  LevelScale(double origin, double delta, int count);

  double origin() const noexcept { return origin_; }
  double delta() const noexcept { return delta_; }
  int count() const noexcept { return count_; }

  /// A_k = origin + (k-1)*delta.
  double value(int k) const;

  /// Nearest level to `v`, ties toward the lower index, clamped to 1..n.
  int index(double v) const noexcept;

 private:
  double origin_;
  double delta_;
  int count_;
};

// =============================================================================
// Domain graph

enum class GraphKind { grid, mesh_vertex, mesh_cell, generic };

struct GridShape {
  int width;
  int height;
};

/// Finite, undirected, connected graph stored in compressed adjacency form.
/// Immutable after construction.
class DomainGraph {
 public:
  /// Builds a graph from an undirected edge list. Duplicate edges are merged.
  /// Throws on self-loops, out-of-range endpoints, or a disconnected result.
  static DomainGraph from_edges(int vertex_count, std::span<const Edge> edges,
                                GraphKind kind = GraphKind::generic);

  int vertex_count() const noexcept { return static_cast<int>(offsets_.size()) - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  GraphKind kind() const noexcept { return kind_; }
  std::optional<GridShape> grid_shape() const noexcept { return grid_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const noexcept;

  /// Every edge once, as (a, b) with a < b, in ascending order.
  std::vector<Edge> edges() const;

  std::span<const int> offsets() const noexcept { return offsets_; }
  std::span<const VertexId> adjacency() const noexcept { return neighbors_; }

  bool contains(VertexId v) const noexcept { return v >= 0 && v < vertex_count(); }

 private:
  friend DomainGraph build_grid(int width, int height);
  DomainGraph() = default;

  std::vector<int> offsets_{0};
  std::vector<VertexId> neighbors_;
  GraphKind kind_ = GraphKind::generic;
  std::optional<GridShape> grid_;
};

/// Number of connected components of the graph described by the edge list.
int count_components(int vertex_count, std::span<const Edge> edges);

/// 4-neighbor grid, row-major ids (id = y*width + x).
DomainGraph build_grid(int width, int height);

/// Breadth-first hop distance from every vertex to its nearest source.
std::vector<int> multi_source_distances(const DomainGraph& g, std::span<const VertexId> sources);

// =============================================================================
// Guiding points and fields

template <class T>
struct GuidingEntry {
  VertexId vertex;
  T value;
  friend bool operator==(const GuidingEntry&, const GuidingEntry&) = default;
};

/// The sample subset J with observed values. Entries keep insertion order;
/// repeated vertices with equal values collapse to one entry, repeated
/// vertices with different values are rejected.
template <class T>
class GuidingSet {
 public:
  using entry_type = GuidingEntry<T>;

  explicit GuidingSet(std::vector<entry_type> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<entry_type>& entries() const noexcept { return entries_; }
  const entry_type& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::vector<VertexId> vertices() const;

  /// Throws unless every vertex id is below `vertex_count`.
  void validate(int vertex_count) const;
  void validate(const DomainGraph& g) const { validate(g.vertex_count()); }

 private:
  std::vector<entry_type> entries_;
};

using LevelGuidingSet = GuidingSet<int>;
using RealGuidingSet = GuidingSet<double>;

extern template class GuidingSet<int>;
extern template class GuidingSet<double>;

/// Integer-mode field: one level index in 1..level_count per vertex.
struct LevelField {
  std::vector<int> values;
  int level_count = 1;
};

/// Real-mode field, one value per vertex.
using RealField = std::vector<double>;

/// Result of the gradual-variation predicate. Holds the first offending edge
/// (in ascending edge order) when the field is not gradually varied.
struct GradualCheck {
  std::optional<Edge> violation;
  bool ok() const noexcept { return !violation.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
};

GradualCheck is_gradually_varied(const DomainGraph& g, std::span<const int> levels);

}  // namespace gvf

#endif  // GVF_LEVEL_GRAPH_HPP
