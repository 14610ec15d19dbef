#ifndef GVF_MANIFOLD_HPP
#define GVF_MANIFOLD_HPP

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "gvf/gvf_core.hpp"
#include "gvf/kernels.hpp"
#include "gvf/level_graph.hpp"

namespace gvf {

using Vec3 = std::array<double, 3>;
using Triangle = std::array<VertexId, 3>;

/// Point space (mesh vertices) or cell space (triangles, adjacent when they
/// share an edge).
enum class ElementSpace { vertex, cell };

std::string_view to_string(ElementSpace space);
ElementSpace parse_space(std::string_view name);

enum class MeshErrc {
  malformed_header,
  malformed_record,
  index_out_of_range,
  degenerate_face,
  non_manifold_edge,
  disconnected_vertex_graph,
  disconnected_cell_graph,
  empty_mesh,
};

std::string_view to_string(MeshErrc code);

class MeshError : public Error {
 public:
  MeshError(MeshErrc code, const std::string& message);
  MeshErrc code() const noexcept { return code_; }

 private:
  MeshErrc code_;
};

/// Triangulated 2-manifold (boundary allowed) with its vertex graph and its
/// cell (dual) graph. Immutable after construction.
class TriMesh {
 public:
  /// Throws MeshError on out-of-range or repeated face indices, edges shared
  /// by more than two faces, or a disconnected vertex or cell graph.
  TriMesh(std::vector<Vec3> vertices, std::vector<Triangle> faces);

  const std::vector<Vec3>& vertices() const noexcept { return vertices_; }
  const std::vector<Triangle>& faces() const noexcept { return faces_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t boundary_edge_count() const noexcept { return boundary_edges_; }

  const DomainGraph& vertex_graph() const noexcept { return vertex_graph_; }
  const DomainGraph& cell_graph() const noexcept { return cell_graph_; }
  const DomainGraph& graph(ElementSpace space) const noexcept {
    return space == ElementSpace::vertex ? vertex_graph_ : cell_graph_;
  }
  int element_count(ElementSpace space) const noexcept { return graph(space).vertex_count(); }

 private:
  struct Topology;
  TriMesh(Topology&& topology, std::vector<Vec3>&& vertices, std::vector<Triangle>&& faces);
  static Topology analyze(std::size_t vertex_count, const std::vector<Triangle>& faces);

  std::vector<Vec3> vertices_;
  std::vector<Triangle> faces_;
  std::size_t edge_count_ = 0;
  std::size_t boundary_edges_ = 0;
  DomainGraph vertex_graph_;
  DomainGraph cell_graph_;
};

template <class T>
struct MeshField {
  ElementSpace space = ElementSpace::vertex;
  std::vector<T> values;
};

// The four gradually varied fitting algorithms. Integer variants throw
// InfeasibleError when the guiding levels break the distance condition; real
// variants derive their own level scale and always succeed.

MeshField<int> manifold_int_gvf(const TriMesh& mesh, const LevelGuidingSet& guides,
                                int level_count, EnvelopePolicy policy = EnvelopePolicy::midpoint);
MeshField<double> manifold_real_gvf(const TriMesh& mesh, const RealGuidingSet& guides,
                                    EnvelopePolicy policy = EnvelopePolicy::midpoint);
MeshField<int> manifold_cell_int_gvf(const TriMesh& mesh, const LevelGuidingSet& guides,
                                     int level_count,
                                     EnvelopePolicy policy = EnvelopePolicy::midpoint);
MeshField<double> manifold_cell_real_gvf(const TriMesh& mesh, const RealGuidingSet& guides,
                                         EnvelopePolicy policy = EnvelopePolicy::midpoint);

inline constexpr int kDefaultHarmonicIterations = 100;

struct HarmonicResult {
  std::vector<double> values;
  std::vector<double> trace;  // max update per sweep
};

/// Umbrella-operator Jacobi: each non-guiding element takes the unweighted
/// mean of its neighbors, guiding elements stay at their sample values.
/// Runs exactly `iterations` sweeps.
HarmonicResult harmonic_fit(const DomainGraph& g, std::span<const double> init,
                            const RealGuidingSet& guides,
                            int iterations = kDefaultHarmonicIterations,
                            kernels::Backend backend = kernels::Backend::openmp);

struct MeshHarmonicResult {
  MeshField<double> field;
  std::vector<double> trace;
};

MeshHarmonicResult harmonic_fit(const TriMesh& mesh, const MeshField<double>& init,
                                const RealGuidingSet& guides,
                                int iterations = kDefaultHarmonicIterations,
                                kernels::Backend backend = kernels::Backend::openmp);

/// Per-face mean of the three vertex values.
std::vector<double> face_display_values(const TriMesh& mesh, const MeshField<double>& field);

}  // namespace gvf

#endif  // GVF_MANIFOLD_HPP
