#include "gvf/manifold.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "gvf/real_fit.hpp"

namespace gvf {

std::string_view to_string(ElementSpace space) {
  return space == ElementSpace::vertex ? "vertex" : "cell";
}

ElementSpace parse_space(std::string_view name) {
  if (name == "vertex") return ElementSpace::vertex;
  if (name == "cell") return ElementSpace::cell;
  throw input_error("unknown element space '" + std::string(name) + "'");
}

std::string_view to_string(MeshErrc code) {
  switch (code) {
    case MeshErrc::malformed_header: return "malformed header";
    case MeshErrc::malformed_record: return "malformed record";
    case MeshErrc::index_out_of_range: return "index out of range";
    case MeshErrc::degenerate_face: return "degenerate face";
    case MeshErrc::non_manifold_edge: return "non-manifold edge";
    case MeshErrc::disconnected_vertex_graph: return "disconnected vertex graph";
    case MeshErrc::disconnected_cell_graph: return "disconnected cell graph";
    case MeshErrc::empty_mesh: return "empty mesh";
  }
  return "mesh error";
}

MeshError::MeshError(MeshErrc code, const std::string& message)
    : Error(ErrorKind::input, std::string(to_string(code)) + ": " + message), code_(code) {}

// =============================================================================
// TriMesh

struct TriMesh::Topology {
  std::size_t edges;
  std::size_t boundary;
  DomainGraph vertex_graph;
  DomainGraph cell_graph;
};

TriMesh::Topology TriMesh::analyze(std::size_t vertex_count, const std::vector<Triangle>& faces) {
  if (vertex_count == 0 || faces.empty()) {
    throw MeshError(MeshErrc::empty_mesh, "mesh needs at least one vertex and one face");
  }
  const auto nv = static_cast<VertexId>(vertex_count);
  struct HalfEdge {
    VertexId lo, hi;
    VertexId face;
  };
  std::vector<HalfEdge> half;
  half.reserve(faces.size() * 3);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& t = faces[f];
    for (VertexId v : t) {
      if (v < 0 || v >= nv) {
        throw MeshError(MeshErrc::index_out_of_range,
                        "face " + std::to_string(f) + " references vertex " + std::to_string(v) +
                            " of " + std::to_string(nv));
      }
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw MeshError(MeshErrc::degenerate_face, "face " + std::to_string(f) + " repeats a vertex");
    }
    for (int k = 0; k < 3; ++k) {
      const VertexId a = t[k];
      const VertexId b = t[(k + 1) % 3];
      half.push_back({std::min(a, b), std::max(a, b), static_cast<VertexId>(f)});
    }
  }
  std::sort(half.begin(), half.end(), [](const HalfEdge& l, const HalfEdge& r) {
    if (l.lo != r.lo) return l.lo < r.lo;
    if (l.hi != r.hi) return l.hi < r.hi;
    return l.face < r.face;
  });

  std::vector<Edge> vertex_edges;
  std::vector<Edge> cell_edges;
  std::size_t boundary = 0;
  for (std::size_t i = 0; i < half.size();) {
    std::size_t j = i;
    while (j < half.size() && half[j].lo == half[i].lo && half[j].hi == half[i].hi) ++j;
    if (j - i > 2) {
      throw MeshError(MeshErrc::non_manifold_edge,
                      "edge (" + std::to_string(half[i].lo) + ", " + std::to_string(half[i].hi) +
                          ") is shared by " + std::to_string(j - i) + " faces");
    }
    vertex_edges.push_back({half[i].lo, half[i].hi});
    if (j - i == 2) {
      if (half[i].face == half[i + 1].face) {
        throw MeshError(MeshErrc::degenerate_face,
                        "face " + std::to_string(half[i].face) + " uses an edge twice");
      }
      cell_edges.push_back({half[i].face, half[i + 1].face});
    } else {
      ++boundary;
    }
    i = j;
  }

  const auto nf = static_cast<int>(faces.size());
  if (const int c = count_components(nv, vertex_edges); c != 1) {
    throw MeshError(MeshErrc::disconnected_vertex_graph,
                    std::to_string(c) + " components (unreferenced vertices count as components)");
  }
  if (const int c = count_components(nf, cell_edges); c != 1) {
    throw MeshError(MeshErrc::disconnected_cell_graph, std::to_string(c) + " components");
  }
  return {vertex_edges.size(), boundary,
          DomainGraph::from_edges(nv, vertex_edges, GraphKind::mesh_vertex),
          DomainGraph::from_edges(nf, cell_edges, GraphKind::mesh_cell)};
}

TriMesh::TriMesh(std::vector<Vec3> vertices, std::vector<Triangle> faces)
    : TriMesh(analyze(vertices.size(), faces), std::move(vertices), std::move(faces)) {}

TriMesh::TriMesh(Topology&& topology, std::vector<Vec3>&& vertices, std::vector<Triangle>&& faces)
    : vertices_(std::move(vertices)),
      faces_(std::move(faces)),
      edge_count_(topology.edges),
      boundary_edges_(topology.boundary),
      vertex_graph_(std::move(topology.vertex_graph)),
      cell_graph_(std::move(topology.cell_graph)) {}

// =============================================================================
// Algorithms

namespace {

MeshField<int> int_gvf(const TriMesh& mesh, ElementSpace space, const LevelGuidingSet& guides,
                       int level_count, EnvelopePolicy policy) {
  auto field = gvf_extend(mesh.graph(space), guides, level_count, policy);
  return {space, std::move(field.values)};
}

MeshField<double> real_gvf(const TriMesh& mesh, ElementSpace space, const RealGuidingSet& guides,
                           EnvelopePolicy policy) {
  auto fit = fit_real_gvf(mesh.graph(space), guides, policy);
  return {space, std::move(fit.field)};
}

}  // namespace

MeshField<int> manifold_int_gvf(const TriMesh& mesh, const LevelGuidingSet& guides,
                                int level_count, EnvelopePolicy policy) {
  return int_gvf(mesh, ElementSpace::vertex, guides, level_count, policy);
}

MeshField<double> manifold_real_gvf(const TriMesh& mesh, const RealGuidingSet& guides,
                                    EnvelopePolicy policy) {
  return real_gvf(mesh, ElementSpace::vertex, guides, policy);
}

MeshField<int> manifold_cell_int_gvf(const TriMesh& mesh, const LevelGuidingSet& guides,
                                     int level_count, EnvelopePolicy policy) {
  return int_gvf(mesh, ElementSpace::cell, guides, level_count, policy);
}

MeshField<double> manifold_cell_real_gvf(const TriMesh& mesh, const RealGuidingSet& guides,
                                         EnvelopePolicy policy) {
  return real_gvf(mesh, ElementSpace::cell, guides, policy);
}

HarmonicResult harmonic_fit(const DomainGraph& g, std::span<const double> init,
                            const RealGuidingSet& guides, int iterations,
                            kernels::Backend backend) {
  if (static_cast<int>(init.size()) != g.vertex_count()) {
    throw input_error("initial field has " + std::to_string(init.size()) + " values for " +
                      std::to_string(g.vertex_count()) + " elements");
  }
  if (iterations < 0) throw input_error("iteration count must be >= 0");
  guides.validate(g);

  std::vector<double> field(init.begin(), init.end());
  std::vector<std::uint8_t> fixed(field.size(), 0);
  for (const auto& e : guides) {
    fixed[e.vertex] = 1;
    field[e.vertex] = e.value;
  }
  std::vector<double> next(field.size());
  std::vector<double> trace;
  trace.reserve(iterations);
  for (int s = 0; s < iterations; ++s) {
    trace.push_back(kernels::umbrella_sweep(backend, g, fixed, field, next));
    field.swap(next);
  }
  return {std::move(field), std::move(trace)};
}

MeshHarmonicResult harmonic_fit(const TriMesh& mesh, const MeshField<double>& init,
                                const RealGuidingSet& guides, int iterations,
                                kernels::Backend backend) {
  auto result = harmonic_fit(mesh.graph(init.space), init.values, guides, iterations, backend);
  return {{init.space, std::move(result.values)}, std::move(result.trace)};
}

std::vector<double> face_display_values(const TriMesh& mesh, const MeshField<double>& field) {
  if (field.space != ElementSpace::vertex) {
    throw input_error("face display values need a vertex field");
  }
  if (field.values.size() != mesh.vertices().size()) {
    throw input_error("vertex field length does not match the mesh");
  }
  std::vector<double> out;
  out.reserve(mesh.faces().size());
  for (const auto& t : mesh.faces()) {
    out.push_back((field.values[t[0]] + field.values[t[1]] + field.values[t[2]]) / 3.0);
  }
  return out;
}

}  // namespace gvf
