#include "gvf/kernels.hpp"

namespace gvf::kernels {

namespace {

void check_sizes(const DomainGraph& g, std::span<const std::uint8_t> fixed,
                 std::span<const double> in, std::span<double> out) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (fixed.size() != n || in.size() != n || out.size() != n) {
    throw input_error("sweep buffers do not match the graph size");
  }
}

}  // namespace

Envelopes envelopes(Backend backend, const DomainGraph& g, const LevelGuidingSet& guides,
                    int level_count) {
  return backend == Backend::serial ? serial::envelopes(g, guides, level_count)
                                    : openmp::envelopes(g, guides, level_count);
}

std::vector<int> guide_distances(Backend backend, const DomainGraph& g,
                                 std::span<const VertexId> guides) {
  return backend == Backend::serial ? serial::guide_distances(g, guides)
                                    : openmp::guide_distances(g, guides);
}

double relax_sweep(Backend backend, const DomainGraph& g, std::span<const std::uint8_t> fixed,
                   double lambda, std::span<const double> in, std::span<double> out) {
  check_sizes(g, fixed, in, out);
  return backend == Backend::serial ? serial::relax_sweep(g, fixed, lambda, in, out)
                                    : openmp::relax_sweep(g, fixed, lambda, in, out);
}

double umbrella_sweep(Backend backend, const DomainGraph& g, std::span<const std::uint8_t> fixed,
                      std::span<const double> in, std::span<double> out) {
  check_sizes(g, fixed, in, out);
  return backend == Backend::serial ? serial::umbrella_sweep(g, fixed, in, out)
                                    : openmp::umbrella_sweep(g, fixed, in, out);
}

double dirichlet_energy(const DomainGraph& g, std::span<const double> field) {
  double energy = 0.0;
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (VertexId b : g.neighbors(a)) {
      if (a < b) {
        const double diff = field[a] - field[b];
        energy += diff * diff;
      }
    }
  }
  return energy;
}

}  // namespace gvf::kernels
