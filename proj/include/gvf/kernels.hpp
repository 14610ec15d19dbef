#ifndef GVF_KERNELS_HPP
#define GVF_KERNELS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gvf/level_graph.hpp"

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version; both must produce bit-identical results, which the test
// suite checks. Public entry points take a Backend and dispatch.

namespace gvf::kernels {

enum class Backend { serial, openmp };

/// Lower/upper gradual-variation envelopes, each clamped to 1..level_count:
///   lower(x) = max_j clamp(i_j - d(x, x_j)),  upper(x) = min_j clamp(i_j + d(x, x_j)).
struct Envelopes {
  std::vector<int> lower;
  std::vector<int> upper;
};

Envelopes envelopes(Backend backend, const DomainGraph& g, const LevelGuidingSet& guides,
                    int level_count);

/// |J| x |J| matrix (row-major) of hop distances between guiding vertices.
std::vector<int> guide_distances(Backend backend, const DomainGraph& g,
                                 std::span<const VertexId> guides);

/// One damped-Jacobi sweep of the graph Laplacian on free vertices:
///   out[v] = in[v] + lambda * sum_{w ~ v} (in[w] - in[v]),
/// fixed vertices copied through. Returns the largest |out[v] - in[v]|.
double relax_sweep(Backend backend, const DomainGraph& g, std::span<const std::uint8_t> fixed,
                   double lambda, std::span<const double> in, std::span<double> out);

/// One umbrella (neighbor-mean) Jacobi sweep on free vertices. The mean is
/// clamped into the neighbor range so round-off cannot leave it.
double umbrella_sweep(Backend backend, const DomainGraph& g, std::span<const std::uint8_t> fixed,
                      std::span<const double> in, std::span<double> out);

/// Sum over edges of (F(a) - F(b))^2, accumulated in ascending edge order.
double dirichlet_energy(const DomainGraph& g, std::span<const double> field);

namespace serial {
Envelopes envelopes(const DomainGraph& g, const LevelGuidingSet& guides, int level_count);
std::vector<int> guide_distances(const DomainGraph& g, std::span<const VertexId> guides);
double relax_sweep(const DomainGraph& g, std::span<const std::uint8_t> fixed, double lambda,
                   std::span<const double> in, std::span<double> out);
double umbrella_sweep(const DomainGraph& g, std::span<const std::uint8_t> fixed,
                      std::span<const double> in, std::span<double> out);
}  // namespace serial

namespace openmp {
Envelopes envelopes(const DomainGraph& g, const LevelGuidingSet& guides, int level_count);
std::vector<int> guide_distances(const DomainGraph& g, std::span<const VertexId> guides);
double relax_sweep(const DomainGraph& g, std::span<const std::uint8_t> fixed, double lambda,
                   std::span<const double> in, std::span<double> out);
double umbrella_sweep(const DomainGraph& g, std::span<const std::uint8_t> fixed,
                      std::span<const double> in, std::span<double> out);
}  // namespace openmp

}  // namespace gvf::kernels

#endif  // GVF_KERNELS_HPP
