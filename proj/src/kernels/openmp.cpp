#include <omp.h>

#include <algorithm>
#include <cmath>

#include "gvf/kernels.hpp"

namespace gvf::kernels::openmp {

// Each thread folds a subset of guides into private envelopes; the merge uses
// max/min, so the result does not depend on which thread saw which guide.
Envelopes envelopes(const DomainGraph& g, const LevelGuidingSet& guides, int level_count) {
  const int n = g.vertex_count();
  const int m = static_cast<int>(guides.size());
  Envelopes env{std::vector<int>(n, 1), std::vector<int>(n, level_count)};

#pragma omp parallel
  {
    std::vector<int> lower(n, 1);
    std::vector<int> upper(n, level_count);
#pragma omp for schedule(dynamic, 1) nowait
    for (int j = 0; j < m; ++j) {
      const VertexId source[] = {guides[j].vertex};
      const int level = guides[j].value;
      const auto dist = multi_source_distances(g, source);
      for (int v = 0; v < n; ++v) {
        lower[v] = std::max(lower[v], std::clamp(level - dist[v], 1, level_count));
        upper[v] = std::min(upper[v], std::clamp(level + dist[v], 1, level_count));
      }
    }
#pragma omp critical(gvf_envelope_merge)
    for (int v = 0; v < n; ++v) {
      env.lower[v] = std::max(env.lower[v], lower[v]);
      env.upper[v] = std::min(env.upper[v], upper[v]);
    }
  }
  return env;
}

std::vector<int> guide_distances(const DomainGraph& g, std::span<const VertexId> guides) {
  const int m = static_cast<int>(guides.size());
  std::vector<int> out(static_cast<std::size_t>(m) * m, 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int r = 0; r < m; ++r) {
    const VertexId source[] = {guides[r]};
    const auto dist = multi_source_distances(g, source);
    for (int c = 0; c < m; ++c) out[static_cast<std::size_t>(r) * m + c] = dist[guides[c]];
  }
  return out;
}

double relax_sweep(const DomainGraph& g, std::span<const std::uint8_t> fixed, double lambda,
                   std::span<const double> in, std::span<double> out) {
  const int n = g.vertex_count();
  double max_update = 0.0;
#pragma omp parallel for schedule(static) reduction(max : max_update)
  for (int v = 0; v < n; ++v) {
    if (fixed[v]) {
      out[v] = in[v];
      continue;
    }
    double lap = 0.0;
    for (VertexId w : g.neighbors(v)) lap += in[w] - in[v];
    out[v] = in[v] + lambda * lap;
    max_update = std::max(max_update, std::abs(out[v] - in[v]));
  }
  return max_update;
}

double umbrella_sweep(const DomainGraph& g, std::span<const std::uint8_t> fixed,
                      std::span<const double> in, std::span<double> out) {
  const int n = g.vertex_count();
  double max_update = 0.0;
#pragma omp parallel for schedule(static) reduction(max : max_update)
  for (int v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    if (fixed[v] || nbrs.empty()) {
      out[v] = in[v];
      continue;
    }
    double sum = 0.0;
    double lo = in[nbrs[0]];
    double hi = lo;
    for (VertexId w : nbrs) {
      sum += in[w];
      lo = std::min(lo, in[w]);
      hi = std::max(hi, in[w]);
    }
    out[v] = std::clamp(sum / static_cast<double>(nbrs.size()), lo, hi);
    max_update = std::max(max_update, std::abs(out[v] - in[v]));
  }
  return max_update;
}

}  // namespace gvf::kernels::openmp
