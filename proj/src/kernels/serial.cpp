#include <algorithm>
#include <cmath>

#include "gvf/kernels.hpp"

namespace gvf::kernels::serial {

Envelopes envelopes(const DomainGraph& g, const LevelGuidingSet& guides, int level_count) {
  const int n = g.vertex_count();
  Envelopes env{std::vector<int>(n, 1), std::vector<int>(n, level_count)};
  for (const auto& guide : guides) {
    const VertexId source[] = {guide.vertex};
    const auto dist = multi_source_distances(g, source);
    for (int v = 0; v < n; ++v) {
      env.lower[v] = std::max(env.lower[v], std::clamp(guide.value - dist[v], 1, level_count));
      env.upper[v] = std::min(env.upper[v], std::clamp(guide.value + dist[v], 1, level_count));
    }
  }
  return env;
}

std::vector<int> guide_distances(const DomainGraph& g, std::span<const VertexId> guides) {
  const std::size_t m = guides.size();
  std::vector<int> out(m * m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    const VertexId source[] = {guides[r]};
    const auto dist = multi_source_distances(g, source);
    for (std::size_t c = 0; c < m; ++c) out[r * m + c] = dist[guides[c]];
  }
  return out;
}

double relax_sweep(const DomainGraph& g, std::span<const std::uint8_t> fixed, double lambda,
                   std::span<const double> in, std::span<double> out) {
  double max_update = 0.0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
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
  double max_update = 0.0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
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

}  // namespace gvf::kernels::serial
