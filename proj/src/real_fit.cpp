#include "gvf/real_fit.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace gvf {

namespace {

struct Quantized {
  LevelScale scale;
  LevelGuidingSet guides;
};

Quantized quantize(const RealGuidingSet& guides, double lo, double hi, double delta) {
  // Guard against span/delta landing a hair above an integer.
  const double steps = std::ceil((hi - lo) / delta - 1e-9);
  int count = static_cast<int>(std::max(0.0, steps)) + 1;

  const LevelScale provisional(lo, delta, count + 1);
  std::vector<LevelGuidingSet::entry_type> entries;
  entries.reserve(guides.size());
  for (const auto& e : guides) {
    const int k = provisional.index(e.value);
    count = std::max(count, k);
    entries.push_back({e.vertex, k});
  }
  return {LevelScale(lo, delta, count), LevelGuidingSet(std::move(entries))};
}

}  // namespace

ScaleDerivation derive_scale(const DomainGraph& g, const RealGuidingSet& guides,
                             kernels::Backend backend) {
  guides.validate(g);
  const auto vertices = guides.vertices();
  const auto dist = kernels::guide_distances(backend, g, vertices);
  const std::size_t m = guides.size();

  double lo = guides[0].value;
  double hi = guides[0].value;
  double max_slope = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    lo = std::min(lo, guides[a].value);
    hi = std::max(hi, guides[a].value);
    for (std::size_t b = a + 1; b < m; ++b) {
      const double slope = std::abs(guides[a].value - guides[b].value) / dist[a * m + b];
      max_slope = std::max(max_slope, slope);
    }
  }

  double delta = hi > lo ? max_slope : 1.0;
  for (int step = 0; step <= kMaxInflationSteps; ++step) {
    auto q = quantize(guides, lo, hi, delta);
    if (check_feasible(q.guides, dist).feasible) {
      return {q.scale, max_slope, step, std::move(q.guides)};
    }
    delta *= kInflation;
  }
  // Exact nearest rounding never breaks the condition; only floating-point
  // ties do, and one or two inflations clear them.
  assert(false && "scale inflation bound exceeded");
  throw Error(ErrorKind::internal, "scale inflation bound exceeded");
}

RealFit fit_real_gvf(const DomainGraph& g, const RealGuidingSet& guides, EnvelopePolicy policy,
                     kernels::Backend backend) {
  auto derivation = derive_scale(g, guides, backend);
  auto levels = gvf_extend(g, derivation.quantized, derivation.scale.count(), policy, backend);

  double lo = guides[0].value;
  double hi = guides[0].value;
  for (const auto& e : guides) {
    lo = std::min(lo, e.value);
    hi = std::max(hi, e.value);
  }

  RealField field(levels.values.size());
  for (std::size_t v = 0; v < field.size(); ++v) {
    field[v] = std::clamp(derivation.scale.value(levels.values[v]), lo, hi);
  }
  for (const auto& e : guides) field[e.vertex] = e.value;

  return {std::move(field), std::move(levels), std::move(derivation)};
}

}  // namespace gvf
