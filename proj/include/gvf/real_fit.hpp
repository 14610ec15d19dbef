#ifndef GVF_REAL_FIT_HPP
#define GVF_REAL_FIT_HPP

#include "gvf/gvf_core.hpp"
#include "gvf/level_graph.hpp"

namespace gvf {

/// Level scale derived from real samples by the maximum-slope rule, together
/// with the quantized guiding set it produces.
struct ScaleDerivation {
  LevelScale scale;
  double max_slope = 0.0;    // max |f(x) - f(y)| / d(x, y) over guiding pairs
  int inflation_steps = 0;   // times delta was multiplied by kInflation
  LevelGuidingSet quantized;
};

inline constexpr double kInflation = 1.25;
inline constexpr int kMaxInflationSteps = 64;

/// Spacing starts at the largest pairwise slope (1.0 when all samples are
/// equal), origin at the smallest sample, and samples snap to the nearest
/// level. If rounding breaks the distance condition the spacing is inflated
/// by kInflation until the quantized set is feasible.
ScaleDerivation derive_scale(const DomainGraph& g, const RealGuidingSet& guides,
                             kernels::Backend backend = kernels::Backend::openmp);

struct RealFit {
  RealField field;         // dequantized, range-clamped, guiding values snapped
  LevelField levels;       // the underlying gradually varied level field
  ScaleDerivation derivation;
};

/// Real-valued gradually varied fit: derive_scale, extend the quantized
/// guiding set, map levels back to values, clamp into [min f, max f], then
/// restore every guiding vertex to its exact sample value.
RealFit fit_real_gvf(const DomainGraph& g, const RealGuidingSet& guides,
                     EnvelopePolicy policy = EnvelopePolicy::midpoint,
                     kernels::Backend backend = kernels::Backend::openmp);

}  // namespace gvf

#endif  // GVF_REAL_FIT_HPP
