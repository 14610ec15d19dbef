#ifndef GVF_SMOOTHING_HPP
#define GVF_SMOOTHING_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gvf/kernels.hpp"
#include "gvf/level_graph.hpp"
#include "gvf/real_fit.hpp"

namespace gvf {

/// Constrained relaxation settings.
///
/// `order` is the number of relaxation passes (0 leaves the field as is);
/// each pass runs up to `iterations` damped-Jacobi sweeps and the whole run
/// stops early once a sweep moves no cell by more than `tolerance`.
/// `lambda` must lie in (0, 0.25], the stability bound of the 5-point stencil.
struct SmoothConfig {
  int order = 1;
  int iterations = 100;
  double lambda = 0.2;
  double tolerance = 1e-8;
  kernels::Backend backend = kernels::Backend::openmp;

  void validate() const;
};

/// Per-cell partial derivatives, in value per cell width.
struct GradientRaster {
  int width = 0;
  int height = 0;
  std::vector<double> dx;
  std::vector<double> dy;
};

/// Central differences inside, one-sided first differences on the border.
/// An axis of length 1 has zero derivative.
GradientRaster partial_derivatives(const DomainGraph& grid, std::span<const double> field);

struct SmoothResult {
  RealField field;
  int sweeps = 0;
  double residual = 0.0;  // max update of the last sweep
};

/// Called after every sweep with the 1-based sweep number and the new field.
using SweepObserver = std::function<void(int, std::span<const double>)>;

/// Damped-Jacobi heat flow F <- F + lambda * Lap(F) on non-guiding cells,
/// guiding cells pinned to their sample values. On a 4-neighbor grid this
/// is the 5-point Laplacian with reflecting borders.
SmoothResult smooth_constrained(const DomainGraph& grid, RealField field,
                                const RealGuidingSet& guides, const SmoothConfig& cfg,
                                const SweepObserver& observer = {});

struct MultilevelResult {
  RealField field;
  ScaleDerivation derivation;        // from the coarsest level
  std::vector<int> sweeps_per_level;  // coarsest first
  int fine_sweeps = 0;
  double residual = 0.0;
  std::vector<std::string> warnings;  // guiding collisions on coarse grids
};

/// Coarse-to-fine fit: injection-decimate the grid `levels - 1` times, fit
/// and smooth on the coarsest grid, then bilinearly prolong, re-pin the
/// guiding cells and smooth again at each finer level.
MultilevelResult multilevel_fit(const DomainGraph& grid, const RealGuidingSet& guides, int levels,
                                const SmoothConfig& cfg,
                                EnvelopePolicy policy = EnvelopePolicy::midpoint);

}  // namespace gvf

#endif  // GVF_SMOOTHING_HPP
