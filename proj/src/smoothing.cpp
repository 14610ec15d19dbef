#include "gvf/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace gvf {

void SmoothConfig::validate() const {
  if (!(lambda > 0.0 && lambda <= 0.25)) {
    throw input_error("relaxation step lambda=" + std::to_string(lambda) +
                      " outside (0, 0.25]");
  }
  if (order < 0) throw input_error("smoothing order must be >= 0");
  if (iterations < 1) throw input_error("iterations per pass must be positive");
  if (!(tolerance >= 0.0)) throw input_error("tolerance must be >= 0");
}

namespace {

GridShape require_grid(const DomainGraph& g) {
  if (g.kind() != GraphKind::grid || !g.grid_shape()) {
    throw input_error("operation requires a grid domain");
  }
  return *g.grid_shape();
}

}  // namespace

GradientRaster partial_derivatives(const DomainGraph& grid, std::span<const double> field) {
  const auto [w, h] = require_grid(grid);
  if (static_cast<int>(field.size()) != w * h) throw input_error("field does not match the grid");

  GradientRaster out{w, h, std::vector<double>(field.size(), 0.0),
                     std::vector<double>(field.size(), 0.0)};
  auto at = [&](int x, int y) { return field[static_cast<std::size_t>(y) * w + x]; };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t c = static_cast<std::size_t>(y) * w + x;
      if (w > 1) {
        if (x == 0) out.dx[c] = at(1, y) - at(0, y);
        else if (x == w - 1) out.dx[c] = at(w - 1, y) - at(w - 2, y);
        else out.dx[c] = 0.5 * (at(x + 1, y) - at(x - 1, y));
      }
      if (h > 1) {
        if (y == 0) out.dy[c] = at(x, 1) - at(x, 0);
        else if (y == h - 1) out.dy[c] = at(x, h - 1) - at(x, h - 2);
        else out.dy[c] = 0.5 * (at(x, y + 1) - at(x, y - 1));
      }
    }
  }
  return out;
}

SmoothResult smooth_constrained(const DomainGraph& grid, RealField field,
                                const RealGuidingSet& guides, const SmoothConfig& cfg,
                                const SweepObserver& observer) {
  require_grid(grid);
  cfg.validate();
  guides.validate(grid);
  if (static_cast<int>(field.size()) != grid.vertex_count()) {
    throw input_error("field does not match the grid");
  }

  std::vector<std::uint8_t> fixed(field.size(), 0);
  for (const auto& e : guides) {
    fixed[e.vertex] = 1;
    field[e.vertex] = e.value;
  }

  SmoothResult result;
  RealField next(field.size());
  const long long budget = static_cast<long long>(cfg.order) * cfg.iterations;
  for (long long s = 0; s < budget; ++s) {
    result.residual = kernels::relax_sweep(cfg.backend, grid, fixed, cfg.lambda, field, next);
    field.swap(next);
    ++result.sweeps;
    if (observer) observer(result.sweeps, field);
    if (result.residual < cfg.tolerance) break;
  }
  result.field = std::move(field);
  return result;
}

namespace {

struct CoarseLevel {
  DomainGraph grid;
  RealGuidingSet guides;
};

/// Injection: coarse cell (i, j) sits on fine cell (2i, 2j). A fine cell maps
/// to its nearest coarse cell, ties toward the lower index.
CoarseLevel decimate(const DomainGraph& fine, const RealGuidingSet& guides,
                     std::vector<std::string>& warnings) {
  const auto [w, h] = *fine.grid_shape();
  const int cw = (w + 1) / 2;
  const int ch = (h + 1) / 2;
  std::vector<RealGuidingSet::entry_type> entries;
  std::vector<VertexId> origin;  // fine id behind each coarse entry
  std::unordered_map<VertexId, std::size_t> seen;
  for (const auto& e : guides) {
    const int x = e.vertex % w;
    const int y = e.vertex / w;
    const VertexId coarse = (y / 2) * cw + (x / 2);
    if (auto [it, inserted] = seen.try_emplace(coarse, entries.size()); inserted) {
      entries.push_back({coarse, e.value});
      origin.push_back(e.vertex);
    } else if (entries[it->second].value != e.value) {
      warnings.push_back("guiding cell " + std::to_string(e.vertex) + " collides with cell " +
                         std::to_string(origin[it->second]) + " on a " +
                         std::to_string(cw) + "x" + std::to_string(ch) + " grid; kept the first");
    }
  }
  return {build_grid(cw, ch), RealGuidingSet(std::move(entries))};
}

RealField prolong(std::span<const double> coarse, int cw, int ch, int w, int h) {
  RealField fine(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    const double cy = 0.5 * y;
    const int y0 = std::min(static_cast<int>(cy), ch - 1);
    const int y1 = std::min(y0 + 1, ch - 1);
    const double ty = cy - y0;
    for (int x = 0; x < w; ++x) {
      const double cx = 0.5 * x;
      const int x0 = std::min(static_cast<int>(cx), cw - 1);
      const int x1 = std::min(x0 + 1, cw - 1);
      const double tx = cx - x0;
      const auto c = [&](int i, int j) { return coarse[static_cast<std::size_t>(j) * cw + i]; };
      const double top = (1.0 - tx) * c(x0, y0) + tx * c(x1, y0);
      const double bottom = (1.0 - tx) * c(x0, y1) + tx * c(x1, y1);
      fine[static_cast<std::size_t>(y) * w + x] = (1.0 - ty) * top + ty * bottom;
    }
  }
  return fine;
}

}  // namespace

MultilevelResult multilevel_fit(const DomainGraph& grid, const RealGuidingSet& guides, int levels,
                                const SmoothConfig& cfg, EnvelopePolicy policy) {
  const auto [w, h] = require_grid(grid);
  cfg.validate();
  guides.validate(grid);
  if (levels < 1) throw input_error("multilevel fit needs at least one level");
  if (levels > 30 || std::min(w, h) < (1 << (levels - 1))) {
    throw input_error(std::to_string(levels) + " levels is too many for a " + std::to_string(w) +
                      "x" + std::to_string(h) + " grid");
  }

  std::vector<std::string> warnings;
  std::vector<CoarseLevel> pyramid;
  pyramid.push_back({grid, guides});
  for (int l = 1; l < levels; ++l) {
    pyramid.push_back(decimate(pyramid.back().grid, pyramid.back().guides, warnings));
  }

  auto fit = fit_real_gvf(pyramid.back().grid, pyramid.back().guides, policy, cfg.backend);
  RealField field = std::move(fit.field);
  std::vector<int> sweeps;
  SmoothResult last;
  for (int l = levels - 1; l >= 0; --l) {
    const auto& level = pyramid[l];
    if (l != levels - 1) {
      const auto coarse = *pyramid[l + 1].grid.grid_shape();
      const auto fine = *level.grid.grid_shape();
      field = prolong(field, coarse.width, coarse.height, fine.width, fine.height);
    }
    last = smooth_constrained(level.grid, std::move(field), level.guides, cfg);
    field = std::move(last.field);
    sweeps.push_back(last.sweeps);
  }
  return {std::move(field), std::move(fit.derivation), std::move(sweeps), last.sweeps,
          last.residual, std::move(warnings)};
}

}  // namespace gvf
