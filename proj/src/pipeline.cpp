#include "gvf/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_map>

#include "text_util.hpp"

namespace gvf {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::input,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

// =============================================================================
// CSV samples

namespace {

std::string normalized_header(std::string_view line) {
  std::string out;
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

/// Numeric rows of exactly `arity` fields. A first row equal to `header` is
/// skipped.
std::vector<std::pair<std::size_t, std::vector<std::string_view>>> numeric_rows(
    std::string_view input, std::size_t arity, std::string_view header) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> rows;
  bool first = true;
  std::size_t line_no = 0;
  for (auto line : text::lines(input)) {
    ++line_no;
    const auto trimmed = text::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    if (first) {
      first = false;
      if (normalized_header(trimmed) == header) continue;
    }
    auto fields = text::split(trimmed, ',');
    if (fields.size() != arity) {
      throw ParseError(line_no, std::min(fields.size(), arity) + 1,
                       "expected " + std::to_string(arity) + " fields, found " +
                           std::to_string(fields.size()));
    }
    rows.emplace_back(line_no, std::move(fields));
  }
  if (rows.empty()) throw ParseError(line_no == 0 ? 1 : line_no, 1, "no samples in input");
  return rows;
}

double number_at(const std::vector<std::string_view>& fields, std::size_t col,
                 std::size_t line_no) {
  const auto v = text::parse_double(fields[col]);
  if (!v) {
    throw ParseError(line_no, col + 1,
                     "'" + std::string(text::trim(fields[col])) + "' is not a finite number");
  }
  return *v;
}

}  // namespace

std::vector<SamplePoint> parse_samples_csv(std::string_view input) {
  std::vector<SamplePoint> out;
  for (const auto& [line_no, fields] : numeric_rows(input, 3, "x,y,value")) {
    out.push_back({number_at(fields, 0, line_no), number_at(fields, 1, line_no),
                   number_at(fields, 2, line_no)});
  }
  return out;
}

std::vector<ElementSample> parse_element_samples_csv(std::string_view input) {
  std::vector<ElementSample> out;
  for (const auto& [line_no, fields] : numeric_rows(input, 2, "id,value")) {
    const auto id = text::parse_int(fields[0]);
    if (!id || *id < 0 || *id > (1LL << 30)) {
      throw ParseError(line_no, 1,
                       "'" + std::string(text::trim(fields[0])) + "' is not an element id");
    }
    out.push_back({*id, number_at(fields, 1, line_no)});
  }
  return out;
}

RealGuidingSet to_real_guiding(std::span<const ElementSample> samples) {
  std::vector<RealGuidingSet::entry_type> entries;
  for (const auto& s : samples) entries.push_back({static_cast<VertexId>(s.id), s.value});
  return RealGuidingSet(std::move(entries));
}

LevelGuidingSet to_level_guiding(std::span<const ElementSample> samples) {
  std::vector<LevelGuidingSet::entry_type> entries;
  for (const auto& s : samples) {
    if (s.value != std::floor(s.value) || s.value < 1 || s.value > (1 << 30)) {
      throw input_error("level value " + text::format_double(s.value) + " for element " +
                        std::to_string(s.id) + " is not a positive integer");
    }
    entries.push_back({static_cast<VertexId>(s.id), static_cast<int>(s.value)});
  }
  return LevelGuidingSet(std::move(entries));
}

// =============================================================================
// Resolution

Bounds sample_bounds(std::span<const SamplePoint> samples) {
  if (samples.empty()) throw input_error("no samples");
  Bounds b{samples[0].x, samples[0].y, samples[0].x, samples[0].y};
  for (const auto& s : samples) {
    b.xmin = std::min(b.xmin, s.x);
    b.xmax = std::max(b.xmax, s.x);
    b.ymin = std::min(b.ymin, s.y);
    b.ymax = std::max(b.ymax, s.y);
  }
  if (!(b.xmax > b.xmin)) {
    b.xmin -= 0.5;
    b.xmax += 0.5;
  }
  if (!(b.ymax > b.ymin)) {
    b.ymin -= 0.5;
    b.ymax += 0.5;
  }
  return b;
}

namespace {

int cell_index(double v, double lo, double hi, int cells) {
  const double t = (v - lo) / (hi - lo) * cells;
  return std::clamp(static_cast<int>(std::floor(t)), 0, cells - 1);
}

struct Placement {
  std::vector<RealGuidingSet::entry_type> entries;
  int merged = 0;
  std::optional<std::pair<std::size_t, std::size_t>> conflict;  // sample indices
};

Placement place(std::span<const SamplePoint> samples, const GridSpec& spec) {
  Placement p;
  std::unordered_map<VertexId, std::size_t> owner;  // cell -> sample index
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    const int col = cell_index(s.x, spec.bounds.xmin, spec.bounds.xmax, spec.width);
    const int row = cell_index(s.y, spec.bounds.ymin, spec.bounds.ymax, spec.height);
    const VertexId cell = row * spec.width + col;
    const auto [it, inserted] = owner.try_emplace(cell, i);
    if (inserted) {
      p.entries.push_back({cell, s.value});
    } else if (samples[it->second].value == s.value) {
      ++p.merged;
    } else {
      p.conflict = {it->second, i};
      return p;
    }
  }
  return p;
}

}  // namespace

Resolution determine_resolution(std::span<const SamplePoint> samples,
                                const std::optional<GridSpec>& requested) {
  if (samples.empty()) throw input_error("no samples to place");

  if (requested) {
    const auto& spec = *requested;
    const auto& b = spec.bounds;
    if (spec.width < 1 || spec.height < 1) throw input_error("grid dimensions must be positive");
    if (!(b.xmax > b.xmin) || !(b.ymax > b.ymin)) {
      throw input_error("grid bounds need xmax > xmin and ymax > ymin");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto& s = samples[i];
      if (s.x < b.xmin || s.x > b.xmax || s.y < b.ymin || s.y > b.ymax) {
        throw input_error("sample " + std::to_string(i + 1) + " at (" + text::format_double(s.x) +
                          ", " + text::format_double(s.y) + ") lies outside the grid bounds");
      }
    }
    auto p = place(samples, spec);
    if (p.conflict) {
      throw input_error("samples " + std::to_string(p.conflict->first + 1) + " and " +
                        std::to_string(p.conflict->second + 1) +
                        " fall in the same cell with different values");
    }
    return {spec, RealGuidingSet(std::move(p.entries)), p.merged, false};
  }

  const Bounds bounds = sample_bounds(samples);
  for (int n = kMinAutoResolution; n <= kMaxAutoResolution; n *= 2) {
    const GridSpec spec{n, n, bounds};
    auto p = place(samples, spec);
    if (!p.conflict) return {spec, RealGuidingSet(std::move(p.entries)), p.merged, true};
  }
  throw input_error("samples with different values still share a cell at " +
                    std::to_string(kMaxAutoResolution) + "x" +
                    std::to_string(kMaxAutoResolution));
}

// =============================================================================
// Pipeline

std::string RunReport::to_string() const {
  return "width=" + std::to_string(width) + " height=" + std::to_string(height) +
         " delta=" + text::format_double(delta) + " levels=" + std::to_string(level_count) +
         " inflation_steps=" + std::to_string(inflation_steps) +
         " sweeps=" + std::to_string(sweeps) + " fine_sweeps=" + std::to_string(fine_sweeps) +
         " residual=" + text::format_double(residual);
}

namespace {

template <class F>
auto step(const char* name, F&& body) {
  try {
    return body();
  } catch (Error& e) {
    if (e.step().empty()) e.set_step(name);
    throw;
  }
}

}  // namespace

PipelineResult run_grid_pipeline(std::span<const SamplePoint> samples,
                                 const PipelineOptions& options) {
  step("configuration", [&] {
    options.smooth.validate();
    if (options.levels < 1) throw input_error("levels must be >= 1");
    return 0;
  });
  auto resolution = step("resolution", [&] { return determine_resolution(samples, options.grid); });
  const DomainGraph grid = build_grid(resolution.spec.width, resolution.spec.height);

  RunReport report;
  report.width = resolution.spec.width;
  report.height = resolution.spec.height;
  std::vector<std::string> warnings;
  RealField field;

  if (options.levels == 1) {
    auto fit = step("extension", [&] {
      return fit_real_gvf(grid, resolution.guides, options.policy, options.smooth.backend);
    });
    auto smoothed = step("smoothing", [&] {
      return smooth_constrained(grid, std::move(fit.field), resolution.guides, options.smooth);
    });
    report.delta = fit.derivation.scale.delta();
    report.level_count = fit.derivation.scale.count();
    report.inflation_steps = fit.derivation.inflation_steps;
    report.sweeps = report.fine_sweeps = smoothed.sweeps;
    report.residual = smoothed.residual;
    field = std::move(smoothed.field);
  } else {
    auto ml = step("multilevel", [&] {
      return multilevel_fit(grid, resolution.guides, options.levels, options.smooth,
                            options.policy);
    });
    report.delta = ml.derivation.scale.delta();
    report.level_count = ml.derivation.scale.count();
    report.inflation_steps = ml.derivation.inflation_steps;
    for (int s : ml.sweeps_per_level) report.sweeps += s;
    report.fine_sweeps = ml.fine_sweeps;
    report.residual = ml.residual;
    warnings = std::move(ml.warnings);
    field = std::move(ml.field);
  }
  return {std::move(resolution), std::move(field), report, std::move(warnings)};
}

}  // namespace gvf
