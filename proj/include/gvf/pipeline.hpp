#ifndef GVF_PIPELINE_HPP
#define GVF_PIPELINE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gvf/error.hpp"
#include "gvf/gvf_core.hpp"
#include "gvf/level_graph.hpp"
#include "gvf/smoothing.hpp"

namespace gvf {

/// Observation at a planar location.
struct SamplePoint {
  double x;
  double y;
  double value;
};

/// Observation attached to a graph element (vertex or face id).
struct ElementSample {
  long long id;
  double value;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// "x,y,value" rows. The header line is optional, '#' lines and blank lines
/// are skipped. Columns are 1-based fields in error reports.
std::vector<SamplePoint> parse_samples_csv(std::string_view text);

/// "id,value" rows with the same conventions.
std::vector<ElementSample> parse_element_samples_csv(std::string_view text);

/// Converts element samples to a guiding set of reals or of level indices.
RealGuidingSet to_real_guiding(std::span<const ElementSample> samples);
LevelGuidingSet to_level_guiding(std::span<const ElementSample> samples);

struct Bounds {
  double xmin;
  double ymin;
  double xmax;
  double ymax;
};

struct GridSpec {
  int width;
  int height;
  Bounds bounds;
};

/// Bounding box of the samples; a zero-extent axis is widened by 0.5 on
/// each side.
Bounds sample_bounds(std::span<const SamplePoint> samples);

struct Resolution {
  GridSpec spec;
  RealGuidingSet guides;
  int merged_duplicates = 0;
  bool automatic = false;
};

inline constexpr int kMinAutoResolution = 8;
inline constexpr int kMaxAutoResolution = 512;

/// Places samples on grid cells (row-major, row 0 at ymin). With `requested`
/// the grid is fixed and two differing samples in one cell are an error;
/// without it the smallest power-of-two square grid in 8..512 over the
/// sample bounds is chosen such that no cell receives differing values.
/// Equal values landing in one cell are merged in both modes.
Resolution determine_resolution(std::span<const SamplePoint> samples,
                                const std::optional<GridSpec>& requested);

struct PipelineOptions {
  std::optional<GridSpec> grid;  // empty: automatic resolution
  SmoothConfig smooth;
  EnvelopePolicy policy = EnvelopePolicy::midpoint;
  int levels = 1;
};

struct RunReport {
  int width = 0;
  int height = 0;
  double delta = 0.0;
  int level_count = 0;
  int inflation_steps = 0;
  int sweeps = 0;       // all levels
  int fine_sweeps = 0;  // finest level only
  double residual = 0.0;

  /// Single line of space-separated key=value pairs.
  std::string to_string() const;
};

struct PipelineResult {
  Resolution resolution;
  RealField field;
  RunReport report;
  std::vector<std::string> warnings;
};

/// Resolution, gradually varied fit (multilevel when levels > 1), then
/// constrained smoothing. Errors carry the failing step in Error::step().
PipelineResult run_grid_pipeline(std::span<const SamplePoint> samples,
                                 const PipelineOptions& options);

}  // namespace gvf

#endif  // GVF_PIPELINE_HPP
