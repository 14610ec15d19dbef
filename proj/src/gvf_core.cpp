#include "gvf/gvf_core.hpp"

#include <cmath>
#include <cstdlib>

namespace gvf {

std::string describe(const FeasibilityWitness& w) {
  return "x=" + std::to_string(w.x) + " y=" + std::to_string(w.y) + " d=" +
         std::to_string(w.distance) + " < |" + std::to_string(w.level_x) + "-" +
         std::to_string(w.level_y) + "|";
}

namespace {

std::string infeasible_message(const FeasibilityReport& report) {
  std::string msg = "guiding set admits no gradually varied extension";
  if (report.witness) msg += " (" + describe(*report.witness) + ")";
  return msg;
}

void check_levels_positive(const LevelGuidingSet& guides) {
  for (const auto& e : guides) {
    if (e.value < 1) {
      throw input_error("guiding level " + std::to_string(e.value) + " at vertex " +
                        std::to_string(e.vertex) + " is below 1");
    }
  }
}

}  // namespace

InfeasibleError::InfeasibleError(FeasibilityReport report)
    : Error(ErrorKind::infeasible, infeasible_message(report)), report_(std::move(report)) {}

std::string_view to_string(EnvelopePolicy policy) {
  switch (policy) {
    case EnvelopePolicy::lower: return "lower";
    case EnvelopePolicy::upper: return "upper";
    case EnvelopePolicy::midpoint: return "mid";
  }
  return "mid";
}

EnvelopePolicy parse_policy(std::string_view name) {
  if (name == "lower") return EnvelopePolicy::lower;
  if (name == "upper") return EnvelopePolicy::upper;
  if (name == "mid" || name == "midpoint") return EnvelopePolicy::midpoint;
  throw input_error("unknown envelope policy '" + std::string(name) + "'");
}

FeasibilityReport check_feasible(const LevelGuidingSet& guides, std::span<const int> distances) {
  const std::size_t m = guides.size();
  if (distances.size() != m * m) throw input_error("distance matrix does not match guiding set");
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const int d = distances[a * m + b];
      if (d < std::abs(guides[a].value - guides[b].value)) {
        return {false, FeasibilityWitness{guides[a].vertex, guides[b].vertex, d, guides[a].value,
                                          guides[b].value}};
      }
    }
  }
  return {true, std::nullopt};
}

FeasibilityReport check_feasible(const DomainGraph& g, const LevelGuidingSet& guides,
                                 kernels::Backend backend) {
  guides.validate(g);
  check_levels_positive(guides);
  const auto vertices = guides.vertices();
  return check_feasible(guides, kernels::guide_distances(backend, g, vertices));
}

LevelField gvf_extend(const DomainGraph& g, const LevelGuidingSet& guides, int level_count,
                      EnvelopePolicy policy, kernels::Backend backend) {
  if (level_count < 1) throw input_error("level count must be positive");
  guides.validate(g);
  for (const auto& e : guides) {
    if (e.value < 1 || e.value > level_count) {
      throw input_error("guiding level " + std::to_string(e.value) + " at vertex " +
                        std::to_string(e.vertex) + " outside 1.." + std::to_string(level_count));
    }
  }
  if (auto report = check_feasible(g, guides, backend); !report.feasible) {
    throw InfeasibleError(std::move(report));
  }

  auto env = kernels::envelopes(backend, g, guides, level_count);
  LevelField field{{}, level_count};
  switch (policy) {
    case EnvelopePolicy::lower:
      field.values = std::move(env.lower);
      break;
    case EnvelopePolicy::upper:
      field.values = std::move(env.upper);
      break;
    case EnvelopePolicy::midpoint:
      field.values.resize(env.lower.size());
      for (std::size_t v = 0; v < env.lower.size(); ++v) {
        field.values[v] = (env.lower[v] + env.upper[v]) / 2;  // both >= 1, so this is floor
      }
      break;
  }
  return field;
}

std::vector<std::vector<int>> enumerate_extensions_oracle(const DomainGraph& g,
                                                          const LevelGuidingSet& guides,
                                                          int level_count) {
  if (level_count < 1) throw input_error("level count must be positive");
  guides.validate(g);
  const int n = g.vertex_count();
  if (static_cast<double>(n) * std::log10(static_cast<double>(level_count)) > 7.0) {
    throw input_error("instance too large for exhaustive enumeration");
  }

  std::vector<int> pinned(n, 0);
  for (const auto& e : guides) {
    if (e.value < 1 || e.value > level_count) return {};
    pinned[e.vertex] = e.value;
  }
  const auto edges = g.edges();

  // Odometer over all level_count^n labelings, vertex 0 most significant.
  std::vector<std::vector<int>> out;
  std::vector<int> label(n, 1);
  while (true) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = pinned[v] == 0 || pinned[v] == label[v];
    for (std::size_t k = 0; k < edges.size() && ok; ++k) {
      ok = std::abs(label[edges[k].a] - label[edges[k].b]) <= 1;
    }
    if (ok) out.push_back(label);

    int pos = n - 1;
    while (pos >= 0 && label[pos] == level_count) label[pos--] = 1;
    if (pos < 0) break;
    ++label[pos];
  }
  return out;
}

}  // namespace gvf
