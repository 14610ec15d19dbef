#ifndef GVF_GVF_CORE_HPP
#define GVF_GVF_CORE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvf/error.hpp"
#include "gvf/kernels.hpp"
#include "gvf/level_graph.hpp"

namespace gvf {

/// A guiding pair that breaks d(x, y) >= |i - j|.
struct FeasibilityWitness {
  VertexId x;
  VertexId y;
  int distance;
  int level_x;
  int level_y;
};

struct FeasibilityReport {
  bool feasible = true;
  std::optional<FeasibilityWitness> witness;
};

/// "x=0 y=4 d=4 < |1-6|" style description of a witness.
std::string describe(const FeasibilityWitness& w);

/// Thrown by extension when the guiding set admits no gradually varied
/// interpolant. Carries the violating pair.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(FeasibilityReport report);
  const FeasibilityReport& report() const noexcept { return report_; }

 private:
  FeasibilityReport report_;
};

/// Which member of the family of valid extensions to return.
enum class EnvelopePolicy { lower, upper, midpoint };

std::string_view to_string(EnvelopePolicy policy);
EnvelopePolicy parse_policy(std::string_view name);  // lower | upper | mid | midpoint

/// Checks that every pair of guiding points satisfies d(x, y) >= |i - j|.
/// The witness is the first offending pair in guiding-set order.
FeasibilityReport check_feasible(const DomainGraph& g, const LevelGuidingSet& guides,
                                 kernels::Backend backend = kernels::Backend::openmp);

/// Same check against a precomputed |J| x |J| distance matrix.
FeasibilityReport check_feasible(const LevelGuidingSet& guides, std::span<const int> distances);

/// Gradually varied extension of the guiding levels to the whole graph.
///
/// Builds the envelopes lo(x) = max_j clamp(i_j - d(x, x_j)) and
/// hi(x) = min_j clamp(i_j + d(x, x_j)) over 1..level_count, then returns lo,
/// hi or floor((lo + hi) / 2) according to `policy`. Every valid extension
/// lies between lo and hi. Throws InfeasibleError when the guiding set
/// breaks the distance condition.
LevelField gvf_extend(const DomainGraph& g, const LevelGuidingSet& guides, int level_count,
                      EnvelopePolicy policy = EnvelopePolicy::midpoint,
                      kernels::Backend backend = kernels::Backend::openmp);

/// All gradually varied interpolants by exhaustive enumeration, in
/// lexicographic order. Test oracle; refuses instances with more than 1e7
/// labelings.
std::vector<std::vector<int>> enumerate_extensions_oracle(const DomainGraph& g,
                                                          const LevelGuidingSet& guides,
                                                          int level_count);

}  // namespace gvf

#endif  // GVF_GVF_CORE_HPP
