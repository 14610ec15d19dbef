#include <doctest.h>

#include <cmath>
#include <random>

#include "gvf/real_fit.hpp"
#include "support.hpp"

using namespace gvf;

namespace {

RealGuidingSet random_guides(std::mt19937_64& rng, int vertex_count, int count, double lo,
                             double hi) {
  std::vector<VertexId> ids(vertex_count);
  for (int v = 0; v < vertex_count; ++v) ids[v] = v;
  std::shuffle(ids.begin(), ids.end(), rng);
  std::uniform_real_distribution<double> val(lo, hi);
  std::vector<RealGuidingSet::entry_type> entries;
  for (int i = 0; i < count; ++i) entries.push_back({ids[i], val(rng)});
  return RealGuidingSet(std::move(entries));
}

// Max pairwise slope with Manhattan distances on a width-w grid.
double oracle_grid_slope(int w, const RealGuidingSet& guides) {
  double s = 0.0;
  for (std::size_t a = 0; a < guides.size(); ++a)
    for (std::size_t b = a + 1; b < guides.size(); ++b) {
      const int va = guides[a].vertex, vb = guides[b].vertex;
      const int d = std::abs(va % w - vb % w) + std::abs(va / w - vb / w);
      s = std::max(s, std::abs(guides[a].value - guides[b].value) / d);
    }
  return s;
}

}  // namespace

TEST_CASE("derive_scale examples") {
  const auto g = build_grid(5, 5);
  SUBCASE("single pair fixes the scale") {
    // (0,0) and (2,2): Manhattan distance 4
    const auto d = derive_scale(g, RealGuidingSet({{0, 0.0}, {12, 8.0}}));
    CHECK(d.max_slope == 2.0);
    CHECK(d.scale.delta() == 2.0);
    CHECK(d.scale.count() == 5);
    CHECK(d.scale.origin() == 0.0);
    CHECK(d.quantized[0].value == 1);
    CHECK(d.quantized[1].value == 5);
    CHECK(d.inflation_steps == 0);
  }
  SUBCASE("constant samples") {
    const auto d = derive_scale(g, RealGuidingSet({{0, 7.0}, {6, 7.0}, {24, 7.0}}));
    CHECK(d.max_slope == 0.0);
    CHECK(d.scale.delta() == 1.0);
    CHECK(d.scale.count() == 1);
    for (const auto& e : d.quantized) CHECK(e.value == 1);
  }
  SUBCASE("no rounding conflict means no inflation") {
    const auto path = testing::path_graph(8);
    CHECK(derive_scale(path, RealGuidingSet({{0, 0.0}, {3, 3.0}, {7, 5.0}})).inflation_steps == 0);
    CHECK(derive_scale(path, RealGuidingSet({{1, 2.5}, {4, 1.0}, {6, 4.0}})).inflation_steps == 0);
  }
  CHECK_THROWS_AS(derive_scale(g, RealGuidingSet({{30, 1.0}})), Error);
}

TEST_CASE("derive_scale inflates when floating-point ties break the condition") {
  // slope 0.8 from the adjacent pair (9, 10); 1.6 lands a hair above the
  // 1.5-level tie and rounds up while 0.8 sits on its tie and rounds down.
  const auto path = testing::path_graph(11);
  const RealGuidingSet guides({{10, 1.6}, {9, 0.8}, {2, 0.4}});

  const double slope = 1.6 - 0.8;
  const LevelScale naive(0.4, slope, 3);
  REQUIRE(std::abs(naive.index(1.6) - naive.index(0.8)) == 2);  // d = 1

  const auto d = derive_scale(path, guides);
  CHECK(d.inflation_steps >= 1);
  CHECK(d.scale.delta() > d.max_slope);
  CHECK(d.scale.delta() == doctest::Approx(slope * std::pow(kInflation, d.inflation_steps)));
  CHECK(check_feasible(path, d.quantized).feasible);
}

TEST_CASE("derive_scale always yields a feasible quantization") {
  std::mt19937_64 rng(29);
  const auto g = build_grid(64, 64);
  for (int trial = 0; trial < 25; ++trial) {
    const auto guides = random_guides(rng, g.vertex_count(), 29, -50.0, 50.0);
    const auto d = derive_scale(g, guides);
    REQUIRE(check_feasible(g, d.quantized).feasible);
    CHECK(d.scale.delta() >= d.max_slope);
    CHECK(d.max_slope == doctest::Approx(oracle_grid_slope(64, guides)).epsilon(1e-12));
  }
}

TEST_CASE("fit_real_gvf examples") {
  const auto path = testing::path_graph(5);
  const auto fit = fit_real_gvf(path, RealGuidingSet({{0, 0.0}, {4, 4.0}}));
  CHECK(fit.field == std::vector<double>{0, 1, 2, 3, 4});

  const auto g = build_grid(6, 4);
  const auto constant = fit_real_gvf(g, RealGuidingSet({{5, 3.7}}));
  for (double v : constant.field) CHECK(v == 3.7);
}

TEST_CASE("fit_real_gvf per-edge bounds on random instances") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(2, 14);
    const int w = dim(rng), h = dim(rng);
    const auto g = build_grid(w, h);
    std::uniform_int_distribution<int> cnt(1, std::min(12, w * h));
    const auto guides = random_guides(rng, g.vertex_count(), cnt(rng), -10.0, 10.0);
    for (auto policy : {EnvelopePolicy::lower, EnvelopePolicy::midpoint, EnvelopePolicy::upper}) {
      const auto fit = fit_real_gvf(g, guides, policy);
      const double delta = fit.derivation.scale.delta();
      const double slack = 1e-12 * (1.0 + std::abs(fit.derivation.scale.origin()) + delta);

      REQUIRE(is_gradually_varied(g, fit.levels.values).ok());
      std::vector<bool> pinned(g.vertex_count(), false);
      for (const auto& e : guides) {
        pinned[e.vertex] = true;
        CHECK(fit.field[e.vertex] == e.value);
      }
      double lo = guides[0].value, hi = guides[0].value;
      for (const auto& e : guides) lo = std::min(lo, e.value), hi = std::max(hi, e.value);
      for (double v : fit.field) CHECK((v >= lo && v <= hi));
      for (const auto& e : g.edges()) {
        const double diff = std::abs(fit.field[e.a] - fit.field[e.b]);
        if (pinned[e.a] || pinned[e.b]) CHECK(diff <= 1.5 * delta + slack);
        else CHECK(diff <= delta + slack);
      }
    }
  }
}

TEST_CASE("shifting every sample shifts the fit") {
  const auto g = build_grid(9, 7);
  const RealGuidingSet base({{0, 1.5}, {20, -2.25}, {40, 4.0}, {62, 0.5}});
  std::vector<RealGuidingSet::entry_type> moved;
  const double c = 16.0;
  for (const auto& e : base) moved.push_back({e.vertex, e.value + c});
  const auto a = fit_real_gvf(g, base);
  const auto b = fit_real_gvf(g, RealGuidingSet(moved));
  CHECK(a.levels.values == b.levels.values);
  CHECK(a.derivation.scale.delta() == b.derivation.scale.delta());
  CHECK(b.derivation.scale.origin() == a.derivation.scale.origin() + c);
  for (std::size_t v = 0; v < a.field.size(); ++v) CHECK(std::abs(b.field[v] - a.field[v] - c) <= 1e-12);
}
