#include <doctest.h>

#include <random>
#include <set>

#include "gvf/manifold.hpp"
#include "gvf/mesh_io.hpp"
#include "gvf/raster_io.hpp"
#include "gvf/real_fit.hpp"
#include "support.hpp"

using namespace gvf;

namespace {

std::string fixture(const std::string& name) {
  return read_text_file(std::string(GVF_FIXTURE_DIR) + "/" + name);
}

std::set<std::pair<VertexId, VertexId>> edge_set(const DomainGraph& g) {
  std::set<std::pair<VertexId, VertexId>> s;
  for (const auto& e : g.edges()) s.insert({e.a, e.b});
  return s;
}

MeshErrc mesh_error_code(const std::string& text) {
  try {
    load_off(text);
  } catch (const MeshError& e) {
    return e.code();
  }
  FAIL("expected MeshError");
  return MeshErrc::empty_mesh;
}

}  // namespace

TEST_CASE("OFF loading") {
  SUBCASE("tetrahedron: both graphs are K4") {
    const auto m = load_off(fixture("tetrahedron.off"));
    CHECK(m.vertices().size() == 4);
    CHECK(m.faces().size() == 4);
    CHECK(m.edge_count() == 6);
    CHECK(m.boundary_edge_count() == 0);
    CHECK(m.vertex_graph().edge_count() == 6);
    CHECK(m.cell_graph().edge_count() == 6);
    CHECK(m.vertex_graph().kind() == GraphKind::mesh_vertex);
    CHECK(m.cell_graph().kind() == GraphKind::mesh_cell);
  }
  SUBCASE("octahedron: every face has three cell neighbors") {
    const auto m = load_off(fixture("octahedron.off"));
    CHECK(m.vertices().size() == 6);
    for (int f = 0; f < 8; ++f) CHECK(m.cell_graph().degree(f) == 3);
    for (int v = 0; v < 6; ++v) CHECK(m.vertex_graph().degree(v) == 4);
  }
  SUBCASE("counts on the header line and polygon faces") {
    const auto m = load_off("OFF 4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3 255 0 0\n");
    CHECK(m.faces().size() == 2);
    CHECK(m.boundary_edge_count() == 4);
  }
}

TEST_CASE("OFF diagnostics are distinct") {
  CHECK(mesh_error_code("PLY\n3 1 0\n") == MeshErrc::malformed_header);
  CHECK(mesh_error_code("OFF\nthree 1\n") == MeshErrc::malformed_header);
  CHECK(mesh_error_code("OFF\n3 1 0\n0 0 0\n1 0 0\n") == MeshErrc::malformed_record);
  CHECK(mesh_error_code("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 x\n3 0 1 2\n") == MeshErrc::malformed_record);
  CHECK(mesh_error_code("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 5\n") == MeshErrc::index_out_of_range);
  CHECK(mesh_error_code("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 1\n") == MeshErrc::degenerate_face);
  // three triangles hinged on edge (0, 1)
  CHECK(mesh_error_code("OFF\n5 3 0\n0 0 0\n1 0 0\n0 1 0\n0 -1 0\n0 0 1\n"
                        "3 0 1 2\n3 1 0 3\n3 0 1 4\n") == MeshErrc::non_manifold_edge);
  // two separate triangles
  CHECK(mesh_error_code("OFF\n6 2 0\n0 0 0\n1 0 0\n0 1 0\n5 0 0\n6 0 0\n5 1 0\n"
                        "3 0 1 2\n3 3 4 5\n") == MeshErrc::disconnected_vertex_graph);
  // bow-tie: triangles share only vertex 0
  CHECK(mesh_error_code("OFF\n5 2 0\n0 0 0\n1 0 0\n1 1 0\n-1 0 0\n-1 -1 0\n"
                        "3 0 1 2\n3 0 3 4\n") == MeshErrc::disconnected_cell_graph);
  CHECK(mesh_error_code("OFF\n0 0 0\n") == MeshErrc::empty_mesh);
}

TEST_CASE("OBJ loading") {
  const auto m = load_obj(fixture("square.obj"));
  CHECK(m.vertices().size() == 5);
  REQUIRE(m.faces().size() == 3);
  CHECK(m.faces()[0] == Triangle{0, 1, 2});
  CHECK(m.faces()[1] == Triangle{0, 2, 3});
  CHECK(m.faces()[2] == Triangle{1, 4, 2});
  CHECK_THROWS_AS(load_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 4\n"), MeshError);
  CHECK_THROWS_AS(load_obj("v 0 0 0\nf 1 0 1\n"), MeshError);
}

TEST_CASE("OFF round trip is exact") {
  const auto m = testing::icosphere(2);
  CHECK(m.faces().size() == 320);
  const auto back = load_off(format_off(m));
  CHECK(back.vertices() == m.vertices());
  CHECK(back.faces() == m.faces());
  CHECK(edge_set(back.vertex_graph()) == edge_set(m.vertex_graph()));
  CHECK(edge_set(back.cell_graph()) == edge_set(m.cell_graph()));
}

TEST_CASE("OBJ writer grayscale and values sidecar") {
  const auto m = testing::tetrahedron();
  const auto obj = format_obj(m, std::vector<double>{0, 1, 2, 4});
  CHECK(obj.rfind("v 1 1 1 0 0 0\nv 1 -1 -1 0.25 0.25 0.25\n", 0) == 0);
  CHECK(obj.find("v -1 -1 1 1 1 1\n") != std::string::npos);
  CHECK(obj.find("f 1 2 3\n") != std::string::npos);
  CHECK(format_obj(m, std::vector<double>(4, 3.0)).find("v 1 1 1 0.5 0.5 0.5\n") == 0);
  const auto back = load_obj(obj);
  CHECK(back.faces() == m.faces());
  CHECK(format_element_values_csv(std::vector<double>{1.5, -2}) == "id,value\n0,1.5\n1,-2\n");
}

TEST_CASE("integer fits on meshes") {
  const auto tet = testing::tetrahedron();
  const auto f = manifold_int_gvf(tet, LevelGuidingSet({{0, 1}, {2, 2}}), 2, EnvelopePolicy::lower);
  CHECK(f.space == ElementSpace::vertex);
  CHECK(f.values == std::vector<int>{1, 1, 2, 1});
  const auto all = enumerate_extensions_oracle(tet.vertex_graph(), LevelGuidingSet({{0, 1}, {2, 2}}), 2);
  CHECK(std::find(all.begin(), all.end(), f.values) != all.end());

  CHECK_THROWS_AS(manifold_cell_int_gvf(tet, LevelGuidingSet({{0, 1}, {1, 3}}), 3),
                  InfeasibleError);

  const auto sphere = testing::icosphere(2);
  const LevelGuidingSet guides({{0, 1}, {40, 4}, {100, 2}});
  const LevelGuidingSet swapped({{0, 4}, {40, 1}, {100, 2}});
  const auto a = manifold_int_gvf(sphere, guides, 4);
  const auto b = manifold_int_gvf(sphere, swapped, 4);
  CHECK(a.values != b.values);
  CHECK(is_gradually_varied(sphere.vertex_graph(), a.values).ok());
  CHECK(is_gradually_varied(sphere.vertex_graph(), b.values).ok());
}

TEST_CASE("real fits on meshes") {
  const auto oct = testing::octahedron();
  const auto one = manifold_real_gvf(oct, RealGuidingSet({{3, -2.5}}));
  for (double v : one.values) CHECK(v == -2.5);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> val(-100.0, 100.0);
  for (int trial = 0; trial < 30; ++trial) {
    const RealGuidingSet guides({{0, val(rng)}, {1, val(rng)}, {4, val(rng)}});
    const auto fit = fit_real_gvf(oct.vertex_graph(), guides);
    const auto f = manifold_real_gvf(oct, guides);
    CHECK(f.values == fit.field);
    const double delta = fit.derivation.scale.delta();
    for (const auto& e : oct.vertex_graph().edges()) {
      const bool pinned = e.a == 0 || e.a == 1 || e.a == 4 || e.b == 0 || e.b == 1 || e.b == 4;
      CHECK(std::abs(f.values[e.a] - f.values[e.b]) <= (pinned ? 1.5 : 1.0) * delta * (1 + 1e-12));
    }
  }

  SUBCASE("every cell guided returns the input") {
    std::vector<RealGuidingSet::entry_type> entries;
    for (int c = 0; c < 8; ++c) entries.push_back({c, 0.5 * c * c});
    const auto f = manifold_cell_real_gvf(oct, RealGuidingSet(entries));
    for (int c = 0; c < 8; ++c) CHECK(f.values[c] == 0.5 * c * c);
  }
}

TEST_CASE("cell algorithms equal vertex algorithms on the wrapped cell graph") {
  const auto sphere = testing::icosphere(1);
  const auto& cells = sphere.cell_graph();
  const auto wrapped = DomainGraph::from_edges(cells.vertex_count(), cells.edges());
  const LevelGuidingSet lg({{0, 2}, {30, 4}, {60, 3}});
  CHECK(manifold_cell_int_gvf(sphere, lg, 5).values == gvf_extend(wrapped, lg, 5).values);
  const RealGuidingSet rg({{0, 0.25}, {17, 9.5}, {55, -3.0}, {70, 1.0}});
  CHECK(manifold_cell_real_gvf(sphere, rg).values == fit_real_gvf(wrapped, rg).field);
}

TEST_CASE("harmonic fit on C8 matches the direct solve") {
  const auto c8 = testing::cycle_graph(8);
  const RealGuidingSet guides({{0, 0.0}, {4, 3.0}});
  const auto exact = testing::harmonic_direct(c8, guides);
  CHECK(exact[2] == doctest::Approx(1.5));
  const auto init = fit_real_gvf(c8, guides).field;
  const auto r = harmonic_fit(c8, init, guides, 100);
  CHECK(r.trace.size() == 100);
  CHECK(testing::max_abs_diff(r.values, exact) <= 1e-8);
  CHECK(r.values[0] == 0.0);
  CHECK(r.values[4] == 3.0);
  for (std::size_t s = 1; s < r.trace.size(); ++s) CHECK(r.trace[s] <= r.trace[s - 1]);
}

TEST_CASE("harmonic fit edge cases") {
  const auto oct = testing::octahedron();
  std::vector<RealGuidingSet::entry_type> all;
  for (int v = 0; v < 6; ++v) all.push_back({v, 1.0 + v});
  const MeshField<double> init{ElementSpace::vertex, {1, 2, 3, 4, 5, 6}};
  const auto r = harmonic_fit(oct, init, RealGuidingSet(all));
  CHECK(r.field.values == init.values);
  for (double t : r.trace) CHECK(t == 0.0);
  CHECK_THROWS_AS(harmonic_fit(oct.vertex_graph(), std::vector<double>(5, 0.0),
                               RealGuidingSet({{0, 1.0}})),
                  Error);
}

TEST_CASE("harmonic fit converges to a discrete harmonic function") {
  const auto sphere = testing::icosphere(1);
  const RealGuidingSet guides({{0, -1.0}, {9, 2.0}, {30, 0.5}});
  const auto init = manifold_real_gvf(sphere, guides);
  const auto r = harmonic_fit(sphere, init, guides, 3000);
  const auto& g = sphere.vertex_graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == 0 || v == 9 || v == 30) continue;
    double mean = 0.0;
    for (VertexId w : g.neighbors(v)) mean += r.field.values[w];
    mean /= g.degree(v);
    CHECK(std::abs(r.field.values[v] - mean) <= 1e-8);
  }
  for (double v : r.field.values) CHECK((v >= -1.0 && v <= 2.0));
}

TEST_CASE("face display values") {
  const auto tet = testing::tetrahedron();
  const auto faces = face_display_values(tet, {ElementSpace::vertex, {0, 0, 0, 3}});
  // faces 1, 2, 3 contain vertex 3
  CHECK(faces == std::vector<double>{0, 1, 1, 1});
  const auto flat = face_display_values(tet, {ElementSpace::vertex, {2.5, 2.5, 2.5, 2.5}});
  for (double v : flat) CHECK(v == 2.5);
  CHECK_THROWS_AS(face_display_values(tet, {ElementSpace::cell, {0, 0, 0, 0}}), Error);

  const auto sphere = testing::icosphere(2);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> val(0.0, 1.0);
  MeshField<double> field{ElementSpace::vertex, std::vector<double>(sphere.vertices().size())};
  for (auto& v : field.values) v = val(rng);
  const auto shown = face_display_values(sphere, field);
  for (std::size_t f = 0; f < sphere.faces().size(); ++f) {
    double s = 0.0;
    for (VertexId v : sphere.faces()[f]) s += field.values[v];
    CHECK(shown[f] == doctest::Approx(s / 3.0).epsilon(1e-15));
  }
}

TEST_CASE("space names") {
  CHECK(parse_space("vertex") == ElementSpace::vertex);
  CHECK(parse_space("cell") == ElementSpace::cell);
  CHECK_THROWS_AS(parse_space("edge"), Error);
}
