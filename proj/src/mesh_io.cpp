#include "gvf/mesh_io.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "gvf/raster_io.hpp"
#include "text_util.hpp"

namespace gvf {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (const auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return text::trim(line);
}

[[noreturn]] void bad_record(std::size_t line_no, const std::string& what) {
  throw MeshError(MeshErrc::malformed_record, "line " + std::to_string(line_no) + ": " + what);
}

void fan(std::span<const VertexId> polygon, std::vector<Triangle>& faces) {
  for (std::size_t k = 1; k + 1 < polygon.size(); ++k) {
    faces.push_back({polygon[0], polygon[k], polygon[k + 1]});
  }
}

Vec3 parse_position(std::span<const std::string_view> tokens, std::size_t line_no) {
  if (tokens.size() < 3) bad_record(line_no, "vertex needs three coordinates");
  Vec3 p{};
  for (int k = 0; k < 3; ++k) {
    const auto v = text::parse_double(tokens[k]);
    if (!v) bad_record(line_no, "non-numeric coordinate '" + std::string(tokens[k]) + "'");
    p[k] = *v;
  }
  return p;
}

}  // namespace

TriMesh load_off(std::string_view input) {
  const auto all = text::lines(input);
  std::size_t i = 0;
  auto next = [&]() -> std::pair<std::size_t, std::vector<std::string_view>> {
    while (i < all.size()) {
      const auto line = strip_comment(all[i++]);
      if (!line.empty()) return {i, text::tokenize(line)};
    }
    return {0, {}};
  };

  auto [header_line, header] = next();
  if (header.empty() || header[0] != "OFF") {
    throw MeshError(MeshErrc::malformed_header, "expected 'OFF' on the first line");
  }
  std::vector<std::string_view> counts(header.begin() + 1, header.end());
  std::size_t counts_line = header_line;
  if (counts.empty()) std::tie(counts_line, counts) = next();
  if (counts.size() < 2) {
    throw MeshError(MeshErrc::malformed_header, "expected a 'vertices faces [edges]' line");
  }
  const auto nv = text::parse_int(counts[0]);
  const auto nf = text::parse_int(counts[1]);
  if (!nv || !nf || *nv < 0 || *nf < 0 || *nv > (1LL << 30) || *nf > (1LL << 30)) {
    throw MeshError(MeshErrc::malformed_header,
                    "line " + std::to_string(counts_line) + ": bad element counts");
  }

  std::vector<Vec3> vertices;
  vertices.reserve(*nv);
  for (long long k = 0; k < *nv; ++k) {
    auto [line_no, tokens] = next();
    if (tokens.empty()) {
      throw MeshError(MeshErrc::malformed_record, "file ends after " + std::to_string(k) +
                                                      " of " + std::to_string(*nv) + " vertices");
    }
    vertices.push_back(parse_position(tokens, line_no));
  }

  std::vector<Triangle> faces;
  faces.reserve(*nf);
  std::vector<VertexId> polygon;
  for (long long k = 0; k < *nf; ++k) {
    auto [line_no, tokens] = next();
    if (tokens.empty()) {
      throw MeshError(MeshErrc::malformed_record, "file ends after " + std::to_string(k) +
                                                      " of " + std::to_string(*nf) + " faces");
    }
    const auto arity = text::parse_int(tokens[0]);
    if (!arity || *arity < 3 || static_cast<std::size_t>(*arity) + 1 > tokens.size()) {
      bad_record(line_no, "face needs a vertex count >= 3 followed by that many indices");
    }
    polygon.clear();
    for (long long c = 1; c <= *arity; ++c) {
      const auto idx = text::parse_int(tokens[c]);
      if (!idx) bad_record(line_no, "non-integer vertex index '" + std::string(tokens[c]) + "'");
      if (*idx < 0 || *idx >= *nv) {
        throw MeshError(MeshErrc::index_out_of_range,
                        "line " + std::to_string(line_no) + ": vertex index " +
                            std::to_string(*idx) + " outside 0.." + std::to_string(*nv - 1));
      }
      polygon.push_back(static_cast<VertexId>(*idx));
    }
    fan(polygon, faces);
  }
  return TriMesh(std::move(vertices), std::move(faces));
}

TriMesh load_obj(std::string_view input) {
  std::vector<Vec3> vertices;
  std::vector<Triangle> faces;
  std::vector<VertexId> polygon;
  const auto all = text::lines(input);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = strip_comment(all[i]);
    if (line.empty()) continue;
    const auto tokens = text::tokenize(line);
    const std::span<const std::string_view> args(tokens.begin() + 1, tokens.end());
    if (tokens[0] == "v") {
      vertices.push_back(parse_position(args, line_no));
    } else if (tokens[0] == "f") {
      if (args.size() < 3) bad_record(line_no, "face needs at least three vertices");
      polygon.clear();
      for (auto tok : args) {
        const auto idx = text::parse_int(tok.substr(0, tok.find('/')));
        if (!idx || *idx == 0) bad_record(line_no, "bad face index '" + std::string(tok) + "'");
        const long long resolved = *idx > 0 ? *idx - 1 : static_cast<long long>(vertices.size()) + *idx;
        if (resolved < 0 || resolved >= static_cast<long long>(vertices.size())) {
          throw MeshError(MeshErrc::index_out_of_range,
                          "line " + std::to_string(line_no) + ": face index " +
                              std::string(tok) + " does not name a preceding vertex");
        }
        polygon.push_back(static_cast<VertexId>(resolved));
      }
      fan(polygon, faces);
    }
  }
  return TriMesh(std::move(vertices), std::move(faces));
}

TriMesh load_mesh_file(const std::string& path) {
  std::string ext = path.size() >= 4 ? path.substr(path.size() - 4) : std::string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const std::string contents = read_text_file(path);
  if (ext == ".off") return load_off(contents);
  if (ext == ".obj") return load_obj(contents);
  throw input_error("cannot tell mesh format of '" + path + "' (expected .off or .obj)");
}

std::string format_off(const TriMesh& mesh) {
  std::string out = "OFF\n";
  out += std::to_string(mesh.vertices().size()) + " " + std::to_string(mesh.faces().size()) +
         " " + std::to_string(mesh.edge_count()) + "\n";
  for (const auto& p : mesh.vertices()) {
    out += text::format_double(p[0]) + " " + text::format_double(p[1]) + " " +
           text::format_double(p[2]) + "\n";
  }
  for (const auto& t : mesh.faces()) {
    out += "3 " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) +
           "\n";
  }
  return out;
}

std::string format_obj(const TriMesh& mesh, std::span<const double> vertex_values) {
  if (vertex_values.size() != mesh.vertices().size()) {
    throw input_error("vertex colors need one value per vertex");
  }
  const auto [lo_it, hi_it] = std::minmax_element(vertex_values.begin(), vertex_values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  std::string out;
  for (std::size_t v = 0; v < vertex_values.size(); ++v) {
    const double gray = hi > lo ? (vertex_values[v] - lo) / (hi - lo) : 0.5;
    const auto g = text::format_double(gray);
    const auto& p = mesh.vertices()[v];
    out += "v " + text::format_double(p[0]) + " " + text::format_double(p[1]) + " " +
           text::format_double(p[2]) + " " + g + " " + g + " " + g + "\n";
  }
  for (const auto& t : mesh.faces()) {
    out += "f " + std::to_string(t[0] + 1) + " " + std::to_string(t[1] + 1) + " " +
           std::to_string(t[2] + 1) + "\n";
  }
  return out;
}

std::string format_element_values_csv(std::span<const double> values) {
  std::string out = "id,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(i) + "," + text::format_double(values[i]) + "\n";
  }
  return out;
}

}  // namespace gvf
