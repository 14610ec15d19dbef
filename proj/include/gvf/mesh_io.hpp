#ifndef GVF_MESH_IO_HPP
#define GVF_MESH_IO_HPP

#include <span>
#include <string>
#include <string_view>

#include "gvf/manifold.hpp"

namespace gvf {

/// OFF text: "OFF" header (counts may follow on the same line), a
/// "vertices faces [edges]" line, vertex records, then "k i0 .. ik-1" face
/// records. '#' starts a comment. Polygons are fan-triangulated; trailing
/// per-record color fields are ignored.
TriMesh load_off(std::string_view text);

/// OBJ text: `v` and `f` records, 1-based or negative (relative) indices,
/// "i/t/n" face tokens, polygons fan-triangulated. Other records are skipped.
TriMesh load_obj(std::string_view text);

/// Picks the reader from the file extension (.off or .obj, any case).
TriMesh load_mesh_file(const std::string& path);

/// OFF with shortest round-trip decimals, so load_off(format_off(m)) is exact.
std::string format_off(const TriMesh& mesh);

/// OBJ whose vertex records carry a grayscale color: three equal components
/// (v - min) / (max - min), or 0.5 everywhere for a constant field.
std::string format_obj(const TriMesh& mesh, std::span<const double> vertex_values);

/// "id,value" sidecar, one element per line.
std::string format_element_values_csv(std::span<const double> values);

}  // namespace gvf

#endif  // GVF_MESH_IO_HPP
