#ifndef GVF_RASTER_IO_HPP
#define GVF_RASTER_IO_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gvf {

std::string read_text_file(const std::string& path);

/// Throws Error(ErrorKind::io) when the file cannot be written.
void write_text_file(const std::string& path, std::string_view contents);

/// ASCII graymap: "P2\n<w> <h>\n255\n", then one line of space-separated
/// pixels per grid row. A pixel is round(255 * (F - min) / (max - min));
/// a constant field is 128 everywhere.
std::string format_pgm(int width, int height, std::span<const double> values);

/// Row-major comma-separated values, one grid row per line, shortest
/// round-trip decimals.
std::string format_csv_raster(int width, int height, std::span<const double> values);

void write_pgm(const std::string& path, int width, int height, std::span<const double> values);
void write_csv_raster(const std::string& path, int width, int height,
                      std::span<const double> values);

struct Raster {
  int width = 0;
  int height = 0;
  std::vector<double> values;
};

/// Reads format_csv_raster output back; rows must have equal length.
Raster parse_csv_raster(std::string_view text);

}  // namespace gvf

#endif  // GVF_RASTER_IO_HPP
