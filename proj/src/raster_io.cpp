#include "gvf/raster_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gvf/error.hpp"
#include "text_util.hpp"

namespace gvf {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorKind::io, "write to '" + path + "' failed");
}

namespace {

void check_shape(int width, int height, std::span<const double> values) {
  if (width < 1 || height < 1 ||
      values.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw input_error("raster shape does not match the value count");
  }
}

}  // namespace

std::string format_pgm(int width, int height, std::span<const double> values) {
  check_shape(width, height, values);
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  std::string out = "P2\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double v = values[static_cast<std::size_t>(y) * width + x];
      const long pixel = hi > lo ? std::lround(255.0 * (v - lo) / (hi - lo)) : 128;
      if (x) out += ' ';
      out += std::to_string(pixel);
    }
    out += '\n';
  }
  return out;
}

std::string format_csv_raster(int width, int height, std::span<const double> values) {
  check_shape(width, height, values);
  std::string out;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (x) out += ',';
      out += text::format_double(values[static_cast<std::size_t>(y) * width + x]);
    }
    out += '\n';
  }
  return out;
}

void write_pgm(const std::string& path, int width, int height, std::span<const double> values) {
  write_text_file(path, format_pgm(width, height, values));
}

void write_csv_raster(const std::string& path, int width, int height,
                      std::span<const double> values) {
  write_text_file(path, format_csv_raster(width, height, values));
}

Raster parse_csv_raster(std::string_view input) {
  Raster r;
  std::size_t line_no = 0;
  for (auto line : text::lines(input)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    const auto fields = text::split(line, ',');
    if (r.height == 0) {
      r.width = static_cast<int>(fields.size());
    } else if (static_cast<int>(fields.size()) != r.width) {
      throw input_error("raster line " + std::to_string(line_no) + " has " +
                        std::to_string(fields.size()) + " values, expected " +
                        std::to_string(r.width));
    }
    for (auto f : fields) {
      const auto v = text::parse_double(f);
      if (!v) throw input_error("raster line " + std::to_string(line_no) + ": bad number");
      r.values.push_back(*v);
    }
    ++r.height;
  }
  if (r.height == 0) throw input_error("raster is empty");
  return r;
}

}  // namespace gvf
