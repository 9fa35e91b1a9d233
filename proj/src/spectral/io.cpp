#include "phaselab/spectral/io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "phaselab/core/error.hpp"

namespace phaselab {
namespace {

std::uint8_t to_byte(double v) {
  const double scaled = std::round(v * 255.0);
  return static_cast<std::uint8_t>(scaled < 0.0 ? 0.0 : (scaled > 255.0 ? 255.0 : scaled));
}

void skip_ws_and_comments(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

}  // namespace

void write_image(const std::filesystem::path& path, const ImageGrid& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  const int ch = img.channels();
  out << (ch == 3 ? "P6" : "P5") << "\n"
      << img.width() << " " << img.height() << "\n255\n";
  std::vector<std::uint8_t> row(static_cast<std::size_t>(img.width()) * ch);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x)
      for (int c = 0; c < ch; ++c)
        row[static_cast<std::size_t>(x) * ch + c] = to_byte(img.at(c, y, x));
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw IoError("write failed: " + path.string());
}

ImageGrid read_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::string magic;
  in >> magic;
  int channels = 0;
  if (magic == "P6")
    channels = 3;
  else if (magic == "P5")
    channels = 1;
  else
    throw IoError("unsupported raster format in " + path.string());
  skip_ws_and_comments(in);
  int w = 0, h = 0, maxval = 0;
  in >> w;
  skip_ws_and_comments(in);
  in >> h;
  skip_ws_and_comments(in);
  in >> maxval;
  if (!in || w <= 0 || h <= 0 || maxval != 255)
    throw IoError("bad raster header in " + path.string());
  in.get();  // single whitespace after maxval
  std::vector<std::uint8_t> raw(static_cast<std::size_t>(w) * h * channels);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(in.gcount()) != raw.size())
    throw IoError("truncated raster data in " + path.string());
  std::vector<double> data(raw.size());
  // interleaved bytes -> planar doubles
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < channels; ++c)
        data[(static_cast<std::size_t>(c) * h + y) * w + x] =
            raw[(static_cast<std::size_t>(y) * w + x) * channels + c] / 255.0;
  return ImageGrid::from_data(h, w, channels, std::move(data));
}

void write_spectrum_csv(const std::filesystem::path& path, const ComplexGrid& grid) {
  std::ostringstream out;
  out << "row,col,re,im\n";
  out.precision(17);
  for (int y = 0; y < grid.height; ++y)
    for (int x = 0; x < grid.width; ++x)
      out << y << "," << x << "," << grid.at(y, x).real() << ","
          << grid.at(y, x).imag() << "\n";
  write_text_file(path, out.str());
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << contents;
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace phaselab
