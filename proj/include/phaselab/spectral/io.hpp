#pragma once

#include <filesystem>
#include <string>

#include "phaselab/spectral/image.hpp"

namespace phaselab {

// Binary PPM (P6) for 3-channel, binary PGM (P5) for 1-channel, 8 bits per
// channel. Reals map to bytes by round(v*255) and back by v/255.
void write_image(const std::filesystem::path& path, const ImageGrid& img);
ImageGrid read_image(const std::filesystem::path& path);

// One line per coefficient: row,col,re,im.
void write_spectrum_csv(const std::filesystem::path& path, const ComplexGrid& grid);

void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace phaselab
