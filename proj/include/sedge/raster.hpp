#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "sedge/detect.hpp"

namespace sedge {

/// A rectangular grid of nonnegative intensities read from disk.
struct RasterImage {
    std::vector<double> pixels;  // row-major
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::string source;

    double at(std::size_t r, std::size_t c) const { return pixels[r * cols + c]; }
};

enum class RasterFormat { auto_detect, matrix, pgm, csv };

RasterFormat raster_format_from_string(const std::string& name);

struct RasterError : std::runtime_error {
    explicit RasterError(const std::string& what) : std::runtime_error(what) {}
};

/// Reads a raster. Formats: whitespace-separated matrix text, PGM P2/P5
/// (maxval up to 65535; two-byte samples are big-endian), or CSV.
/// auto_detect goes by extension (.pgm / .csv, anything else: matrix).
/// Throws RasterError naming the file and offending line on parse
/// problems, including ragged rows.
RasterImage load_raster(const std::filesystem::path& path,
                        RasterFormat format = RasterFormat::auto_detect);

/// Writers used by `simulate`; values are printed with enough digits
/// (%.17g) that loading the file reproduces the doubles exactly.
void write_matrix(const std::filesystem::path& path, const RasterImage& img);
void write_csv(const std::filesystem::path& path, const RasterImage& img);

/// floor(rows / strip_height) non-overlapping horizontal strips from the
/// top; leftover rows are discarded. May return an empty vector.
std::vector<Window> extract_strips(const RasterImage& img, std::size_t strip_height);

}  // namespace sedge
