#include "sedge/raster.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sedge {

namespace {

std::string where(const std::filesystem::path& path, std::size_t line) {
    return path.string() + ":" + std::to_string(line);
}

double parse_number(const std::string& token, const std::filesystem::path& path,
                    std::size_t line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw RasterError(where(path, line) + ": not a number: '" + token + "'");
    }
}

RasterImage from_rows(std::vector<std::vector<double>> rows,
                      const std::filesystem::path& path,
                      const std::vector<std::size_t>& line_of_row) {
    if (rows.empty()) {
        throw RasterError(path.string() + ": no pixel data");
    }
    RasterImage img;
    img.rows = rows.size();
    img.cols = rows.front().size();
    img.source = path.string();
    img.pixels.reserve(img.rows * img.cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != img.cols) {
            throw RasterError(where(path, line_of_row[r]) + ": ragged row " +
                              std::to_string(r + 1) + ": expected " +
                              std::to_string(img.cols) + " values, got " +
                              std::to_string(rows[r].size()));
        }
        img.pixels.insert(img.pixels.end(), rows[r].begin(), rows[r].end());
    }
    return img;
}

RasterImage load_delimited(const std::filesystem::path& path, bool csv) {
    std::ifstream in(path);
    if (!in) {
        throw RasterError(path.string() + ": cannot open for reading");
    }
    std::vector<std::vector<double>> rows;
    std::vector<std::size_t> line_of_row;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r,") == std::string::npos) {
            continue;  // blank line
        }
        std::vector<double> row;
        if (csv) {
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ',')) {
                const auto b = cell.find_first_not_of(" \t\r");
                const auto e = cell.find_last_not_of(" \t\r");
                if (b == std::string::npos) {
                    throw RasterError(where(path, line_no) + ": empty CSV cell");
                }
                row.push_back(parse_number(cell.substr(b, e - b + 1), path, line_no));
            }
        } else {
            std::stringstream ss(line);
            std::string token;
            while (ss >> token) {
                row.push_back(parse_number(token, path, line_no));
            }
        }
        rows.push_back(std::move(row));
        line_of_row.push_back(line_no);
    }
    return from_rows(std::move(rows), path, line_of_row);
}

RasterImage load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw RasterError(path.string() + ": cannot open for reading");
    }
    // Header tokens may be separated by whitespace and '#' comments.
    auto next_token = [&]() -> std::string {
        std::string tok;
        int ch;
        while ((ch = in.get()) != EOF) {
            if (ch == '#') {
                while ((ch = in.get()) != EOF && ch != '\n') {}
                continue;
            }
            if (std::isspace(ch)) {
                if (!tok.empty()) return tok;
                continue;
            }
            tok.push_back(static_cast<char>(ch));
        }
        return tok;
    };

    const std::string magic = next_token();
    if (magic != "P2" && magic != "P5") {
        throw RasterError(path.string() + ": not a PGM file (magic '" + magic + "')");
    }
    auto parse_header_int = [&](const char* what) -> long {
        const std::string tok = next_token();
        long v = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size() || v <= 0) {
            throw RasterError(path.string() + ": bad PGM " + what + " '" + tok + "'");
        }
        return v;
    };
    const long width = parse_header_int("width");
    const long height = parse_header_int("height");
    const long maxval = parse_header_int("maxval");
    if (maxval > 65535) {
        throw RasterError(path.string() + ": PGM maxval > 65535 unsupported");
    }

    RasterImage img;
    img.rows = static_cast<std::size_t>(height);
    img.cols = static_cast<std::size_t>(width);
    img.source = path.string();
    img.pixels.resize(img.rows * img.cols);

    if (magic == "P2") {
        for (std::size_t i = 0; i < img.pixels.size(); ++i) {
            const std::string tok = next_token();
            if (tok.empty()) {
                throw RasterError(path.string() + ": truncated P2 data at sample " +
                                  std::to_string(i));
            }
            const double v = parse_number(tok, path, 0);
            if (v < 0 || v > static_cast<double>(maxval) || v != std::floor(v)) {
                throw RasterError(path.string() + ": P2 sample out of range: " + tok);
            }
            img.pixels[i] = v;
        }
    } else {
        // single whitespace byte after maxval, then raw samples
        const int bytes = maxval > 255 ? 2 : 1;
        std::vector<unsigned char> buf(img.pixels.size() * bytes);
        in.read(reinterpret_cast<char*>(buf.data()),
                static_cast<std::streamsize>(buf.size()));
        if (in.gcount() != static_cast<std::streamsize>(buf.size())) {
            throw RasterError(path.string() + ": truncated P5 data at byte " +
                              std::to_string(in.gcount()));
        }
        for (std::size_t i = 0; i < img.pixels.size(); ++i) {
            const unsigned v = bytes == 1
                                   ? buf[i]
                                   : (static_cast<unsigned>(buf[2 * i]) << 8) | buf[2 * i + 1];
            if (v > static_cast<unsigned>(maxval)) {
                throw RasterError(path.string() + ": P5 sample " + std::to_string(i) +
                                  " exceeds maxval");
            }
            img.pixels[i] = static_cast<double>(v);
        }
    }
    return img;
}

}  // namespace

RasterFormat raster_format_from_string(const std::string& name) {
    if (name == "auto") return RasterFormat::auto_detect;
    if (name == "matrix" || name == "plain") return RasterFormat::matrix;
    if (name == "pgm") return RasterFormat::pgm;
    if (name == "csv") return RasterFormat::csv;
    throw std::invalid_argument("unknown raster format: " + name);
}

RasterImage load_raster(const std::filesystem::path& path, RasterFormat format) {
    if (format == RasterFormat::auto_detect) {
        const std::string ext = path.extension().string();
        format = ext == ".pgm" ? RasterFormat::pgm
                 : ext == ".csv" ? RasterFormat::csv
                                 : RasterFormat::matrix;
    }
    RasterImage img = format == RasterFormat::pgm ? load_pgm(path)
                      : format == RasterFormat::csv
                          ? load_delimited(path, /*csv=*/true)
                          : load_delimited(path, /*csv=*/false);
    for (double p : img.pixels) {
        if (!std::isfinite(p) || p < 0.0) {
            throw RasterError(path.string() + ": pixels must be finite and >= 0");
        }
    }
    return img;
}

namespace {

void write_grid(const std::filesystem::path& path, const RasterImage& img,
                char delimiter) {
    std::ofstream out(path, std::ios::binary);  // LF endings everywhere
    if (!out) {
        throw RasterError(path.string() + ": cannot open for writing");
    }
    char buf[64];
    for (std::size_t r = 0; r < img.rows; ++r) {
        for (std::size_t c = 0; c < img.cols; ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", img.at(r, c));
            if (c) out.put(delimiter);
            out << buf;
        }
        out.put('\n');
    }
    if (!out) {
        throw RasterError(path.string() + ": write failed");
    }
}

}  // namespace

void write_matrix(const std::filesystem::path& path, const RasterImage& img) {
    write_grid(path, img, ' ');
}

void write_csv(const std::filesystem::path& path, const RasterImage& img) {
    write_grid(path, img, ',');
}

std::vector<Window> extract_strips(const RasterImage& img, std::size_t strip_height) {
    if (strip_height == 0 || strip_height > img.rows) {
        if (strip_height == 0) {
            throw std::invalid_argument("extract_strips: strip height must be >= 1");
        }
        return {};
    }
    const std::size_t count = img.rows / strip_height;
    std::vector<Window> strips;
    strips.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<double> pixels(strip_height * img.cols);
        const std::size_t r0 = s * strip_height;
        for (std::size_t r = 0; r < strip_height; ++r) {
            for (std::size_t c = 0; c < img.cols; ++c) {
                pixels[r * img.cols + c] = img.at(r0 + r, c);
            }
        }
        strips.emplace_back(std::move(pixels), strip_height, img.cols, std::nullopt);
    }
    return strips;
}

}  // namespace sedge
