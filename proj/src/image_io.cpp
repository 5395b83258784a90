#include "hmc/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>

#include "hmc/phased_complex.hpp"

namespace hmc {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f)
            std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

std::uint16_t quantize_unit(float v, int levels) {
    if (v < 0.0f)
        v = 0.0f;
    if (v > 1.0f)
        v = 1.0f;
    const double scaled = static_cast<double>(v) * (levels - 1);
    double q = std::nearbyint(scaled); // FE_TONEAREST: ties to even
    if (q > levels - 1)
        q = levels - 1;
    return static_cast<std::uint16_t>(q);
}

Plane load_png(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f)
        throw IoError("cannot open '" + path + "' for reading");

    png_byte header[8];
    if (std::fread(header, 1, 8, f.get()) != 8 || png_sig_cmp(header, 0, 8))
        throw IoError("'" + path + "' is not a PNG file");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                             nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("libpng initialization failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("libpng failed reading '" + path + "'");
    }

    png_init_io(png, f.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const int color_type = png_get_color_type(png, info);
    int bit_depth = png_get_bit_depth(png, info);

    if (color_type == PNG_COLOR_TYPE_PALETTE)
        png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS))
        png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    if (bit_depth == 16)
        png_set_swap(png); // file is big endian
    png_read_update_info(png, info);

    Plane plane;
    plane.width = static_cast<int>(png_get_image_width(png, info));
    plane.height = static_cast<int>(png_get_image_height(png, info));
    plane.channels = static_cast<int>(png_get_channels(png, info));
    bit_depth = png_get_bit_depth(png, info);

    const std::size_t row_bytes = png_get_rowbytes(png, info);
    std::vector<png_byte> raw(row_bytes * plane.height);
    std::vector<png_bytep> rows(plane.height);
    for (int y = 0; y < plane.height; ++y)
        rows[y] = raw.data() + row_bytes * y;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    plane.data.resize(static_cast<std::size_t>(plane.width) * plane.height *
                      plane.channels);
    const std::size_t n = plane.data.size();
    if (bit_depth == 16) {
        const auto* px = reinterpret_cast<const std::uint16_t*>(raw.data());
        for (std::size_t i = 0; i < n; ++i)
            plane.data[i] = static_cast<float>(px[i]) / 65535.0f;
    } else {
        for (std::size_t i = 0; i < n; ++i)
            plane.data[i] = static_cast<float>(raw[i]) / 255.0f;
    }
    return plane;
}

void save_png(const std::string& path, const Plane& plane, int bit_depth) {
    if (bit_depth != 8 && bit_depth != 16)
        throw IoError("PNG bit depth must be 8 or 16");
    if (plane.channels != 1 && plane.channels != 3)
        throw IoError("PNG writer supports 1 or 3 channels; use PFM otherwise");

    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                              nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw IoError("libpng initialization failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("libpng failed writing '" + path + "'");
    }

    png_init_io(png, f.get());
    const int color_type =
        plane.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
    png_set_IHDR(png, info, plane.width, plane.height, bit_depth, color_type,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    if (bit_depth == 16)
        png_set_swap(png);

    const int levels = bit_depth == 16 ? 65536 : 256;
    const std::size_t row_px =
        static_cast<std::size_t>(plane.width) * plane.channels;
    if (bit_depth == 16) {
        std::vector<std::uint16_t> row(row_px);
        for (int y = 0; y < plane.height; ++y) {
            for (std::size_t i = 0; i < row_px; ++i)
                row[i] = quantize_unit(plane.data[row_px * y + i], levels);
            png_write_row(png, reinterpret_cast<png_bytep>(row.data()));
        }
    } else {
        std::vector<std::uint8_t> row(row_px);
        for (int y = 0; y < plane.height; ++y) {
            for (std::size_t i = 0; i < row_px; ++i)
                row[i] = static_cast<std::uint8_t>(
                    quantize_unit(plane.data[row_px * y + i], levels));
            png_write_row(png, row.data());
        }
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

Plane load_pfm(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path + "' for reading");

    std::string magic;
    f >> magic;
    int channels;
    if (magic == "PF")
        channels = 3;
    else if (magic == "Pf")
        channels = 1;
    else
        throw IoError("'" + path + "' is not a PFM file");

    int width = 0, height = 0;
    float scale = 0.0f;
    f >> width >> height >> scale;
    if (!f || width <= 0 || height <= 0)
        throw IoError("bad PFM header in '" + path + "'");
    if (scale >= 0.0f)
        throw IoError("big-endian PFM not supported: '" + path + "'");
    f.ignore(1); // single whitespace before the raster

    Plane plane;
    plane.width = width;
    plane.height = height;
    plane.channels = channels;
    plane.data.resize(static_cast<std::size_t>(width) * height * channels);

    const std::size_t row_px = static_cast<std::size_t>(width) * channels;
    for (int y = height - 1; y >= 0; --y) { // bottom row first
        f.read(reinterpret_cast<char*>(plane.data.data() + row_px * y),
               static_cast<std::streamsize>(row_px * sizeof(float)));
        if (!f)
            throw IoError("truncated PFM raster in '" + path + "'");
    }
    const float inv = -1.0f / scale;
    if (inv != 1.0f)
        for (float& v : plane.data)
            v *= inv;
    return plane;
}

void save_pfm(const std::string& path, const Plane& plane) {
    if (plane.channels != 1 && plane.channels != 3)
        throw IoError("PFM writer supports 1 or 3 channels");
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    f << (plane.channels == 3 ? "PF" : "Pf") << "\n"
      << plane.width << " " << plane.height << "\n"
      << "-1.0\n";
    const std::size_t row_px = static_cast<std::size_t>(plane.width) * plane.channels;
    for (int y = plane.height - 1; y >= 0; --y)
        f.write(reinterpret_cast<const char*>(plane.data.data() + row_px * y),
                static_cast<std::streamsize>(row_px * sizeof(float)));
    if (!f)
        throw IoError("failed writing '" + path + "'");
}

Plane load_plane(const std::string& path) {
    if (has_suffix(path, ".png"))
        return load_png(path);
    if (has_suffix(path, ".pfm"))
        return load_pfm(path);
    throw IoError("unsupported image extension: '" + path + "'");
}

void save_plane(const std::string& path, const Plane& plane, int bit_depth) {
    if (has_suffix(path, ".png"))
        save_png(path, plane, bit_depth);
    else if (has_suffix(path, ".pfm"))
        save_pfm(path, plane);
    else
        throw IoError("unsupported image extension: '" + path + "'");
}

PhasedImage load_phased(const std::string& amp_path,
                        const std::optional<std::string>& phase_path) {
    Plane amp = load_plane(amp_path);
    PhasedImage img(amp.width, amp.height, amp.channels);
    for (std::size_t i = 0; i < amp.data.size(); ++i)
        img.amplitude[i] = amp.data[i] < 0.0f ? 0.0f : amp.data[i];

    if (phase_path) {
        Plane ph = load_plane(*phase_path);
        if (ph.width != amp.width || ph.height != amp.height ||
            ph.channels != amp.channels)
            throw DimensionMismatch("phase plane shape differs from amplitude");
        const bool turns = has_suffix(*phase_path, ".png");
        for (std::size_t i = 0; i < ph.data.size(); ++i)
            img.phase[i] = turns ? static_cast<float>(kTwoPi) * ph.data[i]
                                 : ph.data[i];
    }
    return img;
}

void save_phased(const PhasedImage& img, const std::string& amp_path,
                 const std::optional<std::string>& phase_path, int bit_depth) {
    Plane amp;
    amp.width = img.width;
    amp.height = img.height;
    amp.channels = img.channels;
    amp.data = img.amplitude;
    save_plane(amp_path, amp, bit_depth);

    if (phase_path) {
        Plane ph;
        ph.width = img.width;
        ph.height = img.height;
        ph.channels = img.channels;
        ph.data.resize(img.phase.size());
        const bool turns = has_suffix(*phase_path, ".png");
        for (std::size_t i = 0; i < img.phase.size(); ++i) {
            double w = std::fmod(static_cast<double>(img.phase[i]), kTwoPi);
            if (w < 0.0)
                w += kTwoPi;
            ph.data[i] = static_cast<float>(turns ? w / kTwoPi : w);
        }
        save_plane(*phase_path, ph, bit_depth);
    }
}

DisplayMode parse_display_mode(const std::string& token) {
    if (token == "clamp")
        return DisplayMode::Clamp;
    if (token == "normalize")
        return DisplayMode::Normalize;
    if (token == "magnitude")
        return DisplayMode::Magnitude;
    throw IoError("unknown display mode '" + token + "'");
}

std::vector<std::uint8_t> to_display(const PhasedImage& img, DisplayMode mode) {
    std::vector<std::uint8_t> out(img.amplitude.size(), 0);
    float scale = 1.0f;
    if (mode == DisplayMode::Normalize) {
        float max = 0.0f;
        for (float v : img.amplitude)
            max = std::max(max, v);
        if (max == 0.0f)
            return out;
        scale = 1.0f / max;
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(
            quantize_unit(img.amplitude[i] * scale, 256));
    return out;
}

} // namespace hmc
