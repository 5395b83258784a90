#pragma once

#include <optional>
#include <string>

#include "hmc/image.hpp"

namespace hmc {

// Raw image plane as decoded from disk. PNG planes are normalized to [0,1];
// PFM planes carry raw floats.
struct Plane {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<float> data;
};

// PNG, 8- or 16-bit, gray or RGB. Values are scaled to [0,1] on load and
// quantized round-half-to-even on save.
Plane load_png(const std::string& path);
void save_png(const std::string& path, const Plane& plane, int bit_depth = 8);

// PFM float maps, little endian (negative scale), 1 or 3 channels, stored
// bottom row first.
Plane load_pfm(const std::string& path);
void save_pfm(const std::string& path, const Plane& plane);

// Dispatch on extension (.png / .pfm).
Plane load_plane(const std::string& path);
void save_plane(const std::string& path, const Plane& plane, int bit_depth = 8);

// Assemble a phased image from an amplitude file and an optional phase
// file. Quantized (PNG) phase values v map to 2*pi*v per the display
// convention; PFM phase planes hold radians directly. No phase file means
// a zero phase plane.
PhasedImage load_phased(const std::string& amp_path,
                        const std::optional<std::string>& phase_path = std::nullopt);

// Inverse of load_phased. PNG amplitudes are clamped to [0,1]; phases are
// wrapped to [0, 2*pi) and stored as turns (PNG) or radians (PFM).
void save_phased(const PhasedImage& img, const std::string& amp_path,
                 const std::optional<std::string>& phase_path = std::nullopt,
                 int bit_depth = 8);

enum class DisplayMode { Clamp, Normalize, Magnitude };

DisplayMode parse_display_mode(const std::string& token);

// Amplitude plane mapped to 8-bit for display. clamp: clip to [0,1];
// normalize: divide by the image max (all zero stays zero); magnitude is an
// alias of clamp since the amplitude plane already holds |z|.
std::vector<std::uint8_t> to_display(const PhasedImage& img, DisplayMode mode);

// Round-half-to-even quantization of v in [0,1] to {0..levels-1} steps.
std::uint16_t quantize_unit(float v, int levels);

} // namespace hmc
