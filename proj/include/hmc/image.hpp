#pragma once

#include <cstdint>
#include <vector>

#include "hmc/errors.hpp"

namespace hmc {

// Dual-plane complex image: a nonnegative amplitude plane and a phase plane
// in radians, W x H x K, row-major with interleaved channels. A missing
// phase source materializes as all zeros, which keeps amplitude-only
// pipelines bit-identical to ones that never heard of phases.
struct PhasedImage {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<float> amplitude;
    std::vector<float> phase;

    PhasedImage() = default;
    PhasedImage(int w, int h, int k)
        : width(w), height(h), channels(k),
          amplitude(static_cast<std::size_t>(w) * h * k, 0.0f),
          phase(static_cast<std::size_t>(w) * h * k, 0.0f) {
        if (w <= 0 || h <= 0 || k <= 0)
            throw DimensionMismatch("PhasedImage: nonpositive dimensions");
    }

    std::size_t index(int x, int y, int c) const {
        return (static_cast<std::size_t>(y) * width + x) * channels + c;
    }
    float amp(int x, int y, int c) const { return amplitude[index(x, y, c)]; }
    float& amp(int x, int y, int c) { return amplitude[index(x, y, c)]; }
    float ph(int x, int y, int c) const { return phase[index(x, y, c)]; }
    float& ph(int x, int y, int c) { return phase[index(x, y, c)]; }

    std::size_t plane_size() const { return amplitude.size(); }

    bool same_shape(const PhasedImage& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }
};

inline void require_same_shape(const PhasedImage& a, const PhasedImage& b,
                               const char* where) {
    if (!a.same_shape(b))
        throw DimensionMismatch(std::string(where) + ": image shapes differ");
}

} // namespace hmc
