#include "hmc/filter.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "hmc/phased_complex.hpp"

namespace hmc {

namespace {

struct Tap {
    int dx;
    int dy;
    double w;  // original weight
    double wp; // w^p (or plain w for the morphological ops)
};

// Positive-weight taps only; zero taps are outside the kernel's support.
std::vector<Tap> positive_taps(const Kernel& k) {
    std::vector<Tap> taps;
    taps.reserve(k.weights.size());
    for (int i = 0; i < k.rows(); ++i)
        for (int j = 0; j < k.cols(); ++j) {
            const double w = k.at(i, j);
            if (w > 0.0)
                taps.push_back({j - k.m, i - k.n, w, w});
        }
    return taps;
}

inline int clamp_coord(int v, int hi) { return std::clamp(v, 0, hi); }

bool all_zero(const std::vector<float>& plane) {
    return std::all_of(plane.begin(), plane.end(),
                       [](float v) { return v == 0.0f; });
}

} // namespace

PhasedImage hm_filter(const PhasedImage& img, const Kernel& k, double p) {
    if (p == 0.0)
        throw UnsupportedExponent("hm_filter: p = 0 is excluded");
    validate_kernel(k);

    std::vector<Tap> taps = positive_taps(k);
    double wp_sum = 0.0;
    for (Tap& t : taps) {
        t.wp = std::pow(t.w, p);
        wp_sum += t.wp;
    }
    const double inv_p = 1.0 / p;
    const bool zero_phase = all_zero(img.phase);

    PhasedImage out(img.width, img.height, img.channels);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            for (int c = 0; c < img.channels; ++c) {
                double sum_re = 0.0, sum_im = 0.0;
                for (const Tap& t : taps) {
                    const int sx = clamp_coord(x + t.dx, img.width - 1);
                    const int sy = clamp_coord(y + t.dy, img.height - 1);
                    double r = img.amp(sx, sy, c);
                    if (p < 0.0 && r < kFilterEpsLift)
                        r = kFilterEpsLift;
                    if (r == 0.0)
                        continue; // 0^p = 0 for p > 0
                    const double rp = t.wp * std::pow(r, p);
                    if (zero_phase) {
                        sum_re += rp;
                    } else {
                        const double ph = p * img.ph(sx, sy, c);
                        sum_re += rp * std::cos(ph);
                        sum_im += rp * std::sin(ph);
                    }
                }
                sum_re /= wp_sum;
                sum_im /= wp_sum;
                const std::size_t idx = out.index(x, y, c);
                if (sum_re == 0.0 && sum_im == 0.0)
                    continue; // zero stays the canonical zero
                if (sum_im == 0.0 && sum_re > 0.0) {
                    out.amplitude[idx] =
                        static_cast<float>(std::pow(sum_re, inv_p));
                } else {
                    const double mag = std::hypot(sum_re, sum_im);
                    double arg = std::atan2(sum_im, sum_re);
                    if (arg == -kPi)
                        arg = kPi;
                    out.amplitude[idx] = static_cast<float>(std::pow(mag, inv_p));
                    out.phase[idx] = static_cast<float>(arg * inv_p);
                }
            }
        }
    }
    return out;
}

namespace {

enum class Morph { Dilate, Erode };

PhasedImage morphological(const PhasedImage& img, const Kernel& k, Morph op) {
    validate_kernel(k);
    const std::vector<Tap> taps = positive_taps(k);
    double wmax = 0.0;
    for (const Tap& t : taps)
        wmax = std::max(wmax, t.w);

    PhasedImage out(img.width, img.height, img.channels);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            for (int c = 0; c < img.channels; ++c) {
                double best = 0.0;
                float best_phase = 0.0f;
                bool first = true;
                for (const Tap& t : taps) {
                    const int sx = clamp_coord(x + t.dx, img.width - 1);
                    const int sy = clamp_coord(y + t.dy, img.height - 1);
                    const double score = t.w * img.amp(sx, sy, c);
                    const bool wins =
                        first || (op == Morph::Dilate ? score > best : score < best);
                    if (wins) {
                        best = score;
                        best_phase = img.ph(sx, sy, c);
                        first = false;
                    }
                }
                const std::size_t idx = out.index(x, y, c);
                out.amplitude[idx] = static_cast<float>(best / wmax);
                out.phase[idx] = out.amplitude[idx] == 0.0f ? 0.0f : best_phase;
            }
        }
    }
    return out;
}

} // namespace

PhasedImage dilate(const PhasedImage& img, const Kernel& k) {
    return morphological(img, k, Morph::Dilate);
}

PhasedImage erode(const PhasedImage& img, const Kernel& k) {
    return morphological(img, k, Morph::Erode);
}

PhasedImage pipeline(const PhasedImage& img, const std::vector<FilterStage>& stages) {
    PhasedImage current = img;
    for (const FilterStage& stage : stages) {
        switch (stage.p.kind()) {
        case Exponent::Kind::Finite:
            current = hm_filter(current, stage.kernel, stage.p.value());
            break;
        case Exponent::Kind::PosInfinity:
            current = dilate(current, stage.kernel);
            break;
        case Exponent::Kind::NegInfinity:
            current = erode(current, stage.kernel);
            break;
        case Exponent::Kind::GeometricLimit:
            throw UnsupportedExponent(
                "pipeline: the geometric-mean limit is not defined as a filter stage");
        }
    }
    return current;
}

} // namespace hmc
