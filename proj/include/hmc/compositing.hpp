#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "hmc/element.hpp"
#include "hmc/image.hpp"

namespace hmc {

// W x H alpha plane, shared across channels.
using AlphaPlane = std::vector<float>;

struct ImageWithAlpha {
    PhasedImage image;
    AlphaPlane alpha; // size W*H; empty means fully opaque
};

// Premultiplied associative over: out = fg + (1 - alpha_fg) * bg on complex
// pixels, alpha_out = a1 + (1 - a1) * a0. Associative, not commutative.
ImageWithAlpha over(const ImageWithAlpha& fg, const ImageWithAlpha& bg);

// weight * (r0 e^{i th0} + r1 e^{i th1}) per pixel: the Cartesian sum of the
// two complex planes. Commutative and associative outright.
PhasedComplex phase_add(const PhasedComplex& c0, const PhasedComplex& c1,
                        double weight);
PhasedImage add_phase_composite(const PhasedImage& img0, const PhasedImage& img1,
                                double weight);

// Blend function of the generalized compositing equation
//   alpha*x = a1 * F(x1, x0) + (1 - a1) * x0.
struct BlendFunction {
    enum class Kind { Add, Mul, Max, Min, HolderMinkowski };
    Kind kind = Kind::Add;
    double p = 1.0; // exponent for the HolderMinkowski kind

    static BlendFunction add() { return {Kind::Add, 0.0}; }
    static BlendFunction mul() { return {Kind::Mul, 0.0}; }
    static BlendFunction max() { return {Kind::Max, 0.0}; }
    static BlendFunction min() { return {Kind::Min, 0.0}; }
    static BlendFunction hm(double p);
};

// Output color planes are premultiplied, like over's. hm(p) combines the two
// straight colors as equal-weight points through the projected combination;
// max/min demand zero-phase nonnegative inputs.
ImageWithAlpha generalized_composite(const BlendFunction& f,
                                     const ImageWithAlpha& fg,
                                     const ImageWithAlpha& bg);

// H_p compositing with explicit weight planes (shared alpha or a per-channel
// weight image): out = C(H_p((w1*x1, w1), (w0*x0, w0))) per pixel/channel.
PhasedImage hm_composite(const PhasedImage& img1, const PhasedImage& w1,
                         const PhasedImage& img0, const PhasedImage& w0,
                         double p);

// K x K complex channel-coupling matrix, optionally extended by one
// projective row/column. Only meaningful at p = 1: the combination has to be
// linear for channels to mix.
struct MaterialMatrix {
    int k = 0;
    bool projective = false; // (k+1) x (k+1) storage when set
    std::vector<std::complex<double>> entries; // row-major

    int dim() const { return projective ? k + 1 : k; }
    const std::complex<double>& at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * dim() + c];
    }
};

void validate_matrix(const MaterialMatrix& m);

// Text format: first line K, then K (or K+1) rows of "re,im" entries.
MaterialMatrix parse_matrix(std::istream& in);
MaterialMatrix load_matrix(const std::string& path);

// x'_u = sum_v b_{u,v} x_v on a pixel of K vector elements.
std::vector<HMElement> apply_material_matrix(const MaterialMatrix& m,
                                             const std::vector<HMElement>& pixel);

// Projective form: couples the alpha scalar through the last row/column.
std::pair<std::vector<HMElement>, std::complex<double>>
apply_material_matrix(const MaterialMatrix& m, const std::vector<HMElement>& pixel,
                      const std::complex<double>& alpha);

MaterialMatrix matrix_multiply(const MaterialMatrix& m2, const MaterialMatrix& m1);

// (c, 0) + (0, a) = (c, a): a traveling light picks up a projective
// attenuation term; projecting divides by it (inverse-square when a = r^2).
HMElement attenuate(const HMElement& light, const PhasedComplex& a_term);

} // namespace hmc
