#include "hmc/compositing.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hmc/combine.hpp"

namespace hmc {

namespace {

std::complex<double> pixel_complex(const PhasedImage& img, std::size_t idx) {
    const double r = img.amplitude[idx];
    if (r == 0.0)
        return {0.0, 0.0};
    const double th = img.phase[idx];
    return {r * std::cos(th), r * std::sin(th)};
}

void store_complex(PhasedImage& img, std::size_t idx, const std::complex<double>& z) {
    const PhasedComplex pc = pc_from_cartesian(z);
    img.amplitude[idx] = static_cast<float>(pc.amplitude());
    img.phase[idx] = static_cast<float>(pc.phase());
}

float alpha_at(const AlphaPlane& alpha, std::size_t px) {
    return alpha.empty() ? 1.0f : alpha[px];
}

void check_alpha(const ImageWithAlpha& layer, const char* name) {
    if (layer.alpha.empty())
        return;
    const std::size_t px =
        static_cast<std::size_t>(layer.image.width) * layer.image.height;
    if (layer.alpha.size() != px)
        throw DimensionMismatch(std::string(name) + ": alpha plane size mismatch");
    for (float a : layer.alpha)
        if (a < 0.0f || a > 1.0f)
            throw DomainError(std::string(name) + ": alpha outside [0,1]");
}

} // namespace

ImageWithAlpha over(const ImageWithAlpha& fg, const ImageWithAlpha& bg) {
    require_same_shape(fg.image, bg.image, "over");
    check_alpha(fg, "over fg");
    check_alpha(bg, "over bg");

    const PhasedImage& f = fg.image;
    ImageWithAlpha out;
    out.image = PhasedImage(f.width, f.height, f.channels);
    const std::size_t pixels = static_cast<std::size_t>(f.width) * f.height;
    out.alpha.resize(pixels);

    for (std::size_t px = 0; px < pixels; ++px) {
        const double a1 = alpha_at(fg.alpha, px);
        const double a0 = alpha_at(bg.alpha, px);
        const double keep = 1.0 - a1;
        out.alpha[px] = static_cast<float>(a1 + keep * a0);
        for (int c = 0; c < f.channels; ++c) {
            const std::size_t idx = px * f.channels + c;
            store_complex(out.image, idx,
                          pixel_complex(f, idx) +
                              keep * pixel_complex(bg.image, idx));
        }
    }
    return out;
}

PhasedComplex phase_add(const PhasedComplex& c0, const PhasedComplex& c1,
                        double weight) {
    return pc_from_cartesian(weight * (c0.to_cartesian() + c1.to_cartesian()));
}

PhasedImage add_phase_composite(const PhasedImage& img0, const PhasedImage& img1,
                                double weight) {
    require_same_shape(img0, img1, "add_phase_composite");
    PhasedImage out(img0.width, img0.height, img0.channels);
    for (std::size_t idx = 0; idx < out.plane_size(); ++idx)
        store_complex(out, idx,
                      weight * (pixel_complex(img0, idx) + pixel_complex(img1, idx)));
    return out;
}

BlendFunction BlendFunction::hm(double p) {
    if (p == 0.0)
        throw UnsupportedExponent("blend hm(p): p must be nonzero");
    return {Kind::HolderMinkowski, p};
}

namespace {

std::complex<double> blend_value(const BlendFunction& f,
                                 const std::complex<double>& x1,
                                 const std::complex<double>& x0) {
    switch (f.kind) {
    case BlendFunction::Kind::Add:
        return x1 + x0;
    case BlendFunction::Kind::Mul:
        return x1 * x0;
    case BlendFunction::Kind::Max:
        return {std::max(x1.real(), x0.real()), 0.0};
    case BlendFunction::Kind::Min:
        return {std::min(x1.real(), x0.real()), 0.0};
    case BlendFunction::Kind::HolderMinkowski: {
        const HMElement e1{pc_from_cartesian(x1), pc_from_real(1.0)};
        const HMElement e0{pc_from_cartesian(x0), pc_from_real(1.0)};
        return project(hm_combine(f.p, e1, e0)).to_cartesian();
    }
    }
    throw Error("blend_value: unreachable");
}

} // namespace

ImageWithAlpha generalized_composite(const BlendFunction& f,
                                     const ImageWithAlpha& fg,
                                     const ImageWithAlpha& bg) {
    require_same_shape(fg.image, bg.image, "generalized_composite");
    check_alpha(fg, "generalized_composite fg");
    check_alpha(bg, "generalized_composite bg");

    if (f.kind == BlendFunction::Kind::Max || f.kind == BlendFunction::Kind::Min) {
        for (float th : fg.image.phase)
            if (th != 0.0f)
                throw DomainError("max/min blending requires zero-phase inputs");
        for (float th : bg.image.phase)
            if (th != 0.0f)
                throw DomainError("max/min blending requires zero-phase inputs");
    }

    const PhasedImage& fimg = fg.image;
    ImageWithAlpha out;
    out.image = PhasedImage(fimg.width, fimg.height, fimg.channels);
    const std::size_t pixels = static_cast<std::size_t>(fimg.width) * fimg.height;
    out.alpha.resize(pixels);

    for (std::size_t px = 0; px < pixels; ++px) {
        const double a1 = alpha_at(fg.alpha, px);
        const double a0 = alpha_at(bg.alpha, px);
        const double keep = 1.0 - a1;
        out.alpha[px] = static_cast<float>(a1 + keep * a0);
        for (int c = 0; c < fimg.channels; ++c) {
            const std::size_t idx = px * fimg.channels + c;
            const std::complex<double> x1 = pixel_complex(fimg, idx);
            const std::complex<double> x0 = pixel_complex(bg.image, idx);
            store_complex(out.image, idx, a1 * blend_value(f, x1, x0) + keep * x0);
        }
    }
    return out;
}

namespace {

PhasedComplex weight_at(const PhasedImage& w, std::size_t px, int c) {
    // Shared plane (K = 1) or per-channel weights.
    const std::size_t idx = w.channels == 1 ? px : px * w.channels + c;
    return {w.amplitude[idx], w.phase[idx]};
}

} // namespace

PhasedImage hm_composite(const PhasedImage& img1, const PhasedImage& w1,
                         const PhasedImage& img0, const PhasedImage& w0,
                         double p) {
    require_same_shape(img0, img1, "hm_composite");
    auto check_w = [&](const PhasedImage& w) {
        if (w.width != img0.width || w.height != img0.height ||
            (w.channels != 1 && w.channels != img0.channels))
            throw DimensionMismatch("hm_composite: weight plane shape mismatch");
    };
    check_w(w0);
    check_w(w1);

    PhasedImage out(img0.width, img0.height, img0.channels);
    const std::size_t pixels = static_cast<std::size_t>(img0.width) * img0.height;
    for (std::size_t px = 0; px < pixels; ++px) {
        for (int c = 0; c < img0.channels; ++c) {
            const std::size_t idx = px * img0.channels + c;
            const HMElement e1 =
                weighted_point(PhasedComplex(img1.amplitude[idx], img1.phase[idx]),
                               weight_at(w1, px, c));
            const HMElement e0 =
                weighted_point(PhasedComplex(img0.amplitude[idx], img0.phase[idx]),
                               weight_at(w0, px, c));
            const PhasedComplex v = project(hm_combine(p, e1, e0));
            out.amplitude[idx] = static_cast<float>(v.amplitude());
            out.phase[idx] = static_cast<float>(v.phase());
        }
    }
    return out;
}

void validate_matrix(const MaterialMatrix& m) {
    if (m.k < 1)
        throw InvalidMatrix("material matrix: channel count must be >= 1");
    const int d = m.dim();
    if (m.entries.size() != static_cast<std::size_t>(d) * d)
        throw InvalidMatrix("material matrix: entry count does not match size");
    if (m.projective) {
        for (int c = 0; c < m.k; ++c)
            if (m.at(m.k, c) != std::complex<double>(0.0, 0.0))
                throw InvalidMatrix(
                    "material matrix: leading entries of the last row must be zero");
    }
}

MaterialMatrix parse_matrix(std::istream& in) {
    MaterialMatrix m;
    if (!(in >> m.k) || m.k < 1)
        throw IoError("material matrix: cannot parse channel count");

    std::vector<std::complex<double>> entries;
    std::string tok;
    while (in >> tok) {
        double re = 0.0, im = 0.0;
        if (std::sscanf(tok.c_str(), "%lf,%lf", &re, &im) != 2)
            throw IoError("material matrix: bad entry '" + tok + "'");
        entries.emplace_back(re, im);
    }
    const std::size_t plain = static_cast<std::size_t>(m.k) * m.k;
    const std::size_t extended = static_cast<std::size_t>(m.k + 1) * (m.k + 1);
    if (entries.size() == plain)
        m.projective = false;
    else if (entries.size() == extended)
        m.projective = true;
    else
        throw IoError("material matrix: expected KxK or (K+1)x(K+1) entries");
    m.entries = std::move(entries);
    validate_matrix(m);
    return m;
}

MaterialMatrix load_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw IoError("cannot open matrix file '" + path + "'");
    return parse_matrix(f);
}

namespace {

std::complex<double> vector_coefficient(const HMElement& e) {
    if (!e.a.is_zero())
        throw NotAVector("material matrix: pixel elements must be vectors (a = 0)");
    return e.x.to_cartesian();
}

} // namespace

std::vector<HMElement> apply_material_matrix(const MaterialMatrix& m,
                                             const std::vector<HMElement>& pixel) {
    validate_matrix(m);
    if (pixel.size() != static_cast<std::size_t>(m.k))
        throw DimensionMismatch("material matrix: pixel channel count mismatch");

    std::vector<std::complex<double>> in(pixel.size());
    for (std::size_t c = 0; c < pixel.size(); ++c)
        in[c] = vector_coefficient(pixel[c]);

    std::vector<HMElement> out(pixel.size());
    for (int r = 0; r < m.k; ++r) {
        std::complex<double> sum{0.0, 0.0};
        for (int c = 0; c < m.k; ++c)
            sum += m.at(r, c) * in[c];
        out[r] = vector_element(pc_from_cartesian(sum));
    }
    return out;
}

std::pair<std::vector<HMElement>, std::complex<double>>
apply_material_matrix(const MaterialMatrix& m, const std::vector<HMElement>& pixel,
                      const std::complex<double>& alpha) {
    validate_matrix(m);
    if (!m.projective)
        throw InvalidMatrix("material matrix: projective form required");
    if (pixel.size() != static_cast<std::size_t>(m.k))
        throw DimensionMismatch("material matrix: pixel channel count mismatch");

    std::vector<std::complex<double>> in(pixel.size());
    for (std::size_t c = 0; c < pixel.size(); ++c)
        in[c] = vector_coefficient(pixel[c]);

    std::vector<HMElement> out(pixel.size());
    for (int r = 0; r < m.k; ++r) {
        std::complex<double> sum = m.at(r, m.k) * alpha;
        for (int c = 0; c < m.k; ++c)
            sum += m.at(r, c) * in[c];
        out[r] = vector_element(pc_from_cartesian(sum));
    }
    return {std::move(out), m.at(m.k, m.k) * alpha};
}

MaterialMatrix matrix_multiply(const MaterialMatrix& m2, const MaterialMatrix& m1) {
    validate_matrix(m1);
    validate_matrix(m2);
    if (m1.k != m2.k || m1.projective != m2.projective)
        throw InvalidMatrix("matrix_multiply: incompatible shapes");
    const int d = m1.dim();
    MaterialMatrix out;
    out.k = m1.k;
    out.projective = m1.projective;
    out.entries.assign(static_cast<std::size_t>(d) * d, {0.0, 0.0});
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            std::complex<double> sum{0.0, 0.0};
            for (int t = 0; t < d; ++t)
                sum += m2.at(r, t) * m1.at(t, c);
            out.entries[static_cast<std::size_t>(r) * d + c] = sum;
        }
    return out;
}

HMElement attenuate(const HMElement& light, const PhasedComplex& a_term) {
    if (!light.a.is_zero())
        throw NotAVector("attenuate: light must be a vector element");
    // H_1 with the material (0, a): zero terms drop out of both sums.
    return {light.x, a_term};
}

} // namespace hmc
