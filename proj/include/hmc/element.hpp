#pragma once

#include <vector>

#include "hmc/phased_complex.hpp"

namespace hmc {

enum class ElementKind { Identity, Vector, Material, Point };

// Projective color element (x, a): x is the channel coefficient with any
// weighting already multiplied in, a is the projective weight. a = 0 gives a
// vector (additive, no projection), x = 0 with a != 0 a material, (0, 0) the
// identity of every combination exponent.
struct HMElement {
    PhasedComplex x;
    PhasedComplex a;

    friend bool operator==(const HMElement& l, const HMElement& r) {
        return l.x == r.x && l.a == r.a;
    }
    friend bool operator!=(const HMElement& l, const HMElement& r) {
        return !(l == r);
    }
};

inline ElementKind classify(const HMElement& v) {
    if (v.x.is_zero())
        return v.a.is_zero() ? ElementKind::Identity : ElementKind::Material;
    return v.a.is_zero() ? ElementKind::Vector : ElementKind::Point;
}

inline HMElement identity_element() { return {}; }

// (weight * value, weight) -- the post-multiplied point form.
inline HMElement weighted_point(const PhasedComplex& value,
                                const PhasedComplex& weight) {
    return {pc_mul(weight, value), weight};
}

inline HMElement weighted_point(double value, double weight) {
    return weighted_point(pc_from_real(value), pc_from_real(weight));
}

inline HMElement vector_element(const PhasedComplex& x) { return {x, {}}; }

inline HMElement material_element(const PhasedComplex& a) { return {{}, a}; }

// b * (x, a) = (b x, b a). Leaves the projection of a point untouched; on a
// vector it scales amplitude and shifts phase.
inline HMElement hm_scalar_mul(const PhasedComplex& b, const HMElement& v) {
    return {pc_mul(b, v.x), pc_mul(b, v.a)};
}

// C(x, a) = x / a, the observable value of a point.
inline PhasedComplex project(const HMElement& v) {
    if (v.a.is_zero())
        throw VectorHasNoProjection("project: element has zero projective weight");
    return pc_div(v.x, v.a);
}

// The p-inverse: both components phase-shifted by (2n+1) pi / p. Combining
// with the original at exponent p cancels the power sums.
inline HMElement hm_inverse(const HMElement& v, double p, unsigned n) {
    if (p == 0.0)
        throw UnsupportedExponent("hm_inverse: p must be nonzero");
    const double shift = (2.0 * n + 1.0) * kPi / p;
    auto shifted = [&](const PhasedComplex& c) -> PhasedComplex {
        if (c.is_zero())
            return {};
        return {c.amplitude(), c.phase() + shift};
    };
    return {shifted(v.x), shifted(v.a)};
}

// One element per channel; ops act channel-wise. The per-channel frequency
// label is inert metadata (operations never mix channels).
struct Color {
    std::vector<HMElement> channels;
    std::vector<double> omega; // optional, parallel to channels when present

    std::size_t size() const { return channels.size(); }
};

} // namespace hmc
