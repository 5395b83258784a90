#pragma once

#include <cmath>
#include <complex>

#include "hmc/errors.hpp"

namespace hmc {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// A complex scalar stored as (amplitude, phase) with the phase kept as an
// unbounded real instead of a value mod 2*pi. Powers multiply the phase, so
// pow(pow(z, q), 1/q) returns the original branch instead of collapsing to
// the principal one. The zero value is canonically (0, 0).
class PhasedComplex {
  public:
    constexpr PhasedComplex() = default;

    PhasedComplex(double amplitude, double phase)
        : amplitude_(amplitude), phase_(phase) {
        if (amplitude_ < 0.0)
            throw DomainError("PhasedComplex: negative amplitude");
        if (amplitude_ == 0.0)
            phase_ = 0.0;
    }

    double amplitude() const { return amplitude_; }
    double phase() const { return phase_; }
    bool is_zero() const { return amplitude_ == 0.0; }

    std::complex<double> to_cartesian() const {
        if (is_zero())
            return {0.0, 0.0};
        return {amplitude_ * std::cos(phase_), amplitude_ * std::sin(phase_)};
    }

    friend bool operator==(const PhasedComplex& a, const PhasedComplex& b) {
        return a.amplitude_ == b.amplitude_ && a.phase_ == b.phase_;
    }
    friend bool operator!=(const PhasedComplex& a, const PhasedComplex& b) {
        return !(a == b);
    }

  private:
    double amplitude_ = 0.0;
    double phase_ = 0.0;
};

// Amplitude/principal-phase form of a Cartesian complex number. The phase
// lands in (-pi, pi]; exact zero maps to the canonical zero.
inline PhasedComplex pc_from_cartesian(double re, double im) {
    const double amplitude = std::hypot(re, im);
    if (amplitude == 0.0)
        return {};
    double phase = std::atan2(im, re);
    if (phase == -kPi) // atan2 yields -pi for im = -0.0; fold onto +pi
        phase = kPi;
    return {amplitude, phase};
}

inline PhasedComplex pc_from_cartesian(const std::complex<double>& z) {
    return pc_from_cartesian(z.real(), z.imag());
}

// Real axis embedding: negatives land on the pi branch.
inline PhasedComplex pc_from_real(double r) {
    if (r < 0.0)
        return {-r, kPi};
    return {r, 0.0};
}

// z^q = (amplitude^q, q * phase). The zero-to-nonpositive-power case is a
// pole (it shows up as a harmonic mean of zero) and is reported, not
// saturated.
inline PhasedComplex pc_pow(const PhasedComplex& z, double q) {
    if (z.is_zero()) {
        if (q > 0.0)
            return {};
        throw DomainError("pc_pow: zero raised to a nonpositive power");
    }
    return {std::pow(z.amplitude(), q), q * z.phase()};
}

inline PhasedComplex pc_mul(const PhasedComplex& a, const PhasedComplex& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    return {a.amplitude() * b.amplitude(), a.phase() + b.phase()};
}

inline PhasedComplex pc_div(const PhasedComplex& a, const PhasedComplex& b) {
    if (b.is_zero())
        throw DomainError("pc_div: division by zero");
    if (a.is_zero())
        return {};
    return {a.amplitude() / b.amplitude(), a.phase() - b.phase()};
}

} // namespace hmc
