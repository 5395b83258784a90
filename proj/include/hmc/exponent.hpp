#pragma once

#include <string>

#include "hmc/errors.hpp"

namespace hmc {

// Combination exponent: a finite nonzero real, or one of the symbolic
// limits. The limits dispatch to dedicated operators (max/min/geometric
// mean) instead of evaluating H_p at a huge |p|.
class Exponent {
  public:
    enum class Kind { Finite, GeometricLimit, PosInfinity, NegInfinity };

    static Exponent finite(double p) {
        if (p == 0.0)
            throw UnsupportedExponent(
                "p = 0 is excluded; use the geometric-mean limit operator");
        return Exponent(Kind::Finite, p);
    }
    static Exponent geometric() { return Exponent(Kind::GeometricLimit, 0.0); }
    static Exponent pos_infinity() { return Exponent(Kind::PosInfinity, 0.0); }
    static Exponent neg_infinity() { return Exponent(Kind::NegInfinity, 0.0); }

    // Accepts a decimal or the tokens "inf", "-inf", "geo".
    static Exponent parse(const std::string& token);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }

    double value() const {
        if (!is_finite())
            throw UnsupportedExponent("Exponent: symbolic limit has no finite value");
        return value_;
    }

  private:
    Exponent(Kind k, double v) : kind_(k), value_(v) {}

    Kind kind_;
    double value_;
};

} // namespace hmc
