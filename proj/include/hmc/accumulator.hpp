#pragma once

#include <complex>
#include <cstddef>

#include "hmc/element.hpp"

namespace hmc {

// Order-independent running sum of p-th powers. Each operand is powered on
// its own and added to a Cartesian sum, so the accumulated state -- and
// therefore the n-ary combination -- cannot depend on grouping. Extraction
// applies the outer 1/p root.
//
// A component that has received exactly one nonzero term extracts to that
// term unchanged: with nothing actually summed, (z^p)^{1/p} = z holds by
// definition rather than by floating-point luck. This is what makes the
// identity element cancel field-for-field. Once two or more terms have been
// summed the phase is only defined mod 2*pi and extraction takes the
// principal value.
class HMAccumulator {
  public:
    explicit HMAccumulator(double p) : p_(p) {
        if (p == 0.0)
            throw UnsupportedExponent(
                "HMAccumulator: p = 0 is excluded; use geometric_mean");
    }

    double exponent() const { return p_; }
    std::size_t count() const { return count_; }

    // Powered Cartesian sums; exposed for inverse-residual checks.
    std::complex<double> x_sum() const { return x_.sum; }
    std::complex<double> a_sum() const { return a_.sum; }

    void add(const HMElement& v) {
        // The identity joins any combination without a trace -- both power
        // sums gain 0^p = 0 terms in the defining formula. A zero component
        // of a non-identity element is different: at p < 0 it is a pole
        // (harmonic mean of zero).
        if (v.x.is_zero() && v.a.is_zero()) {
            ++count_;
            return;
        }
        x_.add(v.x, p_);
        a_.add(v.a, p_);
        ++count_;
    }

    void merge(const HMAccumulator& other) {
        if (other.p_ != p_)
            throw MismatchedExponent("HMAccumulator: merging different exponents");
        x_.merge(other.x_);
        a_.merge(other.a_);
        count_ += other.count_;
    }

    HMElement extract() const {
        return {x_.extract(p_), a_.extract(p_)};
    }

  private:
    struct ComponentSum {
        std::complex<double> sum{0.0, 0.0};
        std::size_t terms = 0;   // nonzero contributions
        PhasedComplex single{};  // the term itself while terms == 1

        void add(const PhasedComplex& c, double p) {
            if (c.is_zero()) {
                if (p < 0.0)
                    throw DomainError(
                        "HMAccumulator: zero component with negative p (pole)");
                return; // 0^p = 0 for p > 0
            }
            sum += pc_pow(c, p).to_cartesian();
            if (++terms == 1)
                single = c;
        }

        void merge(const ComponentSum& o) {
            sum += o.sum;
            if (terms == 0)
                single = o.single;
            terms += o.terms;
        }

        PhasedComplex extract(double p) const {
            if (terms == 0)
                return {};
            if (terms == 1)
                return single;
            const PhasedComplex s = pc_from_cartesian(sum);
            if (s.is_zero()) // full cancellation
                return {};
            return pc_pow(s, 1.0 / p);
        }
    };

    double p_;
    ComponentSum x_;
    ComponentSum a_;
    std::size_t count_ = 0;
};

} // namespace hmc
