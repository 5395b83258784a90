#pragma once

#include <span>
#include <vector>

#include "hmc/accumulator.hpp"

namespace hmc {

// H_p(v0, v1) = ((x0^p + x1^p)^{1/p}, (a0^p + a1^p)^{1/p}).
// Defined as accumulate-then-extract so the binary and n-ary forms agree by
// construction.
inline HMElement hm_combine(double p, const HMElement& v0, const HMElement& v1) {
    HMAccumulator acc(p);
    acc.add(v0);
    acc.add(v1);
    return acc.extract();
}

// Parenthesis-free fold. Empty input yields the identity; a single element
// comes back unchanged.
inline HMElement hm_nary(double p, std::span<const HMElement> vs) {
    HMAccumulator acc(p);
    for (const HMElement& v : vs)
        acc.add(v);
    return acc.extract();
}

inline HMElement hm_nary(double p, const std::vector<HMElement>& vs) {
    return hm_nary(p, std::span<const HMElement>(vs));
}

// Weighted geometric mean: prod x_i^{w_i / sum w}. This is the p -> 0 limit
// of the projected combination; the weights enter linearly, never raised
// to p.
double geometric_mean(std::span<const double> xs, std::span<const double> weights);

// max(w_i x_i) / max(w_i) and min(w_i x_i) / max(w_i): the p -> +/-inf
// limits with the filter normalization. Defined for nonnegative values and
// positive weights only.
double hm_max(std::span<const double> xs, std::span<const double> weights);
double hm_min(std::span<const double> xs, std::span<const double> weights);

// Direct closed forms for p = 1 (weighted mean) and p = -1 (harmonic mean)
// on positive reals. Cross-validation route, deliberately not implemented
// through the accumulator.
PhasedComplex classical_check(double p, const HMElement& v0, const HMElement& v1);

} // namespace hmc
