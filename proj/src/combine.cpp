#include "hmc/combine.hpp"

#include <algorithm>
#include <cmath>

namespace hmc {

namespace {

void check_weight_lists(std::span<const double> xs, std::span<const double> weights) {
    if (xs.empty())
        throw DomainError("weighted operator: empty input");
    if (xs.size() != weights.size())
        throw DomainError("weighted operator: xs and weights differ in length");
    for (double w : weights)
        if (!(w > 0.0))
            throw DomainError("weighted operator: weights must be positive");
}

} // namespace

double geometric_mean(std::span<const double> xs, std::span<const double> weights) {
    check_weight_lists(xs, weights);
    double wsum = 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0))
            throw DomainError("geometric_mean: values must be positive");
        acc += weights[i] * std::log(xs[i]);
        wsum += weights[i];
    }
    return std::exp(acc / wsum);
}

double hm_max(std::span<const double> xs, std::span<const double> weights) {
    check_weight_lists(xs, weights);
    double best = -1.0, wmax = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 0.0)
            throw DomainError("hm_max: values must be nonnegative");
        best = std::max(best, weights[i] * xs[i]);
        wmax = std::max(wmax, weights[i]);
    }
    return best / wmax;
}

double hm_min(std::span<const double> xs, std::span<const double> weights) {
    check_weight_lists(xs, weights);
    double best = std::numeric_limits<double>::infinity(), wmax = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 0.0)
            throw DomainError("hm_min: values must be nonnegative");
        best = std::min(best, weights[i] * xs[i]);
        wmax = std::max(wmax, weights[i]);
    }
    return best / wmax;
}

namespace {

double positive_real_or_throw(const PhasedComplex& c, const char* what) {
    if (c.is_zero() || c.phase() != 0.0)
        throw DomainError(std::string("classical_check: ") + what +
                          " must be a positive real");
    return c.amplitude();
}

} // namespace

PhasedComplex classical_check(double p, const HMElement& v0, const HMElement& v1) {
    const double x0 = positive_real_or_throw(v0.x, "x0");
    const double a0 = positive_real_or_throw(v0.a, "a0");
    const double x1 = positive_real_or_throw(v1.x, "x1");
    const double a1 = positive_real_or_throw(v1.a, "a1");
    if (p == 1.0)
        return pc_from_real((x0 + x1) / (a0 + a1));
    if (p == -1.0)
        return pc_from_real((1.0 / a0 + 1.0 / a1) / (1.0 / x0 + 1.0 / x1));
    throw UnsupportedExponent("classical_check: closed forms exist for p = 1, -1 only");
}

} // namespace hmc
