#include "hmc/affine.hpp"

#include <cmath>

namespace hmc {

namespace {

void check_same_length(std::size_t a, std::size_t b, const char* where) {
    if (a != b)
        throw DimensionMismatch(std::string(where) + ": channel counts differ");
}

} // namespace

std::vector<double> sum_project(std::span<const AffinePoint> points) {
    if (points.empty())
        throw DegenerateWeight("sum_project: no points");
    const std::size_t k = points.front().value.size();
    std::vector<double> sum(k, 0.0);
    double wsum = 0.0;
    for (const AffinePoint& p : points) {
        check_same_length(p.value.size(), k, "sum_project");
        for (std::size_t c = 0; c < k; ++c)
            sum[c] += p.weight * p.value[c];
        wsum += p.weight;
    }
    if (std::fabs(wsum) < kDegenerateWeightEps)
        throw DegenerateWeight("sum_project: weights sum to zero");
    for (double& v : sum)
        v /= wsum;
    return sum;
}

std::vector<double> line_point(std::span<const double> x0,
                               std::span<const double> x1, double s1) {
    check_same_length(x0.size(), x1.size(), "line_point");
    if (std::fabs(1.0 + s1) < kDegenerateWeightEps)
        throw DegenerateWeight("line_point: s1 = -1 is the point at infinity");
    const double t = s1 / (1.0 + s1);
    std::vector<double> out(x0.size());
    for (std::size_t c = 0; c < out.size(); ++c)
        out[c] = x0[c] + t * (x1[c] - x0[c]);
    return out;
}

std::pair<std::vector<double>, std::vector<double>>
solve_linear_light(std::span<const double> c0, std::span<const double> c1) {
    check_same_length(c0.size(), c1.size(), "solve_linear_light");
    std::vector<double> a(c0.begin(), c0.end());
    std::vector<double> b(c0.size());
    for (std::size_t c = 0; c < b.size(); ++c)
        b[c] = c1[c] - c0[c];
    return {std::move(a), std::move(b)};
}

BilinearModel solve_bilinear_lights(std::span<const double> c00,
                                    std::span<const double> c01,
                                    std::span<const double> c10,
                                    std::span<const double> c11) {
    check_same_length(c00.size(), c01.size(), "solve_bilinear_lights");
    check_same_length(c00.size(), c10.size(), "solve_bilinear_lights");
    check_same_length(c00.size(), c11.size(), "solve_bilinear_lights");
    BilinearModel m;
    const std::size_t k = c00.size();
    m.c00.assign(c00.begin(), c00.end());
    m.dt1.resize(k);
    m.dt0.resize(k);
    m.dt0t1.resize(k);
    for (std::size_t c = 0; c < k; ++c) {
        m.dt1[c] = c01[c] - c00[c];
        m.dt0[c] = c10[c] - c00[c];
        m.dt0t1[c] = c11[c] - c10[c] - c01[c] + c00[c];
    }
    return m;
}

std::vector<double> eval_bilinear(const BilinearModel& model, double t0, double t1) {
    std::vector<double> out(model.c00.size());
    for (std::size_t c = 0; c < out.size(); ++c)
        out[c] = model.c00[c] + t1 * model.dt1[c] + t0 * model.dt0[c] +
                 t0 * t1 * model.dt0t1[c];
    return out;
}

std::vector<HMElement> to_elements(const AffinePoint& point) {
    std::vector<HMElement> out;
    out.reserve(point.value.size());
    for (double v : point.value)
        out.push_back({pc_from_real(point.weight * v), pc_from_real(point.weight)});
    return out;
}

} // namespace hmc
