#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hmc/element.hpp"

namespace hmc {

inline constexpr double kDegenerateWeightEps = 1e-12;

// Projective point in the p = 1 real algebra: K channel values plus one
// scalar weight. Negative and zero weights are allowed (zero makes it a
// vector).
struct AffinePoint {
    std::vector<double> value;
    double weight = 1.0;
};

// (sum w_i v_i) / (sum w_i). With all weight ratios positive the implied
// coefficients form a partition of unity.
std::vector<double> sum_project(std::span<const AffinePoint> points);

// x0 + s1/(1+s1) * (x1 - x0): any point of the x0-x1 line as the weight
// ratio s1 sweeps the reals. s1 = -1 is the point at infinity.
std::vector<double> line_point(std::span<const double> x0,
                               std::span<const double> x1, double s1);

// Fit c = a + t*b over Boolean t: a = c0, b = c1 - c0. b routinely has
// negative components.
std::pair<std::vector<double>, std::vector<double>>
solve_linear_light(std::span<const double> c0, std::span<const double> c1);

// Bilinear fit c = c00 + t1*dt1 + t0*dt0 + t0*t1*dt0t1 through four corner
// colors.
struct BilinearModel {
    std::vector<double> c00, dt1, dt0, dt0t1;
};

BilinearModel solve_bilinear_lights(std::span<const double> c00,
                                    std::span<const double> c01,
                                    std::span<const double> c10,
                                    std::span<const double> c11);

std::vector<double> eval_bilinear(const BilinearModel& model, double t0, double t1);

// Per-channel projective elements of an affine point, premultiplied form
// (w*v, w). Bridges the appendix solvers into the general pipeline.
std::vector<HMElement> to_elements(const AffinePoint& point);

} // namespace hmc
