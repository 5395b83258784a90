#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hmc/errors.hpp"

namespace hmc {

// (2n+1) x (2m+1) grid of nonnegative weights, row-major, at least one
// positive. n is the vertical half-extent, m the horizontal one.
struct Kernel {
    int n = 0;
    int m = 0;
    std::vector<double> weights; // (2n+1)*(2m+1)

    int rows() const { return 2 * n + 1; }
    int cols() const { return 2 * m + 1; }
    double at(int i, int j) const { return weights[static_cast<std::size_t>(i) * cols() + j]; }
};

// Validates extents, nonnegativity and that some weight is positive.
void validate_kernel(const Kernel& k);

// (2n+1)^2 all-ones kernel.
Kernel box_kernel(int n);

// Text format: first line "n m", then 2n+1 rows of 2m+1 decimals.
Kernel parse_kernel(std::istream& in);
Kernel load_kernel(const std::string& path);

// Accepts "box:N" or a file path.
Kernel kernel_from_spec(const std::string& spec);

} // namespace hmc
