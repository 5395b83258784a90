#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hmc {

struct PropertyReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;

    bool passed() const { return failures == 0; }
};

// Randomized checks of the algebraic laws and the filter/limit oracles.
// Deterministic for a fixed (seed, cases) pair. `cases = 0` is a vacuous
// pass.
std::vector<PropertyReport> run_property_suites(std::uint64_t seed,
                                                std::size_t cases);

} // namespace hmc
