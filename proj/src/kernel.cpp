#include "hmc/kernel.hpp"

#include <fstream>
#include <sstream>

namespace hmc {

void validate_kernel(const Kernel& k) {
    if (k.n < 0 || k.m < 0)
        throw DomainError("kernel: negative half-extent");
    if (k.weights.size() != static_cast<std::size_t>(k.rows()) * k.cols())
        throw DomainError("kernel: weight count does not match extents");
    double sum = 0.0;
    for (double w : k.weights) {
        if (w < 0.0)
            throw DomainError("kernel: negative weight");
        sum += w;
    }
    if (!(sum > 0.0))
        throw DomainError("kernel: all weights are zero");
}

Kernel box_kernel(int n) {
    if (n < 0)
        throw DomainError("box_kernel: negative half-extent");
    Kernel k;
    k.n = n;
    k.m = n;
    k.weights.assign(static_cast<std::size_t>(k.rows()) * k.cols(), 1.0);
    return k;
}

Kernel parse_kernel(std::istream& in) {
    Kernel k;
    if (!(in >> k.n >> k.m))
        throw IoError("kernel: cannot parse half-extents");
    if (k.n < 0 || k.m < 0)
        throw DomainError("kernel: negative half-extent");
    const std::size_t count = static_cast<std::size_t>(k.rows()) * k.cols();
    k.weights.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        if (!(in >> k.weights[i]))
            throw IoError("kernel: truncated weight grid");
    validate_kernel(k);
    return k;
}

Kernel load_kernel(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw IoError("cannot open kernel file '" + path + "'");
    return parse_kernel(f);
}

Kernel kernel_from_spec(const std::string& spec) {
    if (spec.rfind("box:", 0) == 0) {
        int n = 0;
        std::istringstream ss(spec.substr(4));
        if (!(ss >> n))
            throw IoError("kernel spec: bad box size in '" + spec + "'");
        return box_kernel(n);
    }
    return load_kernel(spec);
}

} // namespace hmc
