#include "hmc/exponent.hpp"

#include <cstdlib>

namespace hmc {

Exponent Exponent::parse(const std::string& token) {
    if (token == "inf" || token == "+inf")
        return pos_infinity();
    if (token == "-inf")
        return neg_infinity();
    if (token == "geo")
        return geometric();
    char* end = nullptr;
    const double p = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0')
        throw UnsupportedExponent("cannot parse exponent '" + token + "'");
    if (p == 0.0)
        throw UnsupportedExponent(
            "p = 0 is excluded; pass 'geo' for the geometric-mean limit");
    return finite(p);
}

} // namespace hmc
