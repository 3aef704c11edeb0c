#include "ssimtk/params.hpp"

#include <cmath>

namespace ssimtk {

std::string to_string(UndefinedPolicy policy) {
    switch (policy) {
    case UndefinedPolicy::FlagAndNan: return "flag-and-nan";
    case UndefinedPolicy::SignedMagnitude: return "signed-magnitude";
    case UndefinedPolicy::Reject: return "reject";
    }
    return "flag-and-nan";
}

UndefinedPolicy undefined_policy_from_string(const std::string& name) {
    if (name == "flag-and-nan") return UndefinedPolicy::FlagAndNan;
    if (name == "signed-magnitude") return UndefinedPolicy::SignedMagnitude;
    if (name == "reject") return UndefinedPolicy::Reject;
    throw std::invalid_argument("unknown undefined policy: " + name);
}

void SsimParams::validate() const {
    if (window_size < 1 || window_size % 2 == 0)
        throw std::invalid_argument("SsimParams: window_size must be odd and >= 1");
    if (!(sigma > 0.0))
        throw std::invalid_argument("SsimParams: sigma must be > 0");
    if (k1 < 0.0 || k2 < 0.0)
        throw std::invalid_argument("SsimParams: K1 and K2 must be >= 0");
    if (!(dynamic_range > 0.0))
        throw std::invalid_argument("SsimParams: dynamic range L must be > 0");
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma))
        throw std::invalid_argument("SsimParams: exponents must be finite");
    if (c3_override && *c3_override < 0.0)
        throw std::invalid_argument("SsimParams: C3 override must be >= 0");
}

bool is_integer_exponent(double exponent) {
    return std::abs(exponent - std::round(exponent)) <= 1e-9;
}

} // namespace ssimtk
