#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace ssimtk {

/// What to do with a map pixel whose factor is undefined (negative base
/// raised to a non-integer exponent).
enum class UndefinedPolicy {
    FlagAndNan,      ///< record in the mask, store NaN, exclude from pooling
    SignedMagnitude, ///< compute sign(b)*|b|^e, record in the mask, keep pooling
    Reject,          ///< abort the comparison with a diagnostic
};

std::string to_string(UndefinedPolicy policy);
UndefinedPolicy undefined_policy_from_string(const std::string& name);

/// All SSIM constants and exponents. The stabilizing constants C1, C2, C3
/// are always derived from (K1, K2, L) on access so they can never go stale;
/// C3 follows C2/2 unless explicitly overridden.
struct SsimParams {
    double k1 = 0.01;
    double k2 = 0.03;
    double dynamic_range = 1.0; ///< L: 1 for canonical images, 255 for 8-bit
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
    int window_size = 11;
    double sigma = 1.5;
    std::optional<double> c3_override;
    UndefinedPolicy undefined_policy = UndefinedPolicy::FlagAndNan;

    double c1() const { return (k1 * dynamic_range) * (k1 * dynamic_range); }
    double c2() const { return (k2 * dynamic_range) * (k2 * dynamic_range); }
    double c3() const { return c3_override ? *c3_override : c2() / 2.0; }

    /// Throws std::invalid_argument on any violated invariant
    /// (even window, non-positive sigma, negative K's or L).
    void validate() const;

    static SsimParams eight_bit() {
        SsimParams p;
        p.dynamic_range = 255.0;
        return p;
    }
};

/// True when the exponent is an integer up to floating-point slack
/// (|g - round(g)| <= 1e-9), in which case negative bases are safe.
bool is_integer_exponent(double exponent);

} // namespace ssimtk
