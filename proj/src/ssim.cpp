#include "ssimtk/ssim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ssimtk {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Separates genuinely-flat statistics from floating-point residue when the
// stabilizing constants are zero. Scaled by L^2, the variance unit.
double zero_tolerance(const SsimParams& params) {
    return 1e-12 * params.dynamic_range * params.dynamic_range;
}

double mean_equal_tolerance(const SsimParams& params) {
    return 1e-9 * params.dynamic_range;
}

// Contrast-structure factor of the single-fraction form. A zero denominator
// means both patches are flat; that is full similarity only when the two
// constants agree, otherwise the division by zero stands (NaN).
double combined_cs_factor(double var_sum, double cov, double mean_a, double mean_b,
                          const SsimParams& params) {
    const double c2 = params.c2();
    const double den = var_sum + c2;
    if (den > zero_tolerance(params))
        return (2.0 * cov + c2) / den;
    return std::abs(mean_a - mean_b) <= mean_equal_tolerance(params) ? 1.0 : kNan;
}

double pow_factor(double base, double exponent) {
    if (exponent == 1.0)
        return base;
    return std::pow(base, exponent);
}

struct PoolAccumulator {
    double sum = 0.0;
    std::int64_t defined = 0;

    void add(double v) {
        if (std::isfinite(v)) {
            sum += v;
            ++defined;
        }
    }
    double mean() const { return defined > 0 ? sum / defined : kNan; }
};

} // namespace

std::vector<double> luminance_component(const LocalStats& stats, const SsimParams& params) {
    const double c1 = params.c1();
    const double tol = zero_tolerance(params);
    std::vector<double> out(stats.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double ma = stats.mean_a[i];
        const double mb = stats.mean_b[i];
        const double den = ma * ma + mb * mb + c1;
        // den == 0 forces both means to 0, so the patches agree: 1.
        out[i] = den > tol ? (2.0 * (ma * mb) + c1) / den : 1.0;
    }
    return out;
}

std::vector<double> contrast_component(const LocalStats& stats, const SsimParams& params) {
    const double c2 = params.c2();
    const double tol = zero_tolerance(params);
    std::vector<double> out(stats.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double sa = std::sqrt(stats.var_a[i]);
        const double sb = std::sqrt(stats.var_b[i]);
        const double den = stats.var_a[i] + stats.var_b[i] + c2;
        // A zero denominator means two flat patches: equal (null) contrast.
        out[i] = den > tol ? (2.0 * (sa * sb) + c2) / den : 1.0;
    }
    return out;
}

std::vector<double> structure_component(const LocalStats& stats, const SsimParams& params) {
    const double c3 = params.c3();
    const double tol = zero_tolerance(params);
    std::vector<double> out(stats.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double sa = std::sqrt(stats.var_a[i]);
        const double sb = std::sqrt(stats.var_b[i]);
        const double num = stats.cov[i] + c3;
        const double den = sa * sb + c3;
        if (den > tol) {
            out[i] = num / den;
        } else {
            // Zero-constant mode: 0/0 is 1, nonzero/0 has no value.
            out[i] = std::abs(num) <= tol ? 1.0 : kNan;
        }
    }
    return out;
}

SsimMaps ssim_full(const std::vector<double>& l_map, const std::vector<double>& c_map,
                   const std::vector<double>& s_map, int width, int height,
                   const SsimParams& params) {
    const std::size_t n = static_cast<std::size_t>(width) * height;
    if (l_map.size() != n || c_map.size() != n || s_map.size() != n)
        throw std::invalid_argument("ssim_full: map sizes disagree with the given dimensions");

    SsimMaps maps;
    maps.width = width;
    maps.height = height;
    maps.l = l_map;
    maps.c = c_map;
    maps.s = s_map;
    maps.ssim.resize(n);
    maps.undefined.assign(n, 0);

    const double exponents[3] = {params.alpha, params.beta, params.gamma};
    std::int64_t hazard_count = 0;
    int first_x = -1, first_y = -1;
    PoolAccumulator pool;

    for (std::size_t i = 0; i < n; ++i) {
        const double bases[3] = {l_map[i], c_map[i], s_map[i]};
        double product = 1.0;
        bool hazard = false;
        for (int f = 0; f < 3; ++f) {
            const double base = bases[f];
            const double e = exponents[f];
            if (std::isnan(base) || (base < 0.0 && !is_integer_exponent(e))) {
                hazard = true;
                if (params.undefined_policy == UndefinedPolicy::SignedMagnitude
                    && !std::isnan(base)) {
                    const double mag = pow_factor(-base, e);
                    product *= -mag;
                } else {
                    product = kNan;
                }
            } else {
                product *= pow_factor(base, e);
            }
        }
        if (hazard) {
            maps.undefined[i] = 1;
            ++hazard_count;
            if (first_x < 0) {
                first_x = static_cast<int>(i) % width;
                first_y = static_cast<int>(i) / width;
            }
        }
        maps.ssim[i] = product;
        pool.add(product);
    }

    if (hazard_count > 0 && params.undefined_policy == UndefinedPolicy::Reject)
        throw std::runtime_error("ssim_full: " + std::to_string(hazard_count)
                                 + " undefined pixel(s), first at (" + std::to_string(first_x)
                                 + ", " + std::to_string(first_y)
                                 + "); rejected by undefined policy");

    maps.mssim = pool.mean();
    maps.defined_count = pool.defined;
    return maps;
}

SsimMaps ssim_simplified(const LocalStats& stats, const SsimParams& params) {
    const double c1 = params.c1();
    const double tol = zero_tolerance(params);

    SsimMaps maps;
    maps.width = stats.width;
    maps.height = stats.height;
    maps.l = luminance_component(stats, params);
    maps.c = contrast_component(stats, params);
    maps.s = structure_component(stats, params);
    const std::size_t n = stats.size();
    maps.ssim.resize(n);
    maps.undefined.assign(n, 0);
    PoolAccumulator pool;

    for (std::size_t i = 0; i < n; ++i) {
        const double ma = stats.mean_a[i];
        const double mb = stats.mean_b[i];
        const double lden = ma * ma + mb * mb + c1;
        const double lfac = lden > tol ? (2.0 * (ma * mb) + c1) / lden : 1.0;
        const double csfac =
            combined_cs_factor(stats.var_a[i] + stats.var_b[i], stats.cov[i], ma, mb, params);
        const double v = lfac * csfac;
        if (std::isnan(v))
            maps.undefined[i] = 1;
        maps.ssim[i] = v;
        pool.add(v);
    }

    maps.mssim = pool.mean();
    maps.defined_count = pool.defined;
    return maps;
}

PoolResult pool_mssim(const SsimMaps& maps) {
    PoolAccumulator pool;
    for (double v : maps.ssim)
        pool.add(v);
    if (pool.defined == 0)
        throw std::runtime_error("pool_mssim: no defined pixels to pool");
    PoolResult out;
    out.mssim = pool.mean();
    out.defined_count = pool.defined;
    out.undefined_count = static_cast<std::int64_t>(maps.ssim.size()) - pool.defined;
    return out;
}

ComparisonResult compare(const GrayImage& a, const GrayImage& b, const SsimParams& params) {
    params.validate();
    return compare(a, b, params, Kernel::gaussian(params.window_size, params.sigma));
}

ComparisonResult compare(const GrayImage& a, const GrayImage& b, const SsimParams& params,
                         const Kernel& kernel) {
    params.validate();
    check_image_range(a, params.dynamic_range);
    check_image_range(b, params.dynamic_range);

    const LocalStats stats = local_stats(a, b, kernel);

    ComparisonResult result;
    result.params = params;
    result.maps = ssim_full(luminance_component(stats, params),
                            contrast_component(stats, params),
                            structure_component(stats, params),
                            stats.width, stats.height, params);

    const std::size_t n = result.maps.size();
    PoolAccumulator ml, mc, ms;
    for (std::size_t i = 0; i < n; ++i) {
        ml.add(result.maps.l[i]);
        mc.add(result.maps.c[i]);
        ms.add(result.maps.s[i]);
    }
    result.mssim = result.maps.mssim;
    result.mean_l = ml.mean();
    result.mean_c = mc.mean();
    result.mean_s = ms.mean();
    result.defined_count = result.maps.defined_count;
    std::int64_t undef = 0;
    for (std::uint8_t u : result.maps.undefined)
        undef += u;
    result.undefined_count = undef;
    result.undefined_fraction = n > 0 ? static_cast<double>(undef) / static_cast<double>(n) : 0.0;
    return result;
}

} // namespace ssimtk
