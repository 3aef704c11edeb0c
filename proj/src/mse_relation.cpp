#include "ssimtk/mse_relation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "ssimtk/patterns.hpp"
#include "ssimtk/ssim.hpp"

namespace ssimtk {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kFlatTol = 1e-12;
constexpr double kMeanEqualTol = 1e-9;

} // namespace

std::vector<double> local_mse(const LocalStats& stats) {
    std::vector<double> out(stats.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double dmu = stats.mean_a[i] - stats.mean_b[i];
        out[i] = stats.var_a[i] + stats.var_b[i] - 2.0 * stats.cov[i] + dmu * dmu;
    }
    return out;
}

StarMaps ssim_star(const LocalStats& stats) {
    StarMaps out;
    out.width = stats.width;
    out.height = stats.height;
    out.values.resize(stats.size());
    out.undefined.assign(stats.size(), 0);

    double sum = 0.0;
    std::int64_t defined = 0;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const double ma = stats.mean_a[i];
        const double mb = stats.mean_b[i];
        const double lden = ma * ma + mb * mb;
        const double lfac = lden > kFlatTol ? 2.0 * (ma * mb) / lden : 1.0;

        const double csden = stats.var_a[i] + stats.var_b[i];
        double csfac;
        if (csden > kFlatTol) {
            csfac = 2.0 * stats.cov[i] / csden;
        } else if (std::abs(ma - mb) <= kMeanEqualTol) {
            csfac = 1.0; // two identical flat patches
        } else {
            csfac = kNan; // the division by zero the constants were added to avoid
        }

        const double v = lfac * csfac;
        out.values[i] = v;
        if (std::isnan(v)) {
            out.undefined[i] = 1;
        } else {
            sum += v;
            ++defined;
        }
    }
    out.defined_count = defined;
    out.pooled = defined > 0 ? sum / defined : kNan;
    return out;
}

namespace {

struct FitResult {
    double r_squared = 0.0;
    std::array<double, 3> coeffs{};
};

// Ordinary least squares for y ~ sum coeffs[k] * x^k, via the normal
// equations with Gaussian elimination (tiny, well-conditioned systems).
FitResult polynomial_fit(std::span<const double> x, std::span<const double> y, int degree) {
    const int m = degree + 1;
    double ata[3][3] = {};
    double atb[3] = {};
    for (std::size_t i = 0; i < x.size(); ++i) {
        double powers[5] = {1.0, 0.0, 0.0, 0.0, 0.0};
        for (int k = 1; k <= 2 * degree; ++k)
            powers[k] = powers[k - 1] * x[i];
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c)
                ata[r][c] += powers[r + c];
            atb[r] += powers[r] * y[i];
        }
    }
    // Solve the m x m system.
    double a[3][4] = {};
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c)
            a[r][c] = ata[r][c];
        a[r][m] = atb[r];
    }
    for (int col = 0; col < m; ++col) {
        int pivot = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col]))
                pivot = r;
        for (int c = 0; c <= m; ++c)
            std::swap(a[col][c], a[pivot][c]);
        if (std::abs(a[col][col]) < 1e-300)
            continue; // degenerate direction; coefficient stays 0
        for (int r = 0; r < m; ++r) {
            if (r == col)
                continue;
            const double f = a[r][col] / a[col][col];
            for (int c = col; c <= m; ++c)
                a[r][c] -= f * a[col][c];
        }
    }
    FitResult fit;
    for (int r = 0; r < m; ++r)
        fit.coeffs[r] = std::abs(a[r][r]) < 1e-300 ? 0.0 : a[r][m] / a[r][r];

    double mean_y = 0.0;
    for (double v : y)
        mean_y += v;
    mean_y /= static_cast<double>(y.size());
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double pred = 0.0, p = 1.0;
        for (int k = 0; k < m; ++k) {
            pred += fit.coeffs[k] * p;
            p *= x[i];
        }
        ss_res += (y[i] - pred) * (y[i] - pred);
        ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
    }
    fit.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0)
                                 : (ss_res == 0.0 ? 1.0 : 0.0);
    return fit;
}

} // namespace

CorrelationReport correlate(std::span<const double> ssim_star_values,
                            std::span<const double> mse_star_values) {
    if (ssim_star_values.size() != mse_star_values.size())
        throw std::invalid_argument("correlate: sample vectors differ in length");

    std::vector<double> x, y;
    x.reserve(ssim_star_values.size());
    y.reserve(ssim_star_values.size());
    for (std::size_t i = 0; i < ssim_star_values.size(); ++i) {
        if (std::isfinite(ssim_star_values[i]) && std::isfinite(mse_star_values[i])) {
            x.push_back(1.0 - ssim_star_values[i]);
            y.push_back(mse_star_values[i]);
        }
    }
    if (x.size() < 3)
        throw std::invalid_argument("correlate: need at least 3 defined sample pairs, got "
                                    + std::to_string(x.size()));

    const FitResult quad = polynomial_fit(x, y, 2);
    const FitResult lin = polynomial_fit(x, y, 1);

    CorrelationReport report;
    report.r_squared = quad.r_squared;
    report.linear_r_squared = lin.r_squared;
    report.samples = static_cast<std::int64_t>(x.size());
    report.coeff_const = quad.coeffs[0];
    report.coeff_linear = quad.coeffs[1];
    report.coeff_quadratic = quad.coeffs[2];
    return report;
}

PsnrResult psnr(const GrayImage& a, const GrayImage& b, double dynamic_range) {
    if (!a.same_size(b))
        throw std::invalid_argument("psnr: image dimensions differ");
    if (!(dynamic_range > 0.0))
        throw std::invalid_argument("psnr: dynamic range must be > 0");

    double mse = 0.0;
    const auto da = a.data();
    const auto db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        const double d = da[i] - db[i];
        mse += d * d;
    }
    mse /= static_cast<double>(da.size());

    PsnrResult out;
    if (mse == 0.0) {
        out.infinite = true;
        out.db = std::numeric_limits<double>::infinity();
        return out;
    }
    out.db = 10.0 * std::log10(dynamic_range * dynamic_range / mse);
    return out;
}

namespace {

double clamp01(double v) {
    return std::clamp(v, 0.0, 1.0);
}

GrayImage corpus_base(int n) {
    GrayImage img(n, n);
    constexpr double kTau = 6.283185307179586;
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            const double fx = static_cast<double>(x) / n;
            const double fy = static_cast<double>(y) / n;
            const double v = 0.5 + 0.2 * std::sin(kTau * 1.7 * fx + 0.4)
                             + 0.15 * std::sin(kTau * 2.3 * fy + 1.1)
                             + 0.08 * std::sin(kTau * 3.1 * (fx + fy));
            img.at(x, y) = clamp01(v);
        }
    }
    return img;
}

GrayImage box_blur3(const GrayImage& img, int times) {
    GrayImage cur = img;
    const int w = img.width(), h = img.height();
    for (int t = 0; t < times; ++t) {
        GrayImage next(w, h);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                double sum = 0.0;
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int sx = std::clamp(x + dx, 0, w - 1);
                        const int sy = std::clamp(y + dy, 0, h - 1);
                        sum += cur.at(sx, sy);
                    }
                }
                next.at(x, y) = sum / 9.0;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// std::mt19937 is fully specified; the distributions are not, so the draws
// below stay hand-rolled for cross-platform reproducibility.
class CorpusRng {
public:
    explicit CorpusRng(std::uint32_t seed) : engine_(seed) {}

    double uniform() { // [0, 1)
        const std::uint64_t hi = engine_();
        const std::uint64_t lo = engine_();
        return static_cast<double>(((hi << 32) | lo) >> 11) * 0x1.0p-53;
    }

    double normal(double stddev) {
        if (have_spare_) {
            have_spare_ = false;
            return spare_ * stddev;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle) * stddev;
    }

private:
    std::mt19937 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

GrayImage add_centered_noise(const GrayImage& base, double stddev, CorpusRng& rng) {
    std::vector<double> noise(base.size());
    double mean = 0.0;
    for (double& v : noise) {
        v = rng.normal(stddev);
        mean += v;
    }
    mean /= static_cast<double>(noise.size());
    GrayImage out(base.width(), base.height());
    auto src = base.data();
    auto dst = out.data();
    for (std::size_t i = 0; i < noise.size(); ++i)
        dst[i] = clamp01(src[i] + (noise[i] - mean));
    return out;
}

GrayImage shift(const GrayImage& base, double delta) {
    GrayImage out(base.width(), base.height());
    auto src = base.data();
    auto dst = out.data();
    for (std::size_t i = 0; i < src.size(); ++i)
        dst[i] = clamp01(src[i] + delta);
    return out;
}

std::string label_with(const char* prefix, double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%s-%g", prefix, v);
    return buf;
}

} // namespace

std::vector<CorpusPair> distortion_corpus() {
    constexpr int kSide = 48;
    const GrayImage base = corpus_base(kSide);
    CorpusRng rng(977121u);

    std::vector<CorpusPair> corpus;
    for (double amp : {0.02, 0.04, 0.06, 0.08, 0.10, 0.13, 0.16, 0.18})
        corpus.push_back({label_with("noise", amp), base, add_centered_noise(base, amp, rng)});
    for (int t : {1, 2, 3, 4})
        corpus.push_back({label_with("blur", t), base, box_blur3(base, t)});
    for (double amp : {0.005, 0.01, 0.015, 0.02}) {
        auto [first, second] = dither_pair(base, amp);
        corpus.push_back({label_with("dither", amp), std::move(first), std::move(second)});
    }
    for (double delta : {0.002, 0.004, 0.006, 0.01})
        corpus.push_back({label_with("lum", delta), base, shift(base, delta)});
    return corpus;
}

CorpusAnalysis analyze_corpus(const std::vector<CorpusPair>& corpus, const SsimParams& params) {
    params.validate();
    const Kernel kernel = Kernel::gaussian(params.window_size, params.sigma);

    CorpusAnalysis out;
    std::vector<double> local_s, local_m;
    for (const CorpusPair& pair : corpus) {
        const LocalStats stats = local_stats(pair.a, pair.b, kernel);
        const StarMaps star = ssim_star(stats);
        const std::vector<double> mse = local_mse(stats);

        double mse_sum = 0.0;
        std::int64_t count = 0;
        for (std::size_t i = 0; i < mse.size(); ++i) {
            if (!star.undefined[i]) {
                local_s.push_back(star.values[i]);
                local_m.push_back(mse[i]);
                mse_sum += mse[i];
                ++count;
            }
        }
        out.pooled_ssim_star.push_back(star.pooled);
        out.pooled_mse_star.push_back(count > 0 ? mse_sum / count : kNan);

        const PsnrResult p = psnr(pair.a, pair.b, params.dynamic_range);
        out.psnr_db.push_back(p.infinite ? std::numeric_limits<double>::infinity() : p.db);

        double ma = 0.0, mb = 0.0;
        for (double v : pair.a.data())
            ma += v;
        for (double v : pair.b.data())
            mb += v;
        out.mean_abs_delta.push_back(std::abs(ma - mb) / static_cast<double>(pair.a.size()));
    }

    out.pooled_fit = correlate(out.pooled_ssim_star, out.pooled_mse_star);
    out.local_fit = correlate(local_s, local_m);

    // PSNR vs pooled SSIM*, restricted to near-equal means and the
    // mid-similarity band where the relation is near linear.
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const double s = out.pooled_ssim_star[i];
        if (out.mean_abs_delta[i] <= 2e-3 * params.dynamic_range && s >= 0.2 && s <= 0.8
            && std::isfinite(out.psnr_db[i])) {
            xs.push_back(s);
            ys.push_back(out.psnr_db[i]);
        }
    }
    out.psnr_samples = static_cast<std::int64_t>(xs.size());
    if (xs.size() >= 3) {
        // correlate regresses on 1 - x; an affine regressor change leaves
        // the linear fit's R^2 untouched.
        const CorrelationReport fit = correlate(xs, ys);
        out.psnr_linear_r_squared = fit.linear_r_squared;
    }
    return out;
}

} // namespace ssimtk
