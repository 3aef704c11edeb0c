#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>
#include <vector>

#include "ssimtk/color.hpp"
#include "ssimtk/extremal.hpp"
#include "ssimtk/heatmap.hpp"
#include "ssimtk/io/json_writer.hpp"
#include "ssimtk/io/png_io.hpp"
#include "ssimtk/mse_relation.hpp"
#include "ssimtk/patterns.hpp"
#include "ssimtk/ssim.hpp"

namespace ssimtk::cli {

namespace fs = std::filesystem;

namespace {

struct Check {
    std::string name;
    double value = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

class Reporter {
public:
    void near(const std::string& name, double value, double expected, double tolerance) {
        Check c{name, value, expected, tolerance, std::abs(value - expected) <= tolerance};
        print(c);
        checks_.push_back(std::move(c));
    }

    void truth(const std::string& name, bool ok) {
        Check c{name, ok ? 1.0 : 0.0, 1.0, 0.0, ok};
        print(c);
        checks_.push_back(std::move(c));
    }

    bool all_passed() const {
        for (const Check& c : checks_)
            if (!c.pass)
                return false;
        return true;
    }

    std::string summary_json() const {
        io::JsonWriter w;
        w.begin_object();
        w.field("schema", 1);
        w.field("command", "repro");
        w.field("checks", static_cast<std::int64_t>(checks_.size()));
        std::int64_t passed = 0;
        for (const Check& c : checks_)
            passed += c.pass ? 1 : 0;
        w.field("passed", passed);
        w.key("results").begin_array();
        for (const Check& c : checks_) {
            w.begin_object();
            w.field("name", c.name);
            w.field("value", c.value);
            w.field("expected", c.expected);
            w.field("tolerance", c.tolerance);
            w.field("pass", c.pass);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        return w.str();
    }

private:
    static void print(const Check& c) {
        std::printf("[%s] %s: value=%.10g expected=%.10g tol=%.3g\n", c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.value, c.expected, c.tolerance);
    }

    std::vector<Check> checks_;
};

void write_text(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error(path.string() + ": cannot open for writing");
    out << content;
}

double constant_pair_mssim(int a8, int b8, double dynamic_range) {
    SsimParams params;
    params.dynamic_range = dynamic_range;
    const double scale = dynamic_range / 255.0;
    const GrayImage ia(16, 16, a8 * scale);
    const GrayImage ib(16, 16, b8 * scale);
    return compare(ia, ib, params).mssim;
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
    std::string csv = "value,mssim\n";
    for (const SweepPoint& p : points) {
        csv += io::JsonWriter::format_double(p.value);
        csv += ',';
        csv += io::JsonWriter::format_double(p.mssim);
        csv += '\n';
    }
    return csv;
}

double mean_of(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v)
        sum += x;
    return v.empty() ? 0.0 : sum / static_cast<double>(v.size());
}

} // namespace

int cmd_repro(const std::string& what, const std::string& out_dir) {
    if (what != "all")
        throw std::runtime_error("repro: only 'all' is supported");

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    Reporter rep;
    const SsimParams unit_params;

    // Component minima and their witnesses.
    {
        const ComponentMinima m = component_minima(unit_params);
        rep.near("minima.l_min", std::round(m.l_min * 1e4) / 1e4, 0.0001, 0.0);
        rep.near("minima.c_min", std::round(m.c_min * 1e4) / 1e4, 0.0036, 0.0);
        rep.near("minima.s_min", std::round(m.s_min * 1e4) / 1e4, -0.9964, 0.0);

        const Kernel gauss = Kernel::gaussian(11, 1.5);
        const Kernel box = Kernel::box(11);

        const auto [la, lb] = witness_pair(SsimComponent::Luminance, 32);
        rep.near("witness.l.mssim", compare(la, lb, unit_params, gauss).mssim, m.l_min, 1e-6);

        const auto [ca, cb] = witness_pair(SsimComponent::Contrast, 32);
        rep.near("witness.c.gaussian.mean_c", compare(ca, cb, unit_params, gauss).mean_c, m.c_min,
                 5e-3);
        rep.near("witness.c.box.mean_c", compare(ca, cb, unit_params, box).mean_c, m.c_min, 1e-6);

        const auto [sa, sb] = witness_pair(SsimComponent::Structure, 32);
        rep.near("witness.s.gaussian.mean_s", compare(sa, sb, unit_params, gauss).mean_s, m.s_min,
                 5e-3);
        rep.near("witness.s.box.mean_s", compare(sa, sb, unit_params, box).mean_s, m.s_min, 1e-6);

        io::JsonWriter w;
        w.begin_object();
        w.field("l_min", m.l_min);
        w.field("c_min", m.c_min);
        w.field("s_min", m.s_min);
        w.end_object();
        write_text(dir / "minima.json", w.str() + "\n");
    }

    // Constant-gray golden values, both dynamic ranges.
    {
        const struct {
            int a, b;
            double expected;
        } rows[] = {{253, 255, 0.99997},
                    {128, 130, 0.99988},
                    {0, 2, 0.61914},
                    {222, 255, 0.99047},
                    {0, 26, 0.00953}};
        io::JsonWriter w;
        w.begin_object();
        w.key("rows").begin_array();
        for (const auto& row : rows) {
            const double v8 = constant_pair_mssim(row.a, row.b, 255.0);
            const double v1 = constant_pair_mssim(row.a, row.b, 1.0);
            char name[64];
            std::snprintf(name, sizeof(name), "constant-gray.%d-%d", row.a, row.b);
            rep.near(name, v8, row.expected, 1e-5);
            rep.near(std::string(name) + ".scale-delta", v8 - v1, 0.0, 1e-9);
            w.begin_object();
            w.field("gray_a", row.a);
            w.field("gray_b", row.b);
            w.field("mssim_8bit", v8);
            w.field("mssim_unit", v1);
            w.field("expected", row.expected);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        write_text(dir / "constant_gray.json", w.str() + "\n");
    }

    // Color false positives (grayscale path, Rec. 601 + quantization).
    {
        const struct {
            double r, g, b;
            double expected;
            const char* name;
        } rows[] = {{0.56, 1.0, 1.0, 0.99047, "color.red-reduced"},
                    {1.0, 0.78, 1.0, 0.99047, "color.green-reduced"},
                    {1.0, 1.0, 0.0, 0.99276, "color.blue-removed"}};
        io::JsonWriter w;
        w.begin_object();
        w.key("rows").begin_array();
        for (const auto& row : rows) {
            const RgbImage probe(11, 11, row.r, row.g, row.b);
            const RgbImage white(11, 11, 1.0, 1.0, 1.0);
            const GrayImage gp = rgb_to_gray(probe, kGrayCoeffsRec601, true);
            const GrayImage gw = rgb_to_gray(white, kGrayCoeffsRec601, true);
            const double mssim = compare(gp, gw, unit_params).mssim;
            rep.near(row.name, mssim, row.expected, 1e-3);
            w.begin_object();
            w.key("rgb").begin_array().value(row.r).value(row.g).value(row.b).end_array();
            w.field("mssim", mssim);
            w.field("expected", row.expected);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        write_text(dir / "color.json", w.str() + "\n");
    }

    // Mirrored gradients at three resolutions, plus map artifacts.
    {
        const struct {
            int side;
            double mssim_expected, mean_s_expected;
        } rows[] = {{256, 0.51, 0.86}, {64, -0.07, -0.10}, {16, -0.82, -0.90}};
        io::JsonWriter w;
        w.begin_object();
        w.key("rows").begin_array();
        for (const auto& row : rows) {
            const auto [ramp, mirror] = gradient_pair(row.side, row.side);
            const ComparisonResult r = compare(ramp, mirror, unit_params);
            char name[48];
            std::snprintf(name, sizeof(name), "gradient.%d", row.side);
            rep.near(std::string(name) + ".mssim", r.mssim, row.mssim_expected, 0.02);
            rep.near(std::string(name) + ".mean_s", r.mean_s, row.mean_s_expected, 0.03);
            if (row.side == 16)
                rep.truth("gradient.16.valid-width-6", r.maps.width == 6);

            const std::string stem = "gradient_" + std::to_string(row.side);
            io::write_gray_png((dir / (stem + "_a.png")).string(), ramp);
            io::write_gray_png((dir / (stem + "_b.png")).string(), mirror);
            io::write_rgb_png((dir / (stem + "_ssim.png")).string(),
                              render(r.maps.ssim, r.maps.undefined, r.maps.width, r.maps.height));
            if (row.side == 16) {
                io::write_rgb_png((dir / (stem + "_l.png")).string(),
                                  render(r.maps.l, {}, r.maps.width, r.maps.height));
                io::write_rgb_png((dir / (stem + "_c.png")).string(),
                                  render(r.maps.c, {}, r.maps.width, r.maps.height));
                io::write_rgb_png((dir / (stem + "_s.png")).string(),
                                  render(r.maps.s, {}, r.maps.width, r.maps.height));
            }
            w.begin_object();
            w.field("side", row.side);
            w.field("mssim", r.mssim);
            w.field("mean_s", r.mean_s);
            w.field("valid_width", r.maps.width);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        write_text(dir / "gradients.json", w.str() + "\n");
    }

    // Luminance sweeps against black and white references.
    {
        const std::vector<SweepPoint> black = luminance_sweep(0.0, 256);
        const std::vector<SweepPoint> white = luminance_sweep(1.0, 256);
        write_text(dir / "sweep_black.csv", sweep_csv(black));
        write_text(dir / "sweep_white.csv", sweep_csv(white));

        bool black_tail_low = true;
        for (const SweepPoint& p : black)
            if (p.value > 0.2 && !(p.mssim < 0.0025))
                black_tail_low = false;
        rep.truth("sweep.black.tail-below-0.0025", black_tail_low);
        rep.near("sweep.black.at-0", black.front().mssim, 1.0, 1e-12);

        // 222/255 sits on the 256-step grid at index 222.
        rep.near("sweep.white.at-222", white[222].mssim, 0.99047, 1e-5);
    }

    // Undefined exponentiation hazards on the small gradients.
    {
        SsimParams gamma_params = unit_params;
        gamma_params.gamma = 1.5;

        const auto [a16, b16] = gradient_pair(16, 16);
        const ComparisonResult r16 = compare(a16, b16, gamma_params);
        rep.truth("hazard.gradient-16.all-flagged",
                  r16.undefined_count == static_cast<std::int64_t>(r16.maps.size())
                      && r16.undefined_count > 0);
        rep.truth("hazard.gradient-16.nothing-pooled", r16.defined_count == 0
                                                           && std::isnan(r16.mssim));

        const auto [a64, b64] = gradient_pair(64, 64);
        const Kernel gauss = Kernel::gaussian(11, 1.5);
        const LocalStats stats64 = local_stats(a64, b64, gauss);
        const HazardReport h64 =
            undefined_scan(structure_component(stats64, unit_params), stats64.width,
                           stats64.height, 1.5);
        rep.truth("hazard.gradient-64.count-positive", h64.count > 0);

        SsimParams reject = gamma_params;
        reject.undefined_policy = UndefinedPolicy::Reject;
        bool rejected = false;
        try {
            compare(a16, b16, reject);
        } catch (const std::runtime_error&) {
            rejected = true;
        }
        rep.truth("hazard.reject-policy-aborts", rejected);

        io::JsonWriter w;
        w.begin_object();
        w.field("gradient_16_flagged", r16.undefined_count);
        w.field("gradient_64_hazards", h64.count);
        w.field("gradient_64_fraction", h64.fraction);
        w.end_object();
        write_text(dir / "hazards.json", w.str() + "\n");
    }

    // Identity and the checkerboard dither from the teaser figure.
    {
        const auto [ramp, _] = gradient_pair(32, 32);
        rep.near("identity.mssim", compare(ramp, ramp, unit_params).mssim, 1.0, 1e-12);

        const GrayImage base = constant(64, 64, 0.5);
        const auto [da, db] = dither_pair(base, kDefaultDitherAmplitude);
        const ComparisonResult r = compare(da, db, unit_params);
        std::int64_t negatives = 0;
        for (double v : r.maps.ssim)
            negatives += v < 0.0 ? 1 : 0;
        rep.truth("dither.mssim-far-below-0.99", r.mssim < 0.5);
        rep.truth("dither.many-negative-pixels",
                  negatives * 2 >= static_cast<std::int64_t>(r.maps.size()));
        io::write_gray_png((dir / "dither_a.png").string(), da);
        io::write_gray_png((dir / "dither_b.png").string(), db);
        io::write_rgb_png((dir / "dither_ssim.png").string(),
                          render(r.maps.ssim, r.maps.undefined, r.maps.width, r.maps.height));
    }

    // Brunet metric transforms: closed-form identity and triangle inequality.
    {
        const Kernel gauss = Kernel::gaussian(11, 1.5);
        const auto [ga, gb] = gradient_pair(32, 32);
        const LocalStats stats = local_stats(ga, gb, gauss);
        const BrunetMaps maps = brunet_distances(stats, unit_params);
        double max_residual = 0.0;
        const double c1 = unit_params.c1();
        for (std::size_t i = 0; i < stats.size(); ++i) {
            const double ma = stats.mean_a[i], mb = stats.mean_b[i];
            const double closed = std::abs(ma - mb) / std::sqrt(ma * ma + mb * mb + c1);
            max_residual = std::max(max_residual, std::abs(maps.d_l[i] - closed));
        }
        rep.near("brunet.d_l-identity-residual", max_residual, 0.0, 1e-12);

        std::mt19937 rng(424243u);
        auto rand01 = [&rng]() {
            return static_cast<double>(rng()) / 4294967296.0;
        };
        auto pooled_d = [&](double va, double vb) {
            const GrayImage ia(11, 11, va);
            const GrayImage ib(11, 11, vb);
            const LocalStats st = local_stats(ia, ib, gauss);
            const BrunetMaps bm = brunet_distances(st, unit_params);
            return std::pair<double, double>{mean_of(bm.d_l), mean_of(bm.d_cs)};
        };
        std::int64_t violations = 0;
        for (int t = 0; t < 10000; ++t) {
            const double a = rand01(), b = rand01(), c = rand01();
            const auto [ab_l, ab_cs] = pooled_d(a, b);
            const auto [bc_l, bc_cs] = pooled_d(b, c);
            const auto [ac_l, ac_cs] = pooled_d(a, c);
            if (ac_l > ab_l + bc_l + 1e-12 || ac_cs > ab_cs + bc_cs + 1e-12)
                ++violations;
        }
        rep.truth("brunet.triangle-10000-triples", violations == 0);
    }

    write_text(dir / "summary.json", rep.summary_json() + "\n");
    std::printf("repro: %s\n", rep.all_passed() ? "all golden values reproduced" : "FAILURES");
    return rep.all_passed() ? 0 : 1;
}

} // namespace ssimtk::cli
