#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "ssimtk/color.hpp"
#include "ssimtk/extremal.hpp"
#include "ssimtk/heatmap.hpp"
#include "ssimtk/io/json_writer.hpp"
#include "ssimtk/io/png_io.hpp"
#include "ssimtk/io/raw_map.hpp"
#include "ssimtk/mse_relation.hpp"
#include "ssimtk/patterns.hpp"
#include "ssimtk/ssim.hpp"

namespace ssimtk::cli {

namespace fs = std::filesystem;

std::string to_string(ColorPath path) {
    switch (path) {
    case ColorPath::GrayPaper: return "gray-paper";
    case ColorPath::GrayRec601: return "gray-rec601";
    case ColorPath::YcbcrWeighted: return "ycbcr-weighted";
    }
    return "gray-rec601";
}

ArtifactGuard::~ArtifactGuard() {
    if (committed_)
        return;
    for (const std::string& p : paths_) {
        std::error_code ec;
        fs::remove(p, ec);
    }
}

namespace {

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error(path + ": cannot open for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw std::runtime_error(path + ": write failed");
}

void scale_in_place(GrayImage& img, double factor) {
    if (factor == 1.0)
        return;
    for (double& v : img.data())
        v *= factor;
}

void emit_params(io::JsonWriter& w, const SsimParams& p) {
    w.key("params").begin_object();
    w.field("k1", p.k1);
    w.field("k2", p.k2);
    w.field("dynamic_range", p.dynamic_range);
    w.field("c1", p.c1());
    w.field("c2", p.c2());
    w.field("c3", p.c3());
    w.field("alpha", p.alpha);
    w.field("beta", p.beta);
    w.field("gamma", p.gamma);
    w.field("window_size", p.window_size);
    w.field("sigma", p.sigma);
    w.field("undefined_policy", to_string(p.undefined_policy));
    w.end_object();
}

void emit_legend(io::JsonWriter& w) {
    w.key("heatmap_legend").begin_array();
    for (const LegendAnchor& a : heatmap_legend()) {
        w.begin_object();
        w.field("label", a.label);
        w.key("value");
        if (std::isnan(a.value))
            w.null();
        else
            w.value(a.value);
        w.key("rgb").begin_array().value(a.color.r).value(a.color.g).value(a.color.b).end_array();
        w.end_object();
    }
    w.end_array();
}

void finish_json(const std::string& json, const std::string& json_path, ArtifactGuard& guard) {
    std::cout << json << "\n";
    if (!json_path.empty()) {
        guard.track(json_path);
        write_text_file(json_path, json + "\n");
    }
}

} // namespace

GrayImage load_as_gray(const std::string& path, const CommonOptions& options) {
    const io::PngImage png = io::load_png(path);
    GrayImage gray = png.is_gray
                         ? io::to_gray_image(png)
                         : rgb_to_gray(io::to_rgb_image(png),
                                       options.color_path == ColorPath::GrayPaper
                                           ? kGrayCoeffsPaper
                                           : kGrayCoeffsRec601,
                                       /*quantize_8bit=*/true);
    scale_in_place(gray, options.params.dynamic_range);
    return gray;
}

int cmd_compare(const CompareArgs& args_in) {
    CompareArgs args = args_in;
    args.common.apply_mode();
    const SsimParams& params = args.common.params;
    ArtifactGuard guard;

    const io::PngImage png_a = io::load_png(args.reference_path);
    const io::PngImage png_b = io::load_png(args.test_path);
    if (png_a.width != png_b.width || png_a.height != png_b.height)
        throw std::runtime_error("compare: image dimensions differ ("
                                 + std::to_string(png_a.width) + "x" + std::to_string(png_a.height)
                                 + " vs " + std::to_string(png_b.width) + "x"
                                 + std::to_string(png_b.height) + ")");

    io::JsonWriter w;
    w.begin_object();
    w.field("schema", 1);
    w.field("command", "compare");
    w.key("mode").begin_object();
    w.field("color_path", to_string(args.common.color_path));
    w.field("dynamic_range", args.common.eight_bit ? "8bit" : "unit");
    w.end_object();
    emit_params(w, params);
    w.key("inputs").begin_object();
    w.field("reference", args.reference_path);
    w.field("test", args.test_path);
    w.field("width", png_a.width);
    w.field("height", png_a.height);
    w.end_object();

    ComparisonResult result;
    if (args.common.color_path == ColorPath::YcbcrWeighted) {
        if (args.common.eight_bit)
            throw std::runtime_error("compare: ycbcr-weighted runs on the canonical "
                                     "representation; drop --dynamic-range 8bit");
        const YcbcrSsimResult ycc =
            weighted_ycbcr_ssim(io::to_rgb_image(png_a), io::to_rgb_image(png_b), params);
        result = ycc.report_y; // maps/diagnostics follow the luma channel
        w.field("mssim", ycc.weighted);
        w.key("channels").begin_object();
        w.field("y", ycc.mssim_y);
        w.field("cr", ycc.mssim_cr);
        w.field("cb", ycc.mssim_cb);
        w.key("weights").begin_array().value(0.8).value(0.1).value(0.1).end_array();
        w.end_object();
    } else {
        const GrayImage a = load_as_gray(args.reference_path, args.common);
        const GrayImage b = load_as_gray(args.test_path, args.common);
        result = compare(a, b, params);
        w.field("mssim", result.mssim);
    }

    w.field("valid_width", result.maps.width);
    w.field("valid_height", result.maps.height);
    w.field("mean_l", result.mean_l);
    w.field("mean_c", result.mean_c);
    w.field("mean_s", result.mean_s);
    w.field("defined_count", result.defined_count);
    w.field("undefined_count", result.undefined_count);
    w.field("undefined_fraction", result.undefined_fraction);

    struct MapRef {
        const char* name;
        const std::vector<double>* values;
    };
    const MapRef map_refs[] = {{"ssim", &result.maps.ssim},
                               {"l", &result.maps.l},
                               {"c", &result.maps.c},
                               {"s", &result.maps.s}};

    w.key("maps").begin_object();
    if (args.emit_maps) {
        for (const MapRef& m : map_refs) {
            const std::string path = args.out_prefix + "_" + m.name + ".raw";
            guard.track(path);
            io::write_raw_map(path, *m.values, result.maps.width, result.maps.height);
            w.field(m.name, path);
        }
    }
    if (!args.raw_dump_path.empty()) {
        guard.track(args.raw_dump_path);
        io::write_raw_map(args.raw_dump_path, result.maps.ssim, result.maps.width,
                          result.maps.height);
        w.field("raw_dump", args.raw_dump_path);
    }
    w.end_object();

    w.key("heatmaps").begin_object();
    if (args.emit_heatmaps) {
        for (const MapRef& m : map_refs) {
            const std::string path = args.out_prefix + "_" + m.name + ".png";
            guard.track(path);
            io::write_rgb_png(path, render(*m.values, result.maps.undefined, result.maps.width,
                                           result.maps.height));
            w.field(m.name, path);
        }
    }
    w.end_object();
    if (args.emit_heatmaps)
        emit_legend(w);
    w.end_object();

    finish_json(w.str(), args.json_path, guard);
    guard.commit();
    return 0;
}

namespace {

double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("generate: bad ") + what + ": " + s);
    }
}

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("generate: bad ") + what + ": " + s);
    }
}

} // namespace

int cmd_generate(const GenerateArgs& args) {
    ArtifactGuard guard;
    const auto& a = args.args;

    if (args.kind == "constant") {
        if (a.size() != 4)
            throw std::runtime_error("usage: generate constant WIDTH HEIGHT VALUE OUT.png");
        const GrayImage img = constant(parse_int(a[0], "width"), parse_int(a[1], "height"),
                                       parse_double(a[2], "value"));
        guard.track(a[3]);
        io::write_gray_png(a[3], img);
    } else if (args.kind == "checkerboard") {
        if (a.size() != 5)
            throw std::runtime_error("usage: generate checkerboard WIDTH HEIGHT A B OUT.png");
        const GrayImage img = checkerboard(parse_int(a[0], "width"), parse_int(a[1], "height"),
                                           parse_double(a[2], "a"), parse_double(a[3], "b"));
        guard.track(a[4]);
        io::write_gray_png(a[4], img);
    } else if (args.kind == "gradient-pair") {
        if (a.size() != 4)
            throw std::runtime_error("usage: generate gradient-pair WIDTH HEIGHT OUT_A.png OUT_B.png");
        const auto [first, second] =
            gradient_pair(parse_int(a[0], "width"), parse_int(a[1], "height"));
        guard.track(a[2]);
        guard.track(a[3]);
        io::write_gray_png(a[2], first);
        io::write_gray_png(a[3], second);
    } else if (args.kind == "dither-pair") {
        if (a.size() != 4)
            throw std::runtime_error("usage: generate dither-pair BASE.png AMPLITUDE OUT_A.png OUT_B.png");
        const io::PngImage png = io::load_png(a[0]);
        if (!png.is_gray)
            throw std::runtime_error("generate dither-pair: base must be a grayscale PNG");
        const auto [first, second] =
            dither_pair(io::to_gray_image(png), parse_double(a[1], "amplitude"));
        guard.track(a[2]);
        guard.track(a[3]);
        io::write_gray_png(a[2], first);
        io::write_gray_png(a[3], second);
    } else {
        throw std::runtime_error("generate: unknown pattern kind: " + args.kind);
    }

    guard.commit();
    return 0;
}

int cmd_sweep(const SweepArgs& args_in) {
    SweepArgs args = args_in;
    args.common.apply_mode();
    ArtifactGuard guard;

    double reference = 0.0;
    if (args.reference == "black")
        reference = 0.0;
    else if (args.reference == "white")
        reference = 1.0;
    else
        throw std::runtime_error("sweep: reference must be 'black' or 'white'");

    const std::vector<SweepPoint> points =
        luminance_sweep(reference, args.steps, args.common.params);

    std::string csv = "value,mssim\n";
    for (const SweepPoint& p : points) {
        csv += io::JsonWriter::format_double(p.value);
        csv += ',';
        csv += io::JsonWriter::format_double(p.mssim);
        csv += '\n';
    }

    if (args.csv_path.empty()) {
        std::cout << csv;
    } else {
        guard.track(args.csv_path);
        write_text_file(args.csv_path, csv);
    }
    guard.commit();
    return 0;
}

int cmd_minima(const MinimaArgs& args_in) {
    MinimaArgs args = args_in;
    args.common.apply_mode();
    ArtifactGuard guard;

    const ComponentMinima minima = component_minima(args.common.params);
    io::JsonWriter w;
    w.begin_object();
    w.field("schema", 1);
    w.field("command", "minima");
    emit_params(w, args.common.params);
    w.field("l_min", minima.l_min);
    w.field("c_min", minima.c_min);
    w.field("s_min", minima.s_min);
    w.end_object();

    finish_json(w.str(), args.json_path, guard);
    guard.commit();
    return 0;
}

int cmd_scan(const ScanArgs& args_in) {
    ScanArgs args = args_in;
    args.common.apply_mode();
    ArtifactGuard guard;

    const GrayImage a = load_as_gray(args.reference_path, args.common);
    const GrayImage b = load_as_gray(args.test_path, args.common);
    const Kernel kernel =
        Kernel::gaussian(args.common.params.window_size, args.common.params.sigma);
    const LocalStats stats = local_stats(a, b, kernel);
    const std::vector<double> s = structure_component(stats, args.common.params);
    const HazardReport report = undefined_scan(s, stats.width, stats.height, args.gamma);

    io::JsonWriter w;
    w.begin_object();
    w.field("schema", 1);
    w.field("command", "scan");
    w.field("gamma", args.gamma);
    w.field("gamma_is_integer", report.gamma_is_integer);
    w.field("hazard_count", report.count);
    w.field("hazard_fraction", report.fraction);
    w.field("first_x", report.first_x);
    w.field("first_y", report.first_y);
    w.field("valid_width", stats.width);
    w.field("valid_height", stats.height);
    w.end_object();

    finish_json(w.str(), args.json_path, guard);
    guard.commit();
    return 0;
}

int cmd_mse_check(const MseCheckArgs& args_in) {
    MseCheckArgs args = args_in;
    args.common.apply_mode();
    ArtifactGuard guard;

    const GrayImage a = load_as_gray(args.reference_path, args.common);
    const GrayImage b = load_as_gray(args.test_path, args.common);
    const Kernel kernel =
        Kernel::gaussian(args.common.params.window_size, args.common.params.sigma);
    const LocalStats stats = local_stats(a, b, kernel);
    const std::vector<double> mse = local_mse(stats);

    // Independent route: the window-weighted mean of (a - b)^2, summed
    // directly. The identity output must agree to rounding error.
    double max_residual = 0.0;
    const int size = kernel.size();
    for (int y = 0; y < stats.height; ++y) {
        for (int x = 0; x < stats.width; ++x) {
            double direct = 0.0;
            for (int i = 0; i < size; ++i) {
                for (int j = 0; j < size; ++j) {
                    const double d = a.at(x + j, y + i) - b.at(x + j, y + i);
                    direct += kernel.at(i, j) * (d * d);
                }
            }
            const double r =
                std::abs(mse[static_cast<std::size_t>(y) * stats.width + x] - direct);
            if (r > max_residual)
                max_residual = r;
        }
    }

    const StarMaps star = ssim_star(stats);
    double mse_mean = 0.0;
    for (double v : mse)
        mse_mean += v;
    mse_mean /= static_cast<double>(mse.size());
    const PsnrResult p = psnr(a, b, args.common.params.dynamic_range);

    io::JsonWriter w;
    w.begin_object();
    w.field("schema", 1);
    w.field("command", "mse-check");
    w.field("identity_residual_max", max_residual);
    w.field("psnr_infinite", p.infinite);
    w.key("psnr_db");
    if (p.infinite)
        w.null();
    else
        w.value(p.db);
    w.field("ssim_star_pooled", star.pooled);
    w.field("ssim_star_defined", star.defined_count);
    w.field("ssim_star_undefined",
            static_cast<std::int64_t>(star.values.size()) - star.defined_count);
    w.field("mse_star_mean", mse_mean);

    if (args.run_corpus) {
        const CorpusAnalysis corpus = analyze_corpus(distortion_corpus(), args.common.params);
        w.key("corpus").begin_object();
        w.field("pairs", static_cast<std::int64_t>(corpus.pooled_ssim_star.size()));
        w.field("quadratic_r_squared", corpus.pooled_fit.r_squared);
        w.field("linear_r_squared", corpus.pooled_fit.linear_r_squared);
        w.field("local_quadratic_r_squared", corpus.local_fit.r_squared);
        w.field("local_samples", corpus.local_fit.samples);
        w.field("psnr_linear_r_squared", corpus.psnr_linear_r_squared);
        w.field("psnr_samples", corpus.psnr_samples);
        w.end_object();
    }
    w.end_object();

    finish_json(w.str(), args.json_path, guard);
    guard.commit();
    return 0;
}

} // namespace ssimtk::cli
