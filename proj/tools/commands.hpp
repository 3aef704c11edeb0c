#pragma once

#include <string>
#include <vector>

#include "ssimtk/gray_image.hpp"
#include "ssimtk/params.hpp"

namespace ssimtk::cli {

enum class ColorPath { GrayPaper, GrayRec601, YcbcrWeighted };

std::string to_string(ColorPath path);

/// Options shared by the comparison-style commands.
struct CommonOptions {
    SsimParams params;
    ColorPath color_path = ColorPath::GrayRec601;
    bool eight_bit = false; ///< statistics on [0, 255] with L = 255

    void apply_mode() {
        params.dynamic_range = eight_bit ? 255.0 : 1.0;
    }
};

/// Removes every tracked artifact unless the command completed; failed
/// commands leave nothing behind.
class ArtifactGuard {
public:
    ~ArtifactGuard();
    void track(const std::string& path) { paths_.push_back(path); }
    void commit() { committed_ = true; }

private:
    std::vector<std::string> paths_;
    bool committed_ = false;
};

struct CompareArgs {
    std::string reference_path;
    std::string test_path;
    CommonOptions common;
    std::string json_path;   ///< also mirrored to stdout
    std::string out_prefix = "ssim_out";
    bool emit_maps = false;     ///< l/c/s/ssim raw dumps at the prefix
    bool emit_heatmaps = false; ///< l/c/s/ssim heatmap PNGs at the prefix
    std::string raw_dump_path;  ///< ssim map alone, explicit path
};

struct GenerateArgs {
    std::string kind;
    std::vector<std::string> args;
};

struct SweepArgs {
    std::string reference; ///< "black" or "white"
    int steps = 256;
    std::string csv_path; ///< empty: stdout
    CommonOptions common;
};

struct MinimaArgs {
    CommonOptions common;
    std::string json_path;
};

struct ScanArgs {
    std::string reference_path;
    std::string test_path;
    double gamma = 1.5;
    CommonOptions common;
    std::string json_path;
};

struct MseCheckArgs {
    std::string reference_path;
    std::string test_path;
    bool run_corpus = false;
    CommonOptions common;
    std::string json_path;
};

int cmd_compare(const CompareArgs& args);
int cmd_generate(const GenerateArgs& args);
int cmd_sweep(const SweepArgs& args);
int cmd_minima(const MinimaArgs& args);
int cmd_scan(const ScanArgs& args);
int cmd_mse_check(const MseCheckArgs& args);
int cmd_repro(const std::string& what, const std::string& out_dir);

/// Loads a PNG and maps it onto the grayscale pipeline: color files go
/// through the selected coefficients with 8-bit quantization, gray files are
/// used as stored. The result is scaled to the mode's dynamic range.
GrayImage load_as_gray(const std::string& path, const CommonOptions& options);

} // namespace ssimtk::cli
