#pragma once

#include <string>

#include "cli/config.hpp"

namespace andreev::cli {

struct RunOptions {
    std::string out_dir = "out";
    int jobs = 1;
    bool emit_gnuplot = false;
};

// Each returns a process exit code: 0 success, 2 validation or runtime
// failure (message on stderr), 3 threshold violation (compare only).
int run_spectrum(const RunConfig& cfg, const RunOptions& opt);
int run_widths(const RunConfig& cfg, const RunOptions& opt);
int run_compare(const RunConfig& cfg, const RunOptions& opt);
int run_hardwall(const RunConfig& cfg, const RunOptions& opt);
int run_table_d(const RunConfig& cfg, const RunOptions& opt);

// Shared scientific formatting; every CSV cell goes through this so output
// is byte-identical across runs and worker counts.
std::string fmt(double v);

} // namespace andreev::cli
