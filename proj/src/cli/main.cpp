#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cli/config.hpp"
#include "cli/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Andreev level spectra and resonance widths of a 1-D SNS junction"};
    app.require_subcommand(1);

    std::string config_path;
    andreev::cli::RunOptions opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON run configuration")
            ->required();
        sub->add_option("--out", opt.out_dir, "output directory (default: out)");
        sub->add_option("--jobs", opt.jobs, "worker threads (default: 1)");
        sub->add_flag("--emit-gnuplot", opt.emit_gnuplot,
                      "also write a gnuplot script referencing the CSV");
        return sub;
    };

    CLI::App* spectrum =
        add_common(app.add_subcommand("spectrum", "level sweep over (h, phi)"));
    CLI::App* widths = add_common(
        app.add_subcommand("widths", "resonance widths against 1/h with slope fit"));
    CLI::App* compare = add_common(
        app.add_subcommand("compare", "cross-method agreement report (exit 3 on violation)"));
    CLI::App* hardwall =
        add_common(app.add_subcommand("hardwall", "hard-wall reference levels"));
    CLI::App* table_d = add_common(
        app.add_subcommand("table-D", "tabulate the parabolic cylinder function"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems are validation errors
    }

    if (opt.jobs < 1) {
        std::cerr << "error: --jobs must be >= 1\n";
        return 2;
    }

    andreev::cli::RunConfig cfg;
    try {
        cfg = andreev::cli::load_config(config_path);
    } catch (const andreev::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    if (spectrum->parsed()) return andreev::cli::run_spectrum(cfg, opt);
    if (widths->parsed()) return andreev::cli::run_widths(cfg, opt);
    if (compare->parsed()) return andreev::cli::run_compare(cfg, opt);
    if (hardwall->parsed()) return andreev::cli::run_hardwall(cfg, opt);
    if (table_d->parsed()) return andreev::cli::run_table_d(cfg, opt);
    return 2;
}
