#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fgc/config.hpp"
#include "fgc/errors.hpp"
#include "fgc/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fgc::ConfigError("cannot open `" + path + "`");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool json_path(const std::string& path) {
    return path.size() > 5 && path.substr(path.size() - 5) == ".json";
}

int default_workers() {
    const char* env = std::getenv("FGC_WORKERS");
    if (!env) return 0;
    try {
        return std::max(0, std::stoi(env));
    } catch (...) {
        return 0;
    }
}

struct Flags {
    long precision = 0; // 0: keep the config value
    long padic_n = 0;
    bool seed_set = false;
    unsigned long long seed = 0;
    int workers = default_workers();
    bool timings = false;
    std::string format = "json";
    std::string out_path;
    std::string primes; // scan subcommand only
};

int run_text(const std::string& source, const std::string& text, bool as_json, const Flags& flags,
             bool scanning) {
    fgc::cli::ParseOutcome parsed =
        as_json ? fgc::cli::parse_config_json(text) : fgc::cli::parse_config(text);
    if (!parsed.config) {
        for (const auto& issue : parsed.issues)
            std::cerr << source << ": " << fgc::cli::to_string(issue) << "\n";
        return 1;
    }
    fgc::cli::ScenarioConfig cfg = std::move(*parsed.config);
    if (flags.precision > 0) cfg.precision = flags.precision;
    if (flags.padic_n > 0) cfg.padic_n = flags.padic_n;
    if (flags.seed_set) cfg.seed = flags.seed;
    if (scanning) {
        if (cfg.kind != fgc::cli::ScenarioKind::nori_scan &&
            cfg.kind != fgc::cli::ScenarioKind::elliptic_scan) {
            std::cerr << "error: scan wants a nori_scan or elliptic_scan config, got `"
                      << fgc::cli::to_string(cfg.kind) << "`\n";
            return 1;
        }
        std::string err;
        auto sel = fgc::cli::parse_primes(flags.primes, err);
        if (!sel) {
            std::cerr << "error: --primes: " << err << "\n";
            return 1;
        }
        cfg.primes = std::move(*sel);
    }

    fgc::cli::RunOptions opt;
    opt.workers = flags.workers;
    opt.timings = flags.timings;
    fgc::cli::RunOutcome outcome = fgc::cli::run_scenario(cfg, opt);
    std::string rendered = flags.format == "table" ? fgc::cli::emit_table(outcome.report)
                                                   : fgc::cli::emit_json(outcome.report);
    if (!flags.out_path.empty()) {
        std::ofstream os(flags.out_path, std::ios::binary);
        if (!os) {
            std::cerr << "error: cannot write `" << flags.out_path << "`\n";
            return 1;
        }
        os << rendered;
    } else {
        std::cout << rendered;
    }
    return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified experiments on closures of finitely generated groups"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    app.add_option("--precision", flags.precision, "real precision in bits (overrides the config)")
        ->check(CLI::Range(8L, 1L << 20));
    app.add_option("--padic-N", flags.padic_n, "p-adic working precision (overrides the config)")
        ->check(CLI::Range(1L, 1L << 16));
    auto* seed_opt = app.add_option("--seed", flags.seed, "seed for randomized certificates");
    app.add_option("--workers", flags.workers,
                   "parallel workers (default: FGC_WORKERS or one per hardware thread)")
        ->check(CLI::Range(0, 4096));
    app.add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", flags.out_path, "write the report to this path instead of stdout");
    app.add_flag("--timings", flags.timings, "include wall-clock timings in the report");

    std::string demo_name, config_path, scan_path;
    CLI::App* demo = app.add_subcommand("demo", "run a packaged scenario");
    demo->add_option("name", demo_name, "demo name")->required();
    CLI::App* run = app.add_subcommand("run", "run a scenario from a config file");
    run->add_option("config", config_path, "config file (.json for the JSON form)")->required();
    CLI::App* scan = app.add_subcommand("scan", "run a scan config over a prime window");
    scan->add_option("config", scan_path, "nori_scan or elliptic_scan config file")->required();
    scan->add_option("--primes", flags.primes, "prime range a..b or comma-separated list")
        ->required();

    CLI11_PARSE(app, argc, argv);
    flags.seed_set = seed_opt->count() > 0;

    try {
        if (demo->parsed())
            return run_text("demo:" + demo_name, fgc::cli::demo_config(demo_name), false, flags,
                            false);
        if (run->parsed())
            return run_text(config_path, read_file(config_path), json_path(config_path), flags,
                            false);
        return run_text(scan_path, read_file(scan_path), json_path(scan_path), flags, true);
    } catch (const fgc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
