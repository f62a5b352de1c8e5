#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "multizero/engine.hpp"
#include "multizero/model.hpp"
#include "multizero/report.hpp"
#include "multizero/witness.hpp"

namespace {

using namespace multizero;

constexpr int input_error = 1;
constexpr int certify_failed = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string infer_format(const std::string& path, const std::string& requested) {
    if (!requested.empty()) {
        return requested;
    }
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "crn") {
        return "network";
    }
    if (ext == "mat") {
        return "matrices";
    }
    throw Error("cannot infer the format of '" + path + "'; pass --format network|matrices");
}

AugmentedVerticalSystem load_system(const std::string& path, const std::string& format) {
    const std::string text = read_file(path);
    if (format == "network") {
        return network_to_system(parse_network(text));
    }
    return parse_system(text);
}

std::size_t default_threads() {
    if (const char* env = std::getenv("MULTIZERO_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<std::size_t>(v);
            }
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring MULTIZERO_THREADS='" << env << "'\n";
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct CommonFlags {
    std::string input;
    std::string format;
    bool json = false;
};

struct AnalyzeFlags {
    std::string partitions = "max";
    long precision = default_precision;
    bool no_witness = false;
    std::optional<std::uint64_t> seed;
    std::size_t threads = 0;
};

int run_analyze(const CommonFlags& common, const AnalyzeFlags& flags) {
    const std::string format = infer_format(common.input, common.format);
    const auto sys = load_system(common.input, format);
    DecideOptions options;
    options.mode = parse_partition_mode(flags.partitions);
    options.precision = flags.precision;
    options.construct_witness = !flags.no_witness;
    options.threads = flags.threads > 0 ? flags.threads : default_threads();

    const auto start = std::chrono::steady_clock::now();
    const Verdict verdict = decide(sys, options);
    RunInfo info;
    info.input_path = common.input;
    info.format = format;
    info.precision = flags.precision;
    info.threads = options.threads;
    info.seed = flags.seed;
    info.witness_requested = options.construct_witness;
    info.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (common.json) {
        std::cout << verdict_to_json(verdict, sys, info).dump(2) << '\n';
    } else {
        std::cout << verdict_to_text(verdict, sys, info);
    }
    return exit_code(verdict.kind);
}

int run_certify(const CommonFlags& common, const std::string& witness_path, const std::string& tolerance_text) {
    const std::string format = infer_format(common.input, common.format);
    const auto sys = load_system(common.input, format);
    Json doc;
    try {
        doc = Json::parse(read_file(witness_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("'" + witness_path + "' is not valid JSON: " + e.what());
    }
    const Witness w = witness_from_json(doc);
    BigFloat tolerance = BigFloat::power_of_two(-w.precision / 2, 2 * w.precision);
    if (!tolerance_text.empty()) {
        try {
            tolerance = BigFloat::parse(tolerance_text, 2 * w.precision);
        } catch (const std::invalid_argument&) {
            throw Error("invalid tolerance '" + tolerance_text + "'");
        }
    }
    const auto report = verify_witness(sys, w, tolerance);
    if (common.json) {
        std::cout << verification_to_json(report).dump(2) << '\n';
    } else {
        std::cout << "verification at " << report.precision << " bits, tolerance " << report.tolerance.to_string()
                  << ": " << (report.passed ? "passed" : "FAILED") << '\n';
        for (const auto& c : report.checks) {
            std::cout << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << " = " << c.value.to_string()
                      << " (bound " << c.bound.to_string() << ")\n";
        }
    }
    return report.passed ? 0 : certify_failed;
}

int run_convert(const CommonFlags& common, const std::string& emit) {
    if (emit != "matrices") {
        throw Error("unsupported --emit '" + emit + "'");
    }
    const std::string format = infer_format(common.input, common.format);
    std::cout << format_system(load_system(common.input, format));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide whether an augmented vertically parametrized system has two distinct positive zeros"};
    app.require_subcommand(1);

    CommonFlags common;
    AnalyzeFlags analyze_flags;
    std::string witness_path;
    std::string tolerance_text;
    std::string emit;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", common.input, "input file (.crn network or .mat matrices)")->required();
        sub->add_option("--format", common.format, "network or matrices")
            ->check(CLI::IsMember({"network", "matrices"}));
        sub->add_flag("--json", common.json, "machine-readable output");
    };

    auto* analyze = app.add_subcommand("analyze", "run the decision procedure");
    add_common(analyze);
    analyze->add_option("--partitions", analyze_flags.partitions, "max or singleton")
        ->check(CLI::IsMember({"max", "singleton"}));
    analyze->add_option("--precision", analyze_flags.precision, "working precision in bits")
        ->check(CLI::Range(64L, 1L << 20));
    analyze->add_flag("--no-witness", analyze_flags.no_witness, "skip witness construction");
    analyze->add_option("--seed", analyze_flags.seed, "seed recorded in the report");
    analyze->add_option("--threads", analyze_flags.threads, "worker threads (default: MULTIZERO_THREADS or all cores)");

    auto* certify = app.add_subcommand("certify", "re-verify a witness");
    add_common(certify);
    certify->add_option("--witness", witness_path, "witness or report JSON")->required();
    certify->add_option("--tolerance", tolerance_text, "tolerance (default 2^(-precision/2))");

    auto* convert = app.add_subcommand("convert", "print the matrix form of a network");
    add_common(convert);
    convert->add_option("--emit", emit, "output format")->required()->check(CLI::IsMember({"matrices"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : input_error;
    }

    try {
        if (analyze->parsed()) {
            return run_analyze(common, analyze_flags);
        }
        if (certify->parsed()) {
            return run_certify(common, witness_path, tolerance_text);
        }
        return run_convert(common, emit);
    } catch (const SyntaxError& e) {
        std::cerr << "error: syntax error in " << common.input << ": " << e.what() << '\n';
        return input_error;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
}
