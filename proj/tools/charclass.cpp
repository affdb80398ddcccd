#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "charclass/enumerate.hpp"
#include "charclass/errors.hpp"
#include "charclass/report.hpp"
#include "charclass/verify.hpp"

namespace {

// sysexits-style: 0 ok, 1 verification failure, 2 domain rejection,
// 64 usage, 74 I/O
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitRejected = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

std::vector<charclass::Int> parse_weights(const std::string& arg) {
    std::vector<charclass::Int> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = arg.find(',', start);
        std::string token = arg.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        auto value = charclass::parse_int(token);
        if (!value)
            throw charclass::usage_error("--l: '" + token + "' is not an integer");
        out.push_back(std::move(*value));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
    const char* env = std::getenv("CHARCLASS_SEED");
    if (env == nullptr)
        return fallback;
    std::uint64_t value = 0;
    const char* end = env + std::string_view(env).size();
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || env == end)
        throw charclass::usage_error(
            std::string("CHARCLASS_SEED: '") + env +
            "' is not an unsigned 64-bit integer");
    return value;
}

int run_classify(long long n, long long k, const std::string& weights,
                 const std::string& format, bool explain) {
    charclass::StiefelParams params =
        charclass::validate(n, k, parse_weights(weights));
    charclass::ReportDocument doc = charclass::make_report(params, explain);
    if (format == "json")
        std::cout << charclass::report_to_json(doc).dump(2) << "\n";
    else
        std::cout << charclass::report_to_text(doc);
    return kExitOk;
}

int run_enumerate(long long n_max, long long l_max, const std::string& out_path,
                  const std::string& format) {
    if (n_max < 2)
        throw charclass::usage_error("--n-max must be at least 2");
    if (l_max < 1)
        throw charclass::usage_error("--l-max must be at least 1");
    const charclass::EnumFormat fmt = format == "json-lines"
                                          ? charclass::EnumFormat::json_lines
                                          : charclass::EnumFormat::tsv;
    if (out_path == "-") {
        charclass::write_enumeration(std::cout, n_max, l_max, fmt);
        return kExitOk;
    }
    std::ofstream file(out_path);
    if (!file) {
        std::cerr << "cannot open '" << out_path << "' for writing\n";
        return kExitIo;
    }
    charclass::write_enumeration(file, n_max, l_max, fmt);
    file.flush();
    if (!file) {
        std::cerr << "write to '" << out_path << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

int run_verify(std::uint64_t cli_seed, long long samples, int degree_cap) {
    charclass::VerifyOptions opts;
    opts.seed = seed_from_env_or(cli_seed);
    opts.samples = samples;
    opts.degree_cap = degree_cap;
    std::cout << "seed " << opts.seed << ", samples " << opts.samples
              << ", degree cap " << opts.degree_cap << "\n";

    std::vector<charclass::SuiteResult> results = charclass::run_verification(opts);
    long long failed_suites = 0;
    for (const charclass::SuiteResult& suite : results) {
        if (suite.passed()) {
            std::cout << "ok    " << suite.name << " (" << suite.checked
                      << " checks)\n";
        } else {
            ++failed_suites;
            std::cout << "FAIL  " << suite.name << " (" << suite.failed << " of "
                      << suite.checked << " checks failed)\n";
            std::cout << "      first counterexample: " << suite.counterexample
                      << "\n";
        }
    }
    if (failed_suites == 0) {
        std::cout << "all " << results.size() << " suites passed\n";
        return kExitOk;
    }
    std::cout << failed_suites << " of " << results.size() << " suites failed\n";
    return kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"characteristic classes of generalized complex projective "
                 "Stiefel manifolds"};
    app.require_subcommand(1);

    long long n = 0;
    long long k = 0;
    std::string weights;
    std::string classify_format = "text";
    bool explain = false;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify one manifold W(n,k; l)");
    classify_cmd->add_option("--n", n, "frame vectors live in C^n")->required();
    classify_cmd->add_option("--k", k, "frame size")->required();
    classify_cmd->add_option("--l", weights, "comma-separated circle weights")
        ->required();
    classify_cmd->add_option("--format", classify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    classify_cmd->add_flag("--explain", explain,
                           "include the derivation of the class series");

    long long n_max = 0;
    long long l_max = 0;
    std::string out_path;
    std::string enum_format = "tsv";
    CLI::App* enum_cmd = app.add_subcommand(
        "enumerate", "tabulate the canonical grid of manifolds");
    enum_cmd->add_option("--n-max", n_max, "largest n, at least 2")->required();
    enum_cmd->add_option("--l-max", l_max, "largest weight, at least 1")
        ->required();
    enum_cmd->add_option("--out", out_path, "output path, - for stdout")
        ->required();
    enum_cmd->add_option("--format", enum_format, "tsv or json-lines")
        ->check(CLI::IsMember({"tsv", "json-lines"}));

    std::uint64_t seed = 1;
    long long samples = 10000;
    int degree_cap = charclass::kDefaultCap;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run the randomized property suites deterministically");
    verify_cmd->add_option("--seed", seed,
                           "RNG seed; CHARCLASS_SEED overrides this");
    verify_cmd->add_option("--samples", samples, "trials per randomized suite")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--degree-cap", degree_cap,
                           "series cap for the extra cross-check pass")
        ->check(CLI::Range(2, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify_cmd->parsed())
            return run_classify(n, k, weights, classify_format, explain);
        if (enum_cmd->parsed())
            return run_enumerate(n_max, l_max, out_path, enum_format);
        if (verify_cmd->parsed())
            return run_verify(seed, samples, degree_cap);
    } catch (const charclass::validation_error& e) {
        std::cerr << e.what() << "\n";
        return kExitRejected;
    } catch (const charclass::usage_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
