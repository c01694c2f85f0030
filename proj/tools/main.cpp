#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fact3/automata.hpp"
#include "fact3/bignat.hpp"
#include "fact3/classifier.hpp"
#include "fact3/oracle.hpp"
#include "fact3/scan.hpp"
#include "fact3/verify.hpp"

namespace {

using namespace fact3;

// Accepts a decimal literal of any length or an MSB-first binary literal
// with a 0b prefix.
std::optional<BitString> parse_input(const std::string& text) {
    if (text.rfind("0b", 0) == 0) return bits_from_binary_text(text.substr(2));
    try {
        return oracle::BigNat::from_decimal(text).to_bits();
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

int cmd_classify(const std::string& input, bool as_json) {
    auto bits = parse_input(input);
    if (!bits) {
        std::cerr << "error: '" << input << "' is not a decimal or 0b binary literal\n";
        return 2;
    }
    Verdict v = classify(*bits);
    std::string n = cli::decimal_of_bits(*bits);
    std::cout << (as_json ? cli::render_verdict_json(n, v) : cli::render_verdict_text(n, v));
    return 0;
}

int cmd_scan(std::uint64_t min, std::uint64_t max, const std::string& engine,
             const std::string& format) {
    if (max < min) {
        std::cerr << "error: --max must be at least --min\n";
        return 2;
    }
    cli::Engine e = engine == "formula" ? cli::Engine::Formula : cli::Engine::Automaton;
    cli::ScanReport report = cli::scan_range(min, max, e);
    if (format == "csv")
        std::cout << cli::render_csv(report);
    else if (format == "json")
        std::cout << cli::render_json(report);
    else
        std::cout << cli::render_text(report);
    return 0;
}

int cmd_sequence(std::uint64_t max) {
    if (max < 1) {
        std::cerr << "error: --max must be at least 1\n";
        return 2;
    }
    for (auto n : cli::sequence_not_representable(max, cli::Engine::Automaton))
        std::cout << n << "\n";
    return 0;
}

int cmd_export(const std::string& machine, const std::string& variant,
               const std::string& format) {
    using automata::MachineVariant;
    MachineVariant v = variant == "direct" ? MachineVariant::Direct : MachineVariant::Paper;
    automata::MooreMachine m;
    if (machine == "gamma") {
        m = automata::build_gamma_machine();
    } else if (machine == "alpha3") {
        m = automata::build_alpha3_machine(v);
    } else if (machine == "alpha5") {
        m = automata::build_alpha5_machine(v);
    } else if (machine == "product") {
        m = automata::build_product_machine(v);
    } else {
        m = automata::minimize(automata::build_product_machine(v));
        std::cerr << "minimized product machine: " << m.size() << " states\n";
    }
    automata::ExportFormat f = format == "json"  ? automata::ExportFormat::Json
                               : format == "csv" ? automata::ExportFormat::Csv
                                                 : automata::ExportFormat::Dot;
    std::cout << automata::export_machine(m, f);
    return 0;
}

int cmd_verify(std::uint64_t oracle_max, std::uint64_t scan_max, std::uint64_t random_cases) {
    cli::VerifyOptions opts;
    opts.oracle_max = oracle_max;
    opts.scan_max = scan_max;
    opts.random_cases = random_cases;
    return cli::run_verification(opts, std::cout).ok() ? 0 : 1;
}

int cmd_decompose(std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (f > oracle::kDefaultDecomposeBound / i) {
            std::cerr << "error: " << n << "! exceeds the decomposition bound; "
                      << "use `classify " << n << "` for the representability verdict\n";
            return 2;
        }
        f *= i;
    }
    auto d = oracle::three_square_decompose(f);
    if (!d) {
        std::cout << "impossible\n";
        return 0;
    }
    std::cout << d->a << "^2 + " << d->b << "^2 + " << d->c << "^2 = " << f << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decides whether n! is a sum of three squares"};
    app.require_subcommand(1);

    auto* classify_cmd = app.add_subcommand(
        "classify", "verdict for one n (decimal or 0b binary literal)");
    std::string classify_input;
    bool classify_json = false;
    classify_cmd->add_option("n", classify_input, "the number to classify")->required();
    classify_cmd->add_flag("--json", classify_json, "emit a stable-keyed json object");

    auto* scan_cmd = app.add_subcommand("scan", "residue tally over a range of n");
    std::uint64_t scan_min = 1, scan_max = 0;
    std::string scan_engine = "automaton", scan_format = "text";
    scan_cmd->add_option("--max", scan_max, "upper end of the range (inclusive)")->required();
    scan_cmd->add_option("--min", scan_min, "lower end of the range (default 1)");
    scan_cmd->add_option("--engine", scan_engine, "classification engine")
        ->check(CLI::IsMember({"formula", "automaton"}));
    scan_cmd->add_option("--format", scan_format, "output format (default text)")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* seq_cmd = app.add_subcommand(
        "sequence", "ascending n whose factorial is not a sum of three squares");
    std::uint64_t seq_max = 0;
    seq_cmd->add_option("--max", seq_max, "largest n to report")->required();

    auto* export_cmd = app.add_subcommand("export", "write a machine to stdout");
    std::string export_machine = "product", export_variant = "paper", export_format = "dot";
    export_cmd->add_option("--machine", export_machine, "which machine")
        ->required()
        ->check(CLI::IsMember({"gamma", "alpha3", "alpha5", "product", "product-min"}));
    export_cmd->add_option("--variant", export_variant, "construction variant (default paper)")
        ->check(CLI::IsMember({"paper", "direct"}));
    export_cmd->add_option("--format", export_format, "output format (default dot)")
        ->check(CLI::IsMember({"dot", "json", "csv"}));

    auto* verify_cmd = app.add_subcommand("verify", "run every property suite");
    std::uint64_t verify_oracle = 2000, verify_scan = 1'000'000, verify_random = 10'000;
    verify_cmd->add_option("--oracle-max", verify_oracle,
                           "big-integer cross-check bound (0 skips, default 2000)");
    verify_cmd->add_option("--scan-max", verify_scan,
                           "cross-engine scan bound (default 1000000)");
    verify_cmd->add_option("--random-cases", verify_random,
                           "random digit strings to test (default 10000)");

    auto* decompose_cmd =
        app.add_subcommand("decompose", "three-square decomposition of n!");
    std::uint64_t decompose_n = 0;
    decompose_cmd->add_option("n", decompose_n, "n whose factorial to decompose")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(classify_input, classify_json);
        if (scan_cmd->parsed()) return cmd_scan(scan_min, scan_max, scan_engine, scan_format);
        if (seq_cmd->parsed()) return cmd_sequence(seq_max);
        if (export_cmd->parsed()) return cmd_export(export_machine, export_variant, export_format);
        if (verify_cmd->parsed()) return cmd_verify(verify_oracle, verify_scan, verify_random);
        if (decompose_cmd->parsed()) return cmd_decompose(decompose_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
