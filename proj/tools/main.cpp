// fibrep: count, list and verify signed Fibonacci representations.
//
// Exit codes: 0 on success, 1 when a verification property fails (or an
// internal consistency guard trips), 2 for bad arguments, exceeded
// ceilings and I/O trouble.

#include "fibrep/fibrep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

[[noreturn]] void usage_error(const std::string& message) {
    throw CLI::ValidationError(message);
}

struct RangeSpec {
    long long from = 0;
    long long to = 0;
};

RangeSpec parse_range(const std::string& text) {
    const size_t dots = text.find("..");
    if (dots == std::string::npos)
        usage_error("range \"" + text + "\" must look like A..B");
    RangeSpec range;
    try {
        size_t used = 0;
        range.from = std::stoll(text.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument(text);
        const std::string upper = text.substr(dots + 2);
        range.to = std::stoll(upper, &used);
        if (used != upper.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        usage_error("range \"" + text + "\" must be two integers joined by ..");
    }
    if (range.from > range.to)
        usage_error("empty range \"" + text + "\"");
    return range;
}

void check_length_flag(int k) {
    if (k < 1) usage_error("--k must be >= 1, got " + std::to_string(k));
}

void check_ceiling(int k, int ceiling, const std::string& what) {
    if (ceiling < 1)
        usage_error("--brute-ceiling must be >= 1, got " +
                    std::to_string(ceiling));
    if (k > ceiling)
        usage_error(what + " needs k <= " + std::to_string(ceiling) +
                    " (the brute ceiling; raise it with --brute-ceiling or "
                    "FIBREP_BRUTE_CEILING), got k = " + std::to_string(k));
}

int run_count(long long n, int k, const std::string& method, int ceiling,
              bool verbose) {
    check_length_flag(k);
    const auto start = Clock::now();
    fibrep::BigInt value;
    if (method == "brute") {
        check_ceiling(k, ceiling, "method=brute");
        value = fibrep::count_brute(n, k);
    } else if (method == "pruned") {
        value = fibrep::count_pruned(n, k);
    } else {
        fibrep::CountSequence seq(n);
        for (int i = 1; i <= k; ++i) {
            const auto term = seq.next();
            if (verbose && term.k >= 4)
                std::cerr << "k=" << term.k
                          << " f=" << term.correction.get_str() << " source="
                          << fibrep::correction_source_name(term.source)
                          << '\n';
            value = term.value;
        }
        if (verbose)
            std::cerr << "stabilization bound " << fibrep::stabilization_bound(n)
                      << ", correction constant from k = "
                      << fibrep::first_stable_index(n) << " onward\n";
    }
    if (verbose)
        std::cerr << "method=" << method << " elapsed=" << ms_since(start)
                  << "ms\n";
    std::cout << value.get_str() << '\n';
    return 0;
}

int run_enumerate(long long n, int k, int ceiling) {
    check_length_flag(k);
    check_ceiling(k, ceiling, "enumerate");
    for (const auto& r : fibrep::enumerate_representations(n, k))
        std::cout << r.str() << ' ' << fibrep::evaluate(r).get_str() << '\n';
    return 0;
}

fibrep::SequenceRecord build_record(const std::string& kind, bool have_n,
                                    long long n, const RangeSpec& range) {
    const bool needs_n = kind == "Bn" || kind == "f_nk";
    if (needs_n && !have_n)
        usage_error("kind " + kind + " requires --n");
    if (!needs_n && have_n)
        usage_error("kind " + kind + " does not take --n");

    fibrep::SequenceRecord record;
    record.name = kind;
    record.params["from"] = range.from;
    record.params["to"] = range.to;
    if (needs_n) record.params["n"] = n;

    if (kind == "B0" || kind == "Bn" || kind == "f_nk") {
        if (range.from < 1)
            usage_error("kind " + kind + " needs a range of lengths, from >= 1");
        if (range.to > 100000)
            usage_error("range end " + std::to_string(range.to) +
                        " is unreasonably large");
    }

    if (kind == "B0") {
        fibrep::ZeroSequence seq;
        for (long long k = 1; k <= range.to; ++k) {
            const fibrep::BigInt term = seq.next();
            if (k >= range.from) record.terms.push_back(term);
        }
    } else if (kind == "Bn") {
        fibrep::CountSequence seq(n);
        for (long long k = 1; k <= range.to; ++k) {
            const fibrep::BigInt term = seq.next().value;
            if (k >= range.from) record.terms.push_back(term);
        }
    } else if (kind == "f_nk") {
        for (long long k = range.from; k <= range.to; ++k)
            record.terms.push_back(
                fibrep::correction_term(n, static_cast<int>(k)));
    } else if (kind == "f_limit") {
        for (long long target = range.from; target <= range.to; ++target)
            record.terms.push_back(fibrep::correction_limit(target));
    } else {
        usage_error("unknown kind \"" + kind +
                    "\"; expected B0, Bn, f_nk or f_limit");
    }
    return record;
}

int run_sequence(const fibrep::SequenceRecord& record,
                 const std::string& format, const std::string& out_path) {
    const std::string payload =
        fibrep::emit(record, fibrep::sequence_format_from_string(format));
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << payload) || !out.flush()) {
        std::cerr << "fibrep: cannot write " << out_path << '\n';
        return 2;
    }
    return 0;
}

int run_verify(const std::string& suite, int n_max, int k_max, bool verbose) {
    if (n_max < 0 || k_max < 0)
        usage_error("verify grid caps must be positive");
    fibrep::VerifyGrid grid;
    grid.clamp(n_max, k_max);
    const auto start = Clock::now();
    const auto results = fibrep::run_suite(suite, grid);
    int failed = 0;
    for (const auto& r : results) {
        if (!r.passed) ++failed;
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty() && (!r.passed || verbose))
            std::cout << ": " << r.detail;
        std::cout << '\n';
    }
    std::cout << results.size() - failed << '/' << results.size()
              << " properties passed (suite " << suite << ", "
              << ms_since(start) << " ms)\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed Fibonacci representation counter"};
    app.require_subcommand(1);

    long long n = 0;
    int k = 1;
    int ceiling = 16;
    bool verbose = false;
    std::string method = "recurrence";
    std::string kind;
    std::string range_text;
    std::string format = "csv";
    std::string out_path;
    std::string suite = "all";
    int n_max = 0;
    int k_max = 0;

    auto* count_cmd =
        app.add_subcommand("count", "count length-k representations of n");
    count_cmd->add_option("--n", n, "target integer")->required();
    count_cmd->add_option("--k", k, "representation length")->required();
    count_cmd->add_option("--method", method, "brute, pruned or recurrence")
        ->capture_default_str()
        ->check(CLI::IsMember({"brute", "pruned", "recurrence"}));

    auto* enum_cmd = app.add_subcommand(
        "enumerate", "list length-k representations of n with their values");
    enum_cmd->add_option("--n", n, "target integer")->required();
    enum_cmd->add_option("--k", k, "representation length")->required();

    auto* seq_cmd =
        app.add_subcommand("sequence", "emit a sequence as csv, json or bfile");
    seq_cmd->add_option("--kind", kind, "B0, Bn, f_nk or f_limit")->required();
    auto* seq_n = seq_cmd->add_option("--n", n, "target integer for Bn / f_nk");
    seq_cmd
        ->add_option("--k-range", range_text,
                     "index range A..B (lengths; targets for kind f_limit)")
        ->required();
    seq_cmd->add_option("--format", format, "csv, json or bfile")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json", "bfile"}));
    seq_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* verify_cmd =
        app.add_subcommand("verify", "run the property suites");
    verify_cmd
        ->add_option("--suite", suite,
                     "all, oracle, recurrence, bijections, prefix or golden")
        ->capture_default_str()
        ->check(CLI::IsMember(fibrep::suite_names()));
    verify_cmd->add_option("--n", n_max, "cap every |n| grid bound");
    verify_cmd->add_option("--k", k_max, "cap every length grid bound");

    for (auto* cmd : {count_cmd, enum_cmd})
        cmd->add_option("--brute-ceiling", ceiling,
                        "largest k allowed for exhaustive runs")
            ->capture_default_str()
            ->envname("FIBREP_BRUTE_CEILING");
    app.add_flag("--verbose,-v", verbose, "method, timing and per-step detail");
    for (auto* cmd : {count_cmd, enum_cmd, seq_cmd, verify_cmd})
        cmd->add_flag("--verbose,-v", verbose,
                      "method, timing and per-step detail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count_cmd->parsed())
            return run_count(n, k, method, ceiling, verbose);
        if (enum_cmd->parsed()) return run_enumerate(n, k, ceiling);
        if (seq_cmd->parsed())
            return run_sequence(
                build_record(kind, seq_n->count() > 0, n, parse_range(range_text)),
                format, out_path);
        if (verify_cmd->parsed())
            return run_verify(suite, n_max, k_max, verbose);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "fibrep: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fibrep: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "fibrep: consistency guard tripped: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "fibrep: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
