// Command-line front end: traces, tableaux, counts, tables, brute-force
// oracles, structural verification, and the Motzkin comparison.
//
// Exit codes: 0 success, 1 counterexample found, 2 bad usage or input,
// 3 resource guard tripped.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "stacksort/stacksort.hpp"

using namespace stacksort;

namespace {

std::string join_args(const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

void print_rows(const std::vector<std::pair<int, BigInt>>& rows, int t,
                const std::string& format) {
    if (format == "json") {
        std::cout << counts_to_json(t, rows).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << counts_to_csv(rows);
    } else {
        for (const auto& [n, count] : rows)
            std::cout << n << " " << to_decimal(count) << "\n";
    }
}

int run_trace(const std::string& text, const std::string& format) {
    const Perm p = parse_perm(text);
    if (format == "json") {
        std::cout << trace_to_json(p).dump(2) << "\n";
    } else {
        for (const std::string& line : trace_lines(p)) std::cout << line << "\n";
    }
    return 0;
}

int run_tableau(const std::string& text, const std::string& format) {
    const Perm p = parse_perm(text);
    const Tableau t = build_tableau(p);   // rejects input not ending in 0
    if (format == "json") {
        std::cout << tableau_to_json(t).dump(2) << "\n";
    } else {
        for (const std::string& line : tableau_grid_lines(t)) std::cout << line << "\n";
    }
    return 0;
}

int run_count(int n, int t, bool all, const std::string& format) {
    if (all) {
        print_rows(count_table(n, t), t, format);
    } else if (format == "json") {
        std::cout << json{{"n", n}, {"t", t}, {"count", to_decimal(count_sortable(n, t))}}.dump(2)
                  << "\n";
    } else {
        std::cout << to_decimal(count_sortable(n, t)) << "\n";
    }
    return 0;
}

int run_oracle(int n, int t, int guard, int threads, bool compare_dp) {
    const BigInt brute = brute_count(n, t, guard, threads);
    if (!compare_dp) {
        std::cout << to_decimal(brute) << "\n";
        return 0;
    }
    const BigInt dp = count_sortable(n, t);
    std::cout << "oracle " << to_decimal(brute) << "\n";
    std::cout << "dp     " << to_decimal(dp) << "\n";
    if (brute != dp) {
        std::cout << "MISMATCH\n";
        return 1;
    }
    std::cout << "agree\n";
    return 0;
}

int run_verify(int n, int guard, const std::string& format) {
    const VerifyReport rep = verify_lemmas(n, guard);
    if (format == "json") {
        std::cout << report_to_json(rep).dump(2) << "\n";
    } else {
        for (const PropertyReport& p : rep.properties) {
            if (p.failures.empty()) {
                std::cout << "ok   " << p.property << " (" << p.checked << " cases)\n";
            } else {
                std::cout << "FAIL " << p.property << " (" << p.checked << " cases, "
                          << p.failures.size() << " counterexamples)\n";
                for (const std::string& f : p.failures) std::cout << "       " << f << "\n";
            }
        }
        std::cout << (rep.all_pass() ? "all checks passed\n" : "counterexamples found\n");
    }
    return rep.all_pass() ? 0 : 1;
}

int run_motzkin(int max_n) {
    const auto rows = count_table(max_n, 2);
    int matches = 0;
    for (const auto& [n, count] : rows) {
        const BigInt m = motzkin_number(n);
        const bool ok = count == m;
        if (ok) ++matches;
        std::cout << "n=" << n << " count=" << to_decimal(count)
                  << " motzkin=" << to_decimal(m) << (ok ? "" : "  WARN: differs") << "\n";
    }
    std::cout << matches << " of " << max_n << " rows match\n";
    return 0;   // a divergence is worth a warning, not an error
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stack-sorting traces, tableaux and counts"};
    app.require_subcommand(1);

    int default_threads = 1;
    if (const char* env = std::getenv("STACKSORT_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) default_threads = v;
    }

    std::vector<std::string> perm_args;
    std::string format = "text";
    int n = 0, t = 1, max_n = 1;
    int guard = kDefaultOracleGuard;
    int threads = default_threads;
    bool all = false, compare_dp = false;

    CLI::App* trace = app.add_subcommand("trace", "Print every sorting pass of a permutation");
    trace->add_option("perm", perm_args, "Permutation, e.g. \"9 3 10 7 8 2 6 1 4 5 0\"")
        ->required()
        ->expected(-1);
    trace->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* tableau = app.add_subcommand("tableau", "Print the sorting tableau");
    tableau->add_option("perm", perm_args, "Permutation ending in 0")->required()->expected(-1);
    tableau->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* count = app.add_subcommand("count", "Count permutations of 0..n ending in 0 that "
                                                  "sort within t passes");
    count->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    count->add_option("--t", t)->required()->check(CLI::NonNegativeNumber);
    count->add_flag("--all", all, "Print all sizes 1..n");
    count->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* table = app.add_subcommand("table", "Count table for sizes 1..max-n");
    table->add_option("--t", t)->required()->check(CLI::NonNegativeNumber);
    table->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);
    table->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* oracle = app.add_subcommand("oracle", "Count by brute force over all permutations");
    oracle->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    oracle->add_option("--t", t)->required()->check(CLI::NonNegativeNumber);
    oracle->add_option("--guard-oracle", guard, "Largest n the oracle will attempt");
    oracle->add_option("--threads", threads, "Worker threads (default from STACKSORT_THREADS)");
    oracle->add_flag("--compare-dp", compare_dp, "Also run the fast count and compare");

    CLI::App* verify = app.add_subcommand("verify", "Exhaustively check structural properties "
                                                    "at size n");
    verify->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--guard-oracle", guard, "Largest n to attempt");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* motzkin = app.add_subcommand("motzkin", "Compare two-pass counts against Motzkin "
                                                      "numbers");
    motzkin->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (trace->parsed()) return run_trace(join_args(perm_args), format);
        if (tableau->parsed()) return run_tableau(join_args(perm_args), format);
        if (count->parsed()) return run_count(n, t, all, format);
        if (table->parsed()) {
            print_rows(count_table(max_n, t), t, format);
            return 0;
        }
        if (oracle->parsed()) return run_oracle(n, t, guard, threads, compare_dp);
        if (verify->parsed()) return run_verify(n, guard, format);
        if (motzkin->parsed()) return run_motzkin(max_n);
    } catch (const guard_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
