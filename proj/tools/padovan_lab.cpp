// padovan_lab: build the weighted Padovan graph families (Padovan words,
// ab-words, weak partitions), export them, and replay every closed-form
// result against brute-force checks.
//
// Exit codes: 0 all good, 1 a mathematical check failed, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "padovan/closed_forms.hpp"
#include "padovan/graph.hpp"
#include "padovan/io.hpp"
#include "padovan/verify.hpp"

namespace {

using namespace padovan;

struct resolved_params {
    long long n, k, p, q;
    bool empty_family;
};

// Accept either coordinate system; with both given they must agree.
// A weight outside the admissible window is the (legitimate) empty family.
resolved_params resolve_params(std::optional<long long> n,
                               std::optional<long long> k,
                               std::optional<long long> p,
                               std::optional<long long> q) {
    if (n.has_value() != k.has_value() || p.has_value() != q.has_value())
        throw CLI::ValidationError("params",
                                   "give both of -n/-k or both of -p/-q");
    if (!n && !p)
        throw CLI::ValidationError("params", "missing -n/-k or -p/-q");
    resolved_params out{};
    if (n) {
        if (*n < 1) throw CLI::ValidationError("params", "-n must be >= 1");
        out = {*n, *k, 2 * *n - 3 * *k - 2, 2 * *k - *n + 1, false};
        out.empty_family = out.p < 0 || out.q < 0;
    } else {
        if (*p < 0 || *q < 0)
            throw CLI::ValidationError("params", "-p and -q must be >= 0");
        out = {2 * *p + 3 * *q + 1, *p + 2 * *q, *p, *q, false};
    }
    if (n && p && (out.p != *p || out.q != *q))
        throw CLI::ValidationError(
            "params", "(n,k) and (p,q) disagree: expected p=2n-3k-2, q=2k-n+1");
    return out;
}

std::size_t configured_limit(std::size_t fallback,
                             std::optional<long long> flag) {
    if (flag) return static_cast<std::size_t>(*flag);
    if (const char* env = std::getenv("PADOVAN_LAB_MAX_VERTICES"))
        return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
    return fallback;
}

void print_report(const verification_report& report) {
    for (const check_result& check : report.checks) {
        std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << report.suite
                  << "/" << check.name;
        if (!check.detail.empty()) std::cout << ": " << check.detail;
        std::cout << "\n";
    }
}

int run_verify(const std::string& suite, long long max_n, long long max_pq,
               std::size_t median_limit, std::size_t brute_limit) {
    std::vector<verification_report> reports;
    if (suite == "order") reports.push_back(verify_order(max_n));
    else if (suite == "size") reports.push_back(verify_size(max_pq));
    else if (suite == "degree") reports.push_back(verify_degree(max_pq));
    else if (suite == "iso") reports.push_back(verify_iso(max_n));
    else if (suite == "metric") reports.push_back(verify_metric(max_pq));
    else if (suite == "median") reports.push_back(verify_median(max_pq, median_limit));
    else if (suite == "cubes") reports.push_back(verify_cubes(max_pq, brute_limit));
    else if (suite == "aut") reports.push_back(verify_aut(max_pq, brute_limit));
    else if (suite == "golden") reports.push_back(verify_golden());
    else reports = verify_all(max_n, max_pq, median_limit, brute_limit);

    std::size_t checks = 0, failures = 0;
    for (const verification_report& report : reports) {
        print_report(report);
        checks += report.checks.size();
        failures += report.failure_count();
    }
    std::cout << "summary: " << checks << " checks, " << failures
              << " failures\n";
    return failures == 0 ? 0 : 1;
}

int run_generate(const resolved_params& rp, const std::string& family,
                 const std::string& format) {
    labeled_graph g;
    if (rp.empty_family) {
        g.family = family;
        g.params = {rp.n, rp.k, rp.p, rp.q};
        std::cerr << "warning: empty family (weight outside the admissible "
                     "window); emitting an empty graph\n";
    } else if (family == "padovan") {
        g = build_padovan_graph(rp.n, rp.k);
    } else if (family == "ab") {
        g = build_ab_graph(rp.p, rp.q);
    } else {
        g = build_partition_graph(rp.p, rp.q);
    }
    if (format == "dot")
        std::cout << to_dot(g);
    else if (format == "json")
        std::cout << to_json(g).dump(2) << "\n";
    else
        std::cout << to_edgelist(g);
    return 0;
}

int run_report(long long max_n) {
    for (long long n = 1; n <= max_n; ++n) {
        const weight_bounds r = weight_range(n);
        std::cout << "n=" << n;
        if (r.empty()) {
            std::cout << "  (empty family)\n";
            continue;
        }
        std::cout << "  kmin=" << r.kmin << " kmax=" << r.kmax << "\n";
        for (long long k = r.kmin; k <= r.kmax; ++k) {
            const family_params fp = family_params::from_nk(n, k);
            std::cout << "  k=" << k << ": |V|=" << vertex_count(fp)
                      << " |E|=" << edge_count(fp)
                      << " diam=" << diameter_formula(fp)
                      << " C(x)=" << cube_polynomial_closed(fp).str() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted Padovan graph laboratory"};
    app.require_subcommand(1);

    // sequence
    auto* seq = app.add_subcommand("sequence", "print the Padovan numbers");
    long long seq_max = 0;
    seq->add_option("--max", seq_max, "largest index to print")
        ->required()
        ->check(CLI::NonNegativeNumber);

    // generate
    auto* gen = app.add_subcommand("generate", "emit one family graph");
    std::string family = "padovan", format = "dot";
    std::optional<long long> opt_n, opt_k, opt_p, opt_q;
    gen->add_option("--family", family, "padovan | ab | partition")
        ->required()
        ->check(CLI::IsMember({"padovan", "ab", "partition"}));
    gen->add_option("-n,--n", opt_n, "word length");
    gen->add_option("-k,--k", opt_k, "weight (number of 1s)");
    gen->add_option("-p,--p", opt_p, "number of a's / largest part bound");
    gen->add_option("-q,--q", opt_q, "number of b's / number of parts");
    gen->add_option("--format", format, "dot | json | edgelist")
        ->check(CLI::IsMember({"dot", "json", "edgelist"}));

    // verify
    auto* ver = app.add_subcommand("verify", "run the verification suites");
    std::string suite = "all";
    long long max_n = 14, max_pq = 4;
    std::optional<long long> max_vertices;
    ver->add_option("--suite", suite, "which suite to run")
        ->check(CLI::IsMember({"order", "size", "degree", "iso", "metric",
                               "median", "cubes", "aut", "golden", "all"}));
    ver->add_option("--max-n", max_n, "largest word length (default 14)")
        ->check(CLI::PositiveNumber);
    ver->add_option("--max-pq", max_pq, "largest p and q (default 4)")
        ->check(CLI::NonNegativeNumber);
    ver->add_option("--max-vertices", max_vertices,
                    "override the brute-force size bounds");

    // report
    auto* rep = app.add_subcommand("report", "closed-form table per length");
    long long rep_n = 0;
    rep->add_option("-n,--n", rep_n, "largest word length")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints help / error text
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (seq->parsed()) {
            for (long long i = 0; i <= seq_max; ++i)
                std::cout << i << ": " << padovan_number(i) << "\n";
            return 0;
        }
        if (gen->parsed())
            return run_generate(resolve_params(opt_n, opt_k, opt_p, opt_q),
                                family, format);
        if (ver->parsed())
            return run_verify(
                suite, max_n, max_pq,
                configured_limit(default_median_vertex_limit, max_vertices),
                configured_limit(default_bruteforce_vertex_limit, max_vertices));
        if (rep->parsed()) return run_report(rep_n);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const size_limit_error& e) {
        std::cerr << "error: " << e.what()
                  << " (raise --max-vertices or PADOVAN_LAB_MAX_VERTICES)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
