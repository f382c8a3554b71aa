// Acceptance battery: replays every closed-form result about the weighted
// Padovan graph families against brute force at desk scale, one line per
// criterion.  Exit status 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "padovan/verify.hpp"

using namespace padovan;

namespace {

int criteria_failed = 0;

// Keep only the checks whose name starts with one of the prefixes.
verification_report filter(const verification_report& report,
                           std::initializer_list<const char*> prefixes) {
    verification_report out{report.suite, {}};
    for (const check_result& check : report.checks)
        for (const char* prefix : prefixes)
            if (check.name.rfind(prefix, 0) == 0) {
                out.checks.push_back(check);
                break;
            }
    return out;
}

void conclude(int number, const std::string& title,
              const verification_report& report, double elapsed_ms) {
    const bool pass = report.all_pass() && !report.checks.empty();
    if (!pass) ++criteria_failed;
    std::printf("criterion %2d [%s]: %s (%zu checks, %.0f ms)\n", number,
                title.c_str(), pass ? "PASS" : "FAIL", report.checks.size(),
                elapsed_ms);
    if (pass) return;
    for (const check_result& check : report.checks)
        if (!check.pass)
            std::printf("    failed %s: %s\n", check.name.c_str(),
                        check.detail.c_str());
}

template <typename Fn>
verification_report timed(Fn&& fn, double& elapsed_ms) {
    const auto start = std::chrono::steady_clock::now();
    verification_report report = fn();
    elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return report;
}

}  // namespace

int main() {
    double ms = 0;

    const verification_report order22 =
        timed([] { return verify_order(22); }, ms);
    conclude(1, "sequence identity, n <= 22",
             filter(order22, {"sequence"}), ms);
    conclude(2, "order formula, all (n,k) with n <= 22",
             filter(order22, {"count"}), ms);

    const verification_report size8 = timed([] { return verify_size(8); }, ms);
    conclude(3, "size formula three ways, p,q <= 8", size8, ms);

    const verification_report degree6 =
        timed([] { return verify_degree(6); }, ms);
    conclude(4, "degree distribution, p,q <= 6", degree6, ms);

    const verification_report iso16 = timed([] { return verify_iso(16); }, ms);
    conclude(5, "three-way isomorphism, n <= 16",
             filter(iso16, {"alpha", "beta"}), ms);
    conclude(6, "fundamental decomposition, n <= 16",
             filter(iso16, {"decomp"}), ms);

    const verification_report metric5 =
        timed([] { return verify_metric(5); }, ms);
    conclude(7, "distance and diameter, p,q <= 5", metric5, ms);

    const verification_report median4 =
        timed([] { return verify_median(4); }, ms);
    conclude(8, "median property and embedding, p,q <= 4", median4, ms);

    const verification_report cubes4 =
        timed([] { return verify_cubes(4); }, ms);
    conclude(9, "cube polynomial four ways, p,q <= 4",
             filter(cubes4, {"cubes", "spot"}), ms);
    conclude(10, "largest cubes, p,q <= 4", filter(cubes4, {"largest"}), ms);

    const verification_report aut4 = timed([] { return verify_aut(4); }, ms);
    conclude(11, "automorphism groups, p,q <= 4", aut4, ms);

    const verification_report golden =
        timed([] { return verify_golden(); }, ms);
    conclude(12, "golden graphs and small-family shapes", golden, ms);

    if (criteria_failed == 0) {
        std::printf("acceptance: all 12 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", criteria_failed);
    return 1;
}
