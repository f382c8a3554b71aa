#pragma once

/**
 * Verification suites: every closed form is replayed against an
 * independent brute-force computation on explicitly built graphs.  Each
 * suite returns a deterministic list of named pass/fail checks; the CLI
 * and the acceptance runner only format them.
 */

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "padovan/closed_forms.hpp"
#include "padovan/graph.hpp"
#include "padovan/isomorphisms.hpp"
#include "padovan/partitions.hpp"
#include "padovan/series.hpp"
#include "padovan/words.hpp"

namespace padovan {

struct check_result {
    std::string name;
    bool pass;
    std::string detail;
};

struct verification_report {
    std::string suite;
    std::vector<check_result> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const check_result& c) { return c.pass; });
    }

    std::size_t failure_count() const {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(),
                          [](const check_result& c) { return !c.pass; }));
    }
};

namespace detail {

inline void expect(verification_report& report, std::string name, bool pass,
                   std::string detail = "") {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
}

template <typename T, typename U>
void expect_eq(verification_report& report, std::string name, const T& expected,
               const U& actual) {
    std::ostringstream detail;
    detail << "expected " << expected << ", got " << actual;
    report.checks.push_back(
        {std::move(name), expected == actual, detail.str()});
}

inline std::string tag(const char* prefix, long long a, long long b) {
    std::ostringstream out;
    out << prefix << a << "," << b << ")";
    return out.str();
}

inline bigint padovan_count_or_zero(long long n, long long k) {
    if (n < 1) return 0;
    const weight_bounds r = weight_range(n);
    if (k < r.kmin || k > r.kmax) return 0;
    return vertex_count(family_params::from_nk(n, k));
}

inline bool is_path_graph(const labeled_graph& g) {
    if (g.num_vertices() == 0) return false;
    if (g.num_edges() != g.num_vertices() - 1) return false;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (g.neighbors(static_cast<int>(v)).size() > 2) return false;
    for (int d : bfs_distances(g, 0))
        if (d < 0) return false;
    return true;
}

}  // namespace detail

// Sequence identity (sum of family orders is a Padovan number) and the
// binomial order formula, both against plain enumeration.
inline verification_report verify_order(long long max_n) {
    verification_report report{"order", {}};
    for (long long n = 1; n <= max_n; ++n) {
        const weight_bounds r = weight_range(n);
        bigint total = 0;
        for (long long k = r.kmin; k <= r.kmax; ++k) {
            const auto words = enumerate_padovan_words(n, k);
            total += static_cast<long long>(words.size());
            std::ostringstream name;
            name << "count(" << n << "," << k << ")";
            detail::expect_eq(report, name.str(),
                              vertex_count(family_params::from_nk(n, k)),
                              bigint(static_cast<long long>(words.size())));
        }
        std::ostringstream name;
        name << "sequence(" << n << ")";
        detail::expect_eq(report, name.str(), padovan_number(n + 2), total);
    }
    return report;
}

// Edge counts: brute-force count on the built graph vs the q*C(p+q-1,p-1)
// formula, the piecewise (n,k) form, the c-word bijection, and the
// multinomial (p+q-1)! / ((p-1)!(q-1)!).
inline verification_report verify_size(long long max_pq) {
    verification_report report{"size", {}};
    for (long long p = 0; p <= max_pq; ++p)
        for (long long q = 0; q <= max_pq; ++q) {
            const labeled_graph g = build_ab_graph(p, q);
            const bigint actual = static_cast<long long>(g.num_edges());
            const family_params fp = family_params::from_pq(p, q);
            std::set<std::string> c_words;
            for (std::size_t u = 0; u < g.num_vertices(); ++u)
                for (int v : g.neighbors(static_cast<int>(u)))
                    if (static_cast<int>(u) < v)
                        c_words.insert(edge_to_c_word(g.label(static_cast<int>(u)),
                                                      g.label(v)));
            bigint multinomial = 0;
            if (p >= 1 && q >= 1) {
                multinomial = 1;
                for (long long i = 1; i <= p + q - 1; ++i) multinomial *= i;
                for (long long i = 1; i <= p - 1; ++i) multinomial /= i;
                for (long long i = 1; i <= q - 1; ++i) multinomial /= i;
            }
            const bool pass = actual == edge_count(p, q) &&
                              actual == edge_count_by_weight(fp.n, fp.k) &&
                              actual == bigint(static_cast<long long>(c_words.size())) &&
                              (p == 0 || q == 0 || actual == multinomial);
            std::ostringstream detail;
            detail << "edges=" << actual << " formula=" << edge_count(p, q)
                   << " corollary=" << edge_count_by_weight(fp.n, fp.k)
                   << " c-words=" << c_words.size();
            detail::expect(report, detail::tag("size(", p, q), pass, detail.str());
        }
    return report;
}

// Degree histogram of the built graph against the per-degree formula and
// the min/max degree expressions.
inline verification_report verify_degree(long long max_pq) {
    verification_report report{"degree", {}};
    for (long long p = 0; p <= max_pq; ++p)
        for (long long q = 0; q <= max_pq; ++q) {
            if (p + q < 1) continue;
            const labeled_graph g = build_ab_graph(p, q);
            const std::map<long long, long long> hist = degree_histogram(g);
            bool pass = true;
            std::ostringstream why;
            for (long long d = 0; d <= max_degree(p, q) + 2; ++d) {
                const auto it = hist.find(d);
                const bigint counted = it == hist.end() ? 0 : it->second;
                if (counted != degree_count(p, q, d)) {
                    pass = false;
                    why << " d=" << d << ": formula=" << degree_count(p, q, d)
                        << " counted=" << counted;
                }
            }
            bigint vertices = 0, degree_sum = 0;
            for (auto [d, c] : hist) {
                vertices += c;
                degree_sum += d * c;
            }
            if (vertices != vertex_count(family_params::from_pq(p, q)) ||
                degree_sum != 2 * edge_count(p, q)) {
                pass = false;
                why << " handshake failed";
            }
            if (hist.begin()->first != min_degree(p, q) ||
                hist.rbegin()->first != max_degree(p, q)) {
                pass = false;
                why << " min/max " << hist.begin()->first << "/"
                    << hist.rbegin()->first << " != " << min_degree(p, q)
                    << "/" << max_degree(p, q);
            }
            detail::expect(report, detail::tag("degree(", p, q), pass,
                           pass ? "histogram matches" : why.str());
        }
    return report;
}

// alpha and beta are adjacency-preserving bijections, and the fundamental
// decomposition partitions the edge set with the predicted cross count.
inline verification_report verify_iso(long long max_n) {
    verification_report report{"iso", {}};
    for (long long n = 1; n <= max_n; ++n) {
        const weight_bounds r = weight_range(n);
        for (long long k = r.kmin; k <= r.kmax; ++k) {
            const family_params fp = family_params::from_nk(n, k);
            const labeled_graph phi = build_padovan_graph(n, k);
            const labeled_graph a = build_ab_graph(fp.p, fp.q);
            const labeled_graph pi = build_partition_graph(fp.p, fp.q);
            detail::expect(report, detail::tag("alpha(", n, k),
                           check_isomorphism(phi, a,
                                             [](const std::string& w) {
                                                 return alpha(w);
                                             }),
                           "Phi -> A vertex/edge correspondence");
            detail::expect(report, detail::tag("beta(", n, k),
                           check_isomorphism(a, pi,
                                             [](const std::string& w) {
                                                 return to_string(beta(w));
                                             }),
                           "A -> Pi vertex/edge correspondence");
            if (n < 6) continue;

            // Split the vertex set on the 010 / 011 prefix, strip, and
            // compare both halves and the cross matching.
            std::set<std::pair<std::string, std::string>> inner01, inner011;
            std::vector<std::pair<std::string, std::string>> cross;
            for (std::size_t u = 0; u < phi.num_vertices(); ++u)
                for (int v : phi.neighbors(static_cast<int>(u))) {
                    if (static_cast<int>(u) >= v) continue;
                    const std::string& wu = phi.label(static_cast<int>(u));
                    const std::string& wv = phi.label(v);
                    const bool u011 = wu.compare(0, 3, "011") == 0;
                    const bool v011 = wv.compare(0, 3, "011") == 0;
                    if (!u011 && !v011)
                        inner01.insert(std::minmax(wu.substr(2), wv.substr(2)));
                    else if (u011 && v011)
                        inner011.insert(std::minmax(wu.substr(3), wv.substr(3)));
                    else
                        cross.emplace_back(u011 ? wv : wu, u011 ? wu : wv);
                }
            const labeled_graph g01 = build_padovan_graph(n - 2, k - 1);
            const labeled_graph g011 = build_padovan_graph(n - 3, k - 2);
            auto edge_set = [](const labeled_graph& g) {
                std::set<std::pair<std::string, std::string>> ps;
                for (std::size_t u = 0; u < g.num_vertices(); ++u)
                    for (int v : g.neighbors(static_cast<int>(u)))
                        if (static_cast<int>(u) < v)
                            ps.insert({g.label(static_cast<int>(u)), g.label(v)});
                return ps;
            };
            bool pass = inner01 == edge_set(g01) && inner011 == edge_set(g011);
            for (const auto& [u, v] : cross) {
                const fundamental_split split = fundamental_branch(u);
                if (!split.cross_partner || *split.cross_partner != v)
                    pass = false;
            }
            const bigint expected_cross =
                detail::padovan_count_or_zero(n - 5, k - 3);
            pass = pass && expected_cross == static_cast<long long>(cross.size());
            std::ostringstream why;
            why << "inner01=" << inner01.size() << " inner011=" << inner011.size()
                << " cross=" << cross.size() << " (expected cross "
                << expected_cross << ")";
            detail::expect(report, detail::tag("decomp(", n, k), pass, why.str());
        }
    }
    return report;
}

// L1 distance formula against BFS on the built partition graphs, and the
// diameter formula pq.
inline verification_report verify_metric(long long max_pq) {
    verification_report report{"metric", {}};
    for (long long p = 0; p <= max_pq; ++p)
        for (long long q = 0; q <= max_pq; ++q) {
            const std::vector<weak_partition> parts = enumerate_partitions(p, q);
            const labeled_graph g = build_partition_graph(p, q);
            const auto dist = detail::all_pairs_distances(g, "verify_metric");
            bool pass = true;
            int max_seen = 0;
            for (std::size_t i = 0; i < parts.size() && pass; ++i)
                for (std::size_t j = i; j < parts.size(); ++j) {
                    max_seen = std::max(max_seen, dist[i][j]);
                    if (dist[i][j] != partition_distance(parts[i], parts[j])) {
                        pass = false;
                        break;
                    }
                }
            detail::expect(report, detail::tag("distance(", p, q), pass,
                           "BFS == L1 over all pairs");
            detail::expect_eq(report, detail::tag("diameter(", p, q), p * q,
                              static_cast<long long>(max_seen));
        }
    return report;
}

// Median property: every triple has exactly one median, it is the
// entrywise median partition, and the pq-bit embedding is an isometry.
inline verification_report verify_median(
    long long max_pq,
    std::size_t vertex_limit = default_median_vertex_limit) {
    verification_report report{"median", {}};
    for (long long p = 0; p <= max_pq; ++p)
        for (long long q = 0; q <= max_pq; ++q) {
            const std::vector<weak_partition> parts = enumerate_partitions(p, q);
            const labeled_graph g = build_partition_graph(p, q);
            const std::size_t n = g.num_vertices();
            if (n > vertex_limit)
                throw size_limit_error("verify_median: graph exceeds vertex limit");
            const auto dist = detail::all_pairs_distances(g, "verify_median");

            std::vector<std::string> codes;
            bool isometry = true;
            for (const weak_partition& wp : parts)
                codes.push_back(hypercube_embedding(wp));
            for (std::size_t i = 0; i < n && isometry; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    int hamming = 0;
                    for (std::size_t b = 0; b < codes[i].size(); ++b)
                        hamming += codes[i][b] != codes[j][b];
                    if (hamming != dist[i][j]) {
                        isometry = false;
                        break;
                    }
                }
            detail::expect(report, detail::tag("embedding(", p, q), isometry,
                           "Hamming distance of codes == graph distance");

            bool median_ok = true;
            for (std::size_t u = 0; u < n && median_ok; ++u)
                for (std::size_t v = u + 1; v < n && median_ok; ++v)
                    for (std::size_t w = v + 1; w < n; ++w) {
                        int found = -1, count = 0;
                        for (std::size_t m = 0; m < n; ++m) {
                            if (dist[u][m] + dist[m][v] == dist[u][v] &&
                                dist[u][m] + dist[m][w] == dist[u][w] &&
                                dist[v][m] + dist[m][w] == dist[v][w]) {
                                ++count;
                                found = static_cast<int>(m);
                            }
                        }
                        weak_partition entrywise{p, {}};
                        for (long long i = 0; i < q; ++i) {
                            std::vector<long long> vals = {
                                parts[u].parts[static_cast<std::size_t>(i)],
                                parts[v].parts[static_cast<std::size_t>(i)],
                                parts[w].parts[static_cast<std::size_t>(i)]};
                            std::sort(vals.begin(), vals.end());
                            entrywise.parts.push_back(vals[1]);
                        }
                        if (count != 1 || !entrywise.valid() ||
                            found != g.index_of(to_string(entrywise))) {
                            median_ok = false;
                            break;
                        }
                    }
            detail::expect(report, detail::tag("median(", p, q), median_ok,
                           "unique median == entrywise median partition");
        }
    return report;
}

// Cube polynomial: closed form == recurrence == generating-series slice
// == brute-force census, plus the largest-cube dimension/count.
inline verification_report verify_cubes(
    long long max_pq,
    std::size_t vertex_limit = default_bruteforce_vertex_limit) {
    verification_report report{"cubes", {}};
    const trivariate_series series =
        cube_generating_series(max_pq, 5 * max_pq + 1, 3 * max_pq);
    for (long long p = 0; p <= max_pq; ++p)
        for (long long q = 0; q <= max_pq; ++q) {
            const family_params fp = family_params::from_pq(p, q);
            const cube_polynomial closed = cube_polynomial_closed(fp);
            const cube_polynomial recurred = cube_polynomial_recurrence(fp);
            const cube_polynomial sliced = series.slice(fp.n, fp.k);
            const cube_polynomial counted =
                cube_polynomial_bruteforce(build_ab_graph(p, q), vertex_limit);
            const bool equal = closed == recurred && closed == sliced &&
                               closed == counted &&
                               closed.coefficient(0) == vertex_count(fp) &&
                               closed.coefficient(1) == edge_count(fp);
            std::ostringstream why;
            why << "closed=" << closed.str() << " recurrence=" << recurred.str()
                << " series=" << sliced.str() << " counted=" << counted.str();
            detail::expect(report, detail::tag("cubes(", p, q), equal, why.str());

            const largest_cube_info top = largest_cube(p, q);
            const bool top_ok = closed.degree() == top.dimension &&
                                closed.coefficient(top.dimension) == top.count;
            std::ostringstream top_why;
            top_why << "dimension=" << closed.degree() << " count="
                    << closed.coefficient(closed.degree()) << " expected ("
                    << top.dimension << ", " << top.count << ")";
            detail::expect(report, detail::tag("largest(", p, q), top_ok,
                           top_why.str());
        }
    detail::expect(report, "spot phi(11,6)",
                   cube_polynomial_closed(family_params::from_nk(11, 6)) ==
                       cube_polynomial({6, 6, 1}),
                   "[6, 6, 1]");
    detail::expect(report, "spot phi(15,9)",
                   cube_polynomial_closed(family_params::from_nk(15, 9)) ==
                       cube_polynomial({5, 4}),
                   "[5, 4]");
    detail::expect(report, "spot ab(4,3)",
                   cube_polynomial_closed(family_params::from_pq(4, 3)) ==
                       cube_polynomial({35, 60, 30, 4}),
                   "[35, 60, 30, 4]");
    return report;
}

// Brute-force automorphism groups: order 1 / 2 / 4 by shape of (p,q),
// generated by tau (and the conjugation rho when the box is square).
inline verification_report verify_aut(
    long long max_pq,
    std::size_t vertex_limit = default_bruteforce_vertex_limit) {
    verification_report report{"aut", {}};
    for (long long p = 0; p <= max_pq; ++p)
        for (long long q = 0; q <= max_pq; ++q) {
            const std::vector<weak_partition> parts = enumerate_partitions(p, q);
            const labeled_graph g = build_partition_graph(p, q);
            const auto group = automorphism_group(g, vertex_limit);
            const std::size_t expected =
                std::min(p, q) == 0 ? 1 : (p == q && p >= 2 ? 4 : 2);
            detail::expect_eq(report, detail::tag("aut-order(", p, q), expected,
                              group.size());

            auto as_permutation = [&](auto&& map) {
                std::vector<int> perm;
                for (const weak_partition& wp : parts)
                    perm.push_back(g.index_of(to_string(map(wp))));
                return perm;
            };
            const std::set<std::vector<int>> members(group.begin(), group.end());
            const std::vector<int> tau_perm =
                as_permutation([](const weak_partition& wp) { return tau(wp); });
            detail::expect(report, detail::tag("aut-tau(", p, q),
                           members.contains(tau_perm),
                           "tau is an automorphism");
            if (p == q) {
                const std::vector<int> rho_perm = as_permutation(
                    [](const weak_partition& wp) { return conjugate(wp); });
                detail::expect(report, detail::tag("aut-rho(", p, q),
                               members.contains(rho_perm),
                               "conjugation is an automorphism");
                if (p >= 2) {
                    std::vector<int> identity, tau_rho;
                    for (std::size_t i = 0; i < parts.size(); ++i)
                        identity.push_back(static_cast<int>(i));
                    for (int i : rho_perm)
                        tau_rho.push_back(tau_perm[static_cast<std::size_t>(i)]);
                    const std::set<std::vector<int>> klein{identity, tau_perm,
                                                           rho_perm, tau_rho};
                    bool involutions = true;
                    for (const auto& sigma : group)
                        for (std::size_t i = 0; i < sigma.size(); ++i)
                            if (sigma[static_cast<std::size_t>(sigma[i])] !=
                                static_cast<int>(i))
                                involutions = false;
                    detail::expect(report, detail::tag("aut-klein(", p, q),
                                   klein.size() == 4 && klein == members &&
                                       involutions,
                                   "{id, tau, rho, tau*rho} = Aut, all "
                                   "involutions");
                }
            }
            bool degrees_ok = true;
            for (const auto& sigma : group)
                for (std::size_t v = 0; v < sigma.size(); ++v)
                    if (g.neighbors(static_cast<int>(v)).size() !=
                        g.neighbors(sigma[v]).size())
                        degrees_ok = false;
            detail::expect(report, detail::tag("aut-degrees(", p, q), degrees_ok,
                           "automorphisms preserve degrees");
        }
    return report;
}

// Frozen small graphs: the n = 11 and n = 15 families and the shapes of
// every family with n <= 10.
inline verification_report verify_golden() {
    verification_report report{"golden", {}};

    const auto check_family = [&](long long n, long long k,
                                  std::vector<std::string> expect_vertices,
                                  std::size_t expect_edges) {
        const labeled_graph g = build_padovan_graph(n, k);
        std::sort(expect_vertices.begin(), expect_vertices.end());
        const bool pass = g.vertices() == expect_vertices &&
                          g.num_edges() == expect_edges;
        std::ostringstream why;
        why << g.num_vertices() << " vertices / " << g.num_edges()
            << " edges, expected " << expect_vertices.size() << "/"
            << expect_edges;
        detail::expect(report, detail::tag("golden phi(", n, k), pass, why.str());
    };

    check_family(11, 5, {"01010101010"}, 0);
    check_family(11, 6,
                 {"01101101010", "01101011010", "01101010110", "01011011010",
                  "01011010110", "01010110110"},
                 6);
    check_family(15, 7, {"010101010101010"}, 0);
    check_family(15, 8,
                 {"011011010101010", "011010110101010", "011010101101010",
                  "011010101011010", "011010101010110", "010110110101010",
                  "010110101101010", "010110101011010", "010110101010110",
                  "010101101101010", "010101101011010", "010101101010110",
                  "010101011011010", "010101011010110", "010101010110110"},
                 20);
    check_family(15, 9,
                 {"011011011011010", "011011011010110", "011011010110110",
                  "011010110110110", "010110110110110"},
                 4);

    {
        const labeled_graph g = build_padovan_graph(11, 6);
        const std::set<std::pair<std::string, std::string>> fig_edges = {
            {"01101011010", "01101101010"}, {"01101010110", "01101011010"},
            {"01011011010", "01101011010"}, {"01011010110", "01101010110"},
            {"01011010110", "01011011010"}, {"01010110110", "01011010110"}};
        std::set<std::pair<std::string, std::string>> built;
        for (std::size_t u = 0; u < g.num_vertices(); ++u)
            for (int v : g.neighbors(static_cast<int>(u)))
                if (static_cast<int>(u) < v)
                    built.insert({g.label(static_cast<int>(u)), g.label(v)});
        detail::expect(report, "golden phi(11,6) edge set", built == fig_edges,
                       "matches the six drawn edges");
        const labeled_graph nine = build_padovan_graph(15, 9);
        detail::expect(report, "golden phi(15,9) path",
                       detail::is_path_graph(nine), "path on 5 vertices");
    }

    // Shapes for n <= 10: (n, k, |V|, |E|), path-shaped throughout.
    struct row { long long n, k, v, e; };
    const std::vector<row> table = {
        {1, 0, 1, 0},  {3, 1, 1, 0},  {4, 2, 1, 0}, {5, 2, 1, 0},
        {6, 3, 2, 1},  {7, 3, 1, 0},  {7, 4, 1, 0}, {8, 4, 3, 2},
        {9, 4, 1, 0},  {9, 5, 3, 2},  {10, 5, 4, 3}, {10, 6, 1, 0}};
    for (const row& r : table) {
        const labeled_graph g = build_padovan_graph(r.n, r.k);
        const bool pass = static_cast<long long>(g.num_vertices()) == r.v &&
                          static_cast<long long>(g.num_edges()) == r.e &&
                          detail::is_path_graph(g);
        std::ostringstream why;
        why << g.num_vertices() << "/" << g.num_edges() << " expected " << r.v
            << "/" << r.e;
        detail::expect(report, detail::tag("golden table1(", r.n, r.k), pass,
                       why.str());
    }
    detail::expect(report, "golden table1(2,-)",
                   weight_range(2).empty() &&
                       enumerate_padovan_words(2, 1).empty(),
                   "n=2 family is empty");
    return report;
}

inline std::vector<verification_report> verify_all(
    long long max_n, long long max_pq,
    std::size_t median_limit = default_median_vertex_limit,
    std::size_t bruteforce_limit = default_bruteforce_vertex_limit) {
    return {verify_order(max_n),
            verify_size(max_pq),
            verify_degree(max_pq),
            verify_iso(max_n),
            verify_metric(max_pq),
            verify_median(max_pq, median_limit),
            verify_cubes(max_pq, bruteforce_limit),
            verify_aut(max_pq, bruteforce_limit),
            verify_golden()};
}

}  // namespace padovan
