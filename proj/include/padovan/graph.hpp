#pragma once

/**
 * Label-addressed undirected graphs and the brute-force machinery used to
 * cross-check every closed form: BFS metrics, median verification,
 * induced-hypercube counting, automorphism search.
 *
 * Graphs are immutable after construction; vertices sit in a canonical
 * order (the enumeration order of their family), so identical parameters
 * always produce byte-identical structures.
 */

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "padovan/closed_forms.hpp"
#include "padovan/partitions.hpp"
#include "padovan/words.hpp"

namespace padovan {

inline constexpr std::size_t default_median_vertex_limit = 150;
inline constexpr std::size_t default_bruteforce_vertex_limit = 200;

struct graph_params {
    long long n = 0;
    long long k = 0;
    long long p = 0;
    long long q = 0;
    bool operator==(const graph_params&) const = default;
};

class labeled_graph {
public:
    std::string family;  // "padovan", "ab", "partition"; empty for ad hoc
    graph_params params{};

    labeled_graph() = default;

    // Validates: unique labels, indices in range, no loops; symmetry is
    // established here by inserting both directions.
    static labeled_graph from_edges(std::vector<std::string> vertices,
                                    const std::vector<std::pair<int, int>>& edges) {
        labeled_graph g;
        g.vertices_ = std::move(vertices);
        g.adj_.assign(g.vertices_.size(), {});
        for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
            if (!g.label_index_.emplace(g.vertices_[i], static_cast<int>(i)).second)
                throw std::invalid_argument("labeled_graph: duplicate label " +
                                            g.vertices_[i]);
        }
        const int n = static_cast<int>(g.vertices_.size());
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("labeled_graph: edge index out of range");
            if (u == v)
                throw std::invalid_argument("labeled_graph: loop edge");
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& row : g.adj_) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
        return g;
    }

    std::size_t num_vertices() const { return vertices_.size(); }

    std::size_t num_edges() const {
        std::size_t twice = 0;
        for (const auto& row : adj_) twice += row.size();
        return twice / 2;
    }

    const std::vector<std::string>& vertices() const { return vertices_; }

    const std::string& label(int v) const {
        return vertices_[static_cast<std::size_t>(v)];
    }

    const std::vector<int>& neighbors(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

    bool has_edge(int u, int v) const {
        const auto& row = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(row.begin(), row.end(), v);
    }

    // -1 when the label is absent.
    int index_of(std::string_view label) const {
        auto it = label_index_.find(label);
        return it == label_index_.end() ? -1 : it->second;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<std::vector<int>> adj_;
    std::map<std::string, int, std::less<>> label_index_;
};

// ---------------------------------------------------------------------------
// Family builders

inline labeled_graph build_padovan_graph(long long n, long long k) {
    std::vector<std::string> vertices = enumerate_padovan_words(n, k);
    std::vector<std::pair<int, int>> edges;
    std::map<std::string, int, std::less<>> index;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index.emplace(vertices[i], static_cast<int>(i));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (const std::string& nb : padovan_neighbors(vertices[i]))
            if (int j = index.at(nb); static_cast<int>(i) < j)
                edges.emplace_back(static_cast<int>(i), j);
    labeled_graph g = labeled_graph::from_edges(std::move(vertices), edges);
    g.family = "padovan";
    g.params = {n, k, 2 * n - 3 * k - 2, 2 * k - n + 1};
    return g;
}

inline labeled_graph build_ab_graph(long long p, long long q) {
    std::vector<std::string> vertices = enumerate_ab_words(p, q);
    std::vector<std::pair<int, int>> edges;
    std::map<std::string, int, std::less<>> index;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index.emplace(vertices[i], static_cast<int>(i));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (const std::string& nb : ab_neighbors(vertices[i]))
            if (int j = index.at(nb); static_cast<int>(i) < j)
                edges.emplace_back(static_cast<int>(i), j);
    labeled_graph g = labeled_graph::from_edges(std::move(vertices), edges);
    g.family = "ab";
    g.params = {2 * p + 3 * q + 1, p + 2 * q, p, q};
    return g;
}

inline labeled_graph build_partition_graph(long long p, long long q) {
    const std::vector<weak_partition> parts = enumerate_partitions(p, q);
    std::vector<std::string> vertices;
    std::map<std::string, int, std::less<>> index;
    for (const weak_partition& wp : parts) {
        vertices.push_back(to_string(wp));
        index.emplace(vertices.back(), static_cast<int>(vertices.size()) - 1);
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const weak_partition& nb : partition_neighbors(parts[i]))
            if (int j = index.at(to_string(nb)); static_cast<int>(i) < j)
                edges.emplace_back(static_cast<int>(i), j);
    labeled_graph g = labeled_graph::from_edges(std::move(vertices), edges);
    g.family = "partition";
    g.params = {2 * p + 3 * q + 1, p + 2 * q, p, q};
    return g;
}

enum class family_kind { padovan, ab, partition };

// For the padovan family the pair is (n, k); otherwise (p, q).
inline labeled_graph build_graph(family_kind family, long long a, long long b) {
    switch (family) {
        case family_kind::padovan: return build_padovan_graph(a, b);
        case family_kind::ab: return build_ab_graph(a, b);
        case family_kind::partition: return build_partition_graph(a, b);
    }
    throw std::invalid_argument("build_graph: unknown family");
}

// ---------------------------------------------------------------------------
// Metrics

// Distances from src; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const labeled_graph& g, int src) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::deque<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] =
                    dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

inline int distance(const labeled_graph& g, int u, int v) {
    if (g.num_vertices() == 0)
        throw empty_graph_error("distance: empty graph");
    const int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
    if (d < 0) throw disconnected_error("distance: vertices not connected");
    return d;
}

inline int diameter(const labeled_graph& g) {
    if (g.num_vertices() == 0)
        throw empty_graph_error("diameter: empty graph");
    int best = 0;
    for (std::size_t u = 0; u < g.num_vertices(); ++u) {
        for (int d : bfs_distances(g, static_cast<int>(u))) {
            if (d < 0)
                throw disconnected_error("diameter: graph is disconnected");
            best = std::max(best, d);
        }
    }
    return best;
}

namespace detail {

inline std::vector<std::vector<int>> all_pairs_distances(
    const labeled_graph& g, const char* who) {
    std::vector<std::vector<int>> dist;
    dist.reserve(g.num_vertices());
    for (std::size_t u = 0; u < g.num_vertices(); ++u) {
        dist.push_back(bfs_distances(g, static_cast<int>(u)));
        for (int d : dist.back())
            if (d < 0)
                throw disconnected_error(std::string(who) +
                                         ": graph is disconnected");
    }
    return dist;
}

}  // namespace detail

// The unique vertex on pairwise geodesics of (u, v, w), if exactly one
// exists.  Multiplicity or absence is data, not an error.
inline std::optional<int> median_of(const labeled_graph& g, int u, int v,
                                    int w) {
    if (g.num_vertices() == 0)
        throw empty_graph_error("median_of: empty graph");
    const std::vector<int> du = bfs_distances(g, u);
    const std::vector<int> dv = bfs_distances(g, v);
    const std::vector<int> dw = bfs_distances(g, w);
    const auto at = [](const std::vector<int>& d, int i) {
        const int val = d[static_cast<std::size_t>(i)];
        if (val < 0) throw disconnected_error("median_of: disconnected graph");
        return val;
    };
    const int duv = at(du, v), duw = at(du, w), dvw = at(dv, w);
    std::optional<int> median;
    for (std::size_t m = 0; m < g.num_vertices(); ++m) {
        const int i = static_cast<int>(m);
        if (at(du, i) + at(dv, i) == duv && at(du, i) + at(dw, i) == duw &&
            at(dv, i) + at(dw, i) == dvw) {
            if (median) return std::nullopt;  // not unique
            median = i;
        }
    }
    return median;
}

// Every vertex triple must admit exactly one median.  O(|V|^3) over
// precomputed distances, hence the size guard.
inline bool is_median_graph(const labeled_graph& g,
                            std::size_t vertex_limit = default_median_vertex_limit) {
    const std::size_t n = g.num_vertices();
    if (n == 0) throw empty_graph_error("is_median_graph: empty graph");
    if (n > vertex_limit)
        throw size_limit_error("is_median_graph: vertex count exceeds limit");
    const auto dist = detail::all_pairs_distances(g, "is_median_graph");
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            for (std::size_t w = v + 1; w < n; ++w) {
                int medians = 0;
                for (std::size_t m = 0; m < n; ++m) {
                    if (dist[u][m] + dist[m][v] == dist[u][v] &&
                        dist[u][m] + dist[m][w] == dist[u][w] &&
                        dist[v][m] + dist[m][w] == dist[v][w]) {
                        if (++medians > 1) break;
                    }
                }
                if (medians != 1) return false;
            }
    return true;
}

// ---------------------------------------------------------------------------
// Induced hypercube counting

namespace detail {

// Extend the d-cube S by one dimension: pick a neighbor u' of the anchor
// S[0] and grow a matching phi : S -> V \ S with phi(S[0]) = u'.  A valid
// phi makes S + phi(S) induce a (d+1)-cube (two induced copies joined by
// a perfect matching and nothing else).  All completions are explored;
// duplicates collapse on the sorted vertex-set key.
inline void complete_matching(const labeled_graph& g,
                              const std::vector<int>& cube, std::size_t pos,
                              std::vector<int>& image,
                              std::set<std::vector<int>>& grown) {
    if (pos == cube.size()) {
        std::vector<int> next(cube);
        next.insert(next.end(), image.begin(), image.end());
        std::sort(next.begin(), next.end());
        grown.insert(std::move(next));
        return;
    }
    const int s = cube[pos];
    for (int c : g.neighbors(s)) {
        if (std::binary_search(cube.begin(), cube.end(), c)) continue;
        if (std::find(image.begin(), image.end(), c) != image.end()) continue;
        bool ok = true;
        // c must mirror s against everything matched so far and must not
        // touch the rest of the base cube.
        for (std::size_t j = 0; ok && j < pos; ++j)
            if (g.has_edge(c, image[j]) != g.has_edge(s, cube[j])) ok = false;
        for (std::size_t j = 0; ok && j < cube.size(); ++j)
            if (j != pos && g.has_edge(c, cube[j])) ok = false;
        if (!ok) continue;
        image.push_back(c);
        complete_matching(g, cube, pos + 1, image, grown);
        image.pop_back();
    }
}

}  // namespace detail

// Exact induced-hypercube census: coeffs[d] = number of induced d-cubes.
// Level d+1 is generated from level d by anchored matching extension with
// dedup on sorted vertex sets, so each cube is counted once.
inline cube_polynomial cube_polynomial_bruteforce(
    const labeled_graph& g,
    std::size_t vertex_limit = default_bruteforce_vertex_limit) {
    if (g.num_vertices() > vertex_limit)
        throw size_limit_error(
            "cube_polynomial_bruteforce: vertex count exceeds limit");
    std::vector<bigint> coeffs;
    std::set<std::vector<int>> level;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        level.insert({static_cast<int>(v)});
    while (!level.empty()) {
        coeffs.push_back(static_cast<long long>(level.size()));
        std::set<std::vector<int>> next;
        for (const std::vector<int>& cube : level) {
            std::vector<int> image;
            detail::complete_matching(g, cube, 0, image, next);
        }
        level = std::move(next);
    }
    return cube_polynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Automorphisms and isomorphism checking

namespace detail {

// Iterated neighborhood-color refinement; the partition of the vertices
// it stabilizes on confines the backtracking search below.
inline std::vector<int> refine_colors(const labeled_graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<int> color(n);
    for (std::size_t v = 0; v < n; ++v)
        color[v] = static_cast<int>(g.neighbors(static_cast<int>(v)).size());
    for (std::size_t round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> palette;
        std::vector<int> next(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<int> around;
            for (int u : g.neighbors(static_cast<int>(v)))
                around.push_back(color[static_cast<std::size_t>(u)]);
            std::sort(around.begin(), around.end());
            auto key = std::make_pair(color[v], std::move(around));
            auto [it, inserted] =
                palette.emplace(std::move(key), static_cast<int>(palette.size()));
            next[v] = it->second;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

inline void search_automorphisms(const labeled_graph& g,
                                 const std::vector<int>& order,
                                 const std::vector<int>& color,
                                 std::vector<int>& image,
                                 std::vector<char>& used, std::size_t pos,
                                 std::vector<std::vector<int>>& found) {
    const std::size_t n = g.num_vertices();
    if (pos == n) {
        found.push_back(image);
        return;
    }
    const int v = order[pos];
    for (std::size_t c = 0; c < n; ++c) {
        const int cand = static_cast<int>(c);
        if (used[c] || color[c] != color[static_cast<std::size_t>(v)]) continue;
        bool ok = true;
        for (std::size_t j = 0; ok && j < pos; ++j) {
            const int w = order[j];
            if (g.has_edge(v, w) !=
                g.has_edge(cand, image[static_cast<std::size_t>(w)]))
                ok = false;
        }
        if (!ok) continue;
        image[static_cast<std::size_t>(v)] = cand;
        used[c] = 1;
        search_automorphisms(g, order, color, image, used, pos + 1, found);
        used[c] = 0;
    }
}

}  // namespace detail

// The full automorphism group as index permutations, lexicographically
// sorted.  Backtracking over color-refined classes; closure of the result
// under composition is verified before returning.
inline std::vector<std::vector<int>> automorphism_group(
    const labeled_graph& g,
    std::size_t vertex_limit = default_bruteforce_vertex_limit) {
    const std::size_t n = g.num_vertices();
    if (n == 0) throw empty_graph_error("automorphism_group: empty graph");
    if (n > vertex_limit)
        throw size_limit_error("automorphism_group: vertex count exceeds limit");

    const std::vector<int> color = detail::refine_colors(g);

    // Assign in BFS order so adjacency constraints bind immediately.
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::deque<int> queue{static_cast<int>(root)};
        seen[root] = 1;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (int v : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    queue.push_back(v);
                }
            }
        }
    }

    std::vector<std::vector<int>> found;
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    detail::search_automorphisms(g, order, color, image, used, 0, found);
    std::sort(found.begin(), found.end());

    const std::set<std::vector<int>> group(found.begin(), found.end());
    for (const auto& a : found)
        for (const auto& b : found) {
            std::vector<int> ab(n);
            for (std::size_t v = 0; v < n; ++v)
                ab[v] = a[static_cast<std::size_t>(b[v])];
            if (!group.contains(ab))
                throw std::logic_error(
                    "automorphism_group: result not closed under composition");
        }
    return found;
}

// True iff `map` sends labels of g1 bijectively onto labels of g2 and
// preserves adjacency and non-adjacency in both directions.
inline bool check_isomorphism(
    const labeled_graph& g1, const labeled_graph& g2,
    const std::function<std::string(const std::string&)>& map) {
    if (g1.num_vertices() != g2.num_vertices()) return false;
    const std::size_t n = g1.num_vertices();
    std::vector<int> image(n);
    std::vector<char> hit(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        const int t = g2.index_of(map(g1.label(static_cast<int>(v))));
        if (t < 0 || hit[static_cast<std::size_t>(t)]) return false;
        hit[static_cast<std::size_t>(t)] = 1;
        image[v] = t;
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (g1.has_edge(static_cast<int>(u), static_cast<int>(v)) !=
                g2.has_edge(image[u], image[v]))
                return false;
    return true;
}

inline std::map<long long, long long> degree_histogram(const labeled_graph& g) {
    std::map<long long, long long> hist;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        ++hist[static_cast<long long>(g.neighbors(static_cast<int>(v)).size())];
    return hist;
}

}  // namespace padovan
