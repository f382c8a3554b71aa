#pragma once

/**
 * Weak partitions inside a p x q box: the vertices of Pi(p,q).
 *
 * A vertex is a non-increasing sequence of exactly q parts, each in
 * [0, p]; zero parts count.  Two partitions are adjacent when one arises
 * from the other by adding 1 to a single part (as multisets, so the
 * result is kept sorted).
 */

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "padovan/errors.hpp"

namespace padovan {

struct weak_partition {
    long long max_part = 0;        // the box width p
    std::vector<long long> parts;  // non-increasing, each in [0, max_part]

    long long part_count() const {
        return static_cast<long long>(parts.size());
    }

    long long sum() const {
        return std::accumulate(parts.begin(), parts.end(), 0LL);
    }

    bool valid() const {
        if (max_part < 0) return false;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0 || parts[i] > max_part) return false;
            if (i > 0 && parts[i - 1] < parts[i]) return false;
        }
        return true;
    }

    auto operator<=>(const weak_partition&) const = default;
};

// "(2,1)"; the empty partition prints as "()".
inline std::string to_string(const weak_partition& wp) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < wp.parts.size(); ++i) {
        if (i) out << ',';
        out << wp.parts[i];
    }
    out << ')';
    return out.str();
}

namespace detail {

inline void check_valid(const weak_partition& wp, const char* who) {
    if (!wp.valid())
        throw std::invalid_argument(std::string(who) +
                                    ": malformed weak partition");
}

}  // namespace detail

// All C(p+q, q) vertices of Pi(p,q) in lexicographic order of the part
// sequences.
inline std::vector<weak_partition> enumerate_partitions(long long p,
                                                        long long q) {
    std::vector<weak_partition> out;
    if (p < 0 || q < 0) return out;
    std::vector<long long> parts;
    auto rec = [&](auto&& self, long long cap, long long left) -> void {
        if (left == 0) {
            out.push_back({p, parts});
            return;
        }
        for (long long t = 0; t <= cap; ++t) {
            parts.push_back(t);
            self(self, t, left - 1);
            parts.pop_back();
        }
    };
    rec(rec, p, q);
    return out;
}

// Neighbors of lambda: every partition obtainable by adding 1 to a part
// of lambda (up-neighbors) or whose own +1 yields lambda (down-neighbors).
// Re-sorting makes increments that break the ordering land on the same
// multiset, e.g. both increments of (1,1) give the single neighbor (2,1).
inline std::vector<weak_partition> partition_neighbors(
    const weak_partition& lambda) {
    detail::check_valid(lambda, "partition_neighbors");
    std::set<std::vector<long long>> seen;
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
        for (long long delta : {+1LL, -1LL}) {
            std::vector<long long> parts = lambda.parts;
            parts[i] += delta;
            if (parts[i] < 0 || parts[i] > lambda.max_part) continue;
            std::sort(parts.begin(), parts.end(), std::greater<>());
            seen.insert(std::move(parts));
        }
    }
    std::vector<weak_partition> out;
    for (const auto& parts : seen) out.push_back({lambda.max_part, parts});
    return out;
}

// d(lambda, mu) = sum_i |lambda_i - mu_i|, the graph distance in Pi(p,q).
inline long long partition_distance(const weak_partition& lambda,
                                    const weak_partition& mu) {
    if (lambda.max_part != mu.max_part ||
        lambda.parts.size() != mu.parts.size())
        throw context_mismatch_error(
            "partition_distance: different (p,q) context");
    long long total = 0;
    for (std::size_t i = 0; i < lambda.parts.size(); ++i)
        total += std::abs(lambda.parts[i] - mu.parts[i]);
    return total;
}

// Isometric embedding into the pq-cube: block i is 0^(p-part_i) 1^(part_i).
inline std::string hypercube_embedding(const weak_partition& lambda) {
    detail::check_valid(lambda, "hypercube_embedding");
    std::string code;
    code.reserve(static_cast<std::size_t>(lambda.max_part) *
                 lambda.parts.size());
    for (long long part : lambda.parts) {
        code.append(static_cast<std::size_t>(lambda.max_part - part), '0');
        code.append(static_cast<std::size_t>(part), '1');
    }
    return code;
}

// tau(lambda) = (p - lambda_q, ..., p - lambda_1): complement and reverse.
// An involution and an automorphism of Pi(p,q); swaps the two leaves.
inline weak_partition tau(const weak_partition& lambda) {
    detail::check_valid(lambda, "tau");
    std::vector<long long> parts(lambda.parts.rbegin(), lambda.parts.rend());
    for (long long& part : parts) part = lambda.max_part - part;
    return {lambda.max_part, std::move(parts)};
}

// Ferrers-diagram transpose, zero-padded back to p parts.  Only a
// self-map of Pi(p,q) when the box is square.
inline weak_partition conjugate(const weak_partition& lambda) {
    detail::check_valid(lambda, "conjugate");
    if (lambda.max_part != lambda.part_count())
        throw not_square_error("conjugate: requires p == q");
    std::vector<long long> parts;
    for (long long row = 1; row <= lambda.max_part; ++row) {
        const long long count = static_cast<long long>(std::count_if(
            lambda.parts.begin(), lambda.parts.end(),
            [row](long long part) { return part >= row; }));
        parts.push_back(count);
    }
    return {lambda.max_part, std::move(parts)};
}

enum class leaf_kind { zero, full };

inline weak_partition leaf_partition(long long p, long long q,
                                     leaf_kind leaf) {
    std::vector<long long> parts(static_cast<std::size_t>(q),
                                 leaf == leaf_kind::zero ? 0 : p);
    return {p, std::move(parts)};
}

// A vertex is lonely w.r.t. a leaf when exactly one neighbor is strictly
// closer to that leaf.
inline bool is_lonely(const weak_partition& lambda, leaf_kind leaf) {
    detail::check_valid(lambda, "is_lonely");
    const weak_partition anchor =
        leaf_partition(lambda.max_part, lambda.part_count(), leaf);
    const long long here = partition_distance(lambda, anchor);
    long long closer = 0;
    for (const weak_partition& nb : partition_neighbors(lambda))
        if (partition_distance(nb, anchor) == here - 1) ++closer;
    return closer == 1;
}

}  // namespace padovan
