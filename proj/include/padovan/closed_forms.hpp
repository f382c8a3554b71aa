#pragma once

/**
 * Closed-form counting for the three isomorphic graph families
 *
 *   Phi(n,k)  — Padovan words of length n with k ones, edges swap one 01/10
 *   A(p,q)    — words with p a's and q b's, edges swap one adjacent ab/ba
 *   Pi(p,q)   — weak partitions with q parts <= p, edges increment one part
 *
 * The coordinate change is p = 2n-3k-2, q = 2k-n+1 (inverse n = 2p+3q+1,
 * k = p+2q).  All arithmetic is exact; counts are arbitrary-precision
 * integers.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "padovan/errors.hpp"

namespace padovan {

using bigint = boost::multiprecision::cpp_int;

// C(a, b) with C(a, b) = 0 whenever a < 0, b < 0 or b > a.  The zero
// convention makes the degree and cube-coefficient formulas total.
inline bigint binomial(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    bigint result = 1;
    for (long long i = 0; i < b; ++i) {
        result *= a - i;
        result /= i + 1;
    }
    return result;
}

// P(n) = P(n-2) + P(n-3), P(0) = 1, P(1) = P(2) = 0.
inline bigint padovan_number(long long n) {
    if (n < 0) throw out_of_range_error("padovan_number: negative index");
    bigint a = 1, b = 0, c = 0;  // P(i), P(i+1), P(i+2)
    for (long long i = 0; i < n; ++i) {
        bigint next = a + b;  // P(i+3)
        a = b;
        b = c;
        c = next;
    }
    return a;
}

struct weight_bounds {
    long long kmin;
    long long kmax;
    bool empty() const { return kmin > kmax; }
};

// Admissible weights of a length-n Padovan word: [floor(n/2), floor((2n-2)/3)].
// The window is empty exactly for n = 2.
inline weight_bounds weight_range(long long n) {
    if (n < 1) throw out_of_range_error("weight_range: n must be >= 1");
    return {n / 2, (2 * n - 2) / 3};
}

// Both coordinate systems for one family.  Valid instances always satisfy
// p, q >= 0, n = 2p+3q+1 and k = p+2q.
struct family_params {
    long long n;
    long long k;
    long long p;
    long long q;

    static family_params from_nk(long long n, long long k) {
        const weight_bounds r = weight_range(n);
        if (k < r.kmin || k > r.kmax) {
            std::ostringstream msg;
            msg << "k=" << k << " outside weight range [" << r.kmin << ", "
                << r.kmax << "] for n=" << n;
            throw out_of_range_error(msg.str());
        }
        return {n, k, 2 * n - 3 * k - 2, 2 * k - n + 1};
    }

    static family_params from_pq(long long p, long long q) {
        if (p < 0 || q < 0)
            throw out_of_range_error("family_params: p and q must be >= 0");
        return {2 * p + 3 * q + 1, p + 2 * q, p, q};
    }

    bool operator==(const family_params&) const = default;
};

inline family_params nk_to_pq(long long n, long long k) {
    return family_params::from_nk(n, k);
}

inline family_params pq_to_nk(long long p, long long q) {
    return family_params::from_pq(p, q);
}

// |V| = C(n-k-1, 2n-3k-2) = C(p+q, p).
inline bigint vertex_count(const family_params& fp) {
    return binomial(fp.p + fp.q, fp.p);
}

// |E| = q * C(p+q-1, p-1); zero when pq = 0 (the binomial convention
// already yields 0 for p = 0).
inline bigint edge_count(long long p, long long q) {
    return q * binomial(p + q - 1, p - 1);
}

inline bigint edge_count(const family_params& fp) {
    return edge_count(fp.p, fp.q);
}

// Piecewise (n,k) form of the edge count: 0 at the window ends
// k = (n-1)/2 and k = (2n-2)/3, else (2k-n+1) * C(n-k-2, 2n-3k-3).
inline bigint edge_count_by_weight(long long n, long long k) {
    if (2 * k == n - 1 || 3 * k == 2 * n - 2) return 0;
    return (2 * k - n + 1) * binomial(n - k - 2, 2 * n - 3 * k - 3);
}

// Number of vertices of degree d in A(p,q).
//
//   d odd:      2 * C(p-1, (d-1)/2) * C(q-1, (d-1)/2)
//   d even > 0: C(p-1, d/2-1) * C(q-1, d/2) + C(p-1, d/2) * C(q-1, d/2-1)
//   d = 0:      1 when pq = 0 (the lone vertex), else 0
inline bigint degree_count(long long p, long long q, long long d) {
    if (p < 0 || q < 0 || d < 0) return 0;
    if (d == 0) return (p == 0 || q == 0) ? 1 : 0;
    if (d % 2 == 1) {
        const long long h = (d - 1) / 2;
        return 2 * binomial(p - 1, h) * binomial(q - 1, h);
    }
    const long long h = d / 2;
    return binomial(p - 1, h - 1) * binomial(q - 1, h) +
           binomial(p - 1, h) * binomial(q - 1, h - 1);
}

// min degree = min{1, pq}; needs p+q >= 1.
inline long long min_degree(long long p, long long q) {
    return std::min<long long>(1, p * q);
}

// max degree = 2*min{p,q} when p != q, else 2p-1; needs p+q >= 1.
inline long long max_degree(long long p, long long q) {
    return p == q ? 2 * p - 1 : 2 * std::min(p, q);
}

// diam = p*q.
inline long long diameter_formula(const family_params& fp) {
    return fp.p * fp.q;
}

// Coefficient vector of the cube polynomial: coeffs[j] counts induced
// j-dimensional hypercubes.  The empty vector is the zero polynomial
// (empty graph); otherwise the leading coefficient is nonzero.
struct cube_polynomial {
    std::vector<bigint> coeffs;

    cube_polynomial() = default;
    explicit cube_polynomial(std::vector<bigint> cs) : coeffs(std::move(cs)) {
        normalize();
    }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    // -1 for the zero polynomial.
    long long degree() const {
        return static_cast<long long>(coeffs.size()) - 1;
    }

    bigint coefficient(long long j) const {
        if (j < 0 || j >= static_cast<long long>(coeffs.size())) return 0;
        return coeffs[static_cast<std::size_t>(j)];
    }

    bool operator==(const cube_polynomial&) const = default;

    std::string str() const {
        std::ostringstream out;
        out << '[';
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (j) out << ", ";
            out << coeffs[j];
        }
        out << ']';
        return out.str();
    }
};

// c_j = C(n-k-j-1, 2k-n+1) * C(2k-n+1, j).
inline cube_polynomial cube_polynomial_closed(const family_params& fp) {
    std::vector<bigint> coeffs;
    for (long long j = 0; j <= fp.q; ++j)
        coeffs.push_back(binomial(fp.n - fp.k - j - 1, fp.q) *
                         binomial(fp.q, j));
    return cube_polynomial(std::move(coeffs));
}

namespace detail {

inline cube_polynomial poly_sum(const cube_polynomial& a,
                                const cube_polynomial& b,
                                const cube_polynomial& x_shifted) {
    std::vector<bigint> out(std::max({a.coeffs.size(), b.coeffs.size(),
                                      x_shifted.coeffs.size() + 1}),
                            0);
    for (std::size_t j = 0; j < a.coeffs.size(); ++j) out[j] += a.coeffs[j];
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[j] += b.coeffs[j];
    for (std::size_t j = 0; j < x_shifted.coeffs.size(); ++j)
        out[j + 1] += x_shifted.coeffs[j];
    return cube_polynomial(std::move(out));
}

}  // namespace detail

// C(p,q) = C(p-1,q) + C(p,q-1) + x*C(p-1,q-1), with C(p,0) = C(0,q) = 1;
// this is the decomposition recurrence restated in (p,q) coordinates.
// The DP table is local; no shared memo state.
inline cube_polynomial cube_polynomial_recurrence(const family_params& fp) {
    const std::size_t P = static_cast<std::size_t>(fp.p);
    const std::size_t Q = static_cast<std::size_t>(fp.q);
    std::vector<std::vector<cube_polynomial>> table(
        P + 1, std::vector<cube_polynomial>(Q + 1));
    for (std::size_t i = 0; i <= P; ++i)
        table[i][0] = cube_polynomial({bigint(1)});
    for (std::size_t j = 0; j <= Q; ++j)
        table[0][j] = cube_polynomial({bigint(1)});
    for (std::size_t i = 1; i <= P; ++i)
        for (std::size_t j = 1; j <= Q; ++j)
            table[i][j] = detail::poly_sum(table[i - 1][j], table[i][j - 1],
                                           table[i - 1][j - 1]);
    return table[P][Q];
}

struct largest_cube_info {
    long long dimension;
    bigint count;
    bool operator==(const largest_cube_info&) const = default;
};

// Largest induced hypercube: dimension min{p,q}, multiplicity
// max{C(p,q), C(q,p)}.
inline largest_cube_info largest_cube(long long p, long long q) {
    if (p < 0 || q < 0)
        throw out_of_range_error("largest_cube: p and q must be >= 0");
    return {std::min(p, q), std::max(binomial(p, q), binomial(q, p))};
}

// p(j, k, n): weak partitions of n into exactly k parts (zeros allowed),
// each part at most j.  Plain DP over (parts used, remaining sum, cap).
inline bigint count_weak_partitions(long long j, long long k, long long n) {
    if (j < 0 || k < 0 || n < 0) return 0;
    if (n == 0) return 1;  // all-zero partition, also covers k = 0
    if (k == 0) return 0;
    // f[c][r][m]: non-increasing length-c sequences summing r, entries <= m
    const std::size_t K = static_cast<std::size_t>(k);
    const std::size_t N = static_cast<std::size_t>(n);
    const std::size_t J = static_cast<std::size_t>(j);
    std::vector<std::vector<std::vector<bigint>>> f(
        K + 1, std::vector<std::vector<bigint>>(
                   N + 1, std::vector<bigint>(J + 1, 0)));
    for (std::size_t m = 0; m <= J; ++m) f[0][0][m] = 1;
    for (std::size_t c = 1; c <= K; ++c)
        for (std::size_t r = 0; r <= N; ++r)
            for (std::size_t m = 0; m <= J; ++m) {
                bigint total = 0;
                for (std::size_t t = 0; t <= std::min(m, r); ++t)
                    total += f[c - 1][r - t][t];
                f[c][r][m] = total;
            }
    return f[K][N][J];
}

}  // namespace padovan
