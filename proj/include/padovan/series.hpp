#pragma once

/**
 * Exact truncated expansion of the cube-polynomial generating function
 *
 *     f(x, y, z) = y / (1 - y^2 z (1 + y z (1 + x y^2 z)))
 *
 * The coefficient of x^j y^n z^k is the number of induced j-cubes in
 * Phi(n,k).  Expansion is by the geometric series: with
 * g = y^2 z + y^3 z^2 + x y^5 z^3 we have f = y * sum_m g^m, and every
 * power of g raises the y-degree by at least two, so the sum is finite
 * under truncation.
 */

#include <vector>

#include "padovan/closed_forms.hpp"

namespace padovan {

// Dense table of exact coefficients, truncated to x-degree <= xmax,
// y-degree <= ymax, z-degree <= zmax (inclusive).
class trivariate_series {
public:
    trivariate_series(long long xmax, long long ymax, long long zmax)
        : xmax_(xmax), ymax_(ymax), zmax_(zmax),
          table_(static_cast<std::size_t>((xmax + 1) * (ymax + 1) * (zmax + 1)),
                 0) {
        if (xmax < 0 || ymax < 0 || zmax < 0)
            throw out_of_range_error("trivariate_series: negative bound");
    }

    long long xmax() const { return xmax_; }
    long long ymax() const { return ymax_; }
    long long zmax() const { return zmax_; }

    bool in_bounds(long long j, long long n, long long k) const {
        return 0 <= j && j <= xmax_ && 0 <= n && n <= ymax_ && 0 <= k &&
               k <= zmax_;
    }

    bigint coefficient(long long j, long long n, long long k) const {
        if (!in_bounds(j, n, k)) return 0;
        return table_[index(j, n, k)];
    }

    bigint& at(long long j, long long n, long long k) {
        if (!in_bounds(j, n, k))
            throw out_of_range_error("trivariate_series: index out of bounds");
        return table_[index(j, n, k)];
    }

    bool is_zero() const {
        for (const bigint& c : table_)
            if (c != 0) return false;
        return true;
    }

    // *this += src * x^dj y^dn z^dk, dropping terms past the truncation.
    void add_shifted(const trivariate_series& src, long long dj, long long dn,
                     long long dk) {
        for (long long j = 0; j + dj <= xmax_ && j <= src.xmax_; ++j)
            for (long long n = 0; n + dn <= ymax_ && n <= src.ymax_; ++n)
                for (long long k = 0; k + dk <= zmax_ && k <= src.zmax_; ++k) {
                    const bigint& c = src.table_[src.index(j, n, k)];
                    if (c != 0) table_[index(j + dj, n + dn, k + dk)] += c;
                }
    }

    // The x-polynomial sitting at y^n z^k; the cube polynomial of Phi(n,k)
    // when min{p,q} <= xmax.
    cube_polynomial slice(long long n, long long k) const {
        std::vector<bigint> coeffs;
        for (long long j = 0; j <= xmax_; ++j)
            coeffs.push_back(coefficient(j, n, k));
        return cube_polynomial(std::move(coeffs));
    }

private:
    std::size_t index(long long j, long long n, long long k) const {
        return static_cast<std::size_t>((j * (ymax_ + 1) + n) * (zmax_ + 1) +
                                        k);
    }

    long long xmax_, ymax_, zmax_;
    std::vector<bigint> table_;
};

inline trivariate_series cube_generating_series(long long xmax, long long ymax,
                                                long long zmax) {
    trivariate_series acc(xmax, ymax, zmax);
    trivariate_series term(xmax, ymax, zmax);
    term.at(0, 0, 0) = 1;
    while (!term.is_zero()) {
        acc.add_shifted(term, 0, 0, 0);
        trivariate_series next(xmax, ymax, zmax);
        next.add_shifted(term, 0, 2, 1);  // y^2 z
        next.add_shifted(term, 0, 3, 2);  // y^3 z^2
        next.add_shifted(term, 1, 5, 3);  // x y^5 z^3
        term = std::move(next);
    }
    trivariate_series result(xmax, ymax, zmax);
    result.add_shifted(acc, 0, 1, 0);  // leading factor y
    return result;
}

}  // namespace padovan
