#include <catch2/catch_amalgamated.hpp>

#include "padovan/series.hpp"

using namespace padovan;

TEST_CASE("lowest slabs of the generating function", "[series]") {
    const trivariate_series f = cube_generating_series(3, 8, 5);

    // y-degree 1: the single term y
    CHECK(f.coefficient(0, 1, 0) == 1);
    for (long long j = 0; j <= 3; ++j)
        for (long long k = 0; k <= 5; ++k)
            if (j != 0 || k != 0) CHECK(f.coefficient(j, 1, k) == 0);

    // y-degree 2: everything vanishes (the n = 2 family is empty)
    for (long long j = 0; j <= 3; ++j)
        for (long long k = 0; k <= 5; ++k) CHECK(f.coefficient(j, 2, k) == 0);

    // y^3 z and y^4 z^2: the single-vertex families at n = 3, 4
    CHECK(f.coefficient(0, 3, 1) == 1);
    CHECK(f.coefficient(0, 4, 2) == 1);
    // K_2 at n = 6, k = 3: cube polynomial 2 + x
    CHECK(f.coefficient(0, 6, 3) == 2);
    CHECK(f.coefficient(1, 6, 3) == 1);
}

TEST_CASE("series slice matches the closed form", "[series]") {
    const long long max_n = 20;
    const trivariate_series f = cube_generating_series(7, max_n, 13);
    for (long long n = 1; n <= max_n; ++n) {
        const weight_bounds r = weight_range(n);
        for (long long k = 0; k <= 13; ++k) {
            if (k >= r.kmin && k <= r.kmax) {
                REQUIRE(f.slice(n, k) ==
                        cube_polynomial_closed(family_params::from_nk(n, k)));
            } else {
                REQUIRE(f.slice(n, k) == cube_polynomial{});
            }
        }
    }
    CHECK(f.slice(11, 6) == cube_polynomial({6, 6, 1}));
}

TEST_CASE("series bookkeeping", "[series]") {
    trivariate_series s(2, 3, 4);
    CHECK(s.is_zero());
    s.at(1, 2, 3) = 42;
    CHECK_FALSE(s.is_zero());
    CHECK(s.coefficient(1, 2, 3) == 42);
    CHECK(s.coefficient(0, 0, 0) == 0);
    CHECK(s.coefficient(5, 0, 0) == 0);  // out of bounds reads as zero
    CHECK_THROWS_AS(s.at(3, 0, 0), out_of_range_error);
    CHECK_THROWS_AS(trivariate_series(-1, 2, 2), out_of_range_error);

    trivariate_series t(2, 3, 4);
    t.add_shifted(s, 0, 2, 0);
    CHECK(t.is_zero());  // the shifted term fell off the truncation
    t.add_shifted(s, 1, 1, 1);
    CHECK(t.coefficient(2, 3, 4) == 42);
}
