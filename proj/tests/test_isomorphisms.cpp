#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "padovan/graph.hpp"
#include "padovan/isomorphisms.hpp"

using namespace padovan;

TEST_CASE("alpha block decoding", "[isomorphisms]") {
    CHECK(alpha("01101101010") == "bbaa");
    CHECK(alpha("010") == "a");
    CHECK(alpha("0110") == "b");
    CHECK(alpha("0") == "");
    CHECK_THROWS_AS(alpha("010100"), parse_failure);  // stranded trailing 0
    CHECK_THROWS_AS(alpha("00110"), parse_failure);
    CHECK_THROWS_AS(alpha("011"), parse_failure);

    CHECK(alpha_inverse("bbaa") == "01101101010");
    CHECK(alpha_inverse("") == "0");
    CHECK_THROWS_AS(alpha_inverse("abc"), std::invalid_argument);

    for (int n = 1; n <= 14; ++n)
        for (const std::string& w : oracles::padovan_words_by_filter(n)) {
            const std::string decoded = alpha(w);
            REQUIRE(alpha_inverse(decoded) == w);
            // letter counts land on the predicted (p, q)
            const long long k = word_weight(w);
            REQUIRE(static_cast<long long>(std::count(decoded.begin(),
                                                      decoded.end(), 'a')) ==
                    2 * n - 3 * k - 2);
            REQUIRE(static_cast<long long>(std::count(decoded.begin(),
                                                      decoded.end(), 'b')) ==
                    2 * k - n + 1);
        }
}

TEST_CASE("beta parts from b positions", "[isomorphisms]") {
    CHECK(beta("bbaa") == weak_partition{2, {2, 2}});
    CHECK(beta("aabb") == weak_partition{2, {0, 0}});
    CHECK(beta("ab") == weak_partition{1, {0}});
    CHECK(beta("") == weak_partition{0, {}});
    CHECK_THROWS_AS(beta("abc"), std::invalid_argument);

    CHECK(beta_inverse(weak_partition{2, {2, 2}}) == "bbaa");
    CHECK(beta_inverse(weak_partition{1, {0}}) == "ab");

    for (int p = 0; p <= 6; ++p)
        for (int q = 0; q <= 6; ++q)
            for (const std::string& w : enumerate_ab_words(p, q)) {
                const weak_partition lambda = beta(w);
                REQUIRE(lambda.valid());
                REQUIRE(lambda.max_part == p);
                REQUIRE(lambda.part_count() == q);
                REQUIRE(beta_inverse(lambda) == w);
            }
    // and the other orientation of the round trip
    for (const weak_partition& lambda : enumerate_partitions(4, 3))
        REQUIRE(beta(beta_inverse(lambda)) == lambda);
}

TEST_CASE("alpha and beta preserve adjacency", "[isomorphisms]") {
    for (int n = 1; n <= 13; ++n) {
        const weight_bounds r = weight_range(n);
        for (long long k = r.kmin; k <= r.kmax; ++k)
            for (const std::string& u : enumerate_padovan_words(n, k))
                for (const std::string& v : padovan_neighbors(u)) {
                    const auto au = alpha(u), av = alpha(v);
                    const auto nbs = ab_neighbors(au);
                    REQUIRE(std::find(nbs.begin(), nbs.end(), av) !=
                            nbs.end());
                    REQUIRE(partition_distance(beta(au), beta(av)) == 1);
                }
    }
}

TEST_CASE("beta is a graph isomorphism on every small box",
          "[isomorphisms]") {
    for (long long p = 0; p <= 5; ++p)
        for (long long q = 0; q <= 5; ++q) {
            const labeled_graph a = build_ab_graph(p, q);
            const labeled_graph pi = build_partition_graph(p, q);
            REQUIRE(check_isomorphism(a, pi, [](const std::string& w) {
                return to_string(beta(w));
            }));
        }
}

TEST_CASE("fundamental decomposition classifier", "[isomorphisms]") {
    const fundamental_split a = fundamental_branch("010110110101010");
    CHECK_FALSE(a.starts_with_011);
    CHECK(a.tail == "0110110101010");
    REQUIRE(a.cross_partner.has_value());
    CHECK(*a.cross_partner == "011010110101010");

    const fundamental_split b = fundamental_branch("011010110101010");
    CHECK(b.starts_with_011);
    CHECK(b.tail == "010110101010");
    REQUIRE(b.cross_partner.has_value());
    CHECK(*b.cross_partner == "010110110101010");

    const fundamental_split c = fundamental_branch("0101010");
    CHECK_FALSE(c.starts_with_011);
    CHECK(c.tail == "01010");
    CHECK_FALSE(c.cross_partner.has_value());

    CHECK_THROWS_AS(fundamental_branch("01010"), too_short_error);
    CHECK_THROWS_AS(fundamental_branch("0101011"), std::invalid_argument);

    // stripped tails are valid words of the reduced families
    for (int n = 6; n <= 14; ++n)
        for (const std::string& w : oracles::padovan_words_by_filter(n)) {
            const fundamental_split split = fundamental_branch(w);
            REQUIRE(is_padovan_word(split.tail));
            REQUIRE(split.tail.size() ==
                    w.size() - (split.starts_with_011 ? 3 : 2));
            if (split.cross_partner) {
                REQUIRE(is_padovan_word(*split.cross_partner));
                REQUIRE(word_weight(*split.cross_partner) == word_weight(w));
            }
        }
}

TEST_CASE("branch sizes for the n = 18 family", "[isomorphisms]") {
    const auto words = enumerate_padovan_words(18, 10);
    REQUIRE(words.size() == 35);
    std::size_t with_01 = 0, with_011 = 0, crossing = 0;
    for (const std::string& w : words) {
        const fundamental_split split = fundamental_branch(w);
        ++(split.starts_with_011 ? with_011 : with_01);
        if (split.cross_partner && !split.starts_with_011) ++crossing;
    }
    CHECK(with_01 == 20);   // |V(Phi(16,9))| = C(6,3)
    CHECK(with_011 == 15);  // |V(Phi(15,8))| = C(6,4)
    CHECK(crossing == 10);  // |V(Phi(13,7))| = C(5,3)
    CHECK(vertex_count(nk_to_pq(16, 9)) == 20);
    CHECK(vertex_count(nk_to_pq(15, 8)) == 15);
    CHECK(vertex_count(nk_to_pq(13, 7)) == 10);
}
