#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "padovan/closed_forms.hpp"
#include "padovan/words.hpp"

using namespace padovan;

TEST_CASE("padovan word recognition", "[words]") {
    CHECK(is_padovan_word("010110"));
    CHECK(is_padovan_word("0"));
    CHECK(is_padovan_word("01010"));
    CHECK_FALSE(is_padovan_word("01100"));   // contains 00
    CHECK_FALSE(is_padovan_word("011110"));  // contains 111
    CHECK_FALSE(is_padovan_word("10101"));   // starts with 1
    CHECK_FALSE(is_padovan_word("0101"));    // ends with 1
    CHECK_FALSE(is_padovan_word(""));
    CHECK_FALSE(is_padovan_word("0x0"));
}

TEST_CASE("padovan word enumeration", "[words]") {
    CHECK(enumerate_padovan_words(6, 3) ==
          std::vector<std::string>{"010110", "011010"});
    CHECK(enumerate_padovan_words(3, 1) == std::vector<std::string>{"010"});
    CHECK(enumerate_padovan_words(2, 1).empty());
    CHECK(enumerate_padovan_words(1, 0) == std::vector<std::string>{"0"});
    CHECK_THROWS_AS(enumerate_padovan_words(0, 0), out_of_range_error);

    // against the 2^n filter oracle, every weight
    for (int n = 1; n <= 14; ++n) {
        for (int k = 0; k <= n; ++k)
            REQUIRE(enumerate_padovan_words(n, k) ==
                    oracles::padovan_words_by_filter(n, k));
        std::size_t total = 0;
        const weight_bounds r = weight_range(n);
        for (long long k = r.kmin; k <= r.kmax; ++k)
            total += enumerate_padovan_words(n, k).size();
        REQUIRE(bigint(static_cast<long long>(total)) == padovan_number(n + 2));
    }
}

TEST_CASE("padovan adjacency", "[words]") {
    CHECK(padovan_neighbors("010110") == std::vector<std::string>{"011010"});
    CHECK(padovan_neighbors("01010").empty());
    CHECK(padovan_neighbors("01101101010") ==
          std::vector<std::string>{"01101011010"});
    CHECK_THROWS_AS(padovan_neighbors("0110111"), std::invalid_argument);

    // window scan == try-all-transpositions oracle; weight is conserved;
    // the relation is symmetric
    for (int n = 1; n <= 13; ++n) {
        for (const std::string& w : oracles::padovan_words_by_filter(n)) {
            const auto nbs = padovan_neighbors(w);
            REQUIRE(nbs == oracles::padovan_neighbors_by_transposition(w));
            for (const std::string& v : nbs) {
                REQUIRE(word_weight(v) == word_weight(w));
                const auto back = padovan_neighbors(v);
                REQUIRE(std::find(back.begin(), back.end(), w) != back.end());
            }
        }
    }
}

TEST_CASE("ab word enumeration", "[words]") {
    CHECK(enumerate_ab_words(1, 1) == std::vector<std::string>{"ab", "ba"});
    CHECK(enumerate_ab_words(0, 3) == std::vector<std::string>{"bbb"});
    CHECK(enumerate_ab_words(2, 2).size() == 6);
    CHECK(enumerate_ab_words(0, 0) == std::vector<std::string>{""});
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5; ++q)
            REQUIRE(enumerate_ab_words(p, q) ==
                    oracles::ab_words_by_filter(p, q));
}

TEST_CASE("ab adjacency", "[words]") {
    CHECK(ab_neighbors("ab") == std::vector<std::string>{"ba"});
    CHECK(ab_neighbors("bbaa") == std::vector<std::string>{"baba"});
    CHECK(ab_neighbors("abba") == std::vector<std::string>{"abab", "baba"});
    CHECK(ab_neighbors("aaa").empty());
    for (const std::string& w : enumerate_ab_words(3, 3))
        for (const std::string& v : ab_neighbors(w)) {
            const auto back = ab_neighbors(v);
            REQUIRE(std::find(back.begin(), back.end(), w) != back.end());
        }
}

TEST_CASE("edges correspond to c-words", "[words]") {
    CHECK(edge_to_c_word("ab", "ba") == "c");
    CHECK(edge_to_c_word("abab", "abba") == "abc");
    CHECK(edge_to_c_word("abba", "abab") == "abc");  // orientation-free
    CHECK(c_word_to_edge("abc") == std::pair<std::string, std::string>{"abab",
                                                                       "abba"});
    CHECK_THROWS_AS(edge_to_c_word("abab", "baba"), not_adjacent_error);
    CHECK_THROWS_AS(edge_to_c_word("ab", "ab"), not_adjacent_error);
    CHECK_THROWS_AS(edge_to_c_word("ab", "abb"), not_adjacent_error);
    CHECK_THROWS_AS(c_word_to_edge("abcc"), std::invalid_argument);
    CHECK_THROWS_AS(c_word_to_edge("ab"), std::invalid_argument);

    // bijection: distinct c-words over all edges, count q*C(p+q-1, p-1)
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; q <= 6; ++q) {
            std::set<std::string> c_words;
            std::size_t edges = 0;
            for (const std::string& w : enumerate_ab_words(p, q))
                for (const std::string& v : ab_neighbors(w)) {
                    if (v < w) continue;
                    ++edges;
                    const std::string cw = edge_to_c_word(w, v);
                    c_words.insert(cw);
                    const auto [back_u, back_v] = c_word_to_edge(cw);
                    REQUIRE(std::minmax(back_u, back_v) ==
                            std::minmax(w, v));
                }
            REQUIRE(c_words.size() == edges);
            REQUIRE(bigint(static_cast<long long>(c_words.size())) ==
                    edge_count(p, q));
        }
    // 60 = 6!/(3! 2!) distinct c-words for (4,3)
    CHECK(edge_count(4, 3) == 60);
}
