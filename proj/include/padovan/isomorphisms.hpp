#pragma once

/**
 * The explicit bijections tying the three families together:
 *
 *   alpha : Phi(n,k) -> A(p,q)   block-decode 011 -> b, 01 -> a, drop the
 *                                trailing 0
 *   beta  : A(p,q) -> Pi(p,q)    b at position i_m becomes part (p+m)-i_m
 *
 * plus the classifier for the fundamental decomposition
 * Phi(n,k) = 01*Phi(n-2,k-1) + 011*Phi(n-3,k-2).
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padovan/partitions.hpp"
#include "padovan/words.hpp"

namespace padovan {

// Greedy left-to-right parse.  011 must be tried before 01: parsing 01
// first would strand the trailing 10 of every 0110 block.
inline std::string alpha(std::string_view w) {
    std::string out;
    std::size_t i = 0;
    while (i + 1 < w.size()) {
        if (w.compare(i, 3, "011") == 0) {
            out += 'b';
            i += 3;
        } else if (w.compare(i, 2, "01") == 0) {
            out += 'a';
            i += 2;
        } else {
            throw parse_failure("alpha: word does not decompose into 01/011 blocks");
        }
    }
    if (i + 1 != w.size() || w[i] != '0')
        throw parse_failure("alpha: word does not end in a single 0");
    return out;
}

inline std::string alpha_inverse(std::string_view w) {
    std::string out;
    for (char c : w) {
        if (c == 'a')
            out += "01";
        else if (c == 'b')
            out += "011";
        else
            throw std::invalid_argument("alpha_inverse: alphabet is {a, b}");
    }
    out += '0';
    return out;
}

// With b's at positions i_1 <= ... <= i_q (1-based) in a word with p a's,
// beta gives the weak partition ((p+1)-i_1, ..., (p+q)-i_q).
inline weak_partition beta(std::string_view w) {
    long long p = 0, q = 0;
    for (char c : w) {
        if (c == 'a')
            ++p;
        else if (c == 'b')
            ++q;
        else
            throw std::invalid_argument("beta: alphabet is {a, b}");
    }
    std::vector<long long> parts;
    long long m = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 'b') {
            ++m;
            parts.push_back(p + m - static_cast<long long>(i + 1));
        }
    }
    return {p, std::move(parts)};
}

// Inverse placement: the m-th b goes to position (p+m) - lambda_m.
inline std::string beta_inverse(const weak_partition& lambda) {
    detail::check_valid(lambda, "beta_inverse");
    const long long p = lambda.max_part;
    std::string w(static_cast<std::size_t>(p + lambda.part_count()), 'a');
    for (long long m = 1; m <= lambda.part_count(); ++m) {
        const long long pos = p + m - lambda.parts[static_cast<std::size_t>(m - 1)];
        w[static_cast<std::size_t>(pos - 1)] = 'b';
    }
    return w;
}

// Which half of the fundamental decomposition a word lies in.  Words with
// prefix 010 strip to Phi(n-2,k-1), words with prefix 011 strip to
// Phi(n-3,k-2); the cross edges of the decomposition pair 010110x with
// 011010x.
struct fundamental_split {
    bool starts_with_011;                     // false: prefix 010
    std::string tail;                         // word minus the 01 / 011 prefix
    std::optional<std::string> cross_partner; // full-length partner, if any
};

inline fundamental_split fundamental_branch(std::string_view w) {
    if (!is_padovan_word(w))
        throw std::invalid_argument("fundamental_branch: not a Padovan word");
    if (w.size() < 6)
        throw too_short_error("fundamental_branch: needs length >= 6");
    fundamental_split split;
    split.starts_with_011 = w.compare(0, 3, "011") == 0;
    split.tail = std::string(w.substr(split.starts_with_011 ? 3 : 2));
    if (w.compare(0, 6, "010110") == 0)
        split.cross_partner = "011010" + std::string(w.substr(6));
    else if (w.compare(0, 6, "011010") == 0)
        split.cross_partner = "010110" + std::string(w.substr(6));
    return split;
}

}  // namespace padovan
