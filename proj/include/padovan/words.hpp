#pragma once

/**
 * Word families: Padovan words (vertices of Phi(n,k)) and {a,b}-words
 * (vertices of A(p,q)), plus the bijection between A(p,q) edges and
 * words carrying a single marker letter c.
 *
 * Padovan word: starts and ends with 0, no subword 00, no subword 111.
 */

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "padovan/errors.hpp"

namespace padovan {

inline bool is_padovan_word(std::string_view w) {
    if (w.empty() || w.front() != '0' || w.back() != '0') return false;
    long long zero_run = 0, one_run = 0;
    for (char c : w) {
        if (c == '0') {
            if (++zero_run > 1) return false;
            one_run = 0;
        } else if (c == '1') {
            if (++one_run > 2) return false;
            zero_run = 0;
        } else {
            return false;
        }
    }
    return true;
}

inline long long word_weight(std::string_view w) {
    return static_cast<long long>(std::count(w.begin(), w.end(), '1'));
}

namespace detail {

// Backtracking over the constraint automaton (trailing 0-run / 1-run),
// pruning on the achievable weight of the suffix.  Never touches the
// 2^n search space.
inline void grow_padovan(std::string& buf, long long n, long long ones_left,
                         std::vector<std::string>& out) {
    const long long m = n - static_cast<long long>(buf.size());
    if (m == 0) {
        if (ones_left == 0 && buf.back() == '0') out.push_back(buf);
        return;
    }
    // In m remaining chars: at most ceil(2m/3) ones (no 111), at least
    // floor(m/2) ones (no 00).  Loose at the ends; exact checks follow.
    if (ones_left < m / 2 || ones_left > (2 * m + 2) / 3) return;
    if (buf.back() != '0') {
        buf.push_back('0');
        grow_padovan(buf, n, ones_left, out);
        buf.pop_back();
    }
    const std::size_t len = buf.size();
    if (ones_left > 0 &&
        !(len >= 2 && buf[len - 1] == '1' && buf[len - 2] == '1')) {
        buf.push_back('1');
        grow_padovan(buf, n, ones_left - 1, out);
        buf.pop_back();
    }
}

}  // namespace detail

// All Padovan words of length n with k ones, lexicographically sorted.
// Empty for k outside the admissible weight window.
inline std::vector<std::string> enumerate_padovan_words(long long n,
                                                        long long k) {
    if (n < 1) throw out_of_range_error("enumerate_padovan_words: n >= 1");
    std::vector<std::string> out;
    if (k < 0 || k >= n) return out;  // a valid word has at least one 0
    std::string buf = "0";
    buf.reserve(static_cast<std::size_t>(n));
    detail::grow_padovan(buf, n, k, out);
    return out;  // growth order is already lexicographic ('0' < '1')
}

// Neighbors in Phi(n,k): words reachable by swapping one adjacent 01/10
// pair.  Every such swap sits in a 6-letter window 010110 <-> 011010, so
// scan for the windows and re-validate the swapped word.
inline std::vector<std::string> padovan_neighbors(std::string_view w) {
    if (!is_padovan_word(w))
        throw std::invalid_argument("padovan_neighbors: not a Padovan word");
    std::vector<std::string> out;
    for (std::size_t i = 0; i + 6 <= w.size(); ++i) {
        const std::string_view window = w.substr(i, 6);
        if (window != "010110" && window != "011010") continue;
        std::string candidate(w);
        std::swap(candidate[i + 2], candidate[i + 3]);
        if (is_padovan_word(candidate)) out.push_back(std::move(candidate));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// All words with p a's and q b's in lexicographic order (a < b).
inline std::vector<std::string> enumerate_ab_words(long long p, long long q) {
    std::vector<std::string> out;
    if (p < 0 || q < 0) return out;
    std::string w(static_cast<std::size_t>(p), 'a');
    w.append(static_cast<std::size_t>(q), 'b');
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Neighbors in A(p,q): one adjacent transposition of an ab or ba pair.
inline std::vector<std::string> ab_neighbors(std::string_view w) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1]) continue;
        std::string v(w);
        std::swap(v[i], v[i + 1]);
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Represent the edge u ~ v of A(p,q) as x c y, where u = x ab y and
// v = x ba y (in either order).
inline std::string edge_to_c_word(std::string_view u, std::string_view v) {
    if (u.size() != v.size())
        throw not_adjacent_error("edge_to_c_word: length mismatch");
    std::size_t first = u.size();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != v[i]) {
            first = i;
            break;
        }
    }
    const bool ok = first + 1 < u.size() && u[first] != u[first + 1] &&
                    u[first] == v[first + 1] && u[first + 1] == v[first] &&
                    u.substr(first + 2) == v.substr(first + 2);
    if (!ok)
        throw not_adjacent_error(
            "edge_to_c_word: words differ by more than one adjacent "
            "transposition");
    std::string out(u.substr(0, first));
    out += 'c';
    out += u.substr(first + 2);
    return out;
}

// Inverse of edge_to_c_word; first component carries ab at the marker.
inline std::pair<std::string, std::string> c_word_to_edge(std::string_view w) {
    const std::size_t pos = w.find('c');
    if (pos == std::string_view::npos || w.find('c', pos + 1) != std::string_view::npos)
        throw std::invalid_argument("c_word_to_edge: exactly one c required");
    std::string u(w.substr(0, pos));
    std::string v = u;
    u += "ab";
    v += "ba";
    u += w.substr(pos + 1);
    v += w.substr(pos + 1);
    return {std::move(u), std::move(v)};
}

}  // namespace padovan
