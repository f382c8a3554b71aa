#pragma once

#include <stdexcept>
#include <string>

namespace padovan {

// Parameter outside the admissible window (e.g. weight k outside
// [floor(n/2), floor((2n-2)/3)], or negative p/q).
struct out_of_range_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The two words are not joined by a single adjacent ab/ba transposition.
struct not_adjacent_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Partitions from different (p, q) boxes were combined.
struct context_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Conjugation requested on a non-square box (p != q).
struct not_square_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A word did not decompose into the expected 01/011 blocks.
struct parse_failure : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Word too short for the fundamental decomposition (needs n >= 6).
struct too_short_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A BFS failed to reach every vertex of a graph assumed connected.
struct disconnected_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph exceeds the configured bound for a brute-force operation.
struct size_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Metric/median/automorphism operation applied to the empty graph.
struct empty_graph_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace padovan
