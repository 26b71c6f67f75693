#pragma once

// Exhaustive breadth-first search over bicolored graphs on a fixed vertex
// set, used as ground truth for small graphs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locinv/graph_core.hpp"

namespace locinv {

// Packed (graph, coloring): adjacency bits of the upper triangle in graph6
// order (x01, x02, x12, x03, ...) followed by one bit per vertex, set for
// color minus. Valid for n <= 10.
using StateKey = std::uint64_t;

inline constexpr std::size_t kMaxPackedOrder = 10;

StateKey encode_state(const BicoloredGraph& b);
BicoloredGraph decode_state(std::size_t n, StateKey key);

struct OracleOptions {
    std::size_t max_order = 7;
    std::size_t max_states = 50'000'000;
};

// Shortest word taking b to target, nullopt when target is unreachable.
// Throws ResourceError when the order or the visited-state count exceeds the caps.
std::optional<Word> min_flip_word(const BicoloredGraph& b, const BicoloredGraph& target,
                                  const OracleOptions& opts = {});

struct CrReport {
    std::string graph_id;
    std::string graph6;
    std::size_t n = 0;
    std::optional<std::size_t> exact_cr;  // nullopt: unreachable
    Word witness;
    bool witness_replays = false;
    std::optional<std::size_t> synthesized_length;  // nullopt when g has isolated vertices
    std::optional<std::size_t> bound;

    // exact_cr <= synthesized_length <= bound, witness replays exactly.
    bool sandwich_holds() const;
    bool within_3n() const { return !exact_cr || *exact_cr <= 3 * n; }
};

// Color reversal number via BFS from all-plus to all-minus, together with
// the synthesizer's word length for comparison.
CrReport exact_cr(const Graph& g, const OracleOptions& opts = {}, std::string graph_id = {});

// All connected graphs on n vertices up to isomorphism, each given by the
// labelling whose graph6 bit string is smallest; sorted by that bit string.
// Brute force over permutations, so limited to n <= 6.
std::vector<Graph> connected_graphs(std::size_t n);

struct SurveySummary {
    std::size_t graphs = 0;
    std::size_t max_cr = 0;
    double max_cr_over_3n = 0.0;
    std::vector<std::string> violations_3n;
    std::vector<std::string> sandwich_violations;
};

// One report per graph, in input order; jobs > 1 runs graphs concurrently.
std::vector<CrReport> survey(std::span<const Graph> graphs, std::span<const std::string> ids,
                             const OracleOptions& opts = {}, std::size_t jobs = 1);
// Every connected graph with 2 <= n <= n_max.
std::vector<CrReport> survey(std::size_t n_max, const OracleOptions& opts = {}, std::size_t jobs = 1);

SurveySummary summarize(std::span<const CrReport> reports);

}  // namespace locinv
