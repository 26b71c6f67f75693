#pragma once

// Constructive synthesis of color-changing words.
//
// Every produced word w comes with the set S it flips: replaying w on any
// coloring of the input graph negates exactly the colors in S and returns the
// graph unchanged. Lengths are certified against the known upper bounds.

#include <cstddef>
#include <random>
#include <string>

#include "locinv/graph_core.hpp"
#include "locinv/partitioner.hpp"

namespace locinv {

enum class Construction {
    empty,
    base_k2,
    base_k3,
    base_p3,
    single_triangle,
    single_p3_end,
    single_star_center,
    single_k2,
    odd_tree,
    even_subgraph,
    odd_subgraph_triangle,
    odd_subgraph_p3,
    color_reversal,
    transform_fix_v1,
    transform_flip_v0_then_all,
    transform_components,
    star,
    complete,
};

std::string to_string(Construction c);

struct CertifiedWord {
    Word word;
    VertexSet target_flip;
    std::size_t bound = 0;
    Construction construction = Construction::empty;

    std::size_t length() const { return word.size(); }
    Word reduced() const { return reduce_word(word); }
    std::size_t reduced_length() const { return reduced().size(); }
    bool within_bound() const { return word.size() <= bound; }
};

enum class Anchor { end, start };

// ababab: flips {a, b} when ab is an edge.
Word gadget_edge(Vertex a, Vertex b);
// abacbac: flips {a} when abc is a triangle.
Word gadget_triangle(Vertex a, Vertex b, Vertex c);
// cabababc: flips {a, b} when a-c-b is an induced P3.
Word gadget_p3_ends(Vertex a, Vertex b, Vertex c);
// cabacba: flips {a} when a-c-b is an induced P3.
Word gadget_p3_end(Vertex a, Vertex b, Vertex c);

// Whole-graph reversal for K2, K3 and P3.
CertifiedWord base_case_word(const Graph& g);

// Flips only a. Requires g connected with n >= 3. Uses the triangle gadget
// when a lies on a triangle, the P3-end gadget when a is the end of an
// induced P3, and otherwise (a is the center of a star) the single letter of
// its smallest leaf.
CertifiedWord flip_single(const Graph& g, Vertex a);

// Reverses the vertices of an induced odd tree (>= 4 vertices) with a word of
// length exactly 4|V(t)|-4 that ends (or starts) with r.
CertifiedWord reverse_odd_tree(const Graph& g, const RootedTree& t, Vertex r, Anchor anchor);

// Reverses a connected induced subgraph of even order >= 4 in at most
// 4|s|-4 letters, ending (or starting) with v.
CertifiedWord reverse_even_subgraph(const Graph& g, const VertexSet& s, Vertex v, Anchor anchor);

// Reverses a connected induced subgraph of odd order >= 5 in at most 4|s|-3 letters.
CertifiedWord reverse_odd_subgraph(const Graph& g, const VertexSet& s);

// Reverses every color of g. Throws UnsatisfiableError on isolated vertices.
CertifiedWord color_reversal_word(const Graph& g);

// Word taking (g, from) to (g, to). Connected graphs are certified against
// floor((11n-3)/2); disconnected graphs are handled per component with the
// per-component bounds summed. Throws UnsatisfiableError when an isolated
// vertex must change color.
CertifiedWord transform_word(const Graph& g, const Coloring& from, const Coloring& to);

// Reversal of the star with center 0 and leaves 1..n-1, length 3n.
CertifiedWord star_word(std::size_t n);
// Reversal of K_n, length 3n.
CertifiedWord complete_word(std::size_t n);

// Guaranteed word lengths.
std::size_t reversal_bound(std::size_t n);    // 4n-4 (n even), 4n-3 (n odd)
std::size_t transform_bound(std::size_t n);   // floor((11n-3)/2)

// Replays cw on g under all-plus plus `random_colorings` random colorings and
// checks that each one ends at flip(B, target_flip). Uses only graph_core.
bool verify_certified(const Graph& g, const CertifiedWord& cw, std::mt19937_64& rng,
                      std::size_t random_colorings = 16);

}  // namespace locinv
