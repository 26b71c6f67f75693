#pragma once

// Bicolored graphs and the local inversion calculus.
//
// A graph is a simple undirected graph on the dense vertex ids 0..n-1 with
// bitset adjacency rows. A local complementation at a toggles every
// adjacency between two distinct neighbors of a; a local inversion does the
// same and additionally negates the colors of those neighbors. Words are
// applied left to right.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locinv/errors.hpp"

namespace locinv {

using Vertex = std::uint32_t;

// Undirected edge; normalized edges have first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    // Duplicate and reversed pairs collapse; loops and out-of-range ids throw InputError.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges);

    std::size_t order() const noexcept { return n_; }

    bool adjacent(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    bool is_isolated(Vertex v) const { return degree(v) == 0; }

    // Sorted, normalized edge list.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

    // G[S] relabelled so that vs[i] becomes vertex i.
    Graph induced(std::span<const Vertex> vs) const;

    // Connected components, each sorted, ordered by smallest member.
    std::vector<std::vector<Vertex>> components() const;
    bool connected() const;

    bool valid(Vertex v) const noexcept { return v < n_; }
    void check_vertex(Vertex v) const;

    bool operator==(const Graph& other) const = default;

    friend Graph local_complement(const Graph& g, Vertex a);

private:
    std::uint64_t* row(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * stride_; }
    const std::uint64_t* row(Vertex v) const { return bits_.data() + static_cast<std::size_t>(v) * stride_; }

    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// Center 0, leaves 1..n-1.
Graph star_graph(std::size_t n);

enum class Color : std::int8_t { minus = -1, plus = 1 };

inline Color operator-(Color c) { return c == Color::plus ? Color::minus : Color::plus; }

class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::size_t n, Color c = Color::plus) : colors_(n, c) {}
    explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

    // Entries must be -1 or +1.
    static Coloring from_signs(std::span<const int> signs);

    std::size_t size() const noexcept { return colors_.size(); }
    Color operator[](Vertex v) const { return colors_.at(v); }
    void set(Vertex v, Color c) { colors_.at(v) = c; }
    void negate(Vertex v) { colors_.at(v) = -colors_.at(v); }
    Coloring negated() const;

    const std::vector<Color>& values() const noexcept { return colors_; }

    bool operator==(const Coloring& other) const = default;

private:
    std::vector<Color> colors_;
};

Coloring random_coloring(std::size_t n, std::mt19937_64& rng);

struct BicoloredGraph {
    Graph graph;
    Coloring coloring;

    BicoloredGraph() = default;
    // Throws InputError when the coloring length differs from the order.
    BicoloredGraph(Graph g, Coloring c);

    std::size_t order() const noexcept { return graph.order(); }

    bool operator==(const BicoloredGraph& other) const = default;
};

class Word {
public:
    Word() = default;
    Word(std::initializer_list<Vertex> letters) : letters_(letters) {}
    explicit Word(std::vector<Vertex> letters) : letters_(std::move(letters)) {}

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Vertex operator[](std::size_t i) const { return letters_[i]; }
    Vertex front() const { return letters_.front(); }
    Vertex back() const { return letters_.back(); }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    void push_back(Vertex v) { letters_.push_back(v); }
    void pop_back() { letters_.pop_back(); }
    Word& append(const Word& other);

    Word reversed() const;
    // Maps every letter through ids (letter i becomes ids[i]).
    Word relabelled(std::span<const Vertex> ids) const;

    const std::vector<Vertex>& letters() const noexcept { return letters_; }

    bool operator==(const Word& other) const = default;

private:
    std::vector<Vertex> letters_;
};

Word operator+(Word lhs, const Word& rhs);

// Concatenation that cancels equal letters meeting at the junction (aa ~ ε).
Word join_cancelling(Word lhs, const Word& rhs);

class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : member_(n, false) {}
    VertexSet(std::size_t n, std::initializer_list<Vertex> vs);
    VertexSet(std::size_t n, std::span<const Vertex> vs);

    static VertexSet all(std::size_t n);

    std::size_t universe() const noexcept { return member_.size(); }
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    bool contains(Vertex v) const { return v < member_.size() && member_[v]; }
    void insert(Vertex v);
    void erase(Vertex v);
    std::vector<Vertex> members() const;

    VertexSet symmetric_difference(const VertexSet& other) const;

    bool operator==(const VertexSet& other) const = default;

private:
    std::vector<bool> member_;
};

Graph local_complement(const Graph& g, Vertex a);
Graph apply_word_graph(const Graph& g, const Word& w);
BicoloredGraph local_inversion(const BicoloredGraph& b, Vertex a);
BicoloredGraph apply_word(const BicoloredGraph& b, const Word& w);
// B^S: same graph, colors negated exactly on s.
BicoloredGraph flip(const BicoloredGraph& b, const VertexSet& s);
// Free reduction modulo aa ~ ε.
Word reduce_word(const Word& w);

std::string to_string(const Word& w);

}  // namespace locinv
