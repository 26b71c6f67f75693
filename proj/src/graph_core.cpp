#include "locinv/graph_core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace locinv {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t stride_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

}  // namespace

Graph::Graph(std::size_t n) : n_(n), stride_(stride_for(n)), bits_(n * stride_for(n), 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_vertex(Vertex v) const {
    if (v >= n_) {
        throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                         std::to_string(n_));
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw InputError("loop at vertex " + std::to_string(u));
    }
    row(u)[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
    row(v)[u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    row(u)[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
    row(v)[u / kWordBits] &= ~(std::uint64_t{1} << (u % kWordBits));
}

std::size_t Graph::degree(Vertex v) const {
    check_vertex(v);
    std::size_t d = 0;
    for (std::size_t i = 0; i < stride_; ++i) {
        d += static_cast<std::size_t>(std::popcount(row(v)[i]));
    }
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    const std::uint64_t* r = row(v);
    for (std::size_t i = 0; i < stride_; ++i) {
        std::uint64_t word = r[i];
        while (word != 0) {
            const int bit = std::countr_zero(word);
            out.push_back(static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(bit)));
            word &= word - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (Vertex v = 0; v < n_; ++v) {
        total += degree(v);
    }
    return total / 2;
}

Graph Graph::induced(std::span<const Vertex> vs) const {
    Graph h(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        check_vertex(vs[i]);
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (vs[i] == vs[j]) {
                throw InputError("duplicate vertex in induced subgraph request");
            }
            if (adjacent(vs[i], vs[j])) {
                h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return h;
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(n_, false);
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) {
            continue;
        }
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex x : neighbors(comp[head])) {
                if (!seen[x]) {
                    seen[x] = true;
                    comp.push_back(x);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::connected() const { return components().size() <= 1; }

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) {
        g.add_edge(v - 1, v);
    }
    return g;
}

Graph cycle_graph(std::size_t n) {
    Graph g = path_graph(n);
    if (n >= 3) {
        g.add_edge(static_cast<Vertex>(n - 1), 0);
    }
    return g;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph star_graph(std::size_t n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) {
        g.add_edge(0, v);
    }
    return g;
}

Coloring Coloring::from_signs(std::span<const int> signs) {
    std::vector<Color> colors;
    colors.reserve(signs.size());
    for (int s : signs) {
        if (s != 1 && s != -1) {
            throw InputError("color must be -1 or +1, got " + std::to_string(s));
        }
        colors.push_back(s == 1 ? Color::plus : Color::minus);
    }
    return Coloring(std::move(colors));
}

Coloring Coloring::negated() const {
    Coloring out = *this;
    for (auto& c : out.colors_) {
        c = -c;
    }
    return out;
}

Coloring random_coloring(std::size_t n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    std::vector<Color> colors(n);
    for (auto& c : colors) {
        c = coin(rng) ? Color::plus : Color::minus;
    }
    return Coloring(std::move(colors));
}

BicoloredGraph::BicoloredGraph(Graph g, Coloring c) : graph(std::move(g)), coloring(std::move(c)) {
    if (coloring.size() != graph.order()) {
        throw InputError("coloring has " + std::to_string(coloring.size()) +
                         " entries for a graph of order " + std::to_string(graph.order()));
    }
}

Word& Word::append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
}

Word Word::reversed() const { return Word(std::vector<Vertex>(letters_.rbegin(), letters_.rend())); }

Word Word::relabelled(std::span<const Vertex> ids) const {
    std::vector<Vertex> out;
    out.reserve(letters_.size());
    for (Vertex a : letters_) {
        if (a >= ids.size()) {
            throw InputError("letter " + std::to_string(a) + " has no relabelling");
        }
        out.push_back(ids[a]);
    }
    return Word(std::move(out));
}

Word operator+(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
}

Word join_cancelling(Word lhs, const Word& rhs) {
    std::size_t i = 0;
    while (!lhs.empty() && i < rhs.size() && lhs.back() == rhs[i]) {
        lhs.pop_back();
        ++i;
    }
    for (; i < rhs.size(); ++i) {
        lhs.push_back(rhs[i]);
    }
    return lhs;
}

VertexSet::VertexSet(std::size_t n, std::initializer_list<Vertex> vs) : member_(n, false) {
    for (Vertex v : vs) {
        insert(v);
    }
}

VertexSet::VertexSet(std::size_t n, std::span<const Vertex> vs) : member_(n, false) {
    for (Vertex v : vs) {
        insert(v);
    }
}

VertexSet VertexSet::all(std::size_t n) {
    VertexSet s(n);
    s.member_.assign(n, true);
    return s;
}

std::size_t VertexSet::size() const {
    return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

void VertexSet::insert(Vertex v) {
    if (v >= member_.size()) {
        throw InputError("vertex " + std::to_string(v) + " outside vertex set universe");
    }
    member_[v] = true;
}

void VertexSet::erase(Vertex v) {
    if (v < member_.size()) {
        member_[v] = false;
    }
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < member_.size(); ++v) {
        if (member_[v]) {
            out.push_back(static_cast<Vertex>(v));
        }
    }
    return out;
}

VertexSet VertexSet::symmetric_difference(const VertexSet& other) const {
    if (universe() != other.universe()) {
        throw InputError("vertex sets over different universes");
    }
    VertexSet out(universe());
    for (std::size_t v = 0; v < member_.size(); ++v) {
        out.member_[v] = member_[v] != other.member_[v];
    }
    return out;
}

Graph local_complement(const Graph& g, Vertex a) {
    g.check_vertex(a);
    Graph out = g;
    const std::uint64_t* nbhd = g.row(a);
    for (Vertex x : g.neighbors(a)) {
        std::uint64_t* r = out.row(x);
        for (std::size_t i = 0; i < g.stride_; ++i) {
            r[i] ^= nbhd[i];
        }
        // x is in its own neighborhood copy; keep the graph loop-free.
        r[x / kWordBits] &= ~(std::uint64_t{1} << (x % kWordBits));
    }
    return out;
}

Graph apply_word_graph(const Graph& g, const Word& w) {
    Graph cur = g;
    for (Vertex a : w) {
        cur = local_complement(cur, a);
    }
    return cur;
}

BicoloredGraph local_inversion(const BicoloredGraph& b, Vertex a) {
    b.graph.check_vertex(a);
    BicoloredGraph out;
    out.coloring = b.coloring;
    for (Vertex x : b.graph.neighbors(a)) {
        out.coloring.negate(x);
    }
    out.graph = local_complement(b.graph, a);
    return out;
}

BicoloredGraph apply_word(const BicoloredGraph& b, const Word& w) {
    BicoloredGraph cur = b;
    for (Vertex a : w) {
        cur = local_inversion(cur, a);
    }
    return cur;
}

BicoloredGraph flip(const BicoloredGraph& b, const VertexSet& s) {
    if (s.universe() != b.order()) {
        throw InputError("vertex set universe does not match graph order");
    }
    BicoloredGraph out = b;
    for (Vertex v : s.members()) {
        out.coloring.negate(v);
    }
    return out;
}

Word reduce_word(const Word& w) {
    std::vector<Vertex> stack;
    stack.reserve(w.size());
    for (Vertex a : w) {
        if (!stack.empty() && stack.back() == a) {
            stack.pop_back();
        } else {
            stack.push_back(a);
        }
    }
    return Word(std::move(stack));
}

std::string to_string(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
            os << ',';
        }
        os << w[i];
    }
    return os.str();
}

}  // namespace locinv
