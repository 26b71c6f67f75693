#include "locinv/synthesizer.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <stdexcept>

namespace locinv {

std::string to_string(Construction c) {
    switch (c) {
        case Construction::empty: return "empty";
        case Construction::base_k2: return "base-k2";
        case Construction::base_k3: return "base-k3";
        case Construction::base_p3: return "base-p3";
        case Construction::single_triangle: return "single-triangle";
        case Construction::single_p3_end: return "single-p3-end";
        case Construction::single_star_center: return "single-star-center";
        case Construction::single_k2: return "single-k2";
        case Construction::odd_tree: return "odd-tree";
        case Construction::even_subgraph: return "even-subgraph";
        case Construction::odd_subgraph_triangle: return "odd-subgraph-triangle";
        case Construction::odd_subgraph_p3: return "odd-subgraph-p3";
        case Construction::color_reversal: return "color-reversal";
        case Construction::transform_fix_v1: return "fix-V1";
        case Construction::transform_flip_v0_then_all: return "flip-V0-then-all";
        case Construction::transform_components: return "per-component";
        case Construction::star: return "star";
        case Construction::complete: return "complete";
    }
    return "unknown";
}

std::size_t reversal_bound(std::size_t n) {
    if (n < 2) {
        return 0;
    }
    return n % 2 == 0 ? 4 * n - 4 : 4 * n - 3;
}

std::size_t transform_bound(std::size_t n) {
    if (n < 1) {
        return 0;
    }
    return (11 * n - 3) / 2;
}

Word gadget_edge(Vertex a, Vertex b) { return Word{a, b, a, b, a, b}; }

Word gadget_triangle(Vertex a, Vertex b, Vertex c) { return Word{a, b, a, c, b, a, c}; }

Word gadget_p3_ends(Vertex a, Vertex b, Vertex c) { return Word{c, a, b, a, b, a, b, c}; }

Word gadget_p3_end(Vertex a, Vertex b, Vertex c) { return Word{c, a, b, a, c, b, a}; }

namespace {

VertexSet set_of(std::size_t n, std::span<const Vertex> vs) { return VertexSet(n, vs); }

// Checks that s is non-empty, lives in g's universe and induces a connected subgraph.
std::vector<Vertex> connected_members(const Graph& g, const VertexSet& s, const char* who) {
    if (s.universe() != g.order()) {
        throw InputError(std::string(who) + ": vertex set universe does not match graph order");
    }
    auto members = s.members();
    if (members.empty() || !g.induced(members).connected()) {
        throw PreconditionError(std::string(who) + ": subgraph must be non-empty and connected");
    }
    return members;
}

}  // namespace

CertifiedWord base_case_word(const Graph& g) {
    const std::size_t n = g.order();
    CertifiedWord cw;
    cw.target_flip = VertexSet::all(n);
    if (n == 2 && g.adjacent(0, 1)) {
        cw.word = Word{0, 1};
        cw.bound = 2;
        cw.construction = Construction::base_k2;
        return cw;
    }
    if (n == 3 && g.edge_count() == 3) {
        // abababcac
        cw.word = Word{0, 1, 0, 1, 0, 1, 2, 0, 2};
        cw.bound = 9;
        cw.construction = Construction::base_k3;
        return cw;
    }
    if (n == 3 && g.edge_count() == 2) {
        Vertex mid = 0;
        while (g.degree(mid) != 2) {
            ++mid;
        }
        std::vector<Vertex> ends;
        for (Vertex v = 0; v < 3; ++v) {
            if (v != mid) {
                ends.push_back(v);
            }
        }
        const Vertex a = ends[0];
        const Vertex b = mid;
        const Vertex c = ends[1];
        // ababacacb
        cw.word = Word{a, b, a, b, a, c, a, c, b};
        cw.bound = 9;
        cw.construction = Construction::base_p3;
        return cw;
    }
    throw PreconditionError("base case requires K2, K3 or P3");
}

CertifiedWord flip_single(const Graph& g, Vertex a) {
    g.check_vertex(a);
    const std::size_t n = g.order();
    if (n < 3 || !g.connected()) {
        throw PreconditionError("single-vertex flip requires a connected graph on at least 3 vertices");
    }
    CertifiedWord cw;
    cw.target_flip = VertexSet(n, {a});
    cw.bound = 7;

    const auto nbrs = g.neighbors(a);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            if (g.adjacent(nbrs[i], nbrs[j])) {
                cw.word = gadget_triangle(a, nbrs[i], nbrs[j]);
                cw.construction = Construction::single_triangle;
                return cw;
            }
        }
    }
    for (Vertex b = 0; b < n; ++b) {
        if (b == a || g.adjacent(a, b)) {
            continue;
        }
        for (Vertex c : nbrs) {
            if (g.adjacent(b, c)) {
                cw.word = gadget_p3_end(a, b, c);
                cw.construction = Construction::single_p3_end;
                return cw;
            }
        }
    }
    // a is the center of a star. Inverting at a leaf leaves the graph alone
    // and negates only its unique neighbor a.
    cw.word = Word{nbrs.at(0)};
    cw.construction = Construction::single_star_center;
    return cw;
}

CertifiedWord reverse_odd_tree(const Graph& g, const RootedTree& t, Vertex r, Anchor anchor) {
    for (Vertex v : t.vertices) {
        g.check_vertex(v);
    }
    RootedTree rooted = t;
    rooted.root = r;
    if (!is_odd_tree(rooted)) {
        throw PreconditionError("odd-tree reversal requires an odd tree containing r");
    }
    const std::size_t size = rooted.vertices.size();
    if (size < 4) {
        throw PreconditionError("odd-tree reversal requires at least 4 vertices");
    }
    {
        std::vector<Edge> tree_edges;
        for (const auto& [u, v] : rooted.edges) {
            tree_edges.push_back(make_edge(u, v));
        }
        std::sort(tree_edges.begin(), tree_edges.end());
        auto sorted = rooted.vertices;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Edge> induced_edges;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            for (std::size_t j = i + 1; j < sorted.size(); ++j) {
                if (g.adjacent(sorted[i], sorted[j])) {
                    induced_edges.emplace_back(sorted[i], sorted[j]);
                }
            }
        }
        if (induced_edges != tree_edges) {
            throw PreconditionError("odd-tree reversal requires an induced tree");
        }
    }

    const EdgePartition part = p3_partition(rooted);
    const Vertex v = part.k2.second;
    const bool root_is_leaf = std::none_of(part.p3s.begin(), part.p3s.end(),
                                           [&](const PathP3& p) { return p.center == r; });
    // The P3 merged with the K2 gadget is centered at r, or at v when r is a leaf.
    const Vertex hub = root_is_leaf ? v : r;
    const auto merged = std::find_if(part.p3s.begin(), part.p3s.end(),
                                     [&](const PathP3& p) { return p.center == hub; });
    if (merged == part.p3s.end()) {
        throw std::logic_error("odd-tree reversal: no P3 at the K2 endpoint");
    }

    Word w;
    for (auto it = part.p3s.begin(); it != part.p3s.end(); ++it) {
        if (it != merged) {
            w.append(gadget_p3_ends(it->end_a, it->end_b, it->center));
        }
    }
    const Vertex x = merged->end_a;
    const Vertex y = merged->end_b;
    if (!root_is_leaf) {
        // (vrvrvr)(rxyxyxyr) with rr cancelled
        w.append(Word{v, r, v, r, v, x, y, x, y, x, y, r});
    } else {
        // (vxyxyxyv)(vrvrvr) with vv cancelled
        w.append(Word{v, x, y, x, y, x, y, r, v, r, v, r});
    }

    CertifiedWord cw;
    cw.word = anchor == Anchor::end ? std::move(w) : w.reversed();
    cw.target_flip = set_of(g.order(), rooted.vertices);
    cw.bound = 4 * size - 4;
    cw.construction = Construction::odd_tree;
    if (cw.word.size() != cw.bound) {
        throw std::logic_error("odd-tree reversal produced a word of unexpected length");
    }
    return cw;
}

CertifiedWord reverse_even_subgraph(const Graph& g, const VertexSet& s, Vertex v, Anchor anchor) {
    const auto members = connected_members(g, s, "even-subgraph reversal");
    if (members.size() < 4 || members.size() % 2 != 0) {
        throw PreconditionError("even-subgraph reversal requires an even number >= 4 of vertices");
    }
    if (!s.contains(v)) {
        throw PreconditionError("even-subgraph reversal anchor must lie in the subgraph");
    }

    const Graph h = g.induced(members);
    const PerfectForest forest = perfect_forest(h);

    std::vector<RootedTree> trees;
    std::size_t anchor_tree = 0;
    for (const auto& ft : forest.trees) {
        RootedTree rt;
        for (Vertex x : ft.vertices) {
            rt.vertices.push_back(members[x]);
        }
        for (const auto& [a, b] : ft.edges) {
            rt.edges.emplace_back(members[a], members[b]);
        }
        rt.root = rt.vertices.front();
        if (std::find(rt.vertices.begin(), rt.vertices.end(), v) != rt.vertices.end()) {
            anchor_tree = trees.size();
            rt.root = v;
        }
        trees.push_back(std::move(rt));
    }
    // The anchored tree goes last for an end anchor and first for a start anchor.
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (i != anchor_tree) {
            order.push_back(i);
        }
    }
    if (anchor == Anchor::end) {
        order.push_back(anchor_tree);
    } else {
        order.insert(order.begin(), anchor_tree);
    }

    Word w;
    for (std::size_t i : order) {
        const RootedTree& rt = trees[i];
        if (rt.vertices.size() == 2) {
            Vertex first = rt.vertices[0];
            Vertex second = rt.vertices[1];
            if (i == anchor_tree) {
                const Vertex other = first == v ? second : first;
                first = anchor == Anchor::end ? other : v;
                second = anchor == Anchor::end ? v : other;
            }
            w.append(gadget_edge(first, second));
        } else {
            w.append(reverse_odd_tree(g, rt, rt.root, i == anchor_tree ? anchor : Anchor::end).word);
        }
    }

    CertifiedWord cw;
    cw.word = std::move(w);
    cw.target_flip = s;
    cw.bound = 4 * members.size() - 4;
    cw.construction = Construction::even_subgraph;
    return cw;
}

CertifiedWord reverse_odd_subgraph(const Graph& g, const VertexSet& s) {
    const auto members = connected_members(g, s, "odd-subgraph reversal");
    if (members.size() < 5 || members.size() % 2 != 1) {
        throw PreconditionError("odd-subgraph reversal requires an odd number >= 5 of vertices");
    }

    std::optional<Vertex> pick;
    for (Vertex a : members) {
        std::vector<Vertex> rest;
        std::copy_if(members.begin(), members.end(), std::back_inserter(rest), [&](Vertex x) { return x != a; });
        if (g.induced(rest).connected()) {
            pick = a;
            break;
        }
    }
    if (!pick) {
        throw std::logic_error("connected graph without a non-cut vertex");
    }
    const Vertex a = *pick;
    VertexSet rest = s;
    rest.erase(a);

    CertifiedWord cw;
    cw.target_flip = s;
    cw.bound = 4 * members.size() - 3;

    for (Vertex b : members) {
        for (Vertex c : members) {
            if (b < c && b != a && c != a && g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) {
                const Word w1 = gadget_triangle(a, b, c);
                const Word w2 = reverse_even_subgraph(g, rest, c, Anchor::start).word;
                std::vector<Vertex> letters(w1.begin(), w1.end() - 1);
                letters.insert(letters.end(), w2.begin() + 1, w2.end());
                cw.word = Word(std::move(letters));
                cw.construction = Construction::odd_subgraph_triangle;
                return cw;
            }
        }
    }
    for (Vertex b : members) {
        if (b == a || g.adjacent(a, b)) {
            continue;
        }
        for (Vertex c : members) {
            if (c != a && g.adjacent(a, c) && g.adjacent(b, c)) {
                const Word w1 = gadget_p3_end(a, b, c);
                const Word w2 = reverse_even_subgraph(g, rest, c, Anchor::end).word;
                std::vector<Vertex> letters(w2.begin(), w2.end() - 1);
                letters.insert(letters.end(), w1.begin() + 1, w1.end());
                cw.word = Word(std::move(letters));
                cw.construction = Construction::odd_subgraph_p3;
                return cw;
            }
        }
    }
    throw std::logic_error("odd-subgraph reversal found neither a triangle nor an induced P3 at a");
}

CertifiedWord color_reversal_word(const Graph& g) {
    const std::size_t n = g.order();
    for (Vertex v = 0; v < n; ++v) {
        if (g.is_isolated(v)) {
            throw UnsatisfiableError("vertex " + std::to_string(v) + " is isolated and can never change color");
        }
    }
    CertifiedWord cw;
    cw.target_flip = VertexSet::all(n);
    cw.construction = Construction::color_reversal;
    for (const auto& comp : g.components()) {
        const VertexSet s(n, comp);
        if (comp.size() <= 3) {
            cw.word.append(base_case_word(g.induced(comp)).word.relabelled(comp));
        } else if (comp.size() % 2 == 0) {
            cw.word.append(reverse_even_subgraph(g, s, comp.front(), Anchor::end).word);
        } else {
            cw.word.append(reverse_odd_subgraph(g, s).word);
        }
        cw.bound += reversal_bound(comp.size());
    }
    return cw;
}

namespace {

// Word flipping exactly s inside the connected graph g (order >= 2), built
// per component of g[s] with gadgets that leave the rest of g intact.
Word flip_subset(const Graph& g, const VertexSet& s) {
    const auto members = s.members();
    const Graph sub = g.induced(members);
    Word w;
    for (const auto& local : sub.components()) {
        std::vector<Vertex> comp;
        for (Vertex x : local) {
            comp.push_back(members[x]);
        }
        Word piece;
        if (comp.size() == 1) {
            const Vertex a = comp[0];
            if (g.order() == 2) {
                piece = Word{a == 0 ? Vertex{1} : Vertex{0}};
            } else {
                piece = flip_single(g, a).word;
            }
        } else if (comp.size() == 2) {
            piece = gadget_edge(comp[0], comp[1]);
        } else if (comp.size() == 3) {
            const Graph tri = g.induced(comp);
            if (tri.edge_count() == 3) {
                // Flip comp[0] with the triangle gadget, then the edge {comp[1], comp[2]}.
                piece = join_cancelling(gadget_triangle(comp[0], comp[1], comp[2]), gadget_edge(comp[2], comp[1]));
            } else {
                Vertex mid = 0;
                while (tri.degree(mid) != 2) {
                    ++mid;
                }
                std::vector<Vertex> ends;
                for (Vertex i = 0; i < 3; ++i) {
                    if (i != mid) {
                        ends.push_back(comp[i]);
                    }
                }
                const Vertex c = comp[mid];
                // Flip {ends[0], c} with the edge gadget, then ends[1] as a P3 end.
                piece = join_cancelling(gadget_edge(ends[0], c), gadget_p3_end(ends[1], ends[0], c));
            }
        } else if (comp.size() % 2 == 0) {
            piece = reverse_even_subgraph(g, VertexSet(g.order(), comp), comp.front(), Anchor::end).word;
        } else {
            piece = reverse_odd_subgraph(g, VertexSet(g.order(), comp)).word;
        }
        w = join_cancelling(std::move(w), piece);
    }
    return w;
}

CertifiedWord transform_connected(const Graph& g, const VertexSet& v1) {
    const std::size_t n = g.order();
    CertifiedWord cw;
    cw.target_flip = v1;
    cw.bound = transform_bound(n);
    if (v1.empty()) {
        cw.construction = Construction::empty;
        return cw;
    }
    if (v1.size() == n) {
        cw.word = color_reversal_word(g).word;
        cw.construction = Construction::transform_fix_v1;
        return cw;
    }
    const VertexSet v0 = v1.symmetric_difference(VertexSet::all(n));
    Word direct = flip_subset(g, v1);
    Word via_all = join_cancelling(flip_subset(g, v0), color_reversal_word(g).word);
    if (direct.size() <= via_all.size()) {
        cw.word = std::move(direct);
        cw.construction = Construction::transform_fix_v1;
    } else {
        cw.word = std::move(via_all);
        cw.construction = Construction::transform_flip_v0_then_all;
    }
    return cw;
}

}  // namespace

CertifiedWord transform_word(const Graph& g, const Coloring& from, const Coloring& to) {
    const std::size_t n = g.order();
    if (from.size() != n || to.size() != n) {
        throw InputError("colorings must have one entry per vertex");
    }
    VertexSet v1(n);
    for (Vertex v = 0; v < n; ++v) {
        if (from[v] != to[v]) {
            v1.insert(v);
        }
    }
    const auto comps = g.components();
    if (comps.size() == 1 && n >= 2) {
        return transform_connected(g, v1);
    }

    CertifiedWord cw;
    cw.target_flip = v1;
    cw.construction = Construction::transform_components;
    for (const auto& comp : comps) {
        if (comp.size() == 1) {
            if (v1.contains(comp[0])) {
                throw UnsatisfiableError("vertex " + std::to_string(comp[0]) +
                                         " is isolated and can never change color");
            }
            continue;
        }
        VertexSet local(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (v1.contains(comp[i])) {
                local.insert(static_cast<Vertex>(i));
            }
        }
        const CertifiedWord part = transform_connected(g.induced(comp), local);
        cw.word.append(part.word.relabelled(comp));
        cw.bound += part.bound;
    }
    return cw;
}

CertifiedWord star_word(std::size_t n) {
    if (n < 2) {
        throw PreconditionError("star word requires n >= 2");
    }
    CertifiedWord cw;
    cw.word = Word{1, 0, 1, 0, 1};
    for (Vertex i = 2; i < n; ++i) {
        cw.word.append(Word{i, 0, i});
    }
    cw.word.push_back(0);
    cw.target_flip = VertexSet::all(n);
    cw.bound = 3 * n;
    cw.construction = Construction::star;
    return cw;
}

CertifiedWord complete_word(std::size_t n) {
    CertifiedWord star = star_word(n);
    CertifiedWord cw;
    // (c0)(star word) with the trailing c0 c0 cancelled
    cw.word = Word{0};
    cw.word.append(star.word);
    cw.word.pop_back();
    cw.target_flip = VertexSet::all(n);
    cw.bound = 3 * n;
    cw.construction = Construction::complete;
    return cw;
}

}  // namespace locinv
