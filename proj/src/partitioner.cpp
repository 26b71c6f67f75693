#include "locinv/partitioner.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>

namespace locinv {

namespace {

// Dense local indexing of a tree's vertex ids.
struct LocalTree {
    std::vector<Vertex> ids;  // sorted
    std::vector<std::vector<std::size_t>> adj;

    std::optional<std::size_t> index_of(Vertex v) const {
        auto it = std::lower_bound(ids.begin(), ids.end(), v);
        if (it == ids.end() || *it != v) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - ids.begin());
    }
};

std::optional<LocalTree> localize(const RootedTree& t) {
    LocalTree lt;
    lt.ids = t.vertices;
    std::sort(lt.ids.begin(), lt.ids.end());
    if (std::adjacent_find(lt.ids.begin(), lt.ids.end()) != lt.ids.end()) {
        return std::nullopt;
    }
    lt.adj.resize(lt.ids.size());
    std::vector<Edge> seen;
    for (const auto& [u, v] : t.edges) {
        auto iu = lt.index_of(u);
        auto iv = lt.index_of(v);
        if (!iu || !iv || u == v) {
            return std::nullopt;
        }
        seen.push_back(make_edge(u, v));
        lt.adj[*iu].push_back(*iv);
        lt.adj[*iv].push_back(*iu);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        return std::nullopt;
    }
    return lt;
}

// BFS order from root; empty when the tree is disconnected.
std::vector<std::size_t> bfs_order(const LocalTree& lt, std::size_t root, std::vector<std::size_t>& parent,
                                   std::vector<std::size_t>& depth) {
    const std::size_t n = lt.ids.size();
    parent.assign(n, n);
    depth.assign(n, 0);
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> order{root};
    seen[root] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::size_t x = order[head];
        for (std::size_t y : lt.adj[x]) {
            if (!seen[y]) {
                seen[y] = true;
                parent[y] = x;
                depth[y] = depth[x] + 1;
                order.push_back(y);
            }
        }
    }
    if (order.size() != n) {
        order.clear();
    }
    return order;
}

}  // namespace

bool is_odd_tree(const RootedTree& t) {
    auto lt = localize(t);
    if (!lt || lt->ids.empty() || t.edges.size() + 1 != lt->ids.size()) {
        return false;
    }
    auto root = lt->index_of(t.root);
    if (!root) {
        return false;
    }
    std::vector<std::size_t> parent;
    std::vector<std::size_t> depth;
    if (bfs_order(*lt, *root, parent, depth).empty()) {
        return false;
    }
    return std::all_of(lt->adj.begin(), lt->adj.end(), [](const auto& a) { return a.size() % 2 == 1; });
}

EdgePartition p3_partition(const RootedTree& t) {
    if (!is_odd_tree(t)) {
        throw PreconditionError("p3_partition requires a rooted odd tree");
    }
    const LocalTree lt = *localize(t);
    const std::size_t n = lt.ids.size();
    if (n % 2 != 0 || n < 2) {
        throw PreconditionError("p3_partition requires an even number of vertices");
    }
    const std::size_t root = *lt.index_of(t.root);
    std::vector<std::size_t> parent;
    std::vector<std::size_t> depth;
    bfs_order(lt, root, parent, depth);

    std::vector<std::size_t> deg(n);
    for (std::size_t i = 0; i < n; ++i) {
        deg[i] = lt.adj[i].size();
    }
    std::vector<bool> alive(n, true);
    std::size_t remaining = n;

    EdgePartition out;
    while (remaining > 2) {
        // Deepest vertex with a leaf child; ids are sorted, so the first index
        // at maximal depth is the smallest id.
        std::optional<std::size_t> best;
        for (std::size_t v = 0; v < n; ++v) {
            if (!alive[v]) {
                continue;
            }
            const bool has_leaf_child = std::any_of(lt.adj[v].begin(), lt.adj[v].end(), [&](std::size_t c) {
                return alive[c] && parent[c] == v && deg[c] == 1;
            });
            if (has_leaf_child && (!best || depth[v] > depth[*best])) {
                best = v;
            }
        }
        assert(best);
        const std::size_t v = *best;
        std::vector<std::size_t> leaves;
        for (std::size_t c : lt.adj[v]) {
            if (alive[c] && parent[c] == v && deg[c] == 1) {
                leaves.push_back(c);
            }
        }
        std::sort(leaves.begin(), leaves.end());
        if (leaves.size() < 2) {
            throw std::logic_error("p3_partition: vertex with a single leaf child in an odd tree");
        }
        const std::size_t u = leaves[0];
        const std::size_t w = leaves[1];
        out.p3s.push_back(PathP3{lt.ids[u], lt.ids[v], lt.ids[w]});
        alive[u] = false;
        alive[w] = false;
        deg[v] -= 2;
        remaining -= 2;
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (alive[x] && x != root) {
            out.k2 = Edge{lt.ids[root], lt.ids[x]};
        }
    }
    return out;
}

std::vector<Edge> odd_degree_spanning_subgraph(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0 || n % 2 != 0) {
        throw PreconditionError("odd-degree spanning subgraph requires even order");
    }
    std::vector<Vertex> order{0};
    std::vector<Vertex> parent(n, 0);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (Vertex y : g.neighbors(order[head])) {
            if (!seen[y]) {
                seen[y] = true;
                parent[y] = order[head];
                order.push_back(y);
            }
        }
    }
    if (order.size() != n) {
        throw PreconditionError("odd-degree spanning subgraph requires a connected graph");
    }

    std::vector<std::size_t> fdeg(n, 0);
    std::vector<Edge> out;
    for (std::size_t i = order.size(); i-- > 1;) {
        const Vertex v = order[i];
        if (fdeg[v] % 2 == 0) {
            out.push_back(make_edge(v, parent[v]));
            ++fdeg[v];
            ++fdeg[parent[v]];
        }
    }
    assert(fdeg[0] % 2 == 1);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

[[maybe_unused]] bool all_degrees_odd(const Graph& f) {
    for (Vertex v = 0; v < f.order(); ++v) {
        if (f.degree(v) % 2 == 0) {
            return false;
        }
    }
    return true;
}

// Edges of some cycle of f, or empty when f is a forest.
std::vector<Edge> find_cycle(const Graph& f) {
    const std::size_t n = f.order();
    std::vector<Vertex> parent(n, 0);
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    for (Vertex s = 0; s < n; ++s) {
        if (state[s] != 0) {
            continue;
        }
        // Iterative DFS carrying (vertex, next neighbor index).
        std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
        state[s] = 1;
        parent[s] = s;
        while (!stack.empty()) {
            auto& [x, next] = stack.back();
            const auto nbrs = f.neighbors(x);
            if (next == nbrs.size()) {
                state[x] = 2;
                stack.pop_back();
                continue;
            }
            const Vertex y = nbrs[next++];
            if (y == parent[x]) {
                continue;
            }
            if (state[y] == 1) {
                std::vector<Edge> cycle{make_edge(x, y)};
                for (Vertex z = x; z != y; z = parent[z]) {
                    cycle.push_back(make_edge(z, parent[z]));
                }
                return cycle;
            }
            if (state[y] == 0) {
                state[y] = 1;
                parent[y] = x;
                stack.emplace_back(y, 0);
            }
        }
    }
    return {};
}

// Path edges between x and y inside the forest f; both must share a tree.
std::vector<Edge> forest_path(const Graph& f, Vertex x, Vertex y) {
    std::vector<Vertex> parent(f.order(), static_cast<Vertex>(f.order()));
    std::vector<Vertex> queue{x};
    parent[x] = x;
    for (std::size_t head = 0; head < queue.size() && parent[y] == f.order(); ++head) {
        for (Vertex z : f.neighbors(queue[head])) {
            if (parent[z] == f.order()) {
                parent[z] = queue[head];
                queue.push_back(z);
            }
        }
    }
    std::vector<Edge> path;
    for (Vertex z = y; z != x; z = parent[z]) {
        path.push_back(make_edge(z, parent[z]));
    }
    return path;
}

}  // namespace

PerfectForest perfect_forest(const Graph& g) {
    if (g.order() < 2) {
        throw PreconditionError("perfect forest requires at least two vertices");
    }
    const auto odd = odd_degree_spanning_subgraph(g);
    Graph f = Graph::from_edges(g.order(), odd);

    const std::size_t max_iterations = g.edge_count() + 1;
    std::size_t iterations = 0;
    for (;;) {
        assert(all_degrees_odd(f));
        if (++iterations > max_iterations) {
            throw std::logic_error("perfect forest construction failed to shrink F");
        }
        const auto cycle = find_cycle(f);
        if (!cycle.empty()) {
            for (const auto& [u, v] : cycle) {
                f.remove_edge(u, v);
            }
            continue;
        }
        bool changed = false;
        for (const auto& comp : f.components()) {
            for (std::size_t i = 0; i < comp.size() && !changed; ++i) {
                for (std::size_t j = i + 1; j < comp.size() && !changed; ++j) {
                    const Vertex x = comp[i];
                    const Vertex y = comp[j];
                    if (g.adjacent(x, y) && !f.adjacent(x, y)) {
                        for (const auto& [u, v] : forest_path(f, x, y)) {
                            f.remove_edge(u, v);
                        }
                        f.add_edge(x, y);
                        changed = true;
                    }
                }
            }
            if (changed) {
                break;
            }
        }
        if (!changed) {
            break;
        }
    }

    PerfectForest out;
    for (auto& comp : f.components()) {
        ForestTree tree;
        for (Vertex v : comp) {
            for (Vertex u : f.neighbors(v)) {
                if (v < u) {
                    tree.edges.emplace_back(v, u);
                }
            }
        }
        std::sort(tree.edges.begin(), tree.edges.end());
        tree.vertices = std::move(comp);
        out.trees.push_back(std::move(tree));
    }
    return out;
}

}  // namespace locinv
