#pragma once

// Structural decompositions used by the word synthesizer: the P3 + K2 edge
// partition of a rooted odd tree and perfect forests of even-order graphs.

#include <vector>

#include "locinv/graph_core.hpp"

namespace locinv {

// A tree over a subset of some graph's vertex ids.
struct RootedTree {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    Vertex root = 0;
};

// endA - center - endB, both ends children of the center.
struct PathP3 {
    Vertex end_a;
    Vertex center;
    Vertex end_b;

    bool operator==(const PathP3&) const = default;
};

struct EdgePartition {
    std::vector<PathP3> p3s;
    Edge k2;  // k2.first is the root
};

struct ForestTree {
    std::vector<Vertex> vertices;  // sorted
    std::vector<Edge> edges;       // sorted, normalized
};

struct PerfectForest {
    std::vector<ForestTree> trees;  // ordered by smallest vertex
};

// True when the tree is connected, acyclic, contains its root and every
// vertex has odd degree.
bool is_odd_tree(const RootedTree& t);

// Partition of E(t) into (|V|-2)/2 P3s and one K2 containing the root, every
// vertex an endvertex of exactly one part. Repeatedly detaches the two
// smallest leaf children of a deepest vertex that has a leaf child.
// Throws PreconditionError unless t is an odd tree on an even number >= 2 of
// vertices.
EdgePartition p3_partition(const RootedTree& t);

// F subset of E(g) in which every vertex has odd degree. Requires g connected
// with even order.
std::vector<Edge> odd_degree_spanning_subgraph(const Graph& g);

// Spanning forest of induced odd trees. Requires g connected with even order >= 2.
PerfectForest perfect_forest(const Graph& g);

}  // namespace locinv
