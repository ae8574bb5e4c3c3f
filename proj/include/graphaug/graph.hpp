#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "graphaug/errors.hpp"

namespace graphaug {

using NodeId = int;

/// Undirected edge stored canonically as (min, max).
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    Edge() = default;
    Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool is_loop() const { return u == v; }
    std::uint64_t key() const {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }

    auto operator<=>(const Edge&) const = default;
};

/// Edge deletions plus additions applied as one atomic rewiring.
struct RewireOp {
    std::vector<Edge> deleted;
    std::vector<Edge> added;
};

inline RewireOp inverse(const RewireOp& op) { return RewireOp{op.added, op.deleted}; }

/// Immutable simple undirected graph over dense node ids 0..n-1.
///
/// Construction rejects self-loops, duplicate edges and out-of-range ids;
/// mutation happens only by building new graphs (see apply_rewire).
class Graph {
public:
    Graph() = default;
    Graph(NodeId node_count, std::vector<Edge> edges);

    NodeId node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Canonical edges, sorted ascending.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Sorted neighbor list of v.
    const std::vector<NodeId>& neighbors(NodeId v) const;

    int degree(NodeId v) const;
    bool has_edge(NodeId a, NodeId b) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_node(NodeId v) const;

    NodeId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeId>> adj_;
};

/// True iff a breadth-first traversal from node 0 reaches every node.
/// A 1-node graph is connected; n == 0 is an error.
bool is_connected(const Graph& g);

/// Number of connected components (n == 0 is an error).
int count_components(const Graph& g);

/// New graph with edge set (E \ deleted) ∪ added; node count unchanged.
/// Deleting an absent edge or adding an existing/self-loop edge is a conflict.
Graph apply_rewire(const Graph& g, const RewireOp& op);

}  // namespace graphaug
