#include "graphaug/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_set>

namespace graphaug {

Graph::Graph(NodeId node_count, std::vector<Edge> edges)
    : n_(node_count), edges_(std::move(edges)) {
    if (n_ < 0) throw InvalidInputError("node count must be non-negative");

    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.is_loop())
            throw InvalidInputError("self-loop (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") rejected");
        if (e.u < 0 || e.v >= n_)
            throw InvalidInputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") out of node range [0," + std::to_string(n_) + ")");
        if (i > 0 && edges_[i - 1] == e)
            throw InvalidInputError("duplicate edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") rejected");
    }

    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

void Graph::check_node(NodeId v) const {
    if (v < 0 || v >= n_)
        throw InvalidNodeError("node id " + std::to_string(v) + " outside [0," +
                               std::to_string(n_) + ")");
}

const std::vector<NodeId>& Graph::neighbors(NodeId v) const {
    check_node(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(NodeId v) const {
    check_node(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool Graph::has_edge(NodeId a, NodeId b) const {
    check_node(a);
    check_node(b);
    const auto& nbrs = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

bool is_connected(const Graph& g) { return count_components(g) == 1; }

int count_components(const Graph& g) {
    const NodeId n = g.node_count();
    if (n == 0) throw InvalidInputError("connectivity undefined for the empty graph");

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int components = 0;
    std::queue<NodeId> frontier;
    for (NodeId start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++components;
        seen[static_cast<std::size_t>(start)] = 1;
        frontier.push(start);
        while (!frontier.empty()) {
            const NodeId v = frontier.front();
            frontier.pop();
            for (NodeId w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    frontier.push(w);
                }
            }
        }
    }
    return components;
}

Graph apply_rewire(const Graph& g, const RewireOp& op) {
    std::unordered_set<std::uint64_t> keys;
    keys.reserve(g.edges().size() * 2);
    for (const Edge& e : g.edges()) keys.insert(e.key());

    for (const Edge& e : op.deleted) {
        if (keys.erase(e.key()) == 0)
            throw RewireConflictError("cannot delete absent edge (" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + ")");
    }
    for (const Edge& e : op.added) {
        if (e.is_loop())
            throw RewireConflictError("cannot add self-loop at node " + std::to_string(e.u));
        if (e.u < 0 || e.v >= g.node_count())
            throw RewireConflictError("added edge (" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + ") out of node range");
        if (!keys.insert(e.key()).second)
            throw RewireConflictError("cannot add existing edge (" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + ")");
    }

    std::vector<Edge> edges;
    edges.reserve(keys.size());
    for (std::uint64_t key : keys)
        edges.emplace_back(static_cast<NodeId>(key >> 32),
                           static_cast<NodeId>(key & 0xffffffffULL));
    return Graph(g.node_count(), std::move(edges));
}

}  // namespace graphaug
