#include "graphaug/leaf_aug.hpp"

#include <algorithm>
#include <numeric>

namespace graphaug {

std::vector<Edge> eligible_leaf_edges(const Graph& g) {
    std::vector<int> effective(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v)
        effective[static_cast<std::size_t>(v)] = g.degree(v);

    std::vector<Edge> kept;
    for (NodeId leaf = 0; leaf < g.node_count(); ++leaf) {
        if (g.degree(leaf) != 1) continue;
        const NodeId anchor = g.neighbors(leaf).front();
        // Deleting this edge must leave the anchor above degree 1.
        if (effective[static_cast<std::size_t>(anchor)] - 1 > 1) {
            kept.emplace_back(leaf, anchor);
            --effective[static_cast<std::size_t>(anchor)];
        }
    }
    return kept;
}

namespace {

// Highest-degree neighbor of `anchor` excluding the leaf itself; ties go to
// the smaller id. Returns -1 when every candidate is a leaf (reattaching to a
// leaf would change the leaf count) or no candidate exists.
NodeId reconnection_target(const Graph& g, NodeId leaf, NodeId anchor) {
    NodeId best = -1;
    int best_degree = 1;  // strict: candidates of degree <= 1 are never valid
    for (NodeId v : g.neighbors(anchor)) {  // ascending ids, so first max wins ties
        if (v == leaf) continue;
        const int d = g.degree(v);
        if (d > best_degree) {
            best = v;
            best_degree = d;
        }
    }
    return best;
}

}  // namespace

LnaResult lna_augment(const Graph& g, const AugmentationConfig& cfg, Rng& rng) {
    cfg.validate();
    if (cfg.strategy != Strategy::Lna)
        throw InvalidInputError("lna_augment requires the LNA strategy");

    const std::vector<Edge> eligible = eligible_leaf_edges(g);
    const int target = scaled_count_floor(cfg.alpha, static_cast<int>(eligible.size()));
    if (target == 0) return LnaResult{g, 0, 0, true};

    // Uniform draw order without replacement; failed candidates fall through
    // to the next drawn edge.
    std::vector<std::size_t> order(eligible.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const std::size_t j = i + uniform_below(rng, order.size() - i);
        std::swap(order[i], order[j]);
    }

    RewireOp op;
    for (std::size_t idx : order) {
        if (static_cast<int>(op.deleted.size()) == target) break;
        const Edge& e = eligible[idx];
        const NodeId leaf = g.degree(e.u) == 1 ? e.u : e.v;
        const NodeId anchor = leaf == e.u ? e.v : e.u;
        const NodeId target_node = reconnection_target(g, leaf, anchor);
        if (target_node < 0) continue;
        op.deleted.push_back(e);
        op.added.emplace_back(leaf, target_node);
    }

    if (op.deleted.empty()) return LnaResult{g, target, 0, true};
    return LnaResult{apply_rewire(g, op), target, static_cast<int>(op.deleted.size()), false};
}

}  // namespace graphaug
