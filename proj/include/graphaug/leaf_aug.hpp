#pragma once

#include "graphaug/config.hpp"
#include "graphaug/graph.hpp"
#include "graphaug/rng.hpp"

namespace graphaug {

/// Leaf edges (u leaf, w anchor) that may be rewired without creating a new
/// leaf: deleting a kept edge must leave its anchor with degree > 1, with the
/// anchor's effective degree decremented as its leaf edges are kept. Leaves are
/// scanned in ascending id order, so when several leaves share an anchor the
/// lowest ids win the anchor's spare capacity.
std::vector<Edge> eligible_leaf_edges(const Graph& g);

struct LnaResult {
    Graph graph;
    int target_rewires = 0;
    int applied_rewires = 0;
    bool skipped = false;  // no eligible edges, or floor(alpha*q) == 0

    bool partial() const { return !skipped && applied_rewires < target_rewires; }
};

/// Leaf node augmentation: draws floor(alpha * |eligible|) eligible leaf edges
/// without replacement, deletes each (u, w) and reconnects u to the
/// highest-degree neighbor of w (excluding u; ties to the smaller id).
/// Candidates whose best reconnection target is itself a leaf are skipped and
/// redrawn so the leaf count is preserved exactly.
LnaResult lna_augment(const Graph& g, const AugmentationConfig& cfg, Rng& rng);

}  // namespace graphaug
