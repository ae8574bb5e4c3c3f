#pragma once

#include <vector>

#include "graphaug/config.hpp"
#include "graphaug/graph.hpp"
#include "graphaug/rng.hpp"

namespace graphaug {

enum class NodeFeature { Clustering, Betweenness, Closeness, Eigenvector };

NodeFeature feature_for_strategy(Strategy s);

/// Per-node feature evaluator; the graph-level value is the mean of the node
/// values, matching the attribute definitions.
struct NodeFeatureFn {
    NodeFeature selector = NodeFeature::Clustering;

    std::vector<double> node_values(const Graph& g) const;
    double graph_value(const Graph& g) const;
};

/// Proposes one feature-guided rewire: samples an edge with no leaf endpoint,
/// keeps its higher-feature endpoint u, and reconnects u to the node whose
/// feature value is closest to the dropped endpoint's (excluding u, w and
/// current neighbors of u; ties to the smaller id). Connectivity acceptance is
/// the caller's job.
RewireOp ada_rewire_step(const Graph& g, const NodeFeatureFn& feat, Rng& rng);

struct AdaCandidate {
    bool completed = false;
    double deviation = 0.0;  // |F' - F| when completed
    int accepted_swaps = 0;
    int attempts_used = 0;
};

struct AdaResult {
    Graph graph;
    double input_value = 0.0;
    double output_value = 0.0;
    int target_swaps = 0;
    int chosen_candidate = -1;
    std::vector<AdaCandidate> candidates;
};

/// Builds cfg.iterations independent candidates, each applying ceil(alpha*m)
/// accepted rewire steps with feature values recomputed after every accepted
/// step, and returns the candidate minimizing |F' - F|. A step is accepted iff
/// it does not increase the number of connected components (for a connected
/// input: iff the result stays connected). Deterministic for a fixed rng state.
AdaResult ada_augment(const Graph& g, const AugmentationConfig& cfg, Rng& rng);

}  // namespace graphaug
