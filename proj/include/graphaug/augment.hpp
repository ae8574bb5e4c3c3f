#pragma once

#include <string>

#include "graphaug/config.hpp"
#include "graphaug/graph.hpp"
#include "graphaug/rng.hpp"

namespace graphaug {

struct AugmentOutcome {
    Graph graph;
    int target_rewires = 0;
    int applied_rewires = 0;
    bool skipped = false;  // strategy signalled a no-op (input returned unchanged)

    bool partial() const { return !skipped && applied_rewires < target_rewires; }
};

/// Runs the configured strategy on one graph. Augmentation failures propagate
/// as AugmentationFailedError; a skipped run returns the input flagged.
AugmentOutcome augment_graph(const Graph& g, const AugmentationConfig& cfg, Rng& rng);

}  // namespace graphaug
