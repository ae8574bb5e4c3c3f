#pragma once

#include "graphaug/config.hpp"
#include "graphaug/graph.hpp"
#include "graphaug/rng.hpp"

namespace graphaug {

/// One 0k rewire: delete a uniformly random existing edge, add a uniformly
/// random currently-absent non-loop pair. Preserves n and m.
/// max_attempts == 0 selects the default budget of 100*m.
RewireOp rewire_0k_step(const Graph& g, Rng& rng, int max_attempts = 0);

/// One 1k rewire: pick two disjoint edges (a,b), (c,d) on four distinct nodes
/// and swap to (a,d), (c,b); candidates creating loops or duplicate edges are
/// rejected. Preserves every node degree.
RewireOp rewire_1k_step(const Graph& g, Rng& rng, int max_attempts = 0);

/// One 2k rewire: a 1k swap additionally constrained to degree(b) == degree(d),
/// so the endpoint-degree pair of every edge is preserved.
RewireOp rewire_2k_step(const Graph& g, Rng& rng, int max_attempts = 0);

struct NullModelResult {
    Graph graph;
    int target_rewires = 0;
    int applied_rewires = 0;

    bool partial() const { return applied_rewires < target_rewires; }
};

/// Applies ceil(alpha*m) successful rewires of the configured order (0k/1k/2k).
/// Deterministic for a fixed rng state. If some of the budgeted rewires cannot
/// be realized, the partially rewired graph is returned with applied < target;
/// zero realizable rewires is an error.
NullModelResult run_null_model(const Graph& g, const AugmentationConfig& cfg, Rng& rng);

}  // namespace graphaug
