#include "graphaug/ada.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "graphaug/attributes.hpp"

namespace graphaug {

NodeFeature feature_for_strategy(Strategy s) {
    switch (s) {
        case Strategy::AdaClustering:
            return NodeFeature::Clustering;
        case Strategy::AdaBetweenness:
            return NodeFeature::Betweenness;
        case Strategy::AdaCloseness:
            return NodeFeature::Closeness;
        case Strategy::AdaEigenvector:
            return NodeFeature::Eigenvector;
        default:
            throw InvalidInputError("strategy has no node feature");
    }
}

std::vector<double> NodeFeatureFn::node_values(const Graph& g) const {
    switch (selector) {
        case NodeFeature::Clustering:
            return node_clustering(g);
        case NodeFeature::Betweenness:
            return node_betweenness(g);
        case NodeFeature::Closeness:
            return node_closeness(g);
        case NodeFeature::Eigenvector:
            return node_eigenvector(g);
    }
    throw InvalidInputError("unknown node feature selector");
}

double NodeFeatureFn::graph_value(const Graph& g) const {
    const std::vector<double> values = node_values(g);
    if (values.empty()) throw InvalidInputError("feature undefined for the empty graph");
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
}

namespace {

std::vector<std::size_t> non_leaf_edge_indices(const Graph& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        if (g.degree(e.u) >= 2 && g.degree(e.v) >= 2) out.push_back(i);
    }
    return out;
}

// Proposes a rewire for one sampled edge; empty when the drawn edge has no
// valid reconnection node (retryable with another draw). Throws only when the
// graph has no edge free of leaf endpoints at all.
std::optional<RewireOp> propose_step(const Graph& g, const std::vector<double>& values,
                                     Rng& rng) {
    const std::vector<std::size_t> candidates = non_leaf_edge_indices(g);
    if (candidates.empty())
        throw NoCandidateError("no edge without a leaf endpoint to rewire");

    const Edge e1 = g.edges()[candidates[uniform_below(rng, candidates.size())]];
    NodeId u = e1.u, w = e1.v;  // canonical order already breaks feature ties by id
    if (values[static_cast<std::size_t>(e1.v)] > values[static_cast<std::size_t>(e1.u)])
        std::swap(u, w);

    const double want = values[static_cast<std::size_t>(w)];
    NodeId best = -1;
    double best_gap = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (v == u || v == w || g.has_edge(u, v)) continue;
        const double gap = std::fabs(values[static_cast<std::size_t>(v)] - want);
        if (best < 0 || gap < best_gap) {  // ascending scan keeps the smaller id on ties
            best = v;
            best_gap = gap;
        }
    }
    if (best < 0) return std::nullopt;

    return RewireOp{{e1}, {Edge(u, best)}};
}

}  // namespace

RewireOp ada_rewire_step(const Graph& g, const NodeFeatureFn& feat, Rng& rng) {
    std::optional<RewireOp> op = propose_step(g, feat.node_values(g), rng);
    if (!op)
        throw NoCandidateError("no reconnection node available outside u, w and N(u)");
    return *op;
}

AdaResult ada_augment(const Graph& g, const AugmentationConfig& cfg, Rng& rng) {
    cfg.validate();
    if (!is_ada(cfg.strategy)) throw InvalidInputError("ada_augment requires an ADA strategy");
    if (g.edge_count() < 1) throw InvalidInputError("ADA needs at least one edge");

    const NodeFeatureFn feat{feature_for_strategy(cfg.strategy)};
    const double input_value = feat.graph_value(g);
    const int target = scaled_count_ceil(cfg.alpha, g.edge_count());
    const int budget = cfg.attempt_budget(g.edge_count());
    const int input_components = count_components(g);

    AdaResult result;
    result.input_value = input_value;
    result.target_swaps = target;
    result.candidates.resize(static_cast<std::size_t>(cfg.iterations));

    const std::uint64_t base = rng();
    std::string last_failure;

    for (int t = 0; t < cfg.iterations; ++t) {
        Rng sub(derive_seed(base, static_cast<std::uint64_t>(t)));
        AdaCandidate& log = result.candidates[static_cast<std::size_t>(t)];

        Graph current = g;
        std::vector<double> values = feat.node_values(current);
        int current_components = input_components;
        bool failed = false;
        while (log.accepted_swaps < target) {
            if (log.attempts_used >= budget) {
                last_failure = "attempt budget (" + std::to_string(budget) + ") exhausted";
                failed = true;
                break;
            }
            ++log.attempts_used;
            std::optional<RewireOp> op;
            try {
                op = propose_step(current, values, sub);
            } catch (const NoCandidateError& e) {
                last_failure = e.what();
                failed = true;
                break;
            }
            if (!op) continue;  // drawn edge had no reconnection node; redraw
            Graph next = apply_rewire(current, *op);
            const int next_components = count_components(next);
            if (next_components > current_components) continue;  // cancel the rewiring
            current = std::move(next);
            current_components = next_components;
            values = feat.node_values(current);
            ++log.accepted_swaps;
        }
        if (failed) continue;

        log.completed = true;
        const double candidate_value =
            std::accumulate(values.begin(), values.end(), 0.0) /
            static_cast<double>(values.size());
        log.deviation = std::fabs(candidate_value - input_value);

        if (result.chosen_candidate < 0 ||
            log.deviation <
                result.candidates[static_cast<std::size_t>(result.chosen_candidate)].deviation) {
            result.chosen_candidate = t;
            result.graph = std::move(current);
            result.output_value = candidate_value;
        }
    }

    if (result.chosen_candidate < 0)
        throw AugmentationFailedError("all " + std::to_string(cfg.iterations) +
                                      " ADA candidates failed: " + last_failure);
    return result;
}

}  // namespace graphaug
