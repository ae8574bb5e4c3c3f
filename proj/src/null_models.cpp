#include "graphaug/null_models.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace graphaug {

namespace {

// Mutable edge soup the swap loop works on; rebuilt into a Graph at the end.
struct RewireState {
    NodeId n;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> keys;
    std::vector<int> degree;

    explicit RewireState(const Graph& g)
        : n(g.node_count()), edges(g.edges()), degree(static_cast<std::size_t>(g.node_count())) {
        keys.reserve(edges.size() * 2);
        for (const Edge& e : edges) keys.insert(e.key());
        for (NodeId v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);
    }

    bool has(NodeId a, NodeId b) const { return keys.count(Edge(a, b).key()) != 0; }

    void replace(std::size_t index, Edge replacement) {
        keys.erase(edges[index].key());
        Edge& slot = edges[index];
        --degree[static_cast<std::size_t>(slot.u)];
        --degree[static_cast<std::size_t>(slot.v)];
        slot = replacement;
        ++degree[static_cast<std::size_t>(slot.u)];
        ++degree[static_cast<std::size_t>(slot.v)];
        keys.insert(replacement.key());
    }

    void apply(const RewireOp& op) {
        for (std::size_t i = 0; i < op.deleted.size(); ++i) {
            for (std::size_t j = 0; j < edges.size(); ++j) {
                if (edges[j] == op.deleted[i]) {
                    replace(j, op.added[i]);
                    break;
                }
            }
        }
    }

    bool complete() const {
        return static_cast<long long>(edges.size()) * 2 ==
               static_cast<long long>(n) * (n - 1);
    }
};

RewireOp step_0k(const RewireState& st, Rng& rng, int budget) {
    if (st.edges.empty()) throw NoCandidateError("0k rewiring needs at least one edge");
    if (st.n < 2 || st.complete())
        throw NoCandidateError("0k rewiring needs a non-adjacent node pair");

    const Edge victim = st.edges[uniform_below(rng, st.edges.size())];
    for (int attempt = 0; attempt < budget; ++attempt) {
        const NodeId a = static_cast<NodeId>(uniform_below(rng, static_cast<std::uint64_t>(st.n)));
        const NodeId b = static_cast<NodeId>(uniform_below(rng, static_cast<std::uint64_t>(st.n)));
        if (a == b || st.has(a, b)) continue;
        return RewireOp{{victim}, {Edge(a, b)}};
    }
    throw AttemptsExhaustedError("0k rewiring found no absent pair within " +
                                 std::to_string(budget) + " attempts");
}

RewireOp step_swap(const RewireState& st, Rng& rng, int budget, bool match_degrees) {
    const std::size_t m = st.edges.size();
    if (m < 2) throw NoCandidateError("edge swap needs at least two edges");

    for (int attempt = 0; attempt < budget; ++attempt) {
        const std::size_t i = uniform_below(rng, m);
        std::size_t j = uniform_below(rng, m - 1);
        if (j >= i) ++j;

        // Random orientations make both re-pairings of the two edges reachable
        // under the fixed (a,b),(c,d) -> (a,d),(c,b) rule.
        NodeId a = st.edges[i].u, b = st.edges[i].v;
        if (coin_flip(rng)) std::swap(a, b);
        NodeId c = st.edges[j].u, d = st.edges[j].v;
        if (coin_flip(rng)) std::swap(c, d);

        if (a == c || a == d || b == c || b == d) continue;
        if (match_degrees &&
            st.degree[static_cast<std::size_t>(b)] != st.degree[static_cast<std::size_t>(d)])
            continue;
        if (st.has(a, d) || st.has(c, b)) continue;

        return RewireOp{{Edge(a, b), Edge(c, d)}, {Edge(a, d), Edge(c, b)}};
    }
    throw AttemptsExhaustedError("edge swap found no valid candidate within " +
                                 std::to_string(budget) + " attempts");
}

RewireOp run_step(const RewireState& st, Strategy strategy, Rng& rng, int budget) {
    switch (strategy) {
        case Strategy::ZeroK:
            return step_0k(st, rng, budget);
        case Strategy::OneK:
            return step_swap(st, rng, budget, false);
        case Strategy::TwoK:
            return step_swap(st, rng, budget, true);
        default:
            throw InvalidInputError("run_null_model handles 0k/1k/2k strategies only");
    }
}

int resolve_budget(const Graph& g, int max_attempts) {
    if (max_attempts > 0) return max_attempts;
    if (max_attempts < 0) throw InvalidInputError("max_attempts must be >= 0");
    return 100 * std::max(1, g.edge_count());
}

}  // namespace

RewireOp rewire_0k_step(const Graph& g, Rng& rng, int max_attempts) {
    return step_0k(RewireState(g), rng, resolve_budget(g, max_attempts));
}

RewireOp rewire_1k_step(const Graph& g, Rng& rng, int max_attempts) {
    return step_swap(RewireState(g), rng, resolve_budget(g, max_attempts), false);
}

RewireOp rewire_2k_step(const Graph& g, Rng& rng, int max_attempts) {
    return step_swap(RewireState(g), rng, resolve_budget(g, max_attempts), true);
}

NullModelResult run_null_model(const Graph& g, const AugmentationConfig& cfg, Rng& rng) {
    cfg.validate();
    if (!is_null_model(cfg.strategy))
        throw InvalidInputError("run_null_model handles 0k/1k/2k strategies only");
    if (g.edge_count() < 1)
        throw InvalidInputError("null-model augmentation needs at least one edge");

    const int target = scaled_count_ceil(cfg.alpha, g.edge_count());
    const int budget = cfg.attempt_budget(g.edge_count());

    RewireState st(g);
    int applied = 0;
    std::string last_failure;
    while (applied < target) {
        try {
            st.apply(run_step(st, cfg.strategy, rng, budget));
            ++applied;
        } catch (const NoCandidateError& e) {
            last_failure = e.what();
            break;
        } catch (const AttemptsExhaustedError& e) {
            last_failure = e.what();
            break;
        }
    }
    if (applied == 0)
        throw AugmentationFailedError("no " + strategy_token(cfg.strategy) +
                                      " rewire could be applied: " + last_failure);

    return NullModelResult{Graph(st.n, std::move(st.edges)), target, applied};
}

}  // namespace graphaug
