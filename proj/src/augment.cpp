#include "graphaug/augment.hpp"

#include "graphaug/ada.hpp"
#include "graphaug/leaf_aug.hpp"
#include "graphaug/null_models.hpp"

namespace graphaug {

bool is_null_model(Strategy s) {
    return s == Strategy::ZeroK || s == Strategy::OneK || s == Strategy::TwoK;
}

bool is_ada(Strategy s) {
    return s == Strategy::AdaClustering || s == Strategy::AdaBetweenness ||
           s == Strategy::AdaCloseness || s == Strategy::AdaEigenvector;
}

std::string strategy_token(Strategy s) {
    switch (s) {
        case Strategy::ZeroK:
            return "0k";
        case Strategy::OneK:
            return "1k";
        case Strategy::TwoK:
            return "2k";
        case Strategy::Lna:
            return "lna";
        case Strategy::AdaClustering:
            return "ada-c";
        case Strategy::AdaBetweenness:
            return "ada-bc";
        case Strategy::AdaCloseness:
            return "ada-cc";
        case Strategy::AdaEigenvector:
            return "ada-ec";
    }
    throw InvalidInputError("unknown strategy");
}

Strategy strategy_from_token(const std::string& token) {
    if (token == "0k") return Strategy::ZeroK;
    if (token == "1k") return Strategy::OneK;
    if (token == "2k") return Strategy::TwoK;
    if (token == "lna") return Strategy::Lna;
    if (token == "ada-c") return Strategy::AdaClustering;
    if (token == "ada-bc") return Strategy::AdaBetweenness;
    if (token == "ada-cc") return Strategy::AdaCloseness;
    if (token == "ada-ec") return Strategy::AdaEigenvector;
    throw InvalidInputError("unknown strategy token '" + token +
                            "' (expected 0k|1k|2k|lna|ada-c|ada-bc|ada-cc|ada-ec)");
}

AugmentOutcome augment_graph(const Graph& g, const AugmentationConfig& cfg, Rng& rng) {
    if (is_null_model(cfg.strategy)) {
        NullModelResult r = run_null_model(g, cfg, rng);
        return AugmentOutcome{std::move(r.graph), r.target_rewires, r.applied_rewires, false};
    }
    if (cfg.strategy == Strategy::Lna) {
        LnaResult r = lna_augment(g, cfg, rng);
        return AugmentOutcome{std::move(r.graph), r.target_rewires, r.applied_rewires, r.skipped};
    }
    AdaResult r = ada_augment(g, cfg, rng);
    return AugmentOutcome{std::move(r.graph), r.target_swaps, r.target_swaps, false};
}

}  // namespace graphaug
