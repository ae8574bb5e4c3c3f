#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "graphaug/errors.hpp"

namespace graphaug {

enum class Strategy {
    ZeroK,
    OneK,
    TwoK,
    Lna,
    AdaClustering,
    AdaBetweenness,
    AdaCloseness,
    AdaEigenvector,
};

bool is_null_model(Strategy s);
bool is_ada(Strategy s);

/// CLI token for a strategy ("0k", "1k", "2k", "lna", "ada-c", "ada-bc", "ada-cc", "ada-ec").
std::string strategy_token(Strategy s);
Strategy strategy_from_token(const std::string& token);

struct AugmentationConfig {
    Strategy strategy = Strategy::OneK;
    double alpha = 0.2;     // cost coefficient, fraction of edges rewired per pass
    int iterations = 5;     // candidate count T (ADA only)
    std::uint64_t seed = 0;
    int max_attempts_per_swap = 0;  // 0 selects the default budget of 100*m

    void validate() const {
        if (!(alpha > 0.0 && alpha <= 1.0))
            throw InvalidInputError("alpha must lie in (0, 1]");
        if (iterations < 1) throw InvalidInputError("iterations must be >= 1");
        if (max_attempts_per_swap < 0)
            throw InvalidInputError("max_attempts_per_swap must be >= 1 (0 = default)");
    }

    int attempt_budget(int edge_count) const {
        if (max_attempts_per_swap > 0) return max_attempts_per_swap;
        return 100 * (edge_count > 0 ? edge_count : 1);
    }
};

/// ceil(alpha * count), robust to decimal coefficients that are not exactly
/// representable (0.2 * 20 must give 4, not 5).
inline int scaled_count_ceil(double alpha, int count) {
    const double t = alpha * count;
    const double r = std::round(t);
    if (std::fabs(t - r) < 1e-9) return static_cast<int>(r);
    return static_cast<int>(std::ceil(t));
}

/// floor(alpha * count) with the same representability guard.
inline int scaled_count_floor(double alpha, int count) {
    const double t = alpha * count;
    const double r = std::round(t);
    if (std::fabs(t - r) < 1e-9) return static_cast<int>(r);
    return static_cast<int>(std::floor(t));
}

}  // namespace graphaug
