#include "graphaug/attributes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <queue>

namespace graphaug {

namespace {

void require_nodes(const Graph& g, int minimum, const char* what) {
    if (g.node_count() < minimum)
        throw InvalidInputError(std::string(what) + " requires at least " +
                                std::to_string(minimum) + " node(s)");
}

double mean(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

}  // namespace

double average_degree(const Graph& g) {
    require_nodes(g, 1, "average_degree");
    return 2.0 * g.edge_count() / static_cast<double>(g.node_count());
}

DegreeDistribution degree_distribution(const Graph& g) {
    require_nodes(g, 1, "degree_distribution");
    std::map<int, int> counts;
    for (NodeId v = 0; v < g.node_count(); ++v) ++counts[g.degree(v)];
    DegreeDistribution dist;
    for (const auto& [k, nk] : counts)
        dist.prob[k] = static_cast<double>(nk) / static_cast<double>(g.node_count());
    return dist;
}

double leaf_proportion(const Graph& g) {
    require_nodes(g, 1, "leaf_proportion");
    int leaves = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) == 1) ++leaves;
    return static_cast<double>(leaves) / static_cast<double>(g.node_count());
}

JointDegreeDistribution joint_degree_distribution(const Graph& g) {
    if (g.edge_count() < 1)
        throw InvalidInputError("joint_degree_distribution requires at least one edge");
    JointDegreeDistribution jd;
    for (const Edge& e : g.edges()) {
        const int k1 = g.degree(e.u);
        const int k2 = g.degree(e.v);
        ++jd.edge_counts[{std::min(k1, k2), std::max(k1, k2)}];
    }
    const double two_m = 2.0 * g.edge_count();
    for (const auto& [pair, count] : jd.edge_counts) {
        const double mu = pair.first == pair.second ? 2.0 : 1.0;
        jd.values[pair] = mu * count / two_m;
    }
    return jd;
}

std::vector<double> node_clustering(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (NodeId v = 0; v < n; ++v) {
        const auto& nbrs = g.neighbors(v);
        const int k = static_cast<int>(nbrs.size());
        if (k < 2) continue;  // term defined as 0 for degree < 2
        int links = 0;
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (g.has_edge(nbrs[i], nbrs[j])) ++links;
        out[static_cast<std::size_t>(v)] = 2.0 * links / (static_cast<double>(k) * (k - 1));
    }
    return out;
}

// Brandes' accumulation; dividing by two converts ordered-pair dependencies
// into the unordered-pair convention used throughout.
std::vector<double> node_betweenness(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<double> score(static_cast<std::size_t>(n), 0.0);

    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<double> sigma(static_cast<std::size_t>(n));
    std::vector<double> delta(static_cast<std::size_t>(n));
    std::vector<std::vector<NodeId>> preds(static_cast<std::size_t>(n));
    std::vector<NodeId> order;
    order.reserve(static_cast<std::size_t>(n));

    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();

        dist[static_cast<std::size_t>(s)] = 0;
        sigma[static_cast<std::size_t>(s)] = 1.0;
        std::queue<NodeId> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            const NodeId v = frontier.front();
            frontier.pop();
            order.push_back(v);
            for (NodeId w : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    frontier.push(w);
                }
                if (dist[static_cast<std::size_t>(w)] ==
                    dist[static_cast<std::size_t>(v)] + 1) {
                    sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(v)];
                    preds[static_cast<std::size_t>(w)].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const NodeId w = *it;
            for (NodeId v : preds[static_cast<std::size_t>(w)]) {
                delta[static_cast<std::size_t>(v)] +=
                    sigma[static_cast<std::size_t>(v)] / sigma[static_cast<std::size_t>(w)] *
                    (1.0 + delta[static_cast<std::size_t>(w)]);
            }
            if (w != s) score[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
        }
    }

    for (double& x : score) x /= 2.0;
    return score;
}

std::vector<double> node_closeness(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    std::vector<int> dist(static_cast<std::size_t>(n));

    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        std::queue<NodeId> frontier;
        frontier.push(s);
        long long sum = 0;
        int reached = 1;
        while (!frontier.empty()) {
            const NodeId v = frontier.front();
            frontier.pop();
            for (NodeId w : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    sum += dist[static_cast<std::size_t>(w)];
                    ++reached;
                    frontier.push(w);
                }
            }
        }
        if (sum == 0) continue;  // singleton component
        const double comp = static_cast<double>(reached);
        out[static_cast<std::size_t>(s)] =
            (comp / static_cast<double>(sum)) * (comp / static_cast<double>(n));
    }
    return out;
}

std::vector<double> node_eigenvector(const Graph& g) {
    const NodeId n = g.node_count();
    require_nodes(g, 1, "node_eigenvector");
    if (g.edge_count() == 0)
        throw DegenerateSpectrumError("adjacency spectrum degenerate: graph has no edges");

    constexpr int kMaxIterations = 1000;
    constexpr double kTolerance = 1e-10;

    auto multiply = [&g, n](const std::vector<double>& x) {
        std::vector<double> y(static_cast<std::size_t>(n), 0.0);
        for (NodeId v = 0; v < n; ++v) {
            double acc = 0.0;
            for (NodeId w : g.neighbors(v)) acc += x[static_cast<std::size_t>(w)];
            y[static_cast<std::size_t>(v)] = acc;
        }
        return y;
    };
    auto normalize = [](std::vector<double>& x) {
        double norm = 0.0;
        for (double t : x) norm += t * t;
        norm = std::sqrt(norm);
        if (norm == 0.0)
            throw DegenerateSpectrumError("power iteration collapsed to the zero vector");
        for (double& t : x) t /= norm;
    };
    auto max_diff = [](const std::vector<double>& a, const std::vector<double>& b) {
        double d = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
        return d;
    };

    std::vector<double> prev2;
    std::vector<double> prev(static_cast<std::size_t>(n),
                             1.0 / std::sqrt(static_cast<double>(n)));
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        std::vector<double> next = multiply(prev);
        normalize(next);
        if (max_diff(next, prev) < kTolerance) return next;
        // A bipartite spectrum (+/- lambda_max) makes iterates alternate; one
        // smoothing step removes the oscillating component.
        if (!prev2.empty() && max_diff(next, prev2) < kTolerance) {
            for (std::size_t i = 0; i < next.size(); ++i) next[i] += prev[i];
            normalize(next);
        }
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    throw ConvergenceError("power iteration did not converge within 1000 iterations");
}

double avg_clustering(const Graph& g) {
    require_nodes(g, 1, "avg_clustering");
    return mean(node_clustering(g));
}

double avg_betweenness(const Graph& g) {
    require_nodes(g, 1, "avg_betweenness");
    return mean(node_betweenness(g));
}

double avg_closeness(const Graph& g) {
    require_nodes(g, 2, "avg_closeness");
    return mean(node_closeness(g));
}

double avg_eigenvector(const Graph& g) { return mean(node_eigenvector(g)); }

AttributeVector attribute_vector(const Graph& g) {
    require_nodes(g, 2, "attribute_vector");
    if (g.edge_count() < 1) throw InvalidInputError("attribute_vector requires at least one edge");

    AttributeVector a;
    a.n = g.node_count();
    a.m = g.edge_count();
    a.avg_degree = average_degree(g);
    a.leaf_proportion = leaf_proportion(g);
    for (NodeId v = 0; v < g.node_count(); ++v) a.max_degree = std::max(a.max_degree, g.degree(v));
    a.clustering = avg_clustering(g);
    a.betweenness = avg_betweenness(g);
    a.closeness = avg_closeness(g);
    a.eigenvector = avg_eigenvector(g);
    return a;
}

std::string attribute_csv_header() {
    return "graph_id,n,m,avg_degree,leaf_prop,max_degree,clustering,betweenness,closeness,"
           "eigenvector,label";
}

std::string attribute_csv_row(int graph_id, const AttributeVector& a, int label) {
    char buf[320];
    std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.12g,%.12g,%d,%.12g,%.12g,%.12g,%.12g,%d",
                  graph_id, a.n, a.m, a.avg_degree, a.leaf_proportion, a.max_degree, a.clustering,
                  a.betweenness, a.closeness, a.eigenvector, label);
    return std::string(buf);
}

}  // namespace graphaug
