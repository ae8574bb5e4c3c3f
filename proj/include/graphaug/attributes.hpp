#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graphaug/graph.hpp"

namespace graphaug {

/// P_D: probability of each occurring degree, n_k / n.
struct DegreeDistribution {
    std::map<int, double> prob;
};

/// J_D(k1,k2) = mu * m(k1,k2) / (2m) with mu = 2 when k1 == k2, else 1.
/// edge_counts keeps the raw m(k1,k2) multiset; keys are (k1 <= k2).
struct JointDegreeDistribution {
    std::map<std::pair<int, int>, double> values;
    std::map<std::pair<int, int>, int> edge_counts;
};

struct AttributeVector {
    int n = 0;
    int m = 0;
    double avg_degree = 0.0;
    double leaf_proportion = 0.0;
    int max_degree = 0;
    double clustering = 0.0;
    double betweenness = 0.0;
    double closeness = 0.0;
    double eigenvector = 0.0;
};

double average_degree(const Graph& g);
DegreeDistribution degree_distribution(const Graph& g);
double leaf_proportion(const Graph& g);
JointDegreeDistribution joint_degree_distribution(const Graph& g);

// Per-node values; the graph-level attribute is always their mean.
std::vector<double> node_clustering(const Graph& g);
std::vector<double> node_betweenness(const Graph& g);
std::vector<double> node_closeness(const Graph& g);
std::vector<double> node_eigenvector(const Graph& g);

double avg_clustering(const Graph& g);

/// Mean node betweenness over unordered source-target pairs (s < t, s != i != t);
/// pairs in different components contribute 0.
double avg_betweenness(const Graph& g);

/// Mean node closeness. On a connected graph the node term is n / sum_j d_ij;
/// on a disconnected one the sum is restricted to the node's component and the
/// term is scaled by component_size / n, so the connected case is unchanged.
double avg_closeness(const Graph& g);

/// Mean entry of the principal adjacency eigenvector, computed by power
/// iteration and normalized to unit Euclidean norm with nonnegative entries.
double avg_eigenvector(const Graph& g);

AttributeVector attribute_vector(const Graph& g);

std::string attribute_csv_header();
std::string attribute_csv_row(int graph_id, const AttributeVector& a, int label);

}  // namespace graphaug
