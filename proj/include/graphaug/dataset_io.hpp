#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "graphaug/graph.hpp"

namespace graphaug {

struct LabeledGraph {
    Graph graph;
    int label = 0;
};

struct GraphDataset {
    std::string name;
    std::vector<LabeledGraph> graphs;

    std::size_t size() const { return graphs.size(); }
    bool empty() const { return graphs.empty(); }
    std::set<int> label_alphabet() const;
};

/// Reads <name>_A.txt, <name>_graph_indicator.txt and <name>_graph_labels.txt
/// from dir. Node ids are remapped per graph to 0..n_i-1; both orientations of
/// an edge collapse to one undirected edge. Self-loops in the input are a
/// format error; optional attribute side files are ignored with a warning.
GraphDataset read_tudataset(const std::filesystem::path& dir, const std::string& name,
                            std::vector<std::string>* warnings = nullptr);

/// Writes the three files so that read_tudataset reproduces the dataset
/// exactly (graph order, adjacency, labels). Node ids on disk are global and
/// 1-based; every edge is emitted in both orientations.
void write_tudataset(const GraphDataset& ds, const std::filesystem::path& dir);

}  // namespace graphaug
