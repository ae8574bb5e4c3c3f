#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "graphaug/attributes.hpp"
#include "graphaug/config.hpp"
#include "graphaug/dataset_io.hpp"

namespace graphaug {

struct SplitSpec {
    double train_fraction = 0.7;
    double val_fraction = 0.1;
    double test_fraction = 0.2;
    std::uint64_t seed = 0;
    bool stratified = true;

    void validate() const;
};

struct DatasetSplit {
    GraphDataset train;
    GraphDataset val;
    GraphDataset test;
};

/// Split sizes floor each fraction, then hand leftover items to the splits
/// with the largest fractional remainders (188 graphs at 7:1:2 gives
/// 131/19/38). Deterministic per seed; stratification shuffles within classes.
DatasetSplit split_dataset(const GraphDataset& ds, const SplitSpec& spec);

/// D'_train: concatenation of train and aug, labels preserved.
GraphDataset merge_train(const GraphDataset& train, const GraphDataset& aug);

/// Attribute features for classification. Same as attribute_vector except that
/// degenerate graphs stay usable: closeness of a 1-node graph and eigenvector
/// of an edgeless graph are 0.
AttributeVector attribute_features(const Graph& g);

/// Majority vote of the k nearest training graphs under Euclidean distance
/// between z-score-normalized attribute vectors (statistics fit on train
/// only; zero-variance columns dropped with a warning). Vote ties break by
/// smaller summed distance, then smaller label.
double knn_baseline_accuracy(const GraphDataset& train, const GraphDataset& test, int k,
                             std::vector<std::string>* warnings = nullptr);

/// R_gain = (acc_aug - acc_ori) / acc_ori, as a fraction.
double relative_gain(double acc_aug, double acc_ori);

/// Fraction of (acc_aug, acc_ori) pairs with acc_aug strictly greater.
double success_rate(const std::vector<std::pair<double, double>>& pairs);

using GraphFilter = std::function<bool(const LabeledGraph&)>;

/// Keeps the accepted subset in order; an empty predicate accepts everything.
GraphDataset filter_hook(const GraphDataset& aug, const GraphFilter& predicate = {});

struct StrategyReport {
    std::string strategy;
    double acc_ori = 0.0;
    double acc_aug = 0.0;
    double gain = 0.0;
    bool success = false;
    bool completed = false;
    std::string note;
};

struct EvalOptions {
    std::vector<Strategy> strategies;
    double alpha = 0.2;
    int iterations = 5;
    std::uint64_t seed = 0;
    SplitSpec split;
    int k = 3;
    int repeats = 1;
    int max_attempts_per_swap = 0;
    GraphFilter filter;
};

/// Full pipeline per strategy: split, augment the training graphs (per-graph
/// seed = seed xor graph index), filter, merge, classify, report. The first
/// report row is the un-augmented baseline. Accuracies are means over
/// `repeats` splits with derived seeds.
std::vector<StrategyReport> run_evaluation(const GraphDataset& ds, const EvalOptions& opts);

std::string report_csv(const std::vector<StrategyReport>& reports);

/// One augmented graph per input graph; failed or skipped augmentations keep
/// the source graph and are counted in `kept_original`.
GraphDataset augment_dataset(const GraphDataset& ds, const AugmentationConfig& cfg,
                             int* kept_original = nullptr,
                             std::vector<std::string>* notes = nullptr);

}  // namespace graphaug
