#include "graphaug/eval.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

#include "graphaug/augment.hpp"
#include "graphaug/rng.hpp"

namespace graphaug {

void SplitSpec::validate() const {
    if (train_fraction <= 0.0 || val_fraction <= 0.0 || test_fraction <= 0.0)
        throw InvalidInputError("split fractions must be positive");
    if (std::fabs(train_fraction + val_fraction + test_fraction - 1.0) > 1e-9)
        throw InvalidInputError("split fractions must sum to 1");
}

namespace {

// Largest-remainder apportionment of `total` into three parts.
std::array<std::size_t, 3> split_sizes(std::size_t total, const SplitSpec& spec) {
    const double fractions[3] = {spec.train_fraction, spec.val_fraction, spec.test_fraction};
    std::array<std::size_t, 3> sizes{};
    double remainders[3];
    std::size_t assigned = 0;
    for (int i = 0; i < 3; ++i) {
        const double exact = fractions[i] * static_cast<double>(total);
        sizes[static_cast<std::size_t>(i)] = static_cast<std::size_t>(std::floor(exact + 1e-9));
        remainders[i] = exact - std::floor(exact + 1e-9);
        assigned += sizes[static_cast<std::size_t>(i)];
    }
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&remainders](int a, int b) {
        if (remainders[a] != remainders[b]) return remainders[a] > remainders[b];
        return a > b;  // remainder ties favor the later split
    });
    for (std::size_t leftover = total - assigned, i = 0; i < leftover; ++i)
        ++sizes[static_cast<std::size_t>(order[i % 3])];
    return sizes;
}

void append_shuffled_split(const GraphDataset& ds, std::vector<std::size_t> indices,
                           const SplitSpec& spec, Rng& rng, DatasetSplit& out) {
    for (std::size_t i = 0; i + 1 < indices.size(); ++i) {
        const std::size_t j = i + uniform_below(rng, indices.size() - i);
        std::swap(indices[i], indices[j]);
    }
    const auto sizes = split_sizes(indices.size(), spec);
    std::size_t cursor = 0;
    for (std::size_t part = 0; part < 3; ++part) {
        GraphDataset& bucket = part == 0 ? out.train : part == 1 ? out.val : out.test;
        for (std::size_t i = 0; i < sizes[part]; ++i)
            bucket.graphs.push_back(ds.graphs[indices[cursor++]]);
    }
}

}  // namespace

DatasetSplit split_dataset(const GraphDataset& ds, const SplitSpec& spec) {
    spec.validate();
    if (ds.empty()) throw InvalidInputError("cannot split an empty dataset");

    DatasetSplit split;
    split.train.name = ds.name + "_train";
    split.val.name = ds.name + "_val";
    split.test.name = ds.name + "_test";

    Rng rng(spec.seed);
    if (spec.stratified) {
        std::map<int, std::vector<std::size_t>> by_label;
        for (std::size_t i = 0; i < ds.graphs.size(); ++i)
            by_label[ds.graphs[i].label].push_back(i);
        for (auto& [label, indices] : by_label) {
            if (indices.size() < 3)
                throw StratificationError("class " + std::to_string(label) + " has only " +
                                          std::to_string(indices.size()) +
                                          " member(s); stratified split needs at least 3");
            append_shuffled_split(ds, std::move(indices), spec, rng, split);
        }
    } else {
        std::vector<std::size_t> indices(ds.graphs.size());
        std::iota(indices.begin(), indices.end(), std::size_t{0});
        append_shuffled_split(ds, std::move(indices), spec, rng, split);
    }
    return split;
}

GraphDataset merge_train(const GraphDataset& train, const GraphDataset& aug) {
    if (aug.size() > train.size())
        throw InvalidInputError("augmented set larger than training set");
    if (!aug.empty()) {
        const std::set<int> train_labels = train.label_alphabet();
        for (const LabeledGraph& lg : aug.graphs) {
            if (train_labels.count(lg.label) == 0)
                throw LabelError("augmented label " + std::to_string(lg.label) +
                                 " missing from the training alphabet");
        }
    }
    GraphDataset merged;
    merged.name = train.name;
    merged.graphs = train.graphs;
    merged.graphs.insert(merged.graphs.end(), aug.graphs.begin(), aug.graphs.end());
    return merged;
}

AttributeVector attribute_features(const Graph& g) {
    if (g.node_count() < 1) throw InvalidInputError("attribute features need at least one node");
    AttributeVector a;
    a.n = g.node_count();
    a.m = g.edge_count();
    a.avg_degree = average_degree(g);
    a.leaf_proportion = leaf_proportion(g);
    for (NodeId v = 0; v < g.node_count(); ++v) a.max_degree = std::max(a.max_degree, g.degree(v));
    a.clustering = avg_clustering(g);
    a.betweenness = avg_betweenness(g);
    a.closeness = g.node_count() >= 2 ? avg_closeness(g) : 0.0;
    a.eigenvector = g.edge_count() >= 1 ? avg_eigenvector(g) : 0.0;
    return a;
}

namespace {

std::array<double, 9> feature_row(const Graph& g) {
    const AttributeVector a = attribute_features(g);
    return {static_cast<double>(a.n),
            static_cast<double>(a.m),
            a.avg_degree,
            a.leaf_proportion,
            static_cast<double>(a.max_degree),
            a.clustering,
            a.betweenness,
            a.closeness,
            a.eigenvector};
}

}  // namespace

double knn_baseline_accuracy(const GraphDataset& train, const GraphDataset& test, int k,
                             std::vector<std::string>* warnings) {
    if (train.empty()) throw InvalidInputError("k-NN needs a non-empty training set");
    if (test.empty()) throw InvalidInputError("k-NN needs a non-empty test set");
    if (k < 1 || static_cast<std::size_t>(k) > train.size())
        throw InvalidInputError("k must lie in [1, |train|]");

    constexpr std::size_t kColumns = 9;
    static const char* const kColumnNames[kColumns] = {
        "n", "m", "avg_degree", "leaf_prop", "max_degree",
        "clustering", "betweenness", "closeness", "eigenvector"};

    std::vector<std::array<double, kColumns>> train_rows;
    train_rows.reserve(train.size());
    for (const LabeledGraph& lg : train.graphs) train_rows.push_back(feature_row(lg.graph));

    // z-score statistics from train only
    std::array<double, kColumns> mean{}, stddev{};
    for (const auto& row : train_rows)
        for (std::size_t c = 0; c < kColumns; ++c) mean[c] += row[c];
    for (std::size_t c = 0; c < kColumns; ++c) mean[c] /= static_cast<double>(train_rows.size());
    for (const auto& row : train_rows)
        for (std::size_t c = 0; c < kColumns; ++c)
            stddev[c] += (row[c] - mean[c]) * (row[c] - mean[c]);
    std::vector<std::size_t> columns;
    for (std::size_t c = 0; c < kColumns; ++c) {
        stddev[c] = std::sqrt(stddev[c] / static_cast<double>(train_rows.size()));
        if (stddev[c] > 1e-12) {
            columns.push_back(c);
        } else if (warnings) {
            warnings->push_back(std::string("dropping zero-variance feature column '") +
                                kColumnNames[c] + "'");
        }
    }
    if (columns.empty()) throw InvalidInputError("every feature column is degenerate");

    auto normalize = [&](const std::array<double, kColumns>& row) {
        std::vector<double> z(columns.size());
        for (std::size_t i = 0; i < columns.size(); ++i)
            z[i] = (row[columns[i]] - mean[columns[i]]) / stddev[columns[i]];
        return z;
    };

    std::vector<std::vector<double>> train_z;
    train_z.reserve(train_rows.size());
    for (const auto& row : train_rows) train_z.push_back(normalize(row));

    std::size_t correct = 0;
    for (const LabeledGraph& probe : test.graphs) {
        const std::vector<double> z = normalize(feature_row(probe.graph));

        std::vector<std::pair<double, std::size_t>> distances;  // (distance, train index)
        distances.reserve(train_z.size());
        for (std::size_t i = 0; i < train_z.size(); ++i) {
            double d2 = 0.0;
            for (std::size_t c = 0; c < z.size(); ++c) {
                const double diff = z[c] - train_z[i][c];
                d2 += diff * diff;
            }
            distances.emplace_back(std::sqrt(d2), i);
        }
        std::partial_sort(distances.begin(), distances.begin() + k, distances.end());

        std::map<int, std::pair<int, double>> votes;  // label -> (count, summed distance)
        for (int i = 0; i < k; ++i) {
            auto& [count, sum] = votes[train.graphs[distances[static_cast<std::size_t>(i)].second].label];
            ++count;
            sum += distances[static_cast<std::size_t>(i)].first;
        }
        int best_label = votes.begin()->first;
        auto best = votes.begin()->second;
        for (const auto& [label, tally] : votes) {
            if (tally.first > best.first ||
                (tally.first == best.first && tally.second < best.second)) {
                best_label = label;  // map order makes the final tie-break the smaller label
                best = tally;
            }
        }
        if (best_label == probe.label) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(test.size());
}

double relative_gain(double acc_aug, double acc_ori) {
    if (acc_ori <= 0.0) throw UndefinedGainError("relative gain undefined for acc_ori <= 0");
    return (acc_aug - acc_ori) / acc_ori;
}

double success_rate(const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.empty()) throw InvalidInputError("success_rate needs at least one entry");
    std::size_t successes = 0;
    for (const auto& [acc_aug, acc_ori] : pairs)
        if (acc_aug > acc_ori) ++successes;
    return static_cast<double>(successes) / static_cast<double>(pairs.size());
}

GraphDataset filter_hook(const GraphDataset& aug, const GraphFilter& predicate) {
    if (!predicate) return aug;
    GraphDataset kept;
    kept.name = aug.name;
    for (const LabeledGraph& lg : aug.graphs)
        if (predicate(lg)) kept.graphs.push_back(lg);
    return kept;
}

GraphDataset augment_dataset(const GraphDataset& ds, const AugmentationConfig& cfg,
                             int* kept_original, std::vector<std::string>* notes) {
    GraphDataset out;
    out.name = ds.name + "_aug_" + strategy_token(cfg.strategy);
    out.graphs.reserve(ds.size());
    int kept = 0;
    for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
        // documented per-graph derivation: seed xor graph index
        Rng rng(cfg.seed ^ static_cast<std::uint64_t>(i));
        const LabeledGraph& src = ds.graphs[i];
        try {
            AugmentOutcome outcome = augment_graph(src.graph, cfg, rng);
            if (outcome.skipped) {
                ++kept;
                if (notes)
                    notes->push_back("graph " + std::to_string(i) + ": skipped, kept original");
            } else if (outcome.partial() && notes) {
                notes->push_back("graph " + std::to_string(i) + ": applied " +
                                 std::to_string(outcome.applied_rewires) + "/" +
                                 std::to_string(outcome.target_rewires) + " rewires");
            }
            out.graphs.push_back(LabeledGraph{std::move(outcome.graph), src.label});
        } catch (const Error& e) {
            ++kept;
            if (notes)
                notes->push_back("graph " + std::to_string(i) + ": failed (" + e.what() +
                                 "), kept original");
            out.graphs.push_back(src);
        }
    }
    if (kept_original) *kept_original = kept;
    return out;
}

std::vector<StrategyReport> run_evaluation(const GraphDataset& ds, const EvalOptions& opts) {
    if (opts.repeats < 1) throw InvalidInputError("repeats must be >= 1");
    if (opts.strategies.empty()) throw InvalidInputError("no strategies requested");

    struct Accumulator {
        double ori = 0.0;
        double aug = 0.0;
        int failures = 0;
        std::string note;
    };
    std::vector<Accumulator> acc(opts.strategies.size());
    double baseline_sum = 0.0;

    for (int rep = 0; rep < opts.repeats; ++rep) {
        SplitSpec spec = opts.split;
        if (rep > 0) spec.seed = derive_seed(opts.split.seed, static_cast<std::uint64_t>(rep));
        const DatasetSplit split = split_dataset(ds, spec);
        const double acc_ori = knn_baseline_accuracy(split.train, split.test, opts.k);
        baseline_sum += acc_ori;

        for (std::size_t s = 0; s < opts.strategies.size(); ++s) {
            AugmentationConfig cfg;
            cfg.strategy = opts.strategies[s];
            cfg.alpha = opts.alpha;
            cfg.iterations = opts.iterations;
            cfg.seed = rep == 0 ? opts.seed : derive_seed(opts.seed, static_cast<std::uint64_t>(rep));
            cfg.max_attempts_per_swap = opts.max_attempts_per_swap;
            try {
                GraphDataset aug = augment_dataset(split.train, cfg);
                aug = filter_hook(aug, opts.filter);
                const GraphDataset enlarged = merge_train(split.train, aug);
                acc[s].aug += knn_baseline_accuracy(enlarged, split.test, opts.k);
                acc[s].ori += acc_ori;
            } catch (const Error& e) {
                ++acc[s].failures;
                acc[s].note = e.what();
            }
        }
    }

    std::vector<StrategyReport> reports;
    reports.reserve(opts.strategies.size() + 1);
    StrategyReport baseline;
    baseline.strategy = "baseline";
    baseline.acc_ori = baseline_sum / opts.repeats;
    baseline.acc_aug = baseline.acc_ori;
    baseline.gain = 0.0;
    baseline.success = false;
    baseline.completed = true;
    reports.push_back(baseline);

    for (std::size_t s = 0; s < opts.strategies.size(); ++s) {
        StrategyReport r;
        r.strategy = strategy_token(opts.strategies[s]);
        const int runs = opts.repeats - acc[s].failures;
        if (runs > 0) {
            r.acc_ori = acc[s].ori / runs;
            r.acc_aug = acc[s].aug / runs;
            r.gain = r.acc_ori > 0.0 ? relative_gain(r.acc_aug, r.acc_ori) : 0.0;
            r.success = r.acc_aug > r.acc_ori;
            r.completed = true;
            if (acc[s].failures > 0)
                r.note = std::to_string(acc[s].failures) + " repeat(s) failed: " + acc[s].note;
        } else {
            r.completed = false;
            r.note = acc[s].note;
        }
        reports.push_back(r);
    }
    return reports;
}

std::string report_csv(const std::vector<StrategyReport>& reports) {
    std::string out = "strategy,acc_ori,acc_aug,relative_gain,success\n";
    char buf[256];
    for (const StrategyReport& r : reports) {
        if (r.completed) {
            std::snprintf(buf, sizeof(buf), "%s,%.12g,%.12g,%.12g,%d\n", r.strategy.c_str(),
                          r.acc_ori, r.acc_aug, r.gain, r.success ? 1 : 0);
            out += buf;
        } else {
            out += r.strategy + ",,,,\n";
        }
    }
    return out;
}

}  // namespace graphaug
