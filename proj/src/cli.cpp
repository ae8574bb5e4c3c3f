#include "graphaug/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "graphaug/augment.hpp"
#include "graphaug/dataset_io.hpp"
#include "graphaug/eval.hpp"

namespace graphaug::cli {

namespace {

GraphDataset load(const std::string& data_dir, const std::string& name, std::ostream& err) {
    std::vector<std::string> warnings;
    GraphDataset ds = read_tudataset(data_dir, name, &warnings);
    for (const std::string& w : warnings) err << "warning: " << w << "\n";
    return ds;
}

SplitSpec parse_split(const std::string& text) {
    double a = 0, b = 0, c = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &a, &b, &c, &extra) != 3 || a <= 0 || b <= 0 ||
        c <= 0)
        throw InvalidInputError("--split expects a:b:c with positive parts, got '" + text + "'");
    SplitSpec spec;
    const double total = a + b + c;
    spec.train_fraction = a / total;
    spec.val_fraction = b / total;
    spec.test_fraction = c / total;
    return spec;
}

std::vector<Strategy> all_strategies() {
    return {Strategy::ZeroK,         Strategy::OneK,           Strategy::TwoK,
            Strategy::Lna,           Strategy::AdaClustering,  Strategy::AdaBetweenness,
            Strategy::AdaCloseness,  Strategy::AdaEigenvector};
}

}  // namespace

int cmd_augment(const AugmentArgs& args, std::ostream& out, std::ostream& err) {
    GraphDataset ds;
    AugmentationConfig cfg;
    try {
        cfg.strategy = strategy_from_token(args.strategy);
        cfg.alpha = args.alpha;
        cfg.iterations = args.iterations;
        cfg.seed = args.seed;
        cfg.max_attempts_per_swap = args.max_attempts;
        cfg.validate();
        ds = load(args.data_dir, args.name, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    int kept_original = 0;
    std::vector<std::string> notes;
    GraphDataset aug = augment_dataset(ds, cfg, &kept_original, &notes);
    for (const std::string& note : notes) out << note << "\n";
    out << "augmented " << (ds.size() - static_cast<std::size_t>(kept_original)) << "/" << ds.size()
        << " graphs (" << kept_original << " kept original)\n";

    try {
        write_tudataset(aug, std::filesystem::path(args.out_dir) / aug.name);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    out << "wrote " << (std::filesystem::path(args.out_dir) / aug.name).string() << "\n";

    return static_cast<std::size_t>(kept_original) == ds.size() ? 2 : 0;
}

int cmd_stats(const StatsArgs& args, std::ostream& out, std::ostream& err) {
    GraphDataset ds;
    try {
        ds = load(args.data_dir, args.name, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    double node_sum = 0.0, edge_sum = 0.0;
    for (const LabeledGraph& lg : ds.graphs) {
        node_sum += lg.graph.node_count();
        edge_sum += lg.graph.edge_count();
    }
    char header[160];
    std::snprintf(header, sizeof(header), "graphs=%zu classes=%zu avg_nodes=%.2f avg_edges=%.2f",
                  ds.size(), ds.label_alphabet().size(), node_sum / static_cast<double>(ds.size()),
                  edge_sum / static_cast<double>(ds.size()));
    out << header << "\n" << attribute_csv_header() << "\n";
    for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
        out << attribute_csv_row(static_cast<int>(i), attribute_features(ds.graphs[i].graph),
                                 ds.graphs[i].label)
            << "\n";
    }
    return 0;
}

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
    GraphDataset ds;
    EvalOptions opts;
    try {
        ds = load(args.data_dir, args.name, err);
        if (args.strategies.empty()) {
            opts.strategies = all_strategies();
        } else {
            for (const std::string& token : args.strategies)
                opts.strategies.push_back(strategy_from_token(token));
        }
        opts.alpha = args.alpha;
        opts.iterations = args.iterations;
        opts.seed = args.seed;
        opts.split = parse_split(args.split);
        opts.split.seed = args.seed;
        opts.k = args.k;
        opts.repeats = args.repeats;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    std::vector<StrategyReport> reports;
    try {
        reports = run_evaluation(ds, opts);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    for (const StrategyReport& r : reports) {
        if (r.completed) {
            char line[256];
            std::snprintf(line, sizeof(line), "%-8s acc_ori=%.4f acc_aug=%.4f gain=%+.4f%s",
                          r.strategy.c_str(), r.acc_ori, r.acc_aug, r.gain,
                          r.success ? " (improved)" : "");
            out << line << "\n";
            if (!r.note.empty()) err << "note: " << r.strategy << ": " << r.note << "\n";
        } else {
            out << r.strategy << " failed: " << r.note << "\n";
        }
    }

    try {
        std::filesystem::create_directories(args.out_dir);
        std::ofstream report(std::filesystem::path(args.out_dir) / "report.csv", std::ios::binary);
        report << report_csv(reports);
        std::ofstream attrs(std::filesystem::path(args.out_dir) / "attributes.csv",
                            std::ios::binary);
        attrs << attribute_csv_header() << "\n";
        for (std::size_t i = 0; i < ds.graphs.size(); ++i)
            attrs << attribute_csv_row(static_cast<int>(i), attribute_features(ds.graphs[i].graph),
                                       ds.graphs[i].label)
                  << "\n";
        if (!report.flush() || !attrs.flush())
            throw IoError("failed writing reports under " + args.out_dir);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    int completed = 0;
    for (std::size_t i = 1; i < reports.size(); ++i)
        if (reports[i].completed) ++completed;
    return completed > 0 ? 0 : 1;
}

}  // namespace graphaug::cli
