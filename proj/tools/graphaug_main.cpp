#include <CLI11.hpp>

#include "graphaug/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Null-model based data augmentation for graph classification datasets"};
    app.require_subcommand(1);

    graphaug::cli::AugmentArgs aug;
    CLI::App* augment = app.add_subcommand("augment", "Write an augmented copy of a dataset");
    augment->add_option("--data", aug.data_dir, "Dataset directory")->required();
    augment->add_option("--name", aug.name, "Dataset name (file prefix)")->required();
    augment->add_option("--out", aug.out_dir, "Output directory")->required();
    augment->add_option("--strategy", aug.strategy,
                        "0k|1k|2k|lna|ada-c|ada-bc|ada-cc|ada-ec");
    augment->add_option("--alpha", aug.alpha, "Cost coefficient in (0,1]")->default_val(0.2);
    augment->add_option("--iterations", aug.iterations, "ADA candidate count T")->default_val(5);
    augment->add_option("--seed", aug.seed, "Master seed")->default_val(0);
    augment->add_option("--max-attempts", aug.max_attempts,
                        "Attempt budget per rewire (0 = 100*m)");

    graphaug::cli::StatsArgs stats;
    CLI::App* stats_cmd = app.add_subcommand("stats", "Print dataset summary and attribute CSV");
    stats_cmd->add_option("--data", stats.data_dir, "Dataset directory")->required();
    stats_cmd->add_option("--name", stats.name, "Dataset name (file prefix)")->required();

    graphaug::cli::EvalArgs eval;
    CLI::App* eval_cmd =
        app.add_subcommand("eval", "Split, augment, and score strategies with the k-NN baseline");
    eval_cmd->add_option("--data", eval.data_dir, "Dataset directory")->required();
    eval_cmd->add_option("--name", eval.name, "Dataset name (file prefix)")->required();
    eval_cmd->add_option("--out", eval.out_dir, "Report directory")->required();
    eval_cmd->add_option("--strategies", eval.strategies, "Comma-separated strategy list")
        ->delimiter(',');
    eval_cmd->add_option("--alpha", eval.alpha, "Cost coefficient in (0,1]")->default_val(0.2);
    eval_cmd->add_option("--iterations", eval.iterations, "ADA candidate count T")->default_val(5);
    eval_cmd->add_option("--seed", eval.seed, "Master seed")->default_val(0);
    eval_cmd->add_option("--split", eval.split, "train:val:test ratio")->default_val("7:1:2");
    eval_cmd->add_option("--k", eval.k, "k-NN neighbor count")->default_val(3);
    eval_cmd->add_option("--repeats", eval.repeats, "Number of repeated splits")->default_val(1);

    CLI11_PARSE(app, argc, argv);

    if (augment->parsed()) return graphaug::cli::cmd_augment(aug);
    if (stats_cmd->parsed()) return graphaug::cli::cmd_stats(stats);
    return graphaug::cli::cmd_eval(eval);
}
