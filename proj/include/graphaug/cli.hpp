#pragma once

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace graphaug::cli {

struct AugmentArgs {
    std::string data_dir;
    std::string name;
    std::string out_dir;
    std::string strategy = "1k";
    double alpha = 0.2;
    int iterations = 5;
    std::uint64_t seed = 0;
    int max_attempts = 0;
};

struct StatsArgs {
    std::string data_dir;
    std::string name;
};

struct EvalArgs {
    std::string data_dir;
    std::string name;
    std::string out_dir;
    std::vector<std::string> strategies;  // empty selects all eight
    double alpha = 0.2;
    int iterations = 5;
    std::uint64_t seed = 0;
    std::string split = "7:1:2";
    int k = 3;
    int repeats = 1;
};

/// Exit 0 on success, 1 on dataset errors, 2 when augmentation failed for
/// every graph.
int cmd_augment(const AugmentArgs& args, std::ostream& out = std::cout,
                std::ostream& err = std::cerr);

/// Prints a summary header and the attribute CSV. Exit 0/1.
int cmd_stats(const StatsArgs& args, std::ostream& out = std::cout,
              std::ostream& err = std::cerr);

/// Runs split/augment/merge/classify for each strategy and writes report.csv
/// and attributes.csv under out_dir. Exit 0 if at least one strategy completed.
int cmd_eval(const EvalArgs& args, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);

}  // namespace graphaug::cli
