#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "graphaug/dataset_io.hpp"
#include "oracles.hpp"

using namespace graphaug;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("graphaug_test_" + tag + "_" +
                                            std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

GraphDataset random_dataset(const std::string& name, int graphs, Rng& rng) {
    GraphDataset ds;
    ds.name = name;
    for (int i = 0; i < graphs; ++i) {
        const int n = uniform_int(rng, 1, 12);
        Graph g = i % 3 == 2 ? Graph(n, {}) : oracle::er_graph(n, 0.4, rng);
        ds.graphs.push_back(LabeledGraph{std::move(g), uniform_int(rng, 0, 2)});
    }
    return ds;
}

}  // namespace

TEST_CASE("minimal well-formed dataset parses to one K2") {
    TempDir dir("k2");
    write_file(dir.path / "tiny_A.txt", "1, 2\n2, 1\n");
    write_file(dir.path / "tiny_graph_indicator.txt", "1\n1\n");
    write_file(dir.path / "tiny_graph_labels.txt", "1\n");

    const GraphDataset ds = read_tudataset(dir.path, "tiny");
    REQUIRE(ds.size() == 1);
    CHECK(ds.graphs[0].graph == Graph(2, {{0, 1}}));
    CHECK(ds.graphs[0].label == 1);
    CHECK(ds.label_alphabet() == std::set<int>{1});
}

TEST_CASE("indicator referencing a graph with no label is a consistency error") {
    TempDir dir("badind");
    write_file(dir.path / "bad_A.txt", "1, 2\n2, 1\n");
    write_file(dir.path / "bad_graph_indicator.txt", "1\n2\n");
    write_file(dir.path / "bad_graph_labels.txt", "1\n");
    CHECK_THROWS_AS(read_tudataset(dir.path, "bad"), ConsistencyError);
}

TEST_CASE("self-loops and cross-graph edges are rejected with context") {
    TempDir dir("loop");
    write_file(dir.path / "loop_A.txt", "1, 1\n");
    write_file(dir.path / "loop_graph_indicator.txt", "1\n1\n");
    write_file(dir.path / "loop_graph_labels.txt", "0\n");
    try {
        read_tudataset(dir.path, "loop");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("loop_A.txt:1") != std::string::npos);
    }

    TempDir dir2("cross");
    write_file(dir2.path / "cross_A.txt", "1, 3\n");
    write_file(dir2.path / "cross_graph_indicator.txt", "1\n1\n2\n");
    write_file(dir2.path / "cross_graph_labels.txt", "0\n1\n");
    CHECK_THROWS_AS(read_tudataset(dir2.path, "cross"), ConsistencyError);
}

TEST_CASE("missing files surface as io errors") {
    TempDir dir("missing");
    CHECK_THROWS_AS(read_tudataset(dir.path, "nothing"), IoError);
}

TEST_CASE("attribute side files produce a warning") {
    TempDir dir("side");
    write_file(dir.path / "s_A.txt", "1, 2\n2, 1\n");
    write_file(dir.path / "s_graph_indicator.txt", "1\n1\n");
    write_file(dir.path / "s_graph_labels.txt", "0\n");
    write_file(dir.path / "s_node_labels.txt", "0\n0\n");

    std::vector<std::string> warnings;
    read_tudataset(dir.path, "s", &warnings);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("s_node_labels.txt") != std::string::npos);
}

TEST_CASE("duplicate orientations collapse to one undirected edge") {
    TempDir dir("dup");
    write_file(dir.path / "d_A.txt", "1, 2\n2, 1\n1, 2\n2, 3\n3, 2\n");
    write_file(dir.path / "d_graph_indicator.txt", "1\n1\n1\n");
    write_file(dir.path / "d_graph_labels.txt", "5\n");
    const GraphDataset ds = read_tudataset(dir.path, "d");
    CHECK(ds.graphs[0].graph == Graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("write then read is the identity, including edgeless members") {
    Rng rng(314);
    TempDir dir("roundtrip");
    for (int trial = 0; trial < 10; ++trial) {
        const GraphDataset ds = random_dataset("rt", uniform_int(rng, 1, 8), rng);
        const fs::path sub = dir.path / ("case" + std::to_string(trial));
        write_tudataset(ds, sub);
        const GraphDataset back = read_tudataset(sub, "rt");

        REQUIRE(back.size() == ds.size());
        for (std::size_t i = 0; i < ds.size(); ++i) {
            CHECK(back.graphs[i].graph == ds.graphs[i].graph);
            CHECK(back.graphs[i].label == ds.graphs[i].label);
        }
    }
}

TEST_CASE("writer output is byte-stable") {
    Rng rng(1000);
    const GraphDataset ds = random_dataset("stable", 5, rng);
    TempDir dir("stability");
    write_tudataset(ds, dir.path / "a");
    write_tudataset(ds, dir.path / "b");
    for (const char* suffix : {"_A.txt", "_graph_indicator.txt", "_graph_labels.txt"}) {
        std::ifstream fa(dir.path / "a" / ("stable" + std::string(suffix)), std::ios::binary);
        std::ifstream fb(dir.path / "b" / ("stable" + std::string(suffix)), std::ios::binary);
        const std::string ca((std::istreambuf_iterator<char>(fa)),
                             std::istreambuf_iterator<char>());
        const std::string cb((std::istreambuf_iterator<char>(fb)),
                             std::istreambuf_iterator<char>());
        CHECK(ca == cb);
        if (suffix == std::string("_graph_labels.txt")) CHECK_FALSE(ca.empty());
    }
}
