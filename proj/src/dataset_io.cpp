#include "graphaug/dataset_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

namespace graphaug {

std::set<int> GraphDataset::label_alphabet() const {
    std::set<int> labels;
    for (const LabeledGraph& lg : graphs) labels.insert(lg.label);
    return labels;
}

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open " + file.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

int parse_int(const std::string& text, const std::filesystem::path& file, std::size_t line_no) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw FormatError(file.string() + ":" + std::to_string(line_no) + ": expected integer, got '" +
                          text + "'");
    }
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos != text.size())
        throw FormatError(file.string() + ":" + std::to_string(line_no) +
                          ": trailing characters after integer in '" + text + "'");
    return value;
}

std::pair<int, int> parse_pair(const std::string& text, const std::filesystem::path& file,
                               std::size_t line_no) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw FormatError(file.string() + ":" + std::to_string(line_no) +
                          ": expected 'i, j' pair, got '" + text + "'");
    std::string left = text.substr(0, comma);
    std::string right = text.substr(comma + 1);
    auto strip = [](std::string& s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    };
    strip(left);
    strip(right);
    return {parse_int(left, file, line_no), parse_int(right, file, line_no)};
}

const char* const kSideFileSuffixes[] = {
    "_node_labels.txt",     "_edge_labels.txt",     "_node_attributes.txt",
    "_edge_attributes.txt", "_graph_attributes.txt"};

}  // namespace

GraphDataset read_tudataset(const std::filesystem::path& dir, const std::string& name,
                            std::vector<std::string>* warnings) {
    const std::filesystem::path a_file = dir / (name + "_A.txt");
    const std::filesystem::path ind_file = dir / (name + "_graph_indicator.txt");
    const std::filesystem::path lab_file = dir / (name + "_graph_labels.txt");

    const std::vector<std::string> ind_lines = read_lines(ind_file);
    const std::vector<std::string> lab_lines = read_lines(lab_file);
    if (ind_lines.empty()) throw ConsistencyError(ind_file.string() + " declares no nodes");
    if (lab_lines.empty()) throw ConsistencyError(lab_file.string() + " declares no graphs");

    const int graph_count = static_cast<int>(lab_lines.size());
    const int node_count = static_cast<int>(ind_lines.size());

    // node -> graph, plus per-graph dense local ids in global-id order
    std::vector<int> node_graph(static_cast<std::size_t>(node_count));
    std::vector<int> node_local(static_cast<std::size_t>(node_count));
    std::vector<int> graph_sizes(static_cast<std::size_t>(graph_count), 0);
    for (int i = 0; i < node_count; ++i) {
        const int gid = parse_int(ind_lines[static_cast<std::size_t>(i)], ind_file,
                                  static_cast<std::size_t>(i) + 1);
        if (gid < 1)
            throw ConsistencyError(ind_file.string() + ":" + std::to_string(i + 1) +
                                   ": graph ids are 1-based, got " + std::to_string(gid));
        if (gid > graph_count)
            throw ConsistencyError(ind_file.string() + ":" + std::to_string(i + 1) +
                                   ": node assigned to graph " + std::to_string(gid) + " but only " +
                                   std::to_string(graph_count) + " label line(s) present");
        node_graph[static_cast<std::size_t>(i)] = gid - 1;
        node_local[static_cast<std::size_t>(i)] = graph_sizes[static_cast<std::size_t>(gid - 1)]++;
    }
    for (int gi = 0; gi < graph_count; ++gi) {
        if (graph_sizes[static_cast<std::size_t>(gi)] == 0)
            throw ConsistencyError(ind_file.string() + ": graph " + std::to_string(gi + 1) +
                                   " has no nodes");
    }

    std::vector<std::unordered_set<std::uint64_t>> edge_keys(
        static_cast<std::size_t>(graph_count));
    std::vector<std::vector<Edge>> edges(static_cast<std::size_t>(graph_count));
    const std::vector<std::string> a_lines = read_lines(a_file);
    for (std::size_t ln = 0; ln < a_lines.size(); ++ln) {
        if (a_lines[ln].empty()) continue;
        const auto [gi_raw, gj_raw] = parse_pair(a_lines[ln], a_file, ln + 1);
        if (gi_raw < 1 || gi_raw > node_count || gj_raw < 1 || gj_raw > node_count)
            throw ConsistencyError(a_file.string() + ":" + std::to_string(ln + 1) + ": node id out of range");
        if (gi_raw == gj_raw)
            throw FormatError(a_file.string() + ":" + std::to_string(ln + 1) + ": self-loop on node " +
                              std::to_string(gi_raw));
        const int gi = node_graph[static_cast<std::size_t>(gi_raw - 1)];
        const int gj = node_graph[static_cast<std::size_t>(gj_raw - 1)];
        if (gi != gj)
            throw ConsistencyError(a_file.string() + ":" + std::to_string(ln + 1) +
                                   ": edge crosses graphs " + std::to_string(gi + 1) + " and " +
                                   std::to_string(gj + 1));
        const Edge e(node_local[static_cast<std::size_t>(gi_raw - 1)],
                     node_local[static_cast<std::size_t>(gj_raw - 1)]);
        if (edge_keys[static_cast<std::size_t>(gi)].insert(e.key()).second)
            edges[static_cast<std::size_t>(gi)].push_back(e);
    }

    if (warnings) {
        for (const char* suffix : kSideFileSuffixes) {
            const std::filesystem::path side = dir / (name + suffix);
            if (std::filesystem::exists(side))
                warnings->push_back("ignoring attribute file " + side.string());
        }
    }

    GraphDataset ds;
    ds.name = name;
    ds.graphs.reserve(static_cast<std::size_t>(graph_count));
    for (int gi = 0; gi < graph_count; ++gi) {
        const int label = parse_int(lab_lines[static_cast<std::size_t>(gi)], lab_file,
                                    static_cast<std::size_t>(gi) + 1);
        ds.graphs.push_back(LabeledGraph{
            Graph(graph_sizes[static_cast<std::size_t>(gi)], std::move(edges[static_cast<std::size_t>(gi)])),
            label});
    }
    return ds;
}

void write_tudataset(const GraphDataset& ds, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);

    auto open = [&dir](const std::string& filename) {
        std::ofstream out(dir / filename, std::ios::binary);  // LF endings everywhere
        if (!out) throw IoError("cannot write " + (dir / filename).string());
        return out;
    };

    std::ofstream a_out = open(ds.name + "_A.txt");
    std::ofstream ind_out = open(ds.name + "_graph_indicator.txt");
    std::ofstream lab_out = open(ds.name + "_graph_labels.txt");

    int offset = 0;  // global ids are 1-based and contiguous across graphs
    for (std::size_t gi = 0; gi < ds.graphs.size(); ++gi) {
        const LabeledGraph& lg = ds.graphs[gi];
        for (NodeId v = 0; v < lg.graph.node_count(); ++v) ind_out << (gi + 1) << "\n";
        lab_out << lg.label << "\n";
        for (const Edge& e : lg.graph.edges()) {
            const int u = offset + e.u + 1;
            const int v = offset + e.v + 1;
            a_out << u << "," << v << "\n" << v << "," << u << "\n";
        }
        offset += lg.graph.node_count();
    }

    if (!a_out.flush() || !ind_out.flush() || !lab_out.flush())
        throw IoError("failed writing dataset files under " + dir.string());
}

}  // namespace graphaug
