#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "archrec/mapping.hpp"
#include "archrec/scanner.hpp"

namespace archrec {

/// Deduplicated directed graph of file -> file include edges. Nodes are all
/// corpus files, including isolated ones; self-edges are kept and flagged.
class FileGraph {
public:
    FileGraph() = default;
    FileGraph(std::vector<SourceFile> nodes, std::vector<std::pair<int, int>> edges);

    const std::vector<SourceFile>& nodes() const { return nodes_; }
    /// Index pairs into nodes(), sorted and unique.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::vector<int> self_edge_nodes() const;
    bool has_self_edges() const;

    friend bool operator==(const FileGraph&, const FileGraph&) = default;

private:
    std::vector<SourceFile> nodes_;  // sorted by abs_path
    std::vector<std::pair<int, int>> edges_;
};

/// Collapses duplicate pairs; throws Error if an edge references a file that
/// is not in `files`.
FileGraph build_file_graph(std::vector<SourceFile> files,
                           const std::vector<std::pair<SourceFile, SourceFile>>& edges);

/// Subsystem-level directed weighted graph lifted from a FileGraph.
struct ArchModel {
    std::string engine_id;
    std::set<Subsystem> nodes;  // detected subsystems (plus UNK when included)
    std::map<std::pair<Subsystem, Subsystem>, int> edges;  // weight = distinct file pairs
    std::map<Subsystem, std::size_t> file_counts;

    int total_weight() const;
    int edge_count() const { return static_cast<int>(edges.size()); }
    int self_loop_count() const;
    int inter_edge_count() const;

    friend bool operator==(const ArchModel&, const ArchModel&) = default;
};

/// `assignment` is parallel to graph.nodes(). Edges with a UNK endpoint are
/// dropped unless include_unk is set, in which case UNK becomes a node.
ArchModel lift(const FileGraph& graph, const std::vector<Subsystem>& assignment,
               std::string engine_id, bool include_unk = false);

/// JSON schema: {engine, nodes:[{code, files}], edges:[{from, to, weight}]},
/// stable key and element order.
std::string model_to_json(const ArchModel& model);
ArchModel model_from_json(std::string_view text);

}  // namespace archrec
