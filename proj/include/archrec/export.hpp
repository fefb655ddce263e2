#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "archrec/mapping.hpp"
#include "archrec/metrics.hpp"
#include "archrec/model.hpp"

namespace archrec {

/// Placement of the 16 subsystem boxes on the architectural map. Center,
/// ring and undetected sets partition the code universe of the model.
struct LayoutSpec {
    std::vector<Subsystem> center_codes;      // at most 4
    std::vector<Subsystem> ring_codes;        // remaining detected, alphabetical
    std::vector<Subsystem> undetected_codes;  // rendered greyed

    /// Default layout: center = top-4 of the model's own included-by ranking,
    /// restricted to detected codes.
    static LayoutSpec standard(const ArchModel& model);
};

/// DOT digraph with one node statement per file (identifier = quoted absolute
/// path, with rel/kind attributes) and one edge statement per include edge.
/// Byte-deterministic.
std::string emit_file_dot(const FileGraph& graph);

/// Parses DOT digraphs produced by emit_file_dot as well as plain generated
/// files (absolute-path node ids, bare edges, graph attributes). Unknown
/// attributes are ignored; edges may reference undeclared nodes. root_hint
/// re-relativizes node paths when the rel attribute is absent.
/// Throws Error with a line number on malformed input.
FileGraph read_file_dot(std::string_view text, const std::string& root_hint = "");

struct ArchMapOutput {
    std::string dot;
    std::string svg;
};

/// One colored, code-labeled box per subsystem (undetected codes dark grey
/// with light grey text), center codes in the middle, the rest on a circle
/// alphabetically; one arrow per subsystem edge, labeled with its weight.
ArchMapOutput emit_arch_map(const ArchModel& model, const LayoutSpec& layout);

/// 16x16 grid, rows = includer, columns = included; cell shade scales with
/// value and nonzero cells print their value.
std::string emit_heatmap_svg(const CouplingHeatmap& heatmap);

/// Fixed palette for detected subsystem boxes (documented in the README).
std::string_view subsystem_color(Subsystem s);

}  // namespace archrec
