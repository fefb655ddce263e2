#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "archrec/mapping.hpp"
#include "archrec/model.hpp"

namespace archrec {

using Grid16 = std::array<std::array<int, kSubsystemCount>, kSubsystemCount>;

/// Degrees count distinct *other* subsystems; self-loops are excluded.
struct DegreeRecord {
    Subsystem code = Subsystem::UNK;
    int in_degree = 0;
    int out_degree = 0;

    friend bool operator==(const DegreeRecord&, const DegreeRecord&) = default;
};

/// Sorted by in-degree descending, then code.
std::vector<DegreeRecord> degrees(const ArchModel& model);

/// Per-engine binary coupling matrix; rows = includer, columns = included,
/// both in the fixed alphabetical code order. The diagonal marks self-includes.
struct CouplingMatrix {
    std::string engine_id;
    Grid16 cells{};

    friend bool operator==(const CouplingMatrix&, const CouplingMatrix&) = default;
};

CouplingMatrix coupling_matrix(const ArchModel& model);

/// Element-wise sum of per-engine matrices.
struct CouplingHeatmap {
    Grid16 cells{};
    std::vector<std::string> engines;  // sorted

    friend bool operator==(const CouplingHeatmap&, const CouplingHeatmap&) = default;
};

/// Commutative in input order; throws Error when given no matrices.
CouplingHeatmap aggregate_heatmap(const std::vector<CouplingMatrix>& matrices);

struct RankEntry {
    Subsystem code = Subsystem::UNK;
    int value = 0;

    friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

struct FrequencyRankings {
    std::vector<RankEntry> included_by;  // column sums, desc, ties alphabetical
    std::vector<RankEntry> includes;     // row sums, desc, ties alphabetical
    std::vector<Subsystem> center;       // top-4 of included_by
};

/// Row/column sums over the heatmap. The diagonal contributes to both sums
/// unless include_diagonal is false.
FrequencyRankings rank_frequencies(const CouplingHeatmap& heatmap,
                                   bool include_diagonal = true);

struct CorpusStats {
    std::size_t header_count = 0;
    std::size_t folder_count = 0;  // distinct directories containing >=1 scanned file

    friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

CorpusStats corpus_stats(const std::vector<SourceFile>& files);

// CSV encodings; byte-stable ordering throughout.
std::string degrees_to_csv(const std::vector<DegreeRecord>& records);
std::string grid_to_csv(const Grid16& cells);  // 17 columns, header row of codes
std::string ranking_to_csv(const std::vector<RankEntry>& entries);
Grid16 grid_from_csv(std::string_view text);   // throws Error on header/shape mismatch

}  // namespace archrec
