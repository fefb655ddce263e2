#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "archrec/export.hpp"
#include "archrec/mapping.hpp"
#include "archrec/metrics.hpp"
#include "archrec/model.hpp"
#include "archrec/resolver.hpp"
#include "archrec/scanner.hpp"

namespace archrec {

struct PipelineConfig {
    std::string engine_id;
    std::filesystem::path root;
    std::filesystem::path mapping_csv;
    std::vector<std::string> search_paths;
    std::optional<std::filesystem::path> policy_file;
    std::filesystem::path out_dir;
    bool include_unk = false;
    bool case_insensitive = false;
    std::set<std::string> header_extensions{"h", "hh", "hpp", "hxx", "inl"};
    std::set<std::string> impl_extensions{"c", "cc", "cpp", "cxx", "mm"};
    std::vector<std::string> exclude_globs;
};

/// Values read from a flat key/value config file; CLI flags override them.
struct PipelineConfigFile {
    std::optional<std::string> engine_id;
    std::optional<std::filesystem::path> root;
    std::optional<std::filesystem::path> mapping_csv;
    std::vector<std::string> search_paths;
    std::optional<std::filesystem::path> policy_file;
    std::optional<std::filesystem::path> out_dir;
    std::optional<bool> include_unk;
    std::optional<bool> case_insensitive;
    std::optional<std::set<std::string>> header_extensions;
    std::optional<std::set<std::string>> impl_extensions;
    std::vector<std::string> exclude_globs;

    /// Fill any unset fields of `config` from this file's values.
    void apply_defaults_to(PipelineConfig& config) const;
};

/// Parses `key = value` lines (`#` comments). Relative paths are resolved
/// against base_dir. Throws Error with line numbers.
PipelineConfigFile parse_config_file(std::string_view text,
                                     const std::filesystem::path& base_dir);

struct AnalysisBundle {
    ScanResult scan;
    ResolveAllResult resolution;
    FileGraph graph;
    std::vector<Subsystem> assignments;  // parallel to graph.nodes()
    DetectionSummary detection;
    ArchModel model;
    std::vector<DegreeRecord> degree_table;
    CouplingMatrix matrix;
    CorpusStats stats;
};

/// Runs scan -> resolve -> assign -> build -> lift -> metrics -> export and
/// writes every artifact under config.out_dir. On error, aborts with a
/// step-labeled message and removes partial outputs. The caller maps
/// report-emptiness to the process exit status.
AnalysisBundle run_pipeline(const PipelineConfig& config);

struct AggregateOutput {
    CouplingHeatmap heatmap;
    FrequencyRankings rankings;
};

/// Heatmap + rankings over several engines; order independent. Throws Error
/// on duplicate engine ids or an empty input.
AggregateOutput aggregate(const std::vector<ArchModel>& models,
                          bool include_diagonal = true);

void write_aggregate_outputs(const AggregateOutput& output,
                             const std::filesystem::path& out_dir);

}  // namespace archrec
