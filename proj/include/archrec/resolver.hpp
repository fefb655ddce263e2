#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "archrec/scanner.hpp"

namespace archrec {

/// Ordered list of absolute include directories; earlier entries win.
class SearchPathSet {
public:
    SearchPathSet() = default;
    /// Normalizes entries and drops duplicates, keeping the first occurrence.
    /// Throws Error for non-absolute entries.
    explicit SearchPathSet(const std::vector<std::string>& dirs);

    const std::vector<std::string>& dirs() const { return dirs_; }

    friend bool operator==(const SearchPathSet&, const SearchPathSet&) = default;

private:
    std::vector<std::string> dirs_;
};

/// Additions are appended after existing entries (lower priority), so a
/// directive that resolved before the merge resolves identically after it.
SearchPathSet merge_search_paths(const SearchPathSet& existing,
                                 const std::vector<std::string>& additions);

/// Decides which unresolvable includes are system/toolchain headers rather
/// than genuinely missing corpus files.
struct ExternalHeaderPolicy {
    std::vector<std::string> system_patterns;
    bool angle_without_separator_is_external = true;

    static ExternalHeaderPolicy defaults();

    /// Policy file: one glob per line, `#` comments. Directives:
    ///   @no-defaults              start from an empty pattern list
    ///   @angle-no-separator on|off
    /// Without @no-defaults the file extends the built-in list.
    static ExternalHeaderPolicy parse(std::string_view text);

    bool matches(std::string_view written_path, IncludeStyle style) const;
};

struct Resolved {
    SourceFile target;
};
struct External {
    std::string written_path;
};
struct Unresolved {
    std::string written_path;
};
using ResolutionOutcome = std::variant<Resolved, External, Unresolved>;

/// Fast lookup of corpus files by absolute path, bound to the corpus root.
class CorpusIndex {
public:
    CorpusIndex(const std::vector<SourceFile>& files, const std::string& root_abs,
                bool case_insensitive = false);

    const SourceFile* find(const std::string& abs_path) const;
    const std::string& root() const { return root_; }
    bool case_insensitive() const { return case_insensitive_; }

private:
    std::vector<SourceFile> files_;
    std::unordered_map<std::string, std::size_t> by_path_;
    std::string root_;
    bool case_insensitive_ = false;
};

/// Lookup order: the includer's own directory first for quoted includes
/// (angle includes skip it), then each search path in priority order. The
/// first corpus hit wins. A candidate that exists on disk outside the corpus
/// root is External; otherwise the policy decides External vs Unresolved.
ResolutionOutcome resolve(const IncludeDirective& directive, const SearchPathSet& search_paths,
                          const ExternalHeaderPolicy& policy, const CorpusIndex& corpus);

struct UnresolvedEntry {
    std::string written_path;
    std::size_t count = 0;
    std::string sample_includer;  // repo-relative path of the first occurrence

    friend bool operator==(const UnresolvedEntry&, const UnresolvedEntry&) = default;
};

struct UnresolvedReport {
    std::vector<UnresolvedEntry> entries;  // count desc, then path asc
    std::size_t total_resolved = 0;
    std::size_t total_external = 0;
    std::size_t total_unresolved = 0;

    bool empty() const { return entries.empty(); }
    /// Report file format: <count>\t<written-path>\t<sample-includer-rel-path>
    std::string to_text() const;
};

struct ResolveAllResult {
    std::vector<std::pair<SourceFile, SourceFile>> edges;  // one per Resolved directive
    UnresolvedReport report;
};

ResolveAllResult resolve_all(const std::vector<IncludeDirective>& directives,
                             const SearchPathSet& search_paths,
                             const ExternalHeaderPolicy& policy, const CorpusIndex& corpus);

}  // namespace archrec
