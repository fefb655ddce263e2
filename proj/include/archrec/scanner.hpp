#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace archrec {

enum class FileKind { header, implementation, other };

/// One file discovered under the corpus root.
struct SourceFile {
    std::string abs_path;       // absolute, normalized, '/' separators
    std::string repo_rel_path;  // relative to the corpus root
    FileKind kind = FileKind::other;

    friend auto operator<=>(const SourceFile&, const SourceFile&) = default;
};

enum class IncludeStyle { quoted, angle };

std::string_view include_style_name(IncludeStyle style);

/// One `#include` occurrence, as written.
struct IncludeDirective {
    SourceFile includer;
    std::string written_path;  // exact text between the delimiters
    IncludeStyle style = IncludeStyle::quoted;
    int line = 0;  // 1-based

    friend bool operator==(const IncludeDirective&, const IncludeDirective&) = default;
};

struct CorpusConfig {
    std::filesystem::path root;
    std::set<std::string> header_extensions{"h", "hh", "hpp", "hxx", "inl"};
    std::set<std::string> impl_extensions{"c", "cc", "cpp", "cxx", "mm"};
    std::vector<std::string> exclude_globs;  // matched against repo-relative file paths
};

struct ScanWarnings {
    std::size_t malformed_includes = 0;       // lines that start like a directive but do not parse
    std::vector<std::string> unreadable_paths;

    friend bool operator==(const ScanWarnings&, const ScanWarnings&) = default;
};

struct ScanResult {
    std::vector<SourceFile> files;            // sorted by repo_rel_path
    std::vector<IncludeDirective> directives; // file order, then line order
    ScanWarnings warnings;
};

/// Classify a path by extension against the config's extension sets
/// (case-insensitive on the extension).
FileKind classify_extension(const std::string& path, const CorpusConfig& config);

/// Enumerate matching regular files under config.root. Symbolic links are
/// skipped; unreadable subdirectories are recorded and traversal continues.
/// Throws Error if root is missing/unreadable or the extension sets overlap.
std::vector<SourceFile> walk_corpus(const CorpusConfig& config,
                                    ScanWarnings* warnings = nullptr);

/// Extract include directives from a file's raw bytes. Line and block
/// comments are stripped with a small state machine that respects string
/// literals; preprocessor conditionals are not evaluated, so directives in
/// inactive regions are reported too. Never throws on content.
std::vector<IncludeDirective> scan_file(const SourceFile& file, std::string_view text,
                                        ScanWarnings* warnings = nullptr);

/// walk_corpus + scan_file over every file; deterministic.
ScanResult scan_corpus(const CorpusConfig& config);

/// Line format used by the `scan` subcommand:
/// <includer-rel-path>\t<style>\t<written-path>\t<line>
std::string write_directives(const std::vector<IncludeDirective>& directives);
std::vector<IncludeDirective> read_directives(std::string_view text,
                                              const std::vector<SourceFile>& corpus);

}  // namespace archrec
