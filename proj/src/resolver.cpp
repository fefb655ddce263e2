#include "archrec/resolver.hpp"

#include <algorithm>
#include <filesystem>
#include <map>

#include "archrec/error.hpp"
#include "archrec/glob.hpp"
#include "archrec/pathutil.hpp"

namespace archrec {

namespace {

std::vector<std::string> normalize_dirs(const std::vector<std::string>& dirs) {
    std::vector<std::string> out;
    for (const auto& d : dirs) {
        if (!is_abs_path(d)) {
            throw Error("search path must be absolute: " + d);
        }
        std::string norm = normalize_abs(d);
        if (std::find(out.begin(), out.end(), norm) == out.end()) {
            out.push_back(std::move(norm));
        }
    }
    return out;
}

// Classic libc/POSIX/OS header names and directory families. Quoted system
// includes ("stdio.h") occur in the wild, so the list is matched regardless
// of style; angle includes without a path separator are covered by the
// policy flag instead.
const char* const kDefaultSystemPatterns[] = {
    "assert.h",   "complex.h",  "ctype.h",    "errno.h",    "fcntl.h",    "fenv.h",
    "float.h",    "inttypes.h", "iso646.h",   "limits.h",   "locale.h",   "malloc.h",
    "math.h",     "memory.h",   "setjmp.h",   "signal.h",   "stdarg.h",   "stdbool.h",
    "stddef.h",   "stdint.h",   "stdio.h",    "stdlib.h",   "string.h",   "strings.h",
    "tgmath.h",   "time.h",     "uchar.h",    "wchar.h",    "wctype.h",

    "dirent.h",   "dlfcn.h",    "glob.h",     "grp.h",      "iconv.h",    "netdb.h",
    "poll.h",     "pthread.h",  "pwd.h",      "sched.h",    "semaphore.h", "syslog.h",
    "termios.h",  "unistd.h",   "utime.h",

    "windows.h",  "windowsx.h", "winsock.h",  "winsock2.h", "ws2tcpip.h", "shellapi.h",
    "shlobj.h",   "tchar.h",    "wincrypt.h", "winbase.h",  "direct.h",   "intrin.h",
    "*mmintrin.h", "d3d*.h",    "dxgi*.h",    "jni.h",

    "sys/*",      "bits/*",     "gnu/*",      "linux/*",    "asm/*",      "asm-generic/*",
    "netinet/*",  "arpa/*",     "net/*",      "machine/*",  "mach/*",     "mach-o/*",
    "android/*",  "CoreFoundation/*", "CoreServices/*", "CoreAudio/*", "CoreGraphics/*",
    "CoreVideo/*", "AudioToolbox/*", "AudioUnit/*", "Foundation/*", "UIKit/*",
    "AppKit/*",   "Cocoa/*",    "Carbon/*",   "OpenGL/*",   "OpenGLES/*", "GL/*",
    "GLES/*",     "GLES2/*",    "GLES3/*",    "EGL/*",      "KHR/*",      "vulkan/*",
    "X11/*",      "emscripten/*",
};

}  // namespace

SearchPathSet::SearchPathSet(const std::vector<std::string>& dirs)
    : dirs_(normalize_dirs(dirs)) {}

SearchPathSet merge_search_paths(const SearchPathSet& existing,
                                 const std::vector<std::string>& additions) {
    std::vector<std::string> all = existing.dirs();
    for (const auto& a : normalize_dirs(additions)) {
        if (std::find(all.begin(), all.end(), a) == all.end()) {
            all.push_back(a);
        }
    }
    SearchPathSet merged;
    merged.dirs_ = std::move(all);
    return merged;
}

ExternalHeaderPolicy ExternalHeaderPolicy::defaults() {
    ExternalHeaderPolicy policy;
    policy.system_patterns.assign(std::begin(kDefaultSystemPatterns),
                                  std::end(kDefaultSystemPatterns));
    return policy;
}

ExternalHeaderPolicy ExternalHeaderPolicy::parse(std::string_view text) {
    ExternalHeaderPolicy policy = defaults();
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        ++line_no;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.remove_suffix(1);
        }
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
            line.remove_prefix(1);
        }
        if (line.empty() || line.front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (line == "@no-defaults") {
            policy.system_patterns.clear();
        } else if (line.starts_with("@angle-no-separator")) {
            auto value = line.substr(std::string_view("@angle-no-separator").size());
            while (!value.empty() && value.front() == ' ') value.remove_prefix(1);
            if (value == "on") {
                policy.angle_without_separator_is_external = true;
            } else if (value == "off") {
                policy.angle_without_separator_is_external = false;
            } else {
                throw Error("policy:" + std::to_string(line_no) +
                            ": expected 'on' or 'off' after @angle-no-separator");
            }
        } else if (line.front() == '@') {
            throw Error("policy:" + std::to_string(line_no) + ": unknown directive: " +
                        std::string(line));
        } else {
            if (!glob_valid(line)) {
                throw Error("policy:" + std::to_string(line_no) + ": invalid glob pattern: " +
                            std::string(line));
            }
            policy.system_patterns.emplace_back(line);
        }
        if (end == text.size()) break;
    }
    return policy;
}

bool ExternalHeaderPolicy::matches(std::string_view written_path, IncludeStyle style) const {
    if (angle_without_separator_is_external && style == IncludeStyle::angle &&
        written_path.find('/') == std::string_view::npos &&
        written_path.find('\\') == std::string_view::npos) {
        return true;
    }
    return std::any_of(system_patterns.begin(), system_patterns.end(),
                       [&](const std::string& p) { return glob_match(p, written_path); });
}

CorpusIndex::CorpusIndex(const std::vector<SourceFile>& files, const std::string& root_abs,
                         bool case_insensitive)
    : files_(files), root_(root_abs), case_insensitive_(case_insensitive) {
    for (std::size_t i = 0; i < files_.size(); ++i) {
        std::string key = case_insensitive_ ? lower_ascii(files_[i].abs_path)
                                            : files_[i].abs_path;
        by_path_.emplace(std::move(key), i);  // first (lexicographically
                                              // earliest) file wins on clash
    }
}

const SourceFile* CorpusIndex::find(const std::string& abs_path) const {
    auto it = by_path_.find(case_insensitive_ ? lower_ascii(abs_path) : abs_path);
    return it == by_path_.end() ? nullptr : &files_[it->second];
}

ResolutionOutcome resolve(const IncludeDirective& directive, const SearchPathSet& search_paths,
                          const ExternalHeaderPolicy& policy, const CorpusIndex& corpus) {
    const std::string& written = directive.written_path;

    std::vector<std::string> candidates;
    if (is_abs_path(written)) {
        candidates.push_back(join_and_normalize("", written));
    } else {
        if (directive.style == IncludeStyle::quoted) {
            candidates.push_back(
                join_and_normalize(parent_dir_abs(directive.includer.abs_path), written));
        }
        for (const auto& dir : search_paths.dirs()) {
            candidates.push_back(join_and_normalize(dir, written));
        }
    }

    for (const auto& cand : candidates) {
        if (const SourceFile* hit = corpus.find(cand)) {
            return Resolved{*hit};
        }
        if (!is_within(corpus.root(), cand)) {
            // search paths may point at trees outside the corpus; a real file
            // there is by definition not part of the analyzed system
            std::error_code ec;
            if (std::filesystem::is_regular_file(cand, ec)) {
                return External{written};
            }
        }
    }
    if (policy.matches(written, directive.style)) {
        return External{written};
    }
    return Unresolved{written};
}

std::string UnresolvedReport::to_text() const {
    std::string out;
    for (const auto& e : entries) {
        out += std::to_string(e.count);
        out += '\t';
        out += e.written_path;
        out += '\t';
        out += e.sample_includer;
        out += '\n';
    }
    return out;
}

ResolveAllResult resolve_all(const std::vector<IncludeDirective>& directives,
                             const SearchPathSet& search_paths,
                             const ExternalHeaderPolicy& policy, const CorpusIndex& corpus) {
    ResolveAllResult result;
    std::map<std::string, UnresolvedEntry> unresolved;
    for (const auto& d : directives) {
        ResolutionOutcome outcome = resolve(d, search_paths, policy, corpus);
        if (const auto* r = std::get_if<Resolved>(&outcome)) {
            result.edges.emplace_back(d.includer, r->target);
            ++result.report.total_resolved;
        } else if (std::holds_alternative<External>(outcome)) {
            ++result.report.total_external;
        } else {
            ++result.report.total_unresolved;
            auto [it, inserted] = unresolved.try_emplace(
                d.written_path,
                UnresolvedEntry{d.written_path, 0, d.includer.repo_rel_path});
            ++it->second.count;
        }
    }
    result.report.entries.reserve(unresolved.size());
    for (auto& [path, entry] : unresolved) {
        result.report.entries.push_back(std::move(entry));
    }
    std::stable_sort(result.report.entries.begin(), result.report.entries.end(),
                     [](const UnresolvedEntry& a, const UnresolvedEntry& b) {
                         if (a.count != b.count) {
                             return a.count > b.count;
                         }
                         return a.written_path < b.written_path;
                     });
    return result;
}

}  // namespace archrec
