#include "archrec/scanner.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "archrec/error.hpp"
#include "archrec/glob.hpp"
#include "archrec/pathutil.hpp"

namespace archrec {

namespace {

bool ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
}

// Blanks comments and string/char literal contents with spaces, keeping the
// text the same length so byte offsets still address the original. Quote
// delimiters stay visible; newlines are always kept. This is deliberately a
// lexical pass: preprocessor conditionals are not evaluated.
std::string strip_for_scan(std::string_view src) {
    std::string out(src);
    enum class St { code, line_comment, block_comment, str, chr, raw };
    St st = St::code;
    std::string raw_close;  // ")delim" + '"'
    for (std::size_t i = 0; i < src.size(); ++i) {
        char c = src[i];
        if (c == '\n') {
            if (st == St::line_comment || st == St::str || st == St::chr) {
                st = St::code;  // unterminated literal: recover at end of line
            }
            continue;
        }
        switch (st) {
        case St::code:
            if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
                out[i] = out[i + 1] = ' ';
                ++i;
                st = St::line_comment;
            } else if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
                out[i] = out[i + 1] = ' ';
                ++i;
                st = St::block_comment;
            } else if (c == '"') {
                bool raw_prefix = i > 0 && src[i - 1] == 'R' &&
                                  (i < 2 || !ident_char(src[i - 2]) || src[i - 2] == '8' ||
                                   src[i - 2] == 'u' || src[i - 2] == 'L' || src[i - 2] == 'U');
                if (raw_prefix) {
                    std::size_t open = src.find('(', i + 1);
                    if (open != std::string_view::npos && open - i - 1 <= 16) {
                        raw_close = ")" + std::string(src.substr(i + 1, open - i - 1)) + "\"";
                        for (std::size_t k = i + 1; k <= open; ++k) {
                            out[k] = ' ';
                        }
                        i = open;
                        st = St::raw;
                        break;
                    }
                }
                st = St::str;
            } else if (c == '\'') {
                st = St::chr;
            }
            break;
        case St::line_comment:
            out[i] = ' ';
            break;
        case St::block_comment:
            if (c == '*' && i + 1 < src.size() && src[i + 1] == '/') {
                out[i] = out[i + 1] = ' ';
                ++i;
                st = St::code;
            } else {
                out[i] = ' ';
            }
            break;
        case St::str:
            if (c == '\\' && i + 1 < src.size() && src[i + 1] != '\n') {
                out[i] = out[i + 1] = ' ';
                ++i;
            } else if (c == '"') {
                st = St::code;
            } else {
                out[i] = ' ';
            }
            break;
        case St::chr:
            if (c == '\\' && i + 1 < src.size() && src[i + 1] != '\n') {
                out[i] = out[i + 1] = ' ';
                ++i;
            } else if (c == '\'') {
                st = St::code;
            } else {
                out[i] = ' ';
            }
            break;
        case St::raw:
            if (src.compare(i, raw_close.size(), raw_close) == 0) {
                for (std::size_t k = i; k < i + raw_close.size(); ++k) {
                    if (src[k] != '\n') {
                        out[k] = ' ';
                    }
                }
                i += raw_close.size() - 1;
                st = St::code;
            } else {
                out[i] = ' ';
            }
            break;
        }
    }
    return out;
}

bool is_hspace(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::string extension_of(const std::string& path) {
    auto slash = path.find_last_of('/');
    auto base = slash == std::string::npos ? std::string_view(path)
                                           : std::string_view(path).substr(slash + 1);
    auto dot = base.find_last_of('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 1 == base.size()) {
        return "";
    }
    return lower_ascii(std::string(base.substr(dot + 1)));
}

void validate_extension_sets(const CorpusConfig& config) {
    for (const auto& ext : config.header_extensions) {
        if (config.impl_extensions.contains(ext)) {
            throw Error("corpus config: extension '" + ext +
                        "' appears in both the header and implementation sets");
        }
    }
}

}  // namespace

std::string_view include_style_name(IncludeStyle style) {
    return style == IncludeStyle::quoted ? "quoted" : "angle";
}

FileKind classify_extension(const std::string& path, const CorpusConfig& config) {
    auto ext = extension_of(path);
    if (config.header_extensions.contains(ext)) {
        return FileKind::header;
    }
    if (config.impl_extensions.contains(ext)) {
        return FileKind::implementation;
    }
    return FileKind::other;
}

std::vector<SourceFile> walk_corpus(const CorpusConfig& config, ScanWarnings* warnings) {
    validate_extension_sets(config);
    std::error_code ec;
    auto root_status = std::filesystem::status(config.root, ec);
    if (ec || !std::filesystem::is_directory(root_status)) {
        throw Error("corpus root is not a readable directory: " + config.root.string());
    }
    const std::string root_abs = normalize_abs(config.root);

    std::vector<SourceFile> files;
    std::vector<std::string> pending{root_abs};
    while (!pending.empty()) {
        std::string dir = std::move(pending.back());
        pending.pop_back();
        std::filesystem::directory_iterator it(dir, ec);
        if (ec) {
            if (warnings) {
                warnings->unreadable_paths.push_back(dir);
            }
            continue;
        }
        for (const auto& entry : it) {
            std::error_code entry_ec;
            auto status = entry.symlink_status(entry_ec);
            if (entry_ec || std::filesystem::is_symlink(status)) {
                continue;  // symlinks are never followed
            }
            if (std::filesystem::is_directory(status)) {
                pending.push_back(normalize_abs(entry.path()));
                continue;
            }
            if (!std::filesystem::is_regular_file(status)) {
                continue;
            }
            std::string abs = normalize_abs(entry.path());
            FileKind kind = classify_extension(abs, config);
            if (kind == FileKind::other) {
                continue;
            }
            std::string rel = rel_to(root_abs, abs);
            bool excluded = std::any_of(
                config.exclude_globs.begin(), config.exclude_globs.end(),
                [&](const std::string& g) { return glob_match(g, rel); });
            if (excluded) {
                continue;
            }
            files.push_back(SourceFile{std::move(abs), std::move(rel), kind});
        }
    }
    std::sort(files.begin(), files.end(),
              [](const SourceFile& a, const SourceFile& b) {
                  return a.repo_rel_path < b.repo_rel_path;
              });
    return files;
}

std::vector<IncludeDirective> scan_file(const SourceFile& file, std::string_view text,
                                        ScanWarnings* warnings) {
    std::vector<IncludeDirective> directives;
    const std::string stripped = strip_for_scan(text);

    int line_no = 0;
    std::size_t line_start = 0;
    while (line_start <= stripped.size()) {
        ++line_no;
        std::size_t line_end = stripped.find('\n', line_start);
        if (line_end == std::string::npos) {
            line_end = stripped.size();
        }
        std::string_view line(stripped.data() + line_start, line_end - line_start);

        std::size_t i = 0;
        while (i < line.size() && is_hspace(line[i])) {
            ++i;
        }
        if (i < line.size() && line[i] == '#') {
            ++i;
            while (i < line.size() && is_hspace(line[i])) {
                ++i;
            }
            if (line.compare(i, 7, "include") == 0 &&
                (i + 7 >= line.size() || !ident_char(line[i + 7]))) {
                i += 7;
                std::size_t ws = i;
                while (i < line.size() && is_hspace(line[i])) {
                    ++i;
                }
                bool parsed = false;
                if (i > ws && i < line.size() && (line[i] == '"' || line[i] == '<')) {
                    char close = line[i] == '"' ? '"' : '>';
                    std::size_t path_begin = i + 1;
                    std::size_t path_end = line.find(close, path_begin);
                    if (path_end != std::string_view::npos && path_end > path_begin) {
                        // take the path from the original bytes: string
                        // contents were blanked in the stripped copy
                        std::string written(
                            text.substr(line_start + path_begin, path_end - path_begin));
                        directives.push_back(IncludeDirective{
                            file, std::move(written),
                            close == '"' ? IncludeStyle::quoted : IncludeStyle::angle,
                            line_no});
                        parsed = true;
                    }
                }
                if (!parsed && warnings) {
                    ++warnings->malformed_includes;
                }
            }
        }
        if (line_end == stripped.size()) {
            break;
        }
        line_start = line_end + 1;
    }
    return directives;
}

ScanResult scan_corpus(const CorpusConfig& config) {
    ScanResult result;
    result.files = walk_corpus(config, &result.warnings);
    for (const auto& file : result.files) {
        std::ifstream in(file.abs_path, std::ios::binary);
        if (!in) {
            result.warnings.unreadable_paths.push_back(file.abs_path);
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        auto directives = scan_file(file, text, &result.warnings);
        result.directives.insert(result.directives.end(),
                                 std::make_move_iterator(directives.begin()),
                                 std::make_move_iterator(directives.end()));
    }
    return result;
}

std::string write_directives(const std::vector<IncludeDirective>& directives) {
    std::string out;
    for (const auto& d : directives) {
        out += d.includer.repo_rel_path;
        out += '\t';
        out += include_style_name(d.style);
        out += '\t';
        out += d.written_path;
        out += '\t';
        out += std::to_string(d.line);
        out += '\n';
    }
    return out;
}

std::vector<IncludeDirective> read_directives(std::string_view text,
                                              const std::vector<SourceFile>& corpus) {
    std::unordered_map<std::string, const SourceFile*> by_rel;
    for (const auto& f : corpus) {
        by_rel.emplace(f.repo_rel_path, &f);
    }
    std::vector<IncludeDirective> directives;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        ++line_no;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) {
            continue;
        }
        auto fail = [&](const char* why) -> Error {
            return Error("directives:" + std::to_string(line_no) + ": " + why);
        };
        std::size_t t1 = line.find('\t');
        std::size_t t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
        std::size_t t3 = line.rfind('\t');
        if (t2 == std::string_view::npos || t3 <= t2) {
            throw fail("expected four tab-separated fields");
        }
        std::string rel(line.substr(0, t1));
        std::string_view style(line.substr(t1 + 1, t2 - t1 - 1));
        std::string written(line.substr(t2 + 1, t3 - t2 - 1));
        int ln = 0;
        try {
            ln = std::stoi(std::string(line.substr(t3 + 1)));
        } catch (const std::exception&) {
            throw fail("bad line number");
        }
        auto it = by_rel.find(rel);
        if (it == by_rel.end()) {
            throw Error("directives:" + std::to_string(line_no) +
                        ": includer not in corpus: " + rel);
        }
        IncludeStyle st;
        if (style == "quoted") {
            st = IncludeStyle::quoted;
        } else if (style == "angle") {
            st = IncludeStyle::angle;
        } else {
            throw fail("style must be 'quoted' or 'angle'");
        }
        directives.push_back(IncludeDirective{*it->second, std::move(written), st, ln});
    }
    return directives;
}

}  // namespace archrec
