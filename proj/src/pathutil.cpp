#include "archrec/pathutil.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace archrec {

namespace {

std::string strip_trailing_slashes(std::string s) {
    while (s.size() > 1 && s.back() == '/') {
        s.pop_back();
    }
    return s;
}

}  // namespace

std::string normalize_abs(const std::filesystem::path& p) {
    auto abs = std::filesystem::absolute(p).lexically_normal();
    return strip_trailing_slashes(abs.generic_string());
}

std::string normalize_rel(std::string_view p) {
    std::string with_slashes(p);
    std::replace(with_slashes.begin(), with_slashes.end(), '\\', '/');
    auto norm = std::filesystem::path(with_slashes).lexically_normal().generic_string();
    norm = strip_trailing_slashes(std::move(norm));
    if (norm == ".") {
        return "";
    }
    return norm;
}

std::string join_and_normalize(const std::string& abs_dir, std::string_view written) {
    std::string w(written);
    std::replace(w.begin(), w.end(), '\\', '/');
    std::filesystem::path joined = std::filesystem::path(abs_dir) / w;
    return strip_trailing_slashes(joined.lexically_normal().generic_string());
}

bool is_abs_path(std::string_view p) {
    return std::filesystem::path(p).is_absolute();
}

bool is_within(const std::string& root_abs, const std::string& abs) {
    if (abs == root_abs) {
        return true;
    }
    std::string prefix = root_abs == "/" ? "/" : root_abs + "/";
    return abs.size() > prefix.size() && abs.compare(0, prefix.size(), prefix) == 0;
}

std::string rel_to(const std::string& root_abs, const std::string& abs) {
    if (abs == root_abs) {
        return "";
    }
    std::size_t skip = root_abs == "/" ? 1 : root_abs.size() + 1;
    return abs.substr(skip);
}

std::string parent_dir_abs(const std::string& abs) {
    auto pos = abs.find_last_of('/');
    if (pos == std::string::npos) {
        return abs;
    }
    if (pos == 0) {
        return "/";
    }
    return abs.substr(0, pos);
}

std::string parent_dir_rel(const std::string& rel) {
    auto pos = rel.find_last_of('/');
    if (pos == std::string::npos) {
        return ".";
    }
    return rel.substr(0, pos);
}

std::string lower_ascii(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace archrec
