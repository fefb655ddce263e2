#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace archrec {

// All paths handled by the library are generic-format strings: '/' separators,
// no '.' or '..' segments. Absolute paths are produced by normalize_abs;
// repo-relative paths never start with '/'.

/// Absolute + lexically normal + generic separators; trailing '/' stripped
/// (except for the filesystem root itself).
std::string normalize_abs(const std::filesystem::path& p);

/// Normalize a relative path: backslashes to '/', '.'/'..' collapsed,
/// trailing separators stripped.
std::string normalize_rel(std::string_view p);

/// Join a written include path onto an absolute directory and normalize.
std::string join_and_normalize(const std::string& abs_dir, std::string_view written);

bool is_abs_path(std::string_view p);

/// True when `abs` equals `root_abs` or lies under it (segment aligned).
bool is_within(const std::string& root_abs, const std::string& abs);

/// `abs` made relative to `root_abs`; precondition: is_within.
std::string rel_to(const std::string& root_abs, const std::string& abs);

/// Parent directory of an absolute path ("/a/b.h" -> "/a", "/a.h" -> "/").
std::string parent_dir_abs(const std::string& abs);

/// Parent directory of a relative path ("a/b.h" -> "a", "b.h" -> ".").
std::string parent_dir_rel(const std::string& rel);

std::string lower_ascii(std::string s);

}  // namespace archrec
