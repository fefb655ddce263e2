#include "archrec/glob.hpp"

#include <cstddef>
#include <vector>

namespace archrec {

namespace {

// Matches pattern[pi..] against one character; returns the pattern index just
// past the class, or npos for a malformed class.
std::size_t match_class(std::string_view pat, std::size_t pi, char c, bool& matched) {
    // pat[pi] == '['
    std::size_t i = pi + 1;
    bool negate = false;
    if (i < pat.size() && pat[i] == '!') {
        negate = true;
        ++i;
    }
    bool hit = false;
    bool first = true;
    while (i < pat.size() && (first || pat[i] != ']')) {
        char lo = pat[i];
        if (i + 2 < pat.size() && pat[i + 1] == '-' && pat[i + 2] != ']') {
            char hi = pat[i + 2];
            if (c >= lo && c <= hi) {
                hit = true;
            }
            i += 3;
        } else {
            if (c == lo) {
                hit = true;
            }
            ++i;
        }
        first = false;
    }
    if (i >= pat.size()) {
        return std::string_view::npos;  // unterminated class
    }
    if (c == '/') {
        hit = false;  // classes never match the separator
    }
    matched = negate ? !hit : hit;
    return i + 1;
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view text) {
    const std::size_t np = pattern.size();
    const std::size_t nt = text.size();
    // dp[i][j]: pattern[i..] matches text[j..]
    std::vector<std::vector<char>> dp(np + 1, std::vector<char>(nt + 1, 0));
    dp[np][nt] = 1;
    for (std::size_t i = np; i-- > 0;) {
        bool double_star = pattern[i] == '*' && i + 1 < np && pattern[i + 1] == '*';
        for (std::size_t j = nt + 1; j-- > 0;) {
            bool ok = false;
            char p = pattern[i];
            if (double_star) {
                // consume both stars; matches any run including '/'
                ok = dp[i + 2][j] || (j < nt && dp[i][j + 1]);
            } else if (p == '*') {
                ok = dp[i + 1][j] || (j < nt && text[j] != '/' && dp[i][j + 1]);
            } else if (p == '?') {
                ok = j < nt && text[j] != '/' && dp[i + 1][j + 1];
            } else if (p == '[') {
                if (j < nt) {
                    bool matched = false;
                    std::size_t next = match_class(pattern, i, text[j], matched);
                    ok = next != std::string_view::npos && matched && dp[next][j + 1];
                }
            } else {
                ok = j < nt && text[j] == p && dp[i + 1][j + 1];
            }
            dp[i][j] = ok ? 1 : 0;
        }
    }
    return dp[0][0] != 0;
}

bool glob_valid(std::string_view pattern) {
    if (pattern.empty()) {
        return false;
    }
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] == '[') {
            bool matched = false;
            if (match_class(pattern, i, 'x', matched) == std::string_view::npos) {
                return false;
            }
            i = match_class(pattern, i, 'x', matched) - 1;
        }
    }
    return true;
}

}  // namespace archrec
