#pragma once

#include <string>
#include <string_view>
#include <vector>

// Canonical basis-id grammar:
//   tensor      "(a|b|...)"  flattened, so tensor is strictly associative on ids;
//               "()" is the empty tuple (the point) and one-element tuples collapse
//   suspension  "s(a)", poles "0" and "1"
//   wedge/pushout sides are prefixed with a tag such as "L:" / "R:"

namespace graycube::ids {

/// Tuple components of a tensor id; any other id is a single component.
inline std::vector<std::string> components(std::string_view id)
{
    if (id.size() < 2 || id.front() != '(' || id.back() != ')')
        return {std::string(id)};
    std::vector<std::string> out;
    std::string_view inner = id.substr(1, id.size() - 2);
    if (inner.empty())
        return out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        char c = inner[i];
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        else if (c == '|' && depth == 0) {
            out.emplace_back(inner.substr(start, i - start));
            start = i + 1;
        }
    }
    out.emplace_back(inner.substr(start));
    return out;
}

inline std::string join(const std::vector<std::string>& parts)
{
    if (parts.size() == 1)
        return parts.front();
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            s += '|';
        s += parts[i];
    }
    return s + ")";
}

inline std::string tensor(std::string_view a, std::string_view b)
{
    auto parts = components(a);
    auto rhs = components(b);
    parts.insert(parts.end(), rhs.begin(), rhs.end());
    return join(parts);
}

inline std::string suspension(std::string_view a) { return "s(" + std::string(a) + ")"; }

inline const std::string point = "()";

/// Corner of the n-cube with every coordinate equal to `bit` ('0' or '1').
inline std::string cube_corner(int n, char bit) { return join(std::vector<std::string>(static_cast<std::size_t>(n), std::string(1, bit))); }

} // namespace graycube::ids
