#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lucube/family.hpp"
#include "lucube/sequences.hpp"

namespace lucube {

// A vertex label: fixed-length binary string, leftmost character is bit
// position 1. The empty label is the single vertex of FC(2)/EFC(2)/H(0).
using Label = std::string;

// Default materialization bound for gen_vertices (dim <= 34 for the
// Fibonacci-like families). Membership predicates have no bound.
inline constexpr int kMaxGenLabelLen = 32;

enum class Branch { Zero, OneZero };

namespace detail {

inline bool bits_ok(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

// Fibonacci strings: no "11" anywhere.
inline bool fc_ok(std::string_view s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == '1' && s[i + 1] == '1') return false;
    return true;
}

// EFC labels: "11" may occur only as the final two characters. Derived
// characterization of the recursion 0V(n-1) U 10V(n-2); machine-verified
// against gen_vertices in the test suite.
inline bool efc_ok(std::string_view s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == '1' && s[i + 1] == '1' && i + 2 != s.size()) return false;
    return true;
}

inline bool lc_ok(std::string_view s) {
    if (!fc_ok(s)) return false;
    return s.empty() || !(s.front() == '1' && s.back() == '1');
}

// ELC labels of length m >= 3: 0 . EFC(m-1)  or  10 . EFC(m-3) . 0.
inline bool elc_ok(std::string_view s) {
    if (s.size() <= 2) return true;  // ELC(3), ELC(4): all strings of that length
    if (s.front() == '0') return efc_ok(s.substr(1));
    return s.size() >= 3 && s[0] == '1' && s[1] == '0' && s.back() == '0' &&
           efc_ok(s.substr(2, s.size() - 3));
}

inline std::vector<Label> prefixed(const char* prefix, const std::vector<Label>& inner,
                                   const char* suffix = "") {
    std::vector<Label> out;
    out.reserve(inner.size());
    for (const Label& s : inner) out.push_back(prefix + s + suffix);
    return out;
}

// Levels 0..len of the FC recursion (bases {eps}, {0,1}).
inline std::vector<std::vector<Label>> fc_levels(int len) {
    std::vector<std::vector<Label>> v(static_cast<std::size_t>(len) + 1);
    v[0] = {""};
    if (len >= 1) v[1] = {"0", "1"};
    for (int k = 2; k <= len; ++k) {
        v[k] = prefixed("0", v[k - 1]);
        auto tail = prefixed("10", v[k - 2]);
        v[k].insert(v[k].end(), tail.begin(), tail.end());
    }
    return v;
}

// Levels 0..len of the EFC recursion (extra base {00,01,10,11}).
inline std::vector<std::vector<Label>> efc_levels(int len) {
    std::vector<std::vector<Label>> v(static_cast<std::size_t>(len) + 1);
    v[0] = {""};
    if (len >= 1) v[1] = {"0", "1"};
    if (len >= 2) v[2] = {"00", "01", "10", "11"};
    for (int k = 3; k <= len; ++k) {
        v[k] = prefixed("0", v[k - 1]);
        auto tail = prefixed("10", v[k - 2]);
        v[k].insert(v[k].end(), tail.begin(), tail.end());
    }
    return v;
}

}  // namespace detail

inline int label_length(const CubeSpec& s) { return s.label_length(); }

// Exact label set of the cube, sorted lexicographically.
inline std::vector<Label> gen_vertices(const CubeSpec& spec, int max_label_len = kMaxGenLabelLen) {
    validate(spec);
    const int len = spec.label_length();
    if (len > max_label_len)
        throw std::domain_error(spec_name(spec) + ": label length " + std::to_string(len) +
                                " exceeds the materialization bound " + std::to_string(max_label_len));
    std::vector<Label> out;
    switch (spec.family) {
        case Family::Hypercube: {
            out.reserve(std::size_t{1} << len);
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
                Label s(static_cast<std::size_t>(len), '0');
                for (int b = 0; b < len; ++b)
                    if (x >> (len - 1 - b) & 1) s[static_cast<std::size_t>(b)] = '1';
                out.push_back(std::move(s));
            }
            return out;  // already sorted: lexicographic equals numeric at fixed length
        }
        case Family::FC: out = detail::fc_levels(len)[static_cast<std::size_t>(len)]; break;
        case Family::EFC: out = detail::efc_levels(len)[static_cast<std::size_t>(len)]; break;
        case Family::ELC: {
            if (len <= 2) {
                out = len == 1 ? std::vector<Label>{"0", "1"}
                               : std::vector<Label>{"00", "01", "10", "11"};
            } else {
                auto efc = detail::efc_levels(len - 1);
                out = detail::prefixed("0", efc[static_cast<std::size_t>(len - 1)]);
                auto tail = detail::prefixed("10", efc[static_cast<std::size_t>(len - 3)], "0");
                out.insert(out.end(), tail.begin(), tail.end());
            }
            break;
        }
        case Family::LC: {
            const auto levels = detail::fc_levels(len);
            for (const Label& s : levels[static_cast<std::size_t>(len)])
                if (detail::lc_ok(s)) out.push_back(s);
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Membership without materializing the set.
inline bool is_member(const CubeSpec& spec, const Label& label) {
    validate(spec);
    if (static_cast<int>(label.size()) != spec.label_length())
        throw std::domain_error(spec_name(spec) + ": label \"" + label + "\" has length " +
                                std::to_string(label.size()) + ", expected " +
                                std::to_string(spec.label_length()));
    if (!detail::bits_ok(label))
        throw std::domain_error("label \"" + label + "\" contains characters other than 0/1");
    switch (spec.family) {
        case Family::Hypercube: return true;
        case Family::FC: return detail::fc_ok(label);
        case Family::EFC: return detail::efc_ok(label);
        case Family::LC: return detail::lc_ok(label);
        case Family::ELC: return detail::elc_ok(label);
    }
    return false;
}

// Splits a member label along the family recursion: Zero strips a leading 0,
// OneZero strips a leading 10 (and, for ELC, the trailing 0). The inner label
// belongs to FC(n-1)/FC(n-2), EFC(n-1)/EFC(n-2), or EFC(n-1)/EFC(n-3) for ELC.
inline std::pair<Branch, Label> decompose(const CubeSpec& spec, const Label& label) {
    if (!is_member(spec, label))
        throw std::domain_error(spec_name(spec) + ": \"" + label + "\" is not a member");
    int base_max = 0;
    switch (spec.family) {
        case Family::FC: base_max = 3; break;
        case Family::EFC: base_max = 4; break;
        case Family::ELC: base_max = 4; break;
        default:
            throw unsupported_error(spec_name(spec) + ": no recursive decomposition for this family");
    }
    if (spec.dim <= base_max)
        throw unsupported_error(spec_name(spec) + ": base-case dimension, nothing to decompose");
    if (label.front() == '0') return {Branch::Zero, label.substr(1)};
    if (spec.family == Family::ELC) return {Branch::OneZero, label.substr(2, label.size() - 3)};
    return {Branch::OneZero, label.substr(2)};
}

}  // namespace lucube
