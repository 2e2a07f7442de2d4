#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lucube {

// Cube families. Dimensions are paper dimensions: label length is dim for
// Hypercube and dim - 2 for the Fibonacci-like families.
enum class Family { Hypercube, FC, EFC, LC, ELC };

// Operation outside a module's supported range (caps, base cases, ...).
class unsupported_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A Hamiltonian cycle is proven not to exist for the requested cube.
class no_cycle_error : public unsupported_error {
public:
    using unsupported_error::unsupported_error;
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Hypercube: return "H";
        case Family::FC: return "FC";
        case Family::EFC: return "EFC";
        case Family::LC: return "LC";
        case Family::ELC: return "ELC";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    std::string lower;
    lower.reserve(s.size());
    for (char c : s) lower.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
    if (lower == "h" || lower == "hypercube") return Family::Hypercube;
    if (lower == "fc") return Family::FC;
    if (lower == "efc") return Family::EFC;
    if (lower == "lc") return Family::LC;
    if (lower == "elc") return Family::ELC;
    throw std::domain_error("unknown family: " + std::string(s) + " (expected h, fc, efc, lc or elc)");
}

inline int min_dim(Family f) {
    switch (f) {
        case Family::Hypercube: return 0;
        case Family::FC:
        case Family::EFC: return 2;
        case Family::LC:
        case Family::ELC: return 3;
    }
    return 0;
}

struct CubeSpec {
    Family family{Family::Hypercube};
    int dim{0};

    int label_length() const { return family == Family::Hypercube ? dim : dim - 2; }

    friend bool operator==(const CubeSpec&, const CubeSpec&) = default;
};

inline std::string spec_name(const CubeSpec& s) {
    return std::string(family_name(s.family)) + "(" + std::to_string(s.dim) + ")";
}

inline void validate(const CubeSpec& s) {
    if (s.dim < min_dim(s.family))
        throw std::domain_error(spec_name(s) + ": dimension below the family minimum " +
                                std::to_string(min_dim(s.family)));
}

}  // namespace lucube
