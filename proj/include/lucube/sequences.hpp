#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lucube/family.hpp"

namespace lucube {

using BigInt = boost::multiprecision::cpp_int;

// f_1 = f_2 = 1, f_n = f_{n-1} + f_{n-2}.
inline BigInt fib(int n) {
    if (n < 1) throw std::domain_error("fib: n must be >= 1, got " + std::to_string(n));
    BigInt a = 1, b = 1;  // f_1, f_2
    for (int k = 2; k < n; ++k) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return n == 1 ? a : b;
}

// EFC node counts: F_3 = 2, F_4 = 4, F_n = F_{n-1} + F_{n-2} for n >= 5.
// F_2 := 1, the single empty-label vertex of EFC(2); this extension point is
// what the ELC recursion below consumes for |ELC(5)| = 5.
inline BigInt efc_size(int n) {
    if (n < 2) throw std::domain_error("efc_size: n must be >= 2, got " + std::to_string(n));
    if (n == 2) return 1;
    BigInt a = 2, b = 4;  // F_3, F_4
    for (int k = 4; k < n; ++k) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return n == 3 ? a : b;
}

// ELC node counts: C_3 = 2, C_4 = 4, C_n = F_{n-1} + F_{n-3} for n >= 5.
inline BigInt elc_size(int n) {
    if (n < 3) throw std::domain_error("elc_size: n must be >= 3, got " + std::to_string(n));
    if (n == 3) return 2;
    if (n == 4) return 4;
    return efc_size(n - 1) + efc_size(n - 3);
}

// Length-m binary strings with no "11" substring and not (first = last = 1).
// Equals the Lucas-number sequence 1, 3, 4, 7, 11, ...
inline BigInt lucas_count(int m) {
    if (m < 1) throw std::domain_error("lucas_count: m must be >= 1, got " + std::to_string(m));
    BigInt a = 1, b = 3;  // L_1, L_2
    for (int k = 2; k < m; ++k) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return m == 1 ? a : b;
}

inline BigInt family_size(Family f, int dim) {
    switch (f) {
        case Family::Hypercube:
            if (dim < 0) throw std::domain_error("hypercube dimension must be >= 0");
            return BigInt(1) << dim;
        case Family::FC: {
            if (dim < 2) throw std::domain_error("FC dimension must be >= 2");
            return fib(dim);
        }
        case Family::EFC: return efc_size(dim);
        case Family::LC:
            if (dim < 3) throw std::domain_error("LC dimension must be >= 3");
            return lucas_count(dim - 2);
        case Family::ELC: return elc_size(dim);
    }
    throw std::domain_error("unknown family");
}

inline BigInt family_size(const CubeSpec& s) { return family_size(s.family, s.dim); }

// Smallest dimension n with family_size(f, n) >= want. The size sequences are
// nondecreasing and unbounded, so the scan terminates.
inline int optimum_dim(Family f, const BigInt& want) {
    if (want < 1) throw std::domain_error("optimum_dim: node count must be >= 1");
    for (int n = min_dim(f);; ++n) {
        if (family_size(f, n) >= want) return n;
    }
}

inline std::vector<std::pair<int, BigInt>> size_table(Family f, int max_dim) {
    if (max_dim < min_dim(f))
        throw std::domain_error("size_table: max dimension below the family minimum");
    std::vector<std::pair<int, BigInt>> rows;
    for (int n = min_dim(f); n <= max_dim; ++n) rows.emplace_back(n, family_size(f, n));
    return rows;
}

}  // namespace lucube
