#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lucube/graph.hpp"

namespace lucube {

// An ordered vertex list claimed to be a Hamiltonian path (or cycle when
// cyclic is set, in which case last and first must also be adjacent).
struct HamSequence {
    CubeSpec spec;
    std::vector<Label> order;
    bool cyclic{false};
};

namespace detail {

inline std::vector<Label> glue(const char* prefix, const std::vector<Label>& inner, bool reversed,
                               const char* suffix = "") {
    std::vector<Label> out;
    out.reserve(inner.size());
    if (reversed)
        for (auto it = inner.rbegin(); it != inner.rend(); ++it) out.push_back(prefix + *it + suffix);
    else
        for (const Label& s : inner) out.push_back(prefix + s + suffix);
    return out;
}

inline void append(std::vector<Label>& dst, std::vector<Label>&& src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
}

// Gray listing of the Fibonacci strings of length m:
//   F_m = 0.reverse(F_{m-1}) ++ 10.reverse(F_{m-2})   for m >= 5,
// over fixed base lists. The seam is valid because first(F_m) = 0.last(F_{m-1})
// holds inductively from the m = 4 base.
inline std::vector<Label> fc_gray(int len) {
    static const std::vector<std::vector<Label>> base = {
        {""},
        {"1", "0"},
        {"10", "00", "01"},
        {"010", "000", "001", "101", "100"},
        {"0100", "0101", "0001", "0000", "0010", "1010", "1000", "1001"},
    };
    if (len <= 4) return base[static_cast<std::size_t>(len)];
    std::vector<std::vector<Label>> lv(static_cast<std::size_t>(len) + 1);
    for (int k = 0; k <= 4; ++k) lv[static_cast<std::size_t>(k)] = base[static_cast<std::size_t>(k)];
    for (int k = 5; k <= len; ++k) {
        auto& out = lv[static_cast<std::size_t>(k)];
        out = glue("0", lv[static_cast<std::size_t>(k - 1)], true);
        append(out, glue("10", lv[static_cast<std::size_t>(k - 2)], true));
    }
    return lv[static_cast<std::size_t>(len)];
}

// Two mutually recursive listings of the EFC label set of length m:
//   A(m): 0^m -> 10^(m-1)   (adjacent endpoints, so A doubles as a cycle)
//   G(m): 0^m -> 010^(m-2)
//   A(m) = 0.G(m-1) ++ 10.reverse(A(m-2))
//   G(m) = [0^m] ++ 10.A(m-2) ++ 0.A(m-1)[1:]
// Both seams cross between the recursion branches at labels differing in the
// first bit only; A(m)[1] = 010^(m-2) makes G's re-entry seam line up.
struct EfcListings {
    std::vector<std::vector<Label>> a, g;
};

inline EfcListings efc_listings(int len) {
    EfcListings l;
    l.a.resize(static_cast<std::size_t>(len) + 1);
    l.g.resize(static_cast<std::size_t>(len) + 1);
    l.a[0] = {""};
    if (len >= 1) l.a[1] = {"0", "1"};
    if (len >= 2) {
        l.a[2] = {"00", "01", "11", "10"};
        l.g[2] = {"00", "10", "11", "01"};
    }
    for (int k = 3; k <= len; ++k) {
        auto& a = l.a[static_cast<std::size_t>(k)];
        a = glue("0", l.g[static_cast<std::size_t>(k - 1)], false);
        append(a, glue("10", l.a[static_cast<std::size_t>(k - 2)], true));
        auto& g = l.g[static_cast<std::size_t>(k)];
        g.push_back(Label(static_cast<std::size_t>(k), '0'));
        append(g, glue("10", l.a[static_cast<std::size_t>(k - 2)], false));
        auto tail = glue("0", l.a[static_cast<std::size_t>(k - 1)], false);
        g.insert(g.end(), std::make_move_iterator(tail.begin() + 1),
                 std::make_move_iterator(tail.end()));
    }
    return l;
}

inline std::vector<Label> efc_path_order(int len) {
    return efc_listings(len).a[static_cast<std::size_t>(len)];
}

// ELC Hamiltonian cycle order for label length m = 2 or m >= 4:
//   [0^m] ++ 10.A(m-3).0 ++ 0.A(m-1)[1:]
// For m = 4 this is exactly the Lemma 1 cycle 0000 1000 1010 0010 0011 0001
// 0101 0100.
inline std::vector<Label> elc_cycle_order(int len) {
    if (len == 2) return {"00", "10", "11", "01"};
    auto l = efc_listings(len - 1);
    std::vector<Label> out;
    out.push_back(Label(static_cast<std::size_t>(len), '0'));
    append(out, glue("10", l.a[static_cast<std::size_t>(len - 3)], false, "0"));
    auto tail = glue("0", l.a[static_cast<std::size_t>(len - 1)], false);
    out.insert(out.end(), std::make_move_iterator(tail.begin() + 1),
               std::make_move_iterator(tail.end()));
    return out;
}

inline std::vector<Label> elc_path_order(int len) {
    if (len == 1) return {"0", "1"};
    if (len == 3) return {"100", "000", "001", "011", "010"};  // Lemma 1 path
    return elc_cycle_order(len);
}

// Binary reflected Gray code over all length-d strings.
inline std::vector<Label> brgc(int len) {
    std::vector<Label> out;
    out.reserve(std::size_t{1} << len);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << len); ++i) {
        std::uint64_t gray = i ^ (i >> 1);
        Label s(static_cast<std::size_t>(len), '0');
        for (int b = 0; b < len; ++b)
            if (gray >> (len - 1 - b) & 1) s[static_cast<std::size_t>(b)] = '1';
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace detail

// Deterministic Hamiltonian path; supported for FC, EFC, ELC and Hypercube at
// every dimension within the generation bound.
inline HamSequence ham_path(const CubeSpec& spec, int max_label_len = kMaxGenLabelLen) {
    validate(spec);
    const int len = spec.label_length();
    if (len > max_label_len)
        throw unsupported_error(spec_name(spec) + ": label length exceeds the generation bound " +
                                std::to_string(max_label_len));
    switch (spec.family) {
        case Family::Hypercube: return {spec, detail::brgc(len), false};
        case Family::FC: return {spec, detail::fc_gray(len), false};
        case Family::EFC: return {spec, detail::efc_path_order(len), false};
        case Family::ELC: return {spec, detail::elc_path_order(len), false};
        case Family::LC:
            throw unsupported_error("LC: no Hamiltonian path construction (use ham_oracle)");
    }
    throw std::domain_error("unknown family");
}

// Deterministic Hamiltonian cycle where one is guaranteed: EFC dim >= 4,
// ELC dim = 4 or dim >= 6, Hypercube dim >= 2.
inline HamSequence ham_cycle(const CubeSpec& spec, int max_label_len = kMaxGenLabelLen) {
    validate(spec);
    const int len = spec.label_length();
    if (len > max_label_len)
        throw unsupported_error(spec_name(spec) + ": label length exceeds the generation bound " +
                                std::to_string(max_label_len));
    switch (spec.family) {
        case Family::Hypercube:
            if (spec.dim < 2) throw no_cycle_error(spec_name(spec) + ": no Hamiltonian cycle");
            return {spec, detail::brgc(len), true};
        case Family::EFC:
            if (spec.dim < 4) throw no_cycle_error(spec_name(spec) + ": no Hamiltonian cycle");
            return {spec, detail::efc_path_order(len), true};
        case Family::ELC:
            if (spec.dim == 3 || spec.dim == 5)
                throw no_cycle_error(spec_name(spec) + ": no Hamiltonian cycle");
            return {spec, detail::elc_cycle_order(len), true};
        case Family::FC:
            throw unsupported_error(
                "FC: Hamiltonian cycles are not guaranteed (fewer than 1/3 of Fibonacci cubes "
                "have one); use ham_oracle");
        case Family::LC:
            throw unsupported_error("LC: Hamiltonian cycles are not guaranteed; use ham_oracle");
    }
    throw std::domain_error("unknown family");
}

struct HamReport {
    bool pass{false};
    std::string first_violation;  // empty when pass
};

// Independent checker: membership, distinctness, spanning, step adjacency and
// (for cycles) the wrap edge, without trusting any construction.
inline HamReport check_ham(const HamSequence& seq) {
    validate(seq.spec);
    const auto fail = [](std::string why) { return HamReport{false, std::move(why)}; };
    const int len = seq.spec.label_length();
    for (std::size_t i = 0; i < seq.order.size(); ++i) {
        const Label& l = seq.order[i];
        if (static_cast<int>(l.size()) != len || !detail::bits_ok(l))
            return fail("label \"" + l + "\" at position " + std::to_string(i) +
                        " is not a valid " + std::to_string(len) + "-bit label");
        if (!is_member(seq.spec, l))
            return fail("label \"" + l + "\" at position " + std::to_string(i) +
                        " is not a vertex of " + spec_name(seq.spec));
    }
    std::unordered_set<Label> seen;
    for (const Label& l : seq.order)
        if (!seen.insert(l).second) return fail("label \"" + l + "\" appears more than once");
    if (BigInt(seq.order.size()) != family_size(seq.spec))
        return fail("not spanning: sequence has " + std::to_string(seq.order.size()) +
                    " labels but " + spec_name(seq.spec) + " has " +
                    family_size(seq.spec).str() + " vertices");
    for (std::size_t i = 0; i + 1 < seq.order.size(); ++i)
        if (hamming_distance(seq.order[i], seq.order[i + 1]) != 1)
            return fail("consecutive labels \"" + seq.order[i] + "\" and \"" + seq.order[i + 1] +
                        "\" are not adjacent");
    if (seq.cyclic) {
        if (seq.order.size() < 3) return fail("a cycle needs at least 3 vertices");
        if (hamming_distance(seq.order.back(), seq.order.front()) != 1)
            return fail("endpoints \"" + seq.order.back() + "\" and \"" + seq.order.front() +
                        "\" are not adjacent");
    }
    return {true, {}};
}

namespace detail {

struct HamSearch {
    const CubeGraph& g;
    bool cycle;
    int n;
    std::vector<int> path;
    std::vector<char> used;

    HamSearch(const CubeGraph& graph, bool want_cycle)
        : g(graph), cycle(want_cycle), n(static_cast<int>(graph.vertices.size())),
          used(graph.vertices.size(), 0) {}

    // Sound pruning only: every unused vertex must stay reachable from the
    // current endpoint through unused vertices, and an open cycle must keep a
    // potential final edge back to the start.
    bool feasible() const {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{path.back()};
        seen[static_cast<std::size_t>(path.back())] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adj[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(w)] && !used[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached < n - static_cast<int>(path.size())) return false;
        if (cycle) {
            for (int w : g.adj[static_cast<std::size_t>(path[0])])
                if (!used[static_cast<std::size_t>(w)]) return true;
            return false;
        }
        return true;
    }

    bool dfs() {
        if (static_cast<int>(path.size()) == n) {
            if (!cycle) return true;
            for (int w : g.adj[static_cast<std::size_t>(path.back())])
                if (w == path[0]) return true;
            return false;
        }
        if (!feasible()) return false;
        for (int w : g.adj[static_cast<std::size_t>(path.back())]) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            if (dfs()) return true;
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    }

    bool run_from(int start) {
        path.assign(1, start);
        std::fill(used.begin(), used.end(), 0);
        used[static_cast<std::size_t>(start)] = 1;
        return dfs();
    }
};

}  // namespace detail

// Exhaustive backtracking oracle. Returns the lexicographically least witness
// (neighbors are explored in label order; a cycle witness starts at the least
// vertex, which every Hamiltonian cycle contains) or a definitive nullopt.
inline std::optional<HamSequence> ham_oracle(const CubeSpec& spec, bool want_cycle,
                                             std::size_t vertex_cap = 40) {
    validate(spec);
    if (family_size(spec) > BigInt(vertex_cap))
        throw unsupported_error(spec_name(spec) + ": " + family_size(spec).str() +
                                " vertices exceed the oracle cap " + std::to_string(vertex_cap));
    CubeGraph g = build(spec);
    const int n = static_cast<int>(g.vertices.size());
    if (want_cycle && n < 3) return std::nullopt;
    if (!want_cycle && n == 1) return HamSequence{spec, {g.vertices[0]}, false};
    detail::HamSearch search(g, want_cycle);
    const int last_start = want_cycle ? 0 : n - 1;
    for (int start = 0; start <= last_start; ++start) {
        if (search.run_from(start)) {
            std::vector<Label> order;
            order.reserve(search.path.size());
            for (int v : search.path) order.push_back(g.vertices[static_cast<std::size_t>(v)]);
            return HamSequence{spec, std::move(order), want_cycle};
        }
    }
    return std::nullopt;
}

}  // namespace lucube
