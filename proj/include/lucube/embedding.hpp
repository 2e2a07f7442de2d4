#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "lucube/hamiltonian.hpp"

namespace lucube {

struct ArrayGuest {
    std::uint64_t length{0};
};
struct RingGuest {
    std::uint64_t length{0};
};
// Extended Fibonacci mesh: fib(rows_dim) x efc_size(cols_dim) grid.
struct MeshGuest {
    int rows_dim{0};
    int cols_dim{0};
};
struct MeshPairGuest {
    MeshGuest first, second;
};
struct HypercubeGuest {
    int dim{0};
};

using GuestDesc = std::variant<ArrayGuest, RingGuest, MeshGuest, MeshPairGuest, HypercubeGuest>;

namespace detail {

inline std::uint64_t to_u64(const BigInt& x, const char* what) {
    if (x < 0 || x > BigInt(std::uint64_t(1) << 62))
        throw unsupported_error(std::string(what) + " too large to materialize");
    return x.convert_to<std::uint64_t>();
}

}  // namespace detail

inline std::uint64_t mesh_rows(const MeshGuest& m) {
    return detail::to_u64(fib(m.rows_dim), "mesh rows");
}
inline std::uint64_t mesh_cols(const MeshGuest& m) {
    return detail::to_u64(efc_size(m.cols_dim), "mesh cols");
}

inline void validate_guest(const GuestDesc& g) {
    std::visit(
        [](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ArrayGuest>) {
                if (d.length < 1) throw std::domain_error("array guest needs at least 1 node");
            } else if constexpr (std::is_same_v<T, RingGuest>) {
                if (d.length < 3) throw std::domain_error("ring guest needs at least 3 nodes");
            } else if constexpr (std::is_same_v<T, MeshGuest>) {
                if (d.rows_dim < 2 || d.cols_dim < 2)
                    throw std::domain_error("mesh guest dimensions must be >= 2");
            } else if constexpr (std::is_same_v<T, MeshPairGuest>) {
                validate_guest(GuestDesc(d.first));
                validate_guest(GuestDesc(d.second));
            } else if constexpr (std::is_same_v<T, HypercubeGuest>) {
                if (d.dim < 1) throw std::domain_error("hypercube guest dimension must be >= 1");
            }
        },
        g);
}

inline std::uint64_t guest_node_count(const GuestDesc& g) {
    return std::visit(
        [](const auto& d) -> std::uint64_t {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ArrayGuest> || std::is_same_v<T, RingGuest>)
                return d.length;
            else if constexpr (std::is_same_v<T, MeshGuest>)
                return mesh_rows(d) * mesh_cols(d);
            else if constexpr (std::is_same_v<T, MeshPairGuest>)
                return guest_node_count(GuestDesc(d.first)) + guest_node_count(GuestDesc(d.second));
            else
                return std::uint64_t(1) << d.dim;
        },
        g);
}

// Guest edges over the canonical node order: index order for arrays/rings,
// row-major for meshes (first mesh then second for pairs), numeric label
// order for hypercube guests. The two meshes of a pair share no edges.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> guest_edges(const GuestDesc& g) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    auto add_grid = [&out](std::uint64_t rows, std::uint64_t cols, std::uint64_t base) {
        for (std::uint64_t r = 0; r < rows; ++r)
            for (std::uint64_t c = 0; c < cols; ++c) {
                std::uint64_t v = base + r * cols + c;
                if (c + 1 < cols) out.emplace_back(v, v + 1);
                if (r + 1 < rows) out.emplace_back(v, v + cols);
            }
    };
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ArrayGuest>) {
                for (std::uint64_t i = 0; i + 1 < d.length; ++i) out.emplace_back(i, i + 1);
            } else if constexpr (std::is_same_v<T, RingGuest>) {
                for (std::uint64_t i = 0; i + 1 < d.length; ++i) out.emplace_back(i, i + 1);
                out.emplace_back(0, d.length - 1);
            } else if constexpr (std::is_same_v<T, MeshGuest>) {
                add_grid(mesh_rows(d), mesh_cols(d), 0);
            } else if constexpr (std::is_same_v<T, MeshPairGuest>) {
                add_grid(mesh_rows(d.first), mesh_cols(d.first), 0);
                add_grid(mesh_rows(d.second), mesh_cols(d.second),
                         guest_node_count(GuestDesc(d.first)));
            } else if constexpr (std::is_same_v<T, HypercubeGuest>) {
                for (std::uint64_t x = 0; x < (std::uint64_t(1) << d.dim); ++x)
                    for (int b = 0; b < d.dim; ++b) {
                        std::uint64_t y = x ^ (std::uint64_t(1) << b);
                        if (y > x) out.emplace_back(x, y);
                    }
            }
        },
        g);
    return out;
}

// An injective assignment of guest nodes (canonical order) to host labels.
struct Embedding {
    GuestDesc guest;
    CubeSpec host;
    std::vector<Label> map;
};

struct VerificationReport {
    bool members{false};
    bool injective{false};
    int dilation{-1};  // -1 when not computable (bad labels)
    BigInt expansion_num{0}, expansion_den{0};
    std::optional<bool> disjoint;   // mesh pairs: the two image sets share no label
    std::optional<bool> partition;  // mesh pairs whose node count equals the host size
    std::optional<std::string> first_violation;

    bool ok() const { return members && injective && disjoint.value_or(true); }
};

// Recomputes every invariant from scratch: label well-formedness and host
// membership, injectivity, exact dilation (host BFS for any non-adjacent image
// pair), exact expansion, and disjointness/partition for mesh pairs.
inline VerificationReport verify(const Embedding& e, int max_host_label_len = 22) {
    validate(e.host);
    validate_guest(e.guest);
    VerificationReport r;
    r.expansion_num = family_size(e.host);
    r.expansion_den = guest_node_count(e.guest);
    auto violation = [&r](std::string why) {
        if (!r.first_violation) r.first_violation = std::move(why);
    };
    const std::uint64_t n = guest_node_count(e.guest);
    if (e.map.size() != n) {
        violation("map has " + std::to_string(e.map.size()) + " entries but the guest has " +
                  std::to_string(n) + " nodes");
        return r;
    }
    const int len = e.host.label_length();
    r.members = true;
    for (std::size_t i = 0; i < e.map.size(); ++i) {
        const Label& l = e.map[i];
        bool good = static_cast<int>(l.size()) == len && detail::bits_ok(l) && is_member(e.host, l);
        if (!good) {
            r.members = false;
            violation("node " + std::to_string(i) + " image \"" + l + "\" is not a vertex of " +
                      spec_name(e.host));
            break;
        }
    }
    r.injective = true;
    {
        std::map<Label, std::size_t> first_at;
        for (std::size_t i = 0; i < e.map.size(); ++i) {
            auto [it, fresh] = first_at.emplace(e.map[i], i);
            if (!fresh) {
                r.injective = false;
                violation("nodes " + std::to_string(it->second) + " and " + std::to_string(i) +
                          " share the image \"" + e.map[i] + "\"");
                break;
            }
        }
    }
    if (const auto* pair = std::get_if<MeshPairGuest>(&e.guest)) {
        const std::uint64_t n1 = guest_node_count(GuestDesc(pair->first));
        std::set<Label> a(e.map.begin(), e.map.begin() + static_cast<std::ptrdiff_t>(n1));
        bool dis = true;
        for (std::size_t i = static_cast<std::size_t>(n1); i < e.map.size(); ++i)
            if (a.count(e.map[i])) {
                dis = false;
                violation("mesh images are not disjoint at label \"" + e.map[i] + "\"");
                break;
            }
        r.disjoint = dis;
        if (BigInt(n) == family_size(e.host) && r.members && r.injective && dis) {
            auto all = gen_vertices(e.host);
            std::vector<Label> sorted_map(e.map);
            std::sort(sorted_map.begin(), sorted_map.end());
            r.partition = sorted_map == all;
        }
    }
    if (r.members) {
        r.dilation = 0;
        std::optional<CubeGraph> host_graph;  // built only if some image pair is non-adjacent
        std::map<int, std::vector<int>> bfs_memo;
        for (auto [u, v] : guest_edges(e.guest)) {
            const Label& a = e.map[static_cast<std::size_t>(u)];
            const Label& b = e.map[static_cast<std::size_t>(v)];
            int h = hamming_distance(a, b);
            if (h == 1) {
                r.dilation = std::max(r.dilation, 1);
                continue;
            }
            if (h == 0) continue;  // duplicate images, already reported
            if (!host_graph) host_graph = build(e.host, max_host_label_len);
            int src = host_graph->index_of(a);
            auto [it, fresh] = bfs_memo.try_emplace(src);
            if (fresh) it->second = detail::bfs_from(*host_graph, src);
            int d = it->second[static_cast<std::size_t>(host_graph->index_of(b))];
            if (d < 0) {
                violation("images \"" + a + "\" and \"" + b + "\" are unreachable in the host");
                r.dilation = -1;
                return r;
            }
            r.dilation = std::max(r.dilation, d);
        }
    }
    return r;
}

// Theorem 2: the first N vertices of the optimum cube's Hamiltonian path.
inline Embedding embed_array(std::uint64_t n, Family family) {
    if (family != Family::FC && family != Family::EFC && family != Family::ELC)
        throw std::domain_error("array embedding supports families fc, efc and elc");
    if (n < 1) throw std::domain_error("array length must be >= 1");
    const int dim = optimum_dim(family, BigInt(n));
    HamSequence path = ham_path({family, dim});
    std::vector<Label> map(path.order.begin(),
                           path.order.begin() + static_cast<std::ptrdiff_t>(n));
    return {ArrayGuest{n}, {family, dim}, std::move(map)};
}

namespace detail {

inline bool cycle_supported(Family f, int dim) {
    switch (f) {
        case Family::Hypercube: return dim >= 2;
        case Family::EFC: return dim >= 4;
        case Family::ELC: return dim == 4 || dim >= 6;
        default: return false;
    }
}

}  // namespace detail

// Theorem 3: rings whose size equals a cube size with a guaranteed
// Hamiltonian cycle; anything else is rejected.
inline Embedding embed_ring(std::uint64_t n, Family family) {
    if (n < 3) throw std::domain_error("ring length must be >= 3");
    if (family == Family::FC || family == Family::LC)
        throw unsupported_error("unsupported ring size: " + std::string(family_name(family)) +
                                " has no guaranteed Hamiltonian cycles");
    int dim = min_dim(family);
    while (family_size(family, dim) < BigInt(n)) ++dim;
    if (family_size(family, dim) != BigInt(n))
        throw unsupported_error("unsupported ring size: no " + std::string(family_name(family)) +
                                " cube has exactly " + std::to_string(n) + " nodes");
    if (!detail::cycle_supported(family, dim))
        throw unsupported_error("unsupported ring size: " + spec_name({family, dim}) +
                                " has no Hamiltonian cycle");
    HamSequence cyc = ham_cycle({family, dim});
    return {RingGuest{n}, {family, dim}, cyc.order};
}

// Theorem 4 / Corollary 5: fib(i) x efc_size(j) mesh into EFC(i+j-1).
// Node (r, c) maps to row_label ++ "0" ++ col_label; the Fibonacci row part
// comes first so the column part's final "11" (if any) stays final.
inline Embedding embed_mesh(int rows_dim, int cols_dim) {
    MeshGuest guest{rows_dim, cols_dim};
    validate_guest(GuestDesc(guest));
    const int host_dim = rows_dim + cols_dim - 1;
    CubeSpec host{Family::EFC, host_dim};
    if (host.label_length() > kMaxGenLabelLen)
        throw unsupported_error(spec_name(host) + ": host exceeds the generation bound");
    const auto rows = ham_path({Family::FC, rows_dim}).order;
    const auto cols = ham_path({Family::EFC, cols_dim}).order;
    std::vector<Label> map;
    map.reserve(rows.size() * cols.size());
    for (const Label& r : rows)
        for (const Label& c : cols) map.push_back(r + "0" + c);
    return {guest, host, std::move(map)};
}

// Theorem 6, first statement: the f_{n+1} x F_{n+1} mesh via "0" separators
// and the f_n x F_n mesh via the "010" separator partition EFC(2n+1); the two
// image sets differ at bit position n.
inline Embedding embed_two_meshes_efc(int n) {
    if (n < 3) throw std::domain_error("two-meshes-efc needs n >= 3");
    CubeSpec host{Family::EFC, 2 * n + 1};
    if (host.label_length() > kMaxGenLabelLen)
        throw unsupported_error(spec_name(host) + ": host exceeds the generation bound");
    MeshPairGuest guest{MeshGuest{n + 1, n + 1}, MeshGuest{n, n}};
    std::vector<Label> map;
    const auto rows_a = ham_path({Family::FC, n + 1}).order;
    const auto cols_a = ham_path({Family::EFC, n + 1}).order;
    for (const Label& r : rows_a)
        for (const Label& c : cols_a) map.push_back(r + "0" + c);
    const auto rows_b = ham_path({Family::FC, n}).order;
    const auto cols_b = ham_path({Family::EFC, n}).order;
    for (const Label& r : rows_b)
        for (const Label& c : cols_b) map.push_back(r + "010" + c);
    return {guest, host, std::move(map)};
}

// Theorem 7: the f_n x F_{n+1} mesh through the 0-branch and the f_n x F_{n-1}
// mesh through the 10...0-branch of ELC(2n+1); the first bit separates them.
inline Embedding embed_two_meshes_elc(int n) {
    if (n < 3) throw std::domain_error("two-meshes-elc needs n >= 3");
    CubeSpec host{Family::ELC, 2 * n + 1};
    if (host.label_length() > kMaxGenLabelLen)
        throw unsupported_error(spec_name(host) + ": host exceeds the generation bound");
    MeshPairGuest guest{MeshGuest{n, n + 1}, MeshGuest{n, n - 1}};
    std::vector<Label> map;
    for (const Label& x : embed_mesh(n, n + 1).map) map.push_back("0" + x);
    for (const Label& y : embed_mesh(n, n - 1).map) map.push_back("10" + y + "0");
    return {guest, host, std::move(map)};
}

// H(d) into FC(2d+1): interleave a 0 after every bit except the last.
inline Embedding embed_hypercube_into_fc(int d) {
    if (d < 1) throw std::domain_error("hypercube embedding needs dimension >= 1");
    CubeSpec host{Family::FC, 2 * d + 1};
    if (host.label_length() > kMaxGenLabelLen)
        throw unsupported_error(spec_name(host) + ": host exceeds the generation bound");
    std::vector<Label> map;
    map.reserve(std::size_t{1} << d);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << d); ++x) {
        Label img;
        img.reserve(static_cast<std::size_t>(2 * d - 1));
        for (int b = 0; b < d; ++b) {
            img.push_back(x >> (d - 1 - b) & 1 ? '1' : '0');
            if (b + 1 < d) img.push_back('0');
        }
        map.push_back(std::move(img));
    }
    return {HypercubeGuest{d}, host, std::move(map)};
}

// Exhaustive search for an injective dilation-1 embedding of the guest into
// the host; deterministic lexicographic-first witness or a definitive nullopt.
inline std::optional<Embedding> search_embedding_oracle(const GuestDesc& guest,
                                                        const CubeSpec& host,
                                                        std::size_t vertex_cap = 30) {
    validate(host);
    validate_guest(guest);
    if (family_size(host) > BigInt(vertex_cap))
        throw unsupported_error(spec_name(host) + ": " + family_size(host).str() +
                                " vertices exceed the embedding-oracle cap " +
                                std::to_string(vertex_cap));
    const CubeGraph g = build(host);
    const std::uint64_t n = guest_node_count(guest);
    if (n > g.vertices.size()) return std::nullopt;
    std::vector<std::vector<std::size_t>> placed_nbrs(n);
    for (auto [u, v] : guest_edges(guest)) {
        auto lo = std::min(u, v), hi = std::max(u, v);
        placed_nbrs[static_cast<std::size_t>(hi)].push_back(static_cast<std::size_t>(lo));
    }
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(g.vertices.size(), 0);
    auto fits = [&](std::size_t node, int idx) {
        for (std::size_t p : placed_nbrs[node])
            if (hamming_distance(g.vertices[static_cast<std::size_t>(idx)],
                                 g.vertices[static_cast<std::size_t>(image[p])]) != 1)
                return false;
        return true;
    };
    auto dfs = [&](auto&& self, std::size_t node) -> bool {
        if (node == n) return true;
        if (placed_nbrs[node].empty()) {
            for (int idx = 0; idx < static_cast<int>(g.vertices.size()); ++idx) {
                if (used[static_cast<std::size_t>(idx)]) continue;
                image[node] = idx;
                used[static_cast<std::size_t>(idx)] = 1;
                if (self(self, node + 1)) return true;
                used[static_cast<std::size_t>(idx)] = 0;
            }
        } else {
            // candidates: host neighbors of the first placed guest neighbor
            for (int idx : g.adj[static_cast<std::size_t>(image[placed_nbrs[node][0]])]) {
                if (used[static_cast<std::size_t>(idx)] || !fits(node, idx)) continue;
                image[node] = idx;
                used[static_cast<std::size_t>(idx)] = 1;
                if (self(self, node + 1)) return true;
                used[static_cast<std::size_t>(idx)] = 0;
            }
        }
        image[node] = -1;
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    std::vector<Label> map;
    map.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < n; ++i)
        map.push_back(g.vertices[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])]);
    return Embedding{guest, host, std::move(map)};
}

}  // namespace lucube
