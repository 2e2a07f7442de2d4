#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "lucube/labels.hpp"

namespace lucube {

inline int hamming_distance(const Label& a, const Label& b) {
    if (a.size() != b.size())
        throw std::domain_error("hamming distance of labels with different lengths: \"" + a +
                                "\" vs \"" + b + "\"");
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

inline bool adjacent(const Label& a, const Label& b) { return hamming_distance(a, b) == 1; }

// Materialized cube graph. Vertices are sorted lexicographically; edges hold
// index pairs (i, j) with i < j, sorted, so every serialized form is stable.
struct CubeGraph {
    CubeSpec spec;
    std::vector<Label> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    int index_of(const Label& l) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), l);
        if (it == vertices.end() || *it != l) return -1;
        return static_cast<int>(it - vertices.begin());
    }
};

// Edge enumeration via single-bit flips filtered by the membership predicate;
// tests check agreement with the all-pairs method on small instances.
inline CubeGraph build(const CubeSpec& spec, int max_label_len = 22) {
    validate(spec);
    if (spec.label_length() > max_label_len)
        throw unsupported_error(spec_name(spec) + ": label length " +
                                std::to_string(spec.label_length()) +
                                " exceeds the graph materialization bound " +
                                std::to_string(max_label_len));
    CubeGraph g;
    g.spec = spec;
    g.vertices = gen_vertices(spec, max_label_len);
    g.adj.assign(g.vertices.size(), {});
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        Label flipped = g.vertices[i];
        for (std::size_t b = 0; b < flipped.size(); ++b) {
            flipped[b] = flipped[b] == '0' ? '1' : '0';
            if (flipped > g.vertices[i] && is_member(spec, flipped)) {
                int j = g.index_of(flipped);
                if (j >= 0) g.edges.emplace_back(static_cast<int>(i), j);
            }
            flipped[b] = g.vertices[i][b];
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    for (auto [i, j] : g.edges) {
        g.adj[static_cast<std::size_t>(i)].push_back(j);
        g.adj[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

namespace detail {

// Single-source BFS distances; -1 for unreachable.
inline std::vector<int> bfs_from(const CubeGraph& g, int src) {
    std::vector<int> dist(g.vertices.size(), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[static_cast<std::size_t>(v)])
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace detail

// Shortest-path length in the cube graph; nullopt when unreachable.
inline std::optional<int> bfs_distance(const CubeGraph& g, const Label& a, const Label& b) {
    int i = g.index_of(a), j = g.index_of(b);
    if (i < 0) throw std::domain_error("bfs_distance: \"" + a + "\" is not a vertex");
    if (j < 0) throw std::domain_error("bfs_distance: \"" + b + "\" is not a vertex");
    int d = detail::bfs_from(g, i)[static_cast<std::size_t>(j)];
    if (d < 0) return std::nullopt;
    return d;
}

struct GraphStats {
    std::size_t num_vertices{0};
    std::size_t num_edges{0};
    int min_degree{0};
    int max_degree{0};
    std::optional<int> diameter;  // nullopt = disconnected
};

inline GraphStats stats(const CubeSpec& spec, int max_label_len = 16) {
    if (spec.label_length() > max_label_len)
        throw unsupported_error(spec_name(spec) + ": label length exceeds the all-pairs BFS bound " +
                                std::to_string(max_label_len));
    CubeGraph g = build(spec, max_label_len);
    GraphStats st;
    st.num_vertices = g.vertices.size();
    st.num_edges = g.edges.size();
    st.min_degree = g.vertices.empty() ? 0 : static_cast<int>(g.adj[0].size());
    st.max_degree = st.min_degree;
    for (const auto& nbrs : g.adj) {
        st.min_degree = std::min(st.min_degree, static_cast<int>(nbrs.size()));
        st.max_degree = std::max(st.max_degree, static_cast<int>(nbrs.size()));
    }
    int diam = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        auto dist = detail::bfs_from(g, static_cast<int>(v));
        for (int d : dist) {
            if (d < 0) return st;  // disconnected: diameter stays nullopt
            diam = std::max(diam, d);
        }
    }
    st.diameter = diam;
    return st;
}

}  // namespace lucube
