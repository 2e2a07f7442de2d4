#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include "lucube/graph.hpp"

#include "helpers.hpp"

using namespace lucube;

namespace {
const std::vector<Family> kAll = {Family::Hypercube, Family::FC, Family::EFC, Family::LC,
                                  Family::ELC};
int dim_for_len(Family f, int len) { return f == Family::Hypercube ? len : len + 2; }

std::vector<std::pair<Label, Label>> edge_labels(const CubeGraph& g) {
    std::vector<std::pair<Label, Label>> out;
    for (auto [i, j] : g.edges)
        out.emplace_back(g.vertices[static_cast<std::size_t>(i)],
                         g.vertices[static_cast<std::size_t>(j)]);
    return out;
}
}  // namespace

TEST_CASE("adjacency is Hamming distance exactly 1") {
    CHECK(adjacent("000", "100"));
    CHECK_FALSE(adjacent("011", "000"));
    CHECK_FALSE(adjacent("", ""));
    CHECK(hamming_distance("0110", "1001") == 4);
    CHECK_THROWS_AS(adjacent("01", "011"), std::domain_error);
}

TEST_CASE("build: golden counts") {
    auto efc4 = build({Family::EFC, 4});
    CHECK(efc4.vertices.size() == 4);
    CHECK(efc4.edges.size() == 4);  // the 4-cycle of Lemma 1
    auto h3 = build({Family::Hypercube, 3});
    CHECK(h3.vertices.size() == 8);
    CHECK(h3.edges.size() == 12);
    auto elc6 = build({Family::ELC, 6});
    CHECK(elc6.vertices.size() == 8);
    CHECK(elc6.edges.size() == testutil::brute_edges(elc6.vertices).size());
    auto elc5 = build({Family::ELC, 5});
    CHECK(elc5.edges.size() == 5);  // enumerated over the five paper labels
}

TEST_CASE("bit-flip edge enumeration agrees with all-pairs comparison") {
    for (Family f : kAll) {
        for (int len = 0; len <= 9; ++len) {
            int dim = dim_for_len(f, len);
            if (dim < min_dim(f)) continue;
            auto g = build({f, dim});
            CHECK(edge_labels(g) == testutil::brute_edges(g.vertices));
        }
    }
}

TEST_CASE("bfs distances") {
    auto efc5 = build({Family::EFC, 5});
    CHECK(bfs_distance(efc5, "000", "101") == 2);
    CHECK(bfs_distance(efc5, "011", "011") == 0);
    auto fc5 = build({Family::FC, 5});
    CHECK(bfs_distance(fc5, "101", "010") == 3);
    CHECK_THROWS_AS(bfs_distance(fc5, "011", "000"), std::domain_error);
}

TEST_CASE("stats: golden values and oracle agreement") {
    auto h3 = stats({Family::Hypercube, 3});
    CHECK(h3.num_vertices == 8);
    CHECK(h3.num_edges == 12);
    CHECK(h3.min_degree == 3);
    CHECK(h3.max_degree == 3);
    CHECK(h3.diameter == 3);

    auto efc4 = stats({Family::EFC, 4});
    CHECK(efc4.num_vertices == 4);
    CHECK(efc4.num_edges == 4);
    CHECK(efc4.diameter == 2);

    auto elc5 = stats({Family::ELC, 5});
    CHECK(elc5.num_vertices == 5);
    CHECK(elc5.diameter == 3);  // 100 -> 000 -> 001 -> 011

    auto fc6 = stats({Family::FC, 6});
    CHECK(fc6.num_vertices == 8);
    CHECK(fc6.num_edges == testutil::brute_edges(gen_vertices({Family::FC, 6})).size());
    CHECK(fc6.diameter == testutil::brute_diameter(gen_vertices({Family::FC, 6})));

    for (Family f : kAll) {
        for (int len = 2; len <= 7; ++len) {
            auto g = build({f, dim_for_len(f, len)});
            auto st = stats({f, dim_for_len(f, len)});
            std::size_t degree_sum = 0;
            for (const auto& nbrs : g.adj) degree_sum += nbrs.size();
            CHECK(degree_sum == 2 * st.num_edges);  // handshake
            CHECK(st.diameter == testutil::brute_diameter(g.vertices));
        }
    }
}

TEST_CASE("single-vertex graphs") {
    auto h0 = stats({Family::Hypercube, 0});
    CHECK(h0.num_vertices == 1);
    CHECK(h0.num_edges == 0);
    CHECK(h0.min_degree == 0);
    CHECK(h0.diameter == 0);
}

TEST_CASE("bipartite parity coloring is proper") {
    auto parity = [](const Label& l) {
        return std::count(l.begin(), l.end(), '1') % 2;
    };
    for (Family f : kAll) {
        for (int len = 0; len <= 10; ++len) {
            int dim = dim_for_len(f, len);
            if (dim < min_dim(f)) continue;
            auto g = build({f, dim});
            for (auto [i, j] : g.edges)
                CHECK(parity(g.vertices[static_cast<std::size_t>(i)]) !=
                      parity(g.vertices[static_cast<std::size_t>(j)]));
        }
    }
}

TEST_CASE("FC(n) is an induced subgraph of H(n-2)") {
    for (int n = 3; n <= 12; ++n) {
        auto fc = build({Family::FC, n});
        auto h = build({Family::Hypercube, n - 2});
        for (const auto& v : fc.vertices) CHECK(h.index_of(v) >= 0);
        // adjacency agreement on FC vertex pairs
        auto fc_edges = edge_labels(fc);
        std::vector<std::pair<Label, Label>> induced;
        for (std::size_t i = 0; i < fc.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < fc.vertices.size(); ++j)
                if (bfs_distance(h, fc.vertices[i], fc.vertices[j]) == 1)
                    induced.emplace_back(fc.vertices[i], fc.vertices[j]);
        CHECK(fc_edges == induced);
    }
}

TEST_CASE("deterministic ordering of vertices and edges") {
    auto g1 = build({Family::ELC, 7});
    auto g2 = build({Family::ELC, 7});
    CHECK(g1.vertices == g2.vertices);
    CHECK(g1.edges == g2.edges);
    CHECK(std::is_sorted(g1.vertices.begin(), g1.vertices.end()));
    CHECK(std::is_sorted(g1.edges.begin(), g1.edges.end()));
}

TEST_CASE("materialization bounds") {
    CHECK_THROWS_AS(build({Family::Hypercube, 23}), unsupported_error);
    CHECK_THROWS_AS(build({Family::FC, 25}), unsupported_error);
    CHECK_THROWS_AS(stats({Family::FC, 19}), unsupported_error);
    CHECK_NOTHROW(build({Family::FC, 24}, 22));
    CHECK_THROWS_AS(build({Family::FC, 10}, 3), unsupported_error);
}
