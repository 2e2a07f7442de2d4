#pragma once

#include <string>

#include "json.hpp"

#include "lucube/embedding.hpp"

namespace lucube {

using Json = nlohmann::ordered_json;

// Malformed embedding document (distinct from domain errors: maps to the
// IO/parse exit code).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// DOT and edge-list ids cannot be empty, so the empty label prints as "@".
inline std::string dot_id(const Label& l) { return l.empty() ? "@" : l; }

inline std::string to_dot(const CubeGraph& g) {
    std::string out = "graph {\n";
    for (const Label& v : g.vertices) out += "  \"" + dot_id(v) + "\";\n";
    for (auto [i, j] : g.edges)
        out += "  \"" + dot_id(g.vertices[static_cast<std::size_t>(i)]) + "\" -- \"" +
               dot_id(g.vertices[static_cast<std::size_t>(j)]) + "\";\n";
    out += "}\n";
    return out;
}

inline std::string to_edge_list(const CubeGraph& g) {
    std::string out;
    for (auto [i, j] : g.edges)
        out += dot_id(g.vertices[static_cast<std::size_t>(i)]) + " " +
               dot_id(g.vertices[static_cast<std::size_t>(j)]) + "\n";
    return out;
}

inline Json graph_json(const CubeGraph& g) {
    Json j;
    j["family"] = family_name(g.spec.family);
    j["dim"] = g.spec.dim;
    j["vertices"] = g.vertices;
    Json edges = Json::array();
    for (auto [i, j2] : g.edges)
        edges.push_back({g.vertices[static_cast<std::size_t>(i)],
                         g.vertices[static_cast<std::size_t>(j2)]});
    j["edges"] = std::move(edges);
    return j;
}

inline Json stats_json(const GraphStats& st) {
    Json j;
    j["num_vertices"] = st.num_vertices;
    j["num_edges"] = st.num_edges;
    j["min_degree"] = st.min_degree;
    j["max_degree"] = st.max_degree;
    if (st.diameter)
        j["diameter"] = *st.diameter;
    else
        j["diameter"] = "disconnected";
    return j;
}

inline Json ham_json(const HamSequence& s) { return Json(s.order); }

inline std::string ham_edge_list(const HamSequence& s) {
    std::string out;
    for (std::size_t i = 0; i + 1 < s.order.size(); ++i)
        out += dot_id(s.order[i]) + " " + dot_id(s.order[i + 1]) + "\n";
    if (s.cyclic && s.order.size() > 1)
        out += dot_id(s.order.back()) + " " + dot_id(s.order.front()) + "\n";
    return out;
}

inline std::string ham_dot(const HamSequence& s) {
    std::string out = "graph {\n";
    for (const Label& v : s.order) out += "  \"" + dot_id(v) + "\";\n";
    for (std::size_t i = 0; i + 1 < s.order.size(); ++i)
        out += "  \"" + dot_id(s.order[i]) + "\" -- \"" + dot_id(s.order[i + 1]) + "\";\n";
    if (s.cyclic && s.order.size() > 1)
        out += "  \"" + dot_id(s.order.back()) + "\" -- \"" + dot_id(s.order.front()) + "\";\n";
    out += "}\n";
    return out;
}

// Expansion as the exact unreduced ratio "host/guest" ("26/18", "5/5").
inline std::string expansion_string(const VerificationReport& r) {
    return r.expansion_num.str() + "/" + r.expansion_den.str();
}

inline Json guest_json(const GuestDesc& g) {
    return std::visit(
        [](const auto& d) -> Json {
            using T = std::decay_t<decltype(d)>;
            Json j;
            if constexpr (std::is_same_v<T, ArrayGuest>) {
                j["kind"] = "array";
                j["length"] = d.length;
            } else if constexpr (std::is_same_v<T, RingGuest>) {
                j["kind"] = "ring";
                j["length"] = d.length;
            } else if constexpr (std::is_same_v<T, MeshGuest>) {
                j["kind"] = "mesh";
                j["rows_dim"] = d.rows_dim;
                j["cols_dim"] = d.cols_dim;
            } else if constexpr (std::is_same_v<T, MeshPairGuest>) {
                j["kind"] = "mesh_pair";
                j["meshes"] = Json::array({guest_json(GuestDesc(d.first)),
                                           guest_json(GuestDesc(d.second))});
            } else if constexpr (std::is_same_v<T, HypercubeGuest>) {
                j["kind"] = "hypercube";
                j["dim"] = d.dim;
            }
            return j;
        },
        g);
}

inline GuestDesc parse_guest(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "array") return ArrayGuest{j.at("length").get<std::uint64_t>()};
    if (kind == "ring") return RingGuest{j.at("length").get<std::uint64_t>()};
    if (kind == "mesh") return MeshGuest{j.at("rows_dim").get<int>(), j.at("cols_dim").get<int>()};
    if (kind == "mesh_pair") {
        const Json& meshes = j.at("meshes");
        if (!meshes.is_array() || meshes.size() != 2)
            throw parse_error("mesh_pair guest needs exactly two meshes");
        auto a = parse_guest(meshes[0]);
        auto b = parse_guest(meshes[1]);
        if (!std::holds_alternative<MeshGuest>(a) || !std::holds_alternative<MeshGuest>(b))
            throw parse_error("mesh_pair guest entries must be meshes");
        return MeshPairGuest{std::get<MeshGuest>(a), std::get<MeshGuest>(b)};
    }
    if (kind == "hypercube") return HypercubeGuest{j.at("dim").get<int>()};
    throw parse_error("unknown guest kind: " + kind);
}

// Canonical coordinate of a guest node: index for arrays/rings, [r, c] for
// meshes, [mesh, r, c] for pairs, the source label for hypercube guests.
inline Json guest_coordinate(const GuestDesc& g, std::uint64_t node) {
    return std::visit(
        [node](const auto& d) -> Json {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ArrayGuest> || std::is_same_v<T, RingGuest>) {
                return node;
            } else if constexpr (std::is_same_v<T, MeshGuest>) {
                std::uint64_t cols = mesh_cols(d);
                return Json::array({node / cols, node % cols});
            } else if constexpr (std::is_same_v<T, MeshPairGuest>) {
                std::uint64_t n1 = guest_node_count(GuestDesc(d.first));
                const MeshGuest& m = node < n1 ? d.first : d.second;
                std::uint64_t local = node < n1 ? node : node - n1;
                std::uint64_t cols = mesh_cols(m);
                return Json::array({node < n1 ? 0 : 1, local / cols, local % cols});
            } else {
                Label s(static_cast<std::size_t>(d.dim), '0');
                for (int b = 0; b < d.dim; ++b)
                    if (node >> (d.dim - 1 - b) & 1) s[static_cast<std::size_t>(b)] = '1';
                return s;
            }
        },
        g);
}

inline Json embedding_document(const Embedding& e, const VerificationReport& r) {
    Json j;
    j["guest"] = guest_json(e.guest);
    j["host"] = Json{{"family", family_name(e.host.family)}, {"dim", e.host.dim}};
    Json map = Json::array();
    for (std::size_t i = 0; i < e.map.size(); ++i)
        map.push_back(Json::array({guest_coordinate(e.guest, i), e.map[i]}));
    j["map"] = std::move(map);
    j["dilation"] = r.dilation;
    j["expansion"] = expansion_string(r);
    return j;
}

struct ParsedDocument {
    Embedding embedding;
    int stored_dilation{0};
    std::string stored_expansion;
};

// Strict parse: coordinates must appear in the canonical deterministic order.
inline ParsedDocument parse_embedding_document(const Json& j) {
    try {
        ParsedDocument doc;
        doc.embedding.guest = parse_guest(j.at("guest"));
        doc.embedding.host = CubeSpec{parse_family(j.at("host").at("family").get<std::string>()),
                                      j.at("host").at("dim").get<int>()};
        validate(doc.embedding.host);
        validate_guest(doc.embedding.guest);
        const Json& map = j.at("map");
        if (!map.is_array()) throw parse_error("map must be an array");
        const std::uint64_t n = guest_node_count(doc.embedding.guest);
        if (map.size() != n)
            throw parse_error("map has " + std::to_string(map.size()) + " entries, guest has " +
                              std::to_string(n) + " nodes");
        for (std::size_t i = 0; i < map.size(); ++i) {
            const Json& entry = map[i];
            if (!entry.is_array() || entry.size() != 2)
                throw parse_error("map entry " + std::to_string(i) +
                                  " must be a [coordinate, label] pair");
            if (entry[0] != guest_coordinate(doc.embedding.guest, i))
                throw parse_error("map entry " + std::to_string(i) +
                                  " is out of canonical order");
            doc.embedding.map.push_back(entry[1].get<std::string>());
        }
        doc.stored_dilation = j.at("dilation").get<int>();
        doc.stored_expansion = j.at("expansion").get<std::string>();
        return doc;
    } catch (const Json::exception& e) {
        throw parse_error(std::string("malformed embedding document: ") + e.what());
    } catch (const std::domain_error& e) {
        throw parse_error(std::string("malformed embedding document: ") + e.what());
    }
}

}  // namespace lucube
