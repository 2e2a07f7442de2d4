// lucube: construct Fibonacci-family cubes, Hamiltonian sequences and
// verified dilation-1 embeddings.
//
// Exit codes: 0 ok, 1 usage, 2 unsupported/domain, 3 verification failure,
// 4 IO/parse.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "lucube/io.hpp"

namespace {

using namespace lucube;

class verification_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// LUCUBE_MAX_DIM (a paper dimension) raises or lowers every materialization
// bound the tool applies; library defaults are used when unset.
std::optional<int> env_max_dim() {
    const char* v = std::getenv("LUCUBE_MAX_DIM");
    if (!v || !*v) return std::nullopt;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw std::domain_error("LUCUBE_MAX_DIM must be an integer");
    }
}

int cap_len(const CubeSpec& spec, int default_len) {
    if (auto dim = env_max_dim()) return CubeSpec{spec.family, *dim}.label_length();
    return default_len;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open output file: " + path);
    out << text;
    if (!out) throw io_error("failed writing output file: " + path);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kFamilies = "h, fc, efc, lc or elc";

Family family_arg(const std::string& s) { return parse_family(s); }

void run_sizes(const std::string& family, int max_dim, const std::string& out) {
    Family f = family_arg(family);
    std::string text;
    for (const auto& [n, count] : size_table(f, max_dim))
        text += std::to_string(n) + "\t" + count.str() + "\n";
    write_output(text, out);
}

void run_gen(const std::string& family, int dim, const std::string& format,
             const std::string& out) {
    CubeSpec spec{family_arg(family), dim};
    CubeGraph g = build(spec, cap_len(spec, 22));
    if (format == "dot")
        write_output(to_dot(g), out);
    else if (format == "edges")
        write_output(to_edge_list(g), out);
    else
        write_output(graph_json(g).dump(2) + "\n", out);
}

void run_ham(const std::string& family, int dim, bool cycle, const std::string& format,
             const std::string& out) {
    CubeSpec spec{family_arg(family), dim};
    const int cap = cap_len(spec, kMaxGenLabelLen);
    HamSequence seq = cycle ? ham_cycle(spec, cap) : ham_path(spec, cap);
    if (format == "dot")
        write_output(ham_dot(seq), out);
    else if (format == "edges")
        write_output(ham_edge_list(seq), out);
    else
        write_output(ham_json(seq).dump(2) + "\n", out);
}

void run_stats(const std::string& family, int dim, const std::string& out) {
    CubeSpec spec{family_arg(family), dim};
    write_output(stats_json(stats(spec, cap_len(spec, 16))).dump(2) + "\n", out);
}

// Every embed subcommand verifies its construction before writing; a failed
// verification is an internal error, not an expected outcome.
void emit_embedding(const Embedding& e, const std::string& out) {
    VerificationReport r = verify(e);
    if (!r.ok() || r.dilation > 1)
        throw verification_failure("internal error: construction failed verification: " +
                                   r.first_violation.value_or("dilation above 1"));
    write_output(embedding_document(e, r).dump(2) + "\n", out);
}

void run_verify(const std::string& path) {
    Json j;
    try {
        j = Json::parse(slurp(path));
    } catch (const Json::exception& e) {
        throw io_error("cannot parse " + path + ": " + e.what());
    }
    ParsedDocument doc = parse_embedding_document(j);
    VerificationReport r = verify(doc.embedding);
    auto yesno = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "members: " << yesno(r.members) << "\n";
    std::cout << "injective: " << yesno(r.injective) << "\n";
    if (r.disjoint) std::cout << "disjoint: " << yesno(*r.disjoint) << "\n";
    if (r.partition) std::cout << "partition: " << yesno(*r.partition) << "\n";
    std::cout << "dilation: " << r.dilation << " (stored " << doc.stored_dilation << ")\n";
    std::cout << "expansion: " << expansion_string(r) << " (stored " << doc.stored_expansion
              << ")\n";
    if (!r.ok()) {
        std::cout << "result: FAIL (" << r.first_violation.value_or("invariant violated") << ")\n";
        throw verification_failure(r.first_violation.value_or("embedding invariant violated"));
    }
    if (r.dilation != doc.stored_dilation || expansion_string(r) != doc.stored_expansion) {
        std::cout << "result: FAIL (metric mismatch)\n";
        throw verification_failure("metric mismatch between stored and recomputed values");
    }
    std::cout << "result: PASS\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Fibonacci-family cube toolkit: vertex sets, graph exports, Hamiltonian\n"
        "paths/cycles and verified dilation-1 embeddings.\n"
        "Families: h (hypercube), fc, efc, lc, elc; dimensions are paper dimensions\n"
        "(label length = dim - 2 except for h). The empty label prints as \"\" in\n"
        "JSON and as \"@\" in DOT/edge-list output. LUCUBE_MAX_DIM overrides the\n"
        "materialization bounds. Exit codes: 0 ok, 1 usage, 2 unsupported/domain,\n"
        "3 verification failure, 4 IO/parse."};
    app.require_subcommand(1);

    const CLI::Validator family_check(
        [](std::string& s) -> std::string {
            try {
                parse_family(s);
                return {};
            } catch (const std::exception& e) {
                return e.what();
            }
        },
        "FAMILY");

    std::string family, format = "json", out_path, doc_path;
    int dim = 0, max_dim = 0, rows_dim = 0, cols_dim = 0, pair_n = 0, hdim = 0;
    std::uint64_t len = 0;
    bool cycle = false;

    auto* sizes = app.add_subcommand("sizes", "Print one 'dim<TAB>count' line per dimension");
    sizes->add_option("--family", family, kFamilies)->required()->check(family_check);
    sizes->add_option("--max-dim", max_dim, "Largest dimension to print")->required();
    sizes->add_option("-o,--output", out_path, "Output file (default stdout)");
    sizes->callback([&] { run_sizes(family, max_dim, out_path); });

    auto* gen = app.add_subcommand("gen", "Generate a cube graph (dot, json or edges)");
    gen->add_option("--family", family, kFamilies)->required()->check(family_check);
    gen->add_option("--dim", dim, "Cube dimension")->required();
    gen->add_option("--format", format, "dot, json or edges (default json)")
        ->check(CLI::IsMember({"dot", "json", "edges"}));
    gen->add_option("-o,--output", out_path, "Output file (default stdout)");
    gen->callback([&] { run_gen(family, dim, format, out_path); });

    auto* ham = app.add_subcommand("ham", "Construct a Hamiltonian path or cycle");
    ham->add_option("--family", family, kFamilies)->required()->check(family_check);
    ham->add_option("--dim", dim, "Cube dimension")->required();
    ham->add_flag("--cycle", cycle, "Build a cycle instead of a path");
    ham->add_option("--format", format, "json (label array), edges or dot")
        ->check(CLI::IsMember({"dot", "json", "edges"}));
    ham->add_option("-o,--output", out_path, "Output file (default stdout)");
    ham->callback([&] { run_ham(family, dim, cycle, format, out_path); });

    auto* st = app.add_subcommand("stats", "Exact structural statistics as JSON");
    st->add_option("--family", family, kFamilies)->required()->check(family_check);
    st->add_option("--dim", dim, "Cube dimension")->required();
    st->add_option("-o,--output", out_path, "Output file (default stdout)");
    st->callback([&] { run_stats(family, dim, out_path); });

    auto* embed = app.add_subcommand("embed", "Construct and verify a dilation-1 embedding");
    embed->require_subcommand(1);

    auto* earr = embed->add_subcommand("array", "Linear array into its optimum cube");
    earr->add_option("--len", len, "Number of array nodes")->required();
    earr->add_option("--family", family, "fc, efc or elc")->required()->check(family_check);
    earr->add_option("-o,--output", out_path, "Output file (default stdout)");
    earr->callback([&] { emit_embedding(embed_array(len, family_arg(family)), out_path); });

    auto* ering = embed->add_subcommand("ring", "Ring into the cube of exactly its size");
    ering->add_option("--len", len, "Number of ring nodes")->required();
    ering->add_option("--family", family, "efc, elc or h")->required()->check(family_check);
    ering->add_option("-o,--output", out_path, "Output file (default stdout)");
    ering->callback([&] { emit_embedding(embed_ring(len, family_arg(family)), out_path); });

    auto* emesh = embed->add_subcommand(
        "mesh", "fib(i) x efc_size(j) Fibonacci mesh into EFC(i+j-1)");
    emesh->add_option("--rows-dim", rows_dim, "Row dimension i (rows = fib(i))")->required();
    emesh->add_option("--cols-dim", cols_dim, "Column dimension j (cols = efc_size(j))")
        ->required();
    emesh->add_option("-o,--output", out_path, "Output file (default stdout)");
    emesh->callback([&] { emit_embedding(embed_mesh(rows_dim, cols_dim), out_path); });

    auto* e6 = embed->add_subcommand(
        "two-meshes-efc", "Disjoint f_{n+1} x F_{n+1} and f_n x F_n meshes into EFC(2n+1)");
    e6->add_option("--n", pair_n, "Mesh parameter n >= 3")->required();
    e6->add_option("-o,--output", out_path, "Output file (default stdout)");
    e6->callback([&] { emit_embedding(embed_two_meshes_efc(pair_n), out_path); });

    auto* e7 = embed->add_subcommand(
        "two-meshes-elc", "Disjoint f_n x F_{n+1} and f_n x F_{n-1} meshes into ELC(2n+1)");
    e7->add_option("--n", pair_n, "Mesh parameter n >= 3")->required();
    e7->add_option("-o,--output", out_path, "Output file (default stdout)");
    e7->callback([&] { emit_embedding(embed_two_meshes_elc(pair_n), out_path); });

    auto* ehc = embed->add_subcommand("hypercube", "H(d) into FC(2d+1) by 0-interleaving");
    ehc->add_option("--dim", hdim, "Hypercube dimension d >= 1")->required();
    ehc->add_option("-o,--output", out_path, "Output file (default stdout)");
    ehc->callback([&] { emit_embedding(embed_hypercube_into_fc(hdim), out_path); });

    auto* ver = app.add_subcommand("verify", "Re-verify an embedding document from scratch");
    ver->add_option("file", doc_path, "Embedding document (JSON)")->required();
    ver->callback([&] { run_verify(doc_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const verification_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
