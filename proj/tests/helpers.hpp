#pragma once

// Test-only utilities: independent brute-force oracles and a CLI runner.
// The oracles deliberately take different routes than the library (all-pairs
// enumeration, Floyd-Warshall) so they can vouch for it.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace testutil {

inline std::vector<std::string> all_strings(int len) {
    std::vector<std::string> out;
    out.reserve(std::size_t{1} << len);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
        std::string s(static_cast<std::size_t>(len), '0');
        for (int b = 0; b < len; ++b)
            if (x >> (len - 1 - b) & 1) s[static_cast<std::size_t>(b)] = '1';
        out.push_back(std::move(s));
    }
    return out;
}

inline int hamming(const std::string& a, const std::string& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

// All-pairs Hamming-1 edge enumeration (quadratic, independent of the
// library's bit-flip method).
inline std::vector<std::pair<std::string, std::string>> brute_edges(
    const std::vector<std::string>& vs) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (hamming(vs[i], vs[j]) == 1) out.emplace_back(vs[i], vs[j]);
    return out;
}

// Floyd-Warshall diameter; -1 when disconnected.
inline int brute_diameter(const std::vector<std::string>& vs) {
    const int n = static_cast<int>(vs.size());
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (hamming(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]) == 1)
                d[i][j] = d[j][i] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    int diam = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (d[i][j] >= inf) return -1;
            diam = std::max(diam, d[i][j]);
        }
    return diam;
}

struct CliResult {
    int exit_code;
    std::string output;  // stdout and stderr merged
};

inline CliResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
#ifdef LUCUBE_BIN
    const std::string bin = LUCUBE_BIN;
#else
    const std::string bin = "lucube";
#endif
    const std::string cmd =
        (env_prefix.empty() ? "" : env_prefix + " ") + bin + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), got);
    int status = pclose(pipe);
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, output};
}

inline std::filesystem::path fresh_temp_dir(const std::string& tag) {
    static std::mt19937_64 rng{std::random_device{}()};
    auto dir = std::filesystem::temp_directory_path() /
               (tag + "-" + std::to_string(rng()));
    std::filesystem::create_directories(dir);
    return dir;
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testutil
