#include <catch2/catch_amalgamated.hpp>

#include "lucube/hamiltonian.hpp"

#include "helpers.hpp"

using namespace lucube;

namespace {

const std::vector<Label> kElc4Cycle = {"00", "10", "11", "01"};
const std::vector<Label> kElc5Path = {"100", "000", "001", "011", "010"};
const std::vector<Label> kElc6Cycle = {"0000", "1000", "1010", "0010",
                                       "0011", "0001", "0101", "0100"};

}  // namespace

TEST_CASE("checker passes the three explicit Lemma 1 sequences") {
    CHECK(check_ham({{Family::ELC, 4}, kElc4Cycle, true}).pass);
    CHECK(check_ham({{Family::ELC, 5}, kElc5Path, false}).pass);
    CHECK(check_ham({{Family::ELC, 6}, kElc6Cycle, true}).pass);
}

TEST_CASE("constructions reproduce the explicit sequences") {
    CHECK(ham_path({Family::ELC, 5}).order == kElc5Path);
    CHECK(ham_cycle({Family::ELC, 4}).order == kElc4Cycle);
    CHECK(ham_cycle({Family::ELC, 6}).order == kElc6Cycle);
    CHECK(ham_path({Family::FC, 2}).order == std::vector<Label>{""});
    // the spec's suggested EFC(5) path
    CHECK(ham_path({Family::EFC, 5}).order ==
          std::vector<Label>{"000", "010", "011", "001", "101", "100"});
}

TEST_CASE("constructed paths are checker-valid across all supported dims") {
    for (int n = 2; n <= 14; ++n) {
        auto r = check_ham(ham_path({Family::FC, n}));
        INFO("FC(" << n << "): " << r.first_violation);
        CHECK(r.pass);
    }
    for (int n = 2; n <= 14; ++n) {
        auto r = check_ham(ham_path({Family::EFC, n}));
        INFO("EFC(" << n << "): " << r.first_violation);
        CHECK(r.pass);
    }
    for (int n = 3; n <= 14; ++n) {
        auto r = check_ham(ham_path({Family::ELC, n}));
        INFO("ELC(" << n << "): " << r.first_violation);
        CHECK(r.pass);
    }
    for (int n = 0; n <= 12; ++n) {
        auto r = check_ham(ham_path({Family::Hypercube, n}));
        INFO("H(" << n << "): " << r.first_violation);
        CHECK(r.pass);
    }
}

TEST_CASE("constructed cycles are checker-valid where guaranteed") {
    for (int n = 4; n <= 14; ++n) CHECK(check_ham(ham_cycle({Family::EFC, n})).pass);
    CHECK(check_ham(ham_cycle({Family::ELC, 4})).pass);
    for (int n = 6; n <= 14; ++n) CHECK(check_ham(ham_cycle({Family::ELC, n})).pass);
    for (int n = 2; n <= 12; ++n) CHECK(check_ham(ham_cycle({Family::Hypercube, n})).pass);
}

TEST_CASE("cycle constructions refuse exactly the proven-absent cases") {
    CHECK_THROWS_AS(ham_cycle({Family::ELC, 3}), no_cycle_error);
    CHECK_THROWS_AS(ham_cycle({Family::ELC, 5}), no_cycle_error);
    CHECK_THROWS_AS(ham_cycle({Family::EFC, 2}), no_cycle_error);
    CHECK_THROWS_AS(ham_cycle({Family::EFC, 3}), no_cycle_error);
    CHECK_THROWS_AS(ham_cycle({Family::Hypercube, 1}), no_cycle_error);
    CHECK_THROWS_AS(ham_cycle({Family::FC, 6}), unsupported_error);
    CHECK_THROWS_AS(ham_cycle({Family::LC, 6}), unsupported_error);
    CHECK_THROWS_AS(ham_path({Family::LC, 6}), unsupported_error);
}

TEST_CASE("endpoint stability: byte-identical sequences on every invocation") {
    for (Family f : {Family::FC, Family::EFC, Family::ELC}) {
        for (int n = min_dim(f); n <= 12; ++n)
            CHECK(ham_path({f, n}).order == ham_path({f, n}).order);
    }
}

TEST_CASE("checker rejects each violation with a description") {
    auto bad_cycle = HamSequence{{Family::ELC, 5}, kElc5Path, true};
    auto r = check_ham(bad_cycle);
    CHECK_FALSE(r.pass);
    CHECK(r.first_violation.find("not adjacent") != std::string::npos);

    auto missing = kElc5Path;
    missing.pop_back();
    r = check_ham({{Family::ELC, 5}, missing, false});
    CHECK_FALSE(r.pass);
    CHECK(r.first_violation.find("not spanning") != std::string::npos);

    auto dup = kElc5Path;
    dup.back() = "100";
    r = check_ham({{Family::ELC, 5}, dup, false});
    CHECK_FALSE(r.pass);
    CHECK(r.first_violation.find("more than once") != std::string::npos);

    auto foreign = kElc5Path;
    foreign[2] = "101";  // member of EFC(5), not of ELC(5)
    r = check_ham({{Family::ELC, 5}, foreign, false});
    CHECK_FALSE(r.pass);
    CHECK(r.first_violation.find("not a vertex") != std::string::npos);

    auto swapped = kElc5Path;
    std::swap(swapped[1], swapped[3]);
    r = check_ham({{Family::ELC, 5}, swapped, false});
    CHECK_FALSE(r.pass);
    CHECK(r.first_violation.find("not adjacent") != std::string::npos);

    r = check_ham({{Family::ELC, 3}, {"0", "1"}, true});
    CHECK_FALSE(r.pass);
    CHECK(r.first_violation.find("at least 3") != std::string::npos);

    auto wrong_len = kElc5Path;
    wrong_len[0] = "1000";
    r = check_ham({{Family::ELC, 5}, wrong_len, false});
    CHECK_FALSE(r.pass);
}

TEST_CASE("oracle: witnesses and refutations") {
    CHECK_FALSE(ham_oracle({Family::ELC, 5}, true).has_value());

    auto w = ham_oracle({Family::ELC, 4}, true);
    REQUIRE(w.has_value());
    CHECK(check_ham(*w).pass);
    // lexicographically least witness starting at the least vertex
    CHECK(w->order == std::vector<Label>{"00", "01", "11", "10"});

    auto w2 = ham_oracle({Family::EFC, 6}, true);
    REQUIRE(w2.has_value());
    CHECK(check_ham(*w2).pass);
    CHECK(w2->order == ham_oracle({Family::EFC, 6}, true)->order);  // deterministic

    // FC(4) = {00, 01, 10}: the only Hamiltonian paths run 01-00-10, so the
    // lexicographically least witness starts at 01.
    auto p = ham_oracle({Family::FC, 4}, false);
    REQUIRE(p.has_value());
    CHECK(p->order == std::vector<Label>{"01", "00", "10"});

    auto single = ham_oracle({Family::FC, 2}, false);
    REQUIRE(single.has_value());
    CHECK(single->order == std::vector<Label>{""});
}

TEST_CASE("oracle: parity refutation for every odd-order spec within the cap") {
    const std::vector<CubeSpec> odd = {
        {Family::FC, 2},  {Family::FC, 4},  {Family::FC, 5}, {Family::FC, 7},
        {Family::FC, 8},  {Family::EFC, 2}, {Family::ELC, 5}, {Family::LC, 3},
        {Family::LC, 4},  {Family::LC, 6},  {Family::LC, 7},  {Family::LC, 9},
        {Family::Hypercube, 0}};
    for (const auto& spec : odd) {
        REQUIRE(family_size(spec) % 2 == 1);
        CHECK_FALSE(ham_oracle(spec, true).has_value());
    }
}

TEST_CASE("oracle agreement with the constructions (<= 40 vertices)") {
    auto construction_has_cycle = [](const CubeSpec& s) -> bool {
        try {
            return check_ham(ham_cycle(s)).pass;
        } catch (const no_cycle_error&) {
            return false;
        }
    };
    std::vector<CubeSpec> specs;
    for (int n = 2; n <= 8; ++n) specs.push_back({Family::EFC, n});
    for (int n = 3; n <= 9; ++n) specs.push_back({Family::ELC, n});
    for (int n = 0; n <= 5; ++n) specs.push_back({Family::Hypercube, n});
    for (const auto& s : specs) {
        REQUIRE(family_size(s) <= 40);
        CHECK(construction_has_cycle(s) == ham_oracle(s, true).has_value());
        // paths exist everywhere the constructions claim them
        CHECK(check_ham(ham_path(s)).pass);
        CHECK(ham_oracle(s, false).has_value());
    }
}

TEST_CASE("oracle cap") {
    CHECK_THROWS_AS(ham_oracle({Family::EFC, 9}, true), unsupported_error);  // 42 > 40
    CHECK_THROWS_AS(ham_oracle({Family::EFC, 5}, true, 5), unsupported_error);
    CHECK(ham_oracle({Family::EFC, 5}, true, 6).has_value());
}

TEST_CASE("construction bound") {
    CHECK_THROWS_AS(ham_path({Family::FC, 35}), unsupported_error);
    CHECK_THROWS_AS(ham_path({Family::FC, 10}, 4), unsupported_error);
}
