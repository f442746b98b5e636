#include <catch2/catch_amalgamated.hpp>

#include "bidouble/bidouble.hpp"
#include "bidouble/config.hpp"

using namespace bidouble;

static Config golden() {
    return mk_config(mk_params(rat(2)), Conic::alpha, {rat(1), rat(2)});
}

TEST_CASE("branch data satisfies the divisor identities") {
    auto cat = catalog();
    BranchData bd = branch_data(cat);
    auto at = [&](const char* n) { return catalog_class(cat, n); };

    REQUIRE(bd.Delta[2] == at("B3") + at("C4") + at("C4p"));
    REQUIRE(2ll * bd.L[0] == bd.Delta[1] + bd.Delta[2]);
    REQUIRE(2ll * bd.L[1] == bd.Delta[0] + bd.Delta[2]);
    REQUIRE(2ll * bd.L[2] == bd.Delta[0] + bd.Delta[1]);
    REQUIRE(bd.L[0] + bd.Delta[0] == bd.L[1] + bd.L[2]);
}

TEST_CASE("a tampered branch divisor raises IdentityViolation") {
    auto cat = catalog();
    for (auto& e : cat)
        if (e.name == "Delta2") e.cls[0] += 1;
    REQUIRE_THROWS_AS(branch_data(cat), IdentityViolation);
}

TEST_CASE("surface invariants on the golden configuration") {
    Config cfg = golden();
    auto cat = catalog();
    BranchData bd = branch_data(cat);
    SurfaceInvariants inv = invariants_S(bd, cat, cfg);

    REQUIRE(inv.K2 == 7);
    REQUIRE(inv.pg == 0);
    REQUIRE(inv.q == 0);
    REQUIRE(inv.chi == 1);
    const std::array<long long, 4> eig{5, 2, 1, 0};
    REQUIRE(inv.eigenspaces == eig);
    const std::array<long long, 3> kr{5, 3, 1};
    const std::array<long long, 3> r2{-1, -1, -1};
    const std::array<long long, 3> gr{3, 2, 1};
    const std::array<long long, 3> kk{9, 7, 5};
    REQUIRE(inv.KR == kr);
    REQUIRE(inv.R2 == r2);
    REQUIRE(inv.genusR == gr);
    REQUIRE(inv.k == kk);
}

TEST_CASE("a tampered canonical comparison class raises MismatchWithPaper") {
    Config cfg = golden();
    auto cat = catalog();
    BranchData bd = branch_data(cat);
    for (auto& e : cat)
        if (e.name == "D") e.cls[10] += 1;
    REQUIRE_THROWS_AS(invariants_S(bd, cat, cfg), MismatchWithPaper);
}

TEST_CASE("quotient surface invariants") {
    auto cat = catalog();
    BranchData bd = branch_data(cat);
    QuotientReport rep = quotient_invariants(bd, cat);

    REQUIRE(rep.entries[0].label == "Enriques-birational");
    REQUIRE(rep.entries[0].K2_V == -6);
    REQUIRE(rep.entries[0].contracted == 4);
    REQUIRE(rep.entries[0].K2_quotient == -2);
    REQUIRE(rep.entries[0].kappa == "0");

    REQUIRE(rep.entries[1].label == "properly-elliptic");
    REQUIRE(rep.entries[1].K2_V == -6);
    REQUIRE(rep.entries[1].contracted == 6);
    REQUIRE(rep.entries[1].K2_quotient == 0);
    REQUIRE(rep.entries[1].kappa == "1");

    REQUIRE(rep.entries[2].label == "numerical-Campedelli-resolution");
    REQUIRE(rep.entries[2].K2_V == -4);
    REQUIRE(rep.entries[2].contracted == 6);
    REQUIRE(rep.entries[2].K2_quotient == 2);
    REQUIRE(rep.entries[2].kappa == "general type");
}
