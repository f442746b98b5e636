#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "bidouble/certificate.hpp"

using namespace bidouble;

TEST_CASE("golden certificate verifies with stable key order and bytes") {
    VerifyOutcome out = cmd_verify(rat(2), Conic::alpha, {rat(1), rat(2)});
    REQUIRE(out.exit_code == 0);
    const ordered_json& cert = out.certificate;
    REQUIRE(cert["status"] == "VERIFIED");
    REQUIRE(cert["version"] == "1");
    REQUIRE(cert["input"]["u"] == "2");
    REQUIRE(cert["input"]["conic"] == "alpha");
    REQUIRE(cert["input"]["lam"] == "1:2");
    REQUIRE(cert["reasons"].empty());

    std::vector<std::string> keys;
    for (const auto& item : cert.items()) keys.push_back(item.key());
    const std::vector<std::string> want = {
        "version", "input",          "config", "conditions", "gamma0_match",
        "jacobian_identity", "catalog_identities", "fibrations", "snc", "nef",
        "p4", "invariants", "quotients", "status", "reasons"};
    REQUIRE(keys == want);

    REQUIRE(cert["conditions"]["I"] == true);
    REQUIRE(cert["conditions"]["IV"] == true);
    REQUIRE(cert["gamma0_match"] == true);
    REQUIRE(cert["jacobian_identity"] == true);
    REQUIRE(cert["invariants"]["K2"] == "7");
    REQUIRE(cert["invariants"]["pg"] == "0");
    REQUIRE(cert["invariants"]["q"] == "0");
    REQUIRE(cert["invariants"]["chi"] == "1");
    const std::vector<std::string> eig = {"5", "2", "1", "0"};
    REQUIRE(cert["invariants"]["eigenspaces"].get<std::vector<std::string>>() == eig);
    REQUIRE(cert["config"]["p0"] == "5:4:9");
    REQUIRE(cert["quotients"].size() == 3);
    REQUIRE(cert["quotients"][2]["kappa"] == "general type");

    VerifyOutcome again = cmd_verify(rat(2), Conic::alpha, {rat(1), rat(2)});
    REQUIRE(out.certificate.dump(2) == again.certificate.dump(2));
}

TEST_CASE("the mirror parameter -u produces the same verdict sections") {
    VerifyOutcome a = cmd_verify(rat(2), Conic::alpha, {rat(1), rat(2)});
    VerifyOutcome b = cmd_verify(rat(-2), Conic::alpha, {rat(1), rat(2)});
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    REQUIRE(a.certificate["conditions"] == b.certificate["conditions"]);
    REQUIRE(a.certificate["invariants"] == b.certificate["invariants"]);
    REQUIRE(a.certificate["quotients"] == b.certificate["quotients"]);
    REQUIRE(a.certificate["status"] == b.certificate["status"]);
    REQUIRE(a.certificate["config"]["p0"] != b.certificate["config"]["p0"]);
}

TEST_CASE("excluded lam choices fail with named reasons") {
    VerifyOutcome on_p4 = cmd_verify(rat(2), Conic::alpha, {rat(1), rat(1)});
    REQUIRE(on_p4.exit_code == 1);
    REQUIRE(on_p4.certificate["status"] == "FAILED");
    REQUIRE(on_p4.certificate["reasons"][0] == "ExcludedPoint p4: p coincides with p4");

    VerifyOutcome on_line = cmd_verify(rat(2), Conic::alpha, {rat(4), rat(3)});
    REQUIRE(on_line.exit_code == 1);
    REQUIRE(on_line.certificate["reasons"][0] == "ExcludedPoint l_p0p3: p lies on l_p0p3");
}

TEST_CASE("degenerate u and lam are usage errors") {
    std::pair<Rat, Rat> lam{rat(1), rat(2)};
    REQUIRE_THROWS_AS(cmd_verify(rat(0), Conic::alpha, lam), BadParameter);
    REQUIRE_THROWS_AS(cmd_verify(rat(1), Conic::alpha, lam), BadParameter);
    REQUIRE_THROWS_AS(cmd_verify(rat(-1), Conic::beta, lam), BadParameter);
    std::pair<Rat, Rat> zero{rat(0), rat(0)};
    REQUIRE_THROWS_AS(cmd_verify(rat(2), Conic::alpha, zero), BadParameter);
}

TEST_CASE("the lam grid enumerates primitive pairs by height then lex") {
    std::vector<std::pair<long, long>> want = {{0, 1}, {1, -1}, {1, 0},  {1, 1},
                                               {1, -2}, {1, 2},  {2, -1}, {2, 1},
                                               {1, -3}, {1, 3},  {2, -3}, {2, 3}};
    REQUIRE(lam_grid(12) == want);
    REQUIRE(lam_grid(5).size() == 5);
}

TEST_CASE("search partitions the grid and is deterministic") {
    std::vector<Rat> us = {rat(2)};
    std::vector<Conic> conics = {Conic::alpha};
    ordered_json j = cmd_search(us, 12, conics, false);

    REQUIRE(j["grid"]["total"] == "12");
    REQUIRE(j["hit_count"] == "7");
    REQUIRE(j["failure_count"] == "5");
    long long bucketed = 0;
    for (const auto& item : j["failures"].items()) {
        REQUIRE(item.key().rfind("ExcludedPoint ", 0) == 0);
        bucketed += std::stoll(item.value().get<std::string>());
    }
    REQUIRE(bucketed == 5);

    bool golden_hit = false;
    for (const auto& h : j["hits"])
        if (h["u"] == "2" && h["conic"] == "alpha" && h["lam"] == "1:2") golden_hit = true;
    REQUIRE(golden_hit);

    ordered_json j2 = cmd_search(us, 12, conics, false);
    REQUIRE(j.dump(2) == j2.dump(2));

    std::vector<Rat> none;
    REQUIRE_THROWS_AS(cmd_search(none, 12, conics, false), BadParameter);
}

TEST_CASE("params command reports the derived constants") {
    ordered_json j = cmd_params(rat(2));
    REQUIRE(j["u"] == "2");
    REQUIRE(j["t"] == "5/4");
    REQUIRE(j["s"] == "3/4");
    REQUIRE(j["alpha"] == "-5/8");
    REQUIRE(j["beta"] == "-5/2");
    REQUIRE(j["p0"] == "5:4:9");
}

TEST_CASE("catalog command emits 28 classes and a clean identity list") {
    ordered_json j = cmd_catalog_json();
    REQUIRE(j["classes"].size() == 28);
    REQUIRE(j["ok"] == true);
    for (const auto& e : j["identities"]) REQUIRE(e["ok"] == true);
    REQUIRE(cmd_catalog_text().find("D") != std::string::npos);
}
