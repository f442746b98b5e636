#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "bidouble/bidouble.hpp"
#include "bidouble/certificate.hpp"
#include "bidouble/config.hpp"
#include "bidouble/fibration.hpp"
#include "bidouble/linsys.hpp"
#include "bidouble/picard.hpp"
#include "bidouble/plane.hpp"
#include "bidouble/rational.hpp"

using namespace bidouble;

namespace {

struct Crit {
    bool ok = true;
    std::vector<std::string> notes;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

std::string pt(const ProjPoint& q) {
    return rat_to_string(q.x[0]) + ":" + rat_to_string(q.x[1]) + ":" + rat_to_string(q.x[2]);
}

Config golden() {
    return mk_config(mk_params(rat(2)), Conic::alpha, {rat(1), rat(2)});
}

Crit criterion1() {
    Crit c;
    auto start = std::chrono::steady_clock::now();
    VerifyOutcome out = cmd_verify(rat(2), Conic::alpha, {rat(1), rat(2)});
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    c.expect(out.exit_code == 0, "exit code " + std::to_string(out.exit_code));
    const ordered_json& cert = out.certificate;
    c.expect(cert["status"] == "VERIFIED", "status is not VERIFIED");
    const ordered_json& inv = cert["invariants"];
    c.expect(inv["K2"] == "7", "K2");
    c.expect(inv["pg"] == "0", "pg");
    c.expect(inv["q"] == "0", "q");
    c.expect(inv["chi"] == "1", "chi");
    const std::vector<std::string> eig = {"5", "2", "1", "0"};
    c.expect(inv["eigenspaces"].get<std::vector<std::string>>() == eig, "eigenspaces");
    const std::vector<std::string> genera = {"3", "2", "1"};
    c.expect(inv["genusR"].get<std::vector<std::string>>() == genera, "branch genera");
    c.expect(cert["quotients"][0]["K2_quotient"] == "-2", "first quotient K2");
    c.expect(cert["quotients"][1]["K2_quotient"] == "0", "second quotient K2");
    c.expect(cert["quotients"][2]["kappa"] == "general type", "third quotient kappa");
    c.expect(ms < 10000, "runtime " + std::to_string(ms) + " ms");
    return c;
}

Crit criterion2() {
    Crit c;
    Config cfg = golden();
    auto cat = catalog();
    auto at = [&](const char* n) { return catalog_class(cat, n); };
    auto h0c = [&](const DivClass& d) { return h0_of_class(d, cfg); };

    c.expect(h0c(at("F")) == 2, "h0(F) != 2");
    c.expect(h0c(at("D")) == 5, "h0(D) != 5");
    c.expect(h0c(-2ll * class_K()) == 0, "h0(-2K) != 0");
    BranchData bd = branch_data(cat);
    for (int i = 0; i < 3; ++i)
        c.expect(h0c(class_K() + bd.L[static_cast<std::size_t>(i)]) == 0,
                 "h0(K+L" + std::to_string(i + 1) + ") != 0");
    for (const char* n : {"Gamma0", "Gamma1", "Gamma2", "B1", "B2", "Lambda0"})
        c.expect(h0c(at(n)) == 1, std::string("h0(") + n + ") != 1");
    c.expect(h0c(-2ll * class_K() + 2ll * class_E()) == 2, "h0(Gamma) != 2");
    c.expect(h0c(-2ll * class_K() + 2ll * class_B3()) == 2, "h0(Lambda) != 2");

    std::array<ProjPoint, 4> pk = {cfg.p1, cfg.p2, cfg.p3, cfg.p4};
    c.expect(h0(gamma0_spec(cfg.p0, pk, cfg.l)) == 1, "h0 of the gamma0 system != 1");
    c.expect(h0(delta_spec(1, cfg.p0, pk, cfg.l)) == 3, "h0(delta1) != 3");
    c.expect(h0(delta_spec(2, cfg.p0, pk, cfg.l)) == 3, "h0(delta2) != 3");
    return c;
}

Crit criterion3() {
    Crit c;
    auto cat = catalog();
    c.expect(cat.size() == 28, "catalog size != 28");
    for (const auto& [name, ok] : verify_catalog_identities(cat))
        c.expect(ok, "identity " + name);

    auto at = [&](const char* n) { return catalog_class(cat, n); };
    c.expect(self_int(at("D")) == 7, "D^2 != 7");
    c.expect(self_int(at("K")) == -1, "K^2 != -1");
    c.expect(pair(at("B1"), at("B3")) == 3, "B1.B3 != 3");
    c.expect(pair(at("B2"), at("B3")) == 1, "B2.B3 != 1");
    c.expect(pair(at("B1"), at("B2")) == 1, "B1.B2 != 1");
    c.expect(pair(at("F"), at("B1")) == 4, "F.B1 != 4");
    c.expect(pair(at("D"), at("B1")) == 5, "D.B1 != 5");
    c.expect(pair(at("D"), at("B2")) == 3, "D.B2 != 3");
    c.expect(pair(at("D"), at("B3")) == 1, "D.B3 != 1");
    for (const char* n : {"C1", "C1p", "C2", "C2p", "C3", "C3p", "C4", "C4p"})
        c.expect(pair(at("D"), at(n)) == 0, std::string("D.") + n + " != 0");

    for (const char* n : {"C1", "C1p", "C2", "C2p", "C3", "C3p", "C4", "C4p", "Gamma1",
                          "Gamma2", "Lambda1", "Lambda2", "F", "B3", "E"})
        c.expect(adjunction_genus(at(n)) == 0, std::string("genus(") + n + ") != 0");
    for (const char* n : {"Gamma0", "Lambda0", "B1", "B2"})
        c.expect(adjunction_genus(at(n)) == 1, std::string("genus(") + n + ") != 1");
    c.expect(rr_chi(at("F")) == 2, "chi(F) != 2");
    return c;
}

Crit criterion4() {
    Crit c;
    Config cfg = golden();
    auto cat = catalog();

    FibrationReport fr = verify_rational_fibration(cat);
    FibrationReport f1 = verify_elliptic_h1(cat, cfg);
    FibrationReport f2 = verify_elliptic_h2(cat, cfg);
    for (const FibrationReport* r : {&fr, &f1, &f2}) {
        for (const auto& [name, ok] : r->report.checks) c.expect(ok, r->report.id + ": " + name);
        c.expect(r->budget.total() == 13, r->report.id + ": euler budget != 13");
    }

    auto i0count = [](const FibrationReport& r) {
        int n = 0;
        for (const auto& [name, ok] : r.report.checks)
            if (name.find("I0* shape") != std::string::npos && ok) ++n;
        return n;
    };
    c.expect(i0count(f1) == 2, "elliptic_h1 I0* shape checks");
    c.expect(i0count(f2) == 2, "elliptic_h2 I0* shape checks");

    auto formula_ok = [](const FibrationReport& r) {
        for (const auto& [name, ok] : r.report.checks)
            if (name.find("canonical bundle formula") != std::string::npos) return ok;
        return false;
    };
    c.expect(formula_ok(f1), "elliptic_h1 canonical bundle formula");
    c.expect(formula_ok(f2), "elliptic_h2 canonical bundle formula");

    auto sols = halfsum_multisets();
    c.expect(sols.size() == 1 && sols[0] == std::vector<int>{2},
             "multiple-fiber diophantine solution is not {2}");

    for (const auto& [name, ok] : verify_snc(cat, cfg).checks) c.expect(ok, "snc: " + name);
    for (const auto& [name, ok] : verify_nef_and_contraction(cat).checks)
        c.expect(ok, "nef: " + name);
    for (const auto& [name, ok] : verify_birational_p4(cat, cfg).checks)
        c.expect(ok, "p4: " + name);
    return c;
}

Crit criterion5() {
    Crit c;
    const std::vector<Rat> us = {rat(2), rat(3), rat(3, 2), rat(5), rat(5, 2)};
    for (const Rat& u : us) {
        Params prm = mk_params(u);
        c.expect(jacobian_certificate(prm), "jacobian identity at u = " + rat_to_string(u));
        Config cfg = mk_config(prm, Conic::alpha, {rat(1), rat(2)});
        c.expect(cfg.gamma0.has_value() &&
                     cfg.gamma0->normalized() == gamma0_closed_form(prm).normalized(),
                 "gamma0 interpolant at u = " + rat_to_string(u));
    }

    Params prm = mk_params(rat(2));
    const Rat& t = prm.t;
    HomPoly l02 = linear_form(-(1 + t), Rat(0), t);
    HomPoly l04 = linear_form(t, Rat(-1), 1 - t);
    HomPoly x1 = linear_form(1, 0, 0), x2 = linear_form(0, 1, 0), x3 = linear_form(0, 0, 1);
    HomPoly big = conic_form(-t * t);
    HomPoly f = jacobian_det(l02 * (x2 - x3) * (x1 - x2), l04 * x3 * x1, big * (x1 - x3));
    c.expect(f == (l02 * l04 * q_poly(prm)) * Rat(3), "jacobian identity recomputed");
    HomPoly wrong = conic_form(prm.alpha) * conic_form(prm.alpha);
    c.expect(!(f == (l02 * l04 * wrong) * Rat(3)), "tampered quartic not detected");
    return c;
}

Crit criterion6() {
    Crit c;
    Params prm = mk_params(rat(2));
    Config base = golden();
    HomPoly q2 = q_poly(prm);

    unsigned long seed = 0x5eedcafeUL;
    auto draw = [&seed]() {
        seed = seed * 6364136223846793005UL + 1442695040888963407UL;
        return static_cast<long>((seed >> 33) % 21) - 10;
    };

    auto passes = [&](Conic w, const ProjPoint& q) {
        Config cfg = force_config(prm, w, {rat(1), rat(2)}, std::nullopt, q);
        return check_conditions(cfg).all();
    };
    auto admissible = [&](const ProjPoint& q) {
        if (q2.eval(q) != 0) return false;
        for (const ProjPoint& b : {base.p1, base.p2, base.p3, base.p4})
            if (q == b) return false;
        for (const ProjLine& ln : base.l)
            if (incident(q, ln)) return false;
        return base.gamma0->eval(q) != 0;
    };

    int tested = 0, positives = 0;
    while (tested < 50) {
        ProjPoint q(1, 0, 0);
        if (tested < 25) {
            long a = draw(), b = draw();
            if (a == 0 && b == 0) continue;
            Conic w = (tested % 2 == 0) ? Conic::alpha : Conic::beta;
            q = point_on_conic(prm, w, Rat(a), Rat(b));
        } else {
            long a = draw(), b = draw(), d = draw();
            if (a == 0 && b == 0 && d == 0) continue;
            q = ProjPoint(Rat(a), Rat(b), Rat(d));
        }
        bool lhs = passes(Conic::alpha, q) || passes(Conic::beta, q);
        bool rhs = admissible(q);
        c.expect(lhs == rhs, "conditions-vs-locus biconditional at " + pt(q));
        if (rhs) ++positives;
        ++tested;
    }
    c.expect(positives >= 10, "sample found only " + std::to_string(positives) +
                                  " admissible points");

    VerifyOutcome vp = cmd_verify(rat(2), Conic::alpha, {rat(1), rat(2)});
    VerifyOutcome vm = cmd_verify(rat(-2), Conic::alpha, {rat(1), rat(2)});
    c.expect(vp.exit_code == 0 && vm.exit_code == 0, "mirror pair does not verify");
    c.expect(vp.certificate["conditions"] == vm.certificate["conditions"],
             "mirror conditions differ");
    c.expect(vp.certificate["invariants"] == vm.certificate["invariants"],
             "mirror invariants differ");
    c.expect(vp.certificate["quotients"] == vm.certificate["quotients"],
             "mirror quotients differ");
    c.expect(vp.certificate["status"] == vm.certificate["status"], "mirror status differs");

    auto cat = catalog();
    LinSysSpec dspec = class_to_spec(catalog_class(cat, "D"), base);
    std::size_t prev = h0(dspec);
    c.expect(prev == 5, "h0(D) != 5");
    LinSysSpec ext = dspec;
    const std::vector<ProjPoint> cluster = {base.p0, base.p1, base.p2,
                                            base.p3, base.p4, base.p};
    int placed = 0;
    while (placed < 5) {
        long a = draw(), b = draw(), d = draw();
        if (a == 0 && b == 0 && d == 0) continue;
        ProjPoint q{Rat(a), Rat(b), Rat(d)};
        bool clash = false;
        for (const auto& cp : cluster)
            if (q == cp) clash = true;
        for (const auto& bc : ext.conds)
            if (q == bc.p) clash = true;
        if (clash) continue;
        ext.conds.emplace_back(q, 1);
        std::size_t h = h0(ext);
        c.expect(h == prev - 1,
                 "h0 chain step " + std::to_string(placed) + " at " + pt(q));
        prev = h;
        ++placed;
    }
    c.expect(prev == 0, "h0 chain does not end at 0");

    std::array<ProjPoint, 4> pk = {base.p1, base.p2, base.p3, base.p4};
    const std::vector<LinSysSpec> specs = {gamma0_spec(base.p0, pk, base.l),
                                           delta_spec(1, base.p0, pk, base.l),
                                           delta_spec(2, base.p0, pk, base.l)};
    for (std::size_t i = 0; i < specs.size(); ++i) {
        RatMatrix m = condition_matrix(specs[i]);
        c.expect(rank(m) + kernel_basis(m).size() == HomPoly::term_count(3),
                 "rank-nullity fails for spec " + std::to_string(i));
    }
    return c;
}

Crit criterion7() {
    Crit c;
    for (long uv : {0L, 1L, -1L}) {
        bool threw = false;
        try {
            mk_params(rat(uv));
        } catch (const BadParameter&) {
            threw = true;
        }
        c.expect(threw, "u = " + std::to_string(uv) + " not rejected");
    }

    VerifyOutcome e1 = cmd_verify(rat(2), Conic::alpha, {rat(4), rat(3)});
    c.expect(e1.exit_code == 1, "lam 4:3 exit code");
    c.expect(e1.certificate["reasons"][0] == "ExcludedPoint l_p0p3: p lies on l_p0p3",
             "lam 4:3 reason");
    VerifyOutcome e2 = cmd_verify(rat(2), Conic::alpha, {rat(1), rat(1)});
    c.expect(e2.exit_code == 1, "lam 1:1 exit code");
    c.expect(e2.certificate["reasons"][0] == "ExcludedPoint p4: p coincides with p4",
             "lam 1:1 reason");

    Params prm = mk_params(rat(2));
    Config bad0 =
        force_config(prm, Conic::alpha, {rat(1), rat(2)}, ProjPoint(-1, 1, 0), std::nullopt);
    c.expect(!check_conditions(bad0).cond2, "degenerate p0 not caught by II");
    Config badp =
        force_config(prm, Conic::alpha, {rat(1), rat(2)}, std::nullopt, ProjPoint(1, 1, 0));
    ConditionReport rp = check_conditions(badp);
    c.expect(!rp.cond3 && !rp.cond4, "off-conic p not caught by III and IV");

    auto cat = catalog();
    for (auto& e : cat)
        if (e.name == "B1") e.cls[0] += 1;
    bool flagged = false;
    for (const auto& [name, ok] : verify_catalog_identities(cat))
        if (!ok) flagged = true;
    c.expect(flagged, "tampered catalog not flagged");
    return c;
}

}  // namespace

int main() {
    int failures = 0;
    auto gate = [&failures](const std::string& label, const Crit& c) {
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << label << "\n";
        for (const auto& n : c.notes) std::cout << "        " << n << "\n";
        if (!c.ok) ++failures;
    };
    gate("1: golden parameters verify and match the published invariants", criterion1());
    gate("2: interpolation h0 table", criterion2());
    gate("3: lattice catalog, pairings and genera", criterion3());
    gate("4: fibration structure and euler budgets", criterion4());
    gate("5: jacobian and gamma0 closed forms across parameters", criterion5());
    gate("6: seeded property checks", criterion6());
    gate("7: degenerate inputs are rejected with named reasons", criterion7());
    return failures;
}
