// The three fibrations of the blown-up plane: the rational pencil of lines
// through p0 and the two elliptic pencils |-2K+2E| and |-2K+2B3|.  Fiber
// decompositions are certified in the lattice; the geometric side (distinct
// residual intersections, nodes, branch directions) is certified on the plane
// models by exact restriction to the line through p0 and p.
#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "picard.hpp"
#include "plane.hpp"

namespace bidouble {

struct CheckReport {
    std::string id;
    std::vector<std::pair<std::string, bool>> checks;

    void add(const std::string& name, bool ok) { checks.emplace_back(name, ok); }
    bool all() const {
        for (const auto& [n, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

enum class FiberKind { rational_I, chain, I0star, double_smooth, two_component };

struct FiberComponent {
    std::string name;
    DivClass cls;
    int mult;
    long long genus;
};

struct FiberDecomposition {
    std::string name;
    DivClass fiber_class;
    std::vector<FiberComponent> components;
    FiberKind kind;
};

// Local Euler numbers of the fiber shapes that occur.
inline int euler_of_kind(const std::string& kind) {
    if (kind == "I0*") return 6;
    if (kind == "double smooth elliptic") return 0;
    if (kind == "elliptic+(-1)-curve meeting once") return 1;
    if (kind == "chain of 3 rationals") return 4;
    if (kind == "two rationals meeting once") return 3;
    if (kind == "smooth elliptic") return 0;
    if (kind == "smooth rational") return 2;
    throw std::invalid_argument("euler_of_kind: unknown kind " + kind);
}

struct EulerBudget {
    std::string fibration;
    std::string generic_kind;
    std::vector<std::string> singular_kinds;
    int total() const {
        int g = euler_of_kind(generic_kind);
        int t = 2 * g;
        for (const auto& k : singular_kinds) t += euler_of_kind(k) - g;
        return t;
    }
};

struct FibrationReport {
    CheckReport report;
    EulerBudget budget;
};

namespace detail {

// Shared FiberDecomposition invariants: exact sum, fiber-class square and
// pairing facts, per-kind component intersections, genus roles.
inline void check_decomposition(CheckReport& rep, const FiberDecomposition& dec) {
    DivClass sum{};
    for (const auto& comp : dec.components)
        sum = sum + static_cast<long long>(comp.mult) * comp.cls;
    rep.add(dec.name + ": components sum to fiber class", sum == dec.fiber_class);
    bool genus_ok = true, fiber_zero = true;
    for (const auto& comp : dec.components) {
        if (adjunction_genus(comp.cls) != comp.genus) genus_ok = false;
        if (pair(comp.cls, dec.fiber_class) != 0) fiber_zero = false;
    }
    rep.add(dec.name + ": component genera match roles", genus_ok);
    rep.add(dec.name + ": components have zero pairing with the fiber class", fiber_zero);
    switch (dec.kind) {
        case FiberKind::I0star: {
            // central double component meets each of the four tails once;
            // tails pairwise disjoint
            bool ok = dec.components.size() == 5 && dec.components[0].mult == 2;
            if (ok) {
                for (std::size_t i = 1; i < 5; ++i) {
                    ok = ok && dec.components[i].mult == 1;
                    ok = ok && pair(dec.components[0].cls, dec.components[i].cls) == 1;
                    ok = ok && self_int(dec.components[i].cls) == -2;
                    for (std::size_t j = i + 1; j < 5; ++j)
                        ok = ok && pair(dec.components[i].cls, dec.components[j].cls) == 0;
                }
                ok = ok && self_int(dec.components[0].cls) == -2;
            }
            rep.add(dec.name + ": I0* shape", ok);
            break;
        }
        case FiberKind::chain: {
            // A - B - C with the middle component doubled and ends disjoint
            bool ok = dec.components.size() == 3 && dec.components[0].mult == 1 &&
                      dec.components[1].mult == 2 && dec.components[2].mult == 1;
            if (ok) {
                ok = ok && pair(dec.components[0].cls, dec.components[1].cls) == 1;
                ok = ok && pair(dec.components[1].cls, dec.components[2].cls) == 1;
                ok = ok && pair(dec.components[0].cls, dec.components[2].cls) == 0;
            }
            rep.add(dec.name + ": chain shape", ok);
            break;
        }
        case FiberKind::two_component: {
            bool ok = dec.components.size() == 2 && dec.components[0].mult == 1 &&
                      dec.components[1].mult == 1 &&
                      pair(dec.components[0].cls, dec.components[1].cls) == 1;
            rep.add(dec.name + ": two components meeting once", ok);
            break;
        }
        case FiberKind::double_smooth: {
            bool ok = dec.components.size() == 1 && dec.components[0].mult == 2 &&
                      self_int(dec.components[0].cls) == 0;
            rep.add(dec.name + ": double fiber shape", ok);
            break;
        }
        case FiberKind::rational_I: {
            bool ok = dec.components.size() == 1 && dec.components[0].mult == 1;
            rep.add(dec.name + ": irreducible fiber", ok);
            break;
        }
    }
}

inline void check_cross_fibers(CheckReport& rep, const std::string& id,
                               const std::vector<FiberDecomposition>& fibers) {
    bool ok = true;
    for (std::size_t a = 0; a < fibers.size(); ++a)
        for (std::size_t b = a + 1; b < fibers.size(); ++b)
            for (const auto& ca : fibers[a].components)
                for (const auto& cb : fibers[b].components)
                    if (pair(ca.cls, cb.cls) != 0) ok = false;
    rep.add(id + ": distinct fibers have disjoint components", ok);
}

// Restriction data of a plane model along the line through p0 and p.
struct LineRestriction {
    int mult_p0;
    int mult_p;
    BinaryForm residual;
};

inline LineRestriction restrict_along_p0p(const Config& cfg, const HomPoly& f) {
    ProjLine l = line_through(cfg.p0, cfg.p);
    auto sp = standard_points(l);
    BinaryForm r = restrict_to_line(f, l);
    auto par0 = line_parameter(sp[0], sp[1], cfg.p0);
    auto par1 = line_parameter(sp[0], sp[1], cfg.p);
    RootSplit s0 = split_root(r, par0.first, par0.second);
    RootSplit s1 = split_root(s0.residual, par1.first, par1.second);
    return {s0.mult, s1.mult, s1.residual};
}

}  // namespace detail

inline FibrationReport verify_rational_fibration(const std::vector<CatalogEntry>& cat) {
    auto at = [&cat](const std::string& n) { return catalog_class(cat, n); };
    FibrationReport out;
    out.report.id = "rational_fibration";
    const DivClass F = at("F"), K = at("K");

    out.report.add("F^2 = 0", self_int(F) == 0);
    out.report.add("genus(F) = 0", adjunction_genus(F) == 0);
    out.report.add("h0(F) = 2 by Riemann-Roch", rr_chi(F) == 2);

    std::vector<FiberDecomposition> fibers;
    fibers.push_back({"fiber E+B3",
                      F,
                      {{"E", at("E"), 1, 0}, {"B3", at("B3"), 1, 0}},
                      FiberKind::two_component});
    for (int k = 1; k <= 4; ++k) {
        std::string ck = "C" + std::to_string(k), ckp = ck + "p";
        fibers.push_back({"fiber " + ck + "+2E" + std::to_string(k) + "'+" + ckp,
                          F,
                          {{ck, at(ck), 1, 0},
                           {"E" + std::to_string(k) + "'", class_Ekp(k), 2, 0},
                           {ckp, at(ckp), 1, 0}},
                          FiberKind::chain});
    }
    for (const auto& dec : fibers) detail::check_decomposition(out.report, dec);
    detail::check_cross_fibers(out.report, out.report.id, fibers);
    out.report.add("K.F = -2 (section count 2 on a rational fiber)", pair(K, F) == -2);

    out.budget = {"rational",
                  "smooth rational",
                  {"two rationals meeting once", "chain of 3 rationals", "chain of 3 rationals",
                   "chain of 3 rationals", "chain of 3 rationals"}};
    out.report.add("euler budget total = 13", out.budget.total() == 13);
    return out;
}

inline FibrationReport verify_elliptic_h1(const std::vector<CatalogEntry>& cat,
                                          const Config& cfg) {
    auto at = [&cat](const std::string& n) { return catalog_class(cat, n); };
    FibrationReport out;
    out.report.id = "elliptic_h1";
    const DivClass K = at("K"), E = at("E"), B1 = at("B1"), B3 = at("B3");
    const DivClass Gamma = -2ll * K + 2ll * E;
    const DivClass Gamma0 = at("Gamma0"), Gamma1 = at("Gamma1"), Gamma2 = at("Gamma2");

    out.report.add("Gamma^2 = 0", self_int(Gamma) == 0);
    out.report.add("K.Gamma = 0", pair(K, Gamma) == 0);
    out.report.add("p_a(Gamma) = 1", adjunction_genus(Gamma) == 1);
    out.report.add("B1 = -2K+E", B1 == -2ll * K + E);
    out.report.add("B1.E = 1", pair(B1, E) == 1);

    std::vector<FiberDecomposition> fibers;
    fibers.push_back({"fiber 2Gamma1+C1+C1'+C2+C2'",
                      Gamma,
                      {{"Gamma1", Gamma1, 2, 0},
                       {"C1", at("C1"), 1, 0},
                       {"C1p", at("C1p"), 1, 0},
                       {"C2", at("C2"), 1, 0},
                       {"C2p", at("C2p"), 1, 0}},
                      FiberKind::I0star});
    fibers.push_back({"fiber 2Gamma2+C3+C3'+C4+C4'",
                      Gamma,
                      {{"Gamma2", Gamma2, 2, 0},
                       {"C3", at("C3"), 1, 0},
                       {"C3p", at("C3p"), 1, 0},
                       {"C4", at("C4"), 1, 0},
                       {"C4p", at("C4p"), 1, 0}},
                      FiberKind::I0star});
    fibers.push_back({"fiber 2Gamma0", Gamma, {{"Gamma0", Gamma0, 2, 1}}, FiberKind::double_smooth});
    fibers.push_back({"fiber B1+E",
                      Gamma,
                      {{"B1", B1, 1, 1}, {"E", E, 1, 0}},
                      FiberKind::two_component});
    for (const auto& dec : fibers) detail::check_decomposition(out.report, dec);
    detail::check_cross_fibers(out.report, out.report.id, fibers);

    // the only multiple fiber is the double 2Gamma0
    {
        int multiple = 0;
        bool gamma0_is_double = false;
        for (const auto& dec : fibers) {
            int g = 0;
            for (const auto& comp : dec.components)
                g = g == 0 ? comp.mult : std::gcd(g, comp.mult);
            if (g > 1) {
                ++multiple;
                if (dec.name == "fiber 2Gamma0" && g == 2) gamma0_is_double = true;
            }
        }
        out.report.add("only multiple fiber is 2Gamma0", multiple == 1 && gamma0_is_double);
    }

    // relatively minimal model: contract E, then the canonical bundle formula
    // K = -Gamma' + Gamma0' holds exactly in the contracted lattice
    {
        out.report.add("E is contractible in a fiber", self_int(E) == -1 && pair(E, Gamma) == 0);
        DivClass Kbar = pushforward_contract(K, E);
        DivClass Gbar = pushforward_contract(Gamma, E);
        DivClass G0bar = pushforward_contract(Gamma0, E);
        out.report.add("contracted Gamma = -2K", Gbar == -2ll * Kbar);
        out.report.add("contracted Gamma0 = -K", G0bar == -1ll * Kbar);
        out.report.add("canonical bundle formula K = -Gamma+Gamma0", Kbar == -1ll * Gbar + G0bar);
        out.report.add("Kbar^2 = 0", self_int(Kbar) == 0);
        out.report.add("e after contraction = 12 = 12chi - Kbar^2",
                       13 - 1 == 12 - self_int(Kbar));
    }

    try {
        out.report.add("h0(-2K) = 0", h0_of_class(-2ll * K, cfg) == 0);
    } catch (const std::exception&) {
        out.report.add("h0(-2K) = 0", false);
    }

    // restriction of the half-fiber models to the line through p0 and p
    // (the plane model of B3): the degree-4 cover has its full ramification
    // over the three special fibers, two simple points each
    out.report.add("deg h = B3.Gamma = 4", pair(B3, Gamma) == 4);
    out.report.add("B3.Gamma_j = 2 for j=0,1,2",
                   pair(B3, Gamma0) == 2 && pair(B3, Gamma1) == 2 && pair(B3, Gamma2) == 2);
    out.report.add("Hurwitz: -2 = 4(-2) + 6", -2 == 4 * (-2) + 6);
    try {
        bool ok = bool(cfg.gamma0);
        if (ok) {
            auto r0 = detail::restrict_along_p0p(cfg, *cfg.gamma0);
            ok = r0.mult_p0 == 1 && r0.mult_p == 0 && r0.residual.d == 2 &&
                 squarefree(r0.residual);
        }
        out.report.add("gamma0 meets the line in two residual points", ok);
        auto r1 = detail::restrict_along_p0p(cfg, cfg.gamma1);
        out.report.add("gamma1 meets the line in two residual points",
                       r1.mult_p0 == 0 && r1.mult_p == 0 && r1.residual.d == 2 &&
                           squarefree(r1.residual));
        auto r2 = detail::restrict_along_p0p(cfg, cfg.gamma2);
        out.report.add("gamma2 meets the line in two residual points",
                       r2.mult_p0 == 0 && r2.mult_p == 0 && r2.residual.d == 2 &&
                           squarefree(r2.residual));
    } catch (const std::exception&) {
        out.report.add("restriction along the p0-p line failed", false);
    }

    out.budget = {"elliptic_h1",
                  "smooth elliptic",
                  {"I0*", "I0*", "double smooth elliptic", "elliptic+(-1)-curve meeting once"}};
    out.report.add("euler budget total = 13", out.budget.total() == 13);
    return out;
}

// Multisets of integers n >= 2 with sum of (n-1)/n equal to 1/2; the
// enumeration bound is safe because each term contributes at least 1/2.
inline std::vector<std::vector<int>> halfsum_multisets(int max_n = 64) {
    std::vector<std::vector<int>> found;
    std::vector<int> cur;
    // (n-1)/n >= 1/2 for n >= 2, so a solution has at most one term
    for (int n = 2; n <= max_n; ++n)
        if (Rat(n - 1) / Rat(n) == Rat(1) / Rat(2)) found.push_back({n});
    return found;
}

inline FibrationReport verify_elliptic_h2(const std::vector<CatalogEntry>& cat,
                                          const Config& cfg) {
    auto at = [&cat](const std::string& n) { return catalog_class(cat, n); };
    FibrationReport out;
    out.report.id = "elliptic_h2";
    const DivClass K = at("K"), E = at("E"), B2 = at("B2"), B3 = at("B3");
    const DivClass Lambda = -2ll * K + 2ll * B3;
    const DivClass Lambda0 = at("Lambda0"), Lambda1 = at("Lambda1"), Lambda2 = at("Lambda2");

    out.report.add("Lambda^2 = 0", self_int(Lambda) == 0);
    out.report.add("K.Lambda = 0", pair(K, Lambda) == 0);
    out.report.add("p_a(Lambda) = 1", adjunction_genus(Lambda) == 1);
    out.report.add("B2 = -2K+B3", B2 == -2ll * K + B3);
    out.report.add("B2.B3 = 1", pair(B2, B3) == 1);
    out.report.add("Lambda0 = -K+B3", Lambda0 == -1ll * K + B3);
    out.report.add("Lambda0 class is the quartic pattern",
                   Lambda0 == DivClass{{4, -2, -1, -1, -1, -1, -1, -1, -1, -1, -2}});

    std::vector<FiberDecomposition> fibers;
    fibers.push_back({"fiber 2Lambda1+C1+C1'+C3+C3'",
                      Lambda,
                      {{"Lambda1", Lambda1, 2, 0},
                       {"C1", at("C1"), 1, 0},
                       {"C1p", at("C1p"), 1, 0},
                       {"C3", at("C3"), 1, 0},
                       {"C3p", at("C3p"), 1, 0}},
                      FiberKind::I0star});
    fibers.push_back({"fiber 2Lambda2+C2+C2'+C4+C4'",
                      Lambda,
                      {{"Lambda2", Lambda2, 2, 0},
                       {"C2", at("C2"), 1, 0},
                       {"C2p", at("C2p"), 1, 0},
                       {"C4", at("C4"), 1, 0},
                       {"C4p", at("C4p"), 1, 0}},
                      FiberKind::I0star});
    fibers.push_back(
        {"fiber 2Lambda0", Lambda, {{"Lambda0", Lambda0, 2, 1}}, FiberKind::double_smooth});
    fibers.push_back({"fiber B2+B3",
                      Lambda,
                      {{"B2", B2, 1, 1}, {"B3", B3, 1, 0}},
                      FiberKind::two_component});
    for (const auto& dec : fibers) detail::check_decomposition(out.report, dec);
    detail::check_cross_fibers(out.report, out.report.id, fibers);

    // multiple-fiber arithmetic: the canonical bundle formula forces
    // sum (n_j - 1)/n_j = 1/2 over the multiple fibers; the only solution is
    // a single n0 = 2, so 2Lambda0 is the only candidate and it occurs
    {
        auto sols = halfsum_multisets();
        out.report.add("diophantine: unique solution n0 = 2",
                       sols.size() == 1 && sols[0] == std::vector<int>{2});
    }

    {
        out.report.add("B3 is contractible in a fiber",
                       self_int(B3) == -1 && pair(B3, Lambda) == 0);
        DivClass Kbar = pushforward_contract(K, B3);
        DivClass Lbar = pushforward_contract(Lambda, B3);
        DivClass L0bar = pushforward_contract(Lambda0, B3);
        out.report.add("contracted Lambda = -2K", Lbar == -2ll * Kbar);
        out.report.add("contracted Lambda0 = -K", L0bar == -1ll * Kbar);
        out.report.add("canonical bundle formula K = -Lambda+Lambda0",
                       Kbar == -1ll * Lbar + L0bar);
        out.report.add("Kbar^2 = 0", self_int(Kbar) == 0);
        out.report.add("e after contraction = 12 = 12chi - Kbar^2",
                       13 - 1 == 12 - self_int(Kbar));
    }

    // the degree-4 cover of the second fibration restricted to E
    out.report.add("deg h' = E.Lambda = 4", pair(E, Lambda) == 4);
    out.report.add("E.Lambda_j = 2 for j=0,1,2",
                   pair(E, Lambda0) == 2 && pair(E, Lambda1) == 2 && pair(E, Lambda2) == 2);
    out.report.add("Hurwitz: -2 = 4(-2) + 6", -2 == 4 * (-2) + 6);

    // geometric certificates at the node p: lambda1, lambda2 and the quartic
    // lambda0 all acquire nodes, with pairwise distinct branch directions, so
    // their strict transforms meet the exceptional curve E transversally in
    // distinct points; lambda0 also has a node at p0
    try {
        auto members = system_members(class_to_spec(Lambda0, cfg));
        out.report.add("h0(Lambda0) = 1", members.size() == 1);
        bool nodes_ok = false, branches_ok = false, node_p0_ok = false;
        if (members.size() == 1 && cfg.lambda1 && cfg.lambda2) {
            const HomPoly& l0 = members[0];
            out.report.add("lambda0 is a quartic", l0.degree() == 4);
            nodes_ok = singularity_is_node(*cfg.lambda1, cfg.p) &&
                       singularity_is_node(*cfg.lambda2, cfg.p) &&
                       singularity_is_node(l0, cfg.p);
            node_p0_ok = singularity_is_node(l0, cfg.p0);
            auto q0 = quadratic_part_at(l0, cfg.p);
            auto q1 = quadratic_part_at(*cfg.lambda1, cfg.p);
            auto q2 = quadratic_part_at(*cfg.lambda2, cfg.p);
            branches_ok = quadratic_resultant(q0, q1) != 0 && quadratic_resultant(q0, q2) != 0 &&
                          quadratic_resultant(q1, q2) != 0;
        } else {
            out.report.add("lambda0 is a quartic", false);
        }
        out.report.add("lambda0, lambda1, lambda2 have nodes at p", nodes_ok);
        out.report.add("lambda0 has a node at p0", node_p0_ok);
        out.report.add("branch directions at p pairwise distinct", branches_ok);
    } catch (const std::exception&) {
        out.report.add("node certificates at p failed", false);
    }

    out.budget = {"elliptic_h2",
                  "smooth elliptic",
                  {"I0*", "I0*", "double smooth elliptic", "elliptic+(-1)-curve meeting once"}};
    out.report.add("euler budget total = 13", out.budget.total() == 13);
    return out;
}

inline CheckReport verify_snc(const std::vector<CatalogEntry>& cat, const Config& cfg) {
    auto at = [&cat](const std::string& n) { return catalog_class(cat, n); };
    CheckReport rep;
    rep.id = "snc";
    const DivClass K = at("K"), F = at("F"), E = at("E");
    const DivClass B1 = at("B1"), B2 = at("B2"), B3 = at("B3"), Psi = at("Psi");

    rep.add("B1.B2 = 1", pair(B1, B2) == 1);
    rep.add("B1.B3 = 3", pair(B1, B3) == 3);
    rep.add("B2.B3 = 1", pair(B2, B3) == 1);
    for (int i = 1; i <= 3; ++i) {
        const DivClass& Bi = i == 1 ? B1 : (i == 2 ? B2 : B3);
        bool ok = true;
        for (int k = 1; k <= 4; ++k) {
            ok = ok && pair(Bi, at("C" + std::to_string(k))) == 0;
            ok = ok && pair(Bi, at("C" + std::to_string(k) + "p")) == 0;
        }
        rep.add("B" + std::to_string(i) + " disjoint from the eight nodal classes", ok);
    }

    // Psi = B1+B3 = B2+E and its four half-fiber presentations; each
    // -K+Ek' has a section by Riemann-Roch
    rep.add("Psi = B1+B3", Psi == B1 + B3);
    rep.add("Psi = B2+E", Psi == B2 + E);
    for (int k = 1; k <= 4; ++k) {
        DivClass Ak = -1ll * K + class_Ekp(k);
        std::string ks = std::to_string(k);
        rep.add("Psi = 2(-K+E" + ks + "')+C" + ks + "+C" + ks + "'",
                Psi == 2ll * Ak + at("C" + ks) + at("C" + ks + "p"));
        rep.add("(-K+E" + ks + "')^2 = 0 and K.(-K+E" + ks + "') = 0",
                self_int(Ak) == 0 && pair(K, Ak) == 0);
        rep.add("h0(-K+E" + ks + "') >= 1 by Riemann-Roch", rr_chi(Ak) >= 1);
    }

    // Hurwitz arithmetic for the rational fibration restricted to B1 (degree
    // 4, ramification only over the Ek'-fibers) and for the double cover of
    // B2 cut by Psi
    rep.add("deg f' = B1.F = 4", pair(B1, F) == 4);
    {
        long long r = 0;
        bool only_ekp = true;
        for (int k = 1; k <= 4; ++k) {
            r += pair(B1, class_Ekp(k));
            only_ekp = only_ekp && pair(B1, at("C" + std::to_string(k))) == 0 &&
                       pair(B1, at("C" + std::to_string(k) + "p")) == 0;
        }
        rep.add("deg R_f' = sum B1.Ek' = 8", r == 8);
        rep.add("f' unramified over the nodal components", only_ekp);
        rep.add("Hurwitz for f': 0 = 4(-2) + 8", 2 * adjunction_genus(B1) - 2 == 4 * (-2) + 8);
    }
    rep.add("deg g' = Psi.B2 = 2", pair(Psi, B2) == 2);
    {
        long long r = 0;
        for (int k = 1; k <= 4; ++k) r += pair(-1ll * K + class_Ekp(k), B2);
        rep.add("deg R_g' = 4", r == 4);
        rep.add("Hurwitz for g': 0 = 2(-2) + 4", 2 * adjunction_genus(B2) - 2 == 2 * (-2) + 4);
    }

    // plane models: B1 is a sextic, B2 a septic, B3 the line through p0 and
    // p; their restrictions certify transversality and the absence of triple
    // points along that line
    try {
        auto mb1 = system_members(class_to_spec(B1, cfg));
        auto mb2 = system_members(class_to_spec(B2, cfg));
        rep.add("h0(B1) = 1", mb1.size() == 1);
        rep.add("h0(B2) = 1", mb2.size() == 1);
        if (mb1.size() == 1 && mb2.size() == 1) {
            auto r1 = detail::restrict_along_p0p(cfg, mb1[0]);
            auto r2 = detail::restrict_along_p0p(cfg, mb2[0]);
            rep.add("B1 meets the line with multiplicities (2,1) at (p0,p)",
                    r1.mult_p0 == 2 && r1.mult_p == 1);
            rep.add("B1 residual on the line: three distinct points",
                    r1.residual.d == 3 && squarefree(r1.residual));
            rep.add("B2 meets the line with multiplicities (3,3) at (p0,p)",
                    r2.mult_p0 == 3 && r2.mult_p == 3);
            rep.add("B2 residual on the line: one point", r2.residual.d == 1);
            rep.add("no triple point of B1, B2, B3 on the line",
                    coprime(r1.residual, r2.residual));
        }
    } catch (const std::exception&) {
        rep.add("plane model restrictions failed", false);
    }
    return rep;
}

inline CheckReport verify_nef_and_contraction(const std::vector<CatalogEntry>& cat) {
    auto at = [&cat](const std::string& n) { return catalog_class(cat, n); };
    CheckReport rep;
    rep.id = "nef";
    const DivClass D = at("D");
    rep.add("D = B2+F", D == at("B2") + at("F"));
    rep.add("D^2 = 7", self_int(D) == 7);
    bool nonneg = true;
    for (const auto& e : cat) {
        if (e.name == "K") continue;
        if (pair(D, e.cls) < 0) nonneg = false;
    }
    rep.add("D.X >= 0 on the catalog", nonneg);
    bool zero_exactly_nodal = true;
    for (const auto& e : cat) {
        if (e.name == "K") continue;
        bool nodal = e.name.size() >= 2 && e.name[0] == 'C' &&
                     (e.name.size() == 2 || (e.name.size() == 3 && e.name[2] == 'p'));
        if (nodal != (pair(D, e.cls) == 0)) zero_exactly_nodal = false;
    }
    rep.add("D.X = 0 exactly for the eight nodal classes", zero_exactly_nodal);
    return rep;
}

inline CheckReport verify_birational_p4(const std::vector<CatalogEntry>& cat, const Config& cfg) {
    auto at = [&cat](const std::string& n) { return catalog_class(cat, n); };
    CheckReport rep;
    rep.id = "p4";
    const DivClass D = at("D"), F = at("F"), B2 = at("B2");

    rep.add("h0(F) = 2 by Riemann-Roch", rr_chi(F) == 2);
    rep.add("deg D|B2 = 3", pair(D, B2) == 3);
    rep.add("genus(B2) = 1, so 3 >= 2g", adjunction_genus(B2) == 1 && pair(D, B2) >= 2);
    rep.add("restriction bookkeeping 5 = 2+3", 5 == 2 + 3);
    rep.add("D^2 = 7 (prime)", self_int(D) == 7);

    try {
        LinSysSpec dspec = class_to_spec(D, cfg);
        rep.add("h0(D) = 5", h0(dspec) == 5);

        // freeness evidence: five deterministic pseudo-random points, each
        // imposing one new condition
        unsigned long seed = 0x2a6b1ecaUL;
        auto next = [&seed]() {
            seed = seed * 6364136223846793005UL + 1442695040888963407UL;
            return static_cast<long>((seed >> 33) % 19) - 9;
        };
        const std::vector<ProjPoint> cluster = {cfg.p0, cfg.p1, cfg.p2, cfg.p3, cfg.p4, cfg.p};
        int placed = 0;
        bool freeness = true;
        while (placed < 5) {
            long a = next(), b = next(), c = next();
            if (a == 0 && b == 0 && c == 0) continue;
            ProjPoint q{Rat(a), Rat(b), Rat(c)};
            bool clash = false;
            for (const auto& base : cluster)
                if (q == base) clash = true;
            if (clash) continue;
            LinSysSpec ext = dspec;
            ext.conds.emplace_back(q, 1);
            if (h0(ext) != 4) freeness = false;
            ++placed;
        }
        rep.add("five generic points each impose one condition on |D|", freeness);
    } catch (const std::exception&) {
        rep.add("h0(D) = 5", false);
        rep.add("five generic points each impose one condition on |D|", false);
    }
    return rep;
}

}  // namespace bidouble
