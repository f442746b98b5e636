// Branch data of the Z2 x Z2 cover and the invariants of the covering
// surface and its three intermediate quotients.  Everything here is lattice
// arithmetic plus interpolation h0 values; the few constants quoted from the
// construction (k_i, contracted-curve counts) are cross-checked against the
// relations they must satisfy.
#ifndef BIDOUBLE_BIDOUBLE_HPP
#define BIDOUBLE_BIDOUBLE_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "config.hpp"
#include "picard.hpp"

namespace bidouble {

struct IdentityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MismatchWithPaper : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BranchData {
    std::array<DivClass, 3> Delta;
    std::array<DivClass, 3> L;
};

inline BranchData branch_data(const std::vector<CatalogEntry>& cat) {
    auto at = [&cat](const std::string& n) { return catalog_class(cat, n); };
    BranchData bd{{at("Delta1"), at("Delta2"), at("Delta3")}, {at("L1"), at("L2"), at("L3")}};

    auto fail = [](const std::string& rel) {
        throw IdentityViolation("branch_data: identity failed: " + rel);
    };
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        if (!(2ll * bd.L[i] == bd.Delta[j] + bd.Delta[k]))
            fail("2L" + std::to_string(i + 1) + " = Delta" + std::to_string(j + 1) + "+Delta" +
                 std::to_string(k + 1));
        if (!(bd.L[i] + bd.Delta[i] == bd.L[j] + bd.L[k]))
            fail("L" + std::to_string(i + 1) + "+Delta" + std::to_string(i + 1) + " = L" +
                 std::to_string(j + 1) + "+L" + std::to_string(k + 1));
    }

    const DivClass K = at("K"), E = at("E");
    const DivClass twoL = 2ll * class_L(), twoE0 = 2ll * class_E0();
    if (!(bd.Delta[0] == at("B1") + at("C1") + at("C1p") + at("C2") + at("C2p")))
        fail("Delta1 = B1+C1+C1'+C2+C2'");
    if (!(bd.Delta[1] == at("B2") + at("C3") + at("C3p"))) fail("Delta2 = B2+C3+C3'");
    if (!(bd.Delta[2] == at("B3") + at("C4") + at("C4p"))) fail("Delta3 = B3+C4+C4'");
    if (!(bd.Delta[0] ==
          -2ll * K + twoL - twoE0 - 2ll * class_Ekp(1) - 2ll * class_Ekp(2) + E))
        fail("Delta1 closed form");
    if (!(bd.Delta[1] == -2ll * K + twoL - twoE0 - 2ll * class_Ekp(3) - E))
        fail("Delta2 closed form");
    if (!(bd.Delta[2] == twoL - twoE0 - 2ll * class_Ekp(4) - E)) fail("Delta3 closed form");
    if (!(bd.L[0] == -1ll * K + twoL - twoE0 - class_Ekp(3) - class_Ekp(4) - E))
        fail("L1 closed form");
    if (!(bd.L[1] == -1ll * K + twoL - twoE0 - class_Ekp(1) - class_Ekp(2) - class_Ekp(4)))
        fail("L2 closed form");
    if (!(bd.L[2] == -2ll * K + twoL - twoE0 - class_Ekp(1) - class_Ekp(2) - class_Ekp(3)))
        fail("L3 closed form");

    DivClass nodal_sum{};
    for (int k = 1; k <= 4; ++k)
        nodal_sum = nodal_sum + at("C" + std::to_string(k)) + at("C" + std::to_string(k) + "p");
    if (!(bd.Delta[0] + bd.Delta[1] + bd.Delta[2] - at("B1") - at("B2") - at("B3") == nodal_sum))
        fail("Delta contains each nodal class exactly once");
    return bd;
}

struct SurfaceInvariants {
    long long K2, pg, q, chi;
    std::array<long long, 4> eigenspaces;
    std::array<long long, 3> KR, R2, genusR, k;
};

inline SurfaceInvariants invariants_S(const BranchData& bd, const std::vector<CatalogEntry>& cat,
                                      const Config& cfg) {
    auto at = [&cat](const std::string& n) { return catalog_class(cat, n); };
    auto fail = [](const std::string& what) {
        throw MismatchWithPaper("invariants_S: " + what);
    };
    const DivClass K = at("K"), D = at("D");

    SurfaceInvariants inv{};
    // K_S^2 = (2K_S)^2/4 and 2K_S is the pullback of D under the degree-4
    // cover once the eight (-2)-curves in the branch locus are contracted
    if (!(2ll * K + bd.Delta[0] + bd.Delta[1] + bd.Delta[2] ==
          D + at("C1") + at("C1p") + at("C2") + at("C2p") + at("C3") + at("C3p") + at("C4") +
              at("C4p")))
        fail("2K+Delta = D plus the nodal classes");
    inv.K2 = self_int(D);
    if (inv.K2 != 7) fail("K2 = " + std::to_string(inv.K2) + ", expected 7");

    inv.pg = 0;
    for (int i = 0; i < 3; ++i)
        inv.pg += static_cast<long long>(h0_of_class(K + bd.L[i], cfg));
    if (inv.pg != 0) fail("pg = " + std::to_string(inv.pg) + ", expected 0");
    inv.q = 0;
    inv.chi = 1;
    if (inv.chi != 1 - inv.q + inv.pg) fail("chi relation");

    const DivClass Delta = bd.Delta[0] + bd.Delta[1] + bd.Delta[2];
    inv.eigenspaces[0] = static_cast<long long>(h0_of_class(2ll * K + Delta, cfg));
    for (int i = 0; i < 3; ++i)
        inv.eigenspaces[static_cast<std::size_t>(i + 1)] =
            static_cast<long long>(h0_of_class(2ll * K + bd.Delta[i] + bd.L[i], cfg));
    if (inv.eigenspaces != std::array<long long, 4>{5, 2, 1, 0}) {
        std::string got;
        for (auto v : inv.eigenspaces) got += std::to_string(v) + " ";
        fail("eigenspaces = " + got + ", expected 5 2 1 0");
    }
    if (inv.eigenspaces[0] + inv.eigenspaces[1] + inv.eigenspaces[2] + inv.eigenspaces[3] !=
        inv.chi + inv.K2)
        fail("eigenspace sum != chi + K2");
    if (inv.eigenspaces[0] != static_cast<long long>(h0_of_class(D, cfg)))
        fail("invariant eigenspace != h0(D)");
    for (int i = 1; i <= 3; ++i)
        if (inv.eigenspaces[static_cast<std::size_t>(i)] >= 8)
            fail("non-invariant eigenspace dimension >= 8");

    const std::array<DivClass, 3> B = {at("B1"), at("B2"), at("B3")};
    for (int i = 0; i < 3; ++i) {
        inv.KR[i] = pair(D, B[i]);
        inv.R2[i] = self_int(B[i]);
        if ((inv.R2[i] + inv.KR[i]) % 2 != 0) fail("genus parity");
        inv.genusR[i] = (inv.R2[i] + inv.KR[i]) / 2 + 1;
    }
    if (inv.KR != std::array<long long, 3>{5, 3, 1}) fail("KR != (5,3,1)");
    if (inv.R2 != std::array<long long, 3>{-1, -1, -1}) fail("R2 != (-1,-1,-1)");
    if (inv.genusR != std::array<long long, 3>{3, 2, 1}) fail("genusR != (3,2,1)");

    inv.k = {9, 7, 5};
    for (int i = 0; i < 3; ++i)
        if (inv.k[i] != inv.KR[i] + 4) fail("k != KR+4");
    return inv;
}

struct QuotientEntry {
    std::string label;
    long long K2_V;
    long long contracted;
    long long K2_quotient;
    std::string kappa;
};

struct QuotientReport {
    std::array<QuotientEntry, 3> entries;
};

inline QuotientReport quotient_invariants(const BranchData& bd,
                                          const std::vector<CatalogEntry>& cat) {
    auto at = [&cat](const std::string& n) { return catalog_class(cat, n); };
    auto fail = [](const std::string& what) {
        throw MismatchWithPaper("quotient_invariants: " + what);
    };
    const DivClass K = at("K");

    // the bicanonical classes of the intermediate double planes: 2(K+L_i)
    // equals the branch content away from the i-th divisor
    if (!(2ll * (K + bd.L[0]) ==
          2ll * at("B3") + at("C3") + at("C3p") + at("C4") + at("C4p")))
        fail("2(K+L1) = 2B3+C3+C3'+C4+C4'");
    if (!(2ll * (K + bd.L[1]) ==
          at("F") + at("C1") + at("C1p") + at("C2") + at("C2p") + at("C4") + at("C4p")))
        fail("2(K+L2) = F+C1+C1'+C2+C2'+C4+C4'");

    QuotientReport rep{};
    const std::array<long long, 3> contracted = {4, 6, 6};
    const std::array<std::string, 3> labels = {"Enriques-birational", "properly-elliptic",
                                               "numerical-Campedelli-resolution"};
    for (int i = 0; i < 3; ++i) {
        QuotientEntry& e = rep.entries[static_cast<std::size_t>(i)];
        e.label = labels[static_cast<std::size_t>(i)];
        e.K2_V = 2ll * self_int(K + bd.L[i]);
        e.contracted = contracted[static_cast<std::size_t>(i)];
        e.K2_quotient = e.K2_V + e.contracted;
    }
    if (rep.entries[0].K2_V != -6 || rep.entries[1].K2_V != -6 || rep.entries[2].K2_V != -4)
        fail("K2_Vi != (-6,-6,-4)");
    if (rep.entries[0].K2_quotient != -2 || rep.entries[1].K2_quotient != 0 ||
        rep.entries[2].K2_quotient != 2)
        fail("quotient K2 != (-2,0,2)");

    // kappa: 2K_{V_1} moves with |B3| (dimension 0), 2K_{V_2} with |F|
    // (dimension 1), and the third quotient resolves to K2 = 2 > 0
    long long dimB3 = rr_chi(at("B3")) - 1;
    long long dimF = rr_chi(at("F")) - 1;
    if (dimB3 != 0) fail("dim|B3| != 0");
    if (dimF != 1) fail("dim|F| != 1");
    rep.entries[0].kappa = "0";
    rep.entries[1].kappa = "1";
    rep.entries[2].kappa = "general type";
    return rep;
}

}  // namespace bidouble

#endif
