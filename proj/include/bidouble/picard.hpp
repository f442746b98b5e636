// The rank-11 lattice of the plane blown up in the eleven base points: basis
// (L, E0, E1, E1', E2, E2', E3, E3', E4, E4', E) with L^2 = 1 and all
// exceptional classes square -1.  Each Ek is a total transform, so the
// coefficients of an effective class are exactly the assigned multiplicities
// at the (possibly infinitely near) base points, and class_to_spec can read a
// linear system straight off the tuple.
#ifndef BIDOUBLE_PICARD_HPP
#define BIDOUBLE_PICARD_HPP

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "config.hpp"
#include "linsys.hpp"

namespace bidouble {

struct NotEffectivePattern : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedContraction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivClass {
    std::array<long long, 11> c{};

    long long& operator[](std::size_t i) { return c[i]; }
    long long operator[](std::size_t i) const { return c[i]; }
    bool operator==(const DivClass& o) const { return c == o.c; }

    DivClass operator+(const DivClass& o) const {
        DivClass r;
        for (std::size_t i = 0; i < 11; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    DivClass operator-(const DivClass& o) const {
        DivClass r;
        for (std::size_t i = 0; i < 11; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    DivClass operator-() const {
        DivClass r;
        for (std::size_t i = 0; i < 11; ++i) r.c[i] = -c[i];
        return r;
    }
    friend DivClass operator*(long long s, const DivClass& a) {
        DivClass r;
        for (std::size_t i = 0; i < 11; ++i) r.c[i] = s * a.c[i];
        return r;
    }
};

// basis slots: 0 = L, 1 = E0, 2k = Ek, 2k+1 = Ek' (k = 1..4), 10 = E
constexpr std::size_t iL = 0, iE0 = 1, iE = 10;
constexpr std::size_t iEk(int k) { return static_cast<std::size_t>(2 * k); }
constexpr std::size_t iEkp(int k) { return static_cast<std::size_t>(2 * k + 1); }

inline long long pair(const DivClass& a, const DivClass& b) {
    long long s = a.c[0] * b.c[0];
    for (std::size_t i = 1; i < 11; ++i) s -= a.c[i] * b.c[i];
    return s;
}

inline long long self_int(const DivClass& a) { return pair(a, a); }

inline DivClass class_K() {
    return DivClass{{-3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}};
}

inline long long adjunction_genus(const DivClass& a) {
    long long n = self_int(a) + pair(a, class_K());
    if (n % 2 != 0) throw std::logic_error("adjunction_genus: odd adjunction number");
    return n / 2 + 1;
}

inline long long rr_chi(const DivClass& a) {
    long long n = self_int(a) - pair(a, class_K());
    if (n % 2 != 0) throw std::logic_error("rr_chi: odd Riemann-Roch number");
    return 1 + n / 2;
}

inline DivClass class_L() { return DivClass{{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}; }
inline DivClass class_E0() { return DivClass{{0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}}; }
inline DivClass class_E() { return DivClass{{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}}; }
inline DivClass class_F() { return DivClass{{1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0}}; }
inline DivClass class_B3() { return DivClass{{1, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1}}; }

inline DivClass class_Ek(int k) {
    DivClass r;
    r[iEk(k)] = 1;
    return r;
}
inline DivClass class_Ekp(int k) {
    DivClass r;
    r[iEkp(k)] = 1;
    return r;
}
inline DivClass class_Ck(int k) {
    DivClass r;
    r[iL] = 1;
    r[iE0] = -1;
    r[iEk(k)] = -1;
    r[iEkp(k)] = -1;
    return r;
}
inline DivClass class_Ckp(int k) {
    DivClass r;
    r[iEk(k)] = 1;
    r[iEkp(k)] = -1;
    return r;
}

struct CatalogEntry {
    std::string name;
    DivClass cls;
};

inline std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> cat;
    cat.push_back({"K", class_K()});
    cat.push_back({"F", class_F()});
    for (int k = 1; k <= 4; ++k) {
        cat.push_back({"C" + std::to_string(k), class_Ck(k)});
        cat.push_back({"C" + std::to_string(k) + "p", class_Ckp(k)});
    }
    cat.push_back({"Gamma0", DivClass{{3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0}}});
    cat.push_back({"Gamma1", DivClass{{2, 0, -1, 0, -1, 0, -1, -1, -1, -1, 0}}});
    cat.push_back({"Gamma2", DivClass{{2, 0, -1, -1, -1, -1, -1, 0, -1, 0, 0}}});
    cat.push_back({"Lambda0", DivClass{{4, -2, -1, -1, -1, -1, -1, -1, -1, -1, -2}}});
    cat.push_back({"Lambda1", DivClass{{3, -1, -1, 0, -1, -1, -1, 0, -1, -1, -2}}});
    cat.push_back({"Lambda2", DivClass{{3, -1, -1, -1, -1, 0, -1, -1, -1, 0, -2}}});
    cat.push_back({"B1", DivClass{{6, -2, -2, -2, -2, -2, -2, -2, -2, -2, -1}}});
    cat.push_back({"B2", DivClass{{7, -3, -2, -2, -2, -2, -2, -2, -2, -2, -3}}});
    cat.push_back({"B3", class_B3()});
    cat.push_back({"E", class_E()});
    cat.push_back({"Delta1", DivClass{{8, -4, -2, -4, -2, -4, -2, -2, -2, -2, -1}}});
    cat.push_back({"Delta2", DivClass{{8, -4, -2, -2, -2, -2, -2, -4, -2, -2, -3}}});
    cat.push_back({"Delta3", DivClass{{2, -2, 0, 0, 0, 0, 0, 0, 0, -2, -1}}});
    cat.push_back({"L1", DivClass{{5, -3, -1, -1, -1, -1, -1, -2, -1, -2, -2}}});
    cat.push_back({"L2", DivClass{{5, -3, -1, -2, -1, -2, -1, -1, -1, -2, -1}}});
    cat.push_back({"L3", DivClass{{8, -4, -2, -3, -2, -3, -2, -3, -2, -2, -2}}});
    cat.push_back({"D", DivClass{{8, -4, -2, -2, -2, -2, -2, -2, -2, -2, -3}}});
    cat.push_back({"Psi", DivClass{{7, -3, -2, -2, -2, -2, -2, -2, -2, -2, -2}}});
    return cat;
}

inline const DivClass& catalog_class(const std::vector<CatalogEntry>& cat,
                                     const std::string& name) {
    for (const auto& e : cat)
        if (e.name == name) return e.cls;
    throw std::invalid_argument("catalog_class: no entry named " + name);
}

// Linear relations the named classes must satisfy; evaluated on the given
// catalog so tampered tables fail visibly.
inline std::vector<std::pair<std::string, bool>> verify_catalog_identities(
    const std::vector<CatalogEntry>& cat) {
    auto at = [&cat](const std::string& n) -> const DivClass& { return catalog_class(cat, n); };
    auto ck = [&cat](int k) { return catalog_class(cat, "C" + std::to_string(k)); };
    auto ckp = [&cat](int k) { return catalog_class(cat, "C" + std::to_string(k) + "p"); };
    const DivClass K = at("K"), F = at("F"), E = at("E"), B1 = at("B1"), B2 = at("B2"),
                   B3 = at("B3"), Psi = at("Psi"), D = at("D");
    const DivClass Gamma = -2ll * K + 2ll * E;
    const DivClass Lambda = -2ll * K + 2ll * B3;

    std::vector<std::pair<std::string, bool>> out;
    out.emplace_back("Gamma0 = -K+E", at("Gamma0") == -1ll * K + E);
    out.emplace_back("Lambda0 = -K+B3", at("Lambda0") == -1ll * K + B3);
    out.emplace_back("B1 = -2K+E", B1 == -2ll * K + E);
    out.emplace_back("B2 = -2K+B3", B2 == -2ll * K + B3);
    out.emplace_back("Psi = B1+B3", Psi == B1 + B3);
    out.emplace_back("Psi = B2+E", Psi == B2 + E);
    out.emplace_back("Psi = -2K+F", Psi == -2ll * K + F);
    for (int k = 1; k <= 4; ++k)
        out.emplace_back("Psi = 2(-K+E" + std::to_string(k) + "')+C" + std::to_string(k) +
                             "+C" + std::to_string(k) + "'",
                         Psi == 2ll * (-1ll * K + class_Ekp(k)) + ck(k) + ckp(k));
    out.emplace_back("D = 2K+B1+B2+B3", D == 2ll * K + B1 + B2 + B3);
    out.emplace_back("D = B2+F", D == B2 + F);
    out.emplace_back("2L1 = Delta2+Delta3", 2ll * at("L1") == at("Delta2") + at("Delta3"));
    out.emplace_back("2L2 = Delta1+Delta3", 2ll * at("L2") == at("Delta1") + at("Delta3"));
    out.emplace_back("2L3 = Delta1+Delta2", 2ll * at("L3") == at("Delta1") + at("Delta2"));
    out.emplace_back("Delta1 = B1+C1+C1'+C2+C2'",
                     at("Delta1") == B1 + ck(1) + ckp(1) + ck(2) + ckp(2));
    out.emplace_back("Delta2 = B2+C3+C3'", at("Delta2") == B2 + ck(3) + ckp(3));
    out.emplace_back("Delta3 = B3+C4+C4'", at("Delta3") == B3 + ck(4) + ckp(4));
    out.emplace_back("F = E+B3", F == E + B3);
    for (int k = 1; k <= 4; ++k)
        out.emplace_back("F = C" + std::to_string(k) + "+2E" + std::to_string(k) + "'+C" +
                             std::to_string(k) + "'",
                         F == ck(k) + 2ll * class_Ekp(k) + ckp(k));
    out.emplace_back("-2K+2E = 2Gamma0", Gamma == 2ll * at("Gamma0"));
    out.emplace_back("-2K+2E = 2Gamma1+C1+C1'+C2+C2'",
                     Gamma == 2ll * at("Gamma1") + ck(1) + ckp(1) + ck(2) + ckp(2));
    out.emplace_back("-2K+2E = 2Gamma2+C3+C3'+C4+C4'",
                     Gamma == 2ll * at("Gamma2") + ck(3) + ckp(3) + ck(4) + ckp(4));
    out.emplace_back("-2K+2E = B1+E", Gamma == B1 + E);
    out.emplace_back("-2K+2B3 = 2Lambda0", Lambda == 2ll * at("Lambda0"));
    out.emplace_back("-2K+2B3 = 2Lambda1+C1+C1'+C3+C3'",
                     Lambda == 2ll * at("Lambda1") + ck(1) + ckp(1) + ck(3) + ckp(3));
    out.emplace_back("-2K+2B3 = 2Lambda2+C2+C2'+C4+C4'",
                     Lambda == 2ll * at("Lambda2") + ck(2) + ckp(2) + ck(4) + ckp(4));
    out.emplace_back("-2K+2B3 = B2+B3", Lambda == B2 + B3);
    return out;
}

// Read a linear system off a class: degree from L, a condition per negative
// exceptional coefficient.  The near-point directions are the lines l0k.
inline LinSysSpec class_to_spec(const DivClass& a, const Config& cfg) {
    if (a[iL] <= 0)
        throw NotEffectivePattern("class_to_spec: L coefficient must be positive");
    int d = static_cast<int>(a[iL]);
    std::vector<BaseCondition> conds;
    if (a[iE0] < 0) conds.emplace_back(cfg.p0, static_cast<int>(-a[iE0]));
    const std::array<ProjPoint, 4> pk = {cfg.p1, cfg.p2, cfg.p3, cfg.p4};
    for (int k = 1; k <= 4; ++k) {
        int m = a[iEk(k)] < 0 ? static_cast<int>(-a[iEk(k)]) : 0;
        int mp = a[iEkp(k)] < 0 ? static_cast<int>(-a[iEkp(k)]) : 0;
        if (mp > 0)
            conds.emplace_back(pk[static_cast<std::size_t>(k - 1)], m,
                               cfg.l[static_cast<std::size_t>(k - 1)], mp);
        else if (m > 0)
            conds.emplace_back(pk[static_cast<std::size_t>(k - 1)], m);
    }
    if (a[iE] < 0) conds.emplace_back(cfg.p, static_cast<int>(-a[iE]));
    return LinSysSpec(d, std::move(conds));
}

inline std::size_t h0_of_class(const DivClass& a, const Config& cfg) {
    return h0(class_to_spec(a, cfg));
}

// Pushforward along the contraction of a (-1)-curve c: a + (a.c) c, which is
// the c-orthogonal projection; the ambient pairing then restricts to the
// intersection form of the blown-down surface.
inline DivClass pushforward_contract(const DivClass& a, const DivClass& contracted) {
    if (!(contracted == class_E() || contracted == class_B3()))
        throw UnsupportedContraction("pushforward_contract: only E and B3 are supported");
    return a + pair(a, contracted) * contracted;
}

}  // namespace bidouble

#endif
