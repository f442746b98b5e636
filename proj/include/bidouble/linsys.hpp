// Linear systems of plane curves with assigned base points, including
// infinitely near ones.  A base condition of multiplicities (m, m') at a
// point p with direction line l imposes, in the adapted local frame at p in
// which l becomes {y2 = 0}, the vanishing of every local coefficient c_ij
// with i + j < m or i + 2j < m + m'.  The second set is exactly multiplicity
// m' of the strict transform at the infinitely near point: substituting
// y1 = u, y2 = u v and dividing by u^m leaves terms u^(i+j-m) v^j.
#ifndef BIDOUBLE_LINSYS_HPP
#define BIDOUBLE_LINSYS_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "plane.hpp"
#include "rational.hpp"

namespace bidouble {

struct DegenerateSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptySystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BaseCondition {
    ProjPoint p;
    int m;
    std::optional<ProjLine> direction;
    int m_near;

    BaseCondition(ProjPoint pt, int mult) : p(pt), m(mult), direction(std::nullopt), m_near(0) {
        if (m < 1) throw std::invalid_argument("BaseCondition: multiplicity < 1");
    }
    BaseCondition(ProjPoint pt, int mult, ProjLine dir, int mult_near)
        : p(pt), m(mult), direction(dir), m_near(mult_near) {
        if (m < 0 || m_near < 0 || (m == 0 && m_near == 0))
            throw std::invalid_argument("BaseCondition: multiplicities must be >= 0, not both 0");
        if (!incident(p, dir))
            throw std::invalid_argument("BaseCondition: direction line misses the point");
    }
};

struct LinSysSpec {
    int d;
    std::vector<BaseCondition> conds;

    LinSysSpec(int degree, std::vector<BaseCondition> conditions)
        : d(degree), conds(std::move(conditions)) {
        if (d < 1) throw std::invalid_argument("LinSysSpec: degree < 1");
        for (std::size_t i = 0; i < conds.size(); ++i)
            for (std::size_t j = i + 1; j < conds.size(); ++j)
                if (conds[i].p == conds[j].p)
                    throw std::invalid_argument("LinSysSpec: condition points must be distinct");
    }
};

// Rows of the interpolation matrix for one condition, in the fixed order:
// local coefficient indices (i, j) ascending lexicographic.
inline std::vector<std::pair<int, int>> condition_index_set(int d, const BaseCondition& c) {
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) {
            bool hit = (i + j < c.m);
            if (c.direction) hit = hit || (i + 2 * j < c.m + c.m_near);
            if (hit) idx.emplace_back(i, j);
        }
    return idx;
}

// Interpolation matrix: one column per degree-d monomial (fixed order), one
// row per imposed local coefficient, conditions in the order given.
inline RatMatrix condition_matrix(const LinSysSpec& spec) {
    const std::size_t ncols = HomPoly::term_count(spec.d);
    RatMatrix M(0, ncols);
    for (const BaseCondition& c : spec.conds) {
        auto frame = detail::adapted_frame(c.p, c.direction);
        // local coefficient vectors of each basis monomial under the frame
        std::vector<HomPoly> local;
        local.reserve(ncols);
        for (std::size_t t = 0; t < ncols; ++t) {
            std::vector<Rat> e(ncols, Rat(0));
            e[t] = 1;
            local.push_back(substitute(HomPoly(spec.d, std::move(e)), frame));
        }
        for (auto [i, j] : condition_index_set(spec.d, c)) {
            std::vector<Rat> row(ncols);
            for (std::size_t t = 0; t < ncols; ++t) row[t] = local[t].coeff(i, j);
            M.append_row(row);
        }
    }
    return M;
}

inline std::size_t h0(const LinSysSpec& spec) {
    return HomPoly::term_count(spec.d) - rank(condition_matrix(spec));
}

// Basis of the system as normalized forms, one per kernel vector, in the
// deterministic kernel order.  Throws when the system is empty.
inline std::vector<HomPoly> member_basis(const LinSysSpec& spec) {
    std::vector<HomPoly> out;
    for (auto& v : kernel_basis(condition_matrix(spec))) out.emplace_back(spec.d, v);
    if (out.empty()) throw EmptySystem("member_basis: system has no members");
    return out;
}

// The unique member of a one-dimensional system; throws otherwise.
inline HomPoly unique_member(const LinSysSpec& spec) {
    auto basis = member_basis(spec);
    if (basis.size() != 1)
        throw DegenerateSystem("unique_member: system dimension is not 1");
    return basis[0];
}

namespace fp {

// Dense univariate polynomials over F_p, ascending coefficients, p small.
using Poly = std::vector<unsigned long>;

inline int degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

inline Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline unsigned long inv_mod(unsigned long a, unsigned long p) {
    long t = 0, nt = 1;
    long r = static_cast<long>(p), nr = static_cast<long>(a % p);
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    long res = t % static_cast<long>(p);
    if (res < 0) res += static_cast<long>(p);
    return static_cast<unsigned long>(res);
}

inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& modp, unsigned long p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // reduce mod the monic modulus
    int dm = degree(modp);
    for (int i = static_cast<int>(prod.size()) - 1; i >= dm; --i) {
        unsigned long c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int k = 0; k < dm; ++k) {
            unsigned long sub = (c * modp[static_cast<std::size_t>(k)]) % p;
            std::size_t pos = static_cast<std::size_t>(i - dm + k);
            prod[pos] = (prod[pos] + p - sub) % p;
        }
    }
    prod.resize(static_cast<std::size_t>(dm));
    return trim(prod);
}

// x^e mod (modp) over F_p, e given as a GMP integer.
inline Poly pow_x_mod(const Int& e, const Poly& modp, unsigned long p) {
    Poly result{1};
    Poly base{0, 1};
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = mul_mod(result, base, modp, p);
        base = mul_mod(base, base, modp, p);
        exp >>= 1;
    }
    return result;
}

inline Poly gcd(Poly a, Poly b, unsigned long p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (degree(b) >= 0) {
        int da = degree(a), db = degree(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        unsigned long lb_inv = inv_mod(b[static_cast<std::size_t>(db)], p);
        while (degree(a) >= db && degree(a) >= 0) {
            int daa = degree(a);
            unsigned long f = (a[static_cast<std::size_t>(daa)] * lb_inv) % p;
            for (int i = 0; i <= db; ++i) {
                unsigned long sub = (f * b[static_cast<std::size_t>(i)]) % p;
                std::size_t pos = static_cast<std::size_t>(daa - db + i);
                a[pos] = (a[pos] + p - sub) % p;
            }
            a = trim(std::move(a));
        }
        std::swap(a, b);
    }
    return trim(a);
}

inline Poly sub(const Poly& a, const Poly& b, unsigned long p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        unsigned long av = i < a.size() ? a[i] : 0;
        unsigned long bv = i < b.size() ? b[i] : 0;
        r[i] = (av + p - bv) % p;
    }
    return trim(r);
}

// Rabin's criterion: f of degree n is irreducible over F_p iff
// x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for each prime q | n.
inline bool irreducible_mod_p(Poly f, unsigned long p) {
    f = trim(std::move(f));
    int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    unsigned long lc_inv = inv_mod(f[static_cast<std::size_t>(n)], p);
    for (auto& c : f) c = (c * lc_inv) % p;
    std::vector<int> prime_divs;
    int nn = n;
    for (int q = 2; q * q <= nn; ++q)
        if (nn % q == 0) {
            prime_divs.push_back(q);
            while (nn % q == 0) nn /= q;
        }
    if (nn > 1) prime_divs.push_back(nn);
    Poly x{0, 1};
    for (int q : prime_divs) {
        Int e;
        mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(n / q));
        Poly h = pow_x_mod(e, f, p);
        if (degree(gcd(sub(h, x, p), f, p)) != 0) return false;
    }
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(n));
    return sub(pow_x_mod(e, f, p), x, p).empty();
}

}  // namespace fp

enum class IrredStatus { proven, inconclusive };

struct IrreducibilityReport {
    IrredStatus status;
    long spec_a;  // specialization (x2, x3) = (spec_a, spec_b) after shearing
    long spec_b;
    unsigned long prime;
};

// One-sided irreducibility certificate over Q.  Shear so the form has full
// x1-degree; then any factorization survives specialization of (x2, x3) with
// degrees preserved, so an irreducible specialization mod a good prime
// certifies irreducibility of the form.  Never claims reducibility.
inline IrreducibilityReport irreducibility_report(const HomPoly& f) {
    if (f.is_zero() || f.degree() < 2)
        throw std::invalid_argument("irreducibility_report: need degree >= 2");

    Rat sa, sb;
    bool found = false;
    for (long trial = 0; trial < 64 && !found; ++trial)
        for (long a = -trial; a <= trial && !found; ++a) {
            long rest = trial - std::labs(a);
            for (long b : {rest, -rest}) {
                if (f.eval(std::array<Rat, 3>{Rat(1), Rat(a), Rat(b)}) != 0) {
                    sa = Rat(a);
                    sb = Rat(b);
                    found = true;
                    break;
                }
            }
        }
    if (!found) throw std::logic_error("irreducibility_report: no shear found");
    std::array<std::array<Rat, 3>, 3> S = {
        {{Rat(1), Rat(0), Rat(0)}, {sa, Rat(1), Rat(0)}, {sb, Rat(0), Rat(1)}}};
    HomPoly fs = substitute(f, S);

    static const long spec_pairs[][2] = {{1, 1}, {1, 2}, {2, 1},  {1, 3},  {3, 1},  {2, 3},
                                         {3, 2}, {1, 4}, {4, 1},  {3, 4},  {4, 3},  {1, 5},
                                         {5, 1}, {2, 5}, {5, 2},  {3, 5},  {5, 3},  {4, 5}};
    static const unsigned long primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                           37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                           79, 83, 89, 97, 101, 103, 107, 109, 113, 127};

    const int d = f.degree();
    for (auto& pr : spec_pairs) {
        // univariate in x1 at (x2, x3) = (pr[0], pr[1])
        std::vector<Rat> u(static_cast<std::size_t>(d) + 1, Rat(0));
        auto exps = HomPoly::exponents(d);
        for (std::size_t t = 0; t < fs.coeffs().size(); ++t) {
            const Rat& c = fs.coeffs()[t];
            if (c == 0) continue;
            Rat term = c;
            for (int e = 0; e < exps[t][1]; ++e) term *= pr[0];
            for (int e = 0; e < exps[t][2]; ++e) term *= pr[1];
            u[static_cast<std::size_t>(exps[t][0])] += term;
        }
        if (u[static_cast<std::size_t>(d)] == 0)
            throw std::logic_error("irreducibility_report: leading term lost");
        std::vector<Rat> prim = normalize_primitive(u);
        for (unsigned long p : primes) {
            fp::Poly up(prim.size());
            bool bad = false;
            for (std::size_t i = 0; i < prim.size(); ++i) {
                Int num = prim[i].get_num();
                Int r = num % static_cast<long>(p);
                if (r < 0) r += static_cast<long>(p);
                up[i] = r.get_ui();
            }
            if (up[static_cast<std::size_t>(d)] == 0) bad = true;  // degree drops mod p
            if (bad) continue;
            if (fp::irreducible_mod_p(up, p))
                return {IrredStatus::proven, pr[0], pr[1], p};
        }
    }
    return {IrredStatus::inconclusive, 0, 0, 0};
}

inline bool irreducible_specialization_test(const HomPoly& f) {
    return irreducibility_report(f).status == IrredStatus::proven;
}

}  // namespace bidouble

#endif
