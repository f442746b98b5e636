// The two-parameter family of six-point configurations.  A parameter u picks
// t = (u^2+1)/2u on the line through r0 = (0:1:1) and s0 = (1:0:1); the sixth
// point p moves on one of the two conics c_alpha, c_beta, rationally
// parametrized by lam.  All derived curves (tangent conics, the cubic gamma0,
// the singular cubics lambda1, lambda2) are exact and reconstructed through
// interpolation, never stored floats.
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linsys.hpp"
#include "plane.hpp"
#include "rational.hpp"

namespace bidouble {

struct BadParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExcludedPoint : std::runtime_error {
    std::string curve;
    ExcludedPoint(const std::string& curve_name, const std::string& what)
        : std::runtime_error(what), curve(curve_name) {}
};

struct Params {
    Rat u, t, s, alpha, beta;
};

inline Params mk_params(const Rat& u) {
    if (u == 0 || u == 1 || u == -1)
        throw BadParameter("parameter u must avoid {0, 1, -1}; got " + rat_to_string(u));
    Rat t = (u * u + 1) / (2 * u);
    Rat s = (u * u - 1) / (2 * u);
    return {u, t, s, -t * t + t * s, -t * t - t * s};
}

enum class Conic { alpha, beta };

inline const char* conic_name(Conic c) { return c == Conic::alpha ? "alpha" : "beta"; }

// c_a: -(1+a) x1 x2 + x1 x3 + a x2 x3, smooth through p1, p2, p3, p4 for
// a outside {0, -1}.
inline HomPoly conic_form(const Rat& a) {
    return HomPoly(2, {Rat(0), -(1 + a), Rat(1), Rat(0), a, Rat(0)});
}

// Rational parametrization of c_a by the pencil of lines through p1: the
// parameter (x2 : x3) = lam maps to the residual intersection
// (a x2 x3 : x2 D : x3 D) with D = (1+a) x2 - x3.  The parameter (1 : 1+a)
// of the tangent line lands on p1 itself.
inline ProjPoint point_on_conic(const Params& prm, Conic which, const Rat& lam2,
                                const Rat& lam3) {
    if (lam2 == 0 && lam3 == 0)
        throw std::invalid_argument("point_on_conic: lam must be nonzero");
    const Rat& a = (which == Conic::alpha) ? prm.alpha : prm.beta;
    Rat d = (1 + a) * lam2 - lam3;
    Rat x1 = a * lam2 * lam3;
    if (x1 == 0 && lam2 * d == 0 && lam3 * d == 0)
        throw std::logic_error("point_on_conic: degenerate parametrization");
    return ProjPoint(x1, lam2 * d, lam3 * d);
}

struct Config {
    Params params;
    Conic which;
    std::pair<Rat, Rat> lam;
    ProjPoint p0, p1, p2, p3, p4, p;
    std::array<ProjLine, 4> l;  // l[k-1] joins p0 and pk
    HomPoly chosen_conic, other_conic, big_conic;
    HomPoly gamma1, gamma2;
    std::optional<HomPoly> gamma0;
    std::optional<HomPoly> lambda1, lambda2;
};

inline HomPoly gamma0_closed_form(const Params& prm) {
    const Rat& t = prm.t;
    // x1^2[(1+t)x2 - x3] + x2^2[-(1+t)x1 + t x3] + x3^2(x1 - t x2)
    HomPoly f(3, std::vector<Rat>(10, Rat(0)));
    f.set_coeff(2, 1, 1 + t);                     // x1^2 x2
    f.set_coeff(2, 0, Rat(-1));                   // x1^2 x3
    f.set_coeff(1, 2, -(1 + t));                  // x1 x2^2
    f.set_coeff(0, 2, t);                         // x2^2 x3
    f.set_coeff(1, 0, Rat(1));                    // x1 x3^2
    f.set_coeff(0, 1, -t);                        // x2 x3^2
    return f;
}

// The nine base conditions of (II'): p0 and the four tangency pairs.
inline LinSysSpec gamma0_spec(const ProjPoint& p0, const std::array<ProjPoint, 4>& pk,
                              const std::array<ProjLine, 4>& l) {
    std::vector<BaseCondition> conds;
    conds.emplace_back(p0, 1);
    for (int k = 0; k < 4; ++k) conds.emplace_back(pk[k], 1, l[k], 1);
    return LinSysSpec(3, std::move(conds));
}

// delta_1 drops the tangency at p1, p3 (conditions p0, p1, p2, p2', p3, p4,
// p4'); delta_2 drops it at p2, p4.
inline LinSysSpec delta_spec(int which_delta, const ProjPoint& p0,
                             const std::array<ProjPoint, 4>& pk,
                             const std::array<ProjLine, 4>& l) {
    if (which_delta != 1 && which_delta != 2)
        throw std::invalid_argument("delta_spec: index must be 1 or 2");
    std::vector<BaseCondition> conds;
    conds.emplace_back(p0, 1);
    for (int k = 0; k < 4; ++k) {
        bool tangent = (which_delta == 1) ? (k == 1 || k == 3) : (k == 0 || k == 2);
        if (tangent)
            conds.emplace_back(pk[k], 1, l[k], 1);
        else
            conds.emplace_back(pk[k], 1);
    }
    return LinSysSpec(3, std::move(conds));
}

// Kernel members of a system, possibly none; member_basis is the throwing
// variant for systems required to be nonempty.
inline std::vector<HomPoly> system_members(const LinSysSpec& spec) {
    std::vector<HomPoly> out;
    for (auto& v : kernel_basis(condition_matrix(spec))) out.emplace_back(spec.d, v);
    return out;
}

// Members of delta_i singular at q: the seven delta conditions plus the three
// local vanishing rows of a double point at q.
inline std::vector<HomPoly> lambda_members(int which_delta, const ProjPoint& p0,
                                           const std::array<ProjPoint, 4>& pk,
                                           const std::array<ProjLine, 4>& l,
                                           const ProjPoint& q) {
    LinSysSpec spec = delta_spec(which_delta, p0, pk, l);
    spec.conds.emplace_back(q, 2);
    return system_members(spec);
}

namespace detail {

inline Config build_config(const Params& prm, Conic which, std::pair<Rat, Rat> lam,
                           std::optional<ProjPoint> p0_override,
                           std::optional<ProjPoint> p_override, bool checked) {
    ProjPoint p1(1, 0, 0), p2(0, 1, 0), p3(0, 0, 1), p4(1, 1, 1);
    ProjPoint p0 = p0_override ? *p0_override : ProjPoint(prm.t, Rat(1), 1 + prm.t);
    ProjPoint p = p_override ? *p_override : point_on_conic(prm, which, lam.first, lam.second);
    std::array<ProjPoint, 4> pk = {p1, p2, p3, p4};
    std::array<ProjLine, 4> l = {line_through(p0, p1), line_through(p0, p2),
                                 line_through(p0, p3), line_through(p0, p4)};
    if (checked) {
        for (int k = 0; k < 4; ++k)
            if (p == pk[static_cast<std::size_t>(k)])
                throw ExcludedPoint("p" + std::to_string(k + 1),
                                    "p coincides with p" + std::to_string(k + 1));
        for (int k = 0; k < 4; ++k)
            if (incident(p, l[k]))
                throw ExcludedPoint("l_p0p" + std::to_string(k + 1),
                                    "p lies on l_p0p" + std::to_string(k + 1));
    }
    std::optional<HomPoly> g0;
    try {
        auto basis = system_members(gamma0_spec(p0, pk, l));
        if (basis.size() == 1) g0 = basis[0];
        else if (checked)
            throw DegenerateSystem("gamma0 system has dimension " +
                                   std::to_string(basis.size()));
    } catch (const std::invalid_argument&) {
        if (checked) throw;
    }
    if (checked && g0 && g0->eval(p) == 0)
        throw ExcludedPoint("gamma0", "p lies on the cubic gamma0");
    const Rat& a = (which == Conic::alpha) ? prm.alpha : prm.beta;
    const Rat& b = (which == Conic::alpha) ? prm.beta : prm.alpha;
    Config c{prm,
             which,
             std::move(lam),
             p0,
             p1,
             p2,
             p3,
             p4,
             p,
             l,
             conic_form(a),
             conic_form(b),
             conic_form(-prm.t * prm.t),
             conic_form(-prm.t),
             conic_form(prm.t),
             g0,
             std::nullopt,
             std::nullopt};
    for (int i = 1; i <= 2; ++i) {
        std::optional<HomPoly>& slot = (i == 1) ? c.lambda1 : c.lambda2;
        try {
            auto basis = lambda_members(i, p0, pk, l, p);
            if (basis.size() == 1) slot = basis[0];
            else if (checked)
                throw DegenerateSystem("lambda" + std::to_string(i) + " system has dimension " +
                                       std::to_string(basis.size()));
        } catch (const std::invalid_argument&) {
            if (checked) throw;
        }
    }
    return c;
}

}  // namespace detail

inline Config mk_config(const Params& prm, Conic which, std::pair<Rat, Rat> lam) {
    return detail::build_config(prm, which, std::move(lam), std::nullopt, std::nullopt, true);
}

// Test-only constructor: skips the excluded-locus and dimension checks so
// deliberately broken configurations can be fed to check_conditions.
inline Config force_config(const Params& prm, Conic which, std::pair<Rat, Rat> lam,
                           std::optional<ProjPoint> p0_override = std::nullopt,
                           std::optional<ProjPoint> p_override = std::nullopt) {
    return detail::build_config(prm, which, std::move(lam), std::move(p0_override),
                                std::move(p_override), false);
}

struct ConditionReport {
    bool cond1 = false, cond2 = false, cond3 = false, cond4 = false;
    std::vector<std::string> witnesses;
    bool all() const { return cond1 && cond2 && cond3 && cond4; }
};

inline Rat conic_sym_det(const HomPoly& q) {
    if (q.degree() != 2) throw std::invalid_argument("conic_sym_det: degree must be 2");
    // symmetric matrix entries: diagonal = coefficient, off-diagonal = half
    Rat a = q.coeff(2, 0), b = q.coeff(0, 2), cc = q.coeff(0, 0);
    Rat d = q.coeff(1, 1) / 2, e = q.coeff(1, 0) / 2, f = q.coeff(0, 1) / 2;
    return a * (b * cc - f * f) - d * (d * cc - f * e) + e * (d * f - b * e);
}

// All pair lines of the distinct points of the configuration plus every conic
// in its ancestry; the scope of the exact-division irreducibility checks.
inline std::vector<std::pair<std::string, HomPoly>> ancestry_curves(const Config& c) {
    std::vector<ProjPoint> pts = {c.p0, c.p1, c.p2, c.p3, c.p4, c.p};
    std::vector<ProjPoint> distinct;
    for (const auto& q : pts)
        if (std::find(distinct.begin(), distinct.end(), q) == distinct.end())
            distinct.push_back(q);
    std::vector<std::pair<std::string, HomPoly>> out;
    for (std::size_t i = 0; i < distinct.size(); ++i)
        for (std::size_t j = i + 1; j < distinct.size(); ++j) {
            ProjLine lij = line_through(distinct[i], distinct[j]);
            out.emplace_back("line(" + std::to_string(i) + "," + std::to_string(j) + ")",
                             line_poly(lij));
        }
    out.emplace_back("chosen_conic", c.chosen_conic);
    out.emplace_back("other_conic", c.other_conic);
    out.emplace_back("big_conic", c.big_conic);
    out.emplace_back("gamma1", c.gamma1);
    out.emplace_back("gamma2", c.gamma2);
    return out;
}

inline ConditionReport check_conditions(const Config& c) {
    ConditionReport rep;
    const std::array<ProjPoint, 6> pts = {c.p0, c.p1, c.p2, c.p3, c.p4, c.p};
    std::array<ProjPoint, 4> pk = {c.p1, c.p2, c.p3, c.p4};

    // (I): no three of the six points collinear
    rep.cond1 = true;
    for (int i = 0; i < 6 && rep.cond1; ++i)
        for (int j = i + 1; j < 6 && rep.cond1; ++j)
            for (int k = j + 1; k < 6; ++k) {
                if (pts[i] == pts[j] || pts[i] == pts[k] || pts[j] == pts[k] ||
                    collinear(pts[i], pts[j], pts[k])) {
                    rep.cond1 = false;
                    rep.witnesses.push_back("I: points " + std::to_string(i) + "," +
                                            std::to_string(j) + "," + std::to_string(k) +
                                            " collinear or equal");
                    break;
                }
            }

    // (II): tangent conics exist through the two tangency patterns and are smooth
    rep.cond2 = true;
    for (int which = 1; which <= 2 && rep.cond2; ++which) {
        std::vector<BaseCondition> conds;
        for (int k = 0; k < 4; ++k) {
            bool tangent = (which == 1) ? (k == 2 || k == 3) : (k == 0 || k == 1);
            if (tangent)
                conds.emplace_back(pk[k], 1, c.l[k], 1);
            else
                conds.emplace_back(pk[k], 1);
        }
        auto basis = system_members(LinSysSpec(2, std::move(conds)));
        if (basis.size() != 1) {
            rep.cond2 = false;
            rep.witnesses.push_back("II: gamma" + std::to_string(which) +
                                    " system has dimension " + std::to_string(basis.size()));
        } else if (conic_sym_det(basis[0]) == 0) {
            rep.cond2 = false;
            rep.witnesses.push_back("II: gamma" + std::to_string(which) + " is not smooth");
        }
    }

    // (III): six points not on a conic; ten base conditions not on a cubic
    {
        RatMatrix m6(0, 6);
        for (const auto& q : pts)
            m6.append_row({q.x[0] * q.x[0], q.x[0] * q.x[1], q.x[0] * q.x[2],
                           q.x[1] * q.x[1], q.x[1] * q.x[2], q.x[2] * q.x[2]});
        bool conic_ok = rank(m6) == 6;
        bool p_clashes = c.p == c.p0 || c.p == c.p1 || c.p == c.p2 || c.p == c.p3 || c.p == c.p4;
        bool cubic_ok = false;
        if (!p_clashes) {
            LinSysSpec cub = gamma0_spec(c.p0, pk, c.l);
            cub.conds.emplace_back(c.p, 1);
            cubic_ok = rank(condition_matrix(cub)) == 10;
        }
        rep.cond3 = conic_ok && cubic_ok;
        if (!conic_ok) rep.witnesses.push_back("III: the six points lie on a conic");
        if (!cubic_ok) rep.witnesses.push_back("III: the ten base conditions lie on a cubic");
    }

    // (IV): lambda1, lambda2 exist, pass the division-scope irreducibility
    // checks, and have a node at p
    rep.cond4 = true;
    auto scope = ancestry_curves(c);
    for (int i = 1; i <= 2; ++i) {
        const std::optional<HomPoly>& lam = (i == 1) ? c.lambda1 : c.lambda2;
        std::string tag = "IV: lambda" + std::to_string(i);
        if (!lam) {
            rep.cond4 = false;
            rep.witnesses.push_back(tag + " does not exist or is not unique");
            continue;
        }
        for (const auto& [name, g] : scope) {
            if (divide_exact(*lam, g)) {
                rep.cond4 = false;
                rep.witnesses.push_back(tag + " divisible by " + name);
            }
        }
        std::array<Rat, 3> grad = gradient(*lam, c.p);
        if (lam->eval(c.p) != 0 || grad[0] != 0 || grad[1] != 0 || grad[2] != 0) {
            rep.cond4 = false;
            rep.witnesses.push_back(tag + " is not singular at p");
        } else if (!singularity_is_node(*lam, c.p)) {
            rep.cond4 = false;
            rep.witnesses.push_back(tag + " singularity at p is not a node");
        }
    }
    return rep;
}

inline HomPoly q_poly(const Params& prm) {
    return conic_form(prm.alpha) * conic_form(prm.beta);
}

// Exact polynomial identities for the Jacobians of the delta generator
// triples: F = 3 l02 l04 Q and G = 3 l01 l03 Q, with the line and conic
// factors in their displayed (unnormalized) forms.
inline bool jacobian_certificate(const Params& prm) {
    const Rat& t = prm.t;
    HomPoly l01 = linear_form(Rat(0), -(1 + t), Rat(1));
    HomPoly l02 = linear_form(-(1 + t), Rat(0), t);
    HomPoly l03 = linear_form(Rat(1), -t, Rat(0));
    HomPoly l04 = linear_form(t, Rat(-1), 1 - t);
    HomPoly x1 = linear_form(1, 0, 0), x2 = linear_form(0, 1, 0), x3 = linear_form(0, 0, 1);
    HomPoly big = conic_form(-t * t);
    HomPoly q = q_poly(prm);

    HomPoly f = jacobian_det(l02 * (x2 - x3) * (x1 - x2), l04 * x3 * x1, big * (x1 - x3));
    HomPoly g = jacobian_det(l01 * x1 * (x1 - x2), l03 * (x2 - x3) * x3, big * x2);
    return f == (l02 * l04 * q) * Rat(3) && g == (l01 * l03 * q) * Rat(3);
}

// The (13)(24) involution x -> (x2 - x3 : x2 : x2 - x1), swapping p1 with p3
// and p2 with p4; it carries the u-configuration to the (-u)-configuration.
inline ProjTransform involution_1324() {
    return ProjTransform({{{Rat(0), Rat(1), Rat(-1)},
                           {Rat(0), Rat(1), Rat(0)},
                           {Rat(-1), Rat(1), Rat(0)}}});
}

inline Config apply_1324(const Config& c) {
    ProjPoint ip = involution_1324().apply(c.p);
    std::vector<Rat> lam = normalize_primitive({ip.x[1], ip.x[2]});
    return mk_config(mk_params(-c.params.u), c.which, {lam[0], lam[1]});
}

}  // namespace bidouble
