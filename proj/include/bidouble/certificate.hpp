// Certificate assembly and the CLI command cores.  The full verification
// pipeline is serialized as byte-stable JSON: fixed key order, every number
// rendered as a decimal string, booleans as JSON booleans.
#pragma once

#include <algorithm>
#include <exception>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bidouble.hpp"
#include "config.hpp"
#include "fibration.hpp"
#include "picard.hpp"

namespace bidouble {

using ordered_json = nlohmann::ordered_json;

namespace cert_detail {

inline std::string triple_str(const std::array<Rat, 3>& v) {
    return rat_to_string(v[0]) + ":" + rat_to_string(v[1]) + ":" + rat_to_string(v[2]);
}

inline std::string point_str(const ProjPoint& p) { return triple_str(p.x); }
inline std::string line_str(const ProjLine& l) { return triple_str(l.c); }

inline std::string lam_str(const std::pair<Rat, Rat>& lam) {
    return rat_to_string(lam.first) + ":" + rat_to_string(lam.second);
}

inline ordered_json poly_json(const HomPoly& f) {
    HomPoly g = f.normalized();
    ordered_json j;
    j["degree"] = std::to_string(g.degree());
    ordered_json arr = ordered_json::array();
    for (const Rat& c : g.coeffs()) arr.push_back(rat_to_string(c));
    j["coeffs"] = arr;
    return j;
}

inline ordered_json opt_poly_json(const std::optional<HomPoly>& f) {
    if (!f) return nullptr;
    return poly_json(*f);
}

inline ordered_json params_json(const Params& prm) {
    ordered_json j;
    j["u"] = rat_to_string(prm.u);
    j["t"] = rat_to_string(prm.t);
    j["s"] = rat_to_string(prm.s);
    j["alpha"] = rat_to_string(prm.alpha);
    j["beta"] = rat_to_string(prm.beta);
    return j;
}

inline ordered_json config_json(const Config& c) {
    ordered_json j;
    j["params"] = params_json(c.params);
    j["conic"] = conic_name(c.which);
    j["lam"] = lam_str(c.lam);
    j["p0"] = point_str(c.p0);
    j["p1"] = point_str(c.p1);
    j["p2"] = point_str(c.p2);
    j["p3"] = point_str(c.p3);
    j["p4"] = point_str(c.p4);
    j["p"] = point_str(c.p);
    ordered_json lines = ordered_json::array();
    for (const auto& l : c.l) lines.push_back(line_str(l));
    j["lines_p0pk"] = lines;
    j["chosen_conic"] = poly_json(c.chosen_conic);
    j["other_conic"] = poly_json(c.other_conic);
    j["big_conic"] = poly_json(c.big_conic);
    j["gamma1"] = poly_json(c.gamma1);
    j["gamma2"] = poly_json(c.gamma2);
    j["gamma0"] = opt_poly_json(c.gamma0);
    j["lambda1"] = opt_poly_json(c.lambda1);
    j["lambda2"] = opt_poly_json(c.lambda2);
    return j;
}

inline ordered_json checks_json(const std::vector<std::pair<std::string, bool>>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& [name, ok] : checks) {
        ordered_json e;
        e["name"] = name;
        e["ok"] = ok;
        arr.push_back(e);
    }
    return arr;
}

inline ordered_json report_json(const CheckReport& rep) {
    ordered_json j;
    j["checks"] = checks_json(rep.checks);
    j["ok"] = rep.all();
    return j;
}

inline ordered_json fibration_json(const FibrationReport& fr) {
    ordered_json j;
    j["checks"] = checks_json(fr.report.checks);
    ordered_json eb;
    eb["generic"] = fr.budget.generic_kind;
    ordered_json sk = ordered_json::array();
    for (const auto& k : fr.budget.singular_kinds) sk.push_back(k);
    eb["singular"] = sk;
    eb["total"] = std::to_string(fr.budget.total());
    j["euler"] = eb;
    j["ok"] = fr.report.all();
    return j;
}

inline ordered_json invariants_json(const SurfaceInvariants& inv) {
    auto tuple3 = [](const std::array<long long, 3>& a) {
        ordered_json arr = ordered_json::array();
        for (long long v : a) arr.push_back(std::to_string(v));
        return arr;
    };
    ordered_json j;
    j["K2"] = std::to_string(inv.K2);
    j["pg"] = std::to_string(inv.pg);
    j["q"] = std::to_string(inv.q);
    j["chi"] = std::to_string(inv.chi);
    ordered_json eig = ordered_json::array();
    for (long long v : inv.eigenspaces) eig.push_back(std::to_string(v));
    j["eigenspaces"] = eig;
    j["KR"] = tuple3(inv.KR);
    j["R2"] = tuple3(inv.R2);
    j["genusR"] = tuple3(inv.genusR);
    j["k"] = tuple3(inv.k);
    return j;
}

inline ordered_json quotients_json(const QuotientReport& qr) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : qr.entries) {
        ordered_json q;
        q["label"] = e.label;
        q["K2_V"] = std::to_string(e.K2_V);
        q["contracted"] = std::to_string(e.contracted);
        q["K2_quotient"] = std::to_string(e.K2_quotient);
        q["kappa"] = e.kappa;
        arr.push_back(q);
    }
    return arr;
}

inline void collect_failures(const CheckReport& rep, std::vector<std::string>& reasons) {
    for (const auto& [name, ok] : rep.checks)
        if (!ok) reasons.push_back(rep.id + ": " + name);
}

}  // namespace cert_detail

struct VerifyOutcome {
    ordered_json certificate;
    int exit_code;
};

// Full pipeline for one parameter choice.  BadParameter (and a degenerate
// lam pair) propagate to the caller as usage errors; every other failure is
// recorded inside a FAILED certificate.
inline VerifyOutcome cmd_verify(const Rat& u, Conic which, const std::pair<Rat, Rat>& lam) {
    if (lam.first == 0 && lam.second == 0)
        throw BadParameter("lam must be a nonzero pair");
    Params prm = mk_params(u);

    std::vector<std::string> construction_reasons;
    std::optional<Config> cfg;
    try {
        cfg = mk_config(prm, which, lam);
    } catch (const ExcludedPoint& e) {
        construction_reasons.push_back("ExcludedPoint " + e.curve + ": " + e.what());
    } catch (const DegenerateSystem& e) {
        construction_reasons.push_back(std::string("DegenerateSystem: ") + e.what());
    }
    const bool constructed = cfg.has_value();
    if (!cfg) cfg = force_config(prm, which, lam);
    const Config& c = *cfg;

    ConditionReport conditions = check_conditions(c);
    bool gamma0_match =
        c.gamma0.has_value() && c.gamma0->normalized() == gamma0_closed_form(prm).normalized();
    bool jac = jacobian_certificate(prm);

    auto cat = catalog();
    auto idents = verify_catalog_identities(cat);
    bool idents_ok = true;
    for (const auto& [n, ok] : idents) idents_ok = idents_ok && ok;

    FibrationReport fr = verify_rational_fibration(cat);
    FibrationReport f1 = verify_elliptic_h1(cat, c);
    FibrationReport f2 = verify_elliptic_h2(cat, c);
    CheckReport snc = verify_snc(cat, c);
    CheckReport nef = verify_nef_and_contraction(cat);
    CheckReport p4 = verify_birational_p4(cat, c);

    ordered_json jinv = nullptr, jquo = nullptr;
    std::optional<std::string> inv_error;
    try {
        BranchData bd = branch_data(cat);
        SurfaceInvariants inv = invariants_S(bd, cat, c);
        QuotientReport quo = quotient_invariants(bd, cat);
        jinv = cert_detail::invariants_json(inv);
        jquo = cert_detail::quotients_json(quo);
    } catch (const std::exception& e) {
        inv_error = e.what();
    }

    bool ok = constructed && conditions.all() && gamma0_match && jac && idents_ok &&
              fr.report.all() && f1.report.all() && f2.report.all() && snc.all() && nef.all() &&
              p4.all() && !jinv.is_null() && !jquo.is_null();

    std::vector<std::string> reasons;
    if (!ok) {
        reasons = construction_reasons;
        for (const auto& w : conditions.witnesses) reasons.push_back("condition " + w);
        if (!gamma0_match) reasons.push_back("gamma0 interpolant does not match the closed form");
        if (!jac) reasons.push_back("jacobian identity failed");
        for (const auto& [n, idok] : idents)
            if (!idok) reasons.push_back("catalog identity failed: " + n);
        cert_detail::collect_failures(fr.report, reasons);
        cert_detail::collect_failures(f1.report, reasons);
        cert_detail::collect_failures(f2.report, reasons);
        cert_detail::collect_failures(snc, reasons);
        cert_detail::collect_failures(nef, reasons);
        cert_detail::collect_failures(p4, reasons);
        if (inv_error) reasons.push_back("invariants: " + *inv_error);
    }

    ordered_json cert;
    cert["version"] = "1";
    ordered_json input;
    input["u"] = rat_to_string(u);
    input["conic"] = conic_name(which);
    input["lam"] = cert_detail::lam_str(lam);
    cert["input"] = input;
    cert["config"] = cert_detail::config_json(c);
    ordered_json jc;
    jc["I"] = conditions.cond1;
    jc["II"] = conditions.cond2;
    jc["III"] = conditions.cond3;
    jc["IV"] = conditions.cond4;
    ordered_json wit = ordered_json::array();
    for (const auto& w : conditions.witnesses) wit.push_back(w);
    jc["witnesses"] = wit;
    cert["conditions"] = jc;
    cert["gamma0_match"] = gamma0_match;
    cert["jacobian_identity"] = jac;
    cert["catalog_identities"] = cert_detail::checks_json(idents);
    ordered_json jf;
    jf["rational"] = cert_detail::fibration_json(fr);
    jf["elliptic_h1"] = cert_detail::fibration_json(f1);
    jf["elliptic_h2"] = cert_detail::fibration_json(f2);
    cert["fibrations"] = jf;
    cert["snc"] = cert_detail::report_json(snc);
    cert["nef"] = cert_detail::report_json(nef);
    cert["p4"] = cert_detail::report_json(p4);
    cert["invariants"] = jinv;
    cert["quotients"] = jquo;
    cert["status"] = ok ? "VERIFIED" : "FAILED";
    ordered_json jr = ordered_json::array();
    for (const auto& r : reasons) jr.push_back(r);
    cert["reasons"] = jr;
    return {cert, ok ? 0 : 1};
}

// Deterministic lam grid: primitive pairs with the first nonzero entry
// positive, ordered by height max(|a|,|b|) and lexicographically inside a
// height level.
inline std::vector<std::pair<long, long>> lam_grid(std::size_t n) {
    std::vector<std::pair<long, long>> out;
    for (long h = 1; out.size() < n; ++h) {
        std::vector<std::pair<long, long>> level;
        for (long a = 0; a <= h; ++a)
            for (long b = -h; b <= h; ++b) {
                if (std::max(a, b < 0 ? -b : b) != h) continue;
                if (a == 0 && b != 1) continue;
                if (a > 0 && std::gcd(a, b < 0 ? -b : b) != 1) continue;
                level.emplace_back(a, b);
            }
        std::sort(level.begin(), level.end());
        for (const auto& pr : level) {
            out.push_back(pr);
            if (out.size() == n) break;
        }
    }
    return out;
}

// First failing stage of one grid point, or nullopt for a hit.
inline std::optional<std::string> classify_point(const Params& prm, Conic which,
                                                 const std::pair<Rat, Rat>& lam, bool full) {
    std::optional<Config> cfg;
    try {
        cfg = mk_config(prm, which, lam);
    } catch (const ExcludedPoint& e) {
        return "ExcludedPoint " + e.curve;
    } catch (const DegenerateSystem&) {
        return std::string("DegenerateSystem");
    }
    ConditionReport rep = check_conditions(*cfg);
    if (!rep.cond1) return std::string("condition I");
    if (!rep.cond2) return std::string("condition II");
    if (!rep.cond3) return std::string("condition III");
    if (!rep.cond4) return std::string("condition IV");
    if (full) {
        VerifyOutcome out = cmd_verify(prm.u, which, lam);
        if (out.exit_code != 0) {
            const ordered_json& cert = out.certificate;
            if (!cert["gamma0_match"].get<bool>()) return std::string("gamma0_match");
            if (!cert["jacobian_identity"].get<bool>()) return std::string("jacobian_identity");
            for (const auto& e : cert["catalog_identities"])
                if (!e["ok"].get<bool>()) return std::string("catalog_identities");
            for (const char* key : {"rational", "elliptic_h1", "elliptic_h2"})
                if (!cert["fibrations"][key]["ok"].get<bool>()) return std::string("fibrations");
            for (const char* key : {"snc", "nef", "p4"})
                if (!cert[key]["ok"].get<bool>()) return std::string(key);
            return std::string("invariants");
        }
    }
    return std::nullopt;
}

// Grid sweep.  Order: u values as given, then conic, then the lam grid; the
// hits list and the failure histogram partition the grid.
inline ordered_json cmd_search(const std::vector<Rat>& u_values, std::size_t lam_grid_n,
                               const std::vector<Conic>& conics, bool full) {
    if (u_values.empty() || lam_grid_n == 0 || conics.empty())
        throw BadParameter("search grid must be nonempty");
    auto grid = lam_grid(lam_grid_n);

    ordered_json hits = ordered_json::array();
    std::map<std::string, long long> histogram;
    long long total = 0;
    for (const Rat& u : u_values) {
        Params prm = mk_params(u);
        for (Conic which : conics)
            for (const auto& [a, b] : grid) {
                std::pair<Rat, Rat> lam{Rat(a), Rat(b)};
                ++total;
                auto bucket = classify_point(prm, which, lam, full);
                if (!bucket) {
                    ordered_json h;
                    h["u"] = rat_to_string(u);
                    h["conic"] = conic_name(which);
                    h["lam"] = cert_detail::lam_str(lam);
                    hits.push_back(h);
                } else {
                    ++histogram[*bucket];
                }
            }
    }

    ordered_json j;
    ordered_json grid_spec;
    ordered_json ju = ordered_json::array();
    for (const Rat& u : u_values) ju.push_back(rat_to_string(u));
    grid_spec["u"] = ju;
    ordered_json jconics = ordered_json::array();
    for (Conic which : conics) jconics.push_back(conic_name(which));
    grid_spec["conics"] = jconics;
    ordered_json jlam = ordered_json::array();
    for (const auto& [a, b] : grid)
        jlam.push_back(std::to_string(a) + ":" + std::to_string(b));
    grid_spec["lam"] = jlam;
    grid_spec["full"] = full;
    grid_spec["total"] = std::to_string(total);
    j["grid"] = grid_spec;
    j["hits"] = hits;
    ordered_json jh;
    long long failed = 0;
    for (const auto& [bucket, count] : histogram) {
        jh[bucket] = std::to_string(count);
        failed += count;
    }
    j["failures"] = jh;
    j["hit_count"] = std::to_string(static_cast<long long>(hits.size()));
    j["failure_count"] = std::to_string(failed);
    return j;
}

inline ordered_json cmd_catalog_json() {
    auto cat = catalog();
    ordered_json j;
    ordered_json classes = ordered_json::array();
    for (const auto& e : cat) {
        ordered_json c;
        c["name"] = e.name;
        ordered_json cls = ordered_json::array();
        for (std::size_t i = 0; i < 11; ++i) cls.push_back(std::to_string(e.cls[i]));
        c["class"] = cls;
        c["self_intersection"] = std::to_string(self_int(e.cls));
        c["genus"] = std::to_string(adjunction_genus(e.cls));
        classes.push_back(c);
    }
    j["classes"] = classes;
    ordered_json table = ordered_json::array();
    for (const auto& a : cat) {
        ordered_json row;
        row["name"] = a.name;
        ordered_json vals = ordered_json::array();
        for (const auto& b : cat) vals.push_back(std::to_string(pair(a.cls, b.cls)));
        row["row"] = vals;
        table.push_back(row);
    }
    j["pairing"] = table;
    auto idents = verify_catalog_identities(cat);
    j["identities"] = cert_detail::checks_json(idents);
    bool ok = true;
    for (const auto& [n, idok] : idents) ok = ok && idok;
    j["ok"] = ok;
    return j;
}

inline std::string cmd_catalog_text() {
    auto cat = catalog();
    std::ostringstream os;
    os << std::left << std::setw(9) << "name" << std::setw(42) << "class" << std::setw(6)
       << "self" << "genus\n";
    for (const auto& e : cat) {
        std::string cls = "(";
        for (std::size_t i = 0; i < 11; ++i) {
            if (i) cls += ",";
            cls += std::to_string(e.cls[i]);
        }
        cls += ")";
        os << std::left << std::setw(9) << e.name << std::setw(42) << cls << std::setw(6)
           << self_int(e.cls) << adjunction_genus(e.cls) << "\n";
    }
    os << "\npairing (rows and columns in the order above):\n";
    os << std::setw(9) << "";
    for (const auto& b : cat) os << std::right << std::setw(8) << b.name;
    os << "\n";
    for (const auto& a : cat) {
        os << std::left << std::setw(9) << a.name;
        for (const auto& b : cat) os << std::right << std::setw(8) << pair(a.cls, b.cls);
        os << "\n";
    }
    os << "\nidentities:\n";
    for (const auto& [n, ok] : verify_catalog_identities(cat))
        os << "  [" << (ok ? "ok" : "FAIL") << "] " << n << "\n";
    return os.str();
}

inline ordered_json cmd_params(const Rat& u) {
    Params prm = mk_params(u);
    ordered_json j = cert_detail::params_json(prm);
    j["p0"] = cert_detail::point_str(ProjPoint{prm.t, Rat(1), 1 + prm.t});
    return j;
}

}  // namespace bidouble
