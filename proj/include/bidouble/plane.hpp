// Projective plane over Q: points, lines, homogeneous ternary forms, and the
// exact predicates built on them (incidence, tangency, node detection,
// restriction of a curve to a line).  No floating point anywhere; every
// object carries a canonical primitive-integer representative.
#pragma once

#include <array>
#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace bidouble {

struct NotSingular : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::array<Rat, 3> normalize3(std::array<Rat, 3> v) {
    std::vector<Rat> w{v[0], v[1], v[2]};
    w = normalize_primitive(std::move(w));
    return {w[0], w[1], w[2]};
}

}  // namespace detail

// Point of P^2(Q).  Stored representative: primitive integer triple, first
// nonzero coordinate positive.
struct ProjPoint {
    std::array<Rat, 3> x;

    ProjPoint(Rat a, Rat b, Rat c) : x(detail::normalize3({a, b, c})) {
        if (x[0] == 0 && x[1] == 0 && x[2] == 0)
            throw std::invalid_argument("ProjPoint: zero triple");
    }
    bool operator==(const ProjPoint& o) const { return x == o.x; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
};

// Line of P^2(Q), same normal form as points (coefficient triple).
struct ProjLine {
    std::array<Rat, 3> c;

    ProjLine(Rat a, Rat b, Rat cc) : c(detail::normalize3({a, b, cc})) {
        if (c[0] == 0 && c[1] == 0 && c[2] == 0)
            throw std::invalid_argument("ProjLine: zero triple");
    }
    bool operator==(const ProjLine& o) const { return c == o.c; }
    bool operator!=(const ProjLine& o) const { return !(*this == o); }
};

inline bool incident(const ProjPoint& p, const ProjLine& l) {
    return p.x[0] * l.c[0] + p.x[1] * l.c[1] + p.x[2] * l.c[2] == 0;
}

inline Rat det3(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b,
                const std::array<Rat, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw std::invalid_argument("line_through: identical points");
    return ProjLine(p.x[1] * q.x[2] - p.x[2] * q.x[1], p.x[2] * q.x[0] - p.x[0] * q.x[2],
                    p.x[0] * q.x[1] - p.x[1] * q.x[0]);
}

inline bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    return det3(p.x, q.x, r.x) == 0;
}

// Homogeneous ternary form of degree d.  Coefficients are stored in the fixed
// monomial order: exponent triples (i,j,k) with i+j+k=d, descending
// lexicographic in (i,j).  Degree 0 (constants) is allowed for derived values
// such as Jacobians of linear triples.
class HomPoly {
  public:
    HomPoly() : d_(0), c_(1, Rat(0)) {}
    HomPoly(int degree, std::vector<Rat> coeffs) : d_(degree), c_(std::move(coeffs)) {
        if (degree < 0 || c_.size() != term_count(degree))
            throw std::invalid_argument("HomPoly: coefficient count mismatch");
    }

    static std::size_t term_count(int d) {
        return static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 2) / 2;
    }

    // Index of x1^i x2^j x3^(d-i-j) in the fixed order.
    static std::size_t index_of(int d, int i, int j) {
        // terms with first exponent > i come first: sum_{a=i+1..d} (d-a+1)
        std::size_t before = 0;
        for (int a = d; a > i; --a) before += static_cast<std::size_t>(d - a + 1);
        return before + static_cast<std::size_t>(d - i - j);
    }

    static std::vector<std::array<int, 3>> exponents(int d) {
        std::vector<std::array<int, 3>> out;
        out.reserve(term_count(d));
        for (int i = d; i >= 0; --i)
            for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
        return out;
    }

    int degree() const { return d_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i, int j) const { return c_[index_of(d_, i, j)]; }
    void set_coeff(int i, int j, const Rat& v) { c_[index_of(d_, i, j)] = v; }

    bool is_zero() const {
        for (const Rat& v : c_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const HomPoly& o) const { return d_ == o.d_ && c_ == o.c_; }
    bool operator!=(const HomPoly& o) const { return !(*this == o); }

    HomPoly normalized() const { return HomPoly(d_, normalize_primitive(c_)); }

    Rat eval(const std::array<Rat, 3>& p) const {
        Rat acc = 0;
        auto exps = exponents(d_);
        for (std::size_t t = 0; t < c_.size(); ++t) {
            if (c_[t] == 0) continue;
            Rat term = c_[t];
            for (int axis = 0; axis < 3; ++axis)
                for (int e = 0; e < exps[t][axis]; ++e) term *= p[axis];
            acc += term;
        }
        return acc;
    }
    Rat eval(const ProjPoint& p) const { return eval(p.x); }

    HomPoly operator+(const HomPoly& o) const {
        require_same_degree(o);
        std::vector<Rat> r(c_);
        for (std::size_t t = 0; t < r.size(); ++t) r[t] += o.c_[t];
        return HomPoly(d_, std::move(r));
    }
    HomPoly operator-(const HomPoly& o) const {
        require_same_degree(o);
        std::vector<Rat> r(c_);
        for (std::size_t t = 0; t < r.size(); ++t) r[t] -= o.c_[t];
        return HomPoly(d_, std::move(r));
    }
    HomPoly operator*(const Rat& s) const {
        std::vector<Rat> r(c_);
        for (Rat& v : r) v *= s;
        return HomPoly(d_, std::move(r));
    }
    HomPoly operator*(const HomPoly& o) const {
        HomPoly out(d_ + o.d_, std::vector<Rat>(term_count(d_ + o.d_), Rat(0)));
        auto ea = exponents(d_), eb = exponents(o.d_);
        for (std::size_t s = 0; s < c_.size(); ++s) {
            if (c_[s] == 0) continue;
            for (std::size_t t = 0; t < o.c_.size(); ++t) {
                if (o.c_[t] == 0) continue;
                std::size_t idx = index_of(d_ + o.d_, ea[s][0] + eb[t][0], ea[s][1] + eb[t][1]);
                out.c_[idx] += c_[s] * o.c_[t];
            }
        }
        return out;
    }

    HomPoly derivative(int axis) const {
        if (d_ == 0) return HomPoly(0, {Rat(0)});
        HomPoly out(d_ - 1, std::vector<Rat>(term_count(d_ - 1), Rat(0)));
        auto exps = exponents(d_);
        for (std::size_t t = 0; t < c_.size(); ++t) {
            if (c_[t] == 0 || exps[t][axis] == 0) continue;
            std::array<int, 3> e = exps[t];
            Rat coef = c_[t] * e[axis];
            --e[axis];
            out.c_[index_of(d_ - 1, e[0], e[1])] += coef;
        }
        return out;
    }

  private:
    void require_same_degree(const HomPoly& o) const {
        if (d_ != o.d_) throw std::invalid_argument("HomPoly: degree mismatch");
    }

    int d_;
    std::vector<Rat> c_;
};

inline HomPoly linear_form(const Rat& a, const Rat& b, const Rat& c) {
    return HomPoly(1, {a, b, c});
}
inline HomPoly line_poly(const ProjLine& l) { return linear_form(l.c[0], l.c[1], l.c[2]); }

inline std::array<Rat, 3> gradient(const HomPoly& f, const ProjPoint& p) {
    return {f.derivative(0).eval(p), f.derivative(1).eval(p), f.derivative(2).eval(p)};
}

// f(S y) where S is a 3x3 matrix given by columns; exact expansion.
inline HomPoly substitute(const HomPoly& f, const std::array<std::array<Rat, 3>, 3>& S) {
    const int d = f.degree();
    // row i of S gives the linear form substituted for x_{i+1}
    HomPoly L[3] = {linear_form(S[0][0], S[0][1], S[0][2]),
                    linear_form(S[1][0], S[1][1], S[1][2]),
                    linear_form(S[2][0], S[2][1], S[2][2])};
    std::array<std::vector<HomPoly>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v].push_back(HomPoly(0, {Rat(1)}));
        for (int e = 1; e <= d; ++e) pw[v].push_back(pw[v].back() * L[v]);
    }
    HomPoly out(d, std::vector<Rat>(HomPoly::term_count(d), Rat(0)));
    auto exps = HomPoly::exponents(d);
    for (std::size_t t = 0; t < f.coeffs().size(); ++t) {
        const Rat& c = f.coeffs()[t];
        if (c == 0) continue;
        HomPoly term = pw[0][exps[t][0]] * pw[1][exps[t][1]] * pw[2][exps[t][2]];
        out = out + term * c;
    }
    return out;
}

// Invertible projective transformation, acting on points by x -> M x and on
// curves by f -> f o M^{-1}, so incidence is preserved.
struct ProjTransform {
    std::array<std::array<Rat, 3>, 3> m;  // rows

    explicit ProjTransform(std::array<std::array<Rat, 3>, 3> rows) : m(rows) {
        if (det() == 0) throw std::invalid_argument("ProjTransform: singular matrix");
    }

    Rat det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    ProjTransform inverse() const {
        Rat d = det();
        std::array<std::array<Rat, 3>, 3> adj;
        auto minor2 = [&](int r0, int r1, int c0, int c1) -> Rat {
            return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        };
        adj[0] = {minor2(1, 2, 1, 2) / d, -minor2(0, 2, 1, 2) / d, minor2(0, 1, 1, 2) / d};
        adj[1] = {-minor2(1, 2, 0, 2) / d, minor2(0, 2, 0, 2) / d, -minor2(0, 1, 0, 2) / d};
        adj[2] = {minor2(1, 2, 0, 1) / d, -minor2(0, 2, 0, 1) / d, minor2(0, 1, 0, 1) / d};
        return ProjTransform(adj);
    }

    ProjPoint apply(const ProjPoint& p) const {
        std::array<Rat, 3> y{};
        for (int i = 0; i < 3; ++i)
            y[i] = m[i][0] * p.x[0] + m[i][1] * p.x[1] + m[i][2] * p.x[2];
        return ProjPoint(y[0], y[1], y[2]);
    }

    ProjLine apply(const ProjLine& l) const {
        // (M.l')(M x) = l(x)  =>  l' = M^{-T} l
        ProjTransform inv = inverse();
        std::array<Rat, 3> y{};
        for (int i = 0; i < 3; ++i)
            y[i] = inv.m[0][i] * l.c[0] + inv.m[1][i] * l.c[1] + inv.m[2][i] * l.c[2];
        return ProjLine(y[0], y[1], y[2]);
    }

    HomPoly apply(const HomPoly& f) const { return substitute(f, inverse().m); }
};

// True iff f vanishes at p, p lies on l, and the gradient of f at p is nonzero
// and proportional to l (smooth point with tangent line l).
inline bool tangent_to_line_at(const HomPoly& f, const ProjLine& l, const ProjPoint& p) {
    if (f.eval(p) != 0 || !incident(p, l))
        throw std::invalid_argument("tangent_to_line_at: point not on curve and line");
    std::array<Rat, 3> g = gradient(f, p);
    if (g[0] == 0 && g[1] == 0 && g[2] == 0) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (g[i] * l.c[j] - g[j] * l.c[i] != 0) return false;
    return true;
}

namespace detail {

inline const std::array<std::array<Rat, 3>, 7>& unit_candidates() {
    static const std::array<std::array<Rat, 3>, 7> cands = {{{Rat(1), Rat(0), Rat(0)},
                                                             {Rat(0), Rat(1), Rat(0)},
                                                             {Rat(0), Rat(0), Rat(1)},
                                                             {Rat(1), Rat(1), Rat(0)},
                                                             {Rat(1), Rat(0), Rat(1)},
                                                             {Rat(0), Rat(1), Rat(1)},
                                                             {Rat(1), Rat(1), Rat(1)}}};
    return cands;
}

// Deterministic frame with columns (q, r, p): p at (0:0:1); when a direction
// line through p is supplied, q lies on it, so the line becomes {y2 = 0}.
inline std::array<std::array<Rat, 3>, 3> adapted_frame(const ProjPoint& p,
                                                       const std::optional<ProjLine>& dir);

}  // namespace detail

// Standard points of a line: the three pairwise-elimination candidates,
// normalized, deduplicated, sorted ascending by coordinate tuple.  Always at
// least two; the first two parametrize the line in restrict_to_line.
inline std::vector<ProjPoint> standard_points(const ProjLine& l) {
    const Rat &a = l.c[0], &b = l.c[1], &c = l.c[2];
    std::vector<std::array<Rat, 3>> cands = {{b, -a, Rat(0)}, {c, Rat(0), -a}, {Rat(0), c, -b}};
    std::vector<ProjPoint> pts;
    for (auto& v : cands) {
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
        ProjPoint p(v[0], v[1], v[2]);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end(),
              [](const ProjPoint& u, const ProjPoint& v) { return u.x < v.x; });
    return pts;
}

// Binary form r(s,w) of degree d, coefficient of s^i w^(d-i) at index i.
// Restriction of a plane curve to a line lives here; root multiplicities are
// intersection multiplicities.
struct BinaryForm {
    int d;
    std::vector<Rat> c;  // size d+1, ascending s-exponent

    Rat eval(const Rat& s, const Rat& w) const {
        Rat acc = 0;
        for (int i = 0; i <= d; ++i) {
            Rat term = c[i];
            for (int e = 0; e < i; ++e) term *= s;
            for (int e = 0; e < d - i; ++e) term *= w;
            acc += term;
        }
        return acc;
    }

    bool is_zero() const {
        for (const Rat& v : c)
            if (v != 0) return false;
        return true;
    }
};

namespace poly1 {

// Dense univariate polynomials over Q, ascending coefficients.
using UniPoly = std::vector<Rat>;

inline int degree(const UniPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

inline UniPoly derivative(const UniPoly& f) {
    UniPoly out;
    for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * Rat(static_cast<long>(i)));
    return out;
}

inline Rat eval(const UniPoly& f, const Rat& x) {
    Rat acc = 0;
    for (int i = degree(f); i >= 0; --i) acc = acc * x + f[i];
    return acc;
}

inline UniPoly monic_gcd(UniPoly a, UniPoly b) {
    while (degree(b) >= 0) {
        int da = degree(a), db = degree(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        Rat f = a[da] / b[db];
        int sh = da - db;
        for (int i = 0; i <= db; ++i) a[i + sh] -= f * b[i];
        if (degree(a) < degree(b)) std::swap(a, b);
    }
    int d = degree(a);
    if (d < 0) return {};
    UniPoly g(a.begin(), a.begin() + d + 1);
    Rat lead = g[d];
    for (Rat& v : g) v /= lead;
    return g;
}

inline bool squarefree(const UniPoly& f) {
    if (degree(f) <= 0) return true;
    return degree(monic_gcd(f, derivative(f))) <= 0;
}

}  // namespace poly1

// Dehomogenize at w=1; the degree drop of the result is the multiplicity of
// the root at (1:0).
inline poly1::UniPoly dehomogenize(const BinaryForm& r) { return r.c; }

inline int infinity_multiplicity(const BinaryForm& r) {
    return r.d - poly1::degree(r.c);
}

inline bool squarefree(const BinaryForm& r) {
    if (r.is_zero()) return false;
    return infinity_multiplicity(r) <= 1 && poly1::squarefree(r.c);
}

// True iff r1, r2 share no root on P^1 (including (1:0)).
inline bool coprime(const BinaryForm& r1, const BinaryForm& r2) {
    if (r1.is_zero() || r2.is_zero()) return false;
    if (infinity_multiplicity(r1) > 0 && infinity_multiplicity(r2) > 0) return false;
    return poly1::degree(poly1::monic_gcd(r1.c, r2.c)) <= 0;
}

struct RootSplit {
    int mult;
    BinaryForm residual;
};

// Multiplicity of the root (s0:w0) of r and the residual after dividing out
// (w0 s - s0 w) that many times.
inline RootSplit split_root(const BinaryForm& r, const Rat& s0, const Rat& w0) {
    if (r.is_zero()) throw std::invalid_argument("split_root: zero form");
    if (s0 == 0 && w0 == 0) throw std::invalid_argument("split_root: (0,0) is not a point");
    BinaryForm cur = r;
    int mult = 0;
    while (cur.d > 0 && cur.eval(s0, w0) == 0) {
        BinaryForm next{cur.d - 1, std::vector<Rat>(static_cast<std::size_t>(cur.d), Rat(0))};
        std::vector<Rat> rem = cur.c;
        for (int i = cur.d; i >= 1; --i) {
            Rat q = (w0 != 0) ? Rat(rem[i] / w0) : Rat(rem[i - 1] / (-s0));
            next.c[i - 1] = q;
            rem[i] -= q * w0;
            rem[i - 1] -= q * (-s0);
        }
        cur = next;
        ++mult;
    }
    if (cur.d == 0 && cur.c[0] == 0)
        throw std::invalid_argument("split_root: form vanished entirely");
    return {mult, cur};
}

inline int root_multiplicity(const BinaryForm& r, const Rat& s0, const Rat& w0) {
    return split_root(r, s0, w0).mult;
}

// Parameter (s:w) of a point on the line parametrized by (A, B), i.e. the
// solution of s A + w B ~ p.
inline std::pair<Rat, Rat> line_parameter(const ProjPoint& a, const ProjPoint& b,
                                          const ProjPoint& p) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Rat det = a.x[i] * b.x[j] - a.x[j] * b.x[i];
            if (det != 0) {
                Rat s = p.x[i] * b.x[j] - p.x[j] * b.x[i];
                Rat w = a.x[i] * p.x[j] - a.x[j] * p.x[i];
                return {s, w};
            }
        }
    throw std::invalid_argument("line_parameter: degenerate parametrization");
}

// Restriction of f to the line l, as a binary form in the parameter of the
// pencil s A + w B through the first two standard points.  Identically zero
// iff l divides f (the exact component test), which is rejected.
inline BinaryForm restrict_to_line(const HomPoly& f, const ProjLine& l) {
    auto pts = standard_points(l);
    const ProjPoint &A = pts[0], &B = pts[1];
    const int d = f.degree();
    // f(s A + w B): expand with the same power-table scheme as substitute().
    std::vector<std::vector<Rat>> powA(3), powB(3);
    BinaryForm out{d, std::vector<Rat>(static_cast<std::size_t>(d) + 1, Rat(0))};
    auto exps = HomPoly::exponents(d);
    for (std::size_t t = 0; t < f.coeffs().size(); ++t) {
        const Rat& cf = f.coeffs()[t];
        if (cf == 0) continue;
        // product over axes of (A_axis s + B_axis w)^e, accumulated as binary form
        std::vector<Rat> acc{cf};  // degree-0 form
        int accd = 0;
        for (int axis = 0; axis < 3; ++axis) {
            for (int e = 0; e < exps[t][axis]; ++e) {
                std::vector<Rat> nxt(static_cast<std::size_t>(accd) + 2, Rat(0));
                for (int i = 0; i <= accd; ++i) {
                    nxt[i + 1] += acc[i] * A.x[axis];
                    nxt[i] += acc[i] * B.x[axis];
                }
                acc = std::move(nxt);
                ++accd;
            }
        }
        for (int i = 0; i <= d; ++i) out.c[i] += acc[i];
    }
    if (out.is_zero())
        throw std::invalid_argument("restrict_to_line: line is a component of the curve");
    return out;
}

// Jacobian determinant det(d f_i / d x_j) of three forms; degree sum(d_i) - 3.
inline HomPoly jacobian_det(const HomPoly& f1, const HomPoly& f2, const HomPoly& f3) {
    if (f1.degree() < 1 || f2.degree() < 1 || f3.degree() < 1)
        throw std::invalid_argument("jacobian_det: degrees must be >= 1");
    std::array<std::array<HomPoly, 3>, 3> J;
    const HomPoly* fs[3] = {&f1, &f2, &f3};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) J[i][j] = fs[i]->derivative(j);
    HomPoly m00 = J[1][1] * J[2][2] - J[1][2] * J[2][1];
    HomPoly m01 = J[1][0] * J[2][2] - J[1][2] * J[2][0];
    HomPoly m02 = J[1][0] * J[2][1] - J[1][1] * J[2][0];
    return J[0][0] * m00 - J[0][1] * m01 + J[0][2] * m02;
}

namespace detail {

inline std::array<std::array<Rat, 3>, 3> adapted_frame(const ProjPoint& p,
                                                       const std::optional<ProjLine>& dir) {
    std::array<Rat, 3> q{}, r{};
    bool have_q = false;
    if (dir) {
        if (!incident(p, *dir))
            throw std::invalid_argument("adapted_frame: point not on direction line");
        for (const ProjPoint& cand : standard_points(*dir)) {
            if (cand != p) {
                q = cand.x;
                have_q = true;
                break;
            }
        }
        if (!have_q) throw std::logic_error("adapted_frame: no second point on line");
        for (const auto& cand : unit_candidates()) {
            if (det3(q, cand, p.x) != 0) {
                r = cand;
                break;
            }
        }
    } else {
        bool done = false;
        for (std::size_t i = 0; i < unit_candidates().size() && !done; ++i)
            for (std::size_t j = 0; j < unit_candidates().size() && !done; ++j) {
                if (det3(unit_candidates()[i], unit_candidates()[j], p.x) != 0) {
                    q = unit_candidates()[i];
                    r = unit_candidates()[j];
                    done = true;
                }
            }
    }
    // columns q, r, p
    return {{{q[0], r[0], p.x[0]}, {q[1], r[1], p.x[1]}, {q[2], r[2], p.x[2]}}};
}

}  // namespace detail

// Quadratic part (a, b, c) of f at p in the deterministic local chart: the
// coefficients of y1^2, y1 y2, y2^2 of f composed with the adapted frame.
// Requires f and its gradient to vanish at p.  The chart depends only on p,
// so quadratic parts of different curves at the same point are comparable.
inline std::array<Rat, 3> quadratic_part_at(const HomPoly& f, const ProjPoint& p) {
    if (f.eval(p) != 0) throw NotSingular("quadratic_part_at: f(p) != 0");
    std::array<Rat, 3> g = gradient(f, p);
    if (g[0] != 0 || g[1] != 0 || g[2] != 0)
        throw NotSingular("quadratic_part_at: gradient nonzero at p");
    HomPoly loc = substitute(f, detail::adapted_frame(p, std::nullopt));
    if (loc.coeff(0, 0) != 0 || loc.coeff(1, 0) != 0 || loc.coeff(0, 1) != 0)
        throw std::logic_error("quadratic_part_at: lower-order terms survived");
    return {loc.coeff(2, 0), loc.coeff(1, 1), loc.coeff(0, 2)};
}

// True iff the singularity of f at p is an ordinary node: the local quadratic
// part is a nondegenerate binary form (discriminant nonzero).
inline bool singularity_is_node(const HomPoly& f, const ProjPoint& p) {
    std::array<Rat, 3> q = quadratic_part_at(f, p);
    return q[1] * q[1] - 4 * q[0] * q[2] != 0;
}

// Resultant of two binary quadratics; zero iff they share a root, i.e. the
// corresponding branch directions coincide.
inline Rat quadratic_resultant(const std::array<Rat, 3>& u, const std::array<Rat, 3>& v) {
    Rat ac = u[0] * v[2] - u[2] * v[0];
    Rat ab = u[0] * v[1] - u[1] * v[0];
    Rat bc = u[1] * v[2] - u[2] * v[1];
    return ac * ac - ab * bc;
}

// Exact division attempt f / g over Q; nullopt when g does not divide f.
// Uses a shear making g's x1-leading coefficient nonzero, then lex division.
inline std::optional<HomPoly> divide_exact(const HomPoly& f, const HomPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (f.degree() < g.degree()) return std::nullopt;
    // find small shear (1, a, b) with g(1, a, b) != 0
    Rat shear_a, shear_b;
    bool found = false;
    for (long trial = 0; trial < 64 && !found; ++trial)
        for (long a = -trial; a <= trial && !found; ++a) {
            long b1 = trial - std::abs(a), b2 = -b1;
            for (long b : {b1, b2}) {
                if (g.eval(std::array<Rat, 3>{Rat(1), Rat(a), Rat(b)}) != 0) {
                    shear_a = Rat(a);
                    shear_b = Rat(b);
                    found = true;
                    break;
                }
            }
        }
    if (!found) throw std::logic_error("divide_exact: no shear found");
    // x1 -> x1, x2 -> x2 + a x1, x3 -> x3 + b x1
    std::array<std::array<Rat, 3>, 3> S = {{{Rat(1), Rat(0), Rat(0)},
                                            {shear_a, Rat(1), Rat(0)},
                                            {shear_b, Rat(0), Rat(1)}}};
    std::array<std::array<Rat, 3>, 3> Sinv = {{{Rat(1), Rat(0), Rat(0)},
                                               {-shear_a, Rat(1), Rat(0)},
                                               {-shear_b, Rat(0), Rat(1)}}};
    HomPoly fs = substitute(f, S), gs = substitute(g, S);
    const int dg = gs.degree(), dq = fs.degree() - dg;
    Rat lc = gs.coeff(dg, 0);
    HomPoly quot(dq, std::vector<Rat>(HomPoly::term_count(dq), Rat(0)));
    HomPoly rem = fs;
    auto exps_r = HomPoly::exponents(rem.degree());
    while (!rem.is_zero()) {
        // leading (lex-max) monomial of rem
        std::size_t lead = 0;
        bool have = false;
        for (std::size_t t = 0; t < rem.coeffs().size(); ++t)
            if (rem.coeffs()[t] != 0) {
                lead = t;
                have = true;
                break;
            }
        if (!have) break;
        int i = exps_r[lead][0], j = exps_r[lead][1];
        if (i < dg) return std::nullopt;  // remainder cannot be cleared
        Rat q = rem.coeffs()[lead] / lc;
        quot.set_coeff(i - dg, j, quot.coeff(i - dg, j) + q);
        HomPoly mono(dq, std::vector<Rat>(HomPoly::term_count(dq), Rat(0)));
        mono.set_coeff(i - dg, j, q);
        rem = rem - mono * gs;
    }
    return substitute(quot, Sinv);
}

}  // namespace bidouble
