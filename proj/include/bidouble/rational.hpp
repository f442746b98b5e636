// Exact rational arithmetic and small dense linear algebra over Q.
//
// Rat is GMP's mpq_class: arbitrary precision, always canonical (gcd(num,den)=1,
// den>0).  RatMatrix provides the two eliminations everything else is built on:
// rank and a right-kernel basis with a deterministic normal form, so repeated
// runs emit bit-identical results.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bidouble {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p" or "p/q" with arbitrary-precision decimal integers, q > 0 after
// canonicalization.  Throws on malformed input.
inline Rat rat_from_string(const std::string& s) {
    auto bad = [&]() { return std::invalid_argument("rat_from_string: malformed rational '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part) {
        if (part.empty()) throw bad();
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d(den);
    if (d == 0) throw bad();
    Rat r{Int(num), d};
    r.canonicalize();
    return r;
}

// Canonical string form: "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Scales a nonzero rational vector to primitive integer entries whose first
// nonzero entry is positive.  The zero vector is returned unchanged.
inline std::vector<Rat> normalize_primitive(std::vector<Rat> v) {
    Int den_lcm = 1;
    bool nonzero = false;
    for (const Rat& c : v) {
        if (c != 0) nonzero = true;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (!nonzero) return v;
    Int g = 0;
    for (Rat& c : v) {
        c *= den_lcm;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    }
    for (Rat& c : v) {
        c /= g;
        c.canonicalize();
    }
    for (const Rat& c : v) {
        if (c != 0) {
            if (c < 0)
                for (Rat& x : v) x = -x;
            break;
        }
    }
    return v;
}

// Dense row-major matrix of rationals.
class RatMatrix {
  public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
        if (rows.empty()) return RatMatrix(0, 0);
        RatMatrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("RatMatrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void append_row(const std::vector<Rat>& row) {
        if (rows_ != 0 && row.size() != cols_)
            throw std::invalid_argument("RatMatrix::append_row: width mismatch");
        if (rows_ == 0) cols_ = row.size();
        a_.insert(a_.end(), row.begin(), row.end());
        ++rows_;
    }

    // Reduced row echelon form in place; returns the pivot columns in ascending
    // order.  Pivot choice is the first row with a nonzero entry, scanning
    // columns left to right, so the result is deterministic.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t pr = rows_;
            for (std::size_t i = r; i < rows_; ++i)
                if (at(i, c) != 0) {
                    pr = i;
                    break;
                }
            if (pr == rows_) continue;
            if (pr != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(pr, j));
            Rat pv = at(r, c);
            for (std::size_t j = c; j < cols_; ++j) at(r, j) /= pv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c) == 0) continue;
                Rat f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

inline std::size_t rank(RatMatrix m) { return m.rref().size(); }

// Basis of the right kernel {v : m v = 0}.  One vector per free column, in
// ascending free-column order; each vector primitive-integer with positive
// leading entry.  rank + kernel size = column count.
inline std::vector<std::vector<Rat>> kernel_basis(RatMatrix m) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, f);
        basis.push_back(normalize_primitive(std::move(v)));
    }
    return basis;
}

}  // namespace bidouble
