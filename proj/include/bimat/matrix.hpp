#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "bimat/errors.hpp"
#include "bimat/prime_field.hpp"
#include "bimat/rational.hpp"
#include "bimat/subset.hpp"

namespace bimat {

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }

// Dense matrix over an exact field K (Rational or Fp).  Row-major.
template <typename K>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, K fill = K())
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    K& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const K& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    static Matrix identity(size_t n, K one) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix multiply(const Matrix& o) const {
        if (cols_ != o.rows_) throw precondition_error("Matrix: dimension mismatch in multiply");
        K z = (rows_ > 0 && cols_ > 0) ? zero_like(at(0, 0)) : K();
        Matrix r(rows_, o.cols_, z);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const K& a = at(i, k);
                if (a.is_zero()) continue;
                for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    // Submatrix on row set I and column set J (masks; same popcount not
    // required; result is |I| x |J|).
    Matrix submatrix(Mask I, Mask J) const {
        auto ri = mask_to_indices(I), cj = mask_to_indices(J);
        Matrix s(ri.size(), cj.size());
        for (size_t a = 0; a < ri.size(); ++a)
            for (size_t b = 0; b < cj.size(); ++b)
                s.at(a, b) = at(ri[a], cj[b]);
        return s;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

  private:
    size_t rows_, cols_;
    std::vector<K> e_;
};

using QMatrix = Matrix<Rational>;
using FpMatrix = Matrix<Fp>;

// Rank by Gaussian elimination with exact pivot tests.  Works over any exact
// field; no pivot-size heuristics are needed since arithmetic is exact.
template <typename K>
int rank(Matrix<K> m) {
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            K f = m.at(i, c) / m.at(r, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return static_cast<int>(r);
}

// Determinant over GF(p) by Gaussian elimination with row-swap sign tracking.
inline Fp det(const FpMatrix& m0) {
    if (m0.rows() != m0.cols()) throw precondition_error("det: matrix not square");
    size_t n = m0.rows();
    if (n == 0) throw precondition_error("det: empty matrix");
    uint32_t p = m0.at(0, 0).modulus();
    FpMatrix m = m0;
    Fp d(1, p);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m.at(piv, c).is_zero()) ++piv;
        if (piv == n) return Fp(0, p);
        if (piv != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Fp inv = m.at(c, c).inverse();
        for (size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Fp f = m.at(i, c) * inv;
            for (size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

// Determinant over Q: rows are scaled to integers, then fraction-free Bareiss
// elimination runs over mpz.  Every Bareiss division is exact, intermediate
// entries are minors of the scaled matrix, and the scale factors divide back
// out at the end.
inline Rational det(const QMatrix& m0) {
    if (m0.rows() != m0.cols()) throw precondition_error("det: matrix not square");
    size_t n = m0.rows();
    if (n == 0) throw precondition_error("det: empty matrix");

    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m0.at(i, j).den().get_mpz_t());
        for (size_t j = 0; j < n; ++j) a[i][j] = m0.at(i, j).num() * (l / m0.at(i, j).den());
        scale *= l;
    }

    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return Rational(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    mpz_class d = sign * a[n - 1][n - 1];
    return Rational(mpq_class(d, scale));
}

// Signature of a symmetric rational matrix: (n_plus, n_minus, n_zero).
struct Inertia {
    int n_plus = 0, n_minus = 0, n_zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Inertia by symmetric congruence reduction (Sylvester's law makes the pivot
// signs well-defined).  A zero diagonal with a nonzero off-diagonal entry in
// its row is repaired by the hyperbolic-pair congruence step: add row/col j
// into row/col k, turning the diagonal into 2*A[k][j].
inline Inertia inertia(const QMatrix& m0) {
    if (m0.rows() != m0.cols()) throw precondition_error("inertia: matrix not square");
    size_t n = m0.rows();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (m0.at(i, j) != m0.at(j, i)) throw precondition_error("inertia: matrix not symmetric");

    QMatrix a = m0;
    Inertia out;
    auto swap_rc = [&](size_t x, size_t y) {
        for (size_t j = 0; j < n; ++j) std::swap(a.at(x, j), a.at(y, j));
        for (size_t i = 0; i < n; ++i) std::swap(a.at(i, x), a.at(i, y));
    };
    auto add_rc = [&](size_t dst, size_t src) {
        for (size_t j = 0; j < n; ++j) a.at(dst, j) += a.at(src, j);
        for (size_t i = 0; i < n; ++i) a.at(i, dst) += a.at(i, src);
    };

    for (size_t k = 0; k < n; ++k) {
        if (a.at(k, k).is_zero()) {
            size_t jd = n, jo = n;
            for (size_t j = k + 1; j < n && jd == n; ++j)
                if (!a.at(j, j).is_zero()) jd = j;
            for (size_t j = k + 1; j < n && jo == n; ++j)
                if (!a.at(k, j).is_zero()) jo = j;
            if (jd != n) swap_rc(k, jd);
            else if (jo != n) add_rc(k, jo);
            else {
                ++out.n_zero;  // row and column k vanish on the trailing block
                continue;
            }
        }
        const Rational piv = a.at(k, k);
        (piv.sign() > 0 ? out.n_plus : out.n_minus)++;
        for (size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            Rational f = a.at(i, k) / piv;
            for (size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            for (size_t j = k; j < n; ++j) a.at(j, i) = a.at(i, j);
        }
    }
    return out;
}

}  // namespace bimat
