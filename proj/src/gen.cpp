#include "bimat/gen.hpp"

#include <algorithm>

#include "bimat/errors.hpp"

namespace bimat {

namespace {

int dim(SplitMix64& g, int mx) { return 1 + static_cast<int>(g.below(static_cast<uint64_t>(mx))); }

// Row-reduce a copy of m, returning pivot columns; used for solving and for
// kernel bases.
struct Echelon {
    FpMatrix m;
    std::vector<int> pivot_col;  // one entry per pivot row
};

Echelon reduce(FpMatrix m) {
    size_t rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        for (size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Fp inv = m.at(r, c).inverse();
        for (size_t j = 0; j < cols; ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Fp f = m.at(i, c);
            for (size_t j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

// One solution of Ax = b (A must have full row rank, so a solution exists).
std::vector<Fp> solve(const FpMatrix& a, const std::vector<Fp>& b, uint32_t p) {
    size_t rows = a.rows(), cols = a.cols();
    FpMatrix aug(rows, cols + 1, Fp(0, p));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, cols) = b[i];
    }
    Echelon e = reduce(std::move(aug));
    std::vector<Fp> x(cols, Fp(0, p));
    for (size_t r = 0; r < e.pivot_col.size(); ++r) {
        int c = e.pivot_col[r];
        if (c == static_cast<int>(cols)) throw precondition_error("solve: inconsistent system");
        x[c] = e.m.at(r, cols);
    }
    return x;
}

std::vector<std::vector<Fp>> kernel_basis(const FpMatrix& a, uint32_t p) {
    Echelon e = reduce(a);
    size_t cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Fp>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Fp> v(cols, Fp(0, p));
        v[free] = Fp(1, p);
        for (size_t r = 0; r < e.pivot_col.size(); ++r)
            v[e.pivot_col[r]] = -e.m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<int> random_surjective_map(SplitMix64& g, int n, int m) {
    std::vector<int> phi(n);
    for (;;) {
        Mask hit = 0;
        for (int i = 0; i < n; ++i) {
            phi[i] = static_cast<int>(g.below(static_cast<uint64_t>(m)));
            hit |= (1u << phi[i]);
        }
        if (hit == full_mask(m)) return phi;
    }
}

}  // namespace

std::vector<std::string> prefixed_labels(const std::string& prefix, int n) {
    std::vector<std::string> l(n);
    for (int i = 0; i < n; ++i) l[i] = prefix + std::to_string(i);
    return l;
}

FpMatrix random_fp_matrix(SplitMix64& g, int max_rows, int max_cols, uint32_t p) {
    int r = dim(g, max_rows), c = dim(g, max_cols);
    FpMatrix m(r, c, Fp(0, p));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Fp(static_cast<uint32_t>(g.below(p)), p);
    return m;
}

QMatrix random_q_matrix(SplitMix64& g, int max_rows, int max_cols) {
    int r = dim(g, max_rows), c = dim(g, max_cols);
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            long num = static_cast<long>(g.below(11)) - 5;
            long den = 1 + static_cast<long>(g.below(4));
            m.at(i, j) = Rational(num, den);
        }
    return m;
}

Relation random_relation(SplitMix64& g, int max_rows, int max_cols) {
    int r = dim(g, max_rows), c = dim(g, max_cols);
    Relation rel;
    rel.rows = prefixed_labels("e", r);
    rel.cols = prefixed_labels("f", c);
    rel.adj.assign(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (g.coin()) rel.adj[i] |= (1u << j);
    return rel;
}

BimatroidTriple random_relation_bimatroid_triple(SplitMix64& g, int max_size) {
    int ne = dim(g, max_size), nf = dim(g, max_size), ng = dim(g, max_size),
        nh = dim(g, max_size);
    auto rel = [&](const std::string& rp, int nr, const std::string& cp, int nc) {
        Relation r;
        r.rows = prefixed_labels(rp, nr);
        r.cols = prefixed_labels(cp, nc);
        r.adj.assign(nr, 0);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j)
                if (g.coin()) r.adj[i] |= (1u << j);
        return from_relation(r);
    };
    BimatroidTriple t{rel("e", ne, "f", nf), rel("f", nf, "g", ng), rel("g", ng, "h", nh)};
    return t;
}

BimatroidTriple random_matrix_bimatroid_triple(SplitMix64& g, int max_size, uint32_t p) {
    int ne = dim(g, max_size), nf = dim(g, max_size), ng = dim(g, max_size),
        nh = dim(g, max_size);
    auto mat = [&](int nr, int nc) {
        FpMatrix m(nr, nc, Fp(0, p));
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) m.at(i, j) = Fp(static_cast<uint32_t>(g.below(p)), p);
        return m;
    };
    BimatroidTriple t{
        relabeled(from_matrix(mat(ne, nf)), prefixed_labels("e", ne), prefixed_labels("f", nf)),
        relabeled(from_matrix(mat(nf, ng)), prefixed_labels("f", nf), prefixed_labels("g", ng)),
        relabeled(from_matrix(mat(ng, nh)), prefixed_labels("g", ng), prefixed_labels("h", nh))};
    return t;
}

MatroidMorphism random_realizable_morphism(SplitMix64& g, int max_f, int max_fp, uint32_t p) {
    int nfp = dim(g, std::min(max_fp, max_f));
    int nf = nfp + static_cast<int>(g.below(static_cast<uint64_t>(max_f - nfp + 1)));
    int dt = dim(g, nfp);              // target space dimension
    int ds = dt + static_cast<int>(g.below(static_cast<uint64_t>(std::max(1, 4 - dt) + 1)));
    ds = std::min(ds, 4);              // source space dimension, rank <= 4

    // Surjective linear map Phi: K^ds -> K^dt.
    FpMatrix Phi(dt, ds, Fp(0, p));
    do {
        for (int i = 0; i < dt; ++i)
            for (int j = 0; j < ds; ++j) Phi.at(i, j) = Fp(static_cast<uint32_t>(g.below(p)), p);
    } while (rank(Phi) < dt);

    // Target realization and the covering map phi.
    FpMatrix tgt(dt, nfp, Fp(0, p));
    for (int i = 0; i < dt; ++i)
        for (int j = 0; j < nfp; ++j) tgt.at(i, j) = Fp(static_cast<uint32_t>(g.below(p)), p);
    std::vector<int> phi = random_surjective_map(g, nf, nfp);

    // Every source vector is a random preimage of its target column.
    std::vector<std::vector<Fp>> kernel = kernel_basis(Phi, p);
    FpMatrix src(ds, nf, Fp(0, p));
    for (int s = 0; s < nf; ++s) {
        std::vector<Fp> b(dt, Fp(0, p));
        for (int i = 0; i < dt; ++i) b[i] = tgt.at(i, phi[s]);
        std::vector<Fp> v = solve(Phi, b, p);
        for (const auto& k : kernel) {
            Fp c(static_cast<uint32_t>(g.below(p)), p);
            for (int i = 0; i < ds; ++i) v[i] += c * k[i];
        }
        for (int i = 0; i < ds; ++i) src.at(i, s) = v[i];
    }

    Matroid source = Matroid::from_bases(prefixed_labels("f", nf),
                                         from_matrix_columns(src).bases());
    Matroid target = Matroid::from_bases(prefixed_labels("g", nfp),
                                         from_matrix_columns(tgt).bases());
    return MatroidMorphism::make(std::move(source), std::move(target), std::move(phi));
}

std::vector<Rational> random_nonneg_sequence(SplitMix64& g, int max_len, long max_value) {
    int len = dim(g, max_len);
    std::vector<Rational> a(len);
    for (int i = 0; i < len; ++i)
        a[i] = Rational(static_cast<long>(g.below(static_cast<uint64_t>(max_value + 1))));
    return a;
}

}  // namespace bimat
