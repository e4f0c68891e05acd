#pragma once

// Shared fixture catalog for unit and acceptance tests.

#include <string>
#include <vector>

#include "bimat/bimat.hpp"

namespace fixtures {

using namespace bimat;

inline QMatrix q_matrix(const std::vector<std::vector<long>>& rows) {
    QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
    return m;
}

inline FpMatrix fp_matrix(const std::vector<std::vector<long>>& rows, uint32_t p) {
    FpMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), Fp(0, p));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Fp::from_int(rows[i][j], p);
    return m;
}

// All seven nonzero vectors of GF(2)^3 as columns; 28 bases.
inline FpMatrix fano_matrix() {
    return fp_matrix({{1, 0, 0, 1, 1, 0, 1},
                      {0, 1, 0, 1, 0, 1, 1},
                      {0, 0, 1, 0, 1, 1, 1}},
                     2);
}

inline Matroid fano() { return from_matrix_columns(fano_matrix()); }

// Vertex-edge incidence of K4 over GF(2); column matroid = graphic matroid,
// 16 spanning trees.
inline Matroid k4() {
    return from_matrix_columns(fp_matrix({{1, 1, 1, 0, 0, 0},
                                          {1, 0, 0, 1, 1, 0},
                                          {0, 1, 0, 1, 0, 1},
                                          {0, 0, 1, 0, 1, 1}},
                                         2));
}

inline Matroid u23() { return uniform_matroid(2, 3); }

// Rank 1 on two elements, the second a loop.
inline Matroid with_loop() { return from_matrix_columns(q_matrix({{1, 0}, {0, 0}})); }

// Matroids on at most 7 elements used across the suites.
inline std::vector<Matroid> matroid_catalog() {
    return {
        uniform_matroid(1, 2),
        uniform_matroid(2, 2),
        u23(),
        uniform_matroid(2, 4),
        uniform_matroid(3, 5),
        direct_sum(uniform_matroid(1, {"a", "b"}), uniform_matroid(1, {"c", "d"})),
        k4(),
        fano(),
    };
}

inline QMatrix ones_q(size_t m, size_t n) { return QMatrix(m, n, Rational(1)); }

// Only (0,0) regular: the bimatroid of the zero matrix.
inline Bimatroid zero_bimatroid(int m, int n) {
    std::vector<std::string> rows, cols;
    for (int i = 0; i < m; ++i) rows.push_back("e" + std::to_string(i));
    for (int j = 0; j < n; ++j) cols.push_back("f" + std::to_string(j));
    return Bimatroid::from_minors(std::move(rows), std::move(cols), {MinorPair{0, 0}});
}

// Shape-valid family violating the exchange axioms: the full 2x2 minor has
// no regular 1x1 minor inside it.
inline Bimatroid no_1x1_family() {
    return Bimatroid::from_minors({"e0", "e1"}, {"f0", "f1"},
                                  {MinorPair{0, 0}, MinorPair{3, 3}});
}

inline std::vector<Bimatroid> bimatroid_catalog() {
    Matroid f = fano();
    return {
        identity_bimatroid({"a"}),
        identity_bimatroid({"a", "b"}),
        zero_bimatroid(2, 2),
        from_matrix(ones_q(2, 2)),
        bond(u23(), 0b011),
        bond(f, f.bases().front()),
    };
}

}  // namespace fixtures
