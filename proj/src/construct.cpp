#include "bimat/construct.hpp"

#include <algorithm>

#include "bimat/errors.hpp"

namespace bimat {

namespace {

template <typename K>
Bimatroid from_matrix_impl(const Matrix<K>& a) {
    int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
    if (m == 0 || n == 0) throw precondition_error("from_matrix: empty matrix");
    if (std::min(m, n) > 10) throw precondition_error("from_matrix: minor enumeration budget exceeded");
    std::vector<MinorPair> minors{{0, 0}};
    for (int k = 1; k <= std::min(m, n); ++k)
        for_each_ksubset(m, k, [&](Mask I) {
            for_each_ksubset(n, k, [&](Mask J) {
                if (!det(a.submatrix(I, J)).is_zero()) minors.push_back({I, J});
            });
        });
    std::vector<std::string> rows(m), cols(n);
    for (int i = 0; i < m; ++i) rows[i] = "e" + std::to_string(i);
    for (int j = 0; j < n; ++j) cols[j] = "f" + std::to_string(j);
    return Bimatroid::from_minors(std::move(rows), std::move(cols), std::move(minors));
}

}  // namespace

Bimatroid from_matrix(const QMatrix& a) { return from_matrix_impl(a); }
Bimatroid from_matrix(const FpMatrix& a) { return from_matrix_impl(a); }

bool has_perfect_matching(const Relation& r, Mask I, Mask J) {
    if (popcount(I) != popcount(J)) return false;
    auto rows = mask_to_indices(I);
    auto cols = mask_to_indices(J);
    int k = static_cast<int>(rows.size());
    // match_col[b] = index into rows matched to cols[b], or -1
    std::vector<int> match_col(k, -1);
    for (int a = 0; a < k; ++a) {
        std::vector<bool> seen(k, false);
        // DFS augmenting path from row a
        auto augment = [&](auto&& self, int ra) -> bool {
            for (int b = 0; b < k; ++b) {
                if (seen[b] || !(r.adj[rows[ra]] & (1u << cols[b]))) continue;
                seen[b] = true;
                if (match_col[b] < 0 || self(self, match_col[b])) {
                    match_col[b] = ra;
                    return true;
                }
            }
            return false;
        };
        if (!augment(augment, a)) return false;
    }
    return true;
}

Bimatroid from_relation(const Relation& r) {
    int m = static_cast<int>(r.rows.size()), n = static_cast<int>(r.cols.size());
    if (static_cast<int>(r.adj.size()) != m)
        throw precondition_error("from_relation: adjacency size mismatch");
    for (Mask a : r.adj)
        if (!subset_of(a, full_mask(n))) throw precondition_error("from_relation: pair outside grounds");
    std::vector<MinorPair> minors;
    for (int k = 0; k <= std::min(m, n); ++k)
        for_each_ksubset(m, k, [&](Mask I) {
            for_each_ksubset(n, k, [&](Mask J) {
                if (has_perfect_matching(r, I, J)) minors.push_back({I, J});
            });
        });
    return Bimatroid::from_minors(r.rows, r.cols, std::move(minors));
}

Bimatroid from_map(const std::vector<std::string>& domain,
                   const std::vector<std::string>& codomain, const std::vector<int>& map) {
    if (map.size() != domain.size()) throw precondition_error("from_map: map not total");
    Relation r;
    r.rows = codomain;
    r.cols = domain;
    r.adj.assign(codomain.size(), 0);
    for (size_t f = 0; f < map.size(); ++f) {
        if (map[f] < 0 || map[f] >= static_cast<int>(codomain.size()))
            throw precondition_error("from_map: image out of range");
        r.adj[map[f]] |= (1u << f);
    }
    return from_relation(r);
}

Bimatroid bond(const Matroid& m, Mask B) {
    if (!m.is_basis(B)) throw precondition_error("bond: B is not a basis");
    auto bi = mask_to_indices(B);
    int r = static_cast<int>(bi.size()), n = m.n();
    std::vector<MinorPair> minors;
    for_each_submask(B, [&](Mask I) {
        Mask rest = B & ~I;
        int k = popcount(I);
        for_each_ksubset(n, k, [&](Mask J) {
            if (m.is_basis(rest | J)) {
                // positions of I inside B
                Mask Ipos = 0;
                for (int a = 0; a < r; ++a)
                    if (I & (1u << bi[a])) Ipos |= (1u << a);
                minors.push_back({Ipos, J});
            }
        });
    });
    std::vector<std::string> rows;
    for (int i : bi) rows.push_back(m.ground()[i]);
    return Bimatroid::from_minors(std::move(rows), m.ground(), std::move(minors));
}

Bimatroid identity_bimatroid(const std::vector<std::string>& labels) {
    std::vector<int> id(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) id[i] = static_cast<int>(i);
    return from_map(labels, labels, id);
}

}  // namespace bimat
