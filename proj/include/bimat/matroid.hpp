#pragma once

#include <string>
#include <vector>

#include "bimat/matrix.hpp"
#include "bimat/subset.hpp"

namespace bimat {

// Outcome of a basis-family validation.  When invalid, (B, B2, x) witness the
// first exchange failure found: x lies in B \ B2 and no y in B2 \ B makes
// B - x + y a basis.
struct BasisCheck {
    bool valid = true;
    std::string reason;
    Mask B = 0, B2 = 0;
    int x = -1;
};

BasisCheck validate_bases(const std::vector<Mask>& bases, int n);

// Matroid given by its set of bases over a labeled ground set.  Ground size
// is capped (see max_ground()); subsets are masks in ground order.
// Construction enforces shape invariants (nonempty family, equicardinal,
// in-range, distinct labels); the basis exchange axiom itself is checked by
// validate_bases, which constructors in this library are tested to satisfy.
class Matroid {
  public:
    Matroid() = default;
    static Matroid from_bases(std::vector<std::string> ground, std::vector<Mask> bases);

    int n() const { return static_cast<int>(ground_.size()); }
    int rank() const { return rank_; }
    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<Mask>& bases() const { return bases_; }

    bool is_basis(Mask b) const;
    int rank_of(Mask s) const;
    bool is_independent(Mask s) const { return rank_of(s) == popcount(s); }
    int label_index(const std::string& lbl) const;  // -1 if absent

    std::vector<Mask> independent_sets() const;  // ascending mask order
    std::vector<Mask> flats() const;             // ascending mask order
    std::vector<Mask> circuits() const;          // ascending cardinality, then mask
    std::vector<Mask> cocircuits() const;

    Matroid dual() const;
    Matroid deleted(Mask s) const;     // M \ s ("delete" is reserved)
    Matroid contracted(Mask s) const;  // M / s

    friend bool operator==(const Matroid& a, const Matroid& b) {
        return a.ground_ == b.ground_ && a.bases_ == b.bases_;
    }

  private:
    std::vector<std::string> ground_;
    std::vector<Mask> bases_;  // sorted ascending, deduplicated
    int rank_ = 0;
};

// Ground sets must carry disjoint labels; result is on the concatenation.
Matroid direct_sum(const Matroid& a, const Matroid& b);

// Matroid union M v N on a common ground set (same labels, same order).
// Rank via the union formula r(S) = min_{T <= S} (|S \ T| + r_M(T) + r_N(T)).
Matroid matroid_union(const Matroid& a, const Matroid& b);

// U_{r,n}; default labels are "0".."n-1".
Matroid uniform_matroid(int r, int n);
Matroid uniform_matroid(int r, std::vector<std::string> ground);

// Column matroid of a matrix; columns are labeled "0".."n-1".
template <typename K>
Matroid from_matrix_columns(const Matrix<K>& m) {
    int nc = static_cast<int>(m.cols());
    int r = rank(m);
    std::vector<Mask> bases;
    Mask all_rows = full_mask(static_cast<int>(m.rows()));
    for_each_ksubset(nc, r, [&](Mask J) {
        if (rank(m.submatrix(all_rows, J)) == r) bases.push_back(J);
    });
    std::vector<std::string> labels(nc);
    for (int j = 0; j < nc; ++j) labels[j] = std::to_string(j);
    return Matroid::from_bases(std::move(labels), std::move(bases));
}

}  // namespace bimat
