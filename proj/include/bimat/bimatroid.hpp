#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "bimat/matroid.hpp"
#include "bimat/subset.hpp"

namespace bimat {

// A regular minor: row set I and column set J with |I| = |J|.  Canonical
// order for serialization is (|I|, I, J) lexicographic.
struct MinorPair {
    Mask I = 0, J = 0;
    friend bool operator==(const MinorPair&, const MinorPair&) = default;
};

inline bool minor_less(const MinorPair& a, const MinorPair& b) {
    int ka = popcount(a.I), kb = popcount(b.I);
    if (ka != kb) return ka < kb;
    if (a.I != b.I) return a.I < b.I;
    return a.J < b.J;
}

// Validation outcome with a human-readable witness of the first failure.
struct Verdict {
    bool valid = true;
    std::string witness;
};

// Table of relative ranks r(S,T) over all pairs of subsets, indexed by mask.
class RelativeRankTable {
  public:
    RelativeRankTable() : m_(0), n_(0), r_(1, 0) {}
    RelativeRankTable(int m, int n)
        : m_(m), n_(n), r_((size_t{1} << m) * (size_t{1} << n), 0) {}

    int m() const { return m_; }
    int n() const { return n_; }
    int8_t& at(Mask S, Mask T) { return r_[(size_t{S} << n_) | T]; }
    int8_t at(Mask S, Mask T) const { return r_[(size_t{S} << n_) | T]; }

    friend bool operator==(const RelativeRankTable&, const RelativeRankTable&) = default;

  private:
    int m_, n_;
    std::vector<int8_t> r_;
};

// Bimatroid on row set E and column set F, presented by its family of
// regular minors.  Construction enforces shape (|I| = |J|, in range, ground
// cap, distinct labels within each side); the exchange axioms themselves are
// the business of validate_bimatroid.
class Bimatroid {
  public:
    Bimatroid() = default;
    static Bimatroid from_minors(std::vector<std::string> rows, std::vector<std::string> cols,
                                 std::vector<MinorPair> minors);

    int m() const { return static_cast<int>(rows_.size()); }
    int n() const { return static_cast<int>(cols_.size()); }
    const std::vector<std::string>& rows() const { return rows_; }
    const std::vector<std::string>& cols() const { return cols_; }
    const std::vector<MinorPair>& minors() const { return minors_; }

    bool is_regular(Mask I, Mask J) const;
    int rank() const;
    // R_k for k = 0..min(m,n)
    std::vector<long> minor_counts() const;

    int relative_rank(Mask S, Mask T) const;
    RelativeRankTable rank_table() const;

    Bimatroid transpose() const;
    Bimatroid restricted(Mask E2, Mask F2) const;

    friend bool operator==(const Bimatroid& a, const Bimatroid& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.minors_ == b.minors_;
    }

  private:
    std::vector<std::string> rows_, cols_;
    std::vector<MinorPair> minors_;  // sorted by minor_less, deduplicated
};

// Same regular minors over fresh labels (e.g. to make two matrix bimatroids
// composable, the middle ground being literally the same index set).
Bimatroid relabeled(const Bimatroid& b, std::vector<std::string> rows,
                    std::vector<std::string> cols);

// Axioms (1), (2a), (2b) checked directly, then cross-checked against basis
// exchange of the extended family plus "E is a basis".  The two routes are
// equivalent theorems; disagreement raises std::logic_error.
Verdict validate_bimatroid(const Bimatroid& b);

// Matroid on E + F whose bases are (E \ I) + J.  Column labels colliding
// with row labels get "'" appended (identity bimatroids have rows = cols).
Matroid extended_matroid(const Bimatroid& b);

// The column labels as they appear in extended_matroid(b)'s ground set,
// i.e. after the collision-priming above.  Round-tripping b through the
// extended matroid recovers relabeled(b, b.rows(), extended_col_labels(b)).
std::vector<std::string> extended_col_labels(const Bimatroid& b);

// Inverse construction: E is the subset of m's ground designated as rows
// (must be a basis of m).
Bimatroid from_extended_matroid(const Matroid& m, Mask E);

RelativeRankTable rank_table(const Bimatroid& b);
Bimatroid from_rank_table(std::vector<std::string> rows, std::vector<std::string> cols,
                          const RelativeRankTable& t);

// Bounds, unit monotonicity in each argument, and bisubmodularity, checked
// exhaustively (quadratic in table size; requires m+n <= 14).
Verdict validate_rank_axioms(const RelativeRankTable& t);

enum class Orientation { vertical, horizontal };

// Vertical: r(S,T) = |T| (forces |T| <= |S|).  Horizontal: r(S,T) = |S|.
std::vector<MinorPair> regular_rectangles(const Bimatroid& b, Orientation o);

// The four vertical-rectangle axioms, checked exhaustively on an arbitrary
// family of (S,T) pairs over grounds of size m and n.  Horizontal families
// are validated by transposing first.
Verdict validate_rectangle_axioms(const std::vector<MinorPair>& fam, int m, int n);

// For every regular (I,J) and j in J there is i in I with (I-i, J-j)
// regular, and symmetrically.
Verdict laplace_property(const Bimatroid& b);

}  // namespace bimat
