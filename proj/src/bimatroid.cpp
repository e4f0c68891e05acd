#include "bimat/bimatroid.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "bimat/errors.hpp"

namespace bimat {

namespace {

std::string mask_str(Mask s) {
    std::string out = "{";
    bool first = true;
    for (int i : mask_to_indices(s)) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

std::string pair_str(Mask I, Mask J) { return "(" + mask_str(I) + "," + mask_str(J) + ")"; }

void check_labels(const std::vector<std::string>& labels, const char* side) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw precondition_error(std::string("Bimatroid: duplicate ") + side + " label '" + l + "'");
}

// Membership bitmap keyed by I | (J << m).
std::vector<bool> minor_bitmap(const std::vector<MinorPair>& minors, int m, int n) {
    std::vector<bool> in(size_t{1} << (m + n), false);
    for (const auto& p : minors) in[p.I | (Mask{p.J} << m)] = true;
    return in;
}

}  // namespace

Bimatroid Bimatroid::from_minors(std::vector<std::string> rows, std::vector<std::string> cols,
                                 std::vector<MinorPair> minors) {
    int m = static_cast<int>(rows.size()), n = static_cast<int>(cols.size());
    if (m + n > max_ground()) throw precondition_error("Bimatroid: ground sets exceed cap");
    check_labels(rows, "row");
    check_labels(cols, "column");
    for (const auto& p : minors) {
        if (popcount(p.I) != popcount(p.J))
            throw precondition_error("Bimatroid: minor with |I| != |J|");
        if (!subset_of(p.I, full_mask(m)) || !subset_of(p.J, full_mask(n)))
            throw precondition_error("Bimatroid: minor outside ground sets");
    }
    std::sort(minors.begin(), minors.end(), minor_less);
    minors.erase(std::unique(minors.begin(), minors.end()), minors.end());
    Bimatroid b;
    b.rows_ = std::move(rows);
    b.cols_ = std::move(cols);
    b.minors_ = std::move(minors);
    return b;
}

bool Bimatroid::is_regular(Mask I, Mask J) const {
    return std::binary_search(minors_.begin(), minors_.end(), MinorPair{I, J},
                              [](const MinorPair& a, const MinorPair& b) { return minor_less(a, b); });
}

int Bimatroid::rank() const {
    return minors_.empty() ? 0 : popcount(minors_.back().I);
}

std::vector<long> Bimatroid::minor_counts() const {
    std::vector<long> r(std::min(m(), n()) + 1, 0);
    for (const auto& p : minors_) ++r[popcount(p.I)];
    return r;
}

int Bimatroid::relative_rank(Mask S, Mask T) const {
    int best = 0;
    for (const auto& p : minors_)
        if (subset_of(p.I, S) && subset_of(p.J, T)) best = std::max(best, popcount(p.I));
    return best;
}

RelativeRankTable Bimatroid::rank_table() const {
    RelativeRankTable t(m(), n());
    for (const auto& p : minors_) {
        int8_t d = static_cast<int8_t>(popcount(p.I));
        if (d > t.at(p.I, p.J)) t.at(p.I, p.J) = d;
    }
    // subset-max zeta transform, one bit at a time, in each coordinate
    size_t M = size_t{1} << m(), N = size_t{1} << n();
    for (int b = 0; b < m(); ++b)
        for (size_t S = 0; S < M; ++S)
            if (S & (size_t{1} << b))
                for (size_t T = 0; T < N; ++T) {
                    int8_t v = t.at(static_cast<Mask>(S ^ (size_t{1} << b)), static_cast<Mask>(T));
                    if (v > t.at(static_cast<Mask>(S), static_cast<Mask>(T)))
                        t.at(static_cast<Mask>(S), static_cast<Mask>(T)) = v;
                }
    for (int b = 0; b < n(); ++b)
        for (size_t T = 0; T < N; ++T)
            if (T & (size_t{1} << b))
                for (size_t S = 0; S < M; ++S) {
                    int8_t v = t.at(static_cast<Mask>(S), static_cast<Mask>(T ^ (size_t{1} << b)));
                    if (v > t.at(static_cast<Mask>(S), static_cast<Mask>(T)))
                        t.at(static_cast<Mask>(S), static_cast<Mask>(T)) = v;
                }
    return t;
}

Bimatroid Bimatroid::transpose() const {
    std::vector<MinorPair> tm;
    tm.reserve(minors_.size());
    for (const auto& p : minors_) tm.push_back({p.J, p.I});
    return from_minors(cols_, rows_, std::move(tm));
}

Bimatroid Bimatroid::restricted(Mask E2, Mask F2) const {
    auto ri = mask_to_indices(E2), ci = mask_to_indices(F2);
    auto remap = [](Mask s, const std::vector<int>& keep) {
        Mask out = 0;
        for (size_t i = 0; i < keep.size(); ++i)
            if (s & (1u << keep[i])) out |= (1u << i);
        return out;
    };
    std::vector<MinorPair> nm;
    for (const auto& p : minors_)
        if (subset_of(p.I, E2) && subset_of(p.J, F2))
            nm.push_back({remap(p.I, ri), remap(p.J, ci)});
    std::vector<std::string> nr, nc;
    for (int i : ri) nr.push_back(rows_[i]);
    for (int j : ci) nc.push_back(cols_[j]);
    return from_minors(std::move(nr), std::move(nc), std::move(nm));
}

namespace {

Verdict validate_axioms_direct(const Bimatroid& b) {
    int m = b.m(), n = b.n();
    auto in = minor_bitmap(b.minors(), m, n);
    auto reg = [&](Mask I, Mask J) { return in[I | (Mask{J} << m)]; };

    if (!reg(0, 0)) return {false, "axiom (1) fails: (emptyset,emptyset) is not a regular minor"};

    for (const auto& p : b.minors())
        for (const auto& q : b.minors()) {
            Mask I = p.I, J = p.J, I2 = q.I, J2 = q.J;
            // (2a): every i' in I' \ I can enter
            for (Mask di = I2 & ~I; di; di &= di - 1) {
                Mask ip = di & (0u - di);
                bool ok = false;
                for (Mask dx = I & ~I2; dx && !ok; dx &= dx - 1)
                    ok = reg((I & ~(dx & (0u - dx))) | ip, J);
                for (Mask dj = J2 & ~J; dj && !ok; dj &= dj - 1)
                    ok = reg(I | ip, J | (dj & (0u - dj)));
                if (!ok)
                    return {false, "axiom (2a) fails for " + pair_str(I, J) + ", " + pair_str(I2, J2) +
                                       " at i'=" + std::to_string(std::countr_zero(ip))};
            }
            // (2b): every j in J \ J' can leave
            for (Mask dj = J & ~J2; dj; dj &= dj - 1) {
                Mask jm = dj & (0u - dj);
                bool ok = false;
                for (Mask dy = J2 & ~J; dy && !ok; dy &= dy - 1)
                    ok = reg(I, (J & ~jm) | (dy & (0u - dy)));
                for (Mask dx = I & ~I2; dx && !ok; dx &= dx - 1)
                    ok = reg(I & ~(dx & (0u - dx)), J & ~jm);
                if (!ok)
                    return {false, "axiom (2b) fails for " + pair_str(I, J) + ", " + pair_str(I2, J2) +
                                       " at j=" + std::to_string(std::countr_zero(jm))};
            }
        }
    return {true, ""};
}

bool validate_via_extended(const Bimatroid& b) {
    int m = b.m(), n = b.n();
    Mask fullE = full_mask(m);
    std::vector<Mask> bases;
    bases.reserve(b.minors().size());
    for (const auto& p : b.minors()) bases.push_back((fullE & ~p.I) | (p.J << m));
    BasisCheck bc = validate_bases(bases, m + n);
    bool e_basis = std::find(bases.begin(), bases.end(), fullE) != bases.end();
    return bc.valid && e_basis;
}

}  // namespace

Bimatroid relabeled(const Bimatroid& b, std::vector<std::string> rows,
                    std::vector<std::string> cols) {
    return Bimatroid::from_minors(std::move(rows), std::move(cols), b.minors());
}

Verdict validate_bimatroid(const Bimatroid& b) {
    Verdict direct = validate_axioms_direct(b);
    bool extended = validate_via_extended(b);
    if (direct.valid != extended)
        throw std::logic_error("validate_bimatroid: direct axioms and extended-matroid routes disagree");
    return direct;
}

std::vector<std::string> extended_col_labels(const Bimatroid& b) {
    std::vector<std::string> out;
    out.reserve(b.cols().size());
    std::unordered_set<std::string> used(b.rows().begin(), b.rows().end());
    for (const auto& c : b.cols()) {
        std::string l = c;
        while (used.count(l)) l += "'";
        used.insert(l);
        out.push_back(l);
    }
    return out;
}

Matroid extended_matroid(const Bimatroid& b) {
    std::vector<std::string> ground = b.rows();
    for (auto& l : extended_col_labels(b)) ground.push_back(std::move(l));
    Mask fullE = full_mask(b.m());
    std::vector<Mask> bases;
    bases.reserve(b.minors().size());
    for (const auto& p : b.minors()) bases.push_back((fullE & ~p.I) | (p.J << b.m()));
    return Matroid::from_bases(std::move(ground), std::move(bases));
}

Bimatroid from_extended_matroid(const Matroid& m, Mask E) {
    if (!subset_of(E, full_mask(m.n())))
        throw precondition_error("from_extended_matroid: E outside ground");
    if (!m.is_basis(E))
        throw precondition_error("from_extended_matroid: designated row set is not a basis");
    auto ei = mask_to_indices(E);
    auto fi = mask_to_indices(full_mask(m.n()) & ~E);
    auto pos = [](const std::vector<int>& where, Mask s) {
        Mask out = 0;
        for (size_t i = 0; i < where.size(); ++i)
            if (s & (1u << where[i])) out |= (1u << i);
        return out;
    };
    std::vector<MinorPair> minors;
    for (Mask B : m.bases())
        minors.push_back({pos(ei, E & ~B), pos(fi, B & ~E)});
    std::vector<std::string> rows, cols;
    for (int i : ei) rows.push_back(m.ground()[i]);
    for (int i : fi) cols.push_back(m.ground()[i]);
    return Bimatroid::from_minors(std::move(rows), std::move(cols), std::move(minors));
}

RelativeRankTable rank_table(const Bimatroid& b) { return b.rank_table(); }

Bimatroid from_rank_table(std::vector<std::string> rows, std::vector<std::string> cols,
                          const RelativeRankTable& t) {
    if (static_cast<int>(rows.size()) != t.m() || static_cast<int>(cols.size()) != t.n())
        throw precondition_error("from_rank_table: label/table dimension mismatch");
    std::vector<MinorPair> minors;
    size_t M = size_t{1} << t.m(), N = size_t{1} << t.n();
    for (size_t S = 0; S < M; ++S)
        for (size_t T = 0; T < N; ++T) {
            int k = popcount(static_cast<Mask>(S));
            if (k == popcount(static_cast<Mask>(T)) &&
                t.at(static_cast<Mask>(S), static_cast<Mask>(T)) == k)
                minors.push_back({static_cast<Mask>(S), static_cast<Mask>(T)});
        }
    return Bimatroid::from_minors(std::move(rows), std::move(cols), std::move(minors));
}

Verdict validate_rank_axioms(const RelativeRankTable& t) {
    int m = t.m(), n = t.n();
    if (m + n > 14)
        throw precondition_error("validate_rank_axioms: table too large for exhaustive check");
    size_t M = size_t{1} << m, N = size_t{1} << n;

    for (size_t S = 0; S < M; ++S)
        for (size_t T = 0; T < N; ++T) {
            Mask s = static_cast<Mask>(S), tm = static_cast<Mask>(T);
            int r = t.at(s, tm);
            if (r < 0 || r > std::min(popcount(s), popcount(tm)))
                return {false, "bound fails at (" + mask_str(s) + "," + mask_str(tm) + "): r=" +
                                   std::to_string(r)};
            for (int e = 0; e < m; ++e) {
                if (s & (1u << e)) continue;
                int r2 = t.at(s | (1u << e), tm);
                if (r2 < r || r2 > r + 1)
                    return {false, "row monotonicity fails at (" + mask_str(s) + "," + mask_str(tm) +
                                       ") with e=" + std::to_string(e)};
            }
            for (int f = 0; f < n; ++f) {
                if (tm & (1u << f)) continue;
                int r2 = t.at(s, tm | (1u << f));
                if (r2 < r || r2 > r + 1)
                    return {false, "column monotonicity fails at (" + mask_str(s) + "," + mask_str(tm) +
                                       ") with f=" + std::to_string(f)};
            }
        }

    for (size_t S = 0; S < M; ++S)
        for (size_t T = 0; T < N; ++T)
            for (size_t S2 = 0; S2 < M; ++S2)
                for (size_t T2 = 0; T2 < N; ++T2) {
                    Mask s = static_cast<Mask>(S), tm = static_cast<Mask>(T);
                    Mask s2 = static_cast<Mask>(S2), tm2 = static_cast<Mask>(T2);
                    int lhs = t.at(s, tm) + t.at(s2, tm2);
                    int rhs = t.at(s | s2, tm & tm2) + t.at(s & s2, tm | tm2);
                    if (lhs < rhs)
                        return {false, "bisubmodularity fails at (" + mask_str(s) + "," + mask_str(tm) +
                                           "), (" + mask_str(s2) + "," + mask_str(tm2) + ")"};
                }
    return {true, ""};
}

std::vector<MinorPair> regular_rectangles(const Bimatroid& b, Orientation o) {
    RelativeRankTable t = b.rank_table();
    std::vector<MinorPair> out;
    size_t M = size_t{1} << b.m(), N = size_t{1} << b.n();
    for (size_t S = 0; S < M; ++S)
        for (size_t T = 0; T < N; ++T) {
            Mask s = static_cast<Mask>(S), tm = static_cast<Mask>(T);
            int r = t.at(s, tm);
            bool take = (o == Orientation::vertical) ? (r == popcount(tm)) : (r == popcount(s));
            if (take) out.push_back({s, tm});
        }
    std::sort(out.begin(), out.end(), minor_less);
    return out;
}

Verdict validate_rectangle_axioms(const std::vector<MinorPair>& fam, int m, int n) {
    if (m + n > 14)
        throw precondition_error("validate_rectangle_axioms: ground too large for exhaustive check");
    auto in = minor_bitmap(fam, m, n);
    auto member = [&](Mask S, Mask T) { return in[S | (Mask{T} << m)]; };

    if (!member(0, 0)) return {false, "axiom (1) fails: (emptyset,emptyset) missing"};

    for (const auto& p : fam) {
        if (popcount(p.J) > popcount(p.I))
            return {false, "axiom (2) fails: |T| > |S| at " + pair_str(p.I, p.J)};
        // single-step enlargement closure is equivalent to axiom (3)
        for (int e = 0; e < m; ++e)
            if (!(p.I & (1u << e)) && !member(p.I | (1u << e), p.J))
                return {false, "axiom (3) fails: " + pair_str(p.I, p.J) + " but not " +
                                   pair_str(p.I | (1u << e), p.J)};
        for (Mask d = p.J; d; d &= d - 1) {
            Mask f = d & (0u - d);
            if (!member(p.I, p.J & ~f))
                return {false, "axiom (3) fails: " + pair_str(p.I, p.J) + " but not " +
                                   pair_str(p.I, p.J & ~f)};
        }
    }

    for (const auto& p : fam)
        for (const auto& q : fam) {
            if (popcount(p.J) - popcount(p.I) <= popcount(q.J) - popcount(q.I)) continue;
            bool ok = false;
            for (Mask d = q.I & ~p.I; d && !ok; d &= d - 1)
                ok = member(q.I & ~(d & (0u - d)), q.J);
            for (Mask d = p.J & ~q.J; d && !ok; d &= d - 1)
                ok = member(q.I, q.J | (d & (0u - d)));
            if (!ok)
                return {false, "axiom (4) fails for " + pair_str(p.I, p.J) + ", " + pair_str(q.I, q.J)};
        }
    return {true, ""};
}

Verdict laplace_property(const Bimatroid& b) {
    for (const auto& p : b.minors()) {
        for (Mask dj = p.J; dj; dj &= dj - 1) {
            Mask j = dj & (0u - dj);
            bool ok = false;
            for (Mask di = p.I; di && !ok; di &= di - 1)
                ok = b.is_regular(p.I & ~(di & (0u - di)), p.J & ~j);
            if (!ok)
                return {false, "no row exit for column " + std::to_string(std::countr_zero(j)) +
                                   " in " + pair_str(p.I, p.J)};
        }
        for (Mask di = p.I; di; di &= di - 1) {
            Mask i = di & (0u - di);
            bool ok = false;
            for (Mask dj = p.J; dj && !ok; dj &= dj - 1)
                ok = b.is_regular(p.I & ~i, p.J & ~(dj & (0u - dj)));
            if (!ok)
                return {false, "no column exit for row " + std::to_string(std::countr_zero(i)) +
                                   " in " + pair_str(p.I, p.J)};
        }
    }
    return {true, ""};
}

}  // namespace bimat
