#include "doctest.h"

#include <algorithm>

#include "bimat/bimatroid.hpp"
#include "bimat/construct.hpp"
#include "fixtures.hpp"

using namespace bimat;

TEST_CASE("from_minors enforces shape") {
    CHECK_THROWS_AS(Bimatroid::from_minors({"e0"}, {"f0"}, {MinorPair{1, 0}}),
                    precondition_error);  // |I| != |J|
    CHECK_THROWS_AS(Bimatroid::from_minors({"e0"}, {"f0"}, {MinorPair{2, 2}}),
                    precondition_error);  // out of range
    CHECK_THROWS_AS(Bimatroid::from_minors({"e0", "e0"}, {"f0"}, {MinorPair{0, 0}}),
                    precondition_error);  // duplicate labels
    // Duplicated minors collapse and come out sorted by (size, I, J).
    Bimatroid b = Bimatroid::from_minors({"e0"}, {"f0"},
                                         {MinorPair{1, 1}, MinorPair{0, 0}, MinorPair{1, 1}});
    CHECK(b.minors().size() == 2);
    CHECK(b.minors().front() == MinorPair{0, 0});
    CHECK(std::is_sorted(b.minors().begin(), b.minors().end(), minor_less));
}

TEST_CASE("identity bimatroid") {
    Bimatroid id = identity_bimatroid({"a", "b"});
    CHECK(id.m() == 2);
    CHECK(id.n() == 2);
    CHECK(id.rows() == id.cols());
    CHECK(id.minors().size() == 4);  // (I, I) for every I
    CHECK(id.rank() == 2);
    CHECK(id.is_regular(0b01, 0b01));
    CHECK(!id.is_regular(0b01, 0b10));
    CHECK(validate_bimatroid(id).valid);
    CHECK(id.minor_counts() == std::vector<long>{1, 2, 1});
    CHECK(id.relative_rank(0b11, 0b01) == 1);
    CHECK(id.relative_rank(0b10, 0b01) == 0);
}

TEST_CASE("validation verdicts with witnesses") {
    CHECK(validate_bimatroid(fixtures::zero_bimatroid(2, 2)).valid);
    CHECK(validate_bimatroid(from_matrix(fixtures::ones_q(2, 2))).valid);

    Verdict bad = validate_bimatroid(fixtures::no_1x1_family());
    CHECK(!bad.valid);
    CHECK(!bad.witness.empty());

    // Missing (0,0) is also invalid.
    Bimatroid no_empty = Bimatroid::from_minors({"e0"}, {"f0"}, {MinorPair{1, 1}});
    CHECK(!validate_bimatroid(no_empty).valid);
}

TEST_CASE("extended matroid and its inverse") {
    Bimatroid b = from_matrix(fixtures::q_matrix({{1, 1, 0}, {0, 1, 1}}));
    Matroid ext = extended_matroid(b);
    CHECK(ext.n() == 5);
    CHECK(ext.rank() == 2);
    // E itself is a basis (the empty minor).
    CHECK(ext.is_basis(full_mask(2)));
    CHECK(ext.bases().size() == b.minors().size());
    CHECK(from_extended_matroid(ext, full_mask(2)) == b);

    // Column labels colliding with row labels are primed.
    Matroid idext = extended_matroid(identity_bimatroid({"a", "b"}));
    CHECK(idext.ground() == std::vector<std::string>{"a", "b", "a'", "b'"});
    CHECK(idext.bases().size() == 4);

    // Choosing a non-basis E is a precondition violation.
    CHECK_THROWS_AS(from_extended_matroid(uniform_matroid(1, 3), 0b011), precondition_error);
}

TEST_CASE("rank table round trip and axioms") {
    for (const Bimatroid& b : fixtures::bimatroid_catalog()) {
        CAPTURE(b.m());
        CAPTURE(b.n());
        RelativeRankTable t = rank_table(b);
        CHECK(validate_rank_axioms(t).valid);
        CHECK(from_rank_table(b.rows(), b.cols(), t) == b);
    }

    // All-ones 2x2 has r(S,T) = min(|S|, |T|, 1).
    RelativeRankTable t = rank_table(from_matrix(fixtures::ones_q(2, 2)));
    CHECK(t.at(0b11, 0b11) == 1);
    CHECK(t.at(0b01, 0b10) == 1);
    CHECK(t.at(0b00, 0b11) == 0);

    // Breaking monotonicity is caught.
    RelativeRankTable bad(1, 1);
    bad.at(0, 0) = 0;
    bad.at(1, 1) = 0;
    bad.at(1, 0) = 0;
    bad.at(0, 1) = 0;
    CHECK(validate_rank_axioms(bad).valid);  // zero table is the zero bimatroid
    bad.at(1, 1) = 2;                        // exceeds min(|S|, |T|)
    CHECK(!validate_rank_axioms(bad).valid);
}

TEST_CASE("regular rectangles") {
    Bimatroid ones = from_matrix(fixtures::ones_q(2, 2));
    auto vert = regular_rectangles(ones, Orientation::vertical);
    // (S, empty) for all four S, then three nonempty S against two singleton T.
    long k0 = 0, k1 = 0, k2 = 0;
    for (const auto& st : vert) {
        if (popcount(st.J) == 0) ++k0;
        if (popcount(st.J) == 1) ++k1;
        if (popcount(st.J) == 2) ++k2;
    }
    CHECK(k0 == 4);
    CHECK(k1 == 6);
    CHECK(k2 == 0);
    CHECK(validate_rectangle_axioms(vert, 2, 2).valid);

    // Horizontal rectangles of b are the vertical rectangles of transpose(b)
    // with the roles swapped.
    auto horiz = regular_rectangles(ones, Orientation::horizontal);
    auto vert_t = regular_rectangles(ones.transpose(), Orientation::vertical);
    CHECK(horiz.size() == vert_t.size());

    // Dropping one pair breaks the axioms.
    auto broken = vert;
    broken.erase(std::remove(broken.begin(), broken.end(), MinorPair{0b01, 0}),
                 broken.end());
    CHECK(!validate_rectangle_axioms(broken, 2, 2).valid);
}

TEST_CASE("transpose and restriction") {
    QMatrix a = fixtures::q_matrix({{1, 2, 0}, {3, 4, 5}});
    Bimatroid b = from_matrix(a);
    Bimatroid bt = b.transpose();
    CHECK(bt.m() == 3);
    CHECK(bt.n() == 2);
    CHECK(bt.transpose() == b);
    for (Mask S = 0; S < 4; ++S)
        for (Mask T = 0; T < 8; ++T) CHECK(bt.relative_rank(T, S) == b.relative_rank(S, T));

    // Restriction agrees with restricting the matrix.
    Bimatroid r = b.restricted(0b01, 0b101);
    Bimatroid rm = from_matrix(a.submatrix(0b01, 0b101));
    CHECK(r.minors() == rm.minors());
    CHECK(r.m() == 1);
    CHECK(r.n() == 2);
    CHECK(r.rows() == std::vector<std::string>{"e0"});
    CHECK(r.cols() == std::vector<std::string>{"f0", "f2"});
}

TEST_CASE("laplace property on the catalog") {
    for (const Bimatroid& b : fixtures::bimatroid_catalog()) {
        CAPTURE(b.m());
        CHECK(laplace_property(b).valid);
    }
}

TEST_CASE("relabeling keeps the minor family") {
    Bimatroid b = from_matrix(fixtures::ones_q(2, 2));
    Bimatroid r = relabeled(b, {"x0", "x1"}, {"y0", "y1"});
    CHECK(r.minors() == b.minors());
    CHECK(r.rows() == std::vector<std::string>{"x0", "x1"});
    CHECK_THROWS_AS(relabeled(b, {"x0"}, {"y0", "y1"}), precondition_error);
}

TEST_CASE("all four views round trip on the catalog") {
    for (const Bimatroid& b : fixtures::bimatroid_catalog()) {
        CAPTURE(b.m());
        CAPTURE(b.n());
        CHECK(validate_bimatroid(b).valid);
        // The extended view primes column labels that collide with row
        // labels, so the round trip recovers b up to that relabeling.
        Bimatroid expect = relabeled(b, b.rows(), extended_col_labels(b));
        CHECK(from_extended_matroid(extended_matroid(b), full_mask(b.m())) == expect);
        CHECK(from_rank_table(b.rows(), b.cols(), rank_table(b)) == b);
        for (Orientation o : {Orientation::vertical, Orientation::horizontal}) {
            std::vector<MinorPair> minors;
            for (const auto& st : regular_rectangles(b, o))
                if (popcount(st.I) == popcount(st.J)) minors.push_back(st);
            CHECK(Bimatroid::from_minors(b.rows(), b.cols(), std::move(minors)) == b);
        }
    }
}
