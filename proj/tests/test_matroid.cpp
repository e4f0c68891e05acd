#include "doctest.h"

#include <algorithm>

#include "bimat/matroid.hpp"
#include "fixtures.hpp"

using namespace bimat;

TEST_CASE("uniform matroid basics") {
    Matroid u = uniform_matroid(2, 3);
    CHECK(u.n() == 3);
    CHECK(u.rank() == 2);
    CHECK(u.bases().size() == 3);
    CHECK(u.is_basis(0b011));
    CHECK(!u.is_basis(0b111));
    CHECK(u.rank_of(0b111) == 2);
    CHECK(u.rank_of(0b001) == 1);
    CHECK(u.rank_of(0) == 0);
    CHECK(u.is_independent(0b101));
    CHECK(!u.is_independent(0b111));
    CHECK(u.label_index("1") == 1);
    CHECK(u.label_index("missing") == -1);
    CHECK(u.independent_sets().size() == 7);
    CHECK(u.flats().size() == 5);          // empty set, 3 points, full
    CHECK(u.circuits().size() == 1);       // {0,1,2}
    CHECK(u.cocircuits().size() == 3);     // complements of the points
}

TEST_CASE("from_bases validates shape") {
    CHECK_THROWS_AS(Matroid::from_bases({"a"}, {}), precondition_error);
    CHECK_THROWS_AS(Matroid::from_bases({"a", "a"}, {1}), precondition_error);
    CHECK_THROWS_AS(Matroid::from_bases({"a", "b"}, {0b01, 0b11}), precondition_error);
    CHECK_THROWS_AS(Matroid::from_bases({"a"}, {0b10}), precondition_error);
    // Duplicates collapse.
    Matroid m = Matroid::from_bases({"a", "b"}, {0b01, 0b01});
    CHECK(m.bases().size() == 1);
}

TEST_CASE("basis exchange validation") {
    CHECK(validate_bases(uniform_matroid(2, 4).bases(), 4).valid);
    CHECK(validate_bases(fixtures::fano().bases(), 7).valid);

    // {0,1} and {2,3} cannot exchange: {1,2} and {1,3} are missing.
    BasisCheck bad = validate_bases({0b0011, 0b1100}, 4);
    CHECK(!bad.valid);
    CHECK(bad.reason == "exchange fails");
    CHECK(popcount(bad.B & ~bad.B2) > 0);
    CHECK(((bad.B >> bad.x) & 1) == 1);

    CHECK(!validate_bases({}, 3).valid);
    CHECK(!validate_bases({0b01, 0b11}, 2).valid);  // not equicardinal

    // A two-basis family with a common element is fine (parallel extension).
    CHECK(validate_bases({0b011, 0b110}, 3).valid);
}

TEST_CASE("fano matroid from its GF(2) realization") {
    Matroid f = fixtures::fano();
    CHECK(f.n() == 7);
    CHECK(f.rank() == 3);
    CHECK(f.bases().size() == 28);
    CHECK(f.circuits().size() == 14);    // 7 lines + 7 complements of lines
    CHECK(f.cocircuits().size() == 7);   // complements of the 7 lines
    CHECK(f.flats().size() == 16);       // empty + 7 points + 7 lines + full

    Matroid d = f.dual();
    CHECK(d.rank() == 4);
    CHECK(d.bases().size() == 28);
    CHECK(d.dual() == f);
}

TEST_CASE("graphic matroid of K4") {
    Matroid g = fixtures::k4();
    CHECK(g.n() == 6);
    CHECK(g.rank() == 3);
    CHECK(g.bases().size() == 16);  // spanning trees of K4
    // A triangle is a circuit: edges 12, 13, 23 are columns 0, 1, 3.
    CHECK(g.rank_of(0b001011) == 2);
    CHECK(!g.is_independent(0b001011));
}

TEST_CASE("deletion and contraction") {
    Matroid u = uniform_matroid(2, 3);
    Matroid del = u.deleted(0b100);
    CHECK(del.n() == 2);
    CHECK(del.rank() == 2);
    CHECK(del.bases().size() == 1);
    CHECK(del.ground() == std::vector<std::string>{"0", "1"});

    Matroid con = u.contracted(0b001);
    CHECK(con.n() == 2);
    CHECK(con.rank() == 1);
    CHECK(con.bases().size() == 2);
    CHECK(con.ground() == std::vector<std::string>{"1", "2"});

    // Deleting nothing is the identity; contracting a basis kills the rank.
    CHECK(u.deleted(0) == u);
    CHECK(u.contracted(0b011).rank() == 0);
}

TEST_CASE("direct sum and matroid union") {
    Matroid a = uniform_matroid(1, {"a", "b"});
    Matroid b = uniform_matroid(1, {"c", "d"});
    Matroid s = direct_sum(a, b);
    CHECK(s.n() == 4);
    CHECK(s.rank() == 2);
    CHECK(s.bases().size() == 4);
    CHECK_THROWS_AS(direct_sum(a, a), precondition_error);

    CHECK(matroid_union(uniform_matroid(1, 3), uniform_matroid(1, 3)) ==
          uniform_matroid(2, 3));
    CHECK(matroid_union(uniform_matroid(2, 3), uniform_matroid(2, 3)) ==
          uniform_matroid(3, 3));
    CHECK(matroid_union(uniform_matroid(0, 2), uniform_matroid(1, 2)) ==
          uniform_matroid(1, 2));
}

TEST_CASE("column matroid of a rational matrix") {
    Matroid m = from_matrix_columns(fixtures::q_matrix({{1, 0, 1}, {0, 1, 1}}));
    CHECK(m == uniform_matroid(2, 3));

    // A zero column is a loop.
    Matroid l = from_matrix_columns(fixtures::q_matrix({{1, 0}, {0, 0}}));
    CHECK(l.rank() == 1);
    CHECK(l.bases() == std::vector<Mask>{0b01});
    CHECK(l.rank_of(0b10) == 0);
}

TEST_CASE("dual, circuits and cocircuits are consistent") {
    for (const Matroid& m : fixtures::matroid_catalog()) {
        CAPTURE(m.n());
        CHECK(validate_bases(m.bases(), m.n()).valid);
        Matroid d = m.dual();
        CHECK(d.dual() == m);
        CHECK(d.rank() == m.n() - m.rank());
        // Cocircuits are the circuits of the dual.
        CHECK(m.cocircuits() == d.circuits());
        // Rank + dual rank of complement: r(S) + r*(E-S) = |E| - r + r(S)... spot
        // check the rank formula r*(S) = |S| - r + r(E-S) on the full set.
        CHECK(d.rank_of(full_mask(m.n())) == d.rank());
    }
}
