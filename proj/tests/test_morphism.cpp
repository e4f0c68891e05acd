#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "bimat/gen.hpp"
#include "bimat/morphism.hpp"
#include "fixtures.hpp"

using namespace bimat;

namespace {

// Every map between two small grounds, as base-t digit strings.
std::vector<std::vector<int>> all_maps(int source_n, int target_n) {
    std::vector<std::vector<int>> maps;
    long total = 1;
    for (int i = 0; i < source_n; ++i) total *= target_n;
    for (long code = 0; code < total; ++code) {
        std::vector<int> m(source_n);
        long c = code;
        for (int i = 0; i < source_n; ++i) {
            m[i] = static_cast<int>(c % target_n);
            c /= target_n;
        }
        maps.push_back(std::move(m));
    }
    return maps;
}

}  // namespace

TEST_CASE("the three morphism conditions agree on every small map") {
    std::vector<Matroid> sources = {uniform_matroid(2, 3), uniform_matroid(1, 3),
                                    fixtures::with_loop()};
    std::vector<Matroid> targets = {uniform_matroid(1, 2), uniform_matroid(2, 2),
                                    uniform_matroid(0, 1)};
    for (const Matroid& m : sources)
        for (const Matroid& mp : targets)
            for (const auto& phi : all_maps(m.n(), mp.n())) {
                bool r = is_morphism_rank(m, mp, phi);
                bool c = is_morphism_cocircuits(m, mp, phi);
                bool f = is_morphism_flats(m, mp, phi);
                CAPTURE(m.n());
                CAPTURE(mp.n());
                CAPTURE(phi[0]);
                CHECK(r == c);
                CHECK(c == f);
            }
}

TEST_CASE("known morphisms and non-morphisms") {
    Matroid u23 = fixtures::u23();
    // Constant maps to U_{0,1} are always morphisms.
    CHECK(is_morphism_rank(u23, uniform_matroid(0, 1), {0, 0, 0}));
    // The identity on a matroid is a morphism.
    CHECK(is_morphism_rank(u23, u23, {0, 1, 2}));
    // Truncation is a quotient: id is a morphism U_{2,3} -> U_{1,3}.
    CHECK(is_morphism_rank(u23, uniform_matroid(1, 3), {0, 1, 2}));
    // The reverse direction fails: rank cannot grow faster downstairs.
    CHECK(!is_morphism_rank(uniform_matroid(1, 3), u23, {0, 1, 2}));
    CHECK(!is_morphism_rank(uniform_matroid(1, 2), uniform_matroid(2, 2), {0, 1}));
    CHECK_THROWS_AS(is_morphism_rank(u23, u23, {0, 1}), precondition_error);  // not total
    CHECK_THROWS_AS(is_morphism_rank(u23, u23, {0, 1, 3}), precondition_error);
}

TEST_CASE("quotients") {
    CHECK(is_quotient(fixtures::u23(), uniform_matroid(1, 3)));
    CHECK(is_quotient(fixtures::u23(), uniform_matroid(0, 3)));
    CHECK(is_quotient(fixtures::u23(), fixtures::u23()));
    CHECK(!is_quotient(uniform_matroid(1, 3), fixtures::u23()));
    CHECK_THROWS_AS(is_quotient(fixtures::u23(), uniform_matroid(1, 2)), precondition_error);
}

TEST_CASE("pullback matroid") {
    Matroid u23 = fixtures::u23();
    // Constant map to U_{0,1}: everything collapses to rank 0.
    Matroid p0 = pullback(u23.ground(), {0, 0, 0}, uniform_matroid(0, 1));
    CHECK(p0.rank() == 0);
    CHECK(p0.n() == 3);
    // Pullback along the identity is the target.
    CHECK(pullback(u23.ground(), {0, 1, 2}, u23) == u23);
    // Pullback along a constant map to U_{1,1}: rank 1, no loops.
    Matroid p1 = pullback(u23.ground(), {0, 0, 0}, uniform_matroid(1, 1));
    CHECK(p1 == uniform_matroid(1, u23.ground()));
}

TEST_CASE("validated morphism construction") {
    Matroid u23 = fixtures::u23();
    MatroidMorphism phi = MatroidMorphism::make(u23, uniform_matroid(0, 1), {0, 0, 0});
    CHECK(phi.source() == u23);
    CHECK(phi.target().rank() == 0);
    CHECK(phi.image_of(0b101) == 0b1);
    CHECK(phi.image_of(0) == 0);
    CHECK_THROWS_AS(
        MatroidMorphism::make(uniform_matroid(1, 2), uniform_matroid(2, 2), {0, 1}),
        precondition_error);
}

TEST_CASE("nullity") {
    Matroid u23 = fixtures::u23();
    CHECK(nullity(MatroidMorphism::make(u23, uniform_matroid(0, 1), {0, 0, 0})) == 2);
    CHECK(nullity(MatroidMorphism::make(u23, u23, {0, 1, 2})) == 0);
    CHECK(nullity(MatroidMorphism::make(u23, uniform_matroid(1, 3), {0, 1, 2})) == 1);
}

TEST_CASE("bases of a morphism") {
    Matroid u23 = fixtures::u23();
    MatroidMorphism c = MatroidMorphism::make(u23, uniform_matroid(0, 1), {0, 0, 0});
    // Every independent set has spanning (rank-0) image.
    CHECK(bases_of_morphism(c).size() == 7);
    CHECK(basis_counts(c) == std::vector<long>{1, 3, 3});

    // Non-spanning image: B(phi) is empty.
    MatroidMorphism ns =
        MatroidMorphism::make(uniform_matroid(1, 1), uniform_matroid(2, 2), {0});
    CHECK(bases_of_morphism(ns).empty());
    CHECK(basis_counts(ns) == std::vector<long>{0, 0});

    // Quotient U_{2,3} -> U_{1,3}: independent sets with nonempty image.
    MatroidMorphism q = MatroidMorphism::make(u23, uniform_matroid(1, 3), {0, 1, 2});
    CHECK(basis_counts(q) == std::vector<long>{0, 3, 3});
}

TEST_CASE("classifying matroid of a morphism") {
    Matroid u23 = fixtures::u23();
    MatroidMorphism c = MatroidMorphism::make(u23, uniform_matroid(0, 1), {0, 0, 0});
    Matroid t = tilde_matroid(c);
    CHECK(t.n() == 5);  // q0, q1 and the three source elements
    CHECK(t.rank() == 2);
    CHECK(t.ground()[0] == "q0");
    CHECK(t.ground()[1] == "q1");
    CHECK(t.bases().size() == 10);  // 1 + 2*3 + 3
    CHECK(validate_bases(t.bases(), t.n()).valid);

    // The F-traces of the bases recover B(phi).
    std::vector<Mask> traces;
    for (Mask b : t.bases()) traces.push_back(b >> 2);
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    std::vector<Mask> expect = bases_of_morphism(c);
    std::sort(expect.begin(), expect.end());
    CHECK(traces == expect);

    // Non-spanning morphisms have no classifying matroid.
    MatroidMorphism ns =
        MatroidMorphism::make(uniform_matroid(1, 1), uniform_matroid(2, 2), {0});
    CHECK_THROWS_AS(tilde_matroid(ns), precondition_error);

    // Label collision: a source element named q0 forces fresh Q labels.
    Matroid src = uniform_matroid(1, {"q0", "x"});
    MatroidMorphism idm = MatroidMorphism::make(src, uniform_matroid(1, 1), {0, 0});
    Matroid t2 = tilde_matroid(idm);
    CHECK(t2.ground()[0] != "q0");
}

TEST_CASE("random realizable morphisms are morphisms with spanning image") {
    SplitMix64 g(5);
    for (int t = 0; t < 15; ++t) {
        MatroidMorphism phi = random_realizable_morphism(g, 6, 3);
        CAPTURE(t);
        CHECK(static_cast<int>(phi.map().size()) == phi.source().n());
        CHECK(phi.source().n() <= 6);
        CHECK(phi.target().n() <= 3);
        // make() already validated; cross-check the other two conditions.
        CHECK(is_morphism_cocircuits(phi.source(), phi.target(), phi.map()));
        CHECK(is_morphism_flats(phi.source(), phi.target(), phi.map()));
        // The generator guarantees a spanning image.
        CHECK(!bases_of_morphism(phi).empty());
        CHECK(validate_bases(tilde_matroid(phi).bases(), phi.source().rank() +
                                                             phi.source().n())
                  .valid);
    }
}
