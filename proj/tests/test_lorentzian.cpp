#include "doctest.h"

#include "bimat/gen.hpp"
#include "bimat/lorentzian.hpp"
#include "bimat/polynomial.hpp"
#include "bimat/rng.hpp"
#include "fixtures.hpp"

using namespace bimat;

namespace {

std::vector<Rational> seq(const std::vector<long>& v) {
    std::vector<Rational> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

MultiPoly bivariate(const std::vector<long>& coeffs) {
    MultiPoly p(std::vector<std::string>{"x", "y"});
    int d = static_cast<int>(coeffs.size()) - 1;
    for (int k = 0; k <= d; ++k)
        p.add_term({static_cast<uint8_t>(d - k), static_cast<uint8_t>(k)},
                   Rational(coeffs[static_cast<size_t>(k)]));
    return p;
}

}  // namespace

TEST_CASE("internal zeros and unimodality") {
    CHECK(no_internal_zeros(seq({1, 0, 1})) == false);
    CHECK(no_internal_zeros(seq({0, 1, 2})));
    CHECK(no_internal_zeros(seq({1, 2, 0})));
    CHECK(no_internal_zeros(seq({0, 0})));
    CHECK(no_internal_zeros(seq({5})));
    CHECK(no_internal_zeros(seq({0, 1, 0, 0})));
    CHECK_THROWS_AS(no_internal_zeros(seq({-1, 1})), precondition_error);

    CHECK(is_unimodal(seq({1, 3, 2})));
    CHECK(is_unimodal(seq({1, 2, 3})));
    CHECK(is_unimodal(seq({3, 2, 1})));
    CHECK(!is_unimodal(seq({2, 1, 2})));
    CHECK(is_unimodal(seq({})));
}

TEST_CASE("log-concavity") {
    CHECK(is_log_concave(seq({1, 3, 3})));   // 9 >= 3
    CHECK(is_log_concave(seq({1, 4, 6, 4, 1})));
    CHECK(!is_log_concave(seq({1, 1, 2})));  // 1 < 2
    CHECK(!is_log_concave(seq({1, 0, 1})));  // internal zero
    CHECK(is_log_concave(seq({0, 2, 1, 0})));
}

TEST_CASE("ultra log-concavity") {
    CHECK(is_ultra_log_concave(seq({1, 4, 0}), 2));
    CHECK(!is_ultra_log_concave(seq({1, 1, 1}), 2));  // (1/2)^2 < 1*1
    CHECK(is_ultra_log_concave(seq({1, 2, 1}), 2));
    CHECK(is_ultra_log_concave(seq({1, 4}), 7));
    CHECK_THROWS_AS(is_ultra_log_concave(seq({1, 1, 1}), 1), precondition_error);
}

TEST_CASE("M-convexity of exponent supports") {
    CHECK(is_m_convex(basis_generating_poly(fixtures::u23()).support()).valid);
    CHECK(is_m_convex(basis_generating_poly(fixtures::fano()).support()).valid);
    CHECK(is_m_convex({}).valid);
    CHECK(is_m_convex({{1, 1, 0}}).valid);

    Verdict bad = is_m_convex({{2, 0}, {0, 2}});
    CHECK(!bad.valid);
    CHECK(bad.witness.find("exchange fails") != std::string::npos);

    CHECK_THROWS_AS(is_m_convex({{1, 0}, {1}}), precondition_error);
}

TEST_CASE("degree simplex enumeration") {
    std::vector<Exponent> s = degree_simplex(2, 2);
    CHECK(s == std::vector<Exponent>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(degree_simplex(3, 2).size() == 6);
    CHECK(degree_simplex(1, 5) == std::vector<Exponent>{{5}});
    CHECK(degree_simplex(0, 3).empty());
    CHECK(degree_simplex(3, 0).size() == 1);
}

TEST_CASE("lorentzian fixtures") {
    MultiPoly strict = bivariate({1, 4, 1});  // x^2 + 4xy + y^2
    CHECK(is_strictly_lorentzian(strict));
    CHECK(is_lorentzian(strict));

    MultiPoly xy = bivariate({0, 1, 0});
    CHECK(!is_strictly_lorentzian(xy));  // x^2 coefficient vanishes
    CHECK(is_lorentzian(xy));

    MultiPoly sq_sum = bivariate({1, 0, 1});  // x^2 + y^2: support not M-convex
    CHECK(!is_strictly_lorentzian(sq_sum));
    CHECK(!is_lorentzian(sq_sum));

    MultiPoly perfect = bivariate({1, 2, 1});  // (x+y)^2: Hessian is singular
    CHECK(!is_strictly_lorentzian(perfect));
    CHECK(is_lorentzian(perfect));

    MultiPoly neg = bivariate({1, -4, 1});
    CHECK(!is_lorentzian(neg));
    CHECK(!is_strictly_lorentzian(neg));

    // Degree 3 in three variables.
    MultiPoly xyz(std::vector<std::string>{"x", "y", "z"});
    xyz.add_term({1, 1, 1}, Rational(1));
    CHECK(is_lorentzian(xyz));
    CHECK(!is_strictly_lorentzian(xyz));

    // Low degree: linear and constant forms with nonnegative coefficients.
    MultiPoly lin(std::vector<std::string>{"x", "y"});
    lin.add_term({1, 0}, Rational(2));
    lin.add_term({0, 1}, Rational(3));
    CHECK(is_lorentzian(lin));
    CHECK(is_strictly_lorentzian(lin));

    MultiPoly zero(std::vector<std::string>{"x", "y"});
    CHECK(is_lorentzian(zero));
    CHECK(!is_strictly_lorentzian(zero));
}

TEST_CASE("lorentzian preconditions") {
    MultiPoly inhom(std::vector<std::string>{"x"});
    inhom.add_term({1}, Rational(1));
    inhom.add_term({0}, Rational(1));
    CHECK_THROWS_AS(is_lorentzian(inhom), precondition_error);

    std::vector<std::string> many;
    for (int i = 0; i < 13; ++i) many.push_back("v" + std::to_string(i));
    MultiPoly wide(many);
    Exponent e(13, 0);
    e[0] = 1;
    wide.add_term(e, Rational(1));
    CHECK_THROWS_AS(is_lorentzian(wide), precondition_error);

    MultiPoly deep(std::vector<std::string>{"x"});
    deep.add_term({9}, Rational(1));
    CHECK_THROWS_AS(is_lorentzian(deep), precondition_error);
}

TEST_CASE("matroid basis polynomials are lorentzian") {
    for (const Matroid& m : fixtures::matroid_catalog()) {
        CAPTURE(m.n());
        CHECK(is_lorentzian(basis_generating_poly(m)));
    }
}

TEST_CASE("bivariate equivalence of lorentzian and ULC") {
    CHECK(bivariate_ulc_equivalence(seq({1, 4, 0}), 2));
    CHECK(bivariate_ulc_equivalence(seq({1, 2, 1}), 2));
    CHECK(!bivariate_ulc_equivalence(seq({1, 1, 1}), 2));
    CHECK(!bivariate_ulc_equivalence(seq({1, 0, 1}), 2));
    CHECK(bivariate_ulc_equivalence(seq({0, 0, 0}), 2));
    CHECK(bivariate_ulc_equivalence(seq({5}), 0));
    CHECK_THROWS_AS(bivariate_ulc_equivalence(seq({1, 1}), 2), precondition_error);

    SplitMix64 g(404);
    for (int t = 0; t < 200; ++t) {
        std::vector<Rational> a = random_nonneg_sequence(g, 6, 9);
        // Must not throw: the two verification paths agree on every input.
        CHECK_NOTHROW(bivariate_ulc_equivalence(a, static_cast<long>(a.size()) - 1));
    }
}
