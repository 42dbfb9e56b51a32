/*
   Copyright 2026 The seedrel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "seedrel/satake.hpp"

using namespace seedrel;

namespace {

AlgebraElement mono(LatticePoint e, LaurentScalar c = 1) { return AlgebraElement::monomial(e, c); }
SphericalElement f(LatticePoint e, LaurentScalar c = 1) { return SphericalElement::basis(e, c); }
const LaurentScalar q = q_power(1);

const std::vector<std::pair<std::string, LatticePoint>>& split_matrix() {
    static const std::vector<std::pair<std::string, LatticePoint>> m = {
        {"GL2", {1, 0}},   {"GL2", {2, 0}},   {"GL2", {1, 1}},  {"GL3", {1, 0, 0}}, {"GL3", {1, 1, 0}},
        {"GL3", {2, 1, 0}}, {"SL3", {1, 1}},  {"PGL3", {1, 0}}, {"PGL3", {0, 1}},   {"SO5", {1, 0}},
        {"SO5", {1, 1}},   {"Sp4", {1, 1}},   {"G2", {1, 2}}};
    return m;
}

}  // namespace

TEST(SatakeImage, GL2Values) {
    const auto gl2 = RootDatum::builtin("GL2");
    EXPECT_EQ(satake_basis_image(gl2, {1, 0}), mono({1, 0}) + mono({0, 1}, q));
    EXPECT_EQ(satake_basis_image(gl2, {1, 1}), mono({1, 1}));
    EXPECT_EQ(satake_basis_image(gl2, {2, 0}), mono({2, 0}) + mono({1, 1}, q - 1) + mono({0, 2}, q * q));
    EXPECT_THROW(satake_basis_image(gl2, {0, 1}), std::invalid_argument);
}

TEST(SatakeImage, GL3Minuscule) {
    const auto gl3 = RootDatum::builtin("GL3");
    EXPECT_EQ(satake_basis_image(gl3, {1, 0, 0}), mono({1, 0, 0}) + mono({0, 1, 0}, q) + mono({0, 0, 1}, q * q));
    EXPECT_EQ(satake_basis_image(gl3, {1, 1, 0}), mono({1, 1, 0}) + mono({1, 0, 1}, q) + mono({0, 1, 1}, q * q));
}

TEST(SatakeImage, RejectsTwistedDatum) {
    EXPECT_THROW(SatakeEngine(RootDatum::builtin("ResGL2")), Unsupported);
}

TEST(SatakeImage, DotCovarianceAndRoundTrip) {
    for (const auto& [name, mu] : split_matrix()) {
        const auto rd = RootDatum::builtin(name);
        SatakeEngine engine(rd);
        for (const auto& lambda : dominant_weights_below(rd, mu)) {
            const auto& img = engine.basis_image(lambda);
            EXPECT_TRUE(is_weyl_invariant(rd, img, true)) << name << " " << lambda.str();
            EXPECT_EQ(engine.inverse(img), f(lambda)) << name << " " << lambda.str();
        }
    }
}

TEST(SatakeImage, LeadingCoefficientAndSupport) {
    for (const auto& [name, mu] : split_matrix()) {
        const auto rd = RootDatum::builtin(name);
        SatakeEngine engine(rd);
        const auto report = satake_coefficient_report(engine, mu);
        EXPECT_TRUE(report.leading_is_one) << name;
        EXPECT_TRUE(report.support_is_saturated_set) << name;
        EXPECT_TRUE(report.integral_q_powers) << name;
        EXPECT_TRUE(report.positive_at_primes) << name;
        if (is_minuscule(rd, mu)) {
            EXPECT_TRUE(report.nonnegative_polynomials) << name;
        }
    }
}

TEST(SatakeImage, NonMinusculeCoefficientNeedNotBeAPolynomialWithPositiveCoefficients) {
    const auto rd = RootDatum::builtin("GL2");
    SatakeEngine engine(rd);
    const auto report = satake_coefficient_report(engine, {2, 0});
    EXPECT_FALSE(report.nonnegative_polynomials);
    ASSERT_EQ(report.failures.size(), 1u);
    EXPECT_EQ(report.failures[0].first, (LatticePoint{1, 1}));
    EXPECT_EQ(report.failures[0].second, q - 1);
}

TEST(InverseSatake, CentralAndNonInvariantInputs) {
    const auto gl2 = RootDatum::builtin("GL2");
    EXPECT_EQ(inverse_satake(gl2, mono({1, 1})), f({1, 1}));
    // invariant for the plain Weyl action but not for the dotted one
    EXPECT_THROW(inverse_satake(gl2, mono({1, 0}) + mono({0, 1})), std::invalid_argument);
    EXPECT_EQ(inverse_satake(gl2, mono({1, 0}) + mono({0, 1}, q) + mono({1, 1}, 3)), f({1, 0}) + f({1, 1}, 3));
}

TEST(SphericalProduct, GL2HeckeOperatorSquare) {
    SatakeEngine engine(RootDatum::builtin("GL2"));
    EXPECT_EQ(engine.multiply(f({1, 0}), f({1, 0})), f({2, 0}) + f({1, 1}, q + 1));
}

TEST(HeckePolynomial, GL2AndGL3) {
    auto h = hecke_polynomial(ConjugacyClass::make(RootDatum::builtin("GL2"), {1, 0}));
    ASSERT_EQ(h.degree(), 2);
    EXPECT_EQ(h.coeffs[2], f({0, 0}));
    EXPECT_EQ(h.coeffs[1], f({1, 0}, -1));
    EXPECT_EQ(h.coeffs[0], f({1, 1}, q));
    h = hecke_polynomial(ConjugacyClass::make(RootDatum::builtin("GL3"), {1, 0, 0}));
    ASSERT_EQ(h.degree(), 3);
    EXPECT_EQ(h.coeffs[2], f({1, 0, 0}, -1));
    EXPECT_EQ(h.coeffs[1], f({1, 1, 0}, q));
    EXPECT_EQ(h.coeffs[0], f({1, 1, 1}, -q * q * q));
    h = hecke_polynomial(ConjugacyClass::make(RootDatum::builtin("GL2"), {0, 0}));
    ASSERT_EQ(h.degree(), 1);
    EXPECT_EQ(h.coeffs[0], f({0, 0}, -1));
}

TEST(HeckePolynomial, IntegralQPowersOnMatrix) {
    for (const auto& [name, mu] : split_matrix()) {
        const auto h = hecke_polynomial(ConjugacyClass::make(RootDatum::builtin(name), mu));
        for (const auto& c : h.coeffs) EXPECT_TRUE(c.has_integral_q_powers()) << name;
    }
    EXPECT_THROW(hecke_polynomial(ConjugacyClass::make(RootDatum::builtin("ResGL2"), {1, 0, 0, 0})), Unsupported);
}

TEST(Levi, CentralizerOfCocharacter) {
    const auto gl3 = RootDatum::builtin("GL3");
    EXPECT_EQ(levi_of(gl3, {1, 0, 0}).simple_indices, (std::vector<std::size_t>{1}));
    EXPECT_EQ(levi_of(gl3, {1, 1, 0}).simple_indices, (std::vector<std::size_t>{0}));
    EXPECT_TRUE(levi_of(gl3, {2, 1, 0}).simple_indices.empty());
    EXPECT_EQ(levi_of(gl3, {1, 1, 1}).datum->weyl_size(), 6u);
}

TEST(Levi, TwoStageFactorization) {
    const auto gl3 = RootDatum::builtin("GL3");
    const auto levi = levi_of(gl3, {1, 0, 0});
    SatakeEngine g(gl3), l(*levi.datum);
    const auto h = levi_satake(g, l, f({1, 0, 0}));
    EXPECT_EQ(h, f({1, 0, 0}) + f({0, 1, 0}, q));
    for (const auto& lambda : dominant_weights_below(gl3, {2, 1, 0}))
        EXPECT_EQ(l.image(levi_satake(g, l, f(lambda))), g.image(f(lambda))) << lambda.str();
}

TEST(Levi, FullGroupAndTorusDegenerations) {
    const auto gl3 = RootDatum::builtin("GL3");
    SatakeEngine g(gl3), full(*levi_with(gl3, {0, 1}).datum), torus(*levi_with(gl3, {}).datum);
    for (const auto& lambda : dominant_weights_below(gl3, {2, 1, 0})) {
        EXPECT_EQ(levi_satake(g, full, f(lambda)), f(lambda));
        SphericalElement expected(3);
        for (const auto& [nu, c] : g.basis_image(lambda).terms()) expected.add_term(nu, c);
        EXPECT_EQ(levi_satake(g, torus, f(lambda)), expected);
    }
}

TEST(Bultel, ProperLevis) {
    for (const LatticePoint& mu : {LatticePoint{1, 0, 0}, LatticePoint{1, 1, 0}}) {
        const auto r = check_bultel(ConjugacyClass::make(RootDatum::builtin("GL3"), mu));
        EXPECT_FALSE(r.levi_is_torus);
        EXPECT_TRUE(r.pass) << r.value.str();
        EXPECT_FALSE(check_bultel(ConjugacyClass::make(RootDatum::builtin("GL3"), mu), true).pass);
    }
}

TEST(Bultel, TorusCaseMatchesAnnihilation) {
    for (const auto& [name, mu] : split_matrix()) {
        const auto cc = ConjugacyClass::make(RootDatum::builtin(name), mu);
        const auto r = check_bultel(cc);
        EXPECT_TRUE(r.pass) << name << " " << mu.str();
        if (r.levi_is_torus) {
            EXPECT_EQ(r.torus_value, check_annihilation(cc).value);
        }
    }
}
