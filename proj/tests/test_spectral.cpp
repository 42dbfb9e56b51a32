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

#include "seedrel/spectral.hpp"

using namespace seedrel;

namespace {

ConjugacyClass cls(const std::string& datum, LatticePoint mu) {
    return ConjugacyClass::make(RootDatum::builtin(datum), std::move(mu));
}

AlgebraElement mono(LatticePoint e, LaurentScalar c = 1) { return AlgebraElement::monomial(e, c); }

const std::vector<std::pair<std::string, LatticePoint>>& test_matrix() {
    static const std::vector<std::pair<std::string, LatticePoint>> m = {
        {"GL2", {1, 0}},  {"GL2", {2, 0}},  {"GL2", {1, 1}},     {"GL3", {1, 0, 0}}, {"GL3", {1, 1, 0}},
        {"GL3", {2, 1, 0}}, {"SL3", {1, 1}}, {"PGL3", {1, 0}},   {"PGL3", {0, 1}},   {"SO5", {1, 0}},
        {"SO5", {1, 1}},  {"G2", {1, 2}},   {"ResGL2", {1, 0, 0, 0}}, {"GL2xGL2", {1, 0, 1, 0}}};
    return m;
}

}  // namespace

TEST(Norm, SplitAndTwisted) {
    EXPECT_EQ(norm_cocharacter(cls("GL2", {1, 0})), (LatticePoint{1, 0}));
    const auto res = cls("ResGL2", {1, 0, 0, 0});
    EXPECT_EQ(res.d, 2);
    EXPECT_EQ(norm_cocharacter(res), (LatticePoint{1, 0, 1, 0}));
    EXPECT_THROW(ConjugacyClass::make(RootDatum::builtin("ResGL2"), {1, 0, 1, 0}, 2), std::invalid_argument);
    EXPECT_THROW(cls("GL2", {0, 1}), std::invalid_argument);
}

TEST(SpectralSplit, GL2Minuscule) {
    const auto p = spectral_poly_split(cls("GL2", {1, 0})).poly;
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.coeff(1), -(mono({1, 0}, v_power(1)) + mono({0, 1}, v_power(1))));
    EXPECT_EQ(p.coeff(0), mono({1, 1}, q_power(1)));
}

TEST(SpectralSplit, GL3Standard) {
    const auto p = spectral_poly_split(cls("GL3", {1, 0, 0})).poly;
    const LaurentScalar q = q_power(1);
    EXPECT_EQ(p.coeff(2), -(mono({1, 0, 0}, q) + mono({0, 1, 0}, q) + mono({0, 0, 1}, q)));
    EXPECT_EQ(p.coeff(1), mono({1, 1, 0}, q_power(2)) + mono({1, 0, 1}, q_power(2)) + mono({0, 1, 1}, q_power(2)));
    EXPECT_EQ(p.coeff(0), mono({1, 1, 1}, -q_power(3)));
}

TEST(SpectralSplit, TrivialClass) {
    const auto p = spectral_poly_split(cls("GL2", {0, 0})).poly;
    EXPECT_EQ(p, AlgebraPolynomial::linear(AlgebraElement::constant(2, 1)));
}

TEST(SpectralSplit, RejectsTwistedDatum) {
    EXPECT_THROW(spectral_poly_split(cls("ResGL2", {1, 0, 0, 0})), std::invalid_argument);
}

TEST(SpectralTwisted, RestrictionOfScalars) {
    const auto cc = cls("ResGL2", {1, 0, 0, 0});
    const auto p = spectral_poly_twisted_minuscule(cc).poly;
    // W.mu has two weights and sigma^2 is trivial: two linear factors
    const AlgebraPolynomial expected = AlgebraPolynomial::linear(mono({1, 0, 1, 0}, q_power(1))) *
                                       AlgebraPolynomial::linear(mono({0, 1, 0, 1}, q_power(1)));
    EXPECT_EQ(p, expected);
    const auto dotted = dot_twist(*cc.datum, spectral_polynomial(cc)).poly;
    EXPECT_EQ(dotted, AlgebraPolynomial::linear(mono({1, 0, 1, 0})) *
                          AlgebraPolynomial::linear(mono({0, 1, 0, 1}, q_power(2))));
}

TEST(SpectralTwisted, DegeneratesToSplitPath) {
    for (const auto& [name, mu] : test_matrix()) {
        const auto cc = cls(name, mu);
        if (!cc.datum->is_split() || !is_minuscule(*cc.datum, mu)) continue;
        EXPECT_EQ(spectral_poly_twisted_minuscule(cc).poly, spectral_poly_split(cc).poly) << name << " " << mu.str();
    }
}

TEST(SpectralTwisted, RejectsNonMinuscule) {
    EXPECT_THROW(spectral_poly_twisted_minuscule(cls("GL2", {2, 0})), Unsupported);
}

TEST(DotTwist, GL2ValuesAndInverse) {
    const auto cc = cls("GL2", {1, 0});
    const auto split = spectral_poly_split(cc);
    const auto dotted = dot_twist(*cc.datum, split);
    EXPECT_TRUE(dotted.dotted);
    EXPECT_EQ(dotted.poly.coeff(1), -(mono({1, 0}) + mono({0, 1}, q_power(1))));
    EXPECT_EQ(dotted.poly.coeff(0), mono({1, 1}, q_power(1)));
    EXPECT_EQ(dot_untwist(*cc.datum, dotted).poly, split.poly);
    EXPECT_THROW(dot_twist(*cc.datum, dotted), std::invalid_argument);
}

TEST(DotTwist, CoefficientsAreDotInvariant) {
    for (const auto& [name, mu] : test_matrix()) {
        const auto cc = cls(name, mu);
        const auto dotted = dotted_spectral_polynomial(cc);
        for (const auto& c : dotted.poly.coefficients()) {
            EXPECT_TRUE(is_weyl_invariant(*cc.datum, c, true)) << name << " " << mu.str();
        }
    }
}

TEST(DotTwist, NonInvariantInputIsDetected) {
    const auto rd = RootDatum::builtin("GL2");
    EXPECT_FALSE(is_weyl_invariant(rd, mono({1, 0}) + mono({0, 1}), true));
    EXPECT_TRUE(is_weyl_invariant(rd, mono({1, 0}) + mono({0, 1}), false));
}

TEST(Annihilation, HoldsOnTestMatrix) {
    for (const auto& [name, mu] : test_matrix()) {
        const auto report = check_annihilation(cls(name, mu));
        EXPECT_TRUE(report.pass) << name << " " << mu.str() << " -> " << report.value.str();
    }
}

TEST(Annihilation, PerturbationIsDetected) {
    for (const auto& [name, mu] : test_matrix()) {
        const auto report = check_annihilation(cls(name, mu), true);
        EXPECT_FALSE(report.pass) << name << " " << mu.str();
    }
}

TEST(Annihilation, DottedPolynomialHasExactLinearFactor) {
    for (const auto& [name, mu] : test_matrix()) {
        const auto cc = cls(name, mu);
        const auto [quotient, remainder] =
            divide_by_linear(dotted_spectral_polynomial(cc).poly, AlgebraElement::monomial(norm_cocharacter(cc)));
        EXPECT_TRUE(remainder.is_zero()) << name;
        EXPECT_EQ(quotient.degree() + 1, dotted_spectral_polynomial(cc).poly.degree());
    }
}

TEST(Degree, BoundsAndEquality) {
    auto d = degree_of_H(cls("GL3", {1, 1, 0}));
    EXPECT_EQ(d.degree, 3);
    EXPECT_EQ(d.bound, 3u);
    EXPECT_TRUE(d.equality);
    d = degree_of_H(cls("GL2", {2, 0}));
    EXPECT_EQ(d.degree, 3);
    EXPECT_EQ(d.bound, 3u);
    d = degree_of_H(cls("GL3", {2, 1, 0}));
    EXPECT_EQ(d.degree, 8);
    EXPECT_EQ(d.bound, 7u);
    EXPECT_FALSE(d.equality);
    d = degree_of_H(cls("ResGL2", {1, 0, 0, 0}));
    EXPECT_EQ(d.degree, 2);
}

TEST(Degree, MinusculeEqualsOrbitSize) {
    for (const auto& [name, mu] : test_matrix()) {
        const auto cc = cls(name, mu);
        if (!is_minuscule(*cc.datum, mu)) continue;
        EXPECT_EQ(static_cast<std::size_t>(degree_of_H(cc).degree), weyl_orbit(*cc.datum, mu).size()) << name;
    }
}
