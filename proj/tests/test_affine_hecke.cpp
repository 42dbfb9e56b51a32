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

#include <random>

#include "seedrel/affine_hecke.hpp"

using namespace seedrel;

namespace {

const LaurentScalar q = q_power(1);

std::shared_ptr<const RootDatum> datum(const std::string& name) {
    return std::make_shared<const RootDatum>(RootDatum::builtin(name));
}

AffineElement random_element(const HeckeAlgebra& H, std::mt19937& rng, int radius) {
    const RootDatum& rd = H.datum();
    LatticePoint lambda(rd.rank());
    for (std::size_t i = 0; i < rd.rank(); ++i) lambda[i] = static_cast<int>(rng() % (2 * radius + 1)) - radius;
    return {lambda, rng() % rd.weyl_size()};
}

HeckeElement T(const AffineElement& x, LaurentScalar c = 1) { return HeckeElement::basis(x, c); }

}  // namespace

TEST(AffineLength, KnownValues) {
    HeckeAlgebra H(datum("GL2"));
    EXPECT_EQ(H.length(H.identity()), 0);
    EXPECT_EQ(H.length(H.translation({1, 0})), 1);
    EXPECT_EQ(H.length(H.translation({1, 1})), 0);
    EXPECT_EQ(H.length(H.translation({2, -1})), 3);
    EXPECT_EQ(H.length({{1, 0}, 1}), 0);
    EXPECT_EQ(H.length({{0, 1}, 1}), 2);
    EXPECT_EQ(H.simple_reflections().size(), 2u);
}

TEST(AffineLength, FormulaMatchesHyperplaneCount) {
    std::mt19937 rng(314159);
    for (const std::string name : {"GL2", "GL3", "SL3", "PGL3", "SO5", "Sp4", "G2", "GL4"}) {
        HeckeAlgebra H(datum(name));
        for (int trial = 0; trial < 200; ++trial) {
            const auto x = random_element(H, rng, 3);
            EXPECT_EQ(H.length(x), H.length_by_hyperplanes(x)) << name;
        }
    }
}

TEST(AffineLength, SimpleReflectionsPerComponent) {
    EXPECT_EQ(HeckeAlgebra(datum("GL3")).simple_reflections().size(), 3u);
    EXPECT_EQ(HeckeAlgebra(datum("G2")).simple_reflections().size(), 3u);
    EXPECT_EQ(HeckeAlgebra(datum("GL2xGL2")).simple_reflections().size(), 4u);
    EXPECT_TRUE(HeckeAlgebra(datum("SL3")).length_zero_elements().empty());
    EXPECT_FALSE(HeckeAlgebra(datum("PGL3")).length_zero_elements().empty());
}

TEST(HeckeProduct, QuadraticAndBraidRelations) {
    HeckeAlgebra H(datum("GL3"));
    const auto& s = H.simple_reflections();
    for (const auto& x : s) EXPECT_EQ(H.multiply(T(x), T(x)), T(x, q - 1) + T(H.identity(), q));
    // type A~2: every pair of simple affine reflections satisfies the length-3 braid relation
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const auto a = H.multiply(H.multiply(T(s[i]), T(s[j])), T(s[i]));
            const auto b = H.multiply(H.multiply(T(s[j]), T(s[i])), T(s[j]));
            EXPECT_EQ(a, b);
        }
}

TEST(HeckeProduct, LengthAdditiveTranslations) {
    HeckeAlgebra H(datum("GL3"));
    const LatticePoint a{-1, 0, 2}, b{0, 1, 3};  // both antidominant
    EXPECT_EQ(H.multiply(T(H.translation(a)), T(H.translation(b))), T(H.translation(a + b)));
    const auto t = H.uniformizer({2, 1, 0});
    HeckeElement power = T(H.identity());
    for (int k = 1; k <= 4; ++k) {
        power = H.multiply(power, T(t));
        EXPECT_EQ(power, T(H.translation(k * t.lambda)));
    }
}

TEST(HeckeProduct, AssociativeOnRandomTriples) {
    std::mt19937 rng(2718);
    for (const std::string name : {"GL2", "GL3", "SO5"}) {
        HeckeAlgebra H(datum(name));
        for (int trial = 0; trial < 70; ++trial) {
            const auto a = T(random_element(H, rng, 1)) + T(random_element(H, rng, 1), q);
            const auto b = T(random_element(H, rng, 1));
            const auto c = T(random_element(H, rng, 1), q - 1);
            EXPECT_EQ(H.multiply(H.multiply(a, b), c), H.multiply(a, H.multiply(b, c))) << name;
        }
    }
}

TEST(HeckeProduct, InverseOfBasisElements) {
    std::mt19937 rng(99);
    HeckeAlgebra H(datum("GL3"));
    for (int trial = 0; trial < 30; ++trial) {
        const auto x = random_element(H, rng, 1);
        EXPECT_EQ(H.multiply(T(x), H.inverse_T(x)), T(H.identity()));
    }
}

TEST(Theta, BasicProperties) {
    HeckeAlgebra H(datum("GL3"));
    EXPECT_EQ(H.theta({0, 0, 0}), T(H.identity()));
    const LatticePoint anti{-2, 0, 1};
    EXPECT_EQ(H.theta(anti), T(H.translation(anti), v_power(-H.length(H.translation(anti)))));
    const LatticePoint lambda{1, -1, 0};
    EXPECT_EQ(H.theta_with(lambda, {-2, 0, 1}), H.theta_with(lambda, {-3, 0, 3}));
    EXPECT_EQ(H.theta_with(lambda, {-2, 0, 1}), H.theta_with(lambda, {-1, 1, 2}));
    EXPECT_EQ(H.theta_with(lambda, {-2, 0, 1}), H.theta(lambda));
    EXPECT_THROW(H.theta_with(lambda, {1, 0, 0}), std::invalid_argument);
}

TEST(Theta, MultiplicativeOnRandomPairs) {
    std::mt19937 rng(1234);
    for (const std::string name : {"GL2", "GL3", "SO5", "SL3"}) {
        HeckeAlgebra H(datum(name));
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = random_element(H, rng, 1).lambda, b = random_element(H, rng, 1).lambda;
            EXPECT_EQ(H.multiply(H.theta(a), H.theta(b)), H.theta(a + b)) << name;
        }
    }
}

TEST(Bernstein, CentralElements) {
    auto rd = datum("GL2");
    HeckeAlgebra H(rd);
    const auto z_center = H.bernstein_central(AlgebraElement::monomial({1, 1}));
    EXPECT_EQ(z_center, T(H.translation({-1, -1})));
    const auto z = H.bernstein_central(satake_basis_image(*rd, {1, 0}));
    EXPECT_TRUE(H.is_central(z));
    EXPECT_EQ(H.multiply(z, z_center), H.multiply(z_center, z));
    EXPECT_THROW(H.bernstein_central(AlgebraElement::monomial({1, 0})), std::invalid_argument);
}

TEST(Bernstein, OppositeConventionsAreNotCentral) {
    HeckeAlgebra H(datum("GL2"));
    const AlgebraElement x = satake_basis_image(RootDatum::builtin("GL2"), {1, 0});
    // opposite power of q in front of theta
    HeckeElement wrong_twist;
    for (const auto& [nu, c] : x.terms()) wrong_twist += H.theta(-nu).scaled(c.shifted(-H.datum().rho_pairing2(nu)));
    EXPECT_FALSE(H.is_central(wrong_twist));
    // opposite half-power in the definition of theta
    auto theta_flipped = [&](const LatticePoint& lambda) {
        const LatticePoint shift{-1, 1};
        const AffineElement t1 = H.translation(lambda + shift), t2 = H.translation(shift);
        return H.multiply(T(t1, v_power(H.length(t1) - H.length(t2))), H.inverse_T(t2));
    };
    HeckeElement wrong_theta;
    for (const auto& [nu, c] : x.terms()) wrong_theta += theta_flipped(-nu).scaled(c.shifted(H.datum().rho_pairing2(nu)));
    EXPECT_FALSE(H.is_central(wrong_theta));
}

TEST(Bernstein, CentralImagesCommuteWithEachOther) {
    auto rd = datum("GL3");
    HeckeAlgebra H(rd);
    SatakeEngine S(rd);
    const auto a = H.bernstein_central(S.basis_image({1, 0, 0}));
    const auto b = H.bernstein_central(S.basis_image({1, 1, 0}));
    EXPECT_EQ(H.multiply(a, b), H.multiply(b, a));
}

TEST(Bernstein, SphericalProjectionIsTheDoubleCoset) {
    for (const auto& [name, mu] : std::vector<std::pair<std::string, LatticePoint>>{
             {"GL2", {2, 0}}, {"GL3", {2, 1, 0}}, {"SO5", {1, 1}}, {"SL3", {1, 1}}, {"PGL3", {1, 0}}}) {
        auto rd = datum(name);
        HeckeAlgebra H(rd);
        SatakeEngine S(rd);
        const auto one_k = H.spherical_vector();
        for (const auto& lambda : dominant_weights_below(*rd, mu)) {
            const auto z = H.bernstein_central(S.basis_image(lambda));
            EXPECT_EQ(H.multiply(z, one_k), H.double_coset(lambda)) << name << " " << lambda.str();
            EXPECT_EQ(H.multiply(one_k, z), H.double_coset(lambda)) << name << " " << lambda.str();
        }
    }
}

TEST(SphericalVector, EigenvectorOfFiniteReflections) {
    HeckeAlgebra H(datum("GL2"));
    const auto one_k = H.spherical_vector();
    EXPECT_EQ(one_k.size(), 2u);
    HeckeAlgebra H3(datum("GL3"));
    const auto one_k3 = H3.spherical_vector();
    EXPECT_EQ(one_k3.size(), 6u);
    for (std::size_t i = 0; i < 2; ++i) {
        const auto s = H3.finite(H3.datum().simple_reflection(i));
        EXPECT_EQ(H3.multiply(T(s), one_k3), one_k3.scaled(q));
        EXPECT_EQ(H3.multiply(one_k3, T(s)), one_k3.scaled(q));
    }
}

TEST(SeedRelation, HoldsOnSmallClasses) {
    for (const auto& [name, mu] : std::vector<std::pair<std::string, LatticePoint>>{
             {"GL2", {1, 0}}, {"GL2", {2, 0}}, {"GL2", {1, 1}}, {"GL3", {1, 0, 0}}, {"GL3", {1, 1, 0}}, {"SO5", {1, 0}}}) {
        const auto r = check_seed_relation(ConjugacyClass::make(RootDatum::builtin(name), mu));
        EXPECT_TRUE(r.pass) << name << " " << mu.str();
        EXPECT_TRUE(r.central && r.spherical_match && r.powers_additive && r.orders_agree);
        EXPECT_TRUE(r.initial_segments_nonzero);
        EXPECT_GT(r.term_count, 0u);
    }
}

TEST(SeedRelation, EverySingleCoefficientPerturbationFails) {
    for (const auto& [name, mu] : std::vector<std::pair<std::string, LatticePoint>>{
             {"GL2", {1, 0}}, {"GL2", {2, 0}}, {"GL3", {1, 1, 0}}}) {
        const auto cc = ConjugacyClass::make(RootDatum::builtin(name), mu);
        HeckeAlgebra H(cc.datum);
        const int degree = spectral_polynomial(cc).poly.degree();
        for (int k = 0; k <= degree; ++k)
            for (int e : {-1, 1}) {
                const auto r = check_seed_relation(H, cc, Perturbation{k, e});
                EXPECT_FALSE(r.pass) << name << " k=" << k << " e=" << e;
            }
    }
}

TEST(SeedRelation, RejectsTwistedDatum) {
    EXPECT_THROW(check_seed_relation(ConjugacyClass::make(RootDatum::builtin("ResGL2"), {1, 0, 0, 0})), Unsupported);
}
