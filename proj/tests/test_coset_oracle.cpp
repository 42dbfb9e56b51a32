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

#include "seedrel/coset_oracle.hpp"

using namespace seedrel;

namespace seedrel {
void PrintTo(const Coset& x, std::ostream* os) { *os << x.str(); }
}  // namespace seedrel

namespace {

OracleConfig cfg(int n, std::int64_t p, int radius = 2) { return OracleConfig{n, p, radius}; }

// |K pi^lambda K / K| = q^{<lambda,2rho>} W(q^-1) / W_lambda(q^-1), computed from Weyl group lengths.
Rational double_coset_size(const RootDatum& rd, const LatticePoint& lambda, std::int64_t p) {
    Rational total(0), stab(0);
    for (std::size_t w = 0; w < rd.weyl_size(); ++w) {
        const Rational term(1, detail::checked_pow(p, rd.weyl()[w].length));
        total += term;
        if (rd.act(w, lambda) == lambda) stab += term;
    }
    return total / stab * Rational(detail::checked_pow(p, rd.rho_pairing2(lambda)));
}

}  // namespace

TEST(CosetOracle, HermiteFormIsCanonical) {
    const std::int64_t p = 3;
    ScaledMatrix a{2, 0, {3, 1, 0, 1}};
    ScaledMatrix b{2, 0, {3, 4, 0, 1}};   // column 2 shifted by column 1
    ScaledMatrix c{2, 0, {1, 3, 1, 0}};   // span{(1,1), (3,0)}
    const Coset x = Coset::from_matrix(a, p);
    EXPECT_EQ(x, Coset::from_matrix(b, p));
    EXPECT_EQ(Coset::from_matrix(c, p), x);
    EXPECT_NE(Coset::from_matrix(ScaledMatrix{2, 0, {1, 0, 0, 3}}, p), x);
    EXPECT_EQ(x.iwasawa(), (LatticePoint{1, 0}));
    const Coset scaled = Coset::from_matrix(ScaledMatrix{2, 2, {9, 0, 0, 3}}, p);
    EXPECT_EQ(scaled.shift(), 3);
    EXPECT_EQ(scaled.iwasawa(), (LatticePoint{4, 3}));
}

TEST(CosetOracle, HermiteFormUnderRandomUnimodularChange) {
    const std::int64_t p = 2;
    const ScaledMatrix base{3, 0, {4, 1, 3, 0, 2, 1, 0, 0, 8}};
    const Coset x = Coset::from_matrix(base, p);
    const std::vector<ScaledMatrix> units = {
        {3, 0, {1, 5, 0, 0, 1, 0, 0, 0, 1}},
        {3, 0, {0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {3, 0, {1, 0, 0, 7, 1, 0, -3, 2, 1}},
        {3, 0, {3, 0, 0, 0, 1, 0, 0, 0, 5}},
    };
    ScaledMatrix g = base;
    for (int round = 0; round < 8; ++round) {
        g = g * units[static_cast<std::size_t>(round) % units.size()];
        EXPECT_EQ(Coset::from_matrix(g, p), x) << round;
    }
}

TEST(CosetOracle, DoubleCosetCounts) {
    EXPECT_EQ(double_coset_decompose(cfg(2, 3), {1, 0}).size(), 4u);
    EXPECT_EQ(double_coset_decompose(cfg(2, 3), {1, 1}).size(), 1u);
    EXPECT_EQ(double_coset_decompose(cfg(3, 2), {1, 0, 0}).size(), 7u);
    EXPECT_THROW(double_coset_decompose(cfg(2, 3), {0, 1}), std::invalid_argument);
}

TEST(CosetOracle, DoubleCosetSizesMatchPoincareFormula) {
    for (int n : {2, 3})
        for (std::int64_t p : {2, 3}) {
            const RootDatum rd = RootDatum::builtin("GL" + std::to_string(n));
            for (const auto& lambda : detail::dominant_grid(n, -1, 2)) {
                if (n == 3 && p == 3 && lambda[0] - lambda[2] > 2) continue;
                const auto cosets = double_coset_decompose(cfg(n, p), lambda);
                EXPECT_EQ(Rational(static_cast<std::int64_t>(cosets.size())), double_coset_size(rd, lambda, p))
                    << lambda.str() << " p=" << p;
            }
        }
}

TEST(CosetOracle, RawSatakeCounts) {
    EXPECT_EQ(satake_count(cfg(2, 3), {1, 0}, {1, 0}), 3);
    EXPECT_EQ(satake_count(cfg(2, 3), {1, 0}, {0, 1}), 1);
    EXPECT_EQ(satake_count(cfg(3, 2), {1, 0, 0}, {1, 0, 0}), 4);
    EXPECT_EQ(satake_count(cfg(3, 2), {1, 0, 0}, {0, 1, 0}), 2);
    EXPECT_EQ(satake_count(cfg(3, 2), {1, 0, 0}, {0, 0, 1}), 1);
}

TEST(CosetOracle, CountsAgreeWithSatakeAtQEqualsP) {
    for (int n : {2, 3})
        for (std::int64_t p : {2, 3}) {
            CosetOracle oracle(cfg(n, p));
            SatakeEngine engine(RootDatum::builtin("GL" + std::to_string(n)));
            EXPECT_TRUE(satake_counts_agree(oracle, engine, -1, n == 3 && p == 3 ? 1 : 2)) << n << " " << p;
        }
}

TEST(CosetOracle, ConvolutionAgreesWithSatakeProduct) {
    for (int n : {2, 3}) {
        CosetOracle oracle(cfg(n, 2));
        SatakeEngine engine(RootDatum::builtin("GL" + std::to_string(n)));
        EXPECT_TRUE(convolution_agrees(oracle, engine)) << n;
    }
    CosetOracle oracle(cfg(2, 3));
    EXPECT_EQ(oracle.convolution_coefficient({1, 0}, {1, 0}, {2, 0}), 1);
    EXPECT_EQ(oracle.convolution_coefficient({1, 0}, {1, 0}, {1, 1}), 4);  // q + 1
}

TEST(CosetOracle, IwahoriIndexMatchesLength) {
    for (int n : {2, 3}) {
        HeckeAlgebra H(RootDatum::builtin("GL" + std::to_string(n)));
        EXPECT_TRUE(iwahori_indices_agree(cfg(n, 2), H)) << n;
    }
    // pi^{(1,0)} s has index p^2 and pi^{(0,1)} s normalizes I
    EXPECT_EQ(iwahori_index_exponent({1, 0}, {1, 0}), 2);
    EXPECT_EQ(iwahori_index_exponent({0, 1}, {1, 0}), 0);
}

TEST(CosetOracle, OppositeDictionaryFailsIndexCheck) {
    HeckeAlgebra H(RootDatum::builtin("GL2"));
    const AffineElement wrong{LatticePoint{1, 0}, H.datum().index_of(IntMatrix::permutation({1, 0}))};
    EXPECT_NE(iwahori_index_exponent({1, 0}, {1, 0}), H.length(wrong));
}

TEST(CosetOracle, UnipotentApplicationSizes) {
    const Coset base = Coset::from_matrix(ScaledMatrix::identity(2), 3);
    EXPECT_EQ(u_apply(cfg(2, 3), {1, 0}, base).size(), 3u);
    const Coset base3 = Coset::from_matrix(ScaledMatrix::identity(3), 2);
    const auto image = u_apply(cfg(3, 2), {1, 0, 0}, base3);
    EXPECT_EQ(image.size(), 4u);
    EXPECT_EQ(std::set<Coset>(image.begin(), image.end()).size(), 4u);
    for (const auto& y : image) EXPECT_EQ(y.iwasawa(), (LatticePoint{1, 0, 0}));
}

TEST(CosetOracle, NumericCheckPasses) {
    const auto gl2 = std::make_shared<const RootDatum>(RootDatum::builtin("GL2"));
    const NumericReport r = verify_numeric(cfg(2, 3, 3), ConjugacyClass::make(gl2, {1, 0}));
    EXPECT_TRUE(r.pass);
    EXPECT_GT(r.cosets_tested, 100u);
    EXPECT_TRUE(r.satake_counts_match && r.convolution_matches && r.iwahori_indices_match && r.u_counts_match);

    const auto gl3 = std::make_shared<const RootDatum>(RootDatum::builtin("GL3"));
    EXPECT_TRUE(verify_numeric(cfg(3, 2, 2), ConjugacyClass::make(gl3, {1, 0, 0})).pass);
    EXPECT_TRUE(verify_numeric(cfg(2, 2, 2), ConjugacyClass::make(gl2, {2, 0})).pass);
    EXPECT_TRUE(verify_numeric(cfg(2, 3, 2), ConjugacyClass::make(gl2, {1, 1})).pass);
}

TEST(CosetOracle, NumericCheckDetectsPerturbation) {
    const auto gl2 = std::make_shared<const RootDatum>(RootDatum::builtin("GL2"));
    const NumericReport r = verify_numeric(cfg(2, 3, 1), ConjugacyClass::make(gl2, {1, 0}), true);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.failures, r.cosets_tested);
    ASSERT_TRUE(r.first_failure.has_value());
}

TEST(CosetOracle, RejectsUnsupportedInput) {
    const auto gl2 = std::make_shared<const RootDatum>(RootDatum::builtin("GL2"));
    EXPECT_THROW(verify_numeric(cfg(2, 3, 1), ConjugacyClass::make(gl2, {2, 0})), OracleError);
    EXPECT_THROW(verify_numeric(cfg(2, 3, 5), ConjugacyClass::make(gl2, {1, 0})), OracleError);
    EXPECT_THROW(verify_numeric(cfg(2, 5, 2), ConjugacyClass::make(gl2, {1, 0})), OracleError);
    const auto sl2 = std::make_shared<const RootDatum>(RootDatum::builtin("SL2"));
    EXPECT_THROW(verify_numeric(cfg(2, 3, 2), ConjugacyClass::make(sl2, {1})), Unsupported);
}
