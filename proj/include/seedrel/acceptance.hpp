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

// The acceptance matrix and one runner per criterion. Comparisons are exact;
// only the wall-clock limits are tolerances.

#ifndef SEEDREL_ACCEPTANCE_HPP
#define SEEDREL_ACCEPTANCE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "affine_hecke.hpp"
#include "coset_oracle.hpp"
#include "root_datum.hpp"
#include "satake.hpp"
#include "spectral.hpp"

namespace seedrel::acceptance {

struct MatrixEntry {
    std::string datum;
    LatticePoint mu;

    std::string label() const { return datum + "(" + mu.str() + ")"; }
    ConjugacyClass cls() const { return ConjugacyClass::make(RootDatum::builtin(datum), mu); }
    bool split() const { return RootDatum::builtin(datum).is_split(); }
};

inline const std::vector<MatrixEntry>& matrix() {
    static const std::vector<MatrixEntry> m = {
        {"GL2", {1, 0}},       {"GL2", {2, 0}},    {"GL2", {1, 1}},   {"GL3", {1, 0, 0}},
        {"GL3", {1, 1, 0}},    {"GL3", {2, 1, 0}}, {"SL3", {1, 1}},   {"PGL3", {1, 0}},
        {"PGL3", {0, 1}},      {"SO5", {1, 0}},    {"SO5", {1, 1}},   {"Sp4", {1, 0}},
        {"ResGL2", {1, 0, 0, 0}},
    };
    return m;
}

struct NumericCase {
    OracleConfig cfg;
    MatrixEntry entry;
};

inline const std::vector<NumericCase>& numeric_cases() {
    static const std::vector<NumericCase> c = {
        {{2, 3, 3}, {"GL2", {1, 0}}},
        {{3, 2, 2}, {"GL3", {1, 0, 0}}},
    };
    return c;
}

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;
};

namespace detail {

inline CriterionResult timed(int id, std::string title, double limit, const std::function<bool(std::ostringstream&)>& body) {
    CriterionResult r{id, std::move(title), false, "", 0, limit};
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && r.seconds > limit) detail << (detail.tellp() > 0 ? "; " : "") << "over the time limit";
    r.pass = ok && r.seconds <= limit;
    r.detail = detail.str();
    return r;
}

inline SphericalElement f(const LatticePoint& lambda, LaurentScalar c = 1) { return SphericalElement::basis(lambda, c); }

inline void note(std::ostringstream& out, const std::string& s) { out << (out.tellp() > 0 ? "; " : "") << s; }

}  // namespace detail

// 1. The shape of the Hecke polynomial for GL2 (1,0) and GL3 (1,0,0), read on two paths:
// the computed polynomial against the hand-written one, and the Satake image of the
// hand-written one against the dotted spectral coefficients.
inline CriterionResult criterion_1() {
    return detail::timed(1, "Eichler-Shimura shape", 10.0, [](std::ostringstream& out) {
        using detail::f;
        const LaurentScalar q = q_power(1);
        const std::vector<std::pair<MatrixEntry, std::vector<SphericalElement>>> cases = {
            {{"GL2", {1, 0}}, {f({1, 1}, q), f({1, 0}, -1), f({0, 0})}},
            {{"GL3", {1, 0, 0}}, {f({1, 1, 1}, -q_power(3)), f({1, 1, 0}, q), f({1, 0, 0}, -1), f({0, 0, 0})}},
        };
        bool ok = true;
        for (const auto& [entry, expected] : cases) {
            const auto start = std::chrono::steady_clock::now();
            const ConjugacyClass cc = entry.cls();
            SatakeEngine engine(cc.datum);
            const HeckePolynomial h = hecke_polynomial(engine, cc);
            const SpectralPolynomial dotted = dotted_spectral_polynomial(cc);
            bool same = h.degree() + 1 == static_cast<int>(expected.size());
            for (std::size_t k = 0; same && k < expected.size(); ++k)
                same = h.coeffs[k] == expected[k] && engine.image(expected[k]) == dotted.poly.coeff(static_cast<int>(k));
            const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (!same) detail::note(out, entry.label() + " differs");
            if (s > 5.0) detail::note(out, entry.label() + " over 5 s");
            ok = ok && same && s <= 5.0;
        }
        if (ok) out << "exact match on both paths";
        return ok;
    });
}

// 2. X = e^{N mu} kills the dotted spectral polynomial on the whole matrix.
inline CriterionResult criterion_2() {
    return detail::timed(2, "annihilation", 30.0, [](std::ostringstream& out) {
        std::size_t passed = 0;
        for (const auto& e : matrix()) {
            if (check_annihilation(e.cls()).pass)
                ++passed;
            else
                detail::note(out, e.label() + " nonzero");
        }
        out << passed << "/" << matrix().size() << " entries";
        return passed == matrix().size();
    });
}

// 3. The seed relation in the Iwahori-Hecke algebra on every split entry.
inline CriterionResult criterion_3() {
    return detail::timed(3, "seed relation", 300.0, [](std::ostringstream& out) {
        std::size_t passed = 0, total = 0;
        for (const auto& e : matrix()) {
            if (!e.split()) continue;
            ++total;
            const SeedReport r = check_seed_relation(e.cls());
            if (r.pass)
                ++passed;
            else
                detail::note(out, e.label() + " fails");
        }
        out << passed << "/" << total << " split entries";
        return passed == total;
    });
}

// 4. The Levi form: proper Levis for GL3 (1,0,0) and (1,1,0), and the torus case
// reproducing the annihilation value.
inline CriterionResult criterion_4() {
    return detail::timed(4, "Levi annihilation", 60.0, [](std::ostringstream& out) {
        bool ok = true;
        for (const MatrixEntry& e : {MatrixEntry{"GL3", {1, 0, 0}}, MatrixEntry{"GL3", {1, 1, 0}}}) {
            const BultelReport r = check_bultel(e.cls());
            const bool good = r.pass && !r.levi_is_torus;
            if (!good) detail::note(out, e.label() + (r.levi_is_torus ? " has a torus Levi" : " fails"));
            ok = ok && good;
        }
        std::size_t torus = 0;
        for (const auto& e : matrix()) {
            if (!e.split()) continue;
            const BultelReport r = check_bultel(e.cls());
            if (!r.pass) {
                detail::note(out, e.label() + " fails");
                ok = false;
            }
            if (r.levi_is_torus) {
                ++torus;
                if (r.torus_value != check_annihilation(e.cls()).value) {
                    detail::note(out, e.label() + " torus value differs from annihilation");
                    ok = false;
                }
            }
        }
        if (torus == 0) {
            detail::note(out, "no torus Levi in the matrix");
            ok = false;
        }
        detail::note(out, std::to_string(torus) + " torus-Levi entries agree with annihilation");
        return ok;
    });
}

// 5. c(mu) = 1, c(nu) in Z_{>=0}[q], support = saturated set, dot-covariance.
inline CriterionResult criterion_5() {
    return detail::timed(5, "Satake coefficient laws", 60.0, [](std::ostringstream& out) {
        bool ok = true;
        std::size_t nonpolynomial = 0;
        for (const auto& e : matrix()) {
            if (!e.split()) continue;
            SatakeEngine engine(RootDatum::builtin(e.datum));
            const SatakeCoefficientReport r = satake_coefficient_report(engine, e.mu);
            const bool covariant = is_weyl_invariant(engine.datum(), engine.basis_image(e.mu), true);
            if (!r.leading_is_one) detail::note(out, e.label() + " leading coefficient");
            if (!r.support_is_saturated_set) detail::note(out, e.label() + " support");
            if (!covariant) detail::note(out, e.label() + " dot-covariance");
            if (!r.nonnegative_polynomials) {
                ++nonpolynomial;
                for (const auto& [nu, c] : r.failures) detail::note(out, e.label() + " c(" + nu.str() + ")=" + c.str());
            }
            ok = ok && r.leading_is_one && r.support_is_saturated_set && covariant && r.nonnegative_polynomials;
        }
        if (nonpolynomial) detail::note(out, std::to_string(nonpolynomial) + " entries outside Z>=0[q]");
        return ok;
    });
}

// 6. Coset counts, u cardinalities and the numeric check against the oracle.
inline CriterionResult criterion_6() {
    return detail::timed(6, "oracle equivalence", 180.0, [](std::ostringstream& out) {
        bool ok = true;
        for (int n : {2, 3})
            for (std::int64_t p : {2, 3}) {
                CosetOracle oracle(OracleConfig{n, p, 2});
                SatakeEngine engine(RootDatum::builtin("GL" + std::to_string(n)));
                if (!satake_counts_agree(oracle, engine, -1, 2)) {
                    detail::note(out, "counts differ for GL" + std::to_string(n) + " p=" + std::to_string(p));
                    ok = false;
                }
            }
        std::size_t u_checked = 0;
        for (const auto& e : matrix()) {
            if (e.datum != "GL2" && e.datum != "GL3") continue;
            const RootDatum rd = RootDatum::builtin(e.datum);
            const HeckeAlgebra H(rd);
            for (std::int64_t p : {2, 3}) {
                const OracleConfig cfg{static_cast<int>(rd.rank()), p, 2};
                const auto image = u_apply(cfg, e.mu, Coset::from_matrix(ScaledMatrix::identity(cfg.n), p));
                const auto by_length = seedrel::detail::checked_pow(p, H.length(H.uniformizer(e.mu)));
                const auto by_rho = seedrel::detail::checked_pow(p, rd.rho_pairing2(e.mu));
                if (static_cast<std::int64_t>(image.size()) != by_length || by_length != by_rho) {
                    detail::note(out, e.label() + " u cardinality");
                    ok = false;
                }
                ++u_checked;
            }
        }
        for (const auto& c : numeric_cases()) {
            const NumericReport r = verify_numeric(c.cfg, c.entry.cls());
            detail::note(out, c.entry.label() + " p=" + std::to_string(c.cfg.p) + ": " + std::to_string(r.cosets_tested) +
                                  " cosets " + (r.pass ? "zero" : "NONZERO"));
            ok = ok && r.pass;
        }
        detail::note(out, std::to_string(u_checked) + " u cardinalities");
        return ok;
    });
}

// 7. deg H = |W mu| for minuscule entries, deg H >= #saturated set everywhere.
inline CriterionResult criterion_7() {
    return detail::timed(7, "degree statements", 30.0, [](std::ostringstream& out) {
        bool ok = true;
        for (const auto& e : matrix()) {
            const ConjugacyClass cc = e.cls();
            const DegreeReport d = degree_of_H(cc);
            if (is_minuscule(*cc.datum, e.mu) && d.degree != static_cast<int>(weyl_orbit(*cc.datum, e.mu).size())) {
                detail::note(out, e.label() + " degree differs from the orbit size");
                ok = false;
            }
            if (d.degree < static_cast<int>(d.bound)) ok = false;
        }
        const DegreeReport strict = degree_of_H(MatrixEntry{"GL3", {2, 1, 0}}.cls());
        detail::note(out, "GL3(2,1,0): degree " + std::to_string(strict.degree) + " vs " + std::to_string(strict.bound) +
                              " lattice points");
        return ok && strict.degree == 8 && strict.bound == 7;
    });
}

// 8. Every single-coefficient perturbation by q^{+-1} breaks checks (2), (3), (4) and (6).
inline CriterionResult criterion_8() {
    return detail::timed(8, "negative controls", 300.0, [](std::ostringstream& out) {
        std::size_t tried = 0, caught = 0;
        auto record = [&](bool still_passes, const std::string& what) {
            ++tried;
            if (still_passes)
                detail::note(out, what + " survives");
            else
                ++caught;
        };
        for (const auto& e : matrix()) {
            const ConjugacyClass cc = e.cls();
            const int degree = spectral_polynomial(cc).poly.degree();
            for (int k = 0; k <= degree; ++k)
                for (int q_exp : {1, -1}) {
                    const Perturbation pert{k, q_exp};
                    const std::string tag = e.label() + " k=" + std::to_string(k) + " q^" + std::to_string(q_exp);
                    if (dotted_spectral_polynomial(cc).poly.coeff(k).is_zero()) continue;
                    record(check_annihilation(cc, pert).pass, "annihilation " + tag);
                    if (!e.split()) continue;
                    record(check_seed_relation(cc, pert).pass, "seed " + tag);
                    record(check_bultel(cc, pert).pass, "Levi " + tag);
                }
        }
        for (const auto& c : numeric_cases()) {
            const ConjugacyClass cc = c.entry.cls();
            OracleConfig small = c.cfg;
            small.radius = 1;
            for (int k = 0; k <= spectral_polynomial(cc).poly.degree(); ++k)
                for (int q_exp : {1, -1})
                    record(verify_numeric(small, cc, Perturbation{k, q_exp}).pass,
                           "numeric " + c.entry.label() + " k=" + std::to_string(k) + " q^" + std::to_string(q_exp));
        }
        detail::note(out, std::to_string(caught) + "/" + std::to_string(tried) + " perturbations detected");
        return tried > 0 && caught == tried;
    });
}

// 9. Randomized structural identities.
inline CriterionResult criterion_9(std::uint64_t seed = 20261015, int per_property = 200) {
    return detail::timed(9, "structural suites", 300.0, [seed, per_property](std::ostringstream& out) {
        std::mt19937_64 rng(seed);
        auto pick = [&](std::size_t n) { return static_cast<std::size_t>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)); };
        auto small = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
        auto random_point = [&](std::size_t rank, int r) {
            LatticePoint x(rank);
            for (std::size_t i = 0; i < rank; ++i) x[i] = small(-r, r);
            return x;
        };
        const std::vector<std::string> hecke_data = {"GL2", "GL3", "SL3", "PGL3", "SO5", "Sp4"};
        std::map<std::string, std::unique_ptr<HeckeAlgebra>> algebras;
        std::map<std::string, std::unique_ptr<SatakeEngine>> engines;
        auto algebra = [&](const std::string& name) -> HeckeAlgebra& {
            auto& slot = algebras[name];
            if (!slot) slot = std::make_unique<HeckeAlgebra>(RootDatum::builtin(name));
            return *slot;
        };
        auto engine = [&](const std::string& name) -> SatakeEngine& {
            auto& slot = engines[name];
            if (!slot) slot = std::make_unique<SatakeEngine>(RootDatum::builtin(name));
            return *slot;
        };
        auto random_element = [&](HeckeAlgebra& H) {
            HeckeElement x;
            for (int t = 0; t < 2; ++t)
                x.add_term({random_point(H.datum().rank(), 1), pick(H.datum().weyl_size())}, v_power(2 * small(-1, 1)) * small(1, 3));
            return x;
        };
        const LaurentScalar q = q_power(1);
        std::map<std::string, std::pair<int, int>> tally;
        auto count = [&](const std::string& property, bool ok) {
            auto& [good, all] = tally[property];
            ++all;
            good += ok ? 1 : 0;
        };
        for (int i = 0; i < per_property; ++i) {
            HeckeAlgebra& H = algebra(hecke_data[pick(hecke_data.size())]);
            const auto& gens = H.simple_reflections();
            const AffineElement s = gens[pick(gens.size())];
            const HeckeElement ts = HeckeElement::basis(s);
            count("quadratic", H.multiply(ts, ts) == ts.scaled(q - 1) + HeckeElement::basis(H.identity(), q));

            // braid relation for a pair of generators whose product has finite order
            for (int attempt = 0; attempt < 20; ++attempt) {
                const AffineElement a = gens[pick(gens.size())], b = gens[pick(gens.size())];
                if (a == b) continue;
                int m = 1;
                AffineElement ab = H.multiply(a, b), power = ab;
                while (!(power == H.identity()) && m < 7) {
                    power = H.multiply(power, ab);
                    ++m;
                }
                if (m >= 7) continue;
                HeckeElement left = HeckeElement::basis(H.identity()), right = left;
                for (int k = 0; k < m; ++k) {
                    left = H.multiply(left, HeckeElement::basis(k % 2 ? b : a));
                    right = H.multiply(right, HeckeElement::basis(k % 2 ? a : b));
                }
                count("braid", left == right);
                break;
            }

            const HeckeElement x = random_element(H), y = random_element(H), z = random_element(H);
            count("associativity", H.multiply(H.multiply(x, y), z) == H.multiply(x, H.multiply(y, z)));

            const LatticePoint l1 = random_point(H.datum().rank(), 2), l2 = random_point(H.datum().rank(), 2);
            count("theta", H.multiply(H.theta(l1), H.theta(l2)) == H.theta(l1 + l2));
        }
        const std::vector<std::string> central_data = {"GL2", "GL3", "SL3", "SO5"};
        for (int i = 0; i < per_property; ++i) {
            const std::string name = central_data[pick(central_data.size())];
            HeckeAlgebra& H = algebra(name);
            SatakeEngine& S = engine(name);
            const LatticePoint a = dominant_rep(H.datum(), random_point(H.datum().rank(), 1)).first;
            const LatticePoint b = dominant_rep(H.datum(), random_point(H.datum().rank(), 1)).first;
            const HeckeElement za = H.bernstein_central(S.basis_image(a), false);
            const HeckeElement zb = H.bernstein_central(S.basis_image(b), false);
            count("centrality", H.is_central(za) && H.multiply(za, zb) == H.multiply(zb, za));
        }
        const std::vector<std::string> satake_data = {"GL2", "GL3", "SL3", "PGL3", "SO5", "Sp4", "G2", "GL4"};
        for (int i = 0; i < per_property; ++i) {
            const std::string name = satake_data[pick(satake_data.size())];
            SatakeEngine& S = engine(name);
            const RootDatum& rd = S.datum();
            SphericalElement h(rd.rank());
            for (int t = 0; t < 2; ++t)
                h = h + detail::f(dominant_rep(rd, random_point(rd.rank(), 1)).first, v_power(2 * small(0, 2)) * small(-2, 2));
            count("Satake round trip", S.inverse(S.image(h)) == h);

            const LatticePoint lambda = dominant_rep(rd, random_point(rd.rank(), 2)).first;
            std::int64_t total = 0;
            for (const auto& [nu, m] : dominant_multiplicities(rd, lambda))
                total += m * static_cast<std::int64_t>(weyl_orbit(rd, nu).size());
            count("Weyl dimension", total == weyl_dimension(rd, lambda));
        }
        bool ok = true;
        int instances = 0;
        for (const auto& [property, t] : tally) {
            detail::note(out, property + " " + std::to_string(t.first) + "/" + std::to_string(t.second));
            ok = ok && t.first == t.second;
            instances += t.second;
        }
        detail::note(out, std::to_string(instances) + " instances");
        return ok && instances >= per_property;
    });
}

inline std::vector<CriterionResult> run_all() {
    return {criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(),
            criterion_6(), criterion_7(), criterion_8(), criterion_9()};
}

}  // namespace seedrel::acceptance

#endif  // SEEDREL_ACCEPTANCE_HPP
