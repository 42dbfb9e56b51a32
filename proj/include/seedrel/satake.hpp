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

/*
   Dotted Satake transform of the spherical Hecke algebra into Z[v^{+-1}][X_*].

   The untwisted transform of the basis element f_lambda is
       S(f_lambda) = q^{<lambda,rho>} sum_{nu <= lambda} (K^{-1})_{lambda,nu}(q^{-1}) chi_nu
   with K the Kostka-Foulkes matrix, and the dotted transform applies
   eta(e^nu) = q^{-<nu,rho>} e^nu on top. The inverse runs greedy elimination
   from the highest dominant exponent down.
*/

#ifndef SEEDREL_SATAKE_HPP
#define SEEDREL_SATAKE_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "root_datum.hpp"
#include "spectral.hpp"

namespace seedrel {

/// Element of the spherical Hecke algebra in the basis f_lambda = 1_{K pi^lambda K}.
class SphericalElement {
   public:
    using Terms = std::map<LatticePoint, LaurentScalar>;

    explicit SphericalElement(std::size_t rank = 0) : rank_(rank) {}
    static SphericalElement basis(const LatticePoint& lambda, const LaurentScalar& c = 1) {
        SphericalElement h(lambda.size());
        h.add_term(lambda, c);
        return h;
    }

    std::size_t rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentScalar coeff(const LatticePoint& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? LaurentScalar() : it->second;
    }
    void add_term(const LatticePoint& lambda, const LaurentScalar& c) {
        if (lambda.size() != rank_) throw std::invalid_argument("rank mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    SphericalElement& operator+=(const SphericalElement& o) {
        for (const auto& [l, c] : o.terms_) add_term(l, c);
        return *this;
    }
    SphericalElement& operator-=(const SphericalElement& o) {
        for (const auto& [l, c] : o.terms_) add_term(l, -c);
        return *this;
    }
    friend SphericalElement operator+(SphericalElement a, const SphericalElement& b) { return a += b; }
    friend SphericalElement operator-(SphericalElement a, const SphericalElement& b) { return a -= b; }
    SphericalElement scaled(const LaurentScalar& s) const {
        SphericalElement r(rank_);
        for (const auto& [l, c] : terms_) r.add_term(l, c * s);
        return r;
    }
    bool has_integral_q_powers() const {
        for (const auto& [l, c] : terms_)
            if (!c.all_exponents_even()) return false;
        return true;
    }
    friend bool operator==(const SphericalElement&, const SphericalElement&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [l, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*f[" + l.str() + "]";
        }
        return s;
    }

   private:
    std::size_t rank_;
    Terms terms_;
};

/// Cached Satake computations for one split datum.
class SatakeEngine {
   public:
    static constexpr std::size_t kMaxEliminationSteps = 100000;

    explicit SatakeEngine(std::shared_ptr<const RootDatum> rd) : owner_(std::move(rd)), rd_(*owner_), table_(rd_) {
        if (!rd_.is_split()) throw Unsupported("Satake transform over a non-split datum is not supported");
    }
    explicit SatakeEngine(const RootDatum& rd) : SatakeEngine(std::make_shared<const RootDatum>(rd)) {}

    const RootDatum& datum() const { return rd_; }

    /// Dotted transform of f_lambda.
    const AlgebraElement& basis_image(const LatticePoint& lambda) {
        if (auto it = images_.find(lambda); it != images_.end()) return it->second;
        if (!is_dominant(rd_, lambda)) throw std::invalid_argument("cocharacter is not dominant: " + lambda.str());
        const auto below = dominant_weights_below(rd_, lambda);
        // row lambda of K^{-1}, solved along decreasing height
        std::map<LatticePoint, TPoly> row;
        row[lambda] = 1;
        for (std::size_t j = 1; j < below.size(); ++j) {
            const LatticePoint& nu = below[j];
            TPoly x;
            for (std::size_t i = 0; i < j; ++i) {
                auto it = row.find(below[i]);
                if (it == row.end()) continue;
                x -= it->second * kostka(below[i], nu);
            }
            if (!x.is_zero()) row[nu] = x;
        }
        AlgebraElement untwisted(rd_.rank());
        for (const auto& [nu, x] : row) untwisted += character(nu).scaled(t_to_inverse_q(x));
        untwisted = untwisted.scaled(v_power(rd_.rho_pairing2(lambda)));
        AlgebraElement dotted(rd_.rank());
        for (const auto& [nu, c] : untwisted.terms()) dotted.add_term(nu, c.shifted(-rd_.rho_pairing2(nu)));
        if (dotted.coeff(lambda) != LaurentScalar(1)) throw std::logic_error("leading Satake coefficient is not 1");
        const auto sat = saturated_set(rd_, lambda);
        for (const auto& [nu, c] : dotted.terms())
            if (!sat.count(nu)) throw std::logic_error("Satake image leaves the saturated set at " + nu.str());
        return images_.emplace(lambda, std::move(dotted)).first->second;
    }

    AlgebraElement image(const SphericalElement& h) {
        AlgebraElement out(rd_.rank());
        for (const auto& [lambda, c] : h.terms()) out += basis_image(lambda).scaled(c);
        return out;
    }

    /// The spherical element whose dotted transform is x.
    SphericalElement inverse(AlgebraElement x) {
        if (x.rank() != rd_.rank()) throw std::invalid_argument("rank mismatch");
        if (!is_weyl_invariant(rd_, x, true)) throw std::invalid_argument("element is not dot-Weyl-invariant: " + x.str());
        SphericalElement h(rd_.rank());
        for (std::size_t step = 0; !x.is_zero(); ++step) {
            if (step > kMaxEliminationSteps) throw std::runtime_error("inverse Satake did not terminate");
            const LatticePoint* top = nullptr;
            for (const auto& [nu, c] : x.terms()) {
                if (!is_dominant(rd_, nu)) continue;
                if (!top || rd_.rho_pairing2(nu) > rd_.rho_pairing2(*top) ||
                    (rd_.rho_pairing2(nu) == rd_.rho_pairing2(*top) && nu > *top))
                    top = &nu;
            }
            if (!top) throw std::logic_error("dot-invariant element without dominant exponent");
            const LatticePoint lambda = *top;
            const LaurentScalar c = x.coeff(lambda);
            h.add_term(lambda, c);
            x -= basis_image(lambda).scaled(c);
        }
        return h;
    }

    /// Product in the spherical algebra, computed through the transform.
    SphericalElement multiply(const SphericalElement& a, const SphericalElement& b) {
        return inverse(image(a) * image(b));
    }

    TPoly kostka(const LatticePoint& lambda, const LatticePoint& nu) {
        auto key = std::make_pair(lambda, nu);
        if (auto it = kostka_.find(key); it != kostka_.end()) return it->second;
        TPoly k = detail::kostka_foulkes_with(rd_, table_, lambda, nu);
        kostka_.emplace(std::move(key), k);
        return k;
    }

    const AlgebraElement& character(const LatticePoint& nu) {
        if (auto it = characters_.find(nu); it != characters_.end()) return it->second;
        return characters_.emplace(nu, weyl_character(rd_, nu)).first->second;
    }

   private:
    std::shared_ptr<const RootDatum> owner_;
    const RootDatum& rd_;
    detail::PartitionTable table_;
    std::map<std::pair<LatticePoint, LatticePoint>, TPoly> kostka_;
    std::map<LatticePoint, AlgebraElement> characters_;
    std::map<LatticePoint, AlgebraElement> images_;
};

inline AlgebraElement satake_basis_image(const RootDatum& rd, const LatticePoint& lambda) {
    SatakeEngine e(rd);
    return e.basis_image(lambda);
}

inline SphericalElement inverse_satake(const RootDatum& rd, const AlgebraElement& x) {
    SatakeEngine e(rd);
    return e.inverse(x);
}

/// Properties of the coefficients c(nu) of the dotted image of f_lambda.
struct SatakeCoefficientReport {
    bool leading_is_one = false;
    bool support_is_saturated_set = false;
    bool integral_q_powers = false;
    bool nonnegative_polynomials = false;  // every c(nu) in Z_{>=0}[q]
    bool positive_at_primes = false;       // c(nu)(p) > 0 for p = 2, 3
    std::vector<std::pair<LatticePoint, LaurentScalar>> failures;
};

inline SatakeCoefficientReport satake_coefficient_report(SatakeEngine& engine, const LatticePoint& lambda) {
    const RootDatum& rd = engine.datum();
    const AlgebraElement& img = engine.basis_image(lambda);
    SatakeCoefficientReport r;
    r.leading_is_one = img.coeff(lambda) == LaurentScalar(1);
    const auto sat = saturated_set(rd, lambda);
    r.support_is_saturated_set = img.size() == sat.size();
    for (const auto& nu : sat) r.support_is_saturated_set = r.support_is_saturated_set && !img.coeff(nu).is_zero();
    r.integral_q_powers = r.nonnegative_polynomials = r.positive_at_primes = true;
    for (const auto& [nu, c] : img.terms()) {
        const bool even = c.all_exponents_even();
        const bool poly = c.low_degree() >= 0 && c.coefficients_nonnegative();
        bool positive = even;
        if (even)
            for (std::int64_t p : {2, 3}) positive = positive && evaluate_at_q(c, p) > Rational(0);
        r.integral_q_powers = r.integral_q_powers && even;
        r.nonnegative_polynomials = r.nonnegative_polynomials && even && poly;
        r.positive_at_primes = r.positive_at_primes && positive;
        if (!(even && poly && positive)) r.failures.emplace_back(nu, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Hecke polynomial in the spherical basis

struct HeckePolynomial {
    std::vector<SphericalElement> coeffs;  // coeffs[k] multiplies X^k
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

inline HeckePolynomial hecke_polynomial(SatakeEngine& engine, const ConjugacyClass& cc) {
    if (!cc.datum->is_split())
        throw Unsupported("inverse Satake over a twisted datum is not supported; use the spectral form");
    HeckePolynomial h;
    const SpectralPolynomial dotted = dotted_spectral_polynomial(cc);
    for (const auto& c : dotted.poly.coefficients()) {
        SphericalElement s = engine.inverse(c);
        if (!s.has_integral_q_powers())
            throw std::logic_error("Hecke polynomial coefficient has a half-integral power of q: " + s.str());
        h.coeffs.push_back(std::move(s));
    }
    return h;
}

inline HeckePolynomial hecke_polynomial(const ConjugacyClass& cc) {
    if (!cc.datum->is_split())
        throw Unsupported("inverse Satake over a twisted datum is not supported; use the spectral form");
    SatakeEngine engine(cc.datum);
    return hecke_polynomial(engine, cc);
}

// ---------------------------------------------------------------------------
// Levi subgroups

/// Standard Levi: the simple roots orthogonal to mu, on the same lattices.
struct LeviDatum {
    std::vector<std::size_t> simple_indices;
    std::shared_ptr<const RootDatum> datum;
};

inline LeviDatum levi_of(const RootDatum& rd, const LatticePoint& mu) {
    LeviDatum l;
    std::string label;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
        if (pairing(mu, rd.simple_roots()[i]) != 0) continue;
        l.simple_indices.push_back(i);
        label += (label.empty() ? "" : ",") + std::to_string(i);
    }
    l.datum = std::make_shared<const RootDatum>(rd.sub_datum(l.simple_indices, rd.name() + ".L{" + label + "}"));
    return l;
}

inline LeviDatum levi_with(const RootDatum& rd, const std::vector<std::size_t>& simple_indices) {
    std::string label;
    for (std::size_t i : simple_indices) label += (label.empty() ? "" : ",") + std::to_string(i);
    return LeviDatum{simple_indices,
                     std::make_shared<const RootDatum>(rd.sub_datum(simple_indices, rd.name() + ".L{" + label + "}"))};
}

/// Two-stage transform S_L^G: the G-image read back through the L-transform.
inline SphericalElement levi_satake(SatakeEngine& g, SatakeEngine& l, const SphericalElement& h) {
    if (g.datum().rank() != l.datum().rank()) throw std::invalid_argument("Levi has a different lattice");
    return l.inverse(g.image(h));
}

struct BultelReport {
    LatticePoint norm;
    std::string levi;
    bool levi_is_torus = false;
    SphericalElement value;  // H(g_mu) in the Levi spherical algebra
    AlgebraElement torus_value;
    bool pass = false;
};

/// Evaluates the Levi-transformed Hecke polynomial at g_mu = f^L_mu.
inline BultelReport check_bultel(const ConjugacyClass& cc, std::optional<Perturbation> perturb) {
    const RootDatum& rd = *cc.datum;
    if (!rd.is_split()) throw Unsupported("the Levi annihilation check needs a split datum");
    BultelReport r;
    r.norm = norm_cocharacter(cc);
    const LeviDatum levi = levi_of(rd, r.norm);
    r.levi = levi.datum->name();
    r.levi_is_torus = levi.simple_indices.empty();
    SatakeEngine g(cc.datum), l(levi.datum);
    HeckePolynomial h = hecke_polynomial(g, cc);
    if (perturb) {
        perturb->check(h.degree());
        auto& c = h.coeffs[static_cast<std::size_t>(perturb->coefficient)];
        c = c.scaled(q_power(perturb->q_exponent));
    }
    const AlgebraElement g_mu = l.basis_image(r.norm);
    if (g_mu != AlgebraElement::monomial(r.norm)) throw std::logic_error("norm cocharacter is not central in its Levi");
    AlgebraElement acc(rd.rank());
    for (int k = h.degree(); k >= 0; --k)
        acc = acc * g_mu + l.image(levi_satake(g, l, h.coeffs[static_cast<std::size_t>(k)]));
    r.torus_value = acc;
    r.value = l.inverse(acc);
    r.pass = r.value.is_zero();
    return r;
}

inline BultelReport check_bultel(const ConjugacyClass& cc, bool perturb = false) {
    return check_bultel(cc, perturb ? std::optional<Perturbation>(Perturbation{}) : std::nullopt);
}

}  // namespace seedrel

#endif  // SEEDREL_SATAKE_HPP
