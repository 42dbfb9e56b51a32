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
   Dual-side data for a cocharacter class: the norm, the spectral Hecke
   polynomial det(X - q^{d<mu,rho>} r(t sigma)) as a polynomial over Z[v^{+-1}][X_*],
   and the twist eta(e^nu) = q^{-<nu,rho>} e^nu that turns it into the form
   seen by the dotted Satake transform.
*/

#ifndef SEEDREL_SPECTRAL_HPP
#define SEEDREL_SPECTRAL_HPP

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "root_datum.hpp"

namespace seedrel {

class Unsupported : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A conjugacy class of cocharacters, represented by a dominant mu_c, with its
/// field-of-definition degree d (the Frobenius orbit size of mu_c).
struct ConjugacyClass {
    std::shared_ptr<const RootDatum> datum;
    LatticePoint mu;
    int d = 1;

    static ConjugacyClass make(std::shared_ptr<const RootDatum> rd, LatticePoint mu,
                               std::optional<int> declared_d = std::nullopt) {
        if (!rd) throw std::invalid_argument("missing root datum");
        if (mu.size() != rd->rank()) throw std::invalid_argument("cocharacter has wrong rank: " + mu.str());
        if (!is_dominant(*rd, mu)) throw std::invalid_argument("cocharacter is not dominant: " + mu.str());
        const int d = rd->frobenius_orbit_size(mu);
        if (declared_d && *declared_d != d)
            throw std::invalid_argument("declared degree " + std::to_string(*declared_d) +
                                        " differs from the Frobenius orbit size " + std::to_string(d));
        return ConjugacyClass{std::move(rd), std::move(mu), d};
    }
    static ConjugacyClass make(const RootDatum& rd, LatticePoint mu, std::optional<int> declared_d = std::nullopt) {
        return make(std::make_shared<const RootDatum>(rd), std::move(mu), declared_d);
    }
};

/// Dominant representative of sum_{i<d} sigma^i(mu_c).
inline LatticePoint norm_cocharacter(const ConjugacyClass& cc) {
    LatticePoint sum(cc.mu.size());
    for (int i = 0; i < cc.d; ++i) sum += cc.datum->frobenius_apply(cc.mu, i);
    return dominant_rep(*cc.datum, sum).first;
}

/// Weyl elements commuting with the Frobenius; all of W in the split case.
inline std::vector<std::size_t> frobenius_fixed_weyl(const RootDatum& rd) {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < rd.weyl_size(); ++w)
        if (rd.commutes_with_frobenius(w)) out.push_back(w);
    return out;
}

/// W-invariance, or dot-invariance c(w nu) = q^{<nu - w nu, rho>} c(nu), under
/// the Frobenius-fixed Weyl group.
inline bool is_weyl_invariant(const RootDatum& rd, const AlgebraElement& x, bool dotted) {
    for (std::size_t w : frobenius_fixed_weyl(rd)) {
        for (const auto& [nu, c] : x.terms()) {
            const LatticePoint wnu = rd.act(w, nu);
            const LaurentScalar expected = dotted ? c.shifted(rd.rho_pairing2(nu - wnu)) : c;
            if (x.coeff(wnu) != expected) return false;
        }
    }
    return true;
}

struct SpectralPolynomial {
    AlgebraPolynomial poly;
    bool dotted = false;
};

namespace detail {

inline void check_invariance(const RootDatum& rd, const SpectralPolynomial& p) {
    for (const auto& c : p.poly.coefficients())
        if (!is_weyl_invariant(rd, c, p.dotted))
            throw std::logic_error("spectral coefficient fails Weyl invariance: " + c.str());
}

}  // namespace detail

/// Split case: prod over weights nu of V_mu (with multiplicity) of (X - q^{<mu,rho>} e^nu).
inline SpectralPolynomial spectral_poly_split(const ConjugacyClass& cc) {
    const RootDatum& rd = *cc.datum;
    if (!rd.is_split()) throw std::invalid_argument("spectral_poly_split needs a split datum");
    const LaurentScalar scale = v_power(rd.rho_pairing2(cc.mu));
    AlgebraPolynomial p(rd.rank(), {AlgebraElement::constant(rd.rank(), 1)});
    const AlgebraElement chi = weyl_character(rd, cc.mu);
    for (const auto& [nu, m] : chi.terms()) {
        const AlgebraPolynomial factor = AlgebraPolynomial::linear(AlgebraElement::monomial(nu, scale));
        for (std::int64_t k = m.coeff(0); k > 0; --k) p = p * factor;
    }
    SpectralPolynomial out{p, false};
    detail::check_invariance(rd, out);
    return out;
}

/// Twisted minuscule case: one factor X^{|Z|} - q^{|Z| d <mu,rho>} e^{N(Z)} per
/// sigma^d-orbit Z of W.mu, where N(Z) = sum_{i<d} sigma^i(sum Z).
inline SpectralPolynomial spectral_poly_twisted_minuscule(const ConjugacyClass& cc) {
    const RootDatum& rd = *cc.datum;
    if (!is_minuscule(rd, cc.mu))
        throw Unsupported("twisted spectral polynomial requires a minuscule cocharacter, got " + cc.mu.str());
    const std::size_t n = rd.rank();
    std::set<LatticePoint> remaining = weyl_orbit(rd, cc.mu);
    AlgebraPolynomial p(n, {AlgebraElement::constant(n, 1)});
    while (!remaining.empty()) {
        const LatticePoint start = *remaining.begin();
        std::vector<LatticePoint> orbit;
        LatticePoint x = start;
        do {
            orbit.push_back(x);
            remaining.erase(x);
            x = rd.frobenius_apply(x, cc.d);
        } while (x != start);
        LatticePoint block_sum(n);
        for (const auto& y : orbit) block_sum += y;
        LatticePoint norm(n);
        for (int i = 0; i < cc.d; ++i) norm += rd.frobenius_apply(block_sum, i);
        const int size = static_cast<int>(orbit.size());
        std::vector<AlgebraElement> coeffs(static_cast<std::size_t>(size) + 1, AlgebraElement(n));
        coeffs[static_cast<std::size_t>(size)] = AlgebraElement::constant(n, 1);
        coeffs[0] = AlgebraElement::monomial(norm, -v_power(size * cc.d * rd.rho_pairing2(cc.mu)));
        p = p * AlgebraPolynomial(n, coeffs);
    }
    SpectralPolynomial out{p, false};
    for (const auto& c : out.poly.coefficients())
        for (const auto& [nu, coef] : c.terms())
            if (rd.frobenius_apply(nu) != nu) throw std::logic_error("twisted exponent is not Frobenius-fixed");
    detail::check_invariance(rd, out);
    return out;
}

/// Split path when the Frobenius is trivial, the twisted minuscule path otherwise.
inline SpectralPolynomial spectral_polynomial(const ConjugacyClass& cc) {
    return cc.datum->is_split() ? spectral_poly_split(cc) : spectral_poly_twisted_minuscule(cc);
}

namespace detail {

inline SpectralPolynomial apply_eta(const RootDatum& rd, const SpectralPolynomial& p, int sign) {
    std::vector<AlgebraElement> coeffs;
    for (const auto& c : p.poly.coefficients()) {
        AlgebraElement t(rd.rank());
        for (const auto& [nu, coef] : c.terms()) t.add_term(nu, coef.shifted(-sign * rd.rho_pairing2(nu)));
        coeffs.push_back(t);
    }
    return SpectralPolynomial{AlgebraPolynomial(rd.rank(), coeffs), sign > 0};
}

}  // namespace detail

/// eta: c e^nu -> c q^{-<nu,rho>} e^nu on every coefficient.
inline SpectralPolynomial dot_twist(const RootDatum& rd, const SpectralPolynomial& p) {
    if (p.dotted) throw std::invalid_argument("polynomial is already dot-twisted");
    SpectralPolynomial out = detail::apply_eta(rd, p, 1);
    detail::check_invariance(rd, out);
    return out;
}

inline SpectralPolynomial dot_untwist(const RootDatum& rd, const SpectralPolynomial& p) {
    if (!p.dotted) throw std::invalid_argument("polynomial is not dot-twisted");
    return detail::apply_eta(rd, p, -1);
}

inline SpectralPolynomial dotted_spectral_polynomial(const ConjugacyClass& cc) {
    return dot_twist(*cc.datum, spectral_polynomial(cc));
}

/// Negative control: multiply the X^coefficient coefficient by q^q_exponent.
struct Perturbation {
    int coefficient = 0;
    int q_exponent = 1;

    void check(int degree) const {
        if (coefficient < 0 || coefficient > degree) throw std::invalid_argument("perturbed coefficient index out of range");
    }
};

inline AlgebraPolynomial perturb_coefficient(const AlgebraPolynomial& p, const Perturbation& e) {
    e.check(p.degree());
    AlgebraPolynomial out = p;
    out.set_coeff(e.coefficient, p.coeff(e.coefficient).scaled(q_power(e.q_exponent)));
    return out;
}

inline AlgebraPolynomial perturb_constant_term(const AlgebraPolynomial& p) { return perturb_coefficient(p, {}); }

/// P(X) = (X - a) Q(X) + P(a) by synthetic division.
inline std::pair<AlgebraPolynomial, AlgebraElement> divide_by_linear(const AlgebraPolynomial& p,
                                                                     const AlgebraElement& a) {
    const int deg = p.degree();
    if (deg < 1) return {AlgebraPolynomial(p.rank()), p.coeff(0)};
    std::vector<AlgebraElement> q(static_cast<std::size_t>(deg), AlgebraElement(p.rank()));
    AlgebraElement carry = p.coeff(deg);
    for (int k = deg - 1; k >= 0; --k) {
        q[static_cast<std::size_t>(k)] = carry;
        carry = p.coeff(k) + carry * a;
    }
    return {AlgebraPolynomial(p.rank(), q), carry};
}

struct AnnihilationReport {
    LatticePoint norm;
    AlgebraElement value;  // the dotted polynomial evaluated at X = e^norm
    bool perturbed = false;
    bool pass = false;
};

/// Substitutes X = e^{N mu} into the dotted spectral polynomial and tests for zero.
inline AnnihilationReport check_annihilation(const ConjugacyClass& cc, std::optional<Perturbation> perturb) {
    AnnihilationReport r;
    r.norm = norm_cocharacter(cc);
    AlgebraPolynomial p = dotted_spectral_polynomial(cc).poly;
    if (perturb) p = perturb_coefficient(p, *perturb);
    r.value = poly_substitute(p, AlgebraElement::monomial(r.norm));
    r.perturbed = perturb.has_value();
    r.pass = r.value.is_zero();
    return r;
}

inline AnnihilationReport check_annihilation(const ConjugacyClass& cc, bool perturb = false) {
    return check_annihilation(cc, perturb ? std::optional<Perturbation>(Perturbation{}) : std::nullopt);
}

struct DegreeReport {
    int degree = 0;
    std::size_t bound = 0;  // size of the saturated set of mu_c
    bool equality = false;
};

inline DegreeReport degree_of_H(const ConjugacyClass& cc) {
    DegreeReport r;
    r.degree = spectral_polynomial(cc).poly.degree();
    r.bound = saturated_set(*cc.datum, cc.mu).size();
    if (r.degree < static_cast<int>(r.bound)) throw std::logic_error("Hecke polynomial degree below its lower bound");
    r.equality = r.degree == static_cast<int>(r.bound);
    return r;
}

}  // namespace seedrel

#endif  // SEEDREL_SPECTRAL_HPP
