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
   Extended affine Hecke algebra in the Iwahori-Matsumoto basis T_x,
   x = t_lambda w in X_* x| W acting on X_* (x) R by v -> w v + lambda.

   Lengths count affine root hyperplanes between the base alcove
   {0 < <v, alpha> < 1 for alpha > 0} and its image. With this normalization
   the matrix pi^lambda w (upper-triangular Iwahori) corresponds to
   t_{-lambda} w, so the double coset K pi^lambda K is the sum of T_x over
   W t_{-lambda} W and pi^mu for dominant mu is an antidominant translation.
*/

#ifndef SEEDREL_AFFINE_HECKE_HPP
#define SEEDREL_AFFINE_HECKE_HPP

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "root_datum.hpp"
#include "satake.hpp"
#include "spectral.hpp"

namespace seedrel {

struct AffineElement {
    LatticePoint lambda;
    std::size_t w = 0;  // index into RootDatum::weyl()

    friend bool operator==(const AffineElement&, const AffineElement&) = default;
    friend auto operator<=>(const AffineElement& a, const AffineElement& b) {
        if (auto c = a.lambda <=> b.lambda; c != 0) return c;
        return a.w <=> b.w;
    }
};

class HeckeElement {
   public:
    using Terms = std::map<AffineElement, LaurentScalar>;

    HeckeElement() = default;
    static HeckeElement basis(const AffineElement& x, const LaurentScalar& c = 1) {
        HeckeElement h;
        h.add_term(x, c);
        return h;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    LaurentScalar coeff(const AffineElement& x) const {
        auto it = terms_.find(x);
        return it == terms_.end() ? LaurentScalar() : it->second;
    }
    void add_term(const AffineElement& x, const LaurentScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(x, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    HeckeElement& operator+=(const HeckeElement& o) {
        for (const auto& [x, c] : o.terms_) add_term(x, c);
        return *this;
    }
    HeckeElement& operator-=(const HeckeElement& o) {
        for (const auto& [x, c] : o.terms_) add_term(x, -c);
        return *this;
    }
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    HeckeElement scaled(const LaurentScalar& s) const {
        HeckeElement r;
        for (const auto& [x, c] : terms_) r.add_term(x, c * s);
        return r;
    }
    friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

    /// Lowest and highest v-exponent over all coefficients.
    std::optional<std::pair<int, int>> v_degree_span() const {
        std::optional<std::pair<int, int>> span;
        for (const auto& [x, c] : terms_) {
            const int lo = c.low_degree(), hi = c.high_degree();
            if (!span) span = std::make_pair(lo, hi);
            span->first = std::min(span->first, lo);
            span->second = std::max(span->second, hi);
        }
        return span;
    }

   private:
    Terms terms_;
};

/// Multiplication, lengths and Bernstein elements for one root datum.
class HeckeAlgebra {
   public:
    explicit HeckeAlgebra(std::shared_ptr<const RootDatum> rd) : owner_(std::move(rd)), rd_(*owner_) {
        int max_height = 0;
        for (const auto& a : rd_.positive_roots()) max_height = std::max(max_height, pairing(rd_.two_rho_check(), a) / 2);
        denominator_ = 2 * max_height + 2;
        find_generators();
    }
    explicit HeckeAlgebra(const RootDatum& rd) : HeckeAlgebra(std::make_shared<const RootDatum>(rd)) {}

    const RootDatum& datum() const { return rd_; }

    AffineElement identity() const { return {LatticePoint(rd_.rank()), 0}; }
    AffineElement translation(const LatticePoint& lambda) const { return {lambda, 0}; }
    AffineElement finite(std::size_t w) const { return {LatticePoint(rd_.rank()), w}; }
    /// The element attached to the matrix pi^lambda.
    AffineElement uniformizer(const LatticePoint& lambda) const { return translation(-lambda); }

    AffineElement multiply(const AffineElement& a, const AffineElement& b) const {
        return {a.lambda + rd_.act(a.w, b.lambda), rd_.multiply(a.w, b.w)};
    }
    AffineElement inverse(const AffineElement& a) const {
        const std::size_t wi = rd_.inverse(a.w);
        return {-rd_.act(wi, a.lambda), wi};
    }

    /// sum_{w^-1 alpha > 0} |<lambda,alpha>| + sum_{w^-1 alpha < 0} |<lambda,alpha> - 1|.
    int length(const AffineElement& x) const {
        int l = 0;
        for (std::size_t i = 0; i < rd_.positive_roots().size(); ++i) {
            const int m = pairing(x.lambda, rd_.positive_roots()[i]);
            l += rd_.inverse_keeps_positive(x.w, i) ? std::abs(m) : std::abs(m - 1);
        }
        return l;
    }

    /// Independent count of the hyperplanes <v,alpha> = k separating a generic
    /// point p of the base alcove from x(p).
    int length_by_hyperplanes(const AffineElement& x) const {
        const LatticePoint wp = rd_.act(x.w, rd_.two_rho_check());  // D * w(p) with p = 2 rho^vee / D
        int l = 0;
        for (const auto& a : rd_.positive_roots()) {
            const int num = pairing(wp, a) + denominator_ * pairing(x.lambda, a);
            l += std::abs(static_cast<int>(Rational(num, denominator_).floor()));
        }
        return l;
    }

    /// Length-one elements (k alpha^vee, s_alpha), k in {0, 1}: the simple affine reflections.
    const std::vector<AffineElement>& simple_reflections() const { return simple_; }
    /// Length-zero elements with small translation part; they generate Omega for the built-in data.
    const std::vector<AffineElement>& length_zero_elements() const { return omega_; }

    /// x = s_1 ... s_k omega with l(x) = k.
    const std::pair<std::vector<AffineElement>, AffineElement>& decompose(const AffineElement& x) {
        if (auto it = decompositions_.find(x); it != decompositions_.end()) return it->second;
        std::vector<AffineElement> word;
        AffineElement y = x;
        int l = length(y);
        while (l > 0) {
            bool found = false;
            for (const auto& s : simple_) {
                const AffineElement z = multiply(s, y);
                if (length(z) < l) {
                    word.push_back(s);
                    y = z;
                    --l;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("no left descent for an element of positive length");
        }
        return decompositions_.emplace(x, std::make_pair(std::move(word), y)).first->second;
    }

    HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
        HeckeElement out;
        for (const auto& [y, cy] : b.terms()) {
            const int ly = length(y);
            const auto& [word, omega] = decompose(y);
            // lengths add: no quadratic relation needed
            HeckeElement slow;
            for (const auto& [x, cx] : a.terms()) {
                const AffineElement xy = multiply(x, y);
                if (length(xy) == length(x) + ly) out.add_term(xy, cx * cy);
                else slow.add_term(x, cx * cy);
            }
            if (slow.is_zero()) continue;
            for (const auto& s : word) slow = right_multiply_simple(slow, s);
            for (const auto& [x, c] : slow.terms()) out.add_term(multiply(x, omega), c);
        }
        return out;
    }

    /// T_x^{-1} = T_omega^{-1} T_{s_k}^{-1} ... T_{s_1}^{-1}, T_s^{-1} = q^{-1} T_s + (q^{-1} - 1).
    HeckeElement inverse_T(const AffineElement& x) {
        if (auto it = inverses_.find(x); it != inverses_.end()) return it->second;
        const auto [word, omega] = decompose(x);
        HeckeElement r = HeckeElement::basis(inverse(omega));
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            const HeckeElement sinv = HeckeElement::basis(*it, q_power(-1)) +
                                      HeckeElement::basis(identity(), q_power(-1) - LaurentScalar(1));
            r = multiply(r, sinv);
        }
        return inverses_.emplace(x, r).first->second;
    }

    /// theta_lambda = v^{l(t2) - l(t1)} T_{t1} T_{t2}^{-1} for lambda = l1 - l2, both antidominant.
    const HeckeElement& theta(const LatticePoint& lambda) {
        if (auto it = thetas_.find(lambda); it != thetas_.end()) return it->second;
        const LatticePoint shift = antidominant_shift(lambda);
        return thetas_.emplace(lambda, theta_with(lambda, shift)).first->second;
    }

    /// theta_lambda from the decomposition lambda = (lambda + shift) - shift; shift antidominant.
    HeckeElement theta_with(const LatticePoint& lambda, const LatticePoint& shift) {
        const LatticePoint l1 = lambda + shift;
        if (!is_antidominant(l1) || !is_antidominant(shift))
            throw std::invalid_argument("theta decomposition needs antidominant parts");
        const AffineElement t1 = translation(l1), t2 = translation(shift);
        const LaurentScalar norm = v_power(length(t2) - length(t1));
        return multiply(HeckeElement::basis(t1, norm), inverse_T(t2));
    }

    /// sum over nu of c(nu) q^{<nu,rho>} theta_{-nu}; central for dot-invariant input.
    HeckeElement bernstein_central(const AlgebraElement& x, bool verify = true) {
        if (!is_weyl_invariant(rd_, x, true)) throw std::invalid_argument("element is not dot-Weyl-invariant: " + x.str());
        HeckeElement z;
        for (const auto& [nu, c] : x.terms()) z += theta(-nu).scaled(c.shifted(rd_.rho_pairing2(nu)));
        if (verify && !is_central(z)) throw std::logic_error("Bernstein element is not central: convention error");
        return z;
    }

    /// Commutes with every simple affine reflection and the small length-zero elements.
    bool is_central(const HeckeElement& z) {
        for (const auto* gens : {&simple_, &omega_})
            for (const auto& g : *gens) {
                const HeckeElement tg = HeckeElement::basis(g);
                if (multiply(z, tg) != multiply(tg, z)) return false;
            }
        return true;
    }

    /// 1_K = sum_{w in W} T_w.
    HeckeElement spherical_vector() const {
        HeckeElement h;
        for (std::size_t w = 0; w < rd_.weyl_size(); ++w) h.add_term(finite(w), 1);
        return h;
    }

    /// 1_{K pi^lambda K} as the sum of T_x over the double coset.
    HeckeElement double_coset(const LatticePoint& lambda) const {
        std::set<AffineElement> cell;
        const AffineElement t = uniformizer(lambda);
        for (std::size_t a = 0; a < rd_.weyl_size(); ++a)
            for (std::size_t b = 0; b < rd_.weyl_size(); ++b) cell.insert(multiply(multiply(finite(a), t), finite(b)));
        HeckeElement h;
        for (const auto& x : cell) h.add_term(x, 1);
        return h;
    }

    HeckeElement spherical(const SphericalElement& s) const {
        HeckeElement h;
        for (const auto& [lambda, c] : s.terms()) h += double_coset(lambda).scaled(c);
        return h;
    }

   private:
    bool is_antidominant(const LatticePoint& lambda) const {
        return std::all_of(rd_.simple_roots().begin(), rd_.simple_roots().end(),
                           [&](const LatticePoint& a) { return pairing(lambda, a) <= 0; });
    }

    // Cheapest antidominant l2 with lambda + l2 antidominant, among
    // -k 2rho^vee and -(dominant rep of lambda) - k 2rho^vee.
    LatticePoint antidominant_shift(const LatticePoint& lambda) const {
        std::optional<LatticePoint> best;
        int best_len = 0;
        const LatticePoint dom = dominant_rep(rd_, lambda).first;
        for (const LatticePoint& base : {LatticePoint(rd_.rank()), -dom}) {
            for (int k = 0;; ++k) {
                const LatticePoint shift = base - k * rd_.two_rho_check();
                if (is_antidominant(lambda + shift)) {
                    const int l = length(translation(shift));
                    if (!best || l < best_len) {
                        best = shift;
                        best_len = l;
                    }
                    break;
                }
            }
        }
        return *best;
    }

    AffineElement reflection(const LatticePoint& coroot, const LatticePoint& root, int k) const {
        IntMatrix m = IntMatrix::identity(rd_.rank());
        for (std::size_t r = 0; r < rd_.rank(); ++r)
            for (std::size_t c = 0; c < rd_.rank(); ++c) m(r, c) -= coroot[r] * root[c];
        return {k * coroot, rd_.index_of(m)};
    }

    void find_generators() {
        for (int k = 0; k <= 1; ++k)
            for (std::size_t i = 0; i < rd_.positive_roots().size(); ++i) {
                const AffineElement s = reflection(rd_.positive_coroots()[i], rd_.positive_roots()[i], k);
                if (length(s) == 1) simple_.push_back(s);
            }
        const std::size_t n = rd_.rank();
        std::vector<int> c(n, -1);
        for (;;) {
            const LatticePoint lambda{std::vector<int>(c)};
            if (!lambda.is_zero())
                for (std::size_t w = 0; w < rd_.weyl_size(); ++w)
                    if (length({lambda, w}) == 0) omega_.push_back({lambda, w});
            std::size_t k = 0;
            while (k < n && ++c[k] > 1) c[k++] = -1;
            if (k == n) break;
        }
    }

    HeckeElement right_multiply_simple(const HeckeElement& a, const AffineElement& s) {
        HeckeElement out;
        const LaurentScalar q = q_power(1);
        for (const auto& [x, c] : a.terms()) {
            const AffineElement xs = multiply(x, s);
            if (length(xs) > length(x)) {
                out.add_term(xs, c);
            } else {
                out.add_term(x, c * (q - 1));
                out.add_term(xs, c * q);
            }
        }
        return out;
    }

    std::shared_ptr<const RootDatum> owner_;
    const RootDatum& rd_;
    int denominator_ = 2;
    std::vector<AffineElement> simple_, omega_;
    std::map<AffineElement, std::pair<std::vector<AffineElement>, AffineElement>> decompositions_;
    std::map<AffineElement, HeckeElement> inverses_;
    std::map<LatticePoint, HeckeElement> thetas_;
};

// ---------------------------------------------------------------------------
// Seed relation

struct SeedReport {
    LatticePoint norm;
    int degree = 0;
    HeckeElement value;           // sum_k hbar_k T^k 1_K
    HeckeElement value_reversed;  // sum_k T^k hbar_k 1_K
    bool central = false;         // every hbar_k commutes with the generators
    bool spherical_match = false;  // hbar_k 1_K is the double-coset expansion of h_k
    bool powers_additive = false;  // (T_{t})^k = T_{t^k}
    bool orders_agree = false;
    bool initial_segments_nonzero = false;
    std::size_t term_count = 0;    // total T-terms across the summands
    std::optional<std::pair<int, int>> v_span;
    bool pass = false;
};

inline SeedReport check_seed_relation(HeckeAlgebra& H, const ConjugacyClass& cc,
                                      std::optional<Perturbation> perturb = std::nullopt) {
    const RootDatum& rd = H.datum();
    if (!rd.is_split()) throw Unsupported("the seed relation check needs a split datum");
    SeedReport r;
    r.norm = norm_cocharacter(cc);
    AlgebraPolynomial p = dotted_spectral_polynomial(cc).poly;
    if (perturb) p = perturb_coefficient(p, *perturb);
    r.degree = p.degree();
    SatakeEngine satake(cc.datum);
    const AffineElement t = H.uniformizer(r.norm);
    const HeckeElement one_k = H.spherical_vector();
    r.central = r.spherical_match = r.powers_additive = r.initial_segments_nonzero = true;
    HeckeElement power = HeckeElement::basis(H.identity());
    for (int k = 0; k <= r.degree; ++k) {
        if (k > 0) {
            power = H.multiply(power, HeckeElement::basis(t));
            r.powers_additive = r.powers_additive && power == HeckeElement::basis(H.translation(k * t.lambda));
        }
        const AlgebraElement& c = p.coefficients()[static_cast<std::size_t>(k)];
        const HeckeElement hbar = H.bernstein_central(c, false);
        r.central = r.central && H.is_central(hbar);
        const HeckeElement hbar_k = H.multiply(hbar, one_k);
        r.spherical_match = r.spherical_match && hbar_k == H.spherical(satake.inverse(c));
        const HeckeElement forward = H.multiply(H.multiply(hbar, power), one_k);
        const HeckeElement reversed = H.multiply(power, hbar_k);
        r.term_count += forward.size();
        r.value += forward;
        r.value_reversed += reversed;
        if (k < r.degree && r.value.is_zero()) r.initial_segments_nonzero = false;
    }
    r.orders_agree = r.value == r.value_reversed;
    r.v_span = r.value.v_degree_span();
    r.pass = r.value.is_zero() && r.value_reversed.is_zero() && r.central && r.powers_additive;
    return r;
}

inline SeedReport check_seed_relation(const ConjugacyClass& cc, std::optional<Perturbation> perturb = std::nullopt) {
    HeckeAlgebra H(cc.datum);
    return check_seed_relation(H, cc, perturb);
}

}  // namespace seedrel

#endif  // SEEDREL_AFFINE_HECKE_HPP
