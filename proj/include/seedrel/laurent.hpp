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
   Exact Laurent polynomials in one formal variable, lattice points, and the
   group algebra R[X] of a lattice X over R = Z[v, v^-1].

   The scalar variable is v with v^2 = q, so that q^<lambda,rho> is a monomial
   even when the pairing is half-integral.  A second tag (t) reuses the same
   machinery for the Hall-Littlewood / partition-function variable.
*/

#ifndef SEEDREL_LAURENT_HPP
#define SEEDREL_LAURENT_HPP

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace seedrel {

class NotDivisible : public std::domain_error {
   public:
    NotDivisible() : std::domain_error("not divisible") {}
};

struct VarV {
    static constexpr const char* name = "v";
};
struct VarT {
    static constexpr const char* name = "t";
};

template <class Var>
class Laurent {
   public:
    Laurent() = default;
    Laurent(std::int64_t c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) coeffs_.push_back(c);
    }

    static Laurent monomial(int exponent, std::int64_t c = 1) {
        Laurent r;
        if (c != 0) {
            r.low_ = exponent;
            r.coeffs_.push_back(c);
        }
        return r;
    }

    static Laurent from_terms(const std::map<int, std::int64_t>& terms) {
        Laurent r;
        for (const auto& [e, c] : terms) r += monomial(e, c);
        return r;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int low_degree() const {
        if (is_zero()) throw std::logic_error("degree of zero Laurent polynomial");
        return low_;
    }
    int high_degree() const {
        if (is_zero()) throw std::logic_error("degree of zero Laurent polynomial");
        return low_ + static_cast<int>(coeffs_.size()) - 1;
    }
    std::int64_t coeff(int e) const {
        if (e < low_ || e >= low_ + static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(e - low_)];
    }
    std::int64_t leading_coeff() const { return coeffs_.back(); }

    /// Nonzero terms in increasing exponent order.
    std::map<int, std::int64_t> terms() const {
        std::map<int, std::int64_t> t;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) t.emplace(low_ + static_cast<int>(i), coeffs_[i]);
        return t;
    }

    template <class F>
    void for_each_term(F&& f) const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) f(low_ + static_cast<int>(i), coeffs_[i]);
    }

    bool all_exponents_even() const {
        bool ok = true;
        for_each_term([&](int e, std::int64_t) { ok = ok && (e % 2 == 0); });
        return ok;
    }
    bool coefficients_nonnegative() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
    }
    std::int64_t coefficient_sum() const {
        std::int64_t s = 0;
        for (auto c : coeffs_) s = detail::checked_add(s, c);
        return s;
    }

    /// Multiplication by var^k.
    Laurent shifted(int k) const {
        Laurent r = *this;
        if (!r.is_zero()) r.low_ += k;
        return r;
    }

    /// Substitute var -> var^k (k may be negative).
    Laurent rescaled(int k) const {
        Laurent r;
        for_each_term([&](int e, std::int64_t c) { r += monomial(e * k, c); });
        return r;
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& c : r.coeffs_) c = detail::checked_sub(0, c);
        return r;
    }

    Laurent& operator+=(const Laurent& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        const int lo = std::min(low_, o.low_);
        const int hi = std::max(high_degree(), o.high_degree());
        if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), 0);
        low_ = lo;
        coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            auto& slot = coeffs_[static_cast<std::size_t>(o.low_ - lo) + i];
            slot = detail::checked_add(slot, o.coeffs_[i]);
        }
        normalize();
        return *this;
    }
    Laurent& operator-=(const Laurent& o) { return *this += -o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        if (a.is_zero() || b.is_zero()) return r;
        r.low_ = a.low_ + b.low_;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                auto& slot = r.coeffs_[i + j];
                slot = detail::checked_add(slot, detail::checked_mul(a.coeffs_[i], b.coeffs_[j]));
            }
        }
        r.normalize();
        return r;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
    }

    /// Exact quotient in Z[var, var^-1]; throws NotDivisible otherwise.
    friend Laurent exact_divide(const Laurent& num, const Laurent& den) {
        if (den.is_zero()) throw ArithmeticError("division by zero Laurent polynomial");
        Laurent quotient;
        Laurent rem = num;
        while (!rem.is_zero()) {
            if (rem.coeffs_.size() < den.coeffs_.size()) throw NotDivisible();
            const std::int64_t lc = rem.leading_coeff();
            if (lc % den.leading_coeff() != 0) throw NotDivisible();
            const Laurent term =
                monomial(rem.high_degree() - den.high_degree(), lc / den.leading_coeff());
            quotient += term;
            rem -= term * den;
        }
        return quotient;
    }

    /// Evaluate at var = x for a nonzero rational x.
    Rational evaluate(const Rational& x) const {
        Rational acc;
        for_each_term([&](int e, std::int64_t c) {
            Rational p(1);
            const Rational base = e >= 0 ? x : Rational(1) / x;
            for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
            acc += p * Rational(c);
        });
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const std::int64_t c = coeffs_[k];
            if (c == 0) continue;
            const int e = low_ + static_cast<int>(k);
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            const std::int64_t a = c < 0 ? -c : c;
            if (e == 0) os << a;
            else {
                if (a != 1) os << a << "*";
                os << Var::name;
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

   private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
            low_ += static_cast<int>(lead);
        }
        if (coeffs_.empty()) low_ = 0;
    }

    int low_ = 0;
    std::vector<std::int64_t> coeffs_;
};

/// Scalars of every algebra in the library: Z[v, v^-1] with v^2 = q.
using LaurentScalar = Laurent<VarV>;
/// Polynomials in the Hall-Littlewood variable t.
using TPoly = Laurent<VarT>;

inline LaurentScalar v_power(int k) { return LaurentScalar::monomial(k); }
inline LaurentScalar q_power(int k) { return LaurentScalar::monomial(2 * k); }

/// Substitutes t = q^-1.
inline LaurentScalar t_to_inverse_q(const TPoly& p) {
    LaurentScalar r;
    p.for_each_term([&](int e, std::int64_t c) { r += LaurentScalar::monomial(-2 * e, c); });
    return r;
}

/// Value at a concrete q; all v-exponents must be even.
inline Rational evaluate_at_q(const LaurentScalar& s, std::int64_t q) {
    if (!s.all_exponents_even()) throw std::domain_error("half-integral power of q: " + s.str());
    Rational acc;
    s.for_each_term([&](int e, std::int64_t c) {
        const int k = e / 2;
        Rational p(1);
        for (int i = 0; i < (k >= 0 ? k : -k); ++i) p *= Rational(q);
        if (k < 0) p = Rational(1) / p;
        acc += p * Rational(c);
    });
    return acc;
}

// ---------------------------------------------------------------------------

/// Point of a cocharacter or character lattice, Z^rank.
class LatticePoint {
   public:
    LatticePoint() = default;
    explicit LatticePoint(std::size_t rank) : c_(rank, 0) {}
    LatticePoint(std::initializer_list<int> l) : c_(l) {}
    explicit LatticePoint(std::vector<int> v) : c_(std::move(v)) {}

    std::size_t size() const { return c_.size(); }
    int operator[](std::size_t i) const { return c_[i]; }
    int& operator[](std::size_t i) { return c_[i]; }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }
    const std::vector<int>& coords() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
    }

    LatticePoint& operator+=(const LatticePoint& o) {
        check_rank(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    LatticePoint& operator-=(const LatticePoint& o) {
        check_rank(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
    friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
    friend LatticePoint operator*(int k, LatticePoint a) {
        for (auto& x : a.c_) x *= k;
        return a;
    }
    LatticePoint operator-() const { return -1 * *this; }

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint& a, const LatticePoint& b) { return a.c_ <=> b.c_; }

    /// "1,0,-1"
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s;
    }

    static LatticePoint parse(std::string_view text) {
        std::vector<int> v;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            std::string_view tok = text.substr(pos, comma - pos);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            int x = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
            if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
                throw std::invalid_argument("malformed lattice point: '" + std::string(text) + "'");
            v.push_back(x);
            pos = comma + 1;
        }
        return LatticePoint(std::move(v));
    }

   private:
    void check_rank(const LatticePoint& o) const {
        if (o.c_.size() != c_.size()) throw std::invalid_argument("lattice rank mismatch");
    }
    std::vector<int> c_;
};

/// Canonical dot product between coordinates of X^* and X_*.
inline int pairing(const LatticePoint& a, const LatticePoint& b) {
    if (a.size() != b.size()) throw std::invalid_argument("lattice rank mismatch in pairing");
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// ---------------------------------------------------------------------------

/// Element of the group algebra R[X]: finitely supported map X -> LaurentScalar.
class AlgebraElement {
   public:
    using Terms = std::map<LatticePoint, LaurentScalar>;

    explicit AlgebraElement(std::size_t rank = 0) : rank_(rank) {}

    static AlgebraElement monomial(const LatticePoint& e, const LaurentScalar& c = 1) {
        AlgebraElement r(e.size());
        r.add_term(e, c);
        return r;
    }
    static AlgebraElement constant(std::size_t rank, const LaurentScalar& c) {
        return monomial(LatticePoint(rank), c);
    }

    std::size_t rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    LaurentScalar coeff(const LatticePoint& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? LaurentScalar() : it->second;
    }

    void add_term(const LatticePoint& e, const LaurentScalar& c) {
        if (e.size() != rank_) throw std::invalid_argument("rank mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check_rank(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        check_rank(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    AlgebraElement operator-() const { return scaled(-1); }

    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.check_rank(b);
        AlgebraElement r(a.rank_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

    AlgebraElement scaled(const LaurentScalar& s) const {
        AlgebraElement r(rank_);
        for (const auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }

    /// Apply a coefficient map c(e) -> f(e, c) termwise.
    template <class F>
    AlgebraElement transform_coefficients(F&& f) const {
        AlgebraElement r(rank_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(e, c));
        return r;
    }

    /// Apply an exponent map e -> g(e) termwise (g need not be injective).
    template <class G>
    AlgebraElement transform_exponents(G&& g) const {
        AlgebraElement r(rank_);
        for (const auto& [e, c] : terms_) r.add_term(g(e), c);
        return r;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")e^(" + e.str() + ")";
        }
        return s;
    }

   private:
    void check_rank(const AlgebraElement& o) const {
        if (o.rank_ != rank_) throw std::invalid_argument("rank mismatch");
    }
    std::size_t rank_;
    Terms terms_;
};

/// Exact quotient c with c * den == num in R[X]; throws NotDivisible.
///
/// Division by leading terms in the (group-compatible) lexicographic order.
/// Quotient exponents are confined to the box cut out by the supports, which
/// makes the loop finite for non-divisible input.
inline AlgebraElement algebra_exact_div(const AlgebraElement& num, const AlgebraElement& den) {
    if (num.rank() != den.rank()) throw std::invalid_argument("rank mismatch");
    if (den.is_zero()) throw ArithmeticError("division by zero");
    const std::size_t n = num.rank();
    AlgebraElement quotient(n);
    if (num.is_zero()) return quotient;

    auto bounds = [n](const AlgebraElement& x) {
        std::vector<int> lo(n, 0), hi(n, 0);
        bool first = true;
        for (const auto& [e, c] : x.terms()) {
            for (std::size_t i = 0; i < n; ++i) {
                lo[i] = first ? e[i] : std::min(lo[i], e[i]);
                hi[i] = first ? e[i] : std::max(hi[i], e[i]);
            }
            first = false;
        }
        return std::pair{lo, hi};
    };
    const auto [num_lo, num_hi] = bounds(num);
    const auto [den_lo, den_hi] = bounds(den);
    const LatticePoint num_low = num.terms().begin()->first;
    const LatticePoint den_low = den.terms().begin()->first;
    const LatticePoint quotient_floor = num_low - den_low;

    const auto& [den_lead, den_lc] = *den.terms().rbegin();
    AlgebraElement rem = num;
    while (!rem.is_zero()) {
        const auto& [lead, lc] = *rem.terms().rbegin();
        const LatticePoint e = lead - den_lead;
        if (e < quotient_floor) throw NotDivisible();
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] < num_lo[i] - den_lo[i] || e[i] > num_hi[i] - den_hi[i]) throw NotDivisible();
        const LaurentScalar c = exact_divide(lc, den_lc);
        const AlgebraElement term = AlgebraElement::monomial(e, c);
        quotient += term;
        rem -= term * den;
    }
    return quotient;
}

/// Polynomial in X with coefficients in R[X_lattice]; coeffs[k] multiplies X^k.
class AlgebraPolynomial {
   public:
    explicit AlgebraPolynomial(std::size_t rank = 0) : rank_(rank) {}
    AlgebraPolynomial(std::size_t rank, std::vector<AlgebraElement> coeffs)
        : rank_(rank), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_)
            if (c.rank() != rank_) throw std::invalid_argument("rank mismatch");
        trim();
    }

    /// X - root
    static AlgebraPolynomial linear(const AlgebraElement& root) {
        return AlgebraPolynomial(root.rank(),
                                 {-root, AlgebraElement::constant(root.rank(), 1)});
    }

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<AlgebraElement>& coefficients() const { return coeffs_; }
    AlgebraElement coeff(int k) const {
        return k >= 0 && k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : AlgebraElement(rank_);
    }
    void set_coeff(int k, const AlgebraElement& c) {
        if (c.rank() != rank_) throw std::invalid_argument("rank mismatch");
        if (k > degree()) coeffs_.resize(static_cast<std::size_t>(k) + 1, AlgebraElement(rank_));
        coeffs_[static_cast<std::size_t>(k)] = c;
        trim();
    }

    friend AlgebraPolynomial operator*(const AlgebraPolynomial& a, const AlgebraPolynomial& b) {
        if (a.rank_ != b.rank_) throw std::invalid_argument("rank mismatch");
        if (a.is_zero() || b.is_zero()) return AlgebraPolynomial(a.rank_);
        std::vector<AlgebraElement> r(a.coeffs_.size() + b.coeffs_.size() - 1, AlgebraElement(a.rank_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return AlgebraPolynomial(a.rank_, std::move(r));
    }

    friend bool operator==(const AlgebraPolynomial&, const AlgebraPolynomial&) = default;

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::size_t rank_;
    std::vector<AlgebraElement> coeffs_;
};

inline AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

/// Sum_k coeff_k * x^k (Horner).
inline AlgebraElement poly_substitute(const AlgebraPolynomial& p, const AlgebraElement& x) {
    if (p.rank() != x.rank()) throw std::invalid_argument("rank mismatch");
    AlgebraElement acc(p.rank());
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k);
    return acc;
}

}  // namespace seedrel

#endif  // SEEDREL_LAURENT_HPP
