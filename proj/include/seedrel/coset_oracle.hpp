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
   Brute-force p-adic coset combinatorics for GL_n, n <= 3, p in {2, 3}.

   A coset gK of GL_n(Q_p)/GL_n(Z_p) is the lattice g Z_p^n, stored as
   p^shift * H with H the column Hermite normal form of an integral lattice
   of content 1: upper triangular, H_ii = p^{a_i}, 0 <= H_ij < p^{a_i}.
   pi^lambda is diag(p^{lambda_1}, ..., p^{lambda_n}) and the Iwahori
   subgroup is upper triangular modulo p.
*/

#ifndef SEEDREL_COSET_ORACLE_HPP
#define SEEDREL_COSET_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affine_hecke.hpp"
#include "laurent.hpp"
#include "rational.hpp"
#include "root_datum.hpp"
#include "satake.hpp"
#include "spectral.hpp"

namespace seedrel {

class OracleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct OracleConfig {
    static constexpr int kMaxRadius = 4;
    static constexpr std::size_t kMaxCosets = 1000000;

    int n = 2;
    std::int64_t p = 3;
    int radius = 2;

    void validate() const {
        if (n < 2 || n > 3) throw OracleError("coset oracle supports GL2 and GL3 only");
        if (p != 2 && p != 3) throw OracleError("coset oracle supports p = 2 and p = 3 only");
        if (radius < 0 || radius > kMaxRadius)
            throw OracleError("radius must lie in [0, " + std::to_string(kMaxRadius) + "]");
    }
};

namespace detail {

inline int valuation(std::int64_t x, std::int64_t p) {
    if (x == 0) throw std::invalid_argument("valuation of zero");
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

inline std::int64_t mod_floor(__int128 x, std::int64_t m) {
    __int128 r = x % m;
    if (r < 0) r += m;
    return static_cast<std::int64_t>(r);
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    __int128 t = 0, new_t = 1, r = m, new_r = mod_floor(a, m);
    while (new_r != 0) {
        const __int128 quotient = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - quotient * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - quotient * new_r);
    }
    if (r != 1) throw std::logic_error("not a unit modulo the working precision");
    return mod_floor(t, m);
}

inline __int128 determinant(const std::vector<std::int64_t>& a, int n) {
    auto at = [&](int r, int c) { return static_cast<__int128>(a[static_cast<std::size_t>(r * n + c)]); };
    if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (n == 3)
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    throw std::invalid_argument("determinant implemented for n = 2, 3");
}

inline int valuation128(__int128 x, std::int64_t p) {
    if (x == 0) throw std::invalid_argument("singular matrix");
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace detail

/// p^shift times an integer matrix (row-major).
struct ScaledMatrix {
    int n = 0;
    int shift = 0;
    std::vector<std::int64_t> a;

    std::int64_t operator()(int r, int c) const { return a[static_cast<std::size_t>(r * n + c)]; }

    static ScaledMatrix identity(int n) {
        ScaledMatrix m{n, 0, std::vector<std::int64_t>(static_cast<std::size_t>(n * n), 0)};
        for (int i = 0; i < n; ++i) m.a[static_cast<std::size_t>(i * n + i)] = 1;
        return m;
    }

    /// diag(p^{lambda_i}), scaled so the integer part has non-negative exponents.
    static ScaledMatrix uniformizer(const LatticePoint& lambda, std::int64_t p) {
        const int n = static_cast<int>(lambda.size());
        const int lo = *std::min_element(lambda.begin(), lambda.end());
        ScaledMatrix m{n, lo, std::vector<std::int64_t>(static_cast<std::size_t>(n * n), 0)};
        for (int i = 0; i < n; ++i) m.a[static_cast<std::size_t>(i * n + i)] = detail::checked_pow(p, lambda[static_cast<std::size_t>(i)] - lo);
        return m;
    }

    friend ScaledMatrix operator*(const ScaledMatrix& x, const ScaledMatrix& y) {
        ScaledMatrix m{x.n, x.shift + y.shift, std::vector<std::int64_t>(x.a.size(), 0)};
        for (int r = 0; r < x.n; ++r)
            for (int c = 0; c < x.n; ++c) {
                std::int64_t s = 0;
                for (int k = 0; k < x.n; ++k) s = detail::checked_add(s, detail::checked_mul(x(r, k), y(k, c)));
                m.a[static_cast<std::size_t>(r * x.n + c)] = s;
            }
        return m;
    }
};

/// Canonical representative of a coset gK.
class Coset {
   public:
    int n() const { return n_; }
    int shift() const { return shift_; }
    std::int64_t entry(int r, int c) const { return h_[static_cast<std::size_t>(r * n_ + c)]; }
    const std::vector<int>& exponents() const { return exponents_; }

    /// nu with gK in U pi^nu K.
    LatticePoint iwasawa() const {
        LatticePoint nu(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) nu[static_cast<std::size_t>(i)] = shift_ + exponents_[static_cast<std::size_t>(i)];
        return nu;
    }

    ScaledMatrix matrix() const { return ScaledMatrix{n_, shift_, h_}; }

    std::string str() const {
        std::string s = "p^" + std::to_string(shift_) + "*[";
        for (int r = 0; r < n_; ++r) {
            s += r ? ";" : "";
            for (int c = 0; c < n_; ++c) s += (c ? "," : "") + std::to_string(entry(r, c));
        }
        return s + "]";
    }

    friend bool operator==(const Coset&, const Coset&) = default;
    friend auto operator<=>(const Coset& a, const Coset& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        if (auto c = a.shift_ <=> b.shift_; c != 0) return c;
        return a.h_ <=> b.h_;
    }

    /// Hermite normal form of the lattice spanned by the columns of m.
    static Coset from_matrix(const ScaledMatrix& m, std::int64_t p) {
        const int n = m.n;
        const int det_val = detail::valuation128(detail::determinant(m.a, n), p);
        const int precision = det_val + 1;
        std::int64_t modulus = 1;
        for (int i = 0; i < precision; ++i) {
            if (modulus > (std::int64_t{1} << 61) / p)
                throw ArithmeticError("working precision p^" + std::to_string(precision) + " exceeds 64 bits");
            modulus *= p;
        }
        auto pw = [&](int k) { return detail::checked_pow(p, k); };
        // generators: the columns, reduced modulo p^precision
        std::vector<std::vector<std::int64_t>> cols(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = detail::mod_floor(m(r, c), modulus);
        std::vector<std::vector<std::int64_t>> hcols(static_cast<std::size_t>(n));
        std::vector<int> a(static_cast<std::size_t>(n), 0);
        for (int i = n - 1; i >= 0; --i) {
            const auto ui = static_cast<std::size_t>(i);
            int best = -1, best_v = precision;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const std::int64_t x = cols[c][ui];
                if (x == 0) continue;
                const int v = detail::valuation(x, p);
                if (v < best_v) {
                    best_v = v;
                    best = static_cast<int>(c);
                }
            }
            std::vector<std::int64_t> pivot(static_cast<std::size_t>(n), 0);
            if (best < 0) {
                pivot[ui] = modulus;  // p^precision e_i lies in the lattice
            } else {
                pivot = cols[static_cast<std::size_t>(best)];
                cols.erase(cols.begin() + best);
                const std::int64_t unit = pivot[ui] / pw(best_v);
                const std::int64_t inv = detail::inverse_mod(unit, modulus);
                for (auto& x : pivot) x = detail::mod_floor(static_cast<__int128>(x) * inv, modulus);
                pivot[ui] = pw(best_v);
                for (auto& col : cols) {
                    if (col[ui] == 0) continue;
                    const std::int64_t f = col[ui] / pw(best_v);
                    for (int r = 0; r < n; ++r) {
                        const auto ur = static_cast<std::size_t>(r);
                        col[ur] = detail::mod_floor(static_cast<__int128>(col[ur]) - static_cast<__int128>(f) * pivot[ur], modulus);
                    }
                    col[ui] = 0;
                }
            }
            for (int r = i + 1; r < n; ++r) pivot[static_cast<std::size_t>(r)] = 0;
            a[ui] = best < 0 ? precision : best_v;
            hcols[ui] = pivot;
        }
        if (std::accumulate(a.begin(), a.end(), 0) != det_val)
            throw std::logic_error("Hermite normal form lost part of the determinant");
        // reduce above the diagonal, row i modulo p^{a_i}, from the diagonal upwards
        for (int j = 1; j < n; ++j)
            for (int i = j - 1; i >= 0; --i) {
                auto& col = hcols[static_cast<std::size_t>(j)];
                const std::int64_t d = pw(a[static_cast<std::size_t>(i)]);
                const std::int64_t f = static_cast<std::int64_t>(Rational(col[static_cast<std::size_t>(i)], d).floor());
                for (int r = 0; r <= i; ++r) {
                    const auto ur = static_cast<std::size_t>(r);
                    col[ur] = detail::mod_floor(static_cast<__int128>(col[ur]) - static_cast<__int128>(f) * hcols[static_cast<std::size_t>(i)][ur], modulus);
                }
            }
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                auto& x = hcols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                x = detail::mod_floor(x, pw(a[static_cast<std::size_t>(i)]));
            }
        // content: the largest power of p dividing every entry
        int content = *std::min_element(a.begin(), a.end());
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                const std::int64_t x = hcols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                if (x != 0) content = std::min(content, detail::valuation(x, p));
            }
        Coset out;
        out.n_ = n;
        out.shift_ = m.shift + content;
        out.h_.assign(static_cast<std::size_t>(n * n), 0);
        out.exponents_.resize(static_cast<std::size_t>(n));
        const std::int64_t scale = pw(content);
        for (int j = 0; j < n; ++j) {
            out.exponents_[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)] - content;
            for (int i = 0; i <= j; ++i)
                out.h_[static_cast<std::size_t>(i * n + j)] = hcols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] / scale;
        }
        return out;
    }

   private:
    int n_ = 0;
    int shift_ = 0;
    std::vector<std::int64_t> h_;
    std::vector<int> exponents_;
};

using CosetFunction = std::map<Coset, Rational>;

namespace detail {

inline void add_to(CosetFunction& f, const Coset& x, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = f.try_emplace(x, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
    }
}

inline void guard_size(std::size_t size) {
    if (size > OracleConfig::kMaxCosets) throw OracleError("coset enumeration exceeds the size guard");
}

// Valuations of the elementary divisors through gcds of minors.
inline std::vector<int> elementary_divisors(const ScaledMatrix& m, std::int64_t p) {
    const int n = m.n;
    std::vector<int> out;
    int v1 = 1 << 20;
    for (auto x : m.a)
        if (x != 0) v1 = std::min(v1, valuation(x, p));
    out.push_back(v1);
    if (n == 3) {
        int v2 = 1 << 20;
        for (int r1 = 0; r1 < 3; ++r1)
            for (int r2 = r1 + 1; r2 < 3; ++r2)
                for (int c1 = 0; c1 < 3; ++c1)
                    for (int c2 = c1 + 1; c2 < 3; ++c2) {
                        const __int128 minor = static_cast<__int128>(m(r1, c1)) * m(r2, c2) - static_cast<__int128>(m(r1, c2)) * m(r2, c1);
                        if (minor != 0) v2 = std::min(v2, valuation128(minor, p));
                    }
        out.push_back(v2 - v1);
    }
    const int vd = valuation128(determinant(m.a, n), p);
    int sum = 0;
    for (int v : out) sum += v;
    out.push_back(vd - sum);
    for (int& v : out) v += m.shift;
    return out;
}

// All upper-triangular HNF integer matrices with the given diagonal exponents.
template <class F>
void for_each_hnf(int n, std::int64_t p, const std::vector<int>& a, F&& f) {
    std::vector<std::pair<int, int>> slots;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    ScaledMatrix m{n, 0, std::vector<std::int64_t>(static_cast<std::size_t>(n * n), 0)};
    for (int i = 0; i < n; ++i) m.a[static_cast<std::size_t>(i * n + i)] = checked_pow(p, a[static_cast<std::size_t>(i)]);
    std::vector<std::int64_t> bound;
    for (auto [i, j] : slots) bound.push_back(checked_pow(p, a[static_cast<std::size_t>(i)]));
    std::vector<std::int64_t> digit(slots.size(), 0);
    for (;;) {
        for (std::size_t s = 0; s < slots.size(); ++s)
            m.a[static_cast<std::size_t>(slots[s].first * n + slots[s].second)] = digit[s];
        f(m);
        std::size_t k = 0;
        while (k < slots.size() && ++digit[k] == bound[k]) digit[k++] = 0;
        if (k == slots.size()) break;
    }
}

}  // namespace detail

/// All cosets in K pi^lambda K / K.
inline std::vector<Coset> double_coset_decompose(const OracleConfig& cfg, const LatticePoint& lambda) {
    cfg.validate();
    if (static_cast<int>(lambda.size()) != cfg.n) throw std::invalid_argument("cocharacter has wrong rank");
    if (!std::is_sorted(lambda.begin(), lambda.end(), std::greater<>()))
        throw std::invalid_argument("cocharacter is not dominant: " + lambda.str());
    const int lo = lambda[lambda.size() - 1], spread = lambda[0] - lo;
    std::vector<int> target;
    for (int x : lambda) target.push_back(x - lo);
    std::sort(target.begin(), target.end());
    const int total = std::accumulate(target.begin(), target.end(), 0);
    std::vector<Coset> out;
    std::vector<int> a(static_cast<std::size_t>(cfg.n), 0);
    for (;;) {
        if (std::accumulate(a.begin(), a.end(), 0) == total) {
            detail::for_each_hnf(cfg.n, cfg.p, a, [&](const ScaledMatrix& m) {
                if (detail::elementary_divisors(m, cfg.p) == target) {
                    ScaledMatrix shifted = m;
                    shifted.shift = lo;
                    out.push_back(Coset::from_matrix(shifted, cfg.p));
                    detail::guard_size(out.size());
                }
            });
        }
        std::size_t k = 0;
        while (k < a.size() && ++a[k] > spread) a[k++] = 0;
        if (k == a.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline LatticePoint iwasawa_class(const Coset& x) { return x.iwasawa(); }

/// Number of cosets of K pi^lambda K / K in U pi^nu K.
inline std::int64_t satake_count(const OracleConfig& cfg, const LatticePoint& lambda, const LatticePoint& nu) {
    std::int64_t count = 0;
    for (const auto& x : double_coset_decompose(cfg, lambda)) count += x.iwasawa() == nu ? 1 : 0;
    return count;
}

struct SatakeCountRow {
    LatticePoint nu;
    std::int64_t raw = 0;
    Rational dotted;  // raw * p^{-<nu, 2 rho>}
};

inline std::vector<SatakeCountRow> satake_count_table(const OracleConfig& cfg, const LatticePoint& lambda) {
    const RootDatum gl = RootDatum::builtin("GL" + std::to_string(cfg.n));
    std::map<LatticePoint, std::int64_t> counts;
    for (const auto& x : double_coset_decompose(cfg, lambda)) ++counts[x.iwasawa()];
    std::vector<SatakeCountRow> rows;
    for (const auto& [nu, c] : counts) {
        const int e = gl.rho_pairing2(nu);
        Rational scale(1);
        for (int i = 0; i < std::abs(e); ++i) scale *= Rational(cfg.p);
        rows.push_back({nu, c, e > 0 ? Rational(c) / scale : Rational(c) * scale});
    }
    return rows;
}

/// Upper unipotent u with u_ij in [0, p^{mu_i - mu_j}): representatives of U(O) / pi^mu U(O) pi^-mu.
inline std::vector<ScaledMatrix> unipotent_representatives(const OracleConfig& cfg, const LatticePoint& mu) {
    const int n = cfg.n;
    std::vector<std::pair<int, int>> slots;
    std::vector<std::int64_t> bound;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int e = mu[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(j)];
            if (e < 0) throw std::invalid_argument("cocharacter is not dominant: " + mu.str());
            slots.emplace_back(i, j);
            bound.push_back(detail::checked_pow(cfg.p, e));
        }
    std::vector<ScaledMatrix> out;
    std::vector<std::int64_t> digit(slots.size(), 0);
    for (;;) {
        ScaledMatrix u = ScaledMatrix::identity(n);
        for (std::size_t s = 0; s < slots.size(); ++s) u.a[static_cast<std::size_t>(slots[s].first * n + slots[s].second)] = digit[s];
        out.push_back(u);
        detail::guard_size(out.size());
        std::size_t k = 0;
        while (k < slots.size() && ++digit[k] == bound[k]) digit[k++] = 0;
        if (k == slots.size()) break;
    }
    return out;
}

/// u_mu(xK) = sum_u x u pi^mu K for x upper triangular; mu dominant, so pi^mu is antidominant.
inline std::vector<Coset> u_apply(const OracleConfig& cfg, const LatticePoint& mu, const Coset& x) {
    cfg.validate();
    const ScaledMatrix t = ScaledMatrix::uniformizer(mu, cfg.p);
    const ScaledMatrix g = x.matrix();
    std::vector<Coset> out;
    for (const auto& u : unipotent_representatives(cfg, mu)) out.push_back(Coset::from_matrix(g * u * t, cfg.p));
    return out;
}

/// Exponent of [I : I cap x I x^-1] for x = pi^lambda P_w (P_w e_k = e_{perm[k]}).
inline int iwahori_index_exponent(const LatticePoint& lambda, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<int> inv(perm.size());
    for (int k = 0; k < n; ++k) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = k;
    auto base = [](int i, int j) { return i > j ? 1 : 0; };
    int e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int c = lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] +
                          base(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]);
            e += std::max(0, c - base(i, j));
        }
    return e;
}

/// The extended affine Weyl element of the matrix pi^lambda P_w.
inline AffineElement affine_of_matrix(const HeckeAlgebra& H, const LatticePoint& lambda, const std::vector<int>& perm) {
    return {H.uniformizer(lambda).lambda, H.datum().index_of(IntMatrix::permutation(perm))};
}

// ---------------------------------------------------------------------------
// Coset functions and the numeric check

class CosetOracle {
   public:
    explicit CosetOracle(OracleConfig cfg) : cfg_(cfg) { cfg_.validate(); }

    const OracleConfig& config() const { return cfg_; }

    const std::vector<Coset>& double_coset(const LatticePoint& lambda) {
        if (auto it = double_cosets_.find(lambda); it != double_cosets_.end()) return it->second;
        return double_cosets_.emplace(lambda, double_coset_decompose(cfg_, lambda)).first->second;
    }

    /// Right action of f_lambda: gK -> sum over y in K pi^lambda K / K of g y K.
    CosetFunction apply_basis(const LatticePoint& lambda, const CosetFunction& f) {
        CosetFunction out;
        const auto& ys = double_coset(lambda);
        for (const auto& [x, c] : f) {
            const ScaledMatrix g = x.matrix();
            for (const auto& y : ys) detail::add_to(out, Coset::from_matrix(g * y.matrix(), cfg_.p), c);
            ++operations_;
        }
        detail::guard_size(out.size());
        return out;
    }

    CosetFunction apply_spherical(const std::map<LatticePoint, Rational>& h, const CosetFunction& f) {
        CosetFunction out;
        for (const auto& [lambda, c] : h)
            for (const auto& [x, v] : apply_basis(lambda, f)) detail::add_to(out, x, v * c);
        return out;
    }

    CosetFunction apply_u(const LatticePoint& mu, const CosetFunction& f) {
        CosetFunction out;
        for (const auto& [x, c] : f) {
            for (const auto& y : u_apply(cfg_, mu, x)) detail::add_to(out, y, c);
            ++operations_;
        }
        detail::guard_size(out.size());
        return out;
    }

    /// Coefficient of f_nu in f_a * f_b, read off as the multiplicity of pi^nu K.
    std::int64_t convolution_coefficient(const LatticePoint& a, const LatticePoint& b, const LatticePoint& nu) {
        const Coset target = Coset::from_matrix(ScaledMatrix::uniformizer(nu, cfg_.p), cfg_.p);
        std::int64_t count = 0;
        for (const auto& x : double_coset(a))
            for (const auto& y : double_coset(b)) count += Coset::from_matrix(x.matrix() * y.matrix(), cfg_.p) == target;
        return count;
    }

    /// Test cosets: all HNF lattices with diagonal exponents in [0, radius].
    std::vector<Coset> test_cosets() const {
        std::set<Coset> out;
        std::vector<int> a(static_cast<std::size_t>(cfg_.n), 0);
        for (;;) {
            detail::for_each_hnf(cfg_.n, cfg_.p, a, [&](const ScaledMatrix& m) { out.insert(Coset::from_matrix(m, cfg_.p)); });
            detail::guard_size(out.size());
            std::size_t k = 0;
            while (k < a.size() && ++a[k] > cfg_.radius) a[k++] = 0;
            if (k == a.size()) break;
        }
        return {out.begin(), out.end()};
    }

    std::size_t operations() const { return operations_; }

   private:
    OracleConfig cfg_;
    std::map<LatticePoint, std::vector<Coset>> double_cosets_;
    std::size_t operations_ = 0;
};

inline std::map<LatticePoint, Rational> specialize(const SphericalElement& h, std::int64_t p) {
    std::map<LatticePoint, Rational> out;
    for (const auto& [lambda, c] : h.terms()) out[lambda] = evaluate_at_q(c, p);
    return out;
}

struct NumericReport {
    std::size_t cosets_tested = 0;
    std::size_t failures = 0;
    std::optional<Coset> first_failure;
    std::size_t coset_operations = 0;
    bool satake_counts_match = false;
    bool convolution_matches = false;
    bool iwahori_indices_match = false;
    bool u_counts_match = false;
    bool perturbed = false;
    bool pass = false;
};

namespace detail {

inline std::vector<LatticePoint> dominant_grid(int n, int lo, int hi) {
    std::vector<LatticePoint> out;
    std::vector<int> c(static_cast<std::size_t>(n), lo);
    for (;;) {
        if (std::is_sorted(c.begin(), c.end(), std::greater<>())) out.emplace_back(std::vector<int>(c));
        std::size_t k = 0;
        while (k < c.size() && ++c[k] > hi) c[k++] = lo;
        if (k == c.size()) break;
    }
    return out;
}

inline std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace detail

/// Satake coefficients at q = p against raw coset counts, for dominant lambda with entries in [lo, hi].
inline bool satake_counts_agree(CosetOracle& oracle, SatakeEngine& engine, int lo = -1, int hi = 2) {
    const auto& cfg = oracle.config();
    for (const auto& lambda : detail::dominant_grid(cfg.n, lo, hi)) {
        const AlgebraElement& img = engine.basis_image(lambda);
        std::size_t seen = 0;
        for (const auto& row : satake_count_table(cfg, lambda)) {
            if (evaluate_at_q(img.coeff(row.nu), cfg.p) != row.dotted) return false;
            ++seen;
        }
        if (seen != img.size()) return false;
    }
    return true;
}

/// Oracle convolution against the Satake-defined product on pairs of small basis elements.
inline bool convolution_agrees(CosetOracle& oracle, SatakeEngine& engine) {
    const auto& cfg = oracle.config();
    const auto grid = detail::dominant_grid(cfg.n, 0, 1);
    for (const auto& a : grid)
        for (const auto& b : grid) {
            const SphericalElement prod = engine.multiply(SphericalElement::basis(a), SphericalElement::basis(b));
            for (const auto& nu : dominant_weights_below(engine.datum(), dominant_rep(engine.datum(), a + b).first))
                if (evaluate_at_q(prod.coeff(nu), cfg.p) != Rational(oracle.convolution_coefficient(a, b, nu))) return false;
        }
    return true;
}

/// [I : I cap x I x^-1] = p^{l(x)} for x = pi^lambda P_w, lambda in [-1, 1]^n and every permutation.
inline bool iwahori_indices_agree(const OracleConfig& cfg, const HeckeAlgebra& H) {
    std::vector<int> c(static_cast<std::size_t>(cfg.n), -1);
    const auto perms = detail::permutations(cfg.n);
    for (;;) {
        const LatticePoint lambda{std::vector<int>(c)};
        for (const auto& perm : perms)
            if (iwahori_index_exponent(lambda, perm) != H.length(affine_of_matrix(H, lambda, perm))) return false;
        std::size_t k = 0;
        while (k < c.size() && ++c[k] > 1) c[k++] = -1;
        if (k == c.size()) break;
    }
    return true;
}

/// H(u)(xK) = sum_k h_k(u^k(xK)) on every test coset, plus the convention cross-checks.
inline NumericReport verify_numeric(const OracleConfig& cfg, const ConjugacyClass& cc,
                                    std::optional<Perturbation> perturb) {
    cfg.validate();
    const RootDatum& rd = *cc.datum;
    const RootDatum gl = RootDatum::builtin("GL" + std::to_string(cfg.n));
    if (rd.rank() != gl.rank() || rd.simple_roots() != gl.simple_roots() || rd.simple_coroots() != gl.simple_coroots() ||
        !rd.is_split())
        throw Unsupported("numeric verification needs the datum GL" + std::to_string(cfg.n));
    const LatticePoint mu = norm_cocharacter(cc);
    if (cfg.radius < mu[0] - mu[mu.size() - 1])
        throw OracleError("increase radius: it must be at least the spread of the cocharacter");
    NumericReport r;
    r.perturbed = perturb.has_value();
    SatakeEngine engine(cc.datum);
    HeckeAlgebra H(cc.datum);
    CosetOracle oracle(cfg);
    HeckePolynomial h = hecke_polynomial(engine, cc);
    if (perturb) {
        perturb->check(h.degree());
        auto& c = h.coeffs[static_cast<std::size_t>(perturb->coefficient)];
        c = c.scaled(q_power(perturb->q_exponent));
    }
    std::vector<std::map<LatticePoint, Rational>> coeffs;
    for (const auto& c : h.coeffs) coeffs.push_back(specialize(c, cfg.p));
    const auto u = unipotent_representatives(cfg, mu);
    std::int64_t expected_u = 1;
    for (int i = 0; i < H.length(H.uniformizer(mu)); ++i) expected_u *= cfg.p;
    r.u_counts_match = static_cast<std::int64_t>(u.size()) == expected_u;
    for (const auto& x : oracle.test_cosets()) {
        CosetFunction orbit{{x, Rational(1)}}, total;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (k > 0) orbit = oracle.apply_u(mu, orbit);
            for (const auto& [y, c] : oracle.apply_spherical(coeffs[k], orbit)) detail::add_to(total, y, c);
        }
        ++r.cosets_tested;
        if (!total.empty()) {
            if (!r.first_failure) r.first_failure = x;
            ++r.failures;
        }
    }
    r.coset_operations = oracle.operations();
    r.satake_counts_match = satake_counts_agree(oracle, engine);
    r.convolution_matches = convolution_agrees(oracle, engine);
    r.iwahori_indices_match = iwahori_indices_agree(cfg, H);
    r.pass = r.failures == 0 && r.satake_counts_match && r.convolution_matches && r.iwahori_indices_match && r.u_counts_match;
    return r;
}

inline NumericReport verify_numeric(const OracleConfig& cfg, const ConjugacyClass& cc, bool perturb = false) {
    return verify_numeric(cfg, cc, perturb ? std::optional<Perturbation>(Perturbation{}) : std::nullopt);
}

}  // namespace seedrel

#endif  // SEEDREL_COSET_ORACLE_HPP
