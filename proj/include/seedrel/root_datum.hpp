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
   Based root data (X^*, Phi, X_*, Phi^vee) with an optional pinned Frobenius
   acting on X_*, together with the Weyl-group combinatorics that everything
   else is built on.

   Cocharacters (elements of X_*) are the weights of the dual group, so the
   dual-side objects (dominance, saturated sets, Weyl characters, Kostant's
   partition function, Kostka-Foulkes polynomials) are expressed with the
   coroots as "roots" and rho^vee (half-sum of positive coroots) as "rho".
   The pairing <lambda, 2 rho> against the half-sum of positive roots gives
   the exponents of q^(1/2) = v.
*/

#ifndef SEEDREL_ROOT_DATUM_HPP
#define SEEDREL_ROOT_DATUM_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "rational.hpp"

namespace seedrel {

class DatumError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Square integer matrix acting on column vectors of X_*.
class IntMatrix {
   public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
    IntMatrix(std::size_t n, std::vector<int> entries) : n_(n), a_(std::move(entries)) {
        if (a_.size() != n * n) throw std::invalid_argument("matrix size mismatch");
    }
    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    /// Matrix sending e_i to e_{perm[i]}.
    static IntMatrix permutation(const std::vector<int>& perm) {
        IntMatrix m(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (perm[i] < 0 || static_cast<std::size_t>(perm[i]) >= perm.size())
                throw std::invalid_argument("permutation entry out of range");
            m(static_cast<std::size_t>(perm[i]), i) = 1;
        }
        return m;
    }

    std::size_t size() const { return n_; }
    int operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
    int& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

    LatticePoint apply(const LatticePoint& x) const {
        if (x.size() != n_) throw std::invalid_argument("rank mismatch in matrix action");
        LatticePoint y(n_);
        for (std::size_t r = 0; r < n_; ++r) {
            int s = 0;
            for (std::size_t c = 0; c < n_; ++c) s += (*this)(r, c) * x[c];
            y[r] = s;
        }
        return y;
    }
    IntMatrix transpose() const {
        IntMatrix t(n_);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix m(a.n_);
        for (std::size_t r = 0; r < a.n_; ++r)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const int x = a(r, k);
                if (x == 0) continue;
                for (std::size_t c = 0; c < a.n_; ++c) m(r, c) += x * b(k, c);
            }
        return m;
    }
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) { return a.a_ <=> b.a_; }

   private:
    std::size_t n_ = 0;
    std::vector<int> a_;
};

/// Input for RootDatum::build; mirrors the JSON datum file.
struct DatumDescription {
    std::string name;
    std::size_t rank = 0;
    std::vector<LatticePoint> simple_roots;    // in X^*
    std::vector<LatticePoint> simple_coroots;  // in X_*
    std::optional<IntMatrix> frobenius;        // on X_*
};

struct WeylElement {
    IntMatrix action;       // on X_*
    std::vector<int> word;  // reduced word in the simple reflections
    int length = 0;
};

class RootDatum {
   public:
    static constexpr std::size_t kMaxWeylOrder = 100000;
    static constexpr int kMaxFrobeniusOrder = 1000;

    static RootDatum build(const DatumDescription& desc) {
        RootDatum rd;
        rd.name_ = desc.name;
        rd.rank_ = desc.rank;
        rd.simple_roots_ = desc.simple_roots;
        rd.simple_coroots_ = desc.simple_coroots;
        rd.validate_shapes();
        rd.build_cartan();
        rd.build_roots();
        rd.build_weyl();
        rd.build_frobenius(desc.frobenius);
        return rd;
    }

    static std::vector<std::string> builtin_names() {
        return {"GL1", "GL2", "GL3", "GL4", "SL2", "SL3", "PGL2", "PGL3",
                "Sp4", "SO5", "PSp4", "G2", "GL2xGL2", "ResGL2"};
    }

    static RootDatum builtin(std::string_view name) {
        DatumDescription d;
        d.name = std::string(name);
        auto gl = [&](std::size_t n) {
            d.rank = n;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                LatticePoint a(n);
                a[i] = 1;
                a[i + 1] = -1;
                d.simple_roots.push_back(a);
                d.simple_coroots.push_back(a);
            }
        };
        if (name.size() == 3 && name.substr(0, 2) == "GL" && name[2] >= '1' && name[2] <= '6') {
            gl(static_cast<std::size_t>(name[2] - '0'));
        } else if (name == "SL2") {
            d.rank = 1;
            d.simple_roots = {{2}};
            d.simple_coroots = {{1}};
        } else if (name == "PGL2") {
            d.rank = 1;
            d.simple_roots = {{1}};
            d.simple_coroots = {{2}};
        } else if (name == "SL3") {
            // X_* = coroot lattice, coordinates in the simple coroots
            d.rank = 2;
            d.simple_roots = {{2, -1}, {-1, 2}};
            d.simple_coroots = {{1, 0}, {0, 1}};
        } else if (name == "PGL3") {
            // X_* = coweight lattice, coordinates in the fundamental coweights
            d.rank = 2;
            d.simple_roots = {{1, 0}, {0, 1}};
            d.simple_coroots = {{2, -1}, {-1, 2}};
        } else if (name == "Sp4") {
            // simply connected C2: roots +-e1+-e2, +-2e_i; coroots +-e1+-e2, +-e_i
            d.rank = 2;
            d.simple_roots = {{1, -1}, {0, 2}};
            d.simple_coroots = {{1, -1}, {0, 1}};
        } else if (name == "SO5" || name == "PSp4") {
            // adjoint C2 (= SO5): roots +-e1+-e2, +-e_i; coroots +-e1+-e2, +-2e_i
            d.rank = 2;
            d.simple_roots = {{1, -1}, {0, 1}};
            d.simple_coroots = {{1, -1}, {0, 2}};
        } else if (name == "G2") {
            d.rank = 2;
            d.simple_roots = {{2, -1}, {-3, 2}};
            d.simple_coroots = {{1, 0}, {0, 1}};
        } else if (name == "GL2xGL2" || name == "ResGL2") {
            d.rank = 4;
            d.simple_roots = {{1, -1, 0, 0}, {0, 0, 1, -1}};
            d.simple_coroots = d.simple_roots;
            if (name == "ResGL2") d.frobenius = IntMatrix::permutation({2, 3, 0, 1});
        } else {
            throw DatumError("unknown built-in datum '" + std::string(name) + "'");
        }
        return build(d);
    }

    const std::string& name() const { return name_; }
    std::size_t rank() const { return rank_; }
    std::size_t semisimple_rank() const { return simple_roots_.size(); }
    const std::vector<LatticePoint>& simple_roots() const { return simple_roots_; }
    const std::vector<LatticePoint>& simple_coroots() const { return simple_coroots_; }
    /// <alpha_j^vee, alpha_i>
    int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

    const std::vector<LatticePoint>& positive_roots() const { return pos_roots_; }
    const std::vector<LatticePoint>& positive_coroots() const { return pos_coroots_; }
    /// Sum of positive roots (in X^*).
    const LatticePoint& two_rho() const { return two_rho_; }
    /// Sum of positive coroots (in X_*).
    const LatticePoint& two_rho_check() const { return two_rho_check_; }
    /// <lambda, 2 rho>; q^<lambda,rho> = v^(this).
    int rho_pairing2(const LatticePoint& lambda) const { return pairing(lambda, two_rho_); }

    const std::vector<WeylElement>& weyl() const { return weyl_; }
    std::size_t weyl_size() const { return weyl_.size(); }
    std::size_t simple_reflection(std::size_t i) const { return simple_index_[i]; }
    std::size_t multiply(std::size_t a, std::size_t b) const { return mult_[a * weyl_.size() + b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t index_of(const IntMatrix& m) const {
        auto it = weyl_index_.find(m);
        if (it == weyl_index_.end()) throw std::logic_error("matrix is not a Weyl group element");
        return it->second;
    }
    LatticePoint act(std::size_t w, const LatticePoint& lambda) const { return weyl_[w].action.apply(lambda); }
    /// Whether w^-1 maps the positive root with index i to a positive root.
    bool inverse_keeps_positive(std::size_t w, std::size_t i) const {
        return inverse_keeps_[w * pos_roots_.size() + i];
    }

    /// Rational coordinates of lambda in the simple coroots, when lambda lies
    /// in their Q-span; integral entries iff lambda is in the coroot lattice.
    std::optional<std::vector<Rational>> coroot_coordinates(const LatticePoint& lambda) const {
        const std::size_t r = semisimple_rank();
        std::vector<Rational> c(r);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < r; ++i)
                c[j] += cartan_inv_[j][i] * Rational(pairing(lambda, simple_roots_[i]));
        std::vector<Rational> check(rank_);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < rank_; ++k) check[k] += c[j] * Rational(simple_coroots_[j][k]);
        for (std::size_t k = 0; k < rank_; ++k)
            if (check[k] != Rational(lambda[k])) return std::nullopt;
        return c;
    }

    bool is_split() const { return frobenius_ == IntMatrix::identity(rank_); }
    const IntMatrix& frobenius() const { return frobenius_; }
    int frobenius_order() const { return frobenius_order_; }
    LatticePoint frobenius_apply(const LatticePoint& lambda, int times = 1) const {
        LatticePoint x = lambda;
        const int k = ((times % frobenius_order_) + frobenius_order_) % frobenius_order_;
        for (int i = 0; i < k; ++i) x = frobenius_.apply(x);
        return x;
    }
    /// Smallest d >= 1 with sigma^d(lambda) = lambda.
    int frobenius_orbit_size(const LatticePoint& lambda) const {
        LatticePoint x = frobenius_.apply(lambda);
        int d = 1;
        while (x != lambda) {
            x = frobenius_.apply(x);
            ++d;
        }
        return d;
    }
    /// Whether the Weyl element commutes with the Frobenius.
    bool commutes_with_frobenius(std::size_t w) const {
        return weyl_[w].action * frobenius_ == frobenius_ * weyl_[w].action;
    }

    /// Datum on the same lattices with a subset of the simple roots (a standard Levi).
    RootDatum sub_datum(const std::vector<std::size_t>& simple_subset, std::string name) const {
        DatumDescription d;
        d.name = std::move(name);
        d.rank = rank_;
        for (std::size_t i : simple_subset) {
            if (i >= semisimple_rank()) throw DatumError("simple root index out of range");
            d.simple_roots.push_back(simple_roots_[i]);
            d.simple_coroots.push_back(simple_coroots_[i]);
        }
        std::set<LatticePoint> subset(d.simple_coroots.begin(), d.simple_coroots.end());
        bool stable = true;
        for (const auto& c : d.simple_coroots) stable = stable && subset.count(frobenius_.apply(c));
        if (stable) d.frobenius = frobenius_;
        return build(d);
    }

   private:
    RootDatum() = default;

    void validate_shapes() {
        if (rank_ == 0) throw DatumError("datum rank must be positive");
        if (simple_roots_.size() != simple_coroots_.size())
            throw DatumError("number of simple roots and simple coroots differ");
        for (const auto& a : simple_roots_)
            if (a.size() != rank_) throw DatumError("simple root has wrong length");
        for (const auto& a : simple_coroots_)
            if (a.size() != rank_) throw DatumError("simple coroot has wrong length");
    }

    void build_cartan() {
        const std::size_t r = semisimple_rank();
        cartan_.assign(r, std::vector<int>(r, 0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) cartan_[i][j] = pairing(simple_coroots_[j], simple_roots_[i]);
        for (std::size_t i = 0; i < r; ++i) {
            if (cartan_[i][i] != 2) throw DatumError("invalid Cartan matrix: diagonal entry is not 2");
            for (std::size_t j = 0; j < r; ++j) {
                if (i == j) continue;
                if (cartan_[i][j] > 0) throw DatumError("invalid Cartan matrix: positive off-diagonal entry");
                if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
                    throw DatumError("invalid Cartan matrix: asymmetric zero pattern");
                if (cartan_[i][j] * cartan_[j][i] > 3)
                    throw DatumError("invalid Cartan matrix: infinite Weyl group");
            }
        }
        // rational inverse by Gauss-Jordan
        std::vector<std::vector<Rational>> a(r, std::vector<Rational>(2 * r));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) a[i][j] = Rational(cartan_[i][j]);
            a[i][r + i] = Rational(1);
        }
        for (std::size_t col = 0; col < r; ++col) {
            std::size_t piv = col;
            while (piv < r && a[piv][col].is_zero()) ++piv;
            if (piv == r) throw DatumError("invalid Cartan matrix: singular");
            std::swap(a[piv], a[col]);
            const Rational inv = Rational(1) / a[col][col];
            for (auto& x : a[col]) x *= inv;
            for (std::size_t row = 0; row < r; ++row) {
                if (row == col || a[row][col].is_zero()) continue;
                const Rational f = a[row][col];
                for (std::size_t k = 0; k < 2 * r; ++k) a[row][k] -= f * a[col][k];
            }
        }
        cartan_inv_.assign(r, std::vector<Rational>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) cartan_inv_[i][j] = a[i][r + j];
    }

    // Roots are generated together with their coroots and their coordinates in
    // the simple roots; a root is positive iff its coordinates are >= 0.
    void build_roots() {
        const std::size_t r = semisimple_rank();
        struct Entry {
            LatticePoint root, coroot;
            std::vector<int> coords;
        };
        std::map<LatticePoint, Entry> seen;
        std::deque<Entry> queue;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<int> c(r, 0);
            c[i] = 1;
            Entry e{simple_roots_[i], simple_coroots_[i], c};
            if (seen.emplace(e.root, e).second) queue.push_back(e);
        }
        while (!queue.empty()) {
            Entry e = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < r; ++j) {
                const int k = pairing(simple_coroots_[j], e.root);
                Entry f{e.root - k * simple_roots_[j], e.coroot - pairing(e.coroot, simple_roots_[j]) * simple_coroots_[j],
                        e.coords};
                f.coords[j] -= k;
                if (seen.emplace(f.root, f).second) {
                    if (seen.size() > 2000) throw DatumError("infinite Weyl group: root system does not close");
                    queue.push_back(f);
                }
            }
        }
        two_rho_ = LatticePoint(rank_);
        two_rho_check_ = LatticePoint(rank_);
        std::vector<std::pair<std::vector<int>, Entry>> pos;
        for (const auto& [root, e] : seen) {
            const bool nonneg = std::all_of(e.coords.begin(), e.coords.end(), [](int x) { return x >= 0; });
            const bool nonpos = std::all_of(e.coords.begin(), e.coords.end(), [](int x) { return x <= 0; });
            if (!nonneg && !nonpos) throw DatumError("invalid root datum: root with mixed-sign coordinates");
            if (nonneg) pos.emplace_back(e.coords, e);
        }
        // order by height, then coordinates
        std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
            int ha = 0, hb = 0;
            for (int x : a.first) ha += x;
            for (int x : b.first) hb += x;
            return ha != hb ? ha < hb : a.first < b.first;
        });
        for (const auto& [coords, e] : pos) {
            pos_roots_.push_back(e.root);
            pos_coroots_.push_back(e.coroot);
            pos_root_index_.emplace(e.root, pos_roots_.size() - 1);
            two_rho_ += e.root;
            two_rho_check_ += e.coroot;
        }
    }

    // Breadth-first closure; elements ordered by (length, lexicographic word).
    void build_weyl() {
        const std::size_t r = semisimple_rank();
        std::vector<IntMatrix> reflections;
        for (std::size_t i = 0; i < r; ++i) {
            IntMatrix s = IntMatrix::identity(rank_);
            for (std::size_t row = 0; row < rank_; ++row)
                for (std::size_t col = 0; col < rank_; ++col)
                    s(row, col) -= simple_coroots_[i][row] * simple_roots_[i][col];
            reflections.push_back(s);
        }
        weyl_.push_back(WeylElement{IntMatrix::identity(rank_), {}, 0});
        weyl_index_.emplace(weyl_[0].action, 0);
        std::size_t level_begin = 0;
        while (level_begin < weyl_.size()) {
            const std::size_t level_end = weyl_.size();
            for (std::size_t k = level_begin; k < level_end; ++k) {
                for (std::size_t i = 0; i < r; ++i) {
                    IntMatrix m = weyl_[k].action * reflections[i];
                    if (weyl_index_.count(m)) continue;
                    WeylElement e{m, weyl_[k].word, weyl_[k].length + 1};
                    e.word.push_back(static_cast<int>(i));
                    weyl_index_.emplace(m, weyl_.size());
                    weyl_.push_back(std::move(e));
                    if (weyl_.size() > kMaxWeylOrder) throw DatumError("infinite Weyl group");
                }
            }
            level_begin = level_end;
        }
        const std::size_t n = weyl_.size();
        simple_index_.resize(r);
        for (std::size_t i = 0; i < r; ++i) simple_index_[i] = weyl_index_.at(reflections[i]);
        mult_.assign(n * n, 0);
        inverse_.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const std::size_t c = weyl_index_.at(weyl_[a].action * weyl_[b].action);
                mult_[a * n + b] = c;
                if (c == 0) inverse_[a] = b;
            }
        // w^-1 acts on X^* by the transpose of w's matrix: <lambda, w^-1 alpha> = <w lambda, alpha>.
        inverse_keeps_.assign(n * pos_roots_.size(), false);
        for (std::size_t w = 0; w < n; ++w) {
            const IntMatrix t = weyl_[w].action.transpose();
            for (std::size_t i = 0; i < pos_roots_.size(); ++i)
                inverse_keeps_[w * pos_roots_.size() + i] = pos_root_index_.count(t.apply(pos_roots_[i])) > 0;
        }
    }

    void build_frobenius(const std::optional<IntMatrix>& sigma) {
        frobenius_ = sigma.value_or(IntMatrix::identity(rank_));
        if (frobenius_.size() != rank_) throw DatumError("frobenius matrix has wrong size");
        const IntMatrix id = IntMatrix::identity(rank_);
        IntMatrix power = frobenius_;
        frobenius_order_ = 1;
        while (power != id) {
            power = power * frobenius_;
            if (++frobenius_order_ > kMaxFrobeniusOrder) throw DatumError("frobenius has infinite order");
        }
        IntMatrix inv = id;
        for (int i = 1; i < frobenius_order_; ++i) inv = inv * frobenius_;
        const IntMatrix dual = inv.transpose();  // action on X^*
        const std::size_t r = semisimple_rank();
        for (std::size_t j = 0; j < r; ++j) {
            const LatticePoint image = frobenius_.apply(simple_coroots_[j]);
            auto it = std::find(simple_coroots_.begin(), simple_coroots_.end(), image);
            if (it == simple_coroots_.end())
                throw DatumError("frobenius does not permute the simple coroots");
            const auto k = static_cast<std::size_t>(it - simple_coroots_.begin());
            if (dual.apply(simple_roots_[j]) != simple_roots_[k])
                throw DatumError("frobenius is not an automorphism of the based root datum");
        }
    }

    std::string name_;
    std::size_t rank_ = 0;
    std::vector<LatticePoint> simple_roots_, simple_coroots_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<Rational>> cartan_inv_;
    std::vector<LatticePoint> pos_roots_, pos_coroots_;
    std::map<LatticePoint, std::size_t> pos_root_index_;
    LatticePoint two_rho_, two_rho_check_;
    std::vector<WeylElement> weyl_;
    std::map<IntMatrix, std::size_t> weyl_index_;
    std::vector<std::size_t> simple_index_, mult_, inverse_;
    std::vector<bool> inverse_keeps_;
    IntMatrix frobenius_;
    int frobenius_order_ = 1;
};

// ---------------------------------------------------------------------------
// Weyl-group and dominance combinatorics

inline const std::vector<WeylElement>& weyl_enumerate(const RootDatum& rd) { return rd.weyl(); }

inline bool is_dominant(const RootDatum& rd, const LatticePoint& lambda) {
    return std::all_of(rd.simple_roots().begin(), rd.simple_roots().end(),
                       [&](const LatticePoint& a) { return pairing(lambda, a) >= 0; });
}

/// Minuscule: <lambda, alpha> in {-1, 0, 1} for every root.
inline bool is_minuscule(const RootDatum& rd, const LatticePoint& lambda) {
    return std::all_of(rd.positive_roots().begin(), rd.positive_roots().end(), [&](const LatticePoint& a) {
        const int k = pairing(lambda, a);
        return k >= -1 && k <= 1;
    });
}

/// The dominant element of W.lambda and the index of a w with w.lambda dominant.
inline std::pair<LatticePoint, std::size_t> dominant_rep(const RootDatum& rd, const LatticePoint& lambda) {
    LatticePoint x = lambda;
    std::size_t w = 0;
    for (;;) {
        std::size_t i = 0;
        while (i < rd.semisimple_rank() && pairing(x, rd.simple_roots()[i]) >= 0) ++i;
        if (i == rd.semisimple_rank()) return {x, w};
        x = x - pairing(x, rd.simple_roots()[i]) * rd.simple_coroots()[i];
        w = rd.multiply(rd.simple_reflection(i), w);
    }
}

inline std::set<LatticePoint> weyl_orbit(const RootDatum& rd, const LatticePoint& lambda) {
    std::set<LatticePoint> orbit;
    for (std::size_t w = 0; w < rd.weyl_size(); ++w) orbit.insert(rd.act(w, lambda));
    return orbit;
}

/// lambda <= nu: nu - lambda is a non-negative integral combination of simple coroots.
inline bool dominance_leq(const RootDatum& rd, const LatticePoint& lambda, const LatticePoint& nu) {
    if (!is_dominant(rd, lambda) || !is_dominant(rd, nu))
        throw std::invalid_argument("dominance order is defined on dominant cocharacters only");
    const auto c = rd.coroot_coordinates(nu - lambda);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const Rational& x) { return x.is_integer() && x.num() >= 0; });
}

/// Dominant lambda <= mu, sorted by decreasing height then lexicographically.
inline std::vector<LatticePoint> dominant_weights_below(const RootDatum& rd, const LatticePoint& mu) {
    if (!is_dominant(rd, mu)) throw std::invalid_argument("cocharacter is not dominant: " + mu.str());
    std::set<LatticePoint> found{mu};
    std::deque<LatticePoint> queue{mu};
    while (!queue.empty()) {
        const LatticePoint x = queue.front();
        queue.pop_front();
        for (const auto& c : rd.positive_coroots()) {
            LatticePoint y = x - c;
            if (is_dominant(rd, y) && found.insert(y).second) queue.push_back(y);
        }
    }
    std::vector<LatticePoint> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [&](const LatticePoint& a, const LatticePoint& b) {
        const int ha = rd.rho_pairing2(a), hb = rd.rho_pairing2(b);
        return ha != hb ? ha > hb : a > b;
    });
    return out;
}

/// Saturated set: union of the W-orbits of dominant lambda <= mu.
inline std::set<LatticePoint> saturated_set(const RootDatum& rd, const LatticePoint& mu) {
    std::set<LatticePoint> out;
    for (const auto& lambda : dominant_weights_below(rd, mu)) {
        auto orbit = weyl_orbit(rd, lambda);
        out.insert(orbit.begin(), orbit.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Partition function, Kostka-Foulkes polynomials, characters

namespace detail {

/// Memoized q-analogue of Kostant's partition function over the positive coroots.
class PartitionTable {
   public:
    explicit PartitionTable(const RootDatum& rd) : rd_(rd) {
        for (const auto& c : rd.positive_coroots()) {
            auto coords = rd.coroot_coordinates(c);
            std::vector<int> v;
            for (const auto& x : *coords) v.push_back(static_cast<int>(x.num()));
            coroots_.push_back(v);
        }
    }

    TPoly operator()(const LatticePoint& beta) {
        const auto c = rd_.coroot_coordinates(beta);
        if (!c) return {};
        std::vector<int> v;
        for (const auto& x : *c) {
            if (!x.is_integer() || x.num() < 0) return {};
            v.push_back(static_cast<int>(x.num()));
        }
        return count(0, v);
    }

   private:
    TPoly count(std::size_t k, const std::vector<int>& v) {
        if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) return 1;
        if (k == coroots_.size()) return {};
        auto key = std::make_pair(k, v);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        TPoly total;
        std::vector<int> rest = v;
        for (int m = 0;; ++m) {
            total += count(k + 1, rest).shifted(m);
            bool ok = true;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                rest[i] -= coroots_[k][i];
                ok = ok && rest[i] >= 0;
            }
            if (!ok) break;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    const RootDatum& rd_;
    std::vector<std::vector<int>> coroots_;
    std::map<std::pair<std::size_t, std::vector<int>>, TPoly> memo_;
};

/// w(lambda + rho^vee) - (nu + rho^vee) for every w, computed without halves.
inline LatticePoint dot_shift(const RootDatum& rd, std::size_t w, const LatticePoint& lambda, const LatticePoint& nu) {
    const LatticePoint twice = rd.act(w, rd.two_rho_check()) - rd.two_rho_check();
    LatticePoint half(twice.size());
    for (std::size_t i = 0; i < twice.size(); ++i) half[i] = twice[i] / 2;
    return rd.act(w, lambda) + half - nu;
}

}  // namespace detail

/// Coefficient of e^beta in prod_{alpha > 0} (1 - t e^{alpha^vee})^{-1}.
inline TPoly kostant_q_partition(const RootDatum& rd, const LatticePoint& beta) {
    detail::PartitionTable table(rd);
    return table(beta);
}

namespace detail {

inline TPoly kostka_foulkes_with(const RootDatum& rd, PartitionTable& table, const LatticePoint& lambda,
                                 const LatticePoint& nu) {
    if (!dominance_leq(rd, nu, lambda)) return {};
    TPoly k;
    for (std::size_t w = 0; w < rd.weyl_size(); ++w) {
        const TPoly p = table(dot_shift(rd, w, lambda, nu));
        if (rd.weyl()[w].length % 2 == 0) k += p;
        else k -= p;
    }
    if (!k.coefficients_nonnegative())
        throw std::logic_error("Kostka-Foulkes positivity violated for " + lambda.str() + ", " + nu.str());
    return k;
}

}  // namespace detail

/// Lusztig's q-analogue of weight multiplicity K_{lambda,nu}(t).
inline TPoly kostka_foulkes(const RootDatum& rd, const LatticePoint& lambda, const LatticePoint& nu) {
    detail::PartitionTable table(rd);
    return detail::kostka_foulkes_with(rd, table, lambda, nu);
}

/// Weyl dimension formula, prod over positive roots of <lambda + rho^vee, alpha> / <rho^vee, alpha>.
inline std::int64_t weyl_dimension(const RootDatum& rd, const LatticePoint& lambda) {
    if (!is_dominant(rd, lambda)) throw std::invalid_argument("cocharacter is not dominant: " + lambda.str());
    Rational d(1);
    const LatticePoint shifted = 2 * lambda + rd.two_rho_check();
    for (const auto& a : rd.positive_roots())
        d *= Rational(pairing(shifted, a), pairing(rd.two_rho_check(), a));
    if (!d.is_integer()) throw std::logic_error("non-integral Weyl dimension");
    return d.num();
}

/// Multiplicities of the dominant weights of the irreducible dual-group
/// representation with highest weight lambda (Freudenthal's recursion).
inline std::map<LatticePoint, std::int64_t> dominant_multiplicities(const RootDatum& rd, const LatticePoint& lambda) {
    const auto dominant = dominant_weights_below(rd, lambda);
    // W-invariant form B(x, y) = sum_{alpha > 0} <x, alpha><y, alpha>
    auto form = [&](const LatticePoint& x, const LatticePoint& y) {
        std::int64_t s = 0;
        for (const auto& a : rd.positive_roots())
            s += static_cast<std::int64_t>(pairing(x, a)) * pairing(y, a);
        return s;
    };
    std::map<LatticePoint, std::int64_t> mult;
    auto lookup = [&](const LatticePoint& x) -> std::int64_t {
        auto it = mult.find(dominant_rep(rd, x).first);
        return it == mult.end() ? 0 : it->second;
    };
    const LatticePoint top = 2 * lambda + rd.two_rho_check();
    const std::int64_t top_norm = form(top, top);
    for (const auto& nu : dominant) {
        if (nu == lambda) {
            mult[nu] = 1;
            continue;
        }
        std::int64_t rhs = 0;
        for (const auto& c : rd.positive_coroots()) {
            for (int k = 1;; ++k) {
                const LatticePoint x = nu + k * c;
                const std::int64_t m = lookup(x);
                if (m == 0) break;
                rhs += 8 * m * form(x, c);
            }
        }
        const LatticePoint here = 2 * nu + rd.two_rho_check();
        const std::int64_t lhs = top_norm - form(here, here);
        if (lhs <= 0 || rhs % lhs != 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
        if (rhs != 0) mult[nu] = rhs / lhs;
    }
    return mult;
}

/// Character of the dual-group irreducible with highest weight lambda, as an
/// element of Z[X_*].
inline AlgebraElement weyl_character(const RootDatum& rd, const LatticePoint& lambda) {
    AlgebraElement chi(rd.rank());
    for (const auto& [nu, m] : dominant_multiplicities(rd, lambda))
        for (const auto& x : weyl_orbit(rd, nu)) chi.add_term(x, m);
    return chi;
}

}  // namespace seedrel

#endif  // SEEDREL_ROOT_DATUM_HPP
