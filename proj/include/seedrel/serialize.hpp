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

// JSON encoding. Needs nlohmann/json on the include path (target seedrel_vendor).

#ifndef SEEDREL_SERIALIZE_HPP
#define SEEDREL_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "affine_hecke.hpp"
#include "coset_oracle.hpp"
#include "laurent.hpp"
#include "root_datum.hpp"
#include "satake.hpp"

namespace seedrel::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {v_exponent: coeff}, ascending exponents.
inline Json to_json(const LaurentScalar& c) {
    Json j = Json::object();
    for (const auto& [e, k] : c.terms()) j[std::to_string(e)] = k;
    return j;
}

inline Json to_json(const AlgebraElement& x) {
    Json j = Json::array();
    for (const auto& [e, c] : x.terms()) j.push_back({{"exponent", e.str()}, {"coeff", to_json(c)}});
    return j;
}

inline Json to_json(const SphericalElement& x) {
    Json j = Json::array();
    for (const auto& [lambda, c] : x.terms()) j.push_back({{"lambda", lambda.str()}, {"coeff", to_json(c)}});
    return j;
}

inline Json to_json(const RootDatum& rd, const HeckeElement& x) {
    Json j = Json::array();
    for (const auto& [a, c] : x.terms())
        j.push_back({{"translation", a.lambda.str()}, {"word", rd.weyl()[a.w].word}, {"coeff", to_json(c)}});
    return j;
}

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const Coset& x) {
    Json rows = Json::array();
    for (int r = 0; r < x.n(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < x.n(); ++c) row.push_back(x.entry(r, c));
        rows.push_back(row);
    }
    return {{"shift", x.shift()}, {"hnf", rows}, {"iwasawa", x.iwasawa().str()}};
}

/// Coefficients keyed by the power of X, highest first.
inline Json to_json(const HeckePolynomial& h) {
    Json coeffs = Json::object();
    for (int k = h.degree(); k >= 0; --k) coeffs[std::to_string(k)] = to_json(h.coeffs[static_cast<std::size_t>(k)]);
    return {{"degree", h.degree()}, {"coeffs", coeffs}};
}

inline Json header(const std::string& kind) { return {{"schema_version", kSchemaVersion}, {"kind", kind}}; }

namespace detail {

inline std::vector<LatticePoint> point_list(const Json& rows) {
    std::vector<LatticePoint> out;
    for (const auto& r : rows) out.emplace_back(r.get<std::vector<int>>());
    return out;
}

}  // namespace detail

/// {name, rank, simple_roots, simple_coroots, frobenius?}; frobenius is a
/// permutation of coordinates or a square integer matrix acting on X_*.
inline DatumDescription datum_description(const Json& j) {
    DatumDescription d;
    d.name = j.value("name", std::string("custom"));
    d.rank = j.at("rank").get<std::size_t>();
    d.simple_roots = detail::point_list(j.at("simple_roots"));
    d.simple_coroots = detail::point_list(j.at("simple_coroots"));
    if (j.contains("frobenius") && !j.at("frobenius").is_null()) {
        const Json& f = j.at("frobenius");
        if (f.empty() || !f.front().is_array()) {
            d.frobenius = IntMatrix::permutation(f.get<std::vector<int>>());
        } else {
            const auto rows = f.get<std::vector<std::vector<int>>>();
            IntMatrix m = IntMatrix::identity(rows.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r].size() != rows.size()) throw DatumError("frobenius matrix is not square");
                for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
            }
            d.frobenius = m;
        }
    }
    return d;
}

}  // namespace seedrel::io

#endif  // SEEDREL_SERIALIZE_HPP
