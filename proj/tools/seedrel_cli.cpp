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

// seedrel_cli: batch front end. Exit 0 on success, 1 when a check fails,
// 2 on bad input or an unsupported datum/class combination.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "seedrel/acceptance.hpp"
#include "seedrel/affine_hecke.hpp"
#include "seedrel/coset_oracle.hpp"
#include "seedrel/satake.hpp"
#include "seedrel/serialize.hpp"
#include "seedrel/spectral.hpp"

using namespace seedrel;
using io::Json;

namespace {

struct RunSpec {
    std::string subcommand;
    std::string check;  // verify: annihilation | seed | bultel | numeric; oracle: dump
    std::string datum;
    std::string datum_file;
    std::string mu;
    std::int64_t p = 3;
    int radius = 2;
    std::string out;
    bool all = false;
    bool perturb = false;

    void validate() const {
        if (all) return;
        if (subcommand.empty()) throw std::invalid_argument("a subcommand or --all is required");
        if (datum.empty() == datum_file.empty()) throw std::invalid_argument("give exactly one of --datum and --datum-file");
        if (mu.empty()) throw std::invalid_argument("--mu is required");
    }
};

std::shared_ptr<const RootDatum> load_datum(const RunSpec& spec) {
    if (!spec.datum.empty()) return std::make_shared<const RootDatum>(RootDatum::builtin(spec.datum));
    std::ifstream in(spec.datum_file);
    if (!in) throw std::invalid_argument("cannot read " + spec.datum_file);
    return std::make_shared<const RootDatum>(RootDatum::build(io::datum_description(Json::parse(in))));
}

Json class_json(const ConjugacyClass& cc) { return {{"datum", cc.datum->name()}, {"mu", cc.mu.str()}, {"d", cc.d}}; }

void emit(const RunSpec& spec, const Json& j) {
    const std::string text = j.dump(2) + "\n";
    if (spec.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(spec.out);
    if (!out) throw std::invalid_argument("cannot write " + spec.out);
    out << text;
}

std::optional<Perturbation> perturbation(const RunSpec& spec) {
    return spec.perturb ? std::optional<Perturbation>(Perturbation{}) : std::nullopt;
}

int run_hecke(const RunSpec& spec, const ConjugacyClass& cc) {
    Json j = io::header("hecke_polynomial");
    j.update(class_json(cc));
    j.update(io::to_json(hecke_polynomial(cc)));
    emit(spec, j);
    return 0;
}

int run_satake(const RunSpec& spec, const std::shared_ptr<const RootDatum>& rd, const LatticePoint& lambda) {
    SatakeEngine engine(rd);
    Json table = Json::array();
    for (const auto& [nu, c] : engine.basis_image(lambda).terms()) table.push_back({{"nu", nu.str()}, {"c", io::to_json(c)}});
    Json j = io::header("satake");
    j["datum"] = rd->name();
    j["lambda"] = lambda.str();
    j["coefficients"] = table;
    emit(spec, j);
    return 0;
}

int run_verify(const RunSpec& spec, const ConjugacyClass& cc) {
    const auto perturb = perturbation(spec);
    Json j = io::header("verify_" + spec.check);
    j.update(class_json(cc));
    j["perturbed"] = spec.perturb;
    bool pass = false;
    if (spec.check == "annihilation") {
        const auto r = check_annihilation(cc, perturb);
        j["norm"] = r.norm.str();
        j["value"] = io::to_json(r.value);
        pass = r.pass;
    } else if (spec.check == "seed") {
        HeckeAlgebra H(cc.datum);
        const auto r = check_seed_relation(H, cc, perturb);
        j["norm"] = r.norm.str();
        j["degree"] = r.degree;
        j["value"] = io::to_json(H.datum(), r.value);
        j["value_reversed"] = io::to_json(H.datum(), r.value_reversed);
        j["central"] = r.central;
        j["spherical_match"] = r.spherical_match;
        j["term_count"] = r.term_count;
        pass = r.pass;
    } else if (spec.check == "bultel") {
        const auto r = check_bultel(cc, perturb);
        j["norm"] = r.norm.str();
        j["levi"] = r.levi;
        j["levi_is_torus"] = r.levi_is_torus;
        j["value"] = io::to_json(r.value);
        pass = r.pass;
    } else {
        const OracleConfig cfg{static_cast<int>(cc.datum->rank()), spec.p, spec.radius};
        const auto r = verify_numeric(cfg, cc, perturb);
        j["p"] = spec.p;
        j["radius"] = spec.radius;
        j["cosets_tested"] = r.cosets_tested;
        j["failures"] = r.failures;
        if (r.first_failure) j["first_failure"] = io::to_json(*r.first_failure);
        j["satake_counts_match"] = r.satake_counts_match;
        j["convolution_matches"] = r.convolution_matches;
        j["iwahori_indices_match"] = r.iwahori_indices_match;
        j["u_counts_match"] = r.u_counts_match;
        pass = r.pass;
    }
    j["pass"] = pass;
    emit(spec, j);
    return pass ? 0 : 1;
}

int run_oracle_dump(const RunSpec& spec, const std::shared_ptr<const RootDatum>& rd, const LatticePoint& lambda) {
    const OracleConfig cfg{static_cast<int>(rd->rank()), spec.p, spec.radius};
    if (rd->name() != "GL" + std::to_string(cfg.n)) throw Unsupported("the coset oracle needs the datum GL2 or GL3");
    Json cosets = Json::array();
    for (const auto& x : double_coset_decompose(cfg, lambda)) cosets.push_back(io::to_json(x));
    Json counts = Json::array();
    for (const auto& row : satake_count_table(cfg, lambda))
        counts.push_back({{"nu", row.nu.str()}, {"raw", row.raw}, {"dotted", io::to_json(row.dotted)}});
    Json j = io::header("oracle_dump");
    j["datum"] = rd->name();
    j["lambda"] = lambda.str();
    j["p"] = cfg.p;
    j["cosets"] = cosets;
    j["satake_counts"] = counts;
    emit(spec, j);
    return 0;
}

int run_all(const RunSpec& spec) {
    Json criteria = Json::array();
    bool pass = true;
    for (const auto& r : acceptance::run_all()) {
        criteria.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        pass = pass && r.pass;
    }
    Json j = io::header("acceptance");
    j["criteria"] = criteria;
    j["pass"] = pass;
    emit(spec, j);
    return pass ? 0 : 1;
}

int run(const RunSpec& spec) {
    spec.validate();
    if (spec.all) return run_all(spec);
    const auto rd = load_datum(spec);
    const LatticePoint mu = LatticePoint::parse(spec.mu);
    if (spec.subcommand == "satake") return run_satake(spec, rd, mu);
    if (spec.subcommand == "oracle") return run_oracle_dump(spec, rd, mu);
    const ConjugacyClass cc = ConjugacyClass::make(rd, mu);
    if (spec.subcommand == "hecke") return run_hecke(spec, cc);
    return run_verify(spec, cc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke polynomials, Satake transforms and their checks"};
    RunSpec spec;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--datum", spec.datum, "built-in datum name")
            ->check(CLI::IsMember(RootDatum::builtin_names()) | CLI::Validator([](std::string& s) {
                        return s.size() == 3 && s.starts_with("GL") && s[2] >= '1' && s[2] <= '6' ? "" : "unknown datum";
                    }, ""));
        cmd->add_option("--datum-file", spec.datum_file, "JSON datum description")->check(CLI::ExistingFile);
        cmd->add_option("--mu", spec.mu, "dominant cocharacter, comma separated");
        cmd->add_option("--out", spec.out, "write JSON here instead of stdout");
    };
    app.require_subcommand(0, 1);
    app.add_flag("--all", spec.all, "run the full acceptance matrix");
    app.add_option("--out", spec.out, "write JSON here instead of stdout");

    auto* hecke = app.add_subcommand("hecke", "Hecke polynomial in the spherical basis");
    add_common(hecke);
    auto* satake = app.add_subcommand("satake", "dotted Satake image of f_mu");
    add_common(satake);
    auto* verify = app.add_subcommand("verify", "run one check; exit 1 if it fails");
    add_common(verify);
    verify->add_option("check", spec.check)->required()->check(CLI::IsMember({"annihilation", "seed", "bultel", "numeric"}));
    verify->add_flag("--perturb", spec.perturb, "multiply the constant coefficient by q (negative control)");
    verify->add_option("--p", spec.p, "prime for the numeric check")->check(CLI::IsMember({2, 3}));
    verify->add_option("--radius", spec.radius, "radius of the numeric test cosets")->check(CLI::Range(0, OracleConfig::kMaxRadius));
    auto* oracle = app.add_subcommand("oracle", "coset oracle output");
    add_common(oracle);
    oracle->add_option("action", spec.check)->required()->check(CLI::IsMember({"dump"}));
    oracle->add_option("--p", spec.p, "prime")->check(CLI::IsMember({2, 3}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    for (auto* cmd : {hecke, satake, verify, oracle})
        if (cmd->parsed()) spec.subcommand = cmd->get_name();
    try {
        return run(spec);
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
