#include "frobalg/io.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace frobalg {

namespace {

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw ParseError("expected a rational as integer or \"p/q\" string, got: " + j.dump());
}

Json rat_to_json(const Rat& r) { return Json(r.str()); }

}  // namespace

Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    Vec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

Json matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row_vec(i)));
    return rows;
}

RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a matrix as an array of rows");
    std::vector<Vec> rows;
    std::size_t cols = 0;
    for (const auto& r : j) {
        rows.push_back(vec_from_json(r));
        if (rows.size() == 1) cols = rows.front().size();
        if (rows.back().size() != cols) throw ParseError("ragged matrix rows");
    }
    return RatMatrix::from_rows(rows, cols);
}

Json algebra_to_json(const Algebra& a) {
    Json j;
    j["dim"] = a.dim;
    Json mult = Json::array();
    for (std::size_t i = 0; i < a.dim; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < a.dim; ++k) {
            Vec prod(a.dim);
            for (std::size_t q = 0; q < a.dim; ++q) prod[q] = a.structure_constant(i, k, q);
            row.push_back(vec_to_json(prod));
        }
        mult.push_back(row);
    }
    j["mult"] = mult;
    j["unit"] = vec_to_json(a.unit);
    if (!a.labels.empty()) j["labels"] = a.labels;
    return j;
}

Algebra algebra_from_json(const Json& j) {
    if (j.contains("builtin")) {
        std::vector<std::size_t> params;
        if (j.contains("params"))
            for (const auto& p : j.at("params")) params.push_back(p.get<std::size_t>());
        return builtin(j.at("builtin").get<std::string>(), params);
    }
    Algebra a;
    a.dim = j.at("dim").get<std::size_t>();
    const Json& mult = j.at("mult");
    if (!mult.is_array() || mult.size() != a.dim)
        throw ParseError("mult table must have dim rows");
    a.mult = RatMatrix(a.dim, a.dim * a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        if (mult.at(i).size() != a.dim) throw ParseError("mult table row has wrong length");
        for (std::size_t k = 0; k < a.dim; ++k) {
            Vec prod = vec_from_json(mult.at(i).at(k));
            if (prod.size() != a.dim) throw ParseError("mult entry has wrong length");
            for (std::size_t q = 0; q < a.dim; ++q) a.mult.at(q, i * a.dim + k) = prod[q];
        }
    }
    a.unit = vec_from_json(j.at("unit"));
    if (a.unit.size() != a.dim) throw ParseError("unit vector has wrong length");
    if (j.contains("labels")) a.labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("name")) a.name = j.at("name").get<std::string>();
    return a;
}

std::string algebra_spec_text(const Algebra& a, const std::string& name,
                              const std::string& description) {
    Json j;
    j["kind"] = "algebra";
    j["name"] = name;
    if (!description.empty()) j["description"] = description;
    j["algebra"] = algebra_to_json(a);
    return j.dump(2) + "\n";
}

SpecFile parse_spec(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    SpecFile spec;
    try {
        spec.kind = j.at("kind").get<std::string>();
        spec.name = j.value("name", "");
        spec.description = j.value("description", "");
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();

        if (spec.kind == "algebra") {
            Algebra a = algebra_from_json(j.at("algebra"));
            if (a.name.empty()) a.name = spec.name;
            auto rep = validate_algebra(a);
            if (!rep.ok()) throw SpecValidationError("algebra axioms fail: " + rep.summary());
            spec.algebra = std::move(a);
        } else if (spec.kind == "extension") {
            Algebra base = algebra_from_json(j.at("base"));
            Algebra top = algebra_from_json(j.at("top"));
            auto brep = validate_algebra(base);
            if (!brep.ok()) throw SpecValidationError("base algebra axioms fail: " + brep.summary());
            auto trep = validate_algebra(top);
            if (!trep.ok()) throw SpecValidationError("top algebra axioms fail: " + trep.summary());
            AlgebraMorphism i{std::move(base), std::move(top), matrix_from_json(j.at("matrix"))};
            if (i.matrix.rows() != i.target.dim || i.matrix.cols() != i.source.dim)
                throw SpecValidationError("morphism matrix has wrong shape");
            auto mrep = validate_morphism(i);
            if (!mrep.ok()) throw SpecValidationError("morphism axioms fail: " + mrep.summary());
            spec.extension = std::move(i);
        } else if (spec.kind == "wreath") {
            Algebra a = algebra_from_json(j.at("algebra"));
            auto arep = validate_algebra(a);
            if (!arep.ok()) throw SpecValidationError("coefficient algebra axioms fail: " + arep.summary());
            const Json& c = j.at("construct");
            std::string type = c.at("type").get<std::string>();
            WreathData w;
            if (type == "trivial") {
                Algebra x = algebra_from_json(c.at("x"));
                auto xrep = validate_algebra(x);
                if (!xrep.ok()) throw SpecValidationError("fibre algebra axioms fail: " + xrep.summary());
                w = trivial_wreath(a, x);
            } else if (type == "smash") {
                try {
                    w = smash_wreath(c.at("group_order").get<std::size_t>(), a,
                                     matrix_from_json(c.at("action")));
                } catch (const std::invalid_argument& e) {
                    throw SpecValidationError(e.what());
                }
            } else if (type == "explicit") {
                w.a = a;
                w.x_dim = c.at("x_dim").get<std::size_t>();
                w.psi = matrix_from_json(c.at("psi"));
                w.zeta = matrix_from_json(c.at("zeta"));
                w.sigma = vec_from_json(c.at("sigma"));
            } else {
                throw ParseError("unknown wreath construct '" + type + "'");
            }
            if (!w.name.empty() && !spec.name.empty()) w.name = spec.name;
            auto wrep = validate_wreath(w);
            if (!wrep.ok()) throw SpecValidationError("wreath identities fail: " + wrep.summary());
            spec.wreath = std::move(w);
        } else {
            throw ParseError("unknown spec kind '" + spec.kind + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    return spec;
}

SpecFile load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

Json frobenius_cert_to_json(const FrobeniusCertificate& c) {
    Json j;
    j["theta"] = vec_to_json(c.theta);
    j["casimir"] = vec_to_json(c.casimir);
    j["nakayama"] = matrix_to_json(c.nakayama);
    return j;
}

FrobeniusCertificate frobenius_cert_from_json(const Algebra& a, const Json& j) {
    FrobeniusCertificate c;
    c.algebra = a;
    c.theta = vec_from_json(j.at("theta"));
    c.casimir = vec_from_json(j.at("casimir"));
    c.nakayama = matrix_from_json(j.at("nakayama"));
    return c;
}

Json ext_cert_to_json(const ExtFrobeniusCertificate& c) {
    Json j;
    j["theta"] = matrix_to_json(c.theta);
    j["e"] = vec_to_json(c.e);
    return j;
}

ExtFrobeniusCertificate ext_cert_from_json(const Json& j) {
    return {matrix_from_json(j.at("theta")), vec_from_json(j.at("e"))};
}

namespace {

constexpr const char* kAnchorFrobPair = "Frobenius pair: Casimir identity and the two counit laws";
constexpr const char* kAnchorSep = "separability idempotent: Casimir identity and m e = 1";
constexpr const char* kAnchorNakayama = "Nakayama automorphism: theta(a b) = theta(b N(a))";
constexpr const char* kAnchorExtFrob =
    "Frobenius extension: S-central e with both theta-contractions equal to 1";
constexpr const char* kAnchorExtSep = "separable extension: S-central e with m^R_S e = 1";
constexpr const char* kAnchorCrosscheck =
    "extension conditions versus Frobenius/separable algebra structure on S over R";
constexpr const char* kAnchorWreathAxioms = "wreath identities (1)-(6)";
constexpr const char* kAnchorWreathProduct = "wreath product algebra and the embedding iota";
constexpr const char* kAnchorWreathFrob =
    "wreath Frobenius: (varsigma, rho) snake identities, cross-checked against iota";
constexpr const char* kAnchorWreathSep =
    "wreath separability: central normalized element, cross-checked against iota";
constexpr const char* kAnchorAlpha = "separability element alpha bridging a Frobenius pair";

FrobSepOptions to_frobsep(const RunOptions& opt) {
    return FrobSepOptions{opt.seed, opt.trials, opt.symbolic_cap};
}

void algebra_checks(RunReport& rep, const Algebra& a, const RunOptions& opt, bool with_nakayama) {
    auto dec = find_frobenius(a, to_frobsep(opt));
    CheckEntry frob{"frobenius", kAnchorFrobPair, "", {}};
    if (is_frobenius(dec)) {
        const auto& cert = std::get<FrobeniusCertificate>(dec);
        frob.verdict = "yes";
        frob.witness = frobenius_cert_to_json(cert);
        if (with_nakayama) {
            CheckEntry nak{"nakayama", kAnchorNakayama, "yes", {}};
            nak.witness = Json{{"matrix", matrix_to_json(nakayama(cert))}};
            rep.checks.push_back(frob);
            rep.checks.push_back(nak);
            return;
        }
    } else {
        const auto& proof = std::get<NotFrobeniusProof>(dec);
        frob.verdict = "no";
        frob.witness = Json{{"determinant", proof.determinant},
                            {"samples_tried", proof.samples_tried},
                            {"detail", proof.detail}};
        if (with_nakayama) {
            rep.checks.push_back(frob);
            rep.checks.push_back({"nakayama", kAnchorNakayama, "no", Json{{"detail", "not Frobenius"}}});
            return;
        }
    }
    rep.checks.push_back(frob);
}

}  // namespace

RunReport run_command(const std::string& command, const SpecFile& spec, const RunOptions& opt_in) {
    RunOptions opt = opt_in;
    if (spec.seed) opt.seed = *spec.seed;
    RunReport rep;
    rep.command = command;
    rep.subject = spec.name;
    rep.seed = opt.seed;
    auto t0 = std::chrono::steady_clock::now();

    auto need = [&](const char* kind) {
        if (spec.kind != kind)
            throw SpecValidationError("command '" + command + "' needs a " + kind + " spec, got '" +
                                      spec.kind + "'");
    };

    if (command == "check-frobenius") {
        need("algebra");
        algebra_checks(rep, *spec.algebra, opt, false);
    } else if (command == "check-separable") {
        need("algebra");
        auto cert = is_separable(*spec.algebra);
        CheckEntry c{"separable", kAnchorSep, cert ? "yes" : "no", {}};
        if (cert) c.witness = Json{{"idempotent", vec_to_json(cert->idempotent)}};
        rep.checks.push_back(c);
    } else if (command == "nakayama") {
        need("algebra");
        algebra_checks(rep, *spec.algebra, opt, true);
    } else if (command == "check-extension") {
        need("extension");
        auto ext = make_extension(*spec.extension);
        auto frob = check_frobenius_extension(ext, to_frobsep(opt));
        CheckEntry cf{"extension-frobenius", kAnchorExtFrob, "", {}};
        if (ext_is_frobenius(frob)) {
            cf.verdict = "yes";
            cf.witness = ext_cert_to_json(std::get<ExtFrobeniusCertificate>(frob));
        } else {
            const auto& proof = std::get<ExtNotFrobeniusProof>(frob);
            cf.verdict = "no";
            cf.witness = Json{{"determinant", proof.determinant},
                              {"hom_dim", proof.hom_dim},
                              {"bimodule_dim", proof.bimodule_dim},
                              {"detail", proof.detail}};
        }
        rep.checks.push_back(cf);
        auto sep = check_separable_extension(ext);
        CheckEntry cs{"extension-separable", kAnchorExtSep, sep ? "yes" : "no", {}};
        if (sep) cs.witness = Json{{"e", vec_to_json(sep->e)}};
        rep.checks.push_back(cs);
        if (ext_is_frobenius(frob)) {
            auto alpha = sep_from_frob_ext_alpha0(ext, std::get<ExtFrobeniusCertificate>(frob));
            CheckEntry ca{"alpha0", kAnchorAlpha, alpha ? "yes" : "no", {}};
            if (alpha) ca.witness = Json{{"alpha0", vec_to_json(alpha->alpha0)}};
            rep.checks.push_back(ca);
        }
    } else if (command == "check-wreath") {
        need("wreath");
        const WreathData& w = *spec.wreath;
        rep.checks.push_back({"wreath-identities", kAnchorWreathAxioms, "pass", {}});
        auto prod = wreath_product(w);  // validated internally
        rep.checks.push_back(
            {"wreath-product", kAnchorWreathProduct, "pass",
             Json{{"dim", prod.product.dim}}});
        auto ext = make_extension(prod.iota);
        auto frep = check_frobenius_wreath(w, ext, to_frobsep(opt));
        CheckEntry cf{"wreath-frobenius", kAnchorWreathFrob, frep.frobenius ? "yes" : "no", {}};
        cf.witness = Json{{"routes_agree", frep.routes_agree}};
        if (frep.witness) {
            cf.witness["varsigma"] = matrix_to_json(frep.witness->varsigma);
            cf.witness["rho"] = vec_to_json(frep.witness->rho);
        } else if (frep.proof) {
            cf.witness["determinant"] = frep.proof->determinant;
            cf.witness["detail"] = frep.proof->detail;
        }
        rep.checks.push_back(cf);
        if (!frep.routes_agree)
            throw std::logic_error("wreath Frobenius routes disagree");
        auto srep = check_separable_wreath(w, ext, to_frobsep(opt));
        CheckEntry cs{"wreath-separable", kAnchorWreathSep, srep.separable ? "yes" : "no", {}};
        cs.witness = Json{{"routes_agree", srep.routes_agree}};
        if (srep.witness) cs.witness["e"] = vec_to_json(srep.witness->e);
        rep.checks.push_back(cs);
        if (!srep.routes_agree)
            throw std::logic_error("wreath separability routes disagree");
    } else if (command == "crosscheck") {
        if (spec.kind == "extension") {
            auto ext = make_extension(*spec.extension);
            auto cc = crosscheck_bimodule_algebra(ext, to_frobsep(opt));
            rep.checks.push_back({"frobenius-routes", kAnchorCrosscheck,
                                  cc.frobenius_agree ? "pass" : "fail",
                                  Json{{"extension_route", cc.frob_ext},
                                       {"bimodule_route", cc.frob_bimod}}});
            rep.checks.push_back({"separable-routes", kAnchorCrosscheck,
                                  cc.separable_agree ? "pass" : "fail",
                                  Json{{"extension_route", cc.sep_ext},
                                       {"bimodule_route", cc.sep_bimod}}});
            rep.checks.push_back({"witness-bijection", kAnchorCrosscheck,
                                  cc.witness_bijection_ok ? "pass" : "fail", {}});
        } else if (spec.kind == "algebra") {
            const Algebra& a = *spec.algebra;
            auto dec = find_frobenius(a, to_frobsep(opt));
            bool sep = is_separable(a).has_value();
            bool alpha = false;
            if (is_frobenius(dec))
                alpha = frobenius_to_separable_alpha(std::get<FrobeniusCertificate>(dec)).has_value();
            bool agree = !is_frobenius(dec) || (sep == alpha);
            rep.checks.push_back({"alpha-vs-separability", kAnchorAlpha, agree ? "pass" : "fail",
                                  Json{{"frobenius", is_frobenius(dec)},
                                       {"separable", sep},
                                       {"alpha_exists", alpha}}});
        } else if (spec.kind == "wreath") {
            auto frep = check_frobenius_wreath(*spec.wreath, to_frobsep(opt));
            auto srep = check_separable_wreath(*spec.wreath, to_frobsep(opt));
            rep.checks.push_back({"wreath-frobenius-routes", kAnchorWreathFrob,
                                  frep.routes_agree ? "pass" : "fail",
                                  Json{{"verdict", frep.frobenius}}});
            rep.checks.push_back({"wreath-separable-routes", kAnchorWreathSep,
                                  srep.routes_agree ? "pass" : "fail",
                                  Json{{"verdict", srep.separable}}});
        }
    } else {
        throw SpecValidationError("unknown command '" + command + "'");
    }

    rep.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - t0)
                                           .count());
    return rep;
}

std::string render_text(const RunReport& rep) {
    std::ostringstream os;
    os << "command: " << rep.command << "\n";
    os << "subject: " << rep.subject << "\n";
    os << "seed: " << rep.seed << "\n";
    for (const auto& c : rep.checks) {
        os << "  [" << c.verdict << "] " << c.id << "  (" << c.anchor << ")\n";
        if (!c.witness.is_null()) os << "      witness: " << c.witness.dump() << "\n";
    }
    os << "elapsed_ms: " << rep.elapsed_ms << "\n";
    return os.str();
}

std::string render_structured(const RunReport& rep) {
    Json j;
    j["command"] = rep.command;
    j["subject"] = rep.subject;
    j["seed"] = rep.seed;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json e;
        e["id"] = c.id;
        e["anchor"] = c.anchor;
        e["verdict"] = c.verdict;
        if (!c.witness.is_null()) e["witness"] = c.witness;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["elapsed_ms"] = rep.elapsed_ms;
    return j.dump(2) + "\n";
}

}  // namespace frobalg
