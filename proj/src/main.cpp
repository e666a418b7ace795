/**
 * @file main.cpp
 * @brief Batch command-line front end: normal forms, pattern-avoiding
 *        enumeration, ideal membership, the 25-dimensional bimodule action,
 *        dimension table, and the verification suites.  All output is JSON.
 *
 * Exit codes: 0 = success / all checks pass, 1 = a verification failed,
 * 2 = usage or parse error.
 */
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubiq/a4tilde.hpp"
#include "cubiq/h3reps.hpp"
#include "cubiq/hecke.hpp"
#include "cubiq/q3struct.hpp"
#include "cubiq/rewrite.hpp"
#include "cubiq/vogel.hpp"
#include "cubiq/weights.hpp"

using json = nlohmann::json;
using namespace cubiq;

namespace {

SignedWord parse_tokens(const std::string& text, int strands) {
    SignedWord w({}, strands);
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        if (tok == "e") {
            tok.clear();
            return;
        }
        bool inv = tok.back() == '\'';
        std::string digits = inv ? tok.substr(0, tok.size() - 1) : tok;
        int v = std::stoi(digits);
        w.letters.push_back(inv ? -v : v);
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ' ' || ch == '\t') {
            flush();
        } else {
            tok += ch;
        }
    }
    flush();
    return SignedWord(w.letters, strands);  // re-validate
}

SystemKind system_from_name(const std::string& name) {
    if (name == "pos" || name == "positive") return SystemKind::positive;
    if (name == "s1" || name == "signed1") return SystemKind::signed1;
    if (name == "s2" || name == "signed2") return SystemKind::signed2;
    throw CLI::ValidationError("--system", "expected pos|s1|s2");
}

long step_cap_from_env() {
    if (const char* cap = std::getenv("CUBIQ_STEP_CAP")) return std::atol(cap);
    return 100000;
}

json elem_to_json(const AlgElem& x) {
    json terms = json::array();
    for (const auto& [w, c] : x.terms)
        terms.push_back({{"coeff", c.str()}, {"word", w.letters}});
    return {{"terms", terms}};
}

struct Suite {
    std::string name;
    json checks = json::array();
    bool ok = true;

    void add(const std::string& id, bool pass, const std::string& witness = "") {
        json entry = {{"id", id}, {"status", pass ? "pass" : "fail"}};
        if (!pass && !witness.empty()) entry["witness"] = witness;
        checks.push_back(entry);
        ok = ok && pass;
    }
    json report(double ms) const {
        return {{"suite", name},
                {"schema", 1},
                {"checks", checks},
                {"status", ok ? "pass" : "fail"},
                {"wall_ms", ms}};
    }
};

Suite run_suite_a4() {
    Suite s{"a4"};
    auto rep = a4_consistency_check(a4_tables());
    s.add("braid_left", rep.braid_left);
    s.add("braid_right", rep.braid_right);
    s.add("cubics", rep.cubic_L1 && rep.cubic_L2 && rep.cubic_R1 && rep.cubic_R2);
    s.add("f_involution", rep.f_involution);
    s.add("f_integral_in_a", rep.f_integral_in_a);
    s.add("left_right_commute", rep.commute_LR);
    s.add("inverses", rep.inverses_ok);
    s.add("det_units", rep.det_units);
    s.add("cardinality_ledger", a4_cardinality_ledger().matches_expected());
    return s;
}

Suite run_suite_vogel(const Rational& alpha, const Rational& beta, unsigned seed) {
    Suite s{"vogel"};
    std::vector<std::pair<Rational, Rational>> pairs = {{alpha, beta}};
    for (auto& p : generic_alpha_beta_pairs(seed, 2)) pairs.push_back(p);
    for (const auto& [al, be] : pairs) {
        std::string tag = "(" + al.str() + "," + be.str() + ")";
        s.add("v2" + tag, verify_v2(al, be).ok());
        s.add("v3_3dim" + tag, verify_vogel_relations(vogel_v3_3dim(al, be), al, be).ok());
        s.add("v4_6dim" + tag, verify_vogel_relations(vogel_v4_6dim(al, be), al, be).ok());
        s.add("v4_8dim" + tag, verify_vogel_relations(vogel_v4_8dim(al, be), al, be).ok());
        s.add("b3_span" + tag, b3_span_check(al, be).ok());
        bool morph = true;
        const std::vector<Rational> uv_grid = {Rational(al / 2), Rational(be / 2),
                                               Rational(al / 2 + 1)};
        for (const Rational& u : uv_grid)
            for (const Rational& v : uv_grid) {
                bool phi_exp = (u == v) && (u == al / 2 || u == be / 2);
                if (morphism_factor_check(MorphKind::phi_uv, u, v, Rational(0), al, be) !=
                    phi_exp)
                    morph = false;
                if (u == 0) continue;
                Rational m_good = 4 - (al + be) / u;
                const std::vector<Rational> m_grid = {m_good, Rational(m_good + 1)};
                for (const Rational& m : m_grid) {
                    bool psi_exp = phi_exp && u * (m - 4) == -(al + be);
                    if (morphism_factor_check(MorphKind::psi_uv, u, v, m, al, be) != psi_exp)
                        morph = false;
                }
            }
        s.add("morphisms" + tag, morph);
    }
    s.add("perm_rep_n4", verify_perm_rep(4, Rational(3, 2), Rational(-5, 3), Rational(1)).ok());
    return s;
}

Suite run_suite_weights() {
    Suite s{"weights"};
    s.add("tau_values", tau_eigenvalue(Weight{{2, 2}}) ==
                                RatFn::over_n(NPoly{Int(-4), Int(2)}) &&
                            tau_eigenvalue(Weight{{4, 1}}) ==
                                RatFn::over_n(NPoly{Int(-4), Int(-4)}) &&
                            tau_eigenvalue(Weight{{1, 1}, {3, 1}}) ==
                                RatFn::over_n(NPoly{Int(-4)}));
    s.add("tables", verify_weight_tables());
    s.add("exp_identity", check_exp_identity());
    return s;
}

Suite run_suite_q3() {
    Suite s{"q3"};
    auto rep = verify_q3_identities();
    s.add("conj_r1_is_r2", rep.conj_r1_is_r2);
    s.add("phi_r1", rep.phi_r1);
    s.add("psi_r1", rep.psi_r1);
    return s;
}

int emit(const json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for the small cubic braid quotients"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON output");

    std::string system_name = "pos", word_text, side_name = "left", vector_name = "e_1";
    std::string lhs_text, rhs_text, suite_name = "all";
    std::string alpha_text = "3", beta_text = "-1";
    unsigned seed = 20260826u;

    auto* nf = app.add_subcommand("nf", "normal form of a word in the chosen system");
    nf->add_option("--system", system_name, "pos|s1|s2");
    nf->add_option("word", word_text, "space-separated letters, ' marks an inverse")->required();

    auto* enumerate = app.add_subcommand("enumerate", "pattern-avoiding words of the system");
    enumerate->add_option("--system", system_name, "pos|s1|s2");

    auto* member = app.add_subcommand("member", "is lhs - rhs in the defining ideal?");
    member->add_option("--lhs", lhs_text, "token word")->required();
    member->add_option("--rhs", rhs_text, "token word (default empty word)");

    auto* a4 = app.add_subcommand("a4", "the 25-dimensional bimodule");
    auto* a4apply = a4->add_subcommand("apply", "apply a word to a basis vector");
    a4apply->add_option("--side", side_name, "left|right");
    a4apply->add_option("--word", word_text, "token word in 1,2 and inverses")->required();
    a4apply->add_option("--vector", vector_name, "basis vector e_1..e_25");

    auto* dims = app.add_subcommand("dims", "dimension table");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite_name, "a4|vogel|weights|q3|all");
    verify->add_option("--alpha", alpha_text, "rational p/q");
    verify->add_option("--beta", beta_text, "rational p/q");
    verify->add_option("--seed", seed, "seed for the random generic points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (nf->parsed()) {
            RewriteSystem sys = build_system(system_from_name(system_name));
            AlgElem x = AlgElem::from_word(parse_tokens(word_text, 3));
            return emit(elem_to_json(normal_form(x, sys, step_cap_from_env())), pretty);
        }
        if (enumerate->parsed()) {
            RewriteSystem sys = build_system(system_from_name(system_name));
            auto words = enumerate_avoiding(sys);
            json out = {{"system", sys.name}, {"count", words.size()}};
            out["words"] = json::array();
            for (const auto& w : words) out["words"].push_back(w.letters);
            return emit(out, pretty);
        }
        if (member->parsed()) {
            AlgElem x = AlgElem::from_word(parse_tokens(lhs_text, 3));
            if (!rhs_text.empty()) x = x - AlgElem::from_word(parse_tokens(rhs_text, 3));
            auto res = ideal_membership(x);
            json out = {{"member", res.member}};
            if (!res.member) out["witness"] = res.witness;
            emit(out, pretty);
            return 0;
        }
        if (a4apply->parsed()) {
            if (vector_name.rfind("e_", 0) != 0)
                throw std::invalid_argument("--vector must be e_1..e_25");
            int k = std::stoi(vector_name.substr(2));
            if (k < 1 || k > int(kA4Dim)) throw std::invalid_argument("--vector out of range");
            A4Side side = side_name == "right" ? A4Side::right : A4Side::left;
            auto vec = a4_apply(parse_tokens(word_text, 4), side, detail_a4::basis_vec(k));
            json out = {{"side", side_name}, {"vector", json::array()}};
            for (const auto& c : vec) out["vector"].push_back(c.str());
            return emit(out, pretty);
        }
        if (dims->parsed()) {
            json out = {{"Q3", 20},
                        {"Q4", 264},
                        {"H3", 24},
                        {"K", {{"2", 3}, {"3", 15}, {"4", 69}, {"5", 357}}},
                        {"V3", 20}};
            return emit(out, pretty);
        }
        if (verify->parsed()) {
            auto parse_q = [](const std::string& t) {
                auto slash = t.find('/');
                if (slash == std::string::npos) return Rational(Int(t));
                return Rational(Int(t.substr(0, slash)), Int(t.substr(slash + 1)));
            };
            std::vector<Suite> suites;
            auto t0 = std::chrono::steady_clock::now();
            if (suite_name == "a4" || suite_name == "all") suites.push_back(run_suite_a4());
            if (suite_name == "vogel" || suite_name == "all")
                suites.push_back(run_suite_vogel(parse_q(alpha_text), parse_q(beta_text), seed));
            if (suite_name == "weights" || suite_name == "all")
                suites.push_back(run_suite_weights());
            if (suite_name == "q3" || suite_name == "all") suites.push_back(run_suite_q3());
            if (suites.empty()) throw std::invalid_argument("unknown suite: " + suite_name);
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            json out = json::array();
            bool all_ok = true;
            for (const auto& s : suites) {
                out.push_back(s.report(ms / double(suites.size())));
                all_ok = all_ok && s.ok;
            }
            emit(out.size() == 1 ? out[0] : out, pretty);
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    return 2;
}
