#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellgen/ellgen.hpp"

using namespace ellgen;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParseError = 2 };

struct Options {
    std::string format = "text";
    int order = 0;
    int qorder = 3;
    int N = 3;
    std::string manifold;
    std::string genus = "phi_ell";
};

bool as_json(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const json& j, const std::string& text) {
    if (as_json(o))
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

// ---------------------------------------------------------------- genus eval

int genus_eval(const Options& o) {
    if (o.manifold.empty()) throw ParseError("--manifold is required");
    const ManifoldClass m = load_manifold(o.manifold);
    const int order = std::max({o.order, m.dim(), 1});
    std::string value;
    const std::string& g = o.genus;
    if (g == "phi_ell") {
        value = phi_ell(std::max(order, 4)).evaluate(m.cv).str();
    } else if (g == "a_tilde") {
        value = a_tilde(std::max(order, 4)).evaluate(m.cv).str();
    } else if (g == "chi_y") {
        value = chi_y_genus(order).evaluate(m.cv).str();
    } else if (g == "todd" || g == "signature" || g == "a_hat" || g == "euler") {
        value = classical_genus(g, order).evaluate(m.cv).str();
    } else if (g.rfind("chi_KkN(", 0) == 0 && g.back() == ')') {
        const auto kn = split(g.substr(8, g.size() - 9), ',');
        if (kn.size() != 2) throw ParseError("expected chi_KkN(k,N)");
        value = classical_genus("chi_KkN", order, {Rational::parse(kn[0]), Rational::parse(kn[1])}).evaluate(m.cv).str();
    } else if (g.find(',') != std::string::npos) {
        const auto parts = split(g, ',');
        if (parts.size() != 4) throw ParseError("a genus point needs four values A,B,C,D");
        const ABCDPoint<Rational> p{Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2]), Rational::parse(parts[3])};
        value = elliptic_genus_at(p, order).evaluate(m.cv).str();
    } else {
        throw UnknownName("genus '" + g + "'");
    }
    emit(o, json{{"genus", g}, {"manifold", m.name}, {"dim", std::to_string(m.dim())}, {"value", value}}, value + "\n");
    return kOk;
}

// ---------------------------------------------------------------- universal coeffs

int universal_coeffs(const Options& o) {
    const int n = o.order > 0 ? o.order : 5;
    const auto& phi = phi_ell(std::max(n, 4));
    json ja = json::object(), jk = json::object();
    std::string text;
    for (int k = 1; k <= n; ++k) {
        const std::string a = phi.a(k).str();
        ja[std::to_string(k)] = a;
        text += "a" + std::to_string(k) + " = " + a + "\n";
    }
    for (int k = 1; k <= n; ++k) {
        const std::string K = chern_poly_to_poly(phi.K(k)).str();
        jk[std::to_string(k)] = K;
        text += "K" + std::to_string(k) + " = " + K + "\n";
    }
    emit(o, json{{"order", std::to_string(n)}, {"a", ja}, {"K", jk}}, text);
    return kOk;
}

// ---------------------------------------------------------------- leveln relations

/// Scales p so that the single-variable monomial of its weight, if present, has coefficient 1.
Poly normalize_q(const Poly& p, int w) {
    if (w >= 1 && w <= 4) {
        const Rational c = p.coeff(Monomial{{var_id("q" + std::to_string(w)), 1}});
        if (!c.is_zero()) return p.scaled(c.inverse());
    }
    return lex_monic(p);
}

int leveln_relations(const Options& o) {
    const int N = o.N;
    const auto& L = level_data(N);
    const Poly qm = normalize_q(abcd_poly_to_q(L.R_minus), N - 1);
    const HomogeneousIdeal first({qm}, q_ids());
    const Poly qp = normalize_q(first.normal_form(abcd_poly_to_q(L.R_plus)), N + 1);
    const Poly elim = eliminate(L);
    const Rational h0 = degree_h0(level_presentation(N));
    const bool extra_ok = L.extra_all_in_ideal();

    json jextra = json::array();
    for (auto& e : L.extra) jextra.push_back({{"x_power", std::to_string(e.x_power)}, {"in_ideal", e.in_ideal}});
    const std::string rm = "R_" + std::to_string(N - 1), rp = "R_" + std::to_string(N + 1);
    json j{{"N", std::to_string(N)},
           {"relations", {{rm, L.R_minus.str()}, {rp, L.R_plus.str()}}},
           {"q_generators", {qm.str(), qp.str()}},
           {"eliminant", elim.str()},
           {"h0", h0.str()},
           {"extra_constraints", jextra},
           {"extra_in_ideal", extra_ok}};
    std::string text = "N = " + std::to_string(N) + "\n";
    text += rm + " = " + L.R_minus.str() + "\n";
    text += rp + " = " + L.R_plus.str() + "\n";
    text += "ideal in q-coordinates: <" + qm.str() + ", " + qp.str() + ">\n";
    text += "eliminant = " + elim.str() + "\n";
    text += "h0 = " + h0.str() + "\n";
    text += "extra constraints: " + std::to_string(L.extra.size()) + (extra_ok ? ", all in the ideal\n" : ", NOT all in the ideal\n");
    emit(o, j, text);
    return extra_ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- qexpand

int qexpand(const Options& o) {
    if (o.manifold.empty()) throw ParseError("--manifold is required");
    const ManifoldClass m = load_manifold(o.manifold);
    const auto s = chi_y_loop(m.cv, o.qorder);
    const auto integ = integrality_check(s);
    json coeffs = json::array();
    for (auto& c : s) coeffs.push_back(c.str());
    json j{{"manifold", m.name}, {"qorder", std::to_string(o.qorder)}, {"coefficients", coeffs}, {"integral", integ.ok}};
    std::string text = laurent_qseries_str(s);
    text += integ.ok ? "integral: yes\n" : "integral: no (q^" + std::to_string(integ.q_power) + ", y^" + std::to_string(integ.y_power) + ")\n";
    emit(o, j, text);
    return kOk;
}

// ---------------------------------------------------------------- blowup verify

int blowup_verify(const Options& o) {
    bool ok = true;
    json jid = json::array(), jcases = json::array();
    std::string text;
    for (auto [N, q, expect] : std::vector<std::tuple<int, int, bool>>{{2, 3, true}, {3, 4, true}, {2, 2, false}}) {
        const auto r = verify_elliptic_identity(N, q, o.qorder, 3);
        const bool pass = r.vanishes == expect;
        ok = ok && pass;
        jid.push_back({{"N", std::to_string(N)}, {"codim", std::to_string(q)}, {"vanishes", r.vanishes}, {"expected", expect}, {"pass", pass}});
        text += "identity N=" + std::to_string(N) + " codim " + std::to_string(q) + ": " + (r.vanishes ? "vanishes" : "nonzero") +
                (pass ? "  PASS\n" : "  FAIL\n");
    }
    for (auto& c : verify_blowup_invariance(o.qorder)) {
        const bool pass = c.hypothesis == c.defect_zero;
        ok = ok && pass;
        jcases.push_back({{"label", c.label}, {"N", std::to_string(c.N)}, {"codim", std::to_string(c.codim)}, {"hypothesis", c.hypothesis},
                          {"defect_zero", c.defect_zero}, {"defect", c.defect}, {"pass", pass}});
        text += "defect N=" + std::to_string(c.N) + " " + c.label + ": " + (c.defect_zero ? "0" : c.defect) + (pass ? "  PASS\n" : "  FAIL\n");
    }
    emit(o, json{{"identities", jid}, {"cases", jcases}, {"pass", ok}}, text);
    return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- verify all

int verify_all(const Options& o) {
    bool ok = true;
    json rows = json::array();
    std::string text;
    for (int id = 1; id <= static_cast<int>(acceptance_criteria().size()); ++id) {
        const auto r = run_criterion(id);
        ok = ok && r.pass;
        rows.push_back({{"id", std::to_string(r.id)}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        char line[64];
        std::snprintf(line, sizeof line, "%2d  %s  ", r.id, r.pass ? "PASS" : "FAIL");
        text += line + r.title + " (" + r.detail + ")\n";
    }
    emit(o, json{{"criteria", rows}, {"pass", ok}}, text);
    return ok ? kOk : kVerifyFailed;
}

std::string error_type(const std::string& what) {
    const auto colon = what.find(':');
    return colon == std::string::npos ? "Error" : what.substr(0, colon);
}

int report_error(const Options& o, const std::string& type, const std::string& message, int code) {
    if (as_json(o))
        std::cout << json{{"error", {{"type", type}, {"message", message}}}}.dump(2) << "\n";
    else
        std::cerr << "error: " << message << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Elliptic genera: universal coefficients, level-N relations, q-expansions, blow-ups"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto add_order = [&](CLI::App* s) { s->add_option("-o,--order", o.order, "Truncation order in x")->check(CLI::PositiveNumber); };
    auto add_qorder = [&](CLI::App* s) { s->add_option("--qorder", o.qorder, "Truncation order in q")->check(CLI::PositiveNumber); };

    auto* genus = app.add_subcommand("genus", "Genus evaluation")->require_subcommand(1)->fallthrough();
    auto* eval = genus->add_subcommand("eval", "Evaluate a genus on a manifold");
    eval->add_option("--genus", o.genus, "phi_ell, a_tilde, chi_y, todd, signature, a_hat, euler, chi_KkN(k,N) or A,B,C,D");
    eval->add_option("--manifold", o.manifold, "catalog:NAME, a JSON file or inline JSON")->required();
    add_order(eval);

    auto* universal = app.add_subcommand("universal", "Universal elliptic genus")->require_subcommand(1)->fallthrough();
    auto* coeffs = universal->add_subcommand("coeffs", "Print a_k and K_k");
    add_order(coeffs);

    auto* leveln = app.add_subcommand("leveln", "Level-N genera")->require_subcommand(1)->fallthrough();
    auto* relations = leveln->add_subcommand("relations", "Relations, eliminant and h0");
    relations->add_option("--N", o.N, "Level")->check(CLI::Range(2, 12));

    auto* qexp = app.add_subcommand("qexpand", "q-expansion of an SU manifold");
    qexp->add_option("--manifold", o.manifold, "catalog:NAME, a JSON file or inline JSON")->required();
    add_qorder(qexp);

    auto* blowup = app.add_subcommand("blowup", "Blow-up formulas")->require_subcommand(1)->fallthrough();
    auto* bverify = blowup->add_subcommand("verify", "Check the identities and defects");
    add_qorder(bverify);

    auto* verify = app.add_subcommand("verify", "Acceptance checks")->require_subcommand(1)->fallthrough();
    auto* all = verify->add_subcommand("all", "Run every criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error(o, "UsageError", e.what(), kParseError);
    }

    try {
        if (eval->parsed()) return genus_eval(o);
        if (coeffs->parsed()) return universal_coeffs(o);
        if (relations->parsed()) return leveln_relations(o);
        if (qexp->parsed()) return qexpand(o);
        if (bverify->parsed()) return blowup_verify(o);
        if (all->parsed()) return verify_all(o);
    } catch (const Error& e) {
        return report_error(o, error_type(e.what()), e.what(), kParseError);
    }
    return kParseError;
}
