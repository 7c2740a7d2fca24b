#include "riocf/checks.hpp"
#include "riocf/eriordan.hpp"
#include "riocf/errors.hpp"
#include "riocf/expr.hpp"
#include "riocf/io.hpp"
#include "riocf/lattice.hpp"
#include "riocf/production.hpp"
#include "riocf/seq_table.hpp"
#include "riocf/triangles.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace riocf;

namespace {

size_t checked_order(size_t n) {
    // bivariate expansion cost grows fast; keep runs desk-scale
    if (n > 64) throw PreconditionError("TooLarge", "order is capped at 64");
    return n;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// inline JSON text or a path to a file holding it
Json read_json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return parse_json_text(arg);
    std::ifstream in(arg);
    if (!in) throw ParseError("BadFile", "cannot read " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

std::vector<Integer> parse_terms_csv(const std::string& text) {
    std::vector<Integer> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("BadTerms", "empty term");
        try {
            out.emplace_back(tok.substr(a, b - a + 1));
        } catch (const std::runtime_error&) {
            throw ParseError("BadTerms", "not an integer: '" + tok + "'");
        }
    }
    if (out.empty()) throw ParseError("BadTerms", "no terms given");
    return out;
}

// bivariate GF as a triangle when every x^n coefficient stays within y-degree n
std::optional<Triangle> lower_triangle_of(const Series& gf) {
    Triangle t;
    for (size_t n = 0; n < gf.order(); ++n) {
        if (gf.coeff(n).degree() > static_cast<int>(n)) return std::nullopt;
        std::vector<YPoly> row;
        for (size_t k = 0; k <= n; ++k) row.emplace_back(gf.coeff(n).coeff(k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Json matrix_json(const ProductionMatrix& p) {
    Json rows = Json::array();
    for (const auto& row : p.entries) {
        Json r = Json::array();
        for (const YPoly& e : row) r.push_back(e.to_string());
        rows.push_back(std::move(r));
    }
    return rows;
}

Json coeff_strings(const Series& s) {
    Json arr = Json::array();
    for (size_t n = 0; n < s.order(); ++n) arr.push_back(s.coeff(n).to_string());
    return arr;
}

WeightTrack weight_track_from_json(const Json& j) {
    WeightTrack t;
    try {
        if (j.contains("prefix"))
            for (const auto& s : j.at("prefix"))
                t.prefix.push_back(parse_ypoly(s.get<std::string>()));
        if (j.contains("fallback"))
            t.fallback = parse_ypoly(j.at("fallback").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("BadWeights", e.what());
    }
    return t;
}

WeightScheme weights_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("BadWeights", "expected an object");
    WeightScheme w;
    if (j.contains("rise")) w.rise = weight_track_from_json(j.at("rise"));
    if (j.contains("fall")) w.fall = weight_track_from_json(j.at("fall"));
    if (j.contains("horizontal")) w.horizontal = weight_track_from_json(j.at("horizontal"));
    return w;
}

Series integrated(const Series& a) {
    Series v(a.order() + 1);
    for (size_t n = 0; n < a.order(); ++n)
        v.coeff(n + 1) = a.coeff(n).scaled(Rational(1, static_cast<long>(n) + 1));
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Riordan arrays, continued fractions, and lattice-path oracles"};
    app.require_subcommand(1);
    int status = 0;

    auto* expand = app.add_subcommand(
        "expand", "expand a continued-fraction spec to a triangle or sequence");
    std::string expand_cf;
    size_t expand_order = 16;
    std::string expand_ysub;
    expand->add_option("--cf", expand_cf, "CF spec: JSON text or a file path")
        ->required();
    expand->add_option("--order", expand_order, "truncation order (default 16)");
    auto* ysub_opt =
        expand->add_option("--y-sub", expand_ysub, "substitute this rational for y");
    expand->callback([&] {
        size_t N = checked_order(expand_order);
        CFrac cf = cfrac_from_json(read_json_arg(expand_cf));
        if (ysub_opt->count() > 0) cf = cf_substitute_y(cf, rat_from_string(expand_ysub));
        Series gf = cf_expand(cf, N);
        if (!gf.has_rational_coeffs()) {
            if (auto t = lower_triangle_of(gf)) {
                emit(triangle_to_json(*t, std::nullopt));
                return;
            }
        }
        emit(sequence_to_json(gf.coeffs()));
    });

    auto* riordan = app.add_subcommand("riordan", "materialize a Riordan pair (g, f)");
    std::string rio_g, rio_f;
    size_t rio_order = 16;
    bool rio_inverse = false, rio_exp = false;
    riordan->add_option("--g", rio_g, "g as an expression in x")->required();
    riordan->add_option("--f", rio_f, "f as an expression in x")->required();
    riordan->add_option("--order", rio_order, "number of rows (default 16)");
    riordan->add_flag("--inverse", rio_inverse, "emit the group inverse");
    riordan->add_flag("--exp", rio_exp, "exponential array [g, f]");
    riordan->callback([&] {
        size_t N = checked_order(rio_order);
        Series g = parse_series(rio_g, N, false);
        Series f = parse_series(rio_f, N, false);
        Triangle t;
        if (rio_exp) {
            t = eriordan_matrix(eriordan_new(g, f), N);
            if (rio_inverse) t = triangle_inv(t);
        } else {
            RiordanPair r = riordan_new(g, f);
            if (rio_inverse) r = riordan_inv(r);
            t = riordan_matrix(r, N);
        }
        emit(triangle_to_json(t, std::nullopt));
    });

    auto* apply = app.add_subcommand(
        "apply", "fundamental theorem: column vector h pushed through (g, f)");
    // frees the short -h so the option below can own that name
    apply->set_help_flag("--help", "print this help message and exit");
    std::string ap_g, ap_f, ap_h;
    size_t ap_order = 16;
    apply->add_option("--g", ap_g, "g as an expression in x")->required();
    apply->add_option("--f", ap_f, "f as an expression in x")->required();
    apply->add_option("--h", ap_h, "h as an expression in x")->required();
    apply->add_option("--order", ap_order, "truncation order (default 16)");
    apply->callback([&] {
        size_t N = checked_order(ap_order);
        RiordanPair r = riordan_new(parse_series(ap_g, N, false),
                                    parse_series(ap_f, N, false));
        emit(sequence_to_json(ftra_apply(r, parse_series(ap_h, N, false)).coeffs()));
    });

    auto* production = app.add_subcommand(
        "production", "production matrix of a Riordan pair, with tridiagonal report");
    std::string pr_g, pr_f;
    size_t pr_order = 16;
    bool pr_exp = false;
    production->add_option("--g", pr_g, "g as an expression in x")->required();
    production->add_option("--f", pr_f, "f as an expression in x")->required();
    production->add_option("--order", pr_order, "working order (default 16)");
    production->add_flag("--exp", pr_exp, "exponential array: assemble from Z and A");
    production->callback([&] {
        size_t N = checked_order(pr_order);
        Series g = parse_series(pr_g, N, false);
        Series f = parse_series(pr_f, N, false);
        Json out = Json::object();
        ProductionMatrix p;
        if (pr_exp) {
            ExpProduction za = exp_production_za(g, f);
            out["z"] = coeff_strings(za.z);
            out["a"] = coeff_strings(za.a);
            p = std::move(za.p);
        } else {
            p = production_matrix(riordan_matrix(riordan_new(g, f), N));
        }
        out["order"] = p.size();
        out["entries"] = matrix_json(p);
        bool tri = is_tridiagonal(p);
        out["tridiagonal"] = tri;
        out["jacobi"] = nullptr;
        if (tri) {
            try {
                out["jacobi"] = cfrac_to_json(tridiagonal_to_jacobi(p));
            } catch (const PreconditionError&) {
                // tridiagonal but the superdiagonal is not 1: no Jacobi reading
            }
        }
        emit(out);
    });

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    std::string ver_suite = "all";
    verify->add_option("--suite", ver_suite, "all or one of s1..s8");
    verify->callback([&] {
        std::vector<CheckResult> results =
            ver_suite == "all" ? run_all_suites() : run_suite(ver_suite);
        std::sort(results.begin(), results.end(),
                  [](const CheckResult& a, const CheckResult& b) {
                      if (a.suite != b.suite) return a.suite < b.suite;
                      return a.name < b.name;
                  });
        size_t failed = 0;
        Json checks = Json::array();
        for (const CheckResult& c : results) {
            if (!c.pass) ++failed;
            Json e = Json::object();
            e["suite"] = c.suite;
            e["name"] = c.name;
            e["pass"] = c.pass;
            e["detail"] = c.detail;
            checks.push_back(std::move(e));
        }
        Json rep = Json::object();
        rep["suite"] = ver_suite;
        rep["total"] = results.size();
        rep["failed"] = failed;
        rep["checks"] = std::move(checks);
        emit(rep);
        if (failed > 0) status = 4;
    });

    auto* identify = app.add_subcommand(
        "identify", "match terms against the bundled sequence table");
    std::string id_terms;
    identify->add_option("--terms", id_terms, "comma-separated integers")->required();
    identify->callback([&] {
        std::vector<Integer> terms = parse_terms_csv(id_terms);
        std::vector<std::string> names = identify_sequence(terms);
        Json rep = Json::object();
        Json ts = Json::array();
        for (const Integer& t : terms) ts.push_back(t.str());
        rep["terms"] = std::move(ts);
        Json matches = Json::array();
        for (const std::string& n : names) matches.push_back(n);
        rep["matches"] = std::move(matches);
        // short prefixes match too easily to be trusted
        rep["weak"] = terms.size() < 6;
        emit(rep);
    });

    auto* oracle = app.add_subcommand(
        "oracle", "brute-force weighted lattice-path counts");
    std::string or_kind = "motzkin", or_weights;
    unsigned or_n = 6;
    oracle->add_option("--kind", or_kind, "dyck, motzkin, or schroeder");
    oracle->add_option("--n", or_n, "count paths of size 0..n (capped at 14)");
    auto* w_opt = oracle->add_option("--weights", or_weights,
                                     "weight scheme: JSON text or a file path");
    oracle->callback([&] {
        PathKind kind;
        if (or_kind == "dyck") {
            kind = PathKind::Dyck;
        } else if (or_kind == "motzkin") {
            kind = PathKind::Motzkin;
        } else if (or_kind == "schroeder") {
            kind = PathKind::Schroeder;
        } else {
            throw ParseError("BadKind", "unknown path kind '" + or_kind + "'");
        }
        WeightScheme w;
        if (w_opt->count() > 0) w = weights_from_json(read_json_arg(or_weights));
        std::vector<YPoly> counts;
        for (unsigned m = 0; m <= or_n; ++m)
            counts.push_back(count_weighted_paths(kind, m, w));
        Json rep = Json::object();
        rep["kind"] = or_kind;
        rep["counts"] = sequence_to_json(counts);
        emit(rep);
    });

    auto* revert = app.add_subcommand(
        "revert", "exploratory revert transform of a sequence given by its GF");
    std::string rv_a;
    size_t rv_order = 16;
    bool rv_exp = false;
    revert->add_option("--a", rv_a, "input GF as an expression in x")->required();
    revert->add_option("--order", rv_order, "number of output terms (default 16)");
    revert->add_flag("--exp", rv_exp,
                     "exponential reading: integrate, revert, rescale by (n+1)!");
    revert->callback([&] {
        size_t N = checked_order(rv_order);
        Series a = parse_series(rv_a, N, false);
        Series r = rv_exp ? fps_reversion(integrated(a))
                          : fps_reversion(a.shifted_up(1));
        std::vector<YPoly> out;
        for (size_t n = 0; n + 1 < r.order(); ++n) {
            YPoly b = r.coeff(n + 1);
            if (rv_exp) b = b.scaled(Rational(factorial(n + 1)));
            out.push_back(b);
        }
        emit(sequence_to_json(out));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error " << e.what() << "\n";
        return e.exit_code();
    }
    return status;
}
