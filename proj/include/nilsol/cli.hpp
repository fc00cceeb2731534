#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "io.hpp"
#include "metric.hpp"
#include "report.hpp"
#include "reproduce.hpp"

namespace nilsol {

/// Exit codes: 0 soliton, 1 nonsoliton, 2 inapplicable, 3 reproduce found a
/// failing claim, 64 malformed input or parameters, 70 internal error.
inline int verdict_exit_code(const SolitonVerdict& v) {
    if (v.is_soliton()) return 0;
    if (v.is_nonsoliton()) return 1;
    return 2;
}

namespace detail {

inline RatVec parse_metric_diag(const std::string& text) {
    RatVec entries;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            entries.push_back(rat_from_string(token));
            token.clear();
        }
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ')
            flush();
        else
            token += ch;
    }
    flush();
    if (entries.empty()) throw std::invalid_argument("metric entry list is empty");
    return entries;
}

inline int emit_report(const Report& r, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << render_json(r).dump(2) << '\n';
    else
        out << render_text(r);
    return verdict_exit_code(r.verdict);
}

inline int cmd_analyze(const std::string& path, const std::string& format,
                       std::ostream& out) {
    return emit_report(analyze(load_algebra(path)), format, out);
}

inline int cmd_family(int m, int k, const std::string& q_text, const std::string& format,
                      std::ostream& out) {
    Rational q = rat_from_string(q_text);
    auto fam = family_extended(m, k, q);
    auto report = analyze(fam.algebra);
    if (format == "json") {
        nlohmann::json j;
        j["file"] = serialize(fam.algebra);
        j["lambda"] = rat_str(fam.lambda);
        j["report"] = render_json(report);
        out << j.dump(2) << '\n';
    } else {
        out << "# generated algebra: m=" << m << " k=" << k << " q=" << rat_str(q) << '\n';
        out << serialize(fam.algebra) << '\n';
        out << render_text(report);
        out << "trace normalization of the construction derivation: lambda = "
            << rat_str(fam.lambda) << '\n';
    }
    return verdict_exit_code(report.verdict);
}

inline int cmd_reproduce(const std::string& q_text, int max_k, const std::string& format,
                         std::ostream& out) {
    ReproduceOptions opt;
    if (!q_text.empty()) opt.q = rat_from_string(q_text);
    opt.max_k = max_k;
    auto rows = run_claims(opt);
    if (format == "json")
        out << render_json(rows).dump(2) << '\n';
    else
        out << render_text(rows);
    return all_claims_pass(rows) ? 0 : 3;
}

inline int cmd_gram(const std::string& path, const std::string& format, std::ostream& out) {
    auto g = load_algebra(path);
    auto triples = index_set(g);  // throws for abelian input
    auto u = gram_matrix(g);
    bool nice = is_nice(g);
    if (format == "json") {
        nlohmann::json jt = nlohmann::json::array();
        for (const auto& t : triples)
            jt.push_back({{"i", t.i},
                          {"j", t.j},
                          {"k", t.k},
                          {"c", rat_str(g.structure_constant(t.i, t.j, t.k))}});
        nlohmann::json j{{"triples", jt}, {"nice", nice}, {"gram", matrix_json(u)}};
        out << j.dump(2) << '\n';
    } else {
        out << "bracket index set (" << triples.size()
            << (triples.size() == 1 ? " triple" : " triples") << ", ordered by target):\n";
        for (std::size_t a = 0; a < triples.size(); ++a) {
            const auto& t = triples[a];
            out << "  " << (a + 1) << ": [x" << t.i << ", x" << t.j << "] -> x" << t.k
                << "  (c = " << rat_str(g.structure_constant(t.i, t.j, t.k)) << ")\n";
        }
        out << "nice basis: " << (nice ? "yes (no Gram entry equals 2)" : "no") << '\n';
        out << "gram matrix:\n" << matrix_text(u, "  ");
    }
    return 0;
}

inline int cmd_der(const std::string& path, const std::string& format, std::ostream& out) {
    auto g = load_algebra(path);
    auto der = derivation_algebra(g);
    auto torus = diagonal_derivations(g);
    auto nik = pre_einstein_diagonal(g, der);
    bool verified = nik && verify_pre_einstein(g, *nik, der);
    if (format == "json") {
        nlohmann::json j;
        j["derivation_dim"] = der.dim();
        j["diagonal_torus_dim"] = torus.size();
        if (nik)
            j["nikolayevsky"] = {{"diag", vec_json(nik->diagonal_entries())},
                                 {"verified", verified}};
        else
            j["nikolayevsky"] = nullptr;
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& f : der.basis) basis.push_back(matrix_json(f));
        j["basis"] = basis;
        out << j.dump(2) << '\n';
    } else {
        out << "dim Der = " << der.dim() << '\n';
        out << "diagonal torus dimension: " << torus.size() << '\n';
        if (nik)
            out << "nikolayevsky (diagonal pre-Einstein): diag "
                << vec_text(nik->diagonal_entries())
                << (verified ? "  [trace conditions verified]\n"
                             : "  [trace conditions FAILED]\n");
        else
            out << "nikolayevsky: no diagonal solution of the trace conditions\n";
    }
    return 0;
}

inline int cmd_ricci(const std::string& path, const std::string& metric_text,
                     const std::string& format, std::ostream& out) {
    auto g = load_algebra(path);
    DiagonalMetric metric = metric_text.empty()
                                ? DiagonalMetric::identity(g.dim())
                                : DiagonalMetric(parse_metric_diag(metric_text));
    auto form = ricci_form(g, metric);
    auto ric = ricci_endomorphism(g, metric);
    auto dec = soliton_metric_check(g, metric);
    if (format == "json") {
        nlohmann::json j;
        j["metric"] = vec_json(metric.q);
        j["ricci_form"] = matrix_json(form);
        j["ricci_endomorphism"] = matrix_json(ric);
        if (dec)
            j["decomposition"] = {{"beta", rat_str(dec->first)},
                                  {"derivation", matrix_json(dec->second)}};
        else
            j["decomposition"] = nullptr;
        out << j.dump(2) << '\n';
    } else {
        out << "metric: diag " << vec_text(metric.q) << '\n';
        out << "ricci form:\n" << matrix_text(form, "  ");
        out << "ricci endomorphism:\n" << matrix_text(ric, "  ");
        if (dec)
            out << "soliton decomposition: Ric = " << rat_str(dec->first)
                << " Id + D with the derivation D:\n"
                << matrix_text(dec->second, "  ");
        else
            out << "soliton decomposition: none (Ric - beta Id is never a derivation)\n";
    }
    return 0;
}

}  // namespace detail

/// Command-line front end. `args` excludes the program name; output and
/// diagnostics go to the supplied streams.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"exact soliton analysis of nilpotent Lie algebras", "nilsol"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    std::string analyze_path;
    auto* analyze_cmd =
        app.add_subcommand("analyze", "full analysis of a structure-constant file");
    analyze_cmd->add_option("file", analyze_path, "structure-constant file")->required();
    add_format(analyze_cmd);

    int family_m = 0;
    int family_k = 0;
    std::string family_q = "1";
    auto* family_cmd = app.add_subcommand(
        "family", "generate a built-in family member and analyze it");
    family_cmd->add_option("--m", family_m, "base dimension, 8 or 9")->required();
    family_cmd->add_option("--k", family_k, "number of appended central pairs");
    family_cmd->add_option("--q", family_q, "structure parameter, positive rational");
    add_format(family_cmd);

    std::string reproduce_q;
    int reproduce_max_k = 3;
    auto* reproduce_cmd =
        app.add_subcommand("reproduce", "run every recorded computational claim");
    reproduce_cmd->add_option("--q", reproduce_q, "override sampled parameter values");
    reproduce_cmd->add_option("--max-k", reproduce_max_k, "largest extension count");
    add_format(reproduce_cmd);

    std::string gram_path;
    auto* gram_cmd = app.add_subcommand("gram", "index set and Gram matrix of a file");
    gram_cmd->add_option("file", gram_path, "structure-constant file")->required();
    add_format(gram_cmd);

    std::string der_path;
    auto* der_cmd = app.add_subcommand("der", "derivation algebra summary of a file");
    der_cmd->add_option("file", der_path, "structure-constant file")->required();
    add_format(der_cmd);

    std::string ricci_path;
    std::string ricci_metric;
    auto* ricci_cmd =
        app.add_subcommand("ricci", "Ricci data of a file under a diagonal metric");
    ricci_cmd->add_option("file", ricci_path, "structure-constant file")->required();
    ricci_cmd->add_option("--metric", ricci_metric,
                          "diagonal entries, comma-separated rationals");
    add_format(ricci_cmd);

    std::vector<const char*> argv;
    argv.push_back("nilsol");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        app.exit(e, out, err);
        return 64;
    }

    try {
        if (*analyze_cmd) return detail::cmd_analyze(analyze_path, format, out);
        if (*family_cmd) return detail::cmd_family(family_m, family_k, family_q, format, out);
        if (*reproduce_cmd)
            return detail::cmd_reproduce(reproduce_q, reproduce_max_k, format, out);
        if (*gram_cmd) return detail::cmd_gram(gram_path, format, out);
        if (*der_cmd) return detail::cmd_der(der_path, format, out);
        if (*ricci_cmd) return detail::cmd_ricci(ricci_path, ricci_metric, format, out);
        err << "error: no command given\n";
        return 64;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 64;
    } catch (const JacobiError& e) {
        err << "error: " << e.what() << '\n';
        return 64;
    } catch (const EmptyIndexSetError& e) {
        err << "inapplicable: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 64;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 64;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 70;
    }
}

}  // namespace nilsol
