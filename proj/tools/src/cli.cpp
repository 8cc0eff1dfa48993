#include <mzv_cli/cli.hpp>

#include <mzv/catalog.hpp>
#include <mzv/closed_forms.hpp>
#include <mzv/config.hpp>
#include <mzv/error.hpp>
#include <mzv/expression.hpp>
#include <mzv/generating.hpp>
#include <mzv/maps.hpp>
#include <mzv/mzv_eval.hpp>
#include <mzv/products.hpp>
#include <mzv/regularization.hpp>
#include <mzv/relations.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

namespace mzv::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct Common {
    bool json = false;
    bool csv = false;
    bool timing = false;
    std::string config_path;
    unsigned digits = 30;
    unsigned threads = 1;

    Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
};

// A verification or check failed; maps to exit code 1.
struct Failed {};

json terms_json(const WordSum& w) {
    json arr = json::array();
    std::vector<std::pair<Word, Rational>> terms(w.begin(), w.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return serial_less(a.first, b.first); });
    for (const auto& [u, c] : terms) {
        json t{{"word", u.empty() ? "()" : u.str()}, {"coefficient", to_string(c)}};
        t["index"] = u.in_h1() ? json(index_to_string(word_to_index(u))) : json(nullptr);
        arr.push_back(t);
    }
    return arr;
}

void emit_sum(std::ostream& out, Format f, const WordSum& w, json meta) {
    if (f == Format::Json) {
        meta["result"] = w.str();
        meta["terms"] = terms_json(w);
        out << meta.dump(2) << "\n";
    } else if (f == Format::Csv) {
        out << "word,index,coefficient\n";
        for (const auto& t : terms_json(w))
            out << t["word"].get<std::string>() << "," << (t["index"].is_null() ? "" : "\"" + t["index"].get<std::string>() + "\"")
                << "," << t["coefficient"].get<std::string>() << "\n";
    } else {
        out << w.str() << "\n";
    }
}

json params_json(const TaskParams& p) {
    json o = json::object();
    for (const auto& [k, v] : p) o[k] = v.size() == 1 ? json(v[0]) : json(v);
    return o;
}

MzvMethod parse_method(const std::string& m) {
    if (m == "half") return MzvMethod::SplitHalf;
    if (m == "third") return MzvMethod::SplitThird;
    if (m == "direct") return MzvMethod::Direct;
    throw ParseError("unknown method '" + m + "' (half, third, direct)", 0);
}

Params closed_params(const TaskParams& tp) {
    Params p;
    for (const auto& [k, v] : tp) {
        if (v.size() != 1) throw BadRange("closed-form parameter " + k + " must be a single integer");
        p[k] = v[0];
    }
    return p;
}

json rank_json(const RankReport& r) {
    json fams = json::array();
    for (Family f : r.families) fams.push_back(std::string(family_name(f)));
    return {{"weight", r.weight},       {"families", fams}, {"generators", r.generators}, {"rank", r.rank},
            {"quotient_dim", r.quotient_dim}, {"d_k", r.d_k},   {"match", r.match}};
}

void emit_ranks(std::ostream& out, Format f, const std::vector<RankReport>& rows, bool single) {
    if (f == Format::Json) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(rank_json(r));
        out << (single ? arr[0] : arr).dump(2) << "\n";
        return;
    }
    if (f == Format::Csv) {
        out << "weight,families,generators,rank,quotient_dim,d_k,match\n";
        for (const auto& r : rows)
            out << r.weight << ",\"" << families_to_string(r.families) << "\"," << r.generators << "," << r.rank << ","
                << r.quotient_dim << "," << r.d_k << "," << (r.match ? "true" : "false") << "\n";
        return;
    }
    out << "weight  generators  rank  quotient_dim  d_k  match\n";
    for (const auto& r : rows)
        out << std::setw(6) << r.weight << std::setw(12) << r.generators << std::setw(6) << r.rank << std::setw(14)
            << r.quotient_dim << std::setw(5) << r.d_k << "  " << (r.match ? "yes" : "no") << "\n";
    if (!rows.empty()) out << "families: " << families_to_string(rows.front().families) << "\n";
}

void emit_reports(std::ostream& out, Format f, const std::vector<VerificationReport>& reports, bool timing) {
    std::size_t ok = 0;
    for (const auto& r : reports) ok += r.ok();
    if (f == Format::Json) {
        json arr = json::array();
        for (const auto& r : reports) {
            json o{{"name", r.name},
                   {"label", r.label},
                   {"params", params_json(r.params)},
                   {"kind", std::string(task_kind_name(r.kind))},
                   {"verdict", std::string(verdict_name(r.verdict))},
                   {"residue_or_delta", r.residue_or_delta}};
            if (timing) o["millis"] = r.millis;
            arr.push_back(o);
        }
        out << json{{"reports", arr}, {"passed", ok == reports.size()}, {"total", reports.size()}, {"ok", ok}}.dump(2)
            << "\n";
        return;
    }
    if (f == Format::Csv) {
        out << "name,params,kind,label,verdict,residue_or_delta" << (timing ? ",millis" : "") << "\n";
        for (const auto& r : reports) {
            out << r.name << ",\"" << params_to_string(r.params) << "\"," << task_kind_name(r.kind) << ",\"" << r.label
                << "\"," << verdict_name(r.verdict) << ",\"" << r.residue_or_delta << "\"";
            if (timing) out << "," << r.millis;
            out << "\n";
        }
        return;
    }
    for (const auto& r : reports) {
        out << verdict_name(r.verdict) << "  " << r.name << " [" << params_to_string(r.params) << "] "
            << task_kind_name(r.kind) << ": " << r.label;
        if (r.kind == TaskKind::Numeric) out << "  delta=" << r.residue_or_delta;
        else if (!r.ok()) out << "  residue=" << r.residue_or_delta;
        if (timing) out << "  (" << r.millis << " ms)";
        out << "\n";
    }
    out << ok << "/" << reports.size() << " passed\n";
}

void emit_generating(std::ostream& out, Format f, const GeneratingReport& r) {
    if (f == Format::Json) {
        out << json{{"name", r.name},
                    {"truncation", r.truncation},
                    {"digits", r.digits},
                    {"exact", r.exact},
                    {"passed", r.passed},
                    {"compared", r.compared},
                    {"max_deviation", r.exact ? "0" : to_decimal(r.max_deviation, 3)},
                    {"tolerance", r.exact ? "0" : to_decimal(r.tolerance, 3)},
                    {"mismatches", r.mismatches}}
                   .dump(2)
            << "\n";
        return;
    }
    if (f == Format::Csv) {
        out << "name,truncation,digits,exact,passed,compared,max_deviation\n"
            << r.name << "," << r.truncation << "," << r.digits << "," << r.exact << "," << r.passed << ","
            << r.compared << "," << (r.exact ? "0" : to_decimal(r.max_deviation, 3)) << "\n";
        return;
    }
    out << (r.passed ? "PASS" : "FAIL") << "  generating:" << r.name << " to degree " << r.truncation << ", "
        << r.compared << " coefficients";
    if (r.exact) out << ", exact\n";
    else out << ", max deviation " << to_decimal(r.max_deviation, 3) << " (tolerance " << to_decimal(r.tolerance, 3) << ")\n";
    for (const auto& m : r.mismatches) out << "  mismatch " << m << "\n";
}

void apply_config(const Common& c) {
    Config cfg = load_config(c.config_path);
    set_config(cfg);
    set_product_cache_limit(cfg.product_cache_entries);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiple zeta values: word algebra, relations and verification"};
    app.name("mzv");
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_flag("--json", c.json, "emit JSON");
    app.add_flag("--csv", c.csv, "emit CSV");
    app.add_flag("--timing", c.timing, "include per-task timings (output is then not reproducible)");
    app.add_option("--config", c.config_path, "JSON config file (weight_cap, digits_cap, product_cache_entries, denominator_bound)");
    app.add_option("--digits", c.digits, "decimal digits for numeric work")->check(CLI::PositiveNumber);
    app.add_option("--threads", c.threads, "worker threads for verification")->check(CLI::PositiveNumber);

    // expand
    auto* expand = app.add_subcommand("expand", "product of expressions");
    std::string product_name = "shuffle";
    std::vector<std::string> operands;
    expand->add_option("--product", product_name, "shuffle, stuffle, star-shuffle, star-stuffle");
    expand->add_option("exprs", operands, "expressions, e.g. \"(2)\" \"xy + 2*xyy\"")->required();

    // map
    auto* map_cmd = app.add_subcommand("map", "apply a named linear map");
    std::string map_name;
    std::string map_expr;
    map_cmd->add_option("--name", map_name, "S, Sinv, stilde, stildeinv, tau, sigma, sigmainv, dn:N, ...")->required();
    map_cmd->add_option("expr", map_expr)->required();

    // reg
    auto* reg_cmd = app.add_subcommand("reg", "regularization in h0[y]");
    std::string reg_product = "shuffle";
    std::string reg_expr;
    bool reg_evaluate = false;
    reg_cmd->add_option("--product", reg_product, "shuffle, stuffle, star-shuffle, star-stuffle");
    reg_cmd->add_flag("--evaluate", reg_evaluate, "also print the polynomial sum Z(w_i) T^i");
    reg_cmd->add_option("expr", reg_expr)->required();

    // eval
    auto* eval = app.add_subcommand("eval", "numeric value of an expression in h0 or of a closed form");
    std::string eval_expr, closed_name, method_name = "half", eval_params;
    bool eval_star = false;
    eval->add_option("expr", eval_expr);
    eval->add_flag("--star", eval_star, "evaluate Z* = Z o S");
    eval->add_option("--method", method_name, "half, third, direct");
    eval->add_option("--closed-form", closed_name, "named closed form (see list)");
    eval->add_option("--params", eval_params, "k=..,n=..");

    // verify
    auto* verify = app.add_subcommand("verify", "run a catalog identity or a generating check");
    std::string verify_name, verify_params, mode_name, tolerance_text;
    std::map<std::string, long> shortcuts;
    verify->add_option("name", verify_name, "identity name, or generating:<check>")->required();
    verify->add_option("--params", verify_params, "k=4,n=2,a=[1,1]");
    verify->add_option("--mode", mode_name, "symbolic, member or numeric");
    verify->add_option("--tolerance", tolerance_text, "numeric tolerance, default 10^-(digits-10)");
    for (const char* key : {"k", "n", "m", "a", "b", "r", "s", "degree"})
        verify->add_option_function<long>(std::string("--") + key, [&shortcuts, key](long v) { shortcuts[key] = v; },
                                          std::string("shortcut for --params ") + key + "=...");

    // rank
    auto* rank = app.add_subcommand("rank", "rank and quotient dimension of relation families at one weight");
    int rank_weight = 0;
    std::string families_text = "RDS_IV";
    rank->add_option("--weight", rank_weight)->required();
    rank->add_option("--families", families_text, "FDS, RDS_IV, RDS_V, DERIV, OHNO, OHNO_STAR (comma separated)");

    // table
    auto* table = app.add_subcommand("table", "quotient dimensions against d_k over a weight range");
    int from = 2, to = 10;
    table->add_option("--from", from);
    table->add_option("--to", to);
    table->add_option("--families", families_text);

    auto* list = app.add_subcommand("list", "catalog identities, closed forms, generating checks and maps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c.json && c.csv) throw ParseError("--json and --csv are exclusive", 0);
        apply_config(c);
        const Format f = c.format();

        if (*expand) {
            Product p = parse_product(product_name);
            WordSum acc = parse_expression(operands.front());
            for (std::size_t i = 1; i < operands.size(); ++i) acc = product(p, acc, parse_expression(operands[i]));
            emit_sum(out, f, acc, {{"command", "expand"}, {"product", std::string(product_name)}, {"operands", operands}});
        } else if (*map_cmd) {
            WordSum r = apply_named_map(map_name, parse_expression(map_expr));
            emit_sum(out, f, r, {{"command", "map"}, {"name", map_name}, {"input", map_expr}});
        } else if (*reg_cmd) {
            Product p = parse_product(reg_product);
            WordSum w = parse_expression(reg_expr, Space::H1);
            RegDecomposition d = reg_decompose(w, p);
            std::string poly;
            if (reg_evaluate) {
                const unsigned digits = c.digits;
                poly = to_string(z_reg_polynomial(w, p, [digits](const WordSum& u) { return z_value(u, digits); }),
                                 c.digits);
            }
            if (f == Format::Json) {
                json coeffs = json::array();
                for (const auto& w0 : d.coefficients) coeffs.push_back(w0.str());
                json o{{"command", "reg"}, {"product", reg_product}, {"input", reg_expr}, {"coefficients", coeffs},
                       {"text", d.str()}};
                if (reg_evaluate) o["polynomial"] = poly;
                out << o.dump(2) << "\n";
            } else if (f == Format::Csv) {
                out << "power,coefficient\n";
                for (std::size_t i = 0; i < d.coefficients.size(); ++i)
                    out << i << ",\"" << d.coefficients[i].str() << "\"\n";
            } else {
                out << d.str() << "\n";
                if (reg_evaluate) out << poly << "\n";
            }
        } else if (*eval) {
            if (!closed_name.empty()) {
                if (!eval_expr.empty()) throw ParseError("give either an expression or --closed-form", 0);
                ClosedForm cf = closed_form(closed_name, closed_params(parse_task_params(eval_params)), c.digits);
                if (f == Format::Json) {
                    out << json{{"name", cf.name},
                                {"params", params_json(parse_task_params(eval_params))},
                                {"coefficient", cf.coefficient ? json(to_string(*cf.coefficient)) : json(nullptr)},
                                {"pi_power", cf.pi_power},
                                {"value", to_decimal(cf.value, c.digits)},
                                {"complex_route", cf.complex_route},
                                {"reconstructed", cf.reconstructed}}
                               .dump(2)
                        << "\n";
                } else {
                    out << cf.str(c.digits) << "\n";
                }
            } else {
                if (eval_expr.empty()) throw ParseError("eval needs an expression or --closed-form", 0);
                WordSum w = parse_expression(eval_expr, Space::H0);
                if (eval_star) w = S_map(w);
                MzvMethod m = parse_method(method_name);
                HPReal v = 0;
                {
                    PrecisionGuard g(working_digits(c.digits));
                    for (const auto& [u, q] : w) v += to_hp(q) * (u.empty() ? HPReal(1) : zeta_word(u, c.digits, m));
                }
                const std::string value = to_decimal(v, c.digits);
                if (f == Format::Json)
                    out << json{{"input", eval_expr}, {"star", eval_star}, {"digits", c.digits}, {"method", method_name},
                                {"value", value}}
                               .dump(2)
                        << "\n";
                else
                    out << value << "\n";
            }
        } else if (*verify) {
            TaskParams tp = parse_task_params(verify_params);
            for (const auto& [k, v] : shortcuts) tp[k] = {v};
            std::optional<HPReal> tol;
            if (!tolerance_text.empty()) {
                PrecisionGuard g(working_digits(c.digits));
                tol = HPReal(tolerance_text);
            }
            const std::string gen_prefix = "generating:";
            if (verify_name.rfind(gen_prefix, 0) == 0) {
                Params p = closed_params(tp);
                int degree = static_cast<int>(p.count("degree") ? p["degree"] : 6);
                p.erase("degree");
                GeneratingReport r = generating_check(verify_name.substr(gen_prefix.size()), p, degree, c.digits, tol);
                emit_generating(out, f, r);
                if (!r.passed) throw Failed{};
            } else {
                auto tasks = build_tasks(verify_name, tp, c.digits);
                if (!mode_name.empty()) {
                    TaskKind want = parse_task_kind(mode_name);
                    std::erase_if(tasks, [want](const VerificationTask& t) { return t.kind != want; });
                    if (tasks.empty())
                        throw ParseError(verify_name + " has no " + mode_name + " tasks for these parameters", 0);
                }
                auto reports = run_tasks(tasks, c.threads, tol);
                emit_reports(out, f, reports, c.timing);
                for (const auto& r : reports)
                    if (!r.ok()) throw Failed{};
            }
        } else if (*rank) {
            emit_ranks(out, f, {rank_report(rank_weight, parse_families(families_text))}, true);
        } else if (*table) {
            if (from < 1 || to < from) throw BadRange("table needs 1 <= from <= to");
            FamilySet fams = parse_families(families_text);
            std::vector<RankReport> rows;
            for (int k = from; k <= to; ++k) rows.push_back(rank_report(k, fams));
            emit_ranks(out, f, rows, false);
        } else if (*list) {
            if (f == Format::Json) {
                json ids = json::array();
                for (const auto& e : catalog()) ids.push_back({{"name", e.name}, {"params", e.schema}, {"summary", e.summary}});
                json cf = json::array(), gen = json::array(), maps = json::array();
                for (auto n : closed_form_names()) cf.push_back(std::string(n));
                for (auto n : generating_names()) gen.push_back("generating:" + std::string(n));
                for (auto n : map_names()) maps.push_back(std::string(n));
                out << json{{"identities", ids}, {"closed_forms", cf}, {"generating", gen}, {"maps", maps}}.dump(2) << "\n";
            } else {
                out << "identities (verify NAME --params ...):\n";
                for (const auto& e : catalog()) out << "  " << e.name << "  [" << e.schema << "]  " << e.summary << "\n";
                out << "generating checks (verify generating:NAME --params k=..,degree=..):\n";
                for (auto n : generating_names()) out << "  generating:" << n << "\n";
                out << "closed forms (eval --closed-form NAME --params ...):\n";
                for (auto n : closed_form_names()) out << "  " << n << "\n";
                out << "maps (map --name NAME):\n";
                for (auto n : map_names()) out << "  " << n << "\n";
            }
        }
    } catch (const Failed&) {
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace mzv::cli
