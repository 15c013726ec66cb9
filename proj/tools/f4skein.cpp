// Command-line front end: qdim, simplify, eval, eval-link, idempotents, verify-all.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "f4skein/papercheck.hpp"

using json = nlohmann::json;
using namespace f4skein;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kIrreducible = 3 };

std::string at_one(const ScalarQ& s) {
    try {
        return s.specialize(1).get_str();
    } catch (const PoleAtPoint&) {
        return "pole";
    }
}

struct Output {
    bool as_json = false;
    std::string out_file;

    int emit(const json& j, const std::string& text, int code) const {
        if (as_json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text;
        if (!out_file.empty()) {
            std::ofstream f(out_file);
            if (!f) {
                std::cerr << "cannot write " << out_file << "\n";
                return kUsage;
            }
            f << j.dump(2) << "\n";
        }
        return code;
    }
};

int cmd_qdim(const Output& o, const std::vector<long>& coords) {
    Weight w;
    for (std::size_t i = 0; i < 4; ++i)
        w.fund[i] = coords[i];
    ScalarQ d = qdim(w);
    json j = {{"command", "qdim"}, {"weight", coords}, {"value", d.to_string()}, {"at_q1", at_one(d)}};
    return o.emit(j, d.to_string() + "\n" + at_one(d) + " at q=1\n", kOk);
}

int cmd_simplify(const Output& o, const std::string& expr, bool planar, long budget) {
    LinComb f = parse_expr(expr);
    NormalizeResult r = planar ? normalize_planar(f, budget) : normalize(f, crossing_pack(), budget);
    std::string out = print_lincomb(r.reduced);
    json j = {{"command", "simplify"}, {"input", expr},     {"planar", planar},
              {"result", out},         {"terms", r.reduced.size()}, {"irreducible", r.irreducible}};
    std::string text = out + "\n";
    if (r.irreducible)
        text += "irreducible: some terms have no applicable relation\n";
    return o.emit(j, text, r.irreducible ? kIrreducible : kOk);
}

int cmd_eval(const Output& o, const std::string& expr, long budget) {
    LinComb f = parse_expr(expr);
    ScalarQ v = reduce_closed(f, Strategy::braided, budget);
    json j = {{"command", "eval"}, {"input", expr}, {"value", v.to_string()}, {"at_q1", at_one(v)}};
    return o.emit(j, v.to_string() + "\n" + at_one(v) + " at q=1\n", kOk);
}

int cmd_eval_link(const Output& o, const std::string& twists) {
    TwistWord w = parse_twist_word(twists);
    ScalarQ v = link_invariant(w);
    json j = {{"command", "eval-link"}, {"twists", w}, {"value", v.to_string()}, {"at_q1", at_one(v)}};
    return o.emit(j, v.to_string() + "\n" + at_one(v) + " at q=1\n", kOk);
}

int cmd_idempotents(const Output& o) {
    const auto& es = idempotents();
    auto ev = crossing_eigenvalues();
    json list = json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < es.size(); ++i) {
        json coeffs = json::object();
        for (int k = 0; k < kTwoDim; ++k)
            coeffs[std::string(basis_names()[static_cast<std::size_t>(k)])] = es[i].e[k].to_string();
        ScalarQ d = qdim(es[i].weight);
        list.push_back({{"weight", es[i].name},
                        {"coefficients", coeffs},
                        {"eigenvalue", ev[i].to_string()},
                        {"qdim", d.to_string()},
                        {"qdim_at_q1", at_one(d)}});
        text << "e_" << es[i].name << " = " << es[i].e << "\n"
             << "  X acts by " << ev[i] << "\n"
             << "  trace " << at_one(d) << " at q=1\n";
    }
    return o.emit({{"command", "idempotents"}, {"idempotents", list}}, text.str(), kOk);
}

std::set<int> parse_only(const std::string& s) {
    std::set<int> out;
    if (s.empty())
        return out;
    std::stringstream ss(s);
    std::string item;
    const int n = static_cast<int>(check_count());
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--only", "bad entry '" + item + "'");
        }
        if (used != item.size() || k < 1 || k > n)
            throw CLI::ValidationError("--only", "entry out of range '" + item + "'");
        out.insert(k);
    }
    return out;
}

int cmd_verify(const Output& o, const std::string& only) {
    auto results = run_checks(parse_only(only));
    json checks = json::array();
    std::ostringstream text;
    for (const auto& r : results) {
        checks.push_back({{"index", r.index},
                          {"name", r.name},
                          {"claim", r.claim},
                          {"passed", r.passed},
                          {"lhs", r.lhs},
                          {"rhs", r.rhs}});
        text << (r.passed ? "PASS " : "FAIL ") << r.index << " " << r.name << ": " << r.claim << "\n";
        if (!r.passed)
            text << "  lhs: " << r.lhs << "\n  rhs: " << r.rhs << "\n";
    }
    bool ok = all_passed(results);
    text << (ok ? "all " : "some ") << results.size() << (ok ? " checks passed\n" : " checks include failures\n");
    return o.emit({{"command", "verify-all"}, {"passed", ok}, {"checks", checks}}, text.str(),
                  ok ? kOk : kCheckFailed);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluator for quantum F4 string diagrams"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    long budget = default_step_budget();
    app.add_flag("--json", out.as_json, "Print JSON instead of text");
    app.add_option("--out", out.out_file, "Also write the JSON report to this file");
    app.add_option("--budget", budget, "Rewrite step budget")->check(CLI::PositiveNumber);

    std::vector<long> weight;
    auto* qd = app.add_subcommand("qdim", "Quantum dimension of a dominant weight in fundamental coordinates");
    qd->add_option("coords", weight, "Four nonnegative integers")->required()->expected(4);

    std::string expr;
    bool planar = false;
    auto* simp = app.add_subcommand("simplify", "Normal form of a diagram expression");
    simp->add_option("expr", expr, "Diagram expression")->required();
    simp->add_flag("--planar", planar, "Eliminate crossings first");

    std::string closed;
    auto* ev = app.add_subcommand("eval", "Scalar value of a closed diagram expression");
    ev->add_option("expr", closed, "Expression of signature 0 -> 0")->required();

    std::string twists;
    auto* link = app.add_subcommand("eval-link", "Invariant of the closure of a two-strand tangle");
    link->add_option("--twists", twists, "Comma separated twist counts, e.g. 2,-3,1")->required();

    auto* idem = app.add_subcommand("idempotents", "The five idempotents, eigenvalues and traces");

    std::string only;
    auto* ver = app.add_subcommand("verify-all", "Run the catalog of exact identities");
    ver->add_option("--only", only, "Comma separated entry numbers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*qd)
            return cmd_qdim(out, weight);
        if (*simp)
            return cmd_simplify(out, expr, planar, budget);
        if (*ev)
            return cmd_eval(out, closed, budget);
        if (*link)
            return cmd_eval_link(out, twists);
        if (*idem)
            return cmd_idempotents(out);
        if (*ver)
            return cmd_verify(out, only);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const StepBudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        std::cerr << "partial: " << print_lincomb(e.partial()) << "\n";
        return kIrreducible;
    } catch (const IrreducibleDiagram& e) {
        std::cerr << "irreducible: " << e.what() << "\n";
        return kIrreducible;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ArityMismatch& e) {
        std::cerr << "arity: " << e.what() << "\n";
        return kUsage;
    } catch (const NotDominant& e) {
        std::cerr << "weight: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}
