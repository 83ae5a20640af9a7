#include "cli.hpp"

#include "pptor/cardinal.hpp"
#include "pptor/chain.hpp"
#include "pptor/error.hpp"
#include "pptor/group_dsl.hpp"
#include "pptor/invariants.hpp"
#include "pptor/ppsolve.hpp"
#include "pptor/purity.hpp"
#include "pptor/verify/acceptance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <optional>

namespace pptor::cli {

namespace {

using Json = nlohmann::ordered_json;

// What a command produced: plain text and the same content as JSON.
struct Report {
    std::string command;
    Json input = Json::object();
    Json result = Json::object();
    std::vector<std::string> trace;
    std::string text;
    std::optional<std::string> warning;
    int code = 0;
};

std::string order_text(const Order& o) { return o ? o->get_str() : "infinite"; }

void subgroup_report(Report& r, const Subgroup& h, const ParsedGroup& g) {
    r.result["subgroup"] = format_subgroup(h, g);
    r.result["order"] = order_text(h.order());
    r.text = format_subgroup(h, g) + " (order " + order_text(h.order()) + ")";
}

std::string tribool_text(const Verdict& v) {
    std::string s = to_string(v.value);
    return v.rule.empty() || v.value == TriBool::Unknown ? s : s + " (" + v.rule + ")";
}

void verdict_report(Report& r, const Verdict& v) {
    r.result["value"] = to_string(v.value);
    r.result["rule"] = v.rule;
    r.trace = v.trace;
    r.text = tribool_text(v);
}

Relation parse_relation(const std::string& s) {
    if (s == "<") return Relation::Less;
    if (s == "<=") return Relation::LessEqual;
    if (s == "=" || s == "==") return Relation::Equal;
    throw ParseError("relation must be <, <= or =", 1, 1, s);
}

Json ulm_json(const UlmInvariants& u) {
    Json alpha = Json::array(), gamma = Json::array();
    for (const auto& [key, v] : u.alpha)
        alpha.push_back({{"p", key.first.get_str()}, {"n", key.second}, {"value", to_string(v)}});
    for (const auto& [p, v] : u.gamma) gamma.push_back({{"p", p.get_str()}, {"value", to_string(v)}});
    return Json{{"alpha", alpha}, {"gamma", gamma}, {"text", to_string(u)}};
}

void chain_report(Report& r, const FormulaChain& c, const FgGroup& m, unsigned levels, bool indices) {
    ChainEvaluation e = evaluate_chain(c, m, levels);
    Json orders = Json::array();
    std::string line = "orders:";
    for (const auto& s : e.levels) {
        orders.push_back(order_text(s.order()));
        line += " " + order_text(s.order());
    }
    r.result["group"] = m.to_string();
    r.result["low_head"] = c.low_head;
    r.result["descending"] = e.descending;
    r.result["orders"] = orders;
    r.text = "group: " + m.to_string() + "\nlow head: " + (c.low_head ? "true" : "false") + "\n" + line;
    if (!e.descending) {
        r.result["first_non_descent"] = *e.first_non_descent;
        r.text += "\nnot descending at n = " + std::to_string(*e.first_non_descent);
        return;
    }
    auto stab = stabilization_index(e);
    r.result["stabilization"] = stab ? Json(*stab) : Json(nullptr);
    r.text += "\nstabilizes at: " + (stab ? std::to_string(*stab) : std::string("not found"));
    if (indices) {
        Json idx = Json::array();
        std::string l = "indices:";
        for (const auto& o : level_indices(e)) {
            idx.push_back(order_text(o));
            l += " " + order_text(o);
        }
        r.result["indices"] = idx;
        r.text += "\n" + l;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pp-definable subgroups, purity, torsion radicals and limit-model templates", "pptor"};
    app.fallthrough();
    app.require_subcommand(1);
    bool json = false, ascii = false;
    app.add_flag("--json", json, "Print the result as JSON");
    app.add_flag("--ascii", ascii, "ASCII notation for cardinals and limit models");

    Report report;
    std::function<void()> action;
    std::string a1, a2, a3;

    auto* low = app.add_subcommand("low", "Is the one-variable formula low (only 0 over Z)?");
    low->add_option("FORMULA", a1)->required();
    low->callback([&] {
        action = [&] {
            PpFormula f = parse_formula(a1);
            report.input["formula"] = a1;
            bool l = is_low(f);
            report.result["low"] = l;
            report.result["generator"] = solution_generator_over_z(f).get_str();
            report.text = l ? "true" : "false";
        };
    });

    auto* eval = app.add_subcommand("eval", "Evaluate a formula in a group");
    eval->add_option("FORMULA", a1)->required();
    eval->add_option("GROUP", a2)->required();
    eval->callback([&] {
        action = [&] {
            PpFormula f = parse_formula(a1);
            ParsedGroup g = parse_group(a2);
            report.input = {{"formula", a1}, {"group", a2}};
            Subgroup s = evaluate(f, g.group());
            Json gens = Json::array();
            std::string list;
            for (const auto& e : s.generators()) {
                gens.push_back(format_tuple(e, g, f.arity()));
                list += (list.empty() ? "" : ",") + format_tuple(e, g, f.arity());
            }
            report.result["arity"] = f.arity();
            report.result["generators"] = gens;
            report.result["order"] = order_text(s.order());
            report.text = "<" + list + "> (order " + order_text(s.order()) + ")";
        };
    });

    auto* pure = app.add_subcommand("pure", "Is the subgroup pure?");
    pure->add_option("SUBGROUP", a1)->required();
    pure->add_option("GROUP", a2)->required();
    pure->callback([&] {
        action = [&] {
            ParsedGroup g = parse_group(a2);
            Subgroup h = parse_subgroup(a1, g);
            report.input = {{"subgroup", a1}, {"group", a2}};
            auto w = purity_failure(h, g.group());
            report.result["pure"] = !w;
            report.text = w ? "false" : "true";
            if (w) {
                report.trace.push_back("n = " + w->n.get_str());
                report.trace.push_back("witness " + format_element(w->element, g) + " in nM ∩ H, not in nH");
                report.text += "\nwitness: " + format_element(w->element, g) + " with n = " + w->n.get_str();
            }
        };
    });

    auto* torsion = app.add_subcommand("torsion", "Torsion subgroup t(M)");
    torsion->add_option("GROUP", a1)->required();
    torsion->callback([&] {
        action = [&] {
            ParsedGroup g = parse_group(a1);
            report.input["group"] = a1;
            subgroup_report(report, torsion_radical(g.group()), g);
        };
    });

    auto* comp = app.add_subcommand("complement", "A complement of H in a finite M, if H is a summand");
    comp->add_option("SUBGROUP", a1)->required();
    comp->add_option("GROUP", a2)->required();
    comp->callback([&] {
        action = [&] {
            ParsedGroup g = parse_group(a2);
            Subgroup h = parse_subgroup(a1, g);
            report.input = {{"subgroup", a1}, {"group", a2}};
            if (auto k = complement(h, g.group())) {
                subgroup_report(report, *k, g);
            } else {
                report.result["subgroup"] = nullptr;
                report.text = "none";
            }
        };
    });

    std::vector<long> witness;
    bool show_indices = false;
    unsigned levels = 0;
    auto* chain = app.add_subcommand("chain", "Evaluate a descending chain of formulas");
    chain->add_option("--witness", witness, "p M0 k: the chain p x = 0 & E y . x = p^n y on (Z/p)^k + ... + (Z/p^M0)^k")
        ->expected(3);
    chain->add_option("TEMPLATE", a1, "formula with {n} for the level");
    chain->add_option("GROUP", a2);
    chain->add_flag("--indices", show_indices, "Print [phi_n : phi_n+1] for each level");
    chain->add_option("--levels", levels, "Highest level evaluated (default M0 + 1, or 8)");
    chain->callback([&] {
        action = [&] {
            if (!witness.empty()) {
                if (witness[1] < 1 || witness[2] < 1) throw DomainError("M0 and k must be positive");
                report.input = {{"p", witness[0]}, {"M0", witness[1]}, {"k", witness[2]}};
                WitnessChain w = witness_chain(witness[0], static_cast<unsigned>(witness[1]), static_cast<unsigned>(witness[2]));
                chain_report(report, w.chain, w.group, levels ? levels : static_cast<unsigned>(witness[1]) + 1,
                             show_indices);
            } else {
                if (a1.empty() || a2.empty()) throw ParseError("chain needs --witness p M0 k or TEMPLATE GROUP", 1, 1, "chain");
                ParsedGroup g = parse_group(a2);
                report.input = {{"template", a1}, {"group", a2}};
                chain_report(report, chain_from_template(a1), g.group(), levels ? levels : 8, show_indices);
            }
        };
    });

    std::string bound;
    auto* types = app.add_subcommand("types", "Count pp-types over M realized in pure extensions of order <= N");
    types->add_option("GROUP", a1)->required();
    types->add_option("--bound", bound)->required();
    types->callback([&] {
        action = [&] {
            ParsedGroup g = parse_group(a1);
            Int b;
            if (b.set_str(bound, 10) != 0) throw ParseError("bound must be an integer", 1, 1, bound);
            report.input = {{"group", a1}, {"bound", bound}};
            Int n = count_types(g.group(), b);
            report.result["count"] = n.get_str();
            report.text = n.get_str();
        };
    });

    auto* ulm = app.add_subcommand("ulm", "Ulm invariants of a finite group");
    ulm->add_option("GROUP", a1)->required();
    ulm->callback([&] {
        action = [&] {
            ParsedGroup g = parse_group(a1);
            report.input["group"] = a1;
            UlmInvariants u = ulm_invariants(g.group());
            report.result = ulm_json(u);
            report.text = to_string(u);
        };
    });

    std::string cof;
    long prime = 0;
    auto* limit = app.add_subcommand("limit-model", "Decomposition of the limit model at a stable cardinal");
    limit->add_option("CARD", a1)->required();
    limit->add_option("--cof", cof, "cofinality of the chain length")->required()->check(CLI::IsMember({"w", "w1"}));
    limit->add_option("--p", prime, "restrict to abelian p-groups");
    limit->callback([&] {
        action = [&] {
            CardinalExpr lambda = parse_cardinal(a1);
            report.input = {{"lambda", a1}, {"cof", cof}};
            std::optional<Int> p;
            if (prime != 0) {
                p = Int(prime);
                report.input["p"] = prime;
            }
            LimitModel m = limit_model_template(lambda, cof == "w" ? Cofinality::Countable : Cofinality::Uncountable, p);
            std::string t = to_string(m.group, ascii ? Notation::Ascii : Notation::Unicode);
            report.result["template"] = to_string(m.group, Notation::Unicode);
            report.result["ascii"] = to_string(m.group, Notation::Ascii);
            report.result["stability"] = to_string(m.stability.value);
            report.trace = m.stability.trace;
            report.warning = m.warning;
            if (m.warning) report.result["warning"] = *m.warning;
            report.text = t;
        };
    });

    auto* card = app.add_subcommand("card", "Cardinal arithmetic");
    card->require_subcommand(1);
    auto notation = [&] { return ascii ? Notation::Ascii : Notation::Unicode; };
    auto* stable = card->add_subcommand("stable", "Decide lambda^aleph0 = lambda");
    stable->add_option("CARD", a1)->required();
    stable->callback([&] {
        action = [&] {
            report.command = "card stable";
            report.input["card"] = a1;
            verdict_report(report, stability_predicate(parse_cardinal(a1)));
        };
    });
    auto* compare_cmd = card->add_subcommand("compare", "Decide A REL B with REL one of <, <=, =");
    compare_cmd->add_option("A", a1)->required();
    compare_cmd->add_option("REL", a2)->required();
    compare_cmd->add_option("B", a3)->required();
    compare_cmd->callback([&] {
        action = [&] {
            report.command = "card compare";
            Relation rel = parse_relation(a2);
            report.input = {{"lhs", a1}, {"relation", a2}, {"rhs", a3}};
            verdict_report(report, compare(parse_cardinal(a1), parse_cardinal(a3), rel));
        };
    });
    auto* norm = card->add_subcommand("normalize", "Normal form of a cardinal expression");
    norm->add_option("CARD", a1)->required();
    norm->callback([&] {
        action = [&] {
            report.command = "card normalize";
            report.input["card"] = a1;
            CardinalExpr n = normalize(parse_cardinal(a1), &report.trace);
            report.result["normal_form"] = to_string(n);
            report.result["unicode"] = to_string(n, Notation::Unicode);
            report.text = to_string(n, notation());
        };
    });
    auto* cof_cmd = card->add_subcommand("cof", "Cofinality, when the engine knows it");
    cof_cmd->add_option("CARD", a1)->required();
    cof_cmd->callback([&] {
        action = [&] {
            report.command = "card cof";
            report.input["card"] = a1;
            auto c = cofinality(parse_cardinal(a1));
            report.result["cofinality"] = c ? Json(to_string(*c)) : Json(nullptr);
            report.text = c ? to_string(*c, notation()) : "unknown";
        };
    });

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run acceptance suites");
    verify->add_option("--suite", suite, "all, a suite name or a criterion number");
    verify->callback([&] {
        action = [&] {
            report.input["suite"] = suite;
            std::vector<verify::CriterionResult> results;
            try {
                results = verify::run_suite(suite);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), 1, 1, suite);
            }
            Json list = Json::array();
            bool all = true;
            for (const auto& c : results) {
                list.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                report.text += (report.text.empty() ? "" : "\n") + verify::format_result(c);
                all = all && c.passed;
            }
            report.result["criteria"] = list;
            report.result["passed"] = all;
            report.code = all ? 0 : 1;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        action();
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (report.command.empty()) report.command = app.get_subcommands().front()->get_name();
    if (json) {
        Json j{{"command", report.command}, {"input", report.input}, {"result", report.result}};
        if (!report.trace.empty()) j["trace"] = report.trace;
        out << j.dump(2, ' ', false) << "\n";
    } else {
        out << report.text << "\n";
        if (report.warning) err << "warning: " << *report.warning << "\n";
    }
    return report.code;
}

}  // namespace pptor::cli
