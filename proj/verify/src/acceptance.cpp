#include "pptor/verify/acceptance.hpp"

#include "pptor/cardinal.hpp"
#include "pptor/chain.hpp"
#include "pptor/invariants.hpp"
#include "pptor/ppsolve.hpp"
#include "pptor/purity.hpp"
#include "pptor/verify/brute.hpp"
#include "pptor/verify/facts.hpp"
#include "pptor/verify/oracle.hpp"
#include "pptor/verify/random.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#ifndef PPTOR_GOLDEN_DIR
#define PPTOR_GOLDEN_DIR "tests/golden"
#endif

namespace pptor::verify {

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;
    std::string failure;

    // Keeps the first counterexample only.
    void fail(const std::string& why) {
        if (passed) failure = why;
        passed = false;
    }
};

Element random_member(Rng& rng, const Subgroup& s) {
    const FgGroup& m = s.ambient();
    Element x = m.zero();
    for (const auto& gen : s.generators()) x = m.add(x, m.scale(rng.between(-6, 6), gen));
    return x;
}

void eval_oracle(Outcome& o) {
    Rng rng(1001);
    FormulaShape shape;
    std::vector<PpFormula> corpus{parse_formula("E y . x = 2*y"), parse_formula("2*x = 0 & E y . x = 4*y"),
                                  parse_formula("x = x"), parse_formula("x = 2*t")};
    while (corpus.size() < 504) corpus.push_back(random_formula(rng, shape));
    const auto groups = groups_up_to_order(64);
    long checks = 0;
    for (const auto& f : corpus)
        for (const auto& m : groups) {
            ++checks;
            if (subgroup_bitmap(evaluate(f, m), m, f.arity()) != brute_force_solutions(f, m))
                o.fail(to_string(f) + " on " + m.to_string());
        }
    o.detail << corpus.size() << " formulas x " << groups.size() << " groups of order <= 64, " << checks
             << " exact comparisons";
}

void purity_complement(Outcome& o) {
    long pairs = 0, pure = 0;
    for (const auto& m : groups_up_to_order(32))
        for (const auto& h : all_subgroups(m)) {
            ++pairs;
            const bool p = is_pure(h, m);
            pure += p;
            auto k = complement(h, m);
            if (k.has_value() != p) o.fail("H of order " + format_order(h.order()) + " in " + m.to_string());
            if (k && !(intersection(h, *k).is_trivial() && sum(h, *k).is_whole()))
                o.fail("bad complement in " + m.to_string());
        }
    o.detail << pairs << " subgroup pairs with |M| <= 32, " << pure << " pure, all matched";
}

void radical_laws(Outcome& o) {
    Rng rng(3003);
    long homs = 0, groups = 0;
    auto group_laws = [&](const FgGroup& m) {
        ++groups;
        const Subgroup t = torsion_radical(m);
        if (!torsion_radical(quotient(m, t)).is_trivial()) o.fail("t(M/t(M)) != 0 for " + m.to_string());
        if (!torsion_radical(subgroup_structure(t).group).is_whole()) o.fail("t(t(M)) != t(M) for " + m.to_string());
        if (!is_pure(t, m)) o.fail("t(M) not pure in " + m.to_string());
    };
    for (int i = 0; i < 200; ++i) {
        FgGroup m = random_group(rng, 3, 12, 2);
        FgGroup n = random_group(rng, 3, 12, 2);
        std::vector<Element> images;
        for (std::size_t j = 0; j < m.dimension(); ++j) {
            Int d = m.modulus(j);
            images.push_back(random_member(rng, d == 0 ? Subgroup::whole(n) : annihilator(n, d)));
        }
        Homomorphism f(m, n, images);
        ++homs;
        if (!f.image(torsion_radical(m)).is_subgroup_of(torsion_radical(n)))
            o.fail("f(t(M)) not in t(N) for " + m.to_string() + " -> " + n.to_string());
        group_laws(m);
        group_laws(n);
    }
    o.detail << homs << " random homomorphisms, " << groups << " random groups";
}

void low_closure(Outcome& o) {
    Rng rng(4004);
    FormulaShape shape;
    shape.max_free = 1;
    std::vector<PpFormula> lows;
    while (lows.size() < 200) {
        PpFormula f = random_formula(rng, shape);
        if (is_low(f)) lows.push_back(f);
    }
    long pairs = 0;
    auto both_low = [&](const PpFormula& f) { return is_low(f) && low_oracle(f).low; };
    for (int i = 0; i < 500; ++i) {
        const PpFormula& a = rng.pick(lows);
        const PpFormula& b = rng.pick(lows);
        long r = rng.between(-9, 9);
        ++pairs;
        if (!both_low(sum_formulas(a, b))) o.fail("sum of " + to_string(a) + " and " + to_string(b));
        if (!both_low(scalar_formula(r, a))) o.fail(std::to_string(r) + " times " + to_string(a));
    }
    o.detail << pairs << " random low pairs, sums and scalar multiples confirmed low by both deciders";
}

void witness_chain_suite(Outcome& o) {
    long chains = 0;
    for (long p : {2, 3})
        for (unsigned m0 = 1; m0 <= 8; ++m0)
            for (unsigned k = 1; k <= 3; ++k) {
                ++chains;
                const std::string tag = "p=" + std::to_string(p) + " M0=" + std::to_string(m0) + " k=" + std::to_string(k);
                WitnessChain w = witness_chain(p, m0, k);
                if (!w.chain.low_head || !low_oracle(w.chain.at(0)).low) o.fail("phi_0 not low, " + tag);
                ChainEvaluation e = evaluate_chain(w.chain, w.group, m0 + 1);
                if (!e.descending) {
                    o.fail("not descending, " + tag);
                    continue;
                }
                auto idx = level_indices(e);
                for (unsigned n = 0; n < m0; ++n) {
                    if (e.levels[n] == e.levels[n + 1]) o.fail("no strict descent at n=" + std::to_string(n) + ", " + tag);
                    if (idx[n] != Order(power(Int(p), k)) || *idx[n] < 2) o.fail("index " + format_order(idx[n]) + ", " + tag);
                    if (index(w.chain.at(n), w.chain.at(n + 1), w.group) != idx[n]) o.fail("index() disagrees, " + tag);
                }
                if (stabilization_index(e) != std::optional<unsigned>(m0)) o.fail("stabilization, " + tag);
            }
    o.detail << chains << " witness chains, index p^k at every level below M0, stabilizing at M0";
}

void pp_types(Outcome& o) {
    const auto groups = groups_up_to_order(16);
    struct Object {
        std::size_t group;
        std::vector<long> m_images;
        std::vector<std::pair<long, PpTypeDescriptor>> types;  // element index and its type
    };
    std::map<std::string, std::vector<Object>> by_m;
    std::vector<SmallGroup> small;
    for (const auto& n : groups) small.emplace_back(n);
    long triples = 0;
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
        for (const auto& h : all_subgroups(groups[gi])) {
            if (!is_pure(h, groups[gi])) continue;
            SubgroupStructure s = subgroup_structure(h);
            Object obj{gi, {}, {}};
            for (const auto& e : s.embedding.images()) obj.m_images.push_back(small[gi].index_of(e));
            for (const auto& a : groups[gi].elements())
                obj.types.emplace_back(small[gi].index_of(a), pp_type_descriptor(a, s.embedding));
            triples += small[gi].size();
            by_m[s.group.to_string()].push_back(std::move(obj));
        }
    long comparisons = 0, equal = 0;
    for (std::size_t g1 = 0; g1 < groups.size(); ++g1)
        for (std::size_t g2 = 0; g2 < groups.size(); ++g2) {
            const auto homs12 = all_homomorphisms(small[g1], small[g2]);
            const auto homs21 = all_homomorphisms(small[g2], small[g1]);
            for (const auto& [m, objects] : by_m)
                for (const Object& o1 : objects) {
                    if (o1.group != g1) continue;
                    for (const Object& o2 : objects) {
                        if (o2.group != g2) continue;
                        auto fwd = hom_reachability(small[g1], small[g2], homs12, o1.m_images, o2.m_images);
                        auto back = hom_reachability(small[g2], small[g1], homs21, o2.m_images, o1.m_images);
                        const long s1 = small[g1].size(), s2 = small[g2].size();
                        for (const auto& [a1, t1] : o1.types)
                            for (const auto& [a2, t2] : o2.types) {
                                const bool oracle = fwd[static_cast<std::size_t>(a1 * s2 + a2)] &&
                                                    back[static_cast<std::size_t>(a2 * s1 + a1)];
                                const bool same = pp_type_equal(t1, t2);
                                ++comparisons;
                                equal += same;
                                if (same != oracle)
                                    o.fail("M = " + m + ", N1 = " + groups[g1].to_string() + ", N2 = " + groups[g2].to_string());
                            }
                    }
                }
        }
    o.detail << triples << " triples (M <=_p N, a) with |N| <= 16, " << comparisons << " pairs compared, " << equal
             << " equal types";
}

UlmInvariants elementary_divisor_count(const FgGroup& m) {
    std::map<std::pair<Int, unsigned>, long> counts;
    for (const Int& d : m.invariant_factors())
        for (const auto& [p, e] : factorize(d)) ++counts[{p, e}];
    UlmInvariants inv;
    for (const auto& [k, v] : counts) inv.alpha.emplace(k, CardinalExpr::finite(v));
    return inv;
}

void ulm(Outcome& o) {
    const auto big = groups_up_to_order(256);
    for (const auto& m : big) {
        UlmInvariants u = ulm_invariants(m);
        if (u != elementary_divisor_count(m)) o.fail("invariants of " + m.to_string());
        if (!is_isomorphic(reconstruct(u), m)) o.fail("round trip of " + m.to_string());
    }
    const auto small = groups_up_to_order(128);
    std::vector<UlmInvariants> inv;
    for (const auto& m : small) inv.push_back(ulm_invariants(m));
    long pairs = 0;
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = 0; j < small.size(); ++j) {
            ++pairs;
            if ((inv[i] == inv[j]) != is_isomorphic(small[i], small[j]))
                o.fail("completeness at " + small[i].to_string() + " / " + small[j].to_string());
        }
    o.detail << big.size() << " groups of order <= 256 round-tripped, " << pairs << " pairs of order <= 128 compared";
}

void stability(Outcome& o) {
    Verdict bw = stability_predicate(parse_cardinal("beth(w)"));
    if (bw.value != TriBool::False || bw.rule != "König") o.fail("beth(w) gave " + to_string(bw.value) + " via " + bw.rule);
    Verdict a1 = stability_predicate(parse_cardinal("aleph1"));
    if (a1.value != TriBool::Unknown) o.fail("aleph1 gave " + to_string(a1.value));
    Rng rng(8008);
    long powers = 0;
    for (int i = 0; i < 500; ++i) {
        CardinalExpr mu = random_cardinal(rng, 4);
        CardinalExpr p = CardinalExpr::power(mu, CardinalExpr::aleph(CardIndex::finite(0)));
        if (is_finite(p)) continue;
        ++powers;
        if (stability_predicate(p).value != TriBool::True) o.fail("mu^aleph0 with mu = " + to_string(mu));
    }
    long unsound = 0, undecided = 0;
    for (const auto& f : curated_cardinal_facts()) {
        TriBool v = compare(parse_cardinal(f.lhs), parse_cardinal(f.rhs), f.relation).value;
        if (v != TriBool::Unknown && v != f.status) ++unsound;
        if (v == TriBool::Unknown && f.status != TriBool::Unknown) ++undecided;
        if (v != f.status) o.fail(std::string(f.lhs) + " vs " + f.rhs);
    }
    o.detail << "beth(w) false (König), aleph1 unknown, " << powers << " powers mu^aleph0 stable, "
             << curated_cardinal_facts().size() << " curated facts: " << unsound << " unsound, " << undecided
             << " theorems left undecided";
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(PPTOR_GOLDEN_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing golden file " + name);
    std::string line;
    std::getline(in, line);
    return line;
}

void limit_models(Outcome& o) {
    const CardinalExpr lambda = CardinalExpr::var("lambda");
    struct Case {
        Cofinality cof;
        std::optional<Int> p;
        const char* file;
    };
    const Case cases[] = {
        {Cofinality::Uncountable, std::nullopt, "limit_tor_uncountable"},
        {Cofinality::Countable, std::nullopt, "limit_tor_countable"},
        {Cofinality::Uncountable, Int(2), "limit_p2_uncountable"},
        {Cofinality::Countable, Int(2), "limit_p2_countable"},
    };
    int files = 0;
    for (const Case& c : cases) {
        SymbolicGroup g = limit_model_template(lambda, c.cof, c.p).group;
        for (auto [n, ext] : {std::pair{Notation::Unicode, ".txt"}, std::pair{Notation::Ascii, ".ascii.txt"}}) {
            ++files;
            if (to_string(g, n) != read_golden(std::string(c.file) + ext)) o.fail(std::string(c.file) + ext);
        }
    }
    for (std::optional<Int> p : {std::optional<Int>{}, std::optional<Int>{Int(2)}}) {
        SymbolicGroup w1 = limit_model_template(lambda, Cofinality::Uncountable, p).group;
        SymbolicGroup w = limit_model_template(lambda, Cofinality::Countable, p).group;
        std::vector<SymbolicGroup> parts = w1.children();
        parts[0] = SymbolicGroup::direct_power(parts[0], CardinalExpr::aleph(CardIndex::finite(0)));
        if (w != SymbolicGroup::direct_sum(parts)) o.fail("cofinality variants differ by more than a direct power");
    }
    o.detail << files << " golden strings byte-exact; countable cofinality adds exactly ^(aleph0)";
}

void order_patterns(Outcome& o) {
    const auto& table = order_pattern_table();
    if (table.size() != 20) o.fail("table has " + std::to_string(table.size()) + " rows");
    int row = 0;
    for (const auto& c : table) {
        ++row;
        const std::string tag = "row " + std::to_string(row);
        if (in_torsion_of_pe(c.pattern) != (c.expected != PatternClass::Unbounded)) o.fail(tag + " decision");
        Truncation t24 = truncate_pattern(c.pattern, 24);
        Truncation t12 = truncate_pattern(c.pattern, 12);
        const Int ord24 = *t24.group.order_of(t24.element);
        const Int ord12 = *t12.group.order_of(t12.element);
        if (ord24 != power(c.pattern.p, c.order_exponent_24)) o.fail(tag + " truncated order");
        if ((t24.element == t24.group.zero()) != (c.expected == PatternClass::Zero)) o.fail(tag + " zero");
        if ((c.expected == PatternClass::Unbounded) != (ord12 < ord24)) o.fail(tag + " growth");
    }
    o.detail << table.size() << " order patterns: decisions and truncated orders match";
}

using Runner = void (*)(Outcome&);

const Runner runners[] = {eval_oracle, purity_complement, radical_laws, low_closure, witness_chain_suite,
                          pp_types,    ulm,               stability,    limit_models, order_patterns};

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "eval-oracle", "purity-complement", "radical-laws", "low-closure", "witness-chain",
        "pp-types",    "ulm",               "stability",    "limit-models", "order-patterns",
    };
    return names;
}

CriterionResult run_criterion(int id) {
    if (id < 1 || id > 10) throw std::invalid_argument("no criterion " + std::to_string(id));
    CriterionResult r;
    r.id = id;
    r.name = suite_names()[static_cast<std::size_t>(id - 1)];
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        runners[id - 1](o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = o.passed;
    r.detail = o.detail.str();
    if (!o.passed) r.detail = "first failure: " + o.failure + (r.detail.empty() ? "" : "; " + r.detail);
    return r;
}

std::vector<CriterionResult> run_suite(const std::string& name) {
    std::vector<CriterionResult> out;
    if (name == "all") {
        for (int i = 1; i <= 10; ++i) out.push_back(run_criterion(i));
        return out;
    }
    const auto& names = suite_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name || std::to_string(i + 1) == name) {
            out.push_back(run_criterion(static_cast<int>(i + 1)));
            return out;
        }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string format_result(const CriterionResult& r) {
    return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail;
}

}  // namespace pptor::verify
