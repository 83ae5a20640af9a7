#include "pptor/chain.hpp"

#include "pptor/error.hpp"
#include "pptor/ppsolve.hpp"

namespace pptor {

FormulaChain make_chain(std::function<PpFormula(unsigned)> at, std::string description) {
    FormulaChain c{std::move(at), false, std::move(description)};
    c.low_head = is_low(c.at(0));
    return c;
}

FormulaChain chain_from_template(const std::string& text) {
    if (text.find("{n}") == std::string::npos) parse_formula(text);  // surface syntax errors early
    auto at = [text](unsigned n) {
        std::string s = text;
        const std::string value = std::to_string(n);
        for (auto pos = s.find("{n}"); pos != std::string::npos; pos = s.find("{n}", pos + value.size()))
            s.replace(pos, 3, value);
        return parse_formula(s);
    };
    return make_chain(at, text);
}

ChainEvaluation evaluate_chain(const FormulaChain& c, const FgGroup& m, unsigned n_max) {
    ChainEvaluation e;
    for (unsigned n = 0; n <= n_max; ++n) {
        PpFormula f = c.at(n);
        if (f.arity() != 1) throw ArityError("chain level " + std::to_string(n) + " is not a one-variable formula");
        e.levels.push_back(evaluate(f, m));
        if (n > 0 && e.descending && !e.levels[n].is_subgroup_of(e.levels[n - 1])) {
            e.descending = false;
            e.first_non_descent = n - 1;
        }
    }
    return e;
}

std::optional<unsigned> stabilization_index(const ChainEvaluation& e) {
    const std::size_t last = e.levels.size() - 1;
    if (last == 0 || !(e.levels[last - 1] == e.levels[last])) return std::nullopt;
    std::size_t n0 = last;
    while (n0 > 0 && e.levels[n0 - 1] == e.levels[last]) --n0;
    return static_cast<unsigned>(n0);
}

std::optional<unsigned> stabilization_index(const FormulaChain& c, const FgGroup& m, unsigned n_max) {
    return stabilization_index(evaluate_chain(c, m, n_max));
}

std::vector<Order> level_indices(const ChainEvaluation& e) {
    if (!e.descending) throw DomainError("indices need a descending chain");
    std::vector<Order> out;
    for (std::size_t n = 0; n + 1 < e.levels.size(); ++n) out.push_back(e.levels[n + 1].index_in(e.levels[n]));
    return out;
}

namespace {

PpFormula witness_level(const Int& p, unsigned n) {
    return parse_formula(p.get_str() + "*x = 0 & E y . x = " + power(p, n).get_str() + "*y");
}

FgGroup truncated_b(const Int& p, unsigned m0, unsigned k) {
    // Already in invariant-factor order: p^m divides p^(m+1).
    std::vector<Int> factors;
    for (unsigned m = 1; m <= m0; ++m)
        for (unsigned c = 0; c < k; ++c) factors.push_back(power(p, m));
    return FgGroup(std::move(factors), 0);
}

}  // namespace

WitnessChain witness_chain(const Int& p, unsigned m0, unsigned k) {
    if (p < 2 || !is_prime(p)) throw DomainError(p.get_str() + " is not prime");
    if (m0 < 1 || k < 1) throw DomainError("witness chain needs M0 >= 1 and k >= 1");
    const std::string desc = p.get_str() + "*x = 0 & E y . x = " + p.get_str() + "^n*y";
    return {make_chain([p](unsigned n) { return witness_level(p, n); }, desc), truncated_b(p, m0, k)};
}

WitnessElements witness_b_elements(const Int& p, unsigned m0) {
    WitnessChain w = witness_chain(p, m0, 1);
    WitnessElements out{w.group, power(w.group, m0), {}, {}};
    const FgGroup& b = out.base;
    for (unsigned n = 0; n < m0; ++n) {
        // Coordinate n is the Z/p^(n+1) summand; p^n times its generator has order p.
        Element a = b.scale(power(p, n), b.generator(n));
        if (!evaluate(w.chain.at(n), b).contains(a) || evaluate(w.chain.at(n + 1), b).contains(a))
            throw std::logic_error("witness chain does not descend strictly at level " + std::to_string(n));
        out.a.push_back(std::move(a));
    }
    std::vector<Element> copies(m0, b.zero());
    out.b.push_back(tuple_element(b, copies));
    for (unsigned n = 0; n < m0; ++n) {
        copies[n] = out.a[n];
        out.b.push_back(tuple_element(b, copies));
    }
    return out;
}

}  // namespace pptor
