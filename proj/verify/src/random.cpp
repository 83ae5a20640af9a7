#include "pptor/verify/random.hpp"

#include <algorithm>

namespace pptor::verify {

namespace {

Equation random_equation(Rng& rng, const std::vector<std::string>& vars, long max_coef) {
    Equation e;
    const long nterms = rng.between(1, 3);
    for (long i = 0; i < nterms; ++i) {
        Term t;
        t.var = rng.pick(vars);
        long c = rng.between(-max_coef, max_coef);
        t.negative = c < 0;
        if (!(std::abs(c) == 1 && rng.chance(50))) t.coef = Int(std::abs(c));
        (rng.chance(50) ? e.lhs : e.rhs).terms.push_back(std::move(t));
    }
    for (LinComb* side : {&e.lhs, &e.rhs})
        if (side->terms.empty()) {
            Term zero;
            zero.coef = Int(0);
            side->terms.push_back(zero);
        }
    return e;
}

bool mentions(const Equation& e, const std::string& v) {
    for (const LinComb* side : {&e.lhs, &e.rhs})
        for (const Term& t : side->terms)
            if (t.var == v) return true;
    return false;
}

Conjunction maybe_group(Rng& rng, std::vector<Atom> atoms) {
    if (atoms.size() >= 2 && rng.chance(25)) {
        std::size_t first = static_cast<std::size_t>(rng.between(0, static_cast<long>(atoms.size()) - 2));
        std::vector<Atom> grouped(atoms.begin() + first, atoms.begin() + first + 2);
        atoms.erase(atoms.begin() + first, atoms.begin() + first + 2);
        atoms.insert(atoms.begin() + first, Atom::make_group(std::move(grouped)));
    }
    return atoms;
}

}  // namespace

std::string random_formula_text(Rng& rng, const FormulaShape& shape) {
    static const std::vector<std::string> free_pool{"x", "t"};
    static const std::vector<std::string> bound_pool{"y", "z", "w"};

    const auto nfree = static_cast<std::size_t>(rng.between(static_cast<long>(shape.min_free), static_cast<long>(shape.max_free)));
    const auto nbound = static_cast<std::size_t>(rng.between(0, static_cast<long>(std::min(shape.max_bound, bound_pool.size()))));
    const auto neq = static_cast<std::size_t>(
        rng.between(static_cast<long>(shape.min_equations), static_cast<long>(shape.max_equations)));

    std::vector<std::string> free(free_pool.begin(), free_pool.begin() + static_cast<long>(nfree));
    std::vector<std::string> outer(bound_pool.begin(), bound_pool.begin() + static_cast<long>(nbound));
    std::vector<std::string> inner;
    if (nbound >= 2 && rng.chance(30)) {
        auto k = static_cast<std::size_t>(rng.between(0, static_cast<long>(nbound) - 1));
        inner.assign(outer.begin() + static_cast<long>(k), outer.end());
        outer.resize(k);
    }

    std::vector<std::string> outer_scope = free;
    outer_scope.insert(outer_scope.end(), outer.begin(), outer.end());
    std::vector<std::string> inner_scope = outer_scope;
    inner_scope.insert(inner_scope.end(), inner.begin(), inner.end());

    const std::size_t n_inner = inner.empty() ? 0 : static_cast<std::size_t>(rng.between(1, static_cast<long>(neq)));
    std::vector<Equation> outer_eqs, inner_eqs;
    for (std::size_t i = 0; i < neq; ++i) {
        if (i < n_inner)
            inner_eqs.push_back(random_equation(rng, inner_scope, shape.max_coef));
        else
            outer_eqs.push_back(random_equation(rng, outer_scope, shape.max_coef));
    }
    // Every free variable must really occur.
    for (const auto& v : free) {
        bool seen = false;
        for (const auto* list : {&outer_eqs, &inner_eqs})
            for (const auto& e : *list) seen = seen || mentions(e, v);
        if (seen) continue;
        auto& list = outer_eqs.empty() ? inner_eqs : outer_eqs;
        Equation& e = list[static_cast<std::size_t>(rng.between(0, static_cast<long>(list.size()) - 1))];
        Term t;
        t.var = v;
        long c = rng.between(1, shape.max_coef);
        if (c != 1 || rng.chance(50)) t.coef = Int(c);
        t.negative = rng.chance(40);
        LinComb& side = rng.chance(50) ? e.lhs : e.rhs;
        if (side.terms.size() == 1 && !side.terms[0].var)
            side.terms[0] = t;
        else
            side.terms.push_back(t);
    }

    std::vector<Atom> atoms;
    for (auto& e : outer_eqs) atoms.push_back(Atom::make_equation(std::move(e)));
    if (!inner.empty()) {
        std::vector<Atom> inner_atoms;
        for (auto& e : inner_eqs) inner_atoms.push_back(Atom::make_equation(std::move(e)));
        Atom q = Atom::make_exists(inner, maybe_group(rng, std::move(inner_atoms)));
        if (rng.chance(50) || atoms.empty()) {
            atoms.push_back(std::move(q));
        } else {
            auto at = rng.between(0, static_cast<long>(atoms.size()));
            atoms.insert(atoms.begin() + at, Atom::make_group({std::move(q)}));
        }
    }
    Conjunction body = maybe_group(rng, std::move(atoms));
    if (!outer.empty()) body = {Atom::make_exists(outer, std::move(body))};
    return to_string(PpFormula::from_body(std::move(body)));
}

PpFormula random_formula(Rng& rng, const FormulaShape& shape) { return parse_formula(random_formula_text(rng, shape)); }

FgGroup random_group(Rng& rng, std::size_t max_factors, long max_modulus, std::size_t max_free_rank) {
    std::vector<Int> moduli;
    const long nf = rng.between(0, static_cast<long>(max_factors));
    for (long i = 0; i < nf; ++i) moduli.emplace_back(rng.between(2, max_modulus));
    const long nr = rng.between(0, static_cast<long>(max_free_rank));
    for (long i = 0; i < nr; ++i) moduli.emplace_back(0);
    return present_cyclic_sum(moduli).group;
}

Element random_element(Rng& rng, const FgGroup& m, long free_range) {
    IntVector c(m.dimension());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Int d = m.modulus(i);
        c[i] = d == 0 ? Int(rng.between(-free_range, free_range)) : Int(rng.between(0, d.get_si() - 1));
    }
    return m.element(std::move(c));
}

}  // namespace pptor::verify

namespace pptor::verify {

namespace {

CardinalExpr random_atom(Rng& rng, bool infinite_only) {
    switch (rng.between(infinite_only ? 1 : 0, 4)) {
    case 0: return CardinalExpr::finite(rng.between(0, 4));
    case 1:
        return rng.chance(25) ? CardinalExpr::aleph(CardIndex::w())
                              : CardinalExpr::aleph(CardIndex::finite(static_cast<unsigned>(rng.between(0, 2))));
    case 2:
        return rng.chance(25) ? CardinalExpr::beth(CardIndex::w())
                              : CardinalExpr::beth(CardIndex::finite(static_cast<unsigned>(rng.between(0, 2))));
    case 3: return CardinalExpr::var(rng.chance(50) ? "lambda" : "mu");
    default: return CardinalExpr::finite(rng.between(2, 3));
    }
}

CardinalExpr random_exponent(Rng& rng) {
    if (rng.chance(30)) return CardinalExpr::finite(rng.between(0, 3));
    if (rng.chance(70)) return random_atom(rng, true);
    std::vector<CardinalExpr> parts{random_atom(rng, true), random_atom(rng, true)};
    return rng.chance(50) ? CardinalExpr::sum(std::move(parts)) : CardinalExpr::power(CardinalExpr::finite(2), parts[0]);
}

}  // namespace

CardinalExpr random_cardinal(Rng& rng, unsigned depth) {
    if (depth <= 1 || rng.chance(20)) return random_atom(rng, false);
    switch (rng.between(0, 2)) {
    case 0: {
        std::vector<CardinalExpr> terms;
        for (long i = rng.between(2, 3); i > 0; --i) terms.push_back(random_cardinal(rng, depth - 1));
        return CardinalExpr::sum(std::move(terms));
    }
    case 1: {
        std::vector<CardinalExpr> terms;
        for (long i = rng.between(2, 3); i > 0; --i) terms.push_back(random_cardinal(rng, depth - 1));
        return CardinalExpr::product(std::move(terms));
    }
    default: {
        // Keep finite bases from stacking into huge numbers.
        CardinalExpr base = random_cardinal(rng, depth - 1);
        return CardinalExpr::power(std::move(base), random_exponent(rng));
    }
    }
}

}  // namespace pptor::verify
