#pragma once

#include "pptor/formula.hpp"
#include "pptor/group.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pptor {

/// n -> phi_n, each a one-variable formula; low_head records is_low(phi_0).
struct FormulaChain {
    std::function<PpFormula(unsigned)> at;
    bool low_head = false;
    std::string description;
};

/// Throws ArityError if phi_0 does not have exactly one free variable.
FormulaChain make_chain(std::function<PpFormula(unsigned)> at, std::string description);
/// Template text with "{n}" standing for the level, e.g. "E y . x = 2^{n}*y".
FormulaChain chain_from_template(const std::string& text);

struct ChainEvaluation {
    std::vector<Subgroup> levels;  // phi_0[M] .. phi_nmax[M]
    bool descending = true;
    std::optional<unsigned> first_non_descent;  // least n with phi_{n+1}[M] not inside phi_n[M]
};

ChainEvaluation evaluate_chain(const FormulaChain& c, const FgGroup& m, unsigned n_max);

/// Least n0 with phi_n0[M] = ... = phi_nmax[M], provided the window shows the
/// chain settling (the last two levels agree); nullopt otherwise.
std::optional<unsigned> stabilization_index(const FormulaChain& c, const FgGroup& m, unsigned n_max);
std::optional<unsigned> stabilization_index(const ChainEvaluation& e);

/// [phi_n[M] : phi_{n+1}[M]] for n < n_max; requires a descending chain.
std::vector<Order> level_indices(const ChainEvaluation& e);

struct WitnessChain {
    FormulaChain chain;  // phi_n(x) = (p x = 0 & E y . x = p^n y)
    FgGroup group;       // direct sum over m = 1..M0 of (Z/p^m)^k
};

WitnessChain witness_chain(const Int& p, unsigned m0, unsigned k);

/// a_n in phi_n[B] \ phi_{n+1}[B] for n < M0 (B with k = 1), and the partial
/// sums b_n = (a_0, ..., a_{n-1}, 0, ...) in the direct power B^M0.
struct WitnessElements {
    FgGroup base;
    FgGroup power;
    std::vector<Element> a;  // in base, n = 0 .. M0-1
    std::vector<Element> b;  // in power, n = 0 .. M0
};

WitnessElements witness_b_elements(const Int& p, unsigned m0);

}  // namespace pptor
