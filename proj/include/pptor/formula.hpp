#pragma once

#include "pptor/integer.hpp"
#include "pptor/matrix.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pptor {

/// One summand of a linear combination as written: `[-] [coef *] var` or a
/// bare integer. A missing coefficient means 1; a missing variable makes the
/// term a constant (only 0 survives parsing).
struct Term {
    bool negative = false;
    std::optional<Int> coef;
    std::optional<std::string> var;

    Int value() const;
    friend bool operator==(const Term&, const Term&) = default;
};

struct LinComb {
    std::vector<Term> terms;
    friend bool operator==(const LinComb&, const LinComb&) = default;
};

struct Equation {
    LinComb lhs;
    LinComb rhs;
    friend bool operator==(const Equation&, const Equation&) = default;
};

/// Conjunct of a formula body. An Exists atom scopes over its own body only;
/// in source text it runs to the end of the enclosing conjunction.
struct Atom {
    enum class Kind { Equation, Group, Exists };

    Kind kind = Kind::Equation;
    Equation equation;
    std::vector<std::string> vars;
    std::vector<Atom> body;

    static Atom make_equation(Equation e);
    static Atom make_group(std::vector<Atom> body);
    static Atom make_exists(std::vector<std::string> vars, std::vector<Atom> body);

    friend bool operator==(const Atom&, const Atom&) = default;
};

using Conjunction = std::vector<Atom>;

/// A homogeneous equation sum(coef * var) = 0 over a fixed variable order.
struct LinearEquation {
    std::vector<std::pair<std::string, Int>> coefficients;
};

/// Positive-primitive formula. Bound variables are pairwise distinct and
/// disjoint from the free ones; nested quantifiers keep their source position
/// in `body` but are all listed in `bound_vars`.
class PpFormula {
public:
    /// Resolves scoping: free variables in order of first occurrence, bound
    /// variables renamed apart where they clash with another name.
    static PpFormula from_body(Conjunction body);

    const std::vector<std::string>& free_vars() const { return free_; }
    const std::vector<std::string>& bound_vars() const { return bound_; }
    const Conjunction& body() const { return body_; }
    std::size_t arity() const { return free_.size(); }

    /// Equations in left-to-right order, each as lhs - rhs = 0.
    std::vector<LinearEquation> equations() const;

    friend bool operator==(const PpFormula&, const PpFormula&) = default;

private:
    std::vector<std::string> free_;
    std::vector<std::string> bound_;
    Conjunction body_;
};

/// Throws ParseError (with line and column) on malformed input or a nonzero constant.
PpFormula parse_formula(std::string_view text);
std::string to_string(const PpFormula& f);

/// C x + D y = 0 with x the free and y the bound variables in declaration order.
struct MatrixForm {
    IntMatrix c;
    IntMatrix d;
};

MatrixForm normalize(const PpFormula& f);

/// psi[Z] = 0 for a one-variable formula; ArityError otherwise.
bool is_low(const PpFormula& f);

/// Generator d >= 0 of psi[Z] = dZ for a one-variable formula.
Int solution_generator_over_z(const PpFormula& f);

/// E y E z (psi1(y) & psi2(z) & x = y + z)
PpFormula sum_formulas(const PpFormula& f1, const PpFormula& f2);
/// E y (psi(y) & x = r*y)
PpFormula scalar_formula(const Int& r, const PpFormula& f);

/// Copy of f with its free variables renamed (positionally).
PpFormula rename_free(const PpFormula& f, const std::vector<std::string>& names);

}  // namespace pptor
