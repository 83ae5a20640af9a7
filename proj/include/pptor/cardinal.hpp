#pragma once

#include "pptor/integer.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pptor {

enum class TriBool { False, True, Unknown };
std::string to_string(TriBool t);

/// Index of an aleph or beth: a natural number or omega.
struct CardIndex {
    bool omega = false;
    unsigned n = 0;

    static CardIndex finite(unsigned k) { return {false, k}; }
    static CardIndex w() { return {true, 0}; }

    friend auto operator<=>(const CardIndex&, const CardIndex&) = default;
};

/// Symbolic cardinal. Var stands for an unspecified infinite cardinal
/// (lambda, mu, ...). In normal form a Sum holds two or more pairwise
/// undecided infinite terms and means their maximum.
class CardinalExpr {
public:
    enum class Kind { Finite, Aleph, Beth, Var, Power, Product, Sum };

    static CardinalExpr finite(Int n);
    static CardinalExpr aleph(CardIndex i);
    static CardinalExpr beth(CardIndex i);
    static CardinalExpr var(std::string name);
    static CardinalExpr power(CardinalExpr base, CardinalExpr exponent);
    static CardinalExpr product(std::vector<CardinalExpr> factors);
    static CardinalExpr sum(std::vector<CardinalExpr> terms);

    Kind kind() const { return kind_; }
    const Int& value() const { return value_; }
    CardIndex index() const { return index_; }
    const std::string& name() const { return name_; }
    const std::vector<CardinalExpr>& args() const { return args_; }
    const CardinalExpr& base() const { return args_[0]; }
    const CardinalExpr& exponent() const { return args_[1]; }

    friend bool operator==(const CardinalExpr&, const CardinalExpr&) = default;

private:
    Kind kind_ = Kind::Finite;
    Int value_;
    CardIndex index_;
    std::string name_;
    std::vector<CardinalExpr> args_;
};

/// Total syntactic order used to sort operands canonically.
std::strong_ordering syntactic_compare(const CardinalExpr& a, const CardinalExpr& b);

enum class Notation { Ascii, Unicode };

/// Ascii: aleph0, aleph(w), beth(w), 2^aleph0, lambda. Unicode: ℵ0, ℵ_ω, ℶ_ω, 2^ℵ0, λ.
std::string to_string(const CardinalExpr& e, Notation notation = Notation::Ascii);

/// Grammar: sum of products of right-associative powers over atoms
/// aleph<k>, aleph(k|w|omega|ω), beth<k>, beth(...), integers, identifiers,
/// ℵ/ℶ forms, and parentheses. Throws ParseError.
CardinalExpr parse_cardinal(std::string_view text);

/// Fixed point of the rewrite rules. Rule applications are appended to trace.
/// Throws DomainError only when a finite power would exceed the size cap.
CardinalExpr normalize(const CardinalExpr& e, std::vector<std::string>* trace = nullptr);

bool is_finite(const CardinalExpr& e);

enum class Relation { Less, LessEqual, Equal };

struct Verdict {
    TriBool value = TriBool::Unknown;
    std::string rule;                // rule that settled the question, empty if Unknown
    std::vector<std::string> trace;  // normalization steps and the deciding argument
};

/// Sound in ZFC: True/False only when the rule system proves it.
Verdict compare(const CardinalExpr& a, const CardinalExpr& b, Relation r);

/// lambda^aleph0 = lambda. DomainError on finite input.
Verdict stability_predicate(const CardinalExpr& lambda);

/// cf(e) where decided, nullopt otherwise.
std::optional<CardinalExpr> cofinality(const CardinalExpr& e);

}  // namespace pptor
