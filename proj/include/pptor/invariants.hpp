#pragma once

#include "pptor/cardinal.hpp"
#include "pptor/group.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pptor {

/// alpha_{p,n} = dim (p^{n-1}G)[p] / (p^n G)[p] and gamma_p = dim D(G)[p].
/// Only nonzero entries are stored.
struct UlmInvariants {
    std::map<std::pair<Int, unsigned>, CardinalExpr> alpha;
    std::map<Int, CardinalExpr> gamma;

    friend bool operator==(const UlmInvariants&, const UlmInvariants&) = default;
};

/// DomainError for an infinite group.
UlmInvariants ulm_invariants(const FgGroup& g);

/// Entrywise sum.
UlmInvariants operator+(const UlmInvariants& a, const UlmInvariants& b);

/// Direct sum of (Z/p^n)^alpha_{p,n}. DomainError when a multiplicity is not
/// finite or some gamma_p is nonzero.
FgGroup reconstruct(const UlmInvariants& inv);

/// "alpha(2,1)=1 alpha(2,2)=1", or "0" when everything vanishes.
std::string to_string(const UlmInvariants& inv);

/// Formal sums of Z(p^n), Z(p^inf), Z_p and Q with cardinal multiplicities,
/// under the wrappers that appear in the limit-model decompositions. A prime
/// or exponent left unset is the bound index p or n.
class SymbolicGroup {
public:
    enum class Kind {
        Torsion,
        DirectPower,
        ProductOverPrimes,
        PE,
        SumOverN,
        SumOverPrimes,
        Cyclic,
        Prufer,
        PAdic,
        Rationals,
        DirectSum,
    };

    static SymbolicGroup cyclic(std::optional<Int> p, std::optional<unsigned> n, CardinalExpr multiplicity);
    static SymbolicGroup prufer(std::optional<Int> p, CardinalExpr multiplicity);
    static SymbolicGroup padic(std::optional<Int> p, CardinalExpr multiplicity);
    static SymbolicGroup rationals(CardinalExpr multiplicity);
    static SymbolicGroup torsion(SymbolicGroup g);
    static SymbolicGroup pe(SymbolicGroup g);
    static SymbolicGroup product_over_primes(SymbolicGroup g);
    static SymbolicGroup sum_over_primes(SymbolicGroup g);
    static SymbolicGroup sum_over_n(SymbolicGroup g);
    static SymbolicGroup direct_power(SymbolicGroup g, CardinalExpr copies);
    static SymbolicGroup direct_sum(std::vector<SymbolicGroup> parts);

    Kind kind() const { return kind_; }
    const std::optional<Int>& prime() const { return prime_; }
    const std::optional<unsigned>& exponent() const { return exponent_; }
    /// Multiplicity of an atom, or the number of copies of a DirectPower.
    const CardinalExpr& multiplicity() const { return multiplicity_; }
    const std::vector<SymbolicGroup>& children() const { return children_; }

    friend bool operator==(const SymbolicGroup&, const SymbolicGroup&) = default;

private:
    static SymbolicGroup wrapped(Kind kind, SymbolicGroup child);

    Kind kind_ = Kind::DirectSum;
    std::optional<Int> prime_;
    std::optional<unsigned> exponent_;
    CardinalExpr multiplicity_ = CardinalExpr::finite(1);
    std::vector<SymbolicGroup> children_;
};

/// Unicode: t(Π_p PE(⊕_n Z(p^n)^(λ))) ⊕ ⊕_p Z(p^∞)^(λ)
/// Ascii:   t(Prod_p(PE(Sum_n(Z(p^n)^(lambda))))) + Sum_p(Z(p^inf)^(lambda))
std::string to_string(const SymbolicGroup& g, Notation notation = Notation::Unicode);

/// Normalizes multiplicities, drops zero summands, flattens and sorts direct sums.
SymbolicGroup normalize(const SymbolicGroup& g);
bool equivalent(const SymbolicGroup& a, const SymbolicGroup& b);

enum class Cofinality { Countable, Uncountable };

struct LimitModel {
    SymbolicGroup group;
    Verdict stability;               // verdict on lambda^aleph0 = lambda
    std::optional<std::string> warning;  // set when stability is undecided
};

/// Decomposition of the (lambda, alpha)-limit model of torsion groups (p unset)
/// or of abelian p-groups. DomainError when lambda is provably unstable, finite,
/// or p is not prime.
LimitModel limit_model_template(const CardinalExpr& lambda, Cofinality cof, std::optional<Int> p = std::nullopt);

}  // namespace pptor
