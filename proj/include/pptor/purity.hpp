#pragma once

#include "pptor/group.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace pptor {

/// nM ∩ H = nH for every n dividing the torsion exponent of M/H.
/// Throws MembershipError when H does not live in M.
bool is_pure(const Subgroup& h, const FgGroup& m);

/// Some n with nM ∩ H != nH together with an element of nM ∩ H outside nH.
struct PurityWitness {
    Int n;
    Element element;
};
std::optional<PurityWitness> purity_failure(const Subgroup& h, const FgGroup& m);

/// Elements of finite order.
Subgroup torsion_radical(const FgGroup& m);

/// p-primary part of the torsion subgroup; DomainError when p is not prime.
Subgroup primary_component(const FgGroup& m, const Int& p);

/// K with H ⊕ K = M, or nullopt when H is not a direct summand. M must be finite.
std::optional<Subgroup> complement(const Subgroup& h, const FgGroup& m);

/// Order sequence of an element (b_n) of the product of the B_n, B_n a direct
/// sum of copies of Z(p^n): component n has order p^(e_n), so 0 <= e_n <= n.
struct FinitelySupported {
    std::vector<unsigned> exponents;  // e_1, e_2, ...; zero afterwards
};
struct EventuallyConstant {
    std::vector<unsigned> prefix;  // e_1 .. e_k
    unsigned constant = 0;         // e_n for n > k
};
struct LinearGrowth {
    unsigned slope = 1;  // e_n = slope*n + offset for n >= start, 0 before
    long offset = 0;
    unsigned start = 1;
};

struct OrderPattern {
    Int p = 2;
    std::variant<FinitelySupported, EventuallyConstant, LinearGrowth> shape;
};

/// Exponent e_n (n >= 1). Throws DomainError for a pattern that is not a valid order sequence.
unsigned pattern_exponent(const OrderPattern& pattern, unsigned n);
void validate_pattern(const OrderPattern& pattern);

/// True iff the orders are bounded, i.e. (b_n) lies in the torsion part of the
/// pure-injective hull of the sum of the B_n.
bool in_torsion_of_pe(const OrderPattern& pattern);

}  // namespace pptor
