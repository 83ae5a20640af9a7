#pragma once

#include "pptor/error.hpp"
#include "pptor/formula.hpp"
#include "pptor/group.hpp"

#include <map>
#include <utility>
#include <vector>

namespace pptor {

/// {a in M^n : M |= f(a)} as a subgroup of power(m, n), n = arity of f.
Subgroup evaluate(const PpFormula& f, const FgGroup& m);
Subgroup evaluate(const MatrixForm& form, const FgGroup& m);

/// Raised by index() when g[M] is not contained in f[M].
class InclusionError : public DomainError {
public:
    InclusionError(const std::string& message, Element witness)
        : DomainError(message), witness_(std::move(witness)) {}
    const Element& witness() const { return witness_; }

private:
    Element witness_;
};

/// [f[M] : g[M]]; nullopt for infinite index.
Order index(const PpFormula& f, const PpFormula& g, const FgGroup& m);

/// A profile j on 1..E with j(1) in {0,1} and j(n+1) - j(n) in {0,1}. For a
/// finite p-group N it names the pp-definable subgroup
///   S_j(N) = sum over n of (p^j(n) N ∩ N[p^(n - j(n))]).
using Profile = std::vector<unsigned>;

std::vector<Profile> profiles(unsigned length);
Subgroup profile_subgroup(const FgGroup& n, const Int& p, const Profile& j);
/// One-variable formula defining S_j on every group of p-power order.
PpFormula profile_formula(const Int& p, const Profile& j);

/// pp-type of a over the parameter group M inside a finite N, where M is
/// given through a pure embedding M -> N. For every prime p and profile j the
/// descriptor records T(p, j) = {m in M : p-part of (a - m) lies in S_j(N)},
/// as a bitmap over M.elements().
struct PpTypeDescriptor {
    Homomorphism embedding;
    Element element;
    std::map<Int, unsigned> exponents;  // p -> v_p(exp N), primes dividing |N|
    std::map<std::pair<Int, Profile>, std::vector<bool>> satisfied;

    const FgGroup& parameters() const { return embedding.source(); }
    const FgGroup& ambient() const { return embedding.target(); }
};

/// Throws DomainError when N is infinite or the embedding is not a pure
/// injection, MembershipError when a is not in N.
PpTypeDescriptor pp_type_descriptor(const Element& a, const Homomorphism& embedding);
/// Parameter subgroup given inside N; M is replaced by its canonical abstract form.
PpTypeDescriptor pp_type_descriptor(const Element& a, const Subgroup& m, const FgGroup& n);

/// DomainError when the two descriptors use different parameter groups.
bool pp_type_equal(const PpTypeDescriptor& d1, const PpTypeDescriptor& d2);

/// Number of pp-types over M realized by (N, a) with M pure in N, N finite of
/// order <= bound. M must be finite with |M| <= bound.
Int count_types(const FgGroup& m, const Int& bound);

}  // namespace pptor
