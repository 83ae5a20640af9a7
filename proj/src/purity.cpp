#include "pptor/purity.hpp"

#include "pptor/error.hpp"

namespace pptor {

namespace {

void require_member(const Subgroup& h, const FgGroup& m) {
    if (!(h.ambient() == m)) throw MembershipError("subgroup does not live in " + m.to_string());
}

}  // namespace

std::optional<PurityWitness> purity_failure(const Subgroup& h, const FgGroup& m) {
    require_member(h, m);
    // If oM ∩ H = oH for every o dividing exp t(M/H), it holds for all n:
    // for nx in H the class of x has some order o | n there, and ox = oh'.
    const Int e = quotient(m, h).torsion_exponent();
    const Subgroup whole = Subgroup::whole(m);
    for (const Int& n : divisors(e)) {
        if (n == 1) continue;
        Subgroup meet = intersection(multiple(n, whole), h);
        Subgroup nh = multiple(n, h);
        if (meet == nh) continue;
        for (const auto& g : meet.generators())
            if (!nh.contains(g)) return PurityWitness{n, g};
    }
    return std::nullopt;
}

bool is_pure(const Subgroup& h, const FgGroup& m) { return !purity_failure(h, m); }

Subgroup torsion_radical(const FgGroup& m) {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < m.torsion_rank(); ++i) gens.push_back(m.generator(i));
    return Subgroup(m, gens);
}

Subgroup primary_component(const FgGroup& m, const Int& p) {
    if (p < 2 || !is_prime(p)) throw DomainError(p.get_str() + " is not prime");
    std::vector<Element> gens;
    for (std::size_t i = 0; i < m.torsion_rank(); ++i) {
        const Int& d = m.modulus(i);
        gens.push_back(m.scale(d / power(p, valuation(d, p)), m.generator(i)));
    }
    return Subgroup(m, gens);
}

namespace {

bool is_complement(const Subgroup& h, const Subgroup& k) {
    return intersection(h, k).is_trivial() && sum(h, k).is_whole();
}

// Lift a basis of M/H and correct each lift by an element of H so that it
// keeps its order; succeeds exactly when H is pure.
std::optional<Subgroup> lift_quotient_basis(const Subgroup& h, const FgGroup& m) {
    QuotientMap q = quotient_map(m, h);
    SubgroupStructure hs = subgroup_structure(h);
    std::vector<Element> gens;
    for (std::size_t i = 0; i < q.group.dimension(); ++i) {
        const Int o = q.group.modulus(i);
        auto x = preimage(q.projection, q.group.generator(i));
        if (!x) throw std::logic_error("complement: projection not surjective");
        Element target = m.scale(o, *x);
        std::vector<Element> scaled;
        for (const auto& img : hs.embedding.images()) scaled.push_back(m.scale(o, img));
        auto a = preimage(Homomorphism(hs.group, m, scaled), target);
        if (!a) return std::nullopt;
        gens.push_back(m.subtract(*x, hs.embedding.apply(*a)));
    }
    return Subgroup(m, gens);
}

std::optional<Subgroup> exhaustive_complement(const Subgroup& h, const FgGroup& m) {
    const Int want = *m.order() / *h.order();
    for (const auto& k : all_subgroups(m))
        if (*k.order() == want && is_complement(h, k)) return k;
    return std::nullopt;
}

}  // namespace

std::optional<Subgroup> complement(const Subgroup& h, const FgGroup& m) {
    require_member(h, m);
    if (!m.is_finite()) throw DomainError("complement needs a finite group, got " + m.to_string());
    std::optional<Subgroup> k = lift_quotient_basis(h, m);
    if (!k && *m.order() <= 64) k = exhaustive_complement(h, m);
    if (k && !is_complement(h, *k)) throw std::logic_error("complement: lifted subgroup is not a complement");
    return k;
}

unsigned pattern_exponent(const OrderPattern& pattern, unsigned n) {
    if (n == 0) throw DomainError("order patterns are indexed from 1");
    long e = 0;
    if (auto* f = std::get_if<FinitelySupported>(&pattern.shape)) {
        e = n <= f->exponents.size() ? f->exponents[n - 1] : 0;
    } else if (auto* c = std::get_if<EventuallyConstant>(&pattern.shape)) {
        e = n <= c->prefix.size() ? c->prefix[n - 1] : c->constant;
    } else {
        const auto& g = std::get<LinearGrowth>(pattern.shape);
        e = n < g.start ? 0 : static_cast<long>(g.slope) * n + g.offset;
    }
    if (e < 0 || e > static_cast<long>(n))
        throw DomainError("component " + std::to_string(n) + " cannot have order p^" + std::to_string(e));
    return static_cast<unsigned>(e);
}

void validate_pattern(const OrderPattern& pattern) {
    if (pattern.p < 2 || !is_prime(pattern.p)) throw DomainError("order pattern needs a prime");
    if (auto* f = std::get_if<FinitelySupported>(&pattern.shape)) {
        for (unsigned n = 1; n <= f->exponents.size(); ++n) pattern_exponent(pattern, n);
    } else if (auto* c = std::get_if<EventuallyConstant>(&pattern.shape)) {
        for (unsigned n = 1; n <= c->prefix.size() + 1; ++n) pattern_exponent(pattern, n);
    } else {
        const auto& g = std::get<LinearGrowth>(pattern.shape);
        if (g.slope > 1) throw DomainError("unrecognized pattern: exponents would outgrow the index");
        if (g.start == 0) throw DomainError("order patterns are indexed from 1");
        // Linear in n with slope <= 1: checking the first index past `start` is enough.
        for (unsigned n = 1; n <= g.start + 1; ++n) pattern_exponent(pattern, n);
    }
}

bool in_torsion_of_pe(const OrderPattern& pattern) {
    validate_pattern(pattern);
    if (auto* g = std::get_if<LinearGrowth>(&pattern.shape)) return g->slope == 0;
    return true;
}

}  // namespace pptor
