#include "pptor/ppsolve.hpp"

#include "pptor/purity.hpp"

namespace pptor {

Subgroup evaluate(const MatrixForm& form, const FgGroup& m) {
    const std::size_t n = form.c.cols();
    const std::size_t e = form.c.rows();
    FgGroup target = power(m, n);
    std::vector<Element> gens;
    // Coordinates of M are independent cyclic groups, so the system splits:
    // on Z/d solve C u + D v + d w = 0 over Z and keep u.
    for (std::size_t c = 0; c < m.dimension(); ++c) {
        const Int d = m.modulus(c);
        IntMatrix a = concat(form.c, form.d);
        if (d != 0) {
            IntMatrix scaled(e, e);
            for (std::size_t i = 0; i < e; ++i) scaled(i, i) = d;
            a = concat(a, scaled);
        }
        IntMatrix k = right_kernel(a);
        for (std::size_t r = 0; r < k.rows(); ++r) {
            IntVector coords(target.dimension());
            bool nonzero = false;
            for (std::size_t i = 0; i < n; ++i) {
                coords[c * n + i] = k(r, i);
                nonzero = nonzero || k(r, i) != 0;
            }
            if (nonzero) gens.push_back(target.element(std::move(coords)));
        }
    }
    return Subgroup(target, gens);
}

Subgroup evaluate(const PpFormula& f, const FgGroup& m) { return evaluate(normalize(f), m); }

Order index(const PpFormula& f, const PpFormula& g, const FgGroup& m) {
    if (f.arity() != g.arity())
        throw ArityError("index: formulas have " + std::to_string(f.arity()) + " and " + std::to_string(g.arity()) +
                         " free variables");
    Subgroup big = evaluate(f, m);
    Subgroup small = evaluate(g, m);
    for (const auto& x : small.generators())
        if (!big.contains(x)) throw InclusionError("index: g[M] is not contained in f[M]", x);
    return small.index_in(big);
}

std::vector<Profile> profiles(unsigned length) {
    std::vector<Profile> out;
    if (length == 0) return {Profile{}};
    for (unsigned long mask = 0; mask < (1UL << length); ++mask) {
        Profile j(length);
        unsigned level = 0;
        for (unsigned i = 0; i < length; ++i) {
            level += (mask >> i) & 1U;
            j[i] = level;
        }
        out.push_back(std::move(j));
    }
    return out;
}

Subgroup profile_subgroup(const FgGroup& n, const Int& p, const Profile& j) {
    Subgroup s = Subgroup::zero(n);
    const Subgroup whole = Subgroup::whole(n);
    for (unsigned i = 0; i < j.size(); ++i) {
        const unsigned level = i + 1;
        s = sum(s, intersection(multiple(power(p, j[i]), whole), annihilator(n, power(p, level - j[i]))));
    }
    return s;
}

PpFormula profile_formula(const Int& p, const Profile& j) {
    if (j.empty()) return parse_formula("x = 0");
    std::string vars, link = "x = ", body;
    for (unsigned i = 0; i < j.size(); ++i) {
        const std::string u = "u" + std::to_string(i + 1), v = "v" + std::to_string(i + 1);
        vars += " " + u + " " + v;
        link += (i ? " + " : "") + u;
        body += " & " + u + " = " + power(p, j[i]).get_str() + "*" + v;
        body += " & " + power(p, i + 1 - j[i]).get_str() + "*" + u + " = 0";
    }
    return parse_formula("E" + vars + " . " + link + body);
}

namespace {

// CRT idempotent for the p-part of a group of exponent e.
Int idempotent(const Int& e, const Int& p) {
    const Int pk = power(p, valuation(e, p));
    const Int q = e / pk;
    Int inv;
    mpz_invert(inv.get_mpz_t(), q.get_mpz_t(), pk.get_mpz_t());
    return floor_mod(q * inv, e);
}

const std::vector<bool>& lookup(const PpTypeDescriptor& d, const Int& p, const Profile& j) {
    return d.satisfied.at({p, j});
}

}  // namespace

PpTypeDescriptor pp_type_descriptor(const Element& a, const Homomorphism& embedding) {
    const FgGroup& n = embedding.target();
    const FgGroup& m = embedding.source();
    if (!n.is_finite()) throw DomainError("pp-type descriptors need a finite group, got " + n.to_string());
    if (!n.contains(a)) throw MembershipError("element does not belong to " + n.to_string());
    if (!embedding.is_injective()) throw DomainError("parameter map is not injective");
    if (!is_pure(embedding.image(), n)) throw DomainError("parameter group is not pure in " + n.to_string());

    PpTypeDescriptor d{embedding, a, {}, {}};
    const Int e = n.torsion_exponent();
    const auto params = m.elements();
    std::vector<Element> shifted;
    for (const auto& x : params) shifted.push_back(n.subtract(a, embedding.apply(x)));
    for (const auto& [p, k] : factorize(e)) {
        d.exponents[p] = k;
        const Int ep = idempotent(e, p);
        std::vector<Element> parts;
        for (const auto& s : shifted) parts.push_back(n.scale(ep, s));
        for (const Profile& j : profiles(k)) {
            Subgroup s = profile_subgroup(n, p, j);
            std::vector<bool> bits(parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i) bits[i] = s.contains(parts[i]);
            d.satisfied[{p, j}] = std::move(bits);
        }
    }
    return d;
}

PpTypeDescriptor pp_type_descriptor(const Element& a, const Subgroup& m, const FgGroup& n) {
    if (!(m.ambient() == n)) throw MembershipError("parameter subgroup does not live in " + n.to_string());
    return pp_type_descriptor(a, subgroup_structure(m).embedding);
}

bool pp_type_equal(const PpTypeDescriptor& d1, const PpTypeDescriptor& d2) {
    if (!(d1.parameters() == d2.parameters()))
        throw DomainError("pp-types over different parameter groups are not comparable");
    std::map<Int, std::pair<unsigned, unsigned>> primes;
    for (const auto& [p, k] : d1.exponents) primes[p].first = k;
    for (const auto& [p, k] : d2.exponents) primes[p].second = k;
    const std::vector<bool> everything(d1.parameters().order()->get_ui(), true);
    for (const auto& [p, ks] : primes) {
        const unsigned top = std::max(ks.first, ks.second);
        for (const Profile& j : profiles(top)) {
            // Terms of a profile beyond the exponent of N add nothing, so truncate.
            Profile j1(j.begin(), j.begin() + ks.first), j2(j.begin(), j.begin() + ks.second);
            const auto& t1 = ks.first ? lookup(d1, p, j1) : everything;
            const auto& t2 = ks.second ? lookup(d2, p, j2) : everything;
            if (t1 != t2) return false;
        }
    }
    return true;
}

Int count_types(const FgGroup& m, const Int& bound) {
    if (!m.is_finite()) throw DomainError("count_types needs a finite group, got " + m.to_string());
    const Int order = *m.order();
    if (bound < order) throw DomainError("bound is smaller than |M|");
    // Pure subgroups of finite groups are direct summands, so every pure
    // extension of M is M + K with the inclusion on the left.
    std::vector<PpTypeDescriptor> reps;
    for (const FgGroup& k : groups_up_to_order(bound / order)) {
        DirectSum s = direct_sum(m, k);
        for (const auto& a : s.group.elements()) {
            PpTypeDescriptor d = pp_type_descriptor(a, s.inject_left);
            bool seen = false;
            for (const auto& r : reps)
                if (pp_type_equal(r, d)) {
                    seen = true;
                    break;
                }
            if (!seen) reps.push_back(std::move(d));
        }
    }
    return Int(static_cast<unsigned long>(reps.size()));
}

}  // namespace pptor
