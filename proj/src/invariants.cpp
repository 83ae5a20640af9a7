#include "pptor/invariants.hpp"

#include "pptor/error.hpp"

#include <algorithm>

namespace pptor {

UlmInvariants ulm_invariants(const FgGroup& g) {
    if (!g.is_finite()) throw DomainError("Ulm invariants need a finite group, got " + g.to_string());
    UlmInvariants inv;
    const Subgroup whole = Subgroup::whole(g);
    const Int exp = g.torsion_exponent();
    for (const auto& [p, e] : factorize(exp)) {
        const Subgroup socle = annihilator(g, p);
        auto dim = [&](unsigned k) { return valuation(*intersection(multiple(power(p, k), whole), socle).order(), p); };
        unsigned prev = dim(0);
        for (unsigned n = 1; n <= e; ++n) {
            unsigned next = dim(n);
            if (prev != next) inv.alpha.emplace(std::pair{p, n}, CardinalExpr::finite(prev - next));
            prev = next;
        }
    }
    return inv;
}

UlmInvariants operator+(const UlmInvariants& a, const UlmInvariants& b) {
    UlmInvariants r = a;
    for (const auto& [k, v] : b.alpha) {
        auto [it, fresh] = r.alpha.emplace(k, v);
        if (!fresh) it->second = normalize(CardinalExpr::sum({it->second, v}));
    }
    for (const auto& [k, v] : b.gamma) {
        auto [it, fresh] = r.gamma.emplace(k, v);
        if (!fresh) it->second = normalize(CardinalExpr::sum({it->second, v}));
    }
    return r;
}

FgGroup reconstruct(const UlmInvariants& inv) {
    for (const auto& [p, g] : inv.gamma)
        if (normalize(g) != CardinalExpr::finite(0))
            throw DomainError("Prüfer summands at p = " + p.get_str() + " have no finite reconstruction");
    std::vector<Int> moduli;
    for (const auto& [key, m] : inv.alpha) {
        const CardinalExpr n = normalize(m);
        if (n.kind() != CardinalExpr::Kind::Finite)
            throw DomainError("infinite multiplicity " + to_string(m) + " for alpha(" + key.first.get_str() + "," +
                              std::to_string(key.second) + ")");
        if (!is_prime(key.first) || key.second == 0) throw DomainError("alpha index is not (prime, n >= 1)");
        if (!n.value().fits_ulong_p() || n.value() > 4096) throw DomainError("multiplicity too large");
        for (unsigned long i = 0; i < n.value().get_ui(); ++i) moduli.push_back(power(key.first, key.second));
    }
    return present_cyclic_sum(moduli).group;
}

std::string to_string(const UlmInvariants& inv) {
    std::string out;
    for (const auto& [k, v] : inv.alpha) {
        if (!out.empty()) out += ' ';
        out += "alpha(" + k.first.get_str() + "," + std::to_string(k.second) + ")=" + to_string(v);
    }
    for (const auto& [p, v] : inv.gamma) {
        if (!out.empty()) out += ' ';
        out += "gamma(" + p.get_str() + ")=" + to_string(v);
    }
    return out.empty() ? "0" : out;
}

// ---- symbolic groups -----------------------------------------------------

namespace {

using SK = SymbolicGroup::Kind;

bool is_zero(const SymbolicGroup& g) { return g.kind() == SK::DirectSum && g.children().empty(); }

}  // namespace

SymbolicGroup SymbolicGroup::cyclic(std::optional<Int> p, std::optional<unsigned> n, CardinalExpr multiplicity) {
    SymbolicGroup g;
    g.kind_ = Kind::Cyclic;
    g.prime_ = std::move(p);
    g.exponent_ = n;
    g.multiplicity_ = std::move(multiplicity);
    return g;
}

SymbolicGroup SymbolicGroup::prufer(std::optional<Int> p, CardinalExpr multiplicity) {
    SymbolicGroup g;
    g.kind_ = Kind::Prufer;
    g.prime_ = std::move(p);
    g.multiplicity_ = std::move(multiplicity);
    return g;
}

SymbolicGroup SymbolicGroup::padic(std::optional<Int> p, CardinalExpr multiplicity) {
    SymbolicGroup g;
    g.kind_ = Kind::PAdic;
    g.prime_ = std::move(p);
    g.multiplicity_ = std::move(multiplicity);
    return g;
}

SymbolicGroup SymbolicGroup::rationals(CardinalExpr multiplicity) {
    SymbolicGroup g;
    g.kind_ = Kind::Rationals;
    g.multiplicity_ = std::move(multiplicity);
    return g;
}

SymbolicGroup SymbolicGroup::torsion(SymbolicGroup child) { return wrapped(Kind::Torsion, std::move(child)); }
SymbolicGroup SymbolicGroup::pe(SymbolicGroup child) { return wrapped(Kind::PE, std::move(child)); }
SymbolicGroup SymbolicGroup::product_over_primes(SymbolicGroup child) {
    return wrapped(Kind::ProductOverPrimes, std::move(child));
}
SymbolicGroup SymbolicGroup::sum_over_primes(SymbolicGroup child) {
    return wrapped(Kind::SumOverPrimes, std::move(child));
}
SymbolicGroup SymbolicGroup::sum_over_n(SymbolicGroup child) { return wrapped(Kind::SumOverN, std::move(child)); }

SymbolicGroup SymbolicGroup::wrapped(Kind kind, SymbolicGroup child) {
    SymbolicGroup g;
    g.kind_ = kind;
    g.children_ = {std::move(child)};
    return g;
}

SymbolicGroup SymbolicGroup::direct_power(SymbolicGroup child, CardinalExpr copies) {
    SymbolicGroup g;
    g.kind_ = Kind::DirectPower;
    g.children_ = {std::move(child)};
    g.multiplicity_ = std::move(copies);
    return g;
}

SymbolicGroup SymbolicGroup::direct_sum(std::vector<SymbolicGroup> parts) {
    SymbolicGroup g;
    g.kind_ = Kind::DirectSum;
    g.children_ = std::move(parts);
    return g;
}

namespace {

std::string prime_text(const std::optional<Int>& p) { return p ? p->get_str() : "p"; }

void print(const SymbolicGroup& g, Notation n, std::string& out) {
    const bool uni = n == Notation::Unicode;
    auto suffix = [&](const CardinalExpr& m) {
        if (m != CardinalExpr::finite(1)) out += "^(" + to_string(m, n) + ")";
    };
    auto prefix = [&](const char* u, const char* a, const SymbolicGroup& c) {
        if (uni) {
            const bool parens = c.kind() == SK::DirectSum && c.children().size() > 1;
            out += u;
            out += parens ? "(" : " ";
            print(c, n, out);
            if (parens) out += ')';
        } else {
            out += a;
            out += '(';
            print(c, n, out);
            out += ')';
        }
    };
    switch (g.kind()) {
    case SK::Cyclic:
        out += "Z(" + prime_text(g.prime()) + "^" + (g.exponent() ? std::to_string(*g.exponent()) : "n") + ")";
        suffix(g.multiplicity());
        break;
    case SK::Prufer:
        out += "Z(" + prime_text(g.prime()) + (uni ? "^∞)" : "^inf)");
        suffix(g.multiplicity());
        break;
    case SK::PAdic:
        out += "Z_" + prime_text(g.prime());
        suffix(g.multiplicity());
        break;
    case SK::Rationals:
        out += "Q";
        suffix(g.multiplicity());
        break;
    case SK::Torsion:
        out += "t(";
        print(g.children()[0], n, out);
        out += ')';
        break;
    case SK::PE:
        out += "PE(";
        print(g.children()[0], n, out);
        out += ')';
        break;
    case SK::ProductOverPrimes: prefix("Π_p", "Prod_p", g.children()[0]); break;
    case SK::SumOverPrimes: prefix("⊕_p", "Sum_p", g.children()[0]); break;
    case SK::SumOverN: prefix("⊕_n", "Sum_n", g.children()[0]); break;
    case SK::DirectPower: {
        const SymbolicGroup& c = g.children()[0];
        const bool parens = (c.kind() == SK::DirectSum && c.children().size() > 1) ||
                            (uni && (c.kind() == SK::ProductOverPrimes || c.kind() == SK::SumOverPrimes ||
                                     c.kind() == SK::SumOverN));
        if (parens) out += '(';
        print(c, n, out);
        if (parens) out += ')';
        out += "^(" + to_string(g.multiplicity(), n) + ")";
        break;
    }
    case SK::DirectSum:
        if (g.children().empty()) out += "0";
        for (std::size_t i = 0; i < g.children().size(); ++i) {
            if (i) out += uni ? " ⊕ " : " + ";
            const SymbolicGroup& c = g.children()[i];
            const bool parens = c.kind() == SK::DirectSum && c.children().size() > 1;
            if (parens) out += '(';
            print(c, n, out);
            if (parens) out += ')';
        }
        break;
    }
}

}  // namespace

std::string to_string(const SymbolicGroup& g, Notation notation) {
    std::string out;
    print(g, notation, out);
    return out;
}

SymbolicGroup normalize(const SymbolicGroup& g) {
    const SymbolicGroup zero = SymbolicGroup::direct_sum({});
    switch (g.kind()) {
    case SK::Cyclic:
    case SK::Prufer:
    case SK::PAdic:
    case SK::Rationals: {
        CardinalExpr m = normalize(g.multiplicity());
        if (m == CardinalExpr::finite(0)) return zero;
        if (g.kind() == SK::Cyclic && g.exponent() == 0u) return zero;
        if (g.kind() == SK::Cyclic) return SymbolicGroup::cyclic(g.prime(), g.exponent(), m);
        if (g.kind() == SK::Prufer) return SymbolicGroup::prufer(g.prime(), m);
        if (g.kind() == SK::PAdic) return SymbolicGroup::padic(g.prime(), m);
        return SymbolicGroup::rationals(m);
    }
    case SK::DirectPower: {
        SymbolicGroup c = normalize(g.children()[0]);
        CardinalExpr m = normalize(g.multiplicity());
        if (is_zero(c) || m == CardinalExpr::finite(0)) return zero;
        if (m == CardinalExpr::finite(1)) return c;
        return SymbolicGroup::direct_power(c, m);
    }
    case SK::DirectSum: {
        std::vector<SymbolicGroup> parts;
        for (const SymbolicGroup& c : g.children()) {
            SymbolicGroup n = normalize(c);
            if (n.kind() == SK::DirectSum)
                parts.insert(parts.end(), n.children().begin(), n.children().end());
            else
                parts.push_back(n);
        }
        std::stable_sort(parts.begin(), parts.end(), [](const SymbolicGroup& a, const SymbolicGroup& b) {
            if (a.kind() != b.kind()) return a.kind() < b.kind();
            return to_string(a, Notation::Ascii) < to_string(b, Notation::Ascii);
        });
        if (parts.size() == 1) return parts[0];
        return SymbolicGroup::direct_sum(std::move(parts));
    }
    default: {
        SymbolicGroup c = normalize(g.children()[0]);
        if (is_zero(c)) return zero;
        switch (g.kind()) {
        case SK::Torsion: return SymbolicGroup::torsion(c);
        case SK::PE: return SymbolicGroup::pe(c);
        case SK::ProductOverPrimes: return SymbolicGroup::product_over_primes(c);
        case SK::SumOverPrimes: return SymbolicGroup::sum_over_primes(c);
        default: return SymbolicGroup::sum_over_n(c);
        }
    }
    }
}

bool equivalent(const SymbolicGroup& a, const SymbolicGroup& b) { return normalize(a) == normalize(b); }

LimitModel limit_model_template(const CardinalExpr& lambda, Cofinality cof, std::optional<Int> p) {
    if (p && !is_prime(*p)) throw DomainError(p->get_str() + " is not prime");
    LimitModel out;
    out.stability = stability_predicate(lambda);
    const CardinalExpr l = normalize(lambda);
    if (out.stability.value == TriBool::False)
        throw DomainError("no limit models of cardinality " + to_string(l) + ": " + to_string(l) + "^aleph0 > " +
                          to_string(l) + " (" + out.stability.rule + ")");
    if (out.stability.value == TriBool::Unknown)
        out.warning = "stability of " + to_string(l) + " is undecided; the template assumes " + to_string(l) +
                      "^aleph0 = " + to_string(l);

    SymbolicGroup reduced = SymbolicGroup::pe(SymbolicGroup::sum_over_n(SymbolicGroup::cyclic(p, std::nullopt, l)));
    SymbolicGroup first = SymbolicGroup::torsion(p ? reduced : SymbolicGroup::product_over_primes(reduced));
    if (cof == Cofinality::Countable)
        first = SymbolicGroup::direct_power(first, CardinalExpr::aleph(CardIndex::finite(0)));
    SymbolicGroup divisible = SymbolicGroup::prufer(p, l);
    if (!p) divisible = SymbolicGroup::sum_over_primes(divisible);
    out.group = SymbolicGroup::direct_sum({first, divisible});
    return out;
}

}  // namespace pptor
