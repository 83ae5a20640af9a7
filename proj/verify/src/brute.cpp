#include "pptor/verify/brute.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pptor::verify {

SmallGroup::SmallGroup(const FgGroup& g) {
    if (!g.is_finite()) throw std::invalid_argument("SmallGroup needs a finite group");
    for (const auto& d : g.invariant_factors()) moduli_.push_back(d.get_si());
    for (long d : moduli_) {
        size_ *= d;
        exponent_ = std::lcm(exponent_, d);
    }
    const auto n = static_cast<std::size_t>(size_);
    std::vector<std::vector<long>> coords(n);
    for (long a = 0; a < size_; ++a) coords[static_cast<std::size_t>(a)] = decode(a);
    add_.resize(n * n);
    for (long a = 0; a < size_; ++a)
        for (long b = 0; b < size_; ++b) {
            std::vector<long> c(moduli_.size());
            for (std::size_t i = 0; i < c.size(); ++i)
                c[i] = (coords[static_cast<std::size_t>(a)][i] + coords[static_cast<std::size_t>(b)][i]) % moduli_[i];
            add_[static_cast<std::size_t>(a * size_ + b)] = encode(c);
        }
    mul_.resize(static_cast<std::size_t>(exponent_) * n);
    for (long k = 0; k < exponent_; ++k)
        for (long a = 0; a < size_; ++a) {
            std::vector<long> c = coords[static_cast<std::size_t>(a)];
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = (k * c[i]) % moduli_[i];
            mul_[static_cast<std::size_t>(k * size_ + a)] = encode(c);
        }
}

long SmallGroup::scale(long k, long a) const {
    long r = ((k % exponent_) + exponent_) % exponent_;
    return mul_[static_cast<std::size_t>(r * size_ + a)];
}

long SmallGroup::generator(std::size_t i) const {
    std::vector<long> c(moduli_.size());
    c[i] = 1;
    return encode(c);
}

long SmallGroup::order_of(long a) const {
    long k = 1;
    for (long x = a; x != 0; x = add(x, a)) ++k;
    return k;
}

std::vector<long> SmallGroup::decode(long a) const {
    std::vector<long> c(moduli_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a % moduli_[i];
        a /= moduli_[i];
    }
    return c;
}

long SmallGroup::encode(const std::vector<long>& coords) const {
    long a = 0;
    for (std::size_t i = moduli_.size(); i-- > 0;) a = a * moduli_[i] + (((coords[i] % moduli_[i]) + moduli_[i]) % moduli_[i]);
    return a;
}

long SmallGroup::index_of(const Element& e) const {
    std::vector<long> c;
    for (const auto& x : e.coords) c.push_back(x.get_si());
    return encode(c);
}

namespace {

long ipow(long b, std::size_t e) {
    long r = 1;
    while (e--) r *= b;
    return r;
}

// Closure of generators inside a power of g, tuples encoded as base-|g| numbers.
std::vector<bool> closure(const SmallGroup& g, std::size_t width, const std::vector<std::vector<long>>& gens) {
    const long total = ipow(g.size(), width);
    std::vector<bool> seen(static_cast<std::size_t>(total));
    auto encode = [&](const std::vector<long>& t) {
        long code = 0;
        for (std::size_t i = width; i-- > 0;) code = code * g.size() + t[i];
        return code;
    };
    auto decode = [&](long code) {
        std::vector<long> t(width);
        for (std::size_t i = 0; i < width; ++i) {
            t[i] = code % g.size();
            code /= g.size();
        }
        return t;
    };
    std::vector<long> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<long> cur = decode(queue[head]);
        for (const auto& gen : gens) {
            std::vector<long> next(width);
            for (std::size_t i = 0; i < width; ++i) next[i] = g.add(cur[i], gen[i]);
            long code = encode(next);
            if (!seen[static_cast<std::size_t>(code)]) {
                seen[static_cast<std::size_t>(code)] = true;
                queue.push_back(code);
            }
        }
    }
    return seen;
}

}  // namespace

std::vector<bool> brute_force_solutions(const PpFormula& f, const FgGroup& m) {
    const SmallGroup g(m);
    const auto& free = f.free_vars();
    const auto& bound = f.bound_vars();
    const auto eqs = f.equations();
    const std::size_t e = eqs.size(), n = free.size(), b = bound.size();
    std::vector<std::vector<long>> c(e, std::vector<long>(n)), d(e, std::vector<long>(b));
    for (std::size_t r = 0; r < e; ++r)
        for (const auto& [name, coef] : eqs[r].coefficients) {
            const long k = floor_mod(coef, g.exponent()).get_si();
            if (auto it = std::find(free.begin(), free.end(), name); it != free.end())
                c[r][static_cast<std::size_t>(it - free.begin())] += k;
            else
                d[r][static_cast<std::size_t>(std::find(bound.begin(), bound.end(), name) - bound.begin())] += k;
        }

    std::vector<std::vector<long>> gens;
    for (std::size_t j = 0; j < b; ++j)
        for (std::size_t i = 0; i < g.rank(); ++i) {
            std::vector<long> t(e);
            for (std::size_t r = 0; r < e; ++r) t[r] = g.scale(d[r][j], g.generator(i));
            gens.push_back(std::move(t));
        }
    const std::vector<bool> image = closure(g, e, gens);

    const long total = ipow(g.size(), n);
    std::vector<bool> out(static_cast<std::size_t>(total));
    std::vector<long> x(n);
    for (long code = 0; code < total; ++code) {
        long rest = code;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = rest % g.size();
            rest /= g.size();
        }
        long v = 0;
        for (std::size_t r = e; r-- > 0;) {
            long s = 0;
            for (std::size_t i = 0; i < n; ++i) s = g.add(s, g.scale(c[r][i], x[i]));
            v = v * g.size() + s;
        }
        out[static_cast<std::size_t>(code)] = image[static_cast<std::size_t>(v)];
    }
    return out;
}

std::vector<bool> subgroup_bitmap(const Subgroup& s, const FgGroup& m, std::size_t n) {
    const SmallGroup g(m);
    std::vector<std::vector<long>> gens;
    for (const auto& x : s.generators()) {
        std::vector<long> t;
        for (const auto& comp : split_tuple(m, n, x)) t.push_back(g.index_of(comp));
        gens.push_back(std::move(t));
    }
    return closure(g, n, gens);
}

std::vector<std::vector<long>> all_homomorphisms(const SmallGroup& from, const SmallGroup& to) {
    // Generator i may go to any element killed by its order.
    std::vector<std::vector<long>> choices(from.rank());
    for (std::size_t i = 0; i < from.rank(); ++i)
        for (long y = 0; y < to.size(); ++y)
            if (to.scale(from.moduli()[i], y) == 0) choices[i].push_back(y);
    std::vector<std::vector<long>> out;
    std::vector<long> current(from.rank());
    auto rec = [&](auto& self, std::size_t i) -> void {
        if (i == from.rank()) {
            out.push_back(current);
            return;
        }
        for (long y : choices[i]) {
            current[i] = y;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

long apply_hom(const SmallGroup& from, const SmallGroup& to, const std::vector<long>& images, long x) {
    const auto c = from.decode(x);
    long y = 0;
    for (std::size_t i = 0; i < c.size(); ++i) y = to.add(y, to.scale(c[i], images[i]));
    return y;
}

std::vector<bool> hom_reachability(const SmallGroup& n1, const SmallGroup& n2,
                                   const std::vector<std::vector<long>>& homs,
                                   const std::vector<long>& m_in_n1, const std::vector<long>& m_in_n2) {
    std::vector<bool> reach(static_cast<std::size_t>(n1.size() * n2.size()));
    for (const auto& h : homs) {
        bool fixes = true;
        for (std::size_t k = 0; k < m_in_n1.size() && fixes; ++k)
            fixes = apply_hom(n1, n2, h, m_in_n1[k]) == m_in_n2[k];
        if (!fixes) continue;
        for (long x = 0; x < n1.size(); ++x)
            reach[static_cast<std::size_t>(x * n2.size() + apply_hom(n1, n2, h, x))] = true;
    }
    return reach;
}

}  // namespace pptor::verify
