#include "pptor/group.hpp"

#include "pptor/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace pptor {

std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (a.coords.size() != b.coords.size()) return a.coords.size() <=> b.coords.size();
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        int c = cmp(a.coords[i], b.coords[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string format_order(const Order& order) { return order ? order->get_str() : "∞"; }

// ---------------------------------------------------------------------------
// FgGroup

FgGroup::FgGroup(std::vector<Int> invariant_factors, std::size_t free_rank)
    : factors_(std::move(invariant_factors)), free_rank_(free_rank) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw DomainError("invariant factor must be >= 2, got " + factors_[i].get_str());
        if (i > 0 && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t()))
            throw DomainError("invariant factors must form a divisibility chain");
    }
}

FgGroup FgGroup::cyclic(const Int& n) {
    if (n == 0) return FgGroup({}, 1);
    Int m = abs(n);
    if (m == 1) return FgGroup();
    return FgGroup({m}, 0);
}

FgGroup FgGroup::free_abelian(std::size_t rank) { return FgGroup({}, rank); }

Int FgGroup::modulus(std::size_t i) const { return i < factors_.size() ? factors_[i] : Int(0); }

Order FgGroup::order() const {
    if (free_rank_ > 0) return std::nullopt;
    Int n = 1;
    for (const auto& d : factors_) n *= d;
    return n;
}

Int FgGroup::torsion_exponent() const { return factors_.empty() ? Int(1) : factors_.back(); }

Element FgGroup::zero() const { return Element{IntVector(dimension())}; }

Element FgGroup::generator(std::size_t i) const {
    Element e = zero();
    e.coords.at(i) = 1;
    return element(std::move(e.coords));
}

Element FgGroup::element(IntVector coords) const {
    if (coords.size() != dimension())
        throw MembershipError("element has " + std::to_string(coords.size()) + " coordinates, group " +
                              to_string() + " needs " + std::to_string(dimension()));
    for (std::size_t i = 0; i < factors_.size(); ++i) coords[i] = floor_mod(coords[i], factors_[i]);
    return Element{std::move(coords)};
}

bool FgGroup::contains(const Element& a) const {
    if (a.coords.size() != dimension()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (a.coords[i] < 0 || a.coords[i] >= factors_[i]) return false;
    return true;
}

void FgGroup::check(const Element& a) const {
    if (a.coords.size() != dimension())
        throw MembershipError("element with " + std::to_string(a.coords.size()) +
                              " coordinates does not belong to " + to_string());
}

Element FgGroup::add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    IntVector c(dimension());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
    return element(std::move(c));
}

Element FgGroup::subtract(const Element& a, const Element& b) const {
    check(a);
    check(b);
    IntVector c(dimension());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] - b.coords[i];
    return element(std::move(c));
}

Element FgGroup::negate(const Element& a) const { return scale(-1, a); }

Element FgGroup::scale(const Int& n, const Element& a) const {
    check(a);
    IntVector c(dimension());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = n * a.coords[i];
    return element(std::move(c));
}

Order FgGroup::order_of(const Element& a) const {
    check(a);
    Int n = 1;
    for (std::size_t i = 0; i < dimension(); ++i) {
        const Int& x = a.coords[i];
        if (i >= factors_.size()) {
            if (x != 0) return std::nullopt;
            continue;
        }
        Int d = factors_[i];
        n = lcm(n, d / gcd(x, d));
    }
    return n;
}

IntMatrix FgGroup::relations() const {
    IntMatrix r(factors_.size(), dimension());
    for (std::size_t i = 0; i < factors_.size(); ++i) r(i, i) = factors_[i];
    return r;
}

std::vector<Element> FgGroup::elements() const {
    if (!is_finite()) throw DomainError("cannot enumerate the infinite group " + to_string());
    std::vector<Element> out;
    IntVector c(dimension());
    for (;;) {
        out.push_back(Element{c});
        std::size_t i = c.size();
        while (i > 0) {
            --i;
            if (++c[i] < factors_[i]) break;
            c[i] = 0;
            if (i == 0) return out;
        }
        if (c.empty()) return out;
    }
}

std::string FgGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& d : factors_) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    if (free_rank_ > 0) {
        if (!first) os << " + ";
        os << "Z";
        if (free_rank_ > 1) os << "^" << free_rank_;
    }
    return os.str();
}

Order element_order(const Element& a, const FgGroup& group) { return group.order_of(a); }

// ---------------------------------------------------------------------------
// Presentations

Element PresentedGroup::to_canonical(std::span<const Int> coords) const {
    return group.element(multiply(coords, to_group));
}

IntVector PresentedGroup::from_canonical(const Element& a) const { return multiply(a.coords, from_group); }

PresentedGroup present(const IntMatrix& relations, std::size_t ngens) {
    if (relations.cols() != ngens)
        throw DomainError("relation matrix has " + std::to_string(relations.cols()) + " columns, expected " +
                          std::to_string(ngens));
    SmithForm snf = smith_normal_form(relations);
    std::vector<Int> factors;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < snf.rank; ++i) {
        if (snf.s(i, i) == 1) continue;
        factors.push_back(snf.s(i, i));
        kept.push_back(i);
    }
    for (std::size_t i = snf.rank; i < ngens; ++i) kept.push_back(i);
    FgGroup g(std::move(factors), ngens - snf.rank);

    IntMatrix to(ngens, kept.size());
    IntMatrix from(kept.size(), ngens);
    for (std::size_t j = 0; j < kept.size(); ++j) {
        for (std::size_t i = 0; i < ngens; ++i) {
            to(i, j) = snf.v(i, kept[j]);
            from(j, i) = snf.v_inverse(kept[j], i);
        }
    }
    // Reduce the torsion columns of `to` so images are small.
    for (std::size_t j = 0; j < g.torsion_rank(); ++j)
        for (std::size_t i = 0; i < ngens; ++i) to(i, j) = floor_mod(to(i, j), g.modulus(j));
    return PresentedGroup{std::move(g), std::move(to), std::move(from)};
}

FgGroup group_from_presentation(const IntMatrix& rel, std::size_t ngens) { return present(rel, ngens).group; }

PresentedGroup present_cyclic_sum(std::span<const Int> moduli) {
    IntMatrix rel(0, moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] == 0) continue;
        IntVector row(moduli.size());
        row[i] = abs(moduli[i]);
        rel.append_row(row);
    }
    return present(rel, moduli.size());
}

bool is_isomorphic(const FgGroup& a, const FgGroup& b) { return a == b; }

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(FgGroup ambient, HermiteForm lattice) : ambient_(std::move(ambient)), lattice_(std::move(lattice)) {}

Subgroup Subgroup::from_lattice_rows(const FgGroup& ambient, const IntMatrix& rows) {
    return Subgroup(ambient, hermite_normal_form(stack(rows, ambient.relations())));
}

Subgroup::Subgroup(const FgGroup& ambient, std::span<const Element> generators) : ambient_(ambient) {
    IntMatrix rows(0, ambient.dimension());
    for (const auto& g : generators) {
        if (g.coords.size() != ambient.dimension())
            throw MembershipError("generator does not belong to " + ambient.to_string());
        rows.append_row(g.coords);
    }
    lattice_ = hermite_normal_form(stack(rows, ambient.relations()));
}

Subgroup Subgroup::zero(const FgGroup& ambient) { return Subgroup(ambient, std::span<const Element>{}); }

Subgroup Subgroup::whole(const FgGroup& ambient) {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < ambient.dimension(); ++i) gens.push_back(ambient.generator(i));
    return Subgroup(ambient, gens);
}

bool Subgroup::contains(const Element& a) const {
    if (a.coords.size() != ambient_.dimension()) return false;
    return lattice_coordinates(lattice_, a.coords).has_value();
}

std::vector<Element> Subgroup::generators() const {
    std::vector<Element> out;
    const Element z = ambient_.zero();
    for (std::size_t r = 0; r < lattice_.rank(); ++r) {
        Element e = ambient_.element(lattice_.basis.row_vector(r));
        if (e != z) out.push_back(std::move(e));
    }
    return out;
}

Order Subgroup::order() const {
    if (lattice_.rank() > ambient_.torsion_rank()) return std::nullopt;
    Int n = 1;
    for (std::size_t i = 0; i < ambient_.torsion_rank(); ++i) n *= ambient_.modulus(i);
    Int det = 1;
    for (std::size_t r = 0; r < lattice_.rank(); ++r) det *= lattice_.basis(r, lattice_.pivots[r]);
    return n / det;
}

bool Subgroup::is_trivial() const {
    auto o = order();
    return o && *o == 1;
}

bool Subgroup::is_whole() const { return *this == whole(ambient_); }

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
    if (!(ambient_ == other.ambient_)) return false;
    for (std::size_t r = 0; r < lattice_.rank(); ++r)
        if (!lattice_coordinates(other.lattice_, lattice_.basis.row(r))) return false;
    return true;
}

Order Subgroup::index_in(const Subgroup& bigger) const {
    if (!is_subgroup_of(bigger)) throw DomainError("index_in: not a subgroup of the given subgroup");
    if (lattice_.rank() != bigger.lattice_.rank()) return std::nullopt;
    Int small_det = 1;
    Int big_det = 1;
    for (std::size_t r = 0; r < lattice_.rank(); ++r) {
        small_det *= lattice_.basis(r, lattice_.pivots[r]);
        big_det *= bigger.lattice_.basis(r, bigger.lattice_.pivots[r]);
    }
    return small_det / big_det;
}

std::vector<Element> Subgroup::elements() const {
    if (!order()) throw DomainError("cannot enumerate an infinite subgroup");
    const auto gens = generators();
    std::set<Element> seen{ambient_.zero()};
    std::deque<Element> queue{ambient_.zero()};
    while (!queue.empty()) {
        Element x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            Element y = ambient_.add(x, g);
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return {seen.begin(), seen.end()};
}

bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ambient_ == b.ambient_ && a.lattice_.basis == b.lattice_.basis;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
    const IntMatrix& x = a.lattice_.basis;
    const IntMatrix& y = b.lattice_.basis;
    if (x.rows() != y.rows()) return x.rows() < y.rows();
    if (x.cols() != y.cols()) return x.cols() < y.cols();
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) {
            int k = cmp(x(r, c), y(r, c));
            if (k != 0) return k < 0;
        }
    return false;
}

Subgroup subgroup_from_generators(const FgGroup& m, std::span<const Element> gens) {
    for (const auto& g : gens)
        if (g.coords.size() != m.dimension())
            throw MembershipError("generator does not belong to " + m.to_string());
    return Subgroup(m, gens);
}

Subgroup sum(const Subgroup& a, const Subgroup& b) {
    if (!(a.ambient_ == b.ambient_)) throw MembershipError("sum of subgroups of different groups");
    return Subgroup(a.ambient_, hermite_normal_form(stack(a.lattice_.basis, b.lattice_.basis)));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
    if (!(a.ambient_ == b.ambient_)) throw MembershipError("intersection of subgroups of different groups");
    return Subgroup(a.ambient_, lattice_intersection(a.lattice_.basis, b.lattice_.basis));
}

Subgroup multiple(const Int& n, const Subgroup& h) {
    IntMatrix rows = h.lattice_.basis;
    for (std::size_t r = 0; r < rows.rows(); ++r)
        for (auto& v : rows.row(r)) v *= n;
    return Subgroup::from_lattice_rows(h.ambient_, rows);
}

Subgroup annihilator(const FgGroup& m, const Int& n) {
    IntMatrix rows(0, m.dimension());
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        IntVector row(m.dimension());
        if (i < m.torsion_rank()) {
            const Int& d = m.modulus(i);
            row[i] = d / gcd(d, n);
        } else if (n == 0) {
            row[i] = 1;
        } else {
            continue;
        }
        rows.append_row(row);
    }
    return Subgroup::from_lattice_rows(m, rows);
}

// ---------------------------------------------------------------------------
// Homomorphism

Homomorphism::Homomorphism(FgGroup source, FgGroup target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.dimension())
        throw DomainError("homomorphism needs one image per generator of " + source_.to_string());
    for (std::size_t j = 0; j < images_.size(); ++j) {
        images_[j] = target_.element(images_[j].coords);
        if (j < source_.torsion_rank() && target_.scale(source_.modulus(j), images_[j]) != target_.zero())
            throw DomainError("image of generator " + std::to_string(j) + " does not respect its order " +
                              source_.modulus(j).get_str());
    }
}

Homomorphism Homomorphism::zero(const FgGroup& source, const FgGroup& target) {
    return Homomorphism(source, target, std::vector<Element>(source.dimension(), target.zero()));
}

Homomorphism Homomorphism::identity(const FgGroup& g) {
    std::vector<Element> imgs;
    for (std::size_t i = 0; i < g.dimension(); ++i) imgs.push_back(g.generator(i));
    return Homomorphism(g, g, std::move(imgs));
}

Element Homomorphism::apply(const Element& a) const {
    if (a.coords.size() != source_.dimension())
        throw MembershipError("element does not belong to the source " + source_.to_string());
    IntVector c(target_.dimension());
    for (std::size_t j = 0; j < images_.size(); ++j) {
        if (a.coords[j] == 0) continue;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += a.coords[j] * images_[j].coords[i];
    }
    return target_.element(std::move(c));
}

Subgroup Homomorphism::image(const Subgroup& h) const {
    if (!(h.ambient() == source_)) throw MembershipError("subgroup does not live in the source group");
    std::vector<Element> gens;
    for (const auto& g : h.generators()) gens.push_back(apply(g));
    return Subgroup(target_, gens);
}

Subgroup Homomorphism::image() const { return Subgroup(target_, images_); }

Subgroup Homomorphism::kernel() const {
    const std::size_t n = source_.dimension();
    IntMatrix img(0, target_.dimension());
    for (const auto& e : images_) img.append_row(e.coords);
    IntMatrix k = left_kernel(stack(img, target_.relations()));
    std::vector<Element> gens;
    for (std::size_t r = 0; r < k.rows(); ++r) {
        auto row = k.row(r);
        gens.push_back(source_.element(IntVector(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n))));
    }
    return Subgroup(source_, gens);
}

bool Homomorphism::is_injective() const { return kernel().is_trivial(); }

std::optional<Element> preimage(const Homomorphism& f, const Element& b) {
    const FgGroup& t = f.target();
    if (b.coords.size() != t.dimension()) throw MembershipError("preimage: element does not belong to the target");
    IntMatrix img(0, t.dimension());
    for (const auto& e : f.images()) img.append_row(e.coords);
    auto x = solve_row_combination(stack(img, t.relations()), b.coords);
    if (!x) return std::nullopt;
    x->resize(f.source().dimension());
    return f.source().element(std::move(*x));
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
    if (!(f.target() == g.source())) throw DomainError("compose: target/source mismatch");
    std::vector<Element> imgs;
    for (const auto& e : f.images()) imgs.push_back(g.apply(e));
    return Homomorphism(f.source(), g.target(), std::move(imgs));
}

// ---------------------------------------------------------------------------
// Quotients, substructures, sums and powers

QuotientMap quotient_map(const FgGroup& m, const Subgroup& h) {
    if (!(h.ambient() == m)) throw MembershipError("quotient: subgroup does not live in " + m.to_string());
    PresentedGroup p = present(h.canonical_basis(), m.dimension());
    std::vector<Element> imgs;
    for (std::size_t j = 0; j < m.dimension(); ++j) imgs.push_back(p.group.element(p.to_group.row_vector(j)));
    FgGroup q = p.group;
    return QuotientMap{q, Homomorphism(m, std::move(q), std::move(imgs))};
}

FgGroup quotient(const FgGroup& m, const Subgroup& h) { return quotient_map(m, h).group; }

SubgroupStructure subgroup_structure(const Subgroup& h) {
    const FgGroup& m = h.ambient();
    const IntMatrix& basis = h.canonical_basis();
    IntMatrix rel(0, basis.rows());
    IntMatrix ambient_rel = m.relations();
    for (std::size_t r = 0; r < ambient_rel.rows(); ++r) {
        auto c = lattice_coordinates(h.lattice(), ambient_rel.row(r));
        if (!c) throw DomainError("internal: subgroup lattice does not contain the relations");
        rel.append_row(*c);
    }
    PresentedGroup p = present(rel, basis.rows());
    std::vector<Element> imgs;
    for (std::size_t j = 0; j < p.group.dimension(); ++j)
        imgs.push_back(m.element(multiply(p.from_group.row(j), basis)));
    FgGroup g = p.group;
    return SubgroupStructure{g, Homomorphism(std::move(g), m, std::move(imgs))};
}

DirectSum direct_sum(const FgGroup& a, const FgGroup& b) {
    std::vector<Int> moduli;
    for (std::size_t i = 0; i < a.dimension(); ++i) moduli.push_back(a.modulus(i));
    for (std::size_t i = 0; i < b.dimension(); ++i) moduli.push_back(b.modulus(i));
    PresentedGroup p = present_cyclic_sum(moduli);
    const FgGroup& s = p.group;

    std::vector<Element> in_a, in_b, pr_a, pr_b;
    for (std::size_t i = 0; i < a.dimension(); ++i) in_a.push_back(s.element(p.to_group.row_vector(i)));
    for (std::size_t i = 0; i < b.dimension(); ++i)
        in_b.push_back(s.element(p.to_group.row_vector(a.dimension() + i)));
    for (std::size_t j = 0; j < s.dimension(); ++j) {
        auto row = p.from_group.row(j);
        pr_a.push_back(a.element(IntVector(row.begin(), row.begin() + a.dimension())));
        pr_b.push_back(b.element(IntVector(row.begin() + a.dimension(), row.end())));
    }
    return DirectSum{s, Homomorphism(a, s, in_a), Homomorphism(b, s, in_b), Homomorphism(s, a, pr_a),
                     Homomorphism(s, b, pr_b)};
}

FgGroup power(const FgGroup& m, std::size_t n) {
    std::vector<Int> factors;
    for (const auto& d : m.invariant_factors())
        for (std::size_t i = 0; i < n; ++i) factors.push_back(d);
    return FgGroup(std::move(factors), m.free_rank() * n);
}

Element tuple_element(const FgGroup& m, std::span<const Element> components) {
    const std::size_t n = components.size();
    IntVector c(m.dimension() * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (components[i].coords.size() != m.dimension())
            throw MembershipError("tuple component does not belong to " + m.to_string());
        for (std::size_t k = 0; k < m.dimension(); ++k) c[k * n + i] = components[i].coords[k];
    }
    return power(m, n).element(std::move(c));
}

std::vector<Element> split_tuple(const FgGroup& m, std::size_t n, const Element& tuple) {
    if (tuple.coords.size() != m.dimension() * n) throw MembershipError("tuple has the wrong length");
    std::vector<Element> out(n, m.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m.dimension(); ++k) out[i].coords[k] = tuple.coords[k * n + i];
    for (auto& e : out) e = m.element(std::move(e.coords));
    return out;
}

Subgroup power_subgroup(const Subgroup& h, std::size_t n) {
    const FgGroup& m = h.ambient();
    std::vector<Element> gens;
    for (const auto& g : h.generators())
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Element> comps(n, m.zero());
            comps[i] = g;
            gens.push_back(tuple_element(m, comps));
        }
    return Subgroup(power(m, n), gens);
}

Homomorphism power_map(const Homomorphism& f, std::size_t n) {
    const FgGroup& s = f.source();
    const FgGroup& t = f.target();
    std::vector<Element> imgs(s.dimension() * n);
    for (std::size_t k = 0; k < s.dimension(); ++k)
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Element> comps(n, t.zero());
            comps[i] = f.images()[k];
            imgs[k * n + i] = tuple_element(t, comps);
        }
    return Homomorphism(power(s, n), power(t, n), std::move(imgs));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& current,
                std::vector<std::vector<unsigned>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (unsigned part = std::min(n, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions(n - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<FgGroup> groups_of_order(const Int& n) {
    if (n < 1) throw DomainError("group order must be positive");
    // Each prime contributes a partition of its exponent (parts descending).
    std::vector<std::pair<Int, std::vector<std::vector<unsigned>>>> choices;
    for (const auto& [p, e] : factorize(n)) {
        std::vector<std::vector<unsigned>> parts;
        std::vector<unsigned> cur;
        partitions(e, e, cur, parts);
        choices.emplace_back(p, std::move(parts));
    }
    std::vector<FgGroup> out;
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
        std::size_t width = 0;
        for (std::size_t i = 0; i < choices.size(); ++i) width = std::max(width, choices[i].second[pick[i]].size());
        std::vector<Int> factors(width, 1);
        for (std::size_t i = 0; i < choices.size(); ++i) {
            const auto& part = choices[i].second[pick[i]];
            // Largest part goes to the last invariant factor.
            for (std::size_t j = 0; j < part.size(); ++j) factors[width - 1 - j] *= power(choices[i].first, part[j]);
        }
        out.emplace_back(std::move(factors), 0);
        std::size_t i = 0;
        for (; i < choices.size(); ++i) {
            if (++pick[i] < choices[i].second.size()) break;
            pick[i] = 0;
        }
        if (i == choices.size()) break;
    }
    return out;
}

std::vector<FgGroup> groups_up_to_order(const Int& max_order) {
    std::vector<FgGroup> out;
    for (Int n = 1; n <= max_order; ++n) {
        auto g = groups_of_order(n);
        out.insert(out.end(), g.begin(), g.end());
    }
    return out;
}

std::vector<Subgroup> all_subgroups(const FgGroup& m) {
    if (!m.is_finite()) throw DomainError("all_subgroups needs a finite group");
    std::set<Subgroup> cyclic;
    for (const auto& g : m.elements()) cyclic.insert(Subgroup(m, std::span<const Element>(&g, 1)));

    std::set<Subgroup> seen{Subgroup::zero(m)};
    std::deque<Subgroup> queue{Subgroup::zero(m)};
    while (!queue.empty()) {
        Subgroup s = std::move(queue.front());
        queue.pop_front();
        for (const auto& c : cyclic) {
            if (c.is_subgroup_of(s)) continue;
            Subgroup t = sum(s, c);
            if (seen.insert(t).second) queue.push_back(std::move(t));
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace pptor
