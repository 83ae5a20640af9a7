#pragma once

#include "pptor/integer.hpp"
#include "pptor/matrix.hpp"
#include "pptor/normal_form.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pptor {

/// Coordinates of an element with respect to the invariant-factor generators of
/// its group. Torsion coordinates live in [0, d_i); free coordinates are plain integers.
struct Element {
    IntVector coords;

    friend bool operator==(const Element&, const Element&) = default;
    friend std::strong_ordering operator<=>(const Element& a, const Element& b);
};

/// Order of an element or group; nullopt stands for infinity.
using Order = std::optional<Int>;

std::string format_order(const Order& order);

/// Finitely generated abelian group Z/d1 + ... + Z/dk + Z^r with d1 | d2 | ... | dk, di >= 2.
class FgGroup {
public:
    FgGroup() = default;
    FgGroup(std::vector<Int> invariant_factors, std::size_t free_rank);

    static FgGroup cyclic(const Int& n);  // n == 0 gives Z, n == 1 the trivial group
    static FgGroup free_abelian(std::size_t rank);

    const std::vector<Int>& invariant_factors() const { return factors_; }
    std::size_t torsion_rank() const { return factors_.size(); }
    std::size_t free_rank() const { return free_rank_; }
    std::size_t dimension() const { return factors_.size() + free_rank_; }
    /// d_i for torsion coordinates, 0 for free ones.
    Int modulus(std::size_t i) const;

    bool is_trivial() const { return dimension() == 0; }
    bool is_torsion() const { return free_rank_ == 0; }
    bool is_finite() const { return free_rank_ == 0; }
    Order order() const;
    /// Exponent of the torsion subgroup (1 when it is trivial).
    Int torsion_exponent() const;

    Element zero() const;
    Element generator(std::size_t i) const;
    /// Reduces torsion coordinates; throws MembershipError on a length mismatch.
    Element element(IntVector coords) const;
    bool contains(const Element& a) const;

    Element add(const Element& a, const Element& b) const;
    Element subtract(const Element& a, const Element& b) const;
    Element negate(const Element& a) const;
    Element scale(const Int& n, const Element& a) const;
    Order order_of(const Element& a) const;

    /// Relation lattice: one row d_i * e_i per torsion coordinate.
    IntMatrix relations() const;

    /// All elements in mixed-radix order; finite groups only.
    std::vector<Element> elements() const;

    /// "Z/2 + Z/4 + Z^2", or "0" for the trivial group.
    std::string to_string() const;

    friend bool operator==(const FgGroup&, const FgGroup&) = default;

private:
    void check(const Element& a) const;

    std::vector<Int> factors_;
    std::size_t free_rank_ = 0;
};

Order element_order(const Element& a, const FgGroup& group);

/// Z^ngens modulo the row span of `relations`, with coordinate maps both ways.
struct PresentedGroup {
    FgGroup group;
    IntMatrix to_group;    // ngens x dim: presentation generator i maps to row i
    IntMatrix from_group;  // dim x ngens: invariant generator j lifts to row j

    Element to_canonical(std::span<const Int> coords) const;
    IntVector from_canonical(const Element& a) const;
};

/// Relations are the rows of `relations` (each of width ngens).
PresentedGroup present(const IntMatrix& relations, std::size_t ngens);

/// Invariant-factor form of Z^ngens / <rows of rel>; unit factors are dropped.
FgGroup group_from_presentation(const IntMatrix& rel, std::size_t ngens);

/// Presentation of a direct sum of cyclic groups Z/m_i (m_i == 0 meaning Z).
PresentedGroup present_cyclic_sum(std::span<const Int> moduli);

bool is_isomorphic(const FgGroup& a, const FgGroup& b);

/// Subgroup stored as the Hermite basis of its preimage lattice in Z^n (the
/// generators stacked over the ambient relations), which is unique per subgroup.
class Subgroup {
public:
    Subgroup(const FgGroup& ambient, std::span<const Element> generators);

    static Subgroup zero(const FgGroup& ambient);
    static Subgroup whole(const FgGroup& ambient);

    const FgGroup& ambient() const { return ambient_; }
    const HermiteForm& lattice() const { return lattice_; }
    const IntMatrix& canonical_basis() const { return lattice_.basis; }

    bool contains(const Element& a) const;
    /// Reduced nonzero lattice rows; they generate the subgroup.
    std::vector<Element> generators() const;
    Order order() const;
    bool is_trivial() const;
    bool is_whole() const;
    bool is_subgroup_of(const Subgroup& other) const;
    /// Index of *this in `bigger`; requires *this <= bigger.
    Order index_in(const Subgroup& bigger) const;
    /// All elements; finite subgroups only.
    std::vector<Element> elements() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b);
    friend bool operator<(const Subgroup& a, const Subgroup& b);

private:
    Subgroup(FgGroup ambient, HermiteForm lattice);
    static Subgroup from_lattice_rows(const FgGroup& ambient, const IntMatrix& rows);

    friend Subgroup sum(const Subgroup&, const Subgroup&);
    friend Subgroup intersection(const Subgroup&, const Subgroup&);
    friend Subgroup multiple(const Int&, const Subgroup&);
    friend Subgroup annihilator(const FgGroup&, const Int&);

    FgGroup ambient_;
    HermiteForm lattice_;
};

Subgroup subgroup_from_generators(const FgGroup& m, std::span<const Element> gens);
Subgroup sum(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// n * H
Subgroup multiple(const Int& n, const Subgroup& h);
/// M[n] = { x : n x = 0 }
Subgroup annihilator(const FgGroup& m, const Int& n);

/// Group homomorphism given by the images of the invariant-factor generators.
class Homomorphism {
public:
    /// Throws DomainError when d_j * image_j != 0 for a torsion generator.
    Homomorphism(FgGroup source, FgGroup target, std::vector<Element> images);

    static Homomorphism zero(const FgGroup& source, const FgGroup& target);
    static Homomorphism identity(const FgGroup& g);

    const FgGroup& source() const { return source_; }
    const FgGroup& target() const { return target_; }
    const std::vector<Element>& images() const { return images_; }

    Element apply(const Element& a) const;
    Subgroup image(const Subgroup& h) const;
    Subgroup image() const;
    Subgroup kernel() const;
    bool is_injective() const;

    friend bool operator==(const Homomorphism&, const Homomorphism&) = default;

private:
    FgGroup source_;
    FgGroup target_;
    std::vector<Element> images_;
};

/// Some x with f(x) = b, if b lies in the image.
std::optional<Element> preimage(const Homomorphism& f, const Element& b);

/// g after f
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);

/// Quotient M/H in invariant-factor form together with the projection.
struct QuotientMap {
    FgGroup group;
    Homomorphism projection;
};

QuotientMap quotient_map(const FgGroup& m, const Subgroup& h);
FgGroup quotient(const FgGroup& m, const Subgroup& h);

/// H as an abstract group with its inclusion into the ambient group.
struct SubgroupStructure {
    FgGroup group;
    Homomorphism embedding;
};

SubgroupStructure subgroup_structure(const Subgroup& h);

struct DirectSum {
    FgGroup group;
    Homomorphism inject_left;
    Homomorphism inject_right;
    Homomorphism project_left;
    Homomorphism project_right;
};

DirectSum direct_sum(const FgGroup& a, const FgGroup& b);

/// M^n laid out so that coordinate c*n + i holds coordinate c of the i-th
/// component; this layout is already in invariant-factor form.
FgGroup power(const FgGroup& m, std::size_t n);
Element tuple_element(const FgGroup& m, std::span<const Element> components);
std::vector<Element> split_tuple(const FgGroup& m, std::size_t n, const Element& tuple);
/// H^n inside M^n for H <= M.
Subgroup power_subgroup(const Subgroup& h, std::size_t n);
/// Coordinatewise f^n : M^n -> N^n.
Homomorphism power_map(const Homomorphism& f, std::size_t n);

/// Every abelian group of order n, in a deterministic order.
std::vector<FgGroup> groups_of_order(const Int& n);
/// Every abelian group of order 1..max_order.
std::vector<FgGroup> groups_up_to_order(const Int& max_order);

/// Every subgroup of a finite group, sorted canonically.
std::vector<Subgroup> all_subgroups(const FgGroup& m);

}  // namespace pptor
