#pragma once

#include "pptor/formula.hpp"
#include "pptor/group.hpp"

#include <cstdint>
#include <vector>

namespace pptor::verify {

/// A finite group Z/m_1 + ... + Z/m_k held in machine integers. Elements are
/// numbered in mixed radix (first coordinate fastest) with tables for + and
/// for multiplication by a residue of the exponent.
class SmallGroup {
public:
    explicit SmallGroup(const FgGroup& g);

    long size() const { return size_; }
    long exponent() const { return exponent_; }
    std::size_t rank() const { return moduli_.size(); }
    const std::vector<long>& moduli() const { return moduli_; }

    long add(long a, long b) const { return add_[static_cast<std::size_t>(a * size_ + b)]; }
    long scale(long k, long a) const;
    long neg(long a) const { return scale(-1, a); }
    long generator(std::size_t i) const;
    long order_of(long a) const;

    std::vector<long> decode(long a) const;
    long encode(const std::vector<long>& coords) const;
    long index_of(const Element& e) const;

private:
    std::vector<long> moduli_;
    long size_ = 1;
    long exponent_ = 1;
    std::vector<long> add_;
    std::vector<long> mul_;  // mul_[k * size + a] for 0 <= k < exponent
};

/// Membership bitmap over M^n (tuple index x_0 + |M| x_1 + ...) computed
/// straight from the formula's equations: the bound part D y ranges over a
/// subgroup of M^e built by closure, and x is accepted iff C x lies in it.
std::vector<bool> brute_force_solutions(const PpFormula& f, const FgGroup& m);

/// The same bitmap for a subgroup of power(m, n), enumerated by closure.
std::vector<bool> subgroup_bitmap(const Subgroup& s, const FgGroup& m, std::size_t n);

/// All homomorphisms as lists of generator images (element indices).
std::vector<std::vector<long>> all_homomorphisms(const SmallGroup& from, const SmallGroup& to);
long apply_hom(const SmallGroup& from, const SmallGroup& to, const std::vector<long>& images, long x);

/// reach[b1 * |N2| + b2] is set when some homomorphism N1 -> N2 that agrees
/// with the two parameter embeddings sends b1 to b2. The embeddings are given
/// as the images of the generators of M.
std::vector<bool> hom_reachability(const SmallGroup& n1, const SmallGroup& n2,
                                   const std::vector<std::vector<long>>& homs,
                                   const std::vector<long>& m_in_n1, const std::vector<long>& m_in_n2);

}  // namespace pptor::verify
