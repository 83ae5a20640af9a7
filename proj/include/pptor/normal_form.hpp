#pragma once

#include "pptor/matrix.hpp"

#include <optional>
#include <vector>

namespace pptor {

/// U * A * V == S with U, V unimodular and S diagonal, s1 | s2 | ... | sr, si > 0.
/// v_inverse is V^{-1}, kept alongside so presentations can be mapped both ways.
struct SmithForm {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
    IntMatrix v_inverse;
    std::size_t rank = 0;

    /// Nonzero diagonal entries of S.
    std::vector<Int> invariant_factors() const;
};

/// Pivot choice is deterministic: the nonzero entry of least absolute value,
/// ties broken by lowest row then lowest column.
SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of the row lattice of A: echelon rows with
/// positive pivots and entries above each pivot reduced into [0, pivot).
/// The reduced basis is unique for the lattice.
struct HermiteForm {
    IntMatrix basis;                   // rank x cols
    std::vector<std::size_t> pivots;   // pivot column of each basis row
    IntMatrix transform;               // T with T*A = [basis; 0] (only when requested)

    std::size_t rank() const { return basis.rows(); }
};

HermiteForm hermite_normal_form(const IntMatrix& a, bool with_transform = false);

/// Integer c with c * basis == v, for a basis in Hermite form; nullopt when v is
/// outside the row lattice.
std::optional<IntVector> lattice_coordinates(const HermiteForm& h, std::span<const Int> v);

/// Integer x with x * gens == target for an arbitrary generating matrix.
std::optional<IntVector> solve_row_combination(const IntMatrix& gens, std::span<const Int> target);

/// Basis (as rows) of { w : w * A == 0 }.
IntMatrix left_kernel(const IntMatrix& a);

/// Basis (as rows) of { x : A * x == 0 }.
IntMatrix right_kernel(const IntMatrix& a);

/// Hermite basis of the intersection of two row lattices in the same ambient space.
HermiteForm lattice_intersection(const IntMatrix& a, const IntMatrix& b);

}  // namespace pptor
