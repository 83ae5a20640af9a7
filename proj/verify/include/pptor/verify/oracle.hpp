#pragma once

#include "pptor/formula.hpp"
#include "pptor/group.hpp"

#include <optional>

namespace pptor::verify {

/// Rank over Q by plain Gaussian elimination on rationals.
std::size_t rational_rank(const IntMatrix& a);

/// Independent answer for psi[Z] = dZ (one free variable): psi is low iff the
/// free column is outside the rational span of the bound columns; otherwise d
/// is found by trying a = 1..B where B bounds a nonzero maximal minor of D.
struct LowAnswer {
    bool low;
    Int generator;  // 0 when low
    Int search_bound;
};

LowAnswer low_oracle(const PpFormula& f);

}  // namespace pptor::verify
