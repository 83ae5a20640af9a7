#pragma once

#include "pptor/cardinal.hpp"
#include "pptor/formula.hpp"
#include "pptor/group.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace pptor::verify {

/// Portable draws on top of mt19937_64 (whose output sequence is fixed by the
/// standard, unlike the std distributions).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish integer in [lo, hi].
    long between(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool chance(unsigned percent) { return engine_() % 100 < percent; }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(between(0, static_cast<long>(v.size()) - 1))]; }

private:
    std::mt19937_64 engine_;
};

struct FormulaShape {
    std::size_t min_free = 1;
    std::size_t max_free = 2;
    std::size_t max_bound = 3;
    std::size_t min_equations = 1;
    std::size_t max_equations = 2;
    long max_coef = 5;
};

/// Canonical text of a random formula (printing it again gives the same string).
std::string random_formula_text(Rng& rng, const FormulaShape& shape);
PpFormula random_formula(Rng& rng, const FormulaShape& shape);

/// Random finitely generated group with at most `max_factors` cyclic factors
/// of size <= max_modulus and free rank <= max_free_rank.
FgGroup random_group(Rng& rng, std::size_t max_factors, long max_modulus, std::size_t max_free_rank);
Element random_element(Rng& rng, const FgGroup& m, long free_range = 5);

/// Random cardinal expression of depth <= depth. Exponents are kept to atoms
/// or shallow infinite terms so finite towers stay small.
CardinalExpr random_cardinal(Rng& rng, unsigned depth);

}  // namespace pptor::verify
