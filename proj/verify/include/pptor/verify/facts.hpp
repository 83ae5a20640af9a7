#pragma once

#include "pptor/cardinal.hpp"
#include "pptor/purity.hpp"

#include <vector>

namespace pptor::verify {

/// A statement about cardinals with its status in ZFC: True for a theorem,
/// False for a refutable statement, Unknown for an independent one.
struct CardinalFact {
    const char* lhs;
    Relation relation;
    const char* rhs;
    TriBool status;
    const char* reason;
};

/// Thirty hand-checked statements (Cantor, König, CH, beth facts).
const std::vector<CardinalFact>& curated_cardinal_facts();

enum class PatternClass { Zero, Bounded, Unbounded };

/// An order pattern with its hand-derived class and the exponent of the order
/// of its truncation to the first 24 coordinates.
struct PatternCase {
    OrderPattern pattern;
    PatternClass expected;
    unsigned order_exponent_24;
};

const std::vector<PatternCase>& order_pattern_table();

/// (b_1, ..., b_n) with b_k = p^(k - e_k) in the sum of Z/p^k over k <= n.
struct Truncation {
    FgGroup group;
    Element element;
};
Truncation truncate_pattern(const OrderPattern& pattern, unsigned n);

}  // namespace pptor::verify
