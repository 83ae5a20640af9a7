#include "pptor/verify/facts.hpp"

namespace pptor::verify {

const std::vector<CardinalFact>& curated_cardinal_facts() {
    using R = Relation;
    const TriBool T = TriBool::True, F = TriBool::False, U = TriBool::Unknown;
    static const std::vector<CardinalFact> facts = {
        {"aleph0", R::Less, "2^aleph0", T, "Cantor"},
        {"beth(w)", R::Less, "beth(w)^aleph0", T, "König, cf(beth_w) = aleph0"},
        {"aleph1", R::Equal, "2^aleph0", U, "continuum hypothesis"},
        {"aleph1", R::LessEqual, "2^aleph0", T, "2^aleph0 is uncountable"},
        {"aleph2", R::LessEqual, "2^aleph0", U, "CH and 2^aleph0 = aleph2 are both consistent"},
        {"2^aleph0", R::Equal, "aleph(w)", F, "König, cf(2^aleph0) > aleph0"},
        {"aleph(w)", R::Less, "aleph(w)^aleph0", T, "König"},
        {"aleph(w)", R::LessEqual, "beth(w)", T, "aleph_a <= beth_a"},
        {"aleph(w)", R::Equal, "beth(w)", U, "GCH against 2^aleph0 = aleph(w+1)"},
        {"2^aleph0", R::Less, "beth(w)", T, "beth1 < beth_w"},
        {"2^2^aleph0", R::Equal, "beth2", T, "beth recursion"},
        {"(2^aleph0)^aleph0", R::Equal, "2^aleph0", T, "exponent law"},
        {"aleph0^aleph0", R::Equal, "2^aleph0", T, "2 <= aleph0 <= 2^aleph0"},
        {"aleph1^aleph0", R::Equal, "2^aleph0", T, "Hausdorff formula"},
        {"aleph2^aleph0", R::Equal, "aleph2", U, "holds iff 2^aleph0 <= aleph2"},
        {"aleph1", R::Less, "aleph2", T, "aleph index"},
        {"aleph0 + aleph1", R::Equal, "aleph1", T, "infinite sum"},
        {"aleph1 * aleph1", R::Equal, "aleph1", T, "infinite product"},
        {"3^aleph0", R::Equal, "2^aleph0", T, "2 <= 3 <= 2^aleph0"},
        {"2^aleph1", R::Equal, "2^aleph0", U, "Luzin's hypothesis"},
        {"2^aleph0", R::Less, "2^aleph1", U, "Luzin's hypothesis"},
        {"aleph1", R::Less, "2^aleph1", T, "Cantor"},
        {"beth(w)^aleph0", R::Equal, "beth(w)", F, "König"},
        {"aleph(w)", R::Less, "beth(w)", U, "GCH against its failure"},
        {"2^aleph0", R::Less, "aleph(w)", U, "2^aleph0 = aleph1 or aleph(w+1)"},
        {"beth(w)", R::Less, "2^beth(w)", T, "Cantor"},
        {"aleph0", R::Equal, "aleph0 * 5", T, "finite multiple"},
        {"aleph(w)", R::LessEqual, "2^aleph0", U, "2^aleph0 = aleph1 or aleph(w+1)"},
        {"beth(w)", R::LessEqual, "aleph(w)", U, "GCH against its failure"},
        {"aleph3", R::Less, "beth(w)", T, "aleph3 <= beth3 < beth_w"},
    };
    return facts;
}

const std::vector<PatternCase>& order_pattern_table() {
    using P = PatternClass;
    static const std::vector<PatternCase> table = {
        {{2, FinitelySupported{}}, P::Zero, 0},
        {{3, FinitelySupported{{0, 0, 0}}}, P::Zero, 0},
        {{2, EventuallyConstant{{0, 0}, 0}}, P::Zero, 0},
        {{5, LinearGrowth{0, 0, 1}}, P::Zero, 0},
        {{2, FinitelySupported{{1}}}, P::Bounded, 1},
        {{2, FinitelySupported{{1, 2, 3}}}, P::Bounded, 3},
        {{3, FinitelySupported{{0, 2, 1, 4}}}, P::Bounded, 4},
        {{2, EventuallyConstant{{}, 1}}, P::Bounded, 1},
        {{3, EventuallyConstant{{1, 2}, 2}}, P::Bounded, 2},
        {{2, EventuallyConstant{{1, 0, 3}, 3}}, P::Bounded, 3},
        {{7, EventuallyConstant{{}, 1}}, P::Bounded, 1},
        {{2, LinearGrowth{0, 2, 2}}, P::Bounded, 2},
        {{5, LinearGrowth{0, 3, 5}}, P::Bounded, 3},
        {{3, EventuallyConstant{{1, 1, 1, 1, 5}, 2}}, P::Bounded, 5},
        {{2, LinearGrowth{1, 0, 1}}, P::Unbounded, 24},
        {{2, LinearGrowth{1, -3, 4}}, P::Unbounded, 21},
        {{3, LinearGrowth{1, -1, 1}}, P::Unbounded, 23},
        {{5, LinearGrowth{1, 0, 10}}, P::Unbounded, 24},
        {{2, LinearGrowth{1, -5, 6}}, P::Unbounded, 19},
        {{11, LinearGrowth{1, -2, 3}}, P::Unbounded, 22},
    };
    return table;
}

Truncation truncate_pattern(const OrderPattern& pattern, unsigned n) {
    std::vector<Int> moduli;
    IntVector coords;
    for (unsigned k = 1; k <= n; ++k) {
        moduli.push_back(power(pattern.p, k));
        coords.push_back(power(pattern.p, k - pattern_exponent(pattern, k)));
    }
    PresentedGroup g = present_cyclic_sum(moduli);
    return {g.group, g.to_canonical(coords)};
}

}  // namespace pptor::verify
