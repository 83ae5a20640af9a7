#include "pptor/chain.hpp"
#include "pptor/error.hpp"
#include "pptor/ppsolve.hpp"

#include <gtest/gtest.h>

using namespace pptor;

namespace {

std::vector<Int> orders(const ChainEvaluation& e) {
    std::vector<Int> out;
    for (const auto& s : e.levels) out.push_back(*s.order());
    return out;
}

std::vector<Int> ints(std::initializer_list<long> l) { return {l.begin(), l.end()}; }

}  // namespace

TEST(Chain, PowersOfTwoOnZ8) {
    FormulaChain c = chain_from_template("E y . x = 2^{n}*y");
    EXPECT_FALSE(c.low_head);
    FgGroup z8 = FgGroup::cyclic(8);
    ChainEvaluation e = evaluate_chain(c, z8, 4);
    EXPECT_EQ(orders(e), ints({8, 4, 2, 1, 1}));
    EXPECT_TRUE(e.levels[1].contains(z8.element({Int(6)})));
    EXPECT_TRUE(e.descending);
    EXPECT_EQ(stabilization_index(e), 3u);
}

TEST(Chain, ConstantAndTrivialChains) {
    FormulaChain zero = chain_from_template("x = 0");
    EXPECT_TRUE(zero.low_head);
    EXPECT_EQ(orders(evaluate_chain(zero, FgGroup::cyclic(12), 3)), ints({1, 1, 1, 1}));
    EXPECT_EQ(stabilization_index(zero, FgGroup::cyclic(12), 3), 0u);
    EXPECT_EQ(stabilization_index(chain_from_template("E y . x = 3^{n}*y"), FgGroup(), 2), 0u);
    EXPECT_FALSE(stabilization_index(zero, FgGroup::cyclic(12), 0).has_value());
}

TEST(Chain, NotFoundWhenStillMoving) {
    FormulaChain c = chain_from_template("E y . x = 2^{n}*y");
    EXPECT_FALSE(stabilization_index(c, FgGroup::cyclic(64), 4).has_value());
    EXPECT_EQ(stabilization_index(c, FgGroup::cyclic(64), 7), 6u);
}

TEST(Chain, NonDescendingFlagged) {
    ChainEvaluation e = evaluate_chain(chain_from_template("E y . x = {n}*y"), FgGroup::cyclic(12), 4);
    EXPECT_FALSE(e.descending);
    EXPECT_EQ(e.first_non_descent, 0u);
    EXPECT_THROW(level_indices(e), DomainError);
}

TEST(Chain, ArityChecked) {
    EXPECT_THROW(chain_from_template("x = {n}*t"), ArityError);
    EXPECT_THROW(chain_from_template("x = "), ParseError);
}

TEST(Chain, FiniteGroupsHaveTheDcc) {
    const char* templates[] = {"E y . x = 2^{n}*y", "E y . x = 6^{n}*y", "3*x = 0 & E y . x = 3^{n}*y",
                               "E y z . x = 2^{n}*y + 3^{n}*z & 4*x = 0"};
    for (const auto& m : groups_up_to_order(32)) {
        const auto bound = static_cast<unsigned>(all_subgroups(m).size());
        for (const char* t : templates) {
            FormulaChain c = chain_from_template(t);
            ChainEvaluation e = evaluate_chain(c, m, bound);
            ASSERT_TRUE(e.descending) << t;
            EXPECT_TRUE(stabilization_index(e).has_value()) << t << " on " << m.to_string();
        }
    }
}

TEST(WitnessChain, SmallExample) {
    WitnessChain w = witness_chain(2, 3, 1);
    EXPECT_TRUE(w.chain.low_head);
    EXPECT_EQ(w.group, FgGroup(ints({2, 4, 8}), 0));
    ChainEvaluation e = evaluate_chain(w.chain, w.group, 3);
    EXPECT_EQ(orders(e), ints({8, 4, 2, 1}));
}

TEST(WitnessChain, IndicesAndStabilization) {
    WitnessChain w = witness_chain(2, 8, 2);
    ChainEvaluation e = evaluate_chain(w.chain, w.group, 9);
    for (unsigned n = 0; n < 8; ++n) {
        EXPECT_EQ(level_indices(e)[n], Int(4));
        EXPECT_EQ(index(w.chain.at(n), w.chain.at(n + 1), w.group), Int(4));
    }
    EXPECT_EQ(stabilization_index(e), 8u);
}

TEST(WitnessChain, ClosedFormOrders) {
    for (long p : {2, 3, 5})
        for (unsigned m0 = 1; m0 <= 8; ++m0)
            for (unsigned k = 1; k <= 3; ++k) {
                WitnessChain w = witness_chain(p, m0, k);
                ChainEvaluation e = evaluate_chain(w.chain, w.group, m0);
                for (unsigned n = 0; n <= m0; ++n) {
                    // Socle of p^n B: one copy of Z/p per summand Z/p^m with m > n.
                    ASSERT_EQ(*e.levels[n].order(), power(p, k * (m0 - n)));
                    if (n < m0) ASSERT_FALSE(e.levels[n] == e.levels[n + 1]);
                }
            }
    EXPECT_THROW(witness_chain(4, 2, 1), DomainError);
    EXPECT_THROW(witness_chain(2, 0, 1), DomainError);
}

TEST(WitnessElements, PartialSums) {
    WitnessElements w = witness_b_elements(2, 3);
    ASSERT_EQ(w.a.size(), 3u);
    EXPECT_EQ(w.a[0], w.base.element(ints({1, 0, 0})));
    EXPECT_EQ(w.a[1], w.base.element(ints({0, 2, 0})));
    EXPECT_EQ(w.a[2], w.base.element(ints({0, 0, 4})));
    EXPECT_EQ(w.b[0], w.power.zero());
    EXPECT_EQ(split_tuple(w.base, 3, w.b[2]), (std::vector<Element>{w.a[0], w.a[1], w.base.zero()}));
}

TEST(WitnessElements, DifferencesSeparateLevels) {
    for (long p : {2, 3})
        for (unsigned m0 = 1; m0 <= 5; ++m0) {
            WitnessElements w = witness_b_elements(p, m0);
            WitnessChain c = witness_chain(p, m0, 1);
            std::vector<Subgroup> levels;
            for (unsigned n = 0; n <= m0; ++n) levels.push_back(evaluate(c.chain.at(n), w.power));
            for (unsigned n = 0; n < m0; ++n)
                for (unsigned m = n + 1; m <= m0; ++m) {
                    Element diff = w.power.subtract(w.b[m], w.b[n]);
                    EXPECT_TRUE(levels[n].contains(diff));
                    EXPECT_FALSE(levels[n + 1].contains(diff));
                }
            EXPECT_TRUE(levels[m0].contains(w.power.subtract(w.b[m0], w.b[m0])));
        }
}
