#include "pptor/error.hpp"
#include "pptor/group.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace pptor;

namespace {

FgGroup g(std::initializer_list<long> factors, std::size_t free_rank = 0) {
    std::vector<Int> f;
    for (long d : factors) f.emplace_back(d);
    return FgGroup(std::move(f), free_rank);
}

Element el(const FgGroup& m, std::initializer_list<long> coords) {
    IntVector c;
    for (long v : coords) c.emplace_back(v);
    return m.element(std::move(c));
}

}  // namespace

TEST(GroupFromPresentation, DiagonalTwoThreeIsCyclicSix) {
    EXPECT_EQ(group_from_presentation(IntMatrix{{2, 0}, {0, 3}}, 2), g({6}));
}

TEST(GroupFromPresentation, EmptyRelationsGiveFreeGroup) {
    EXPECT_EQ(group_from_presentation(IntMatrix(0, 1), 1), FgGroup::free_abelian(1));
}

TEST(GroupFromPresentation, SingleRelation) { EXPECT_EQ(group_from_presentation(IntMatrix{{4}}, 1), g({4})); }

TEST(GroupFromPresentation, CoordinateMapsAreInverse) {
    PresentedGroup p = present_cyclic_sum(std::vector<Int>{4, 6, 0, 2});
    EXPECT_EQ(p.group, g({2, 2, 12}, 1));
    // Round trip every element of the torsion part.
    for (long a = 0; a < 4; ++a)
        for (long b = 0; b < 6; ++b) {
            IntVector user{Int(a), Int(b), Int(5), Int(1)};
            Element e = p.to_canonical(user);
            IntVector back = p.from_canonical(e);
            EXPECT_EQ(floor_mod(back[0], 4), a);
            EXPECT_EQ(floor_mod(back[1], 6), b);
            EXPECT_EQ(back[2], 5);
            EXPECT_EQ(floor_mod(back[3], 2), 1);
        }
}

TEST(ElementOrder, Examples) {
    EXPECT_EQ(element_order(el(g({8}), {2}), g({8})), Int(4));
    // (1,1) in Z/2 + Z/3 is 1 in Z/6 after CRT; check directly in the presented sum.
    PresentedGroup p = present_cyclic_sum(std::vector<Int>{2, 3});
    Element e = p.to_canonical(IntVector{Int(1), Int(1)});
    EXPECT_EQ(element_order(e, p.group), Int(6));
    EXPECT_FALSE(element_order(el(FgGroup::free_abelian(1), {1}), FgGroup::free_abelian(1)).has_value());
}

TEST(ElementOrder, DimensionMismatchThrows) {
    EXPECT_THROW(element_order(Element{{Int(1), Int(0)}}, g({8})), MembershipError);
}

TEST(Quotient, Examples) {
    FgGroup z4 = g({4});
    Element two = el(z4, {2});
    Subgroup h = subgroup_from_generators(z4, std::span<const Element>(&two, 1));
    EXPECT_EQ(quotient(z4, h), g({2}));

    FgGroup m = g({2, 4}, 1);
    EXPECT_EQ(quotient(m, Subgroup::zero(m)), m);
    EXPECT_TRUE(quotient(m, Subgroup::whole(m)).is_trivial());
}

TEST(Isomorphism, CrtAndInvariantFactors) {
    FgGroup z2z3 = group_from_presentation(IntMatrix{{2, 0}, {0, 3}}, 2);
    EXPECT_TRUE(is_isomorphic(g({6}), z2z3));
    EXPECT_FALSE(is_isomorphic(g({4}), g({2, 2})));
}

TEST(Subgroup, CanonicalFormIgnoresRedundantGenerators) {
    std::mt19937 rng(3);
    FgGroup m = g({2, 4, 12});
    auto all = m.elements();
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Element> gens{all[pick(rng)], all[pick(rng)]};
        Subgroup h(m, gens);
        std::vector<Element> more = gens;
        more.push_back(m.add(m.scale(3, gens[0]), m.scale(-5, gens[1])));
        more.push_back(m.zero());
        std::shuffle(more.begin(), more.end(), rng);
        EXPECT_EQ(Subgroup(m, more), h);
        // Membership agrees with the enumerated closure.
        auto elems = h.elements();
        EXPECT_EQ(Int(static_cast<long>(elems.size())), *h.order());
        for (const auto& x : all)
            EXPECT_EQ(h.contains(x), std::binary_search(elems.begin(), elems.end(), x));
    }
}

TEST(Subgroup, LagrangeForQuotients) {
    for (const auto& m : groups_up_to_order(24)) {
        for (const auto& h : all_subgroups(m)) {
            Order q = quotient(m, h).order();
            ASSERT_TRUE(q.has_value());
            EXPECT_EQ(*m.order(), *h.order() * *q) << m.to_string();
        }
    }
}

TEST(Subgroup, IntersectionAndSum) {
    FgGroup m = g({12});
    Element a = el(m, {4});
    Element b = el(m, {6});
    Subgroup h(m, std::span<const Element>(&a, 1));
    Subgroup k(m, std::span<const Element>(&b, 1));
    EXPECT_EQ(*intersection(h, k).order(), Int(1));
    EXPECT_EQ(*sum(h, k).order(), Int(6));
    EXPECT_EQ(*multiple(2, Subgroup::whole(m)).order(), Int(6));
    EXPECT_EQ(*annihilator(m, 4).order(), Int(4));
}

TEST(Subgroup, InfiniteIndex) {
    FgGroup z = FgGroup::free_abelian(1);
    Subgroup two = multiple(2, Subgroup::whole(z));
    EXPECT_EQ(*two.index_in(Subgroup::whole(z)), Int(2));
    EXPECT_FALSE(Subgroup::zero(z).index_in(two).has_value());
    EXPECT_FALSE(two.order().has_value());
}

TEST(SubgroupStructure, EmbeddingIsInjectiveOntoSubgroup) {
    for (const auto& m : groups_up_to_order(16))
        for (const auto& h : all_subgroups(m)) {
            SubgroupStructure s = subgroup_structure(h);
            EXPECT_EQ(s.group.order(), h.order());
            EXPECT_TRUE(s.embedding.is_injective());
            EXPECT_EQ(s.embedding.image(), h);
        }
}

TEST(DirectSum, InjectionsAndProjections) {
    FgGroup a = g({2, 4});
    FgGroup b = g({6}, 1);
    DirectSum s = direct_sum(a, b);
    EXPECT_EQ(s.group, g({2, 2, 12}, 1));
    for (const auto& x : a.elements()) {
        EXPECT_EQ(s.project_left.apply(s.inject_left.apply(x)), x);
        EXPECT_EQ(s.project_right.apply(s.inject_left.apply(x)), b.zero());
    }
}

TEST(Homomorphism, RejectsIncompatibleImages) {
    EXPECT_THROW(Homomorphism(g({2}), g({4}), {el(g({4}), {1})}), DomainError);
    Homomorphism f(g({2}), g({4}), {el(g({4}), {2})});
    EXPECT_TRUE(f.is_injective());
    EXPECT_EQ(*f.kernel().order(), Int(1));
}

TEST(Power, LayoutIsInvariantForm) {
    FgGroup m = g({2, 4}, 1);
    FgGroup p = power(m, 3);
    EXPECT_EQ(p, g({2, 2, 2, 4, 4, 4}, 3));
    std::vector<Element> comps{el(m, {1, 3, 7}), el(m, {0, 1, -2}), el(m, {1, 0, 0})};
    Element t = tuple_element(m, comps);
    EXPECT_EQ(split_tuple(m, 3, t), comps);
}

TEST(Enumeration, GroupCounts) {
    EXPECT_EQ(groups_of_order(16).size(), 5u);
    EXPECT_EQ(groups_of_order(64).size(), 11u);
    EXPECT_EQ(groups_of_order(72).size(), 6u);
    EXPECT_EQ(groups_of_order(1).size(), 1u);
    EXPECT_EQ(all_subgroups(g({2, 2})).size(), 5u);
    EXPECT_EQ(all_subgroups(g({2, 2, 2})).size(), 16u);
    EXPECT_EQ(all_subgroups(g({12})).size(), 6u);
}
