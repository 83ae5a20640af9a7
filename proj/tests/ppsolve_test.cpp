#include "pptor/ppsolve.hpp"
#include "pptor/purity.hpp"
#include "pptor/verify/brute.hpp"
#include "pptor/verify/random.hpp"

#include <gtest/gtest.h>

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

std::vector<long> members(const Subgroup& s) {
    std::vector<long> out;
    for (const auto& e : s.elements()) out.push_back(e.coords.empty() ? 0 : e.coords[0].get_si());
    return out;
}

Subgroup span(const FgGroup& m, std::vector<Element> gens) { return Subgroup(m, gens); }

}  // namespace

TEST(Evaluate, Examples) {
    EXPECT_EQ(members(evaluate(parse_formula("E y. x=2*y"), g({4}))), (std::vector<long>{0, 2}));
    FgGroup m = g({2, 6}, 1);
    EXPECT_TRUE(evaluate(parse_formula("x=x"), m).is_whole());
    EXPECT_EQ(members(evaluate(parse_formula("2*x=0 & E y. x=4*y"), g({16}))), (std::vector<long>{0, 8}));
    EXPECT_EQ(members(evaluate(scalar_formula(2, parse_formula("E y. x=3*y")), g({12}))), (std::vector<long>{0, 6}));
}

TEST(Evaluate, TwoVariables) {
    // x = 2t on Z/4: pairs (2t, t).
    Subgroup s = evaluate(parse_formula("x = 2*t"), g({4}));
    EXPECT_EQ(*s.order(), 4);
    FgGroup z4 = g({4});
    for (long t = 0; t < 4; ++t) {
        std::vector<Element> comps{el(z4, {2 * t}), el(z4, {t})};
        EXPECT_TRUE(s.contains(tuple_element(z4, comps)));
    }
}

TEST(Evaluate, InfiniteGroups) {
    FgGroup z = FgGroup::free_abelian(1);
    Subgroup s = evaluate(parse_formula("E y . x = 6*y & E u . x = 4*u"), z);
    EXPECT_TRUE(s.contains(el(z, {12})));
    EXPECT_FALSE(s.contains(el(z, {6})));
    EXPECT_TRUE(evaluate(parse_formula("3*x = 0"), z).is_trivial());
}

TEST(Evaluate, MatchesBruteForceOnSmallGroups) {
    verify::Rng rng(314);
    verify::FormulaShape shape;
    auto groups = groups_up_to_order(24);
    for (int i = 0; i < 60; ++i) {
        PpFormula f = verify::random_formula(rng, shape);
        for (const auto& m : groups)
            ASSERT_EQ(verify::subgroup_bitmap(evaluate(f, m), m, f.arity()), verify::brute_force_solutions(f, m))
                << to_string(f) << " on " << m.to_string();
    }
}

TEST(Evaluate, BruteForceSolutionSetsAreSubgroups) {
    verify::Rng rng(8);
    verify::FormulaShape shape;
    shape.max_free = 1;
    FgGroup m = g({2, 12});
    verify::SmallGroup sg(m);
    for (int i = 0; i < 40; ++i) {
        auto bits = verify::brute_force_solutions(verify::random_formula(rng, shape), m);
        ASSERT_TRUE(bits[0]);
        for (long a = 0; a < sg.size(); ++a)
            for (long b = 0; b < sg.size(); ++b)
                if (bits[static_cast<std::size_t>(a)] && bits[static_cast<std::size_t>(b)])
                    ASSERT_TRUE(bits[static_cast<std::size_t>(sg.add(a, b))]);
    }
}

TEST(Evaluate, CommutesWithDirectSums) {
    verify::Rng rng(99);
    verify::FormulaShape shape;
    for (int i = 0; i < 80; ++i) {
        PpFormula f = verify::random_formula(rng, shape);
        FgGroup a = verify::random_group(rng, 2, 12, 1);
        FgGroup b = verify::random_group(rng, 2, 12, 1);
        DirectSum s = direct_sum(a, b);
        const std::size_t n = f.arity();
        Subgroup expected = sum(power_map(s.inject_left, n).image(evaluate(f, a)),
                                power_map(s.inject_right, n).image(evaluate(f, b)));
        ASSERT_EQ(evaluate(f, s.group), expected) << to_string(f);
    }
}

TEST(Index, Examples) {
    EXPECT_EQ(index(parse_formula("x=x"), parse_formula("E y. x=2*y"), g({4})), Int(2));
    PpFormula f = parse_formula("E y . x = 3*y & 4*x = 0");
    EXPECT_EQ(index(f, f, g({6, 12})), Int(1));
    FgGroup z = FgGroup::free_abelian(1);
    EXPECT_EQ(index(parse_formula("x=x"), parse_formula("E y. x=2*y"), z), Int(2));
    EXPECT_FALSE(index(parse_formula("x=x"), parse_formula("x=0"), z).has_value());
}

TEST(Index, WitnessChainLevels) {
    std::vector<Int> moduli;
    for (int m = 1; m <= 8; ++m)
        for (int c = 0; c < 2; ++c) moduli.push_back(power(2, m));
    FgGroup b = present_cyclic_sum(moduli).group;
    for (unsigned n = 0; n < 8; ++n) {
        auto phi = [](unsigned k) { return parse_formula("2*x = 0 & E y . x = 2^" + std::to_string(k) + "*y"); };
        EXPECT_EQ(index(phi(n), phi(n + 1), b), Int(4)) << n;
    }
}

TEST(Index, InclusionViolationCarriesWitness) {
    FgGroup m = g({4});
    PpFormula small = parse_formula("E y. x=2*y");
    PpFormula big = parse_formula("x=x");
    try {
        index(small, big, m);
        FAIL();
    } catch (const InclusionError& e) {
        EXPECT_TRUE(evaluate(big, m).contains(e.witness()));
        EXPECT_FALSE(evaluate(small, m).contains(e.witness()));
    }
    EXPECT_THROW(index(big, parse_formula("x = t"), m), ArityError);
}

TEST(Profiles, FormulaDefinesTheSubgroup) {
    for (const auto& [p, top] : std::vector<std::pair<long, unsigned>>{{2, 4}, {3, 2}, {5, 1}}) {
        for (const auto& n : groups_up_to_order(power(p, top))) {
            // Only p-groups.
            if (*n.order() != power(p, valuation(*n.order(), p))) continue;
            unsigned e = valuation(n.torsion_exponent(), p);
            for (const Profile& j : profiles(e))
                EXPECT_EQ(evaluate(profile_formula(p, j), n), profile_subgroup(n, p, j)) << n.to_string();
        }
    }
    EXPECT_EQ(profiles(3).size(), 8u);
}

TEST(PpType, Examples) {
    FgGroup z4 = g({4}), z2 = g({2});
    auto over_zero = [](const FgGroup& n, long a) {
        return pp_type_descriptor(n.element({Int(a)}), Subgroup::zero(n), n);
    };
    EXPECT_FALSE(pp_type_equal(over_zero(z4, 1), over_zero(z2, 1)));
    EXPECT_FALSE(pp_type_equal(over_zero(z4, 2), over_zero(z2, 1)));
    EXPECT_TRUE(pp_type_equal(over_zero(z4, 3), over_zero(z4, 3)));
    EXPECT_TRUE(pp_type_equal(over_zero(z4, 1), over_zero(z4, 3)));
    FgGroup v4 = g({2, 2});
    EXPECT_TRUE(pp_type_equal(pp_type_descriptor(el(v4, {1, 1}), Subgroup::zero(v4), v4), over_zero(z2, 1)));
}

TEST(PpType, RejectsImpureParameters) {
    FgGroup z4 = g({4});
    EXPECT_THROW(pp_type_descriptor(el(z4, {1}), span(z4, {el(z4, {2})}), z4), DomainError);
    EXPECT_THROW(pp_type_descriptor(el(z4, {1}), Subgroup::zero(g({2})), z4), MembershipError);
}

TEST(PpType, AgreesWithHomOracleUpToEight) {
    // Parameters fixed to the zero group and to Z/2 (placed as a pure subgroup).
    auto groups = groups_up_to_order(8);
    struct Item {
        std::size_t object;
        long a;
        PpTypeDescriptor d;
    };
    for (const FgGroup& m : {FgGroup(), g({2})}) {
        std::vector<std::pair<FgGroup, Homomorphism>> objects;
        for (const auto& n : groups)
            for (const auto& h : all_subgroups(n)) {
                if (!is_pure(h, n)) continue;
                SubgroupStructure s = subgroup_structure(h);
                if (s.group == m) objects.emplace_back(n, s.embedding);
            }
        std::vector<Item> items;
        for (std::size_t o = 0; o < objects.size(); ++o) {
            verify::SmallGroup sn(objects[o].first);
            for (const auto& a : objects[o].first.elements())
                items.push_back({o, sn.index_of(a), pp_type_descriptor(a, objects[o].second)});
        }
        auto embed_images = [&](std::size_t o) {
            verify::SmallGroup sn(objects[o].first);
            std::vector<long> out;
            for (const auto& e : objects[o].second.images()) out.push_back(sn.index_of(e));
            return out;
        };
        for (std::size_t o1 = 0; o1 < objects.size(); ++o1)
            for (std::size_t o2 = 0; o2 < objects.size(); ++o2) {
                verify::SmallGroup n1(objects[o1].first), n2(objects[o2].first);
                auto fwd = verify::hom_reachability(n1, n2, verify::all_homomorphisms(n1, n2), embed_images(o1),
                                                    embed_images(o2));
                auto back = verify::hom_reachability(n2, n1, verify::all_homomorphisms(n2, n1), embed_images(o2),
                                                     embed_images(o1));
                for (const auto& i1 : items) {
                    if (i1.object != o1) continue;
                    for (const auto& i2 : items) {
                        if (i2.object != o2) continue;
                        bool oracle = fwd[static_cast<std::size_t>(i1.a * n2.size() + i2.a)] &&
                                      back[static_cast<std::size_t>(i2.a * n1.size() + i1.a)];
                        ASSERT_EQ(pp_type_equal(i1.d, i2.d), oracle)
                            << objects[o1].first.to_string() << " / " << objects[o2].first.to_string();
                    }
                }
            }
    }
}

TEST(CountTypes, SmallBounds) {
    EXPECT_EQ(count_types(FgGroup(), 1), 1);
    EXPECT_EQ(count_types(FgGroup(), 2), 2);
    EXPECT_EQ(count_types(FgGroup(), 4), 5);
    EXPECT_EQ(count_types(g({2}), 2), 2);
    EXPECT_THROW(count_types(g({4}), 2), DomainError);
}

TEST(CountTypes, OracleConfirmsFrozenValue) {
    // Classes of (N, a) with |N| <= 4 under mutual homomorphic reachability.
    std::vector<std::pair<verify::SmallGroup, long>> items;
    for (const auto& n : groups_up_to_order(4)) {
        verify::SmallGroup s(n);
        for (long a = 0; a < s.size(); ++a) items.emplace_back(s, a);
    }
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < items.size(); ++i) {
        bool fresh = true;
        for (std::size_t r : reps) {
            const auto& [n1, a1] = items[r];
            const auto& [n2, a2] = items[i];
            auto fwd = verify::hom_reachability(n1, n2, verify::all_homomorphisms(n1, n2), {}, {});
            auto back = verify::hom_reachability(n2, n1, verify::all_homomorphisms(n2, n1), {}, {});
            if (fwd[static_cast<std::size_t>(a1 * n2.size() + a2)] && back[static_cast<std::size_t>(a2 * n1.size() + a1)]) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(i);
    }
    EXPECT_EQ(reps.size(), 5u);
}
