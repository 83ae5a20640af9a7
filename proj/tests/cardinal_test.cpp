#include "pptor/cardinal.hpp"
#include "pptor/error.hpp"
#include "pptor/verify/facts.hpp"
#include "pptor/verify/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace pptor;

namespace {

CardinalExpr c(const char* text) { return parse_cardinal(text); }

std::string norm(const char* text) { return to_string(normalize(c(text))); }

TriBool cmp(const char* a, Relation r, const char* b) { return compare(c(a), c(b), r).value; }

}  // namespace

TEST(CardinalParse, GrammarAndPrinting) {
    EXPECT_EQ(to_string(c("2^aleph0")), "2^aleph0");
    EXPECT_EQ(to_string(c("beth(ω)")), "beth(w)");
    EXPECT_EQ(to_string(c("beth(omega) ^ aleph(0)")), "beth(w)^aleph0");
    EXPECT_EQ(to_string(c("2^2^aleph0")), "2^2^aleph0");
    EXPECT_EQ(to_string(c("(2^2)^aleph0")), "(2^2)^aleph0");
    EXPECT_EQ(to_string(c("aleph1 * (aleph0 + 3)")), "aleph1 * (aleph0 + 3)");
    EXPECT_EQ(to_string(c("lambda^aleph0"), Notation::Unicode), "λ^ℵ0");
    EXPECT_EQ(to_string(c("ℶ_ω + ℵ_ω + beth2")), "beth(w) + aleph(w) + beth2");
    EXPECT_EQ(c("λ"), CardinalExpr::var("lambda"));
    EXPECT_EQ(c("aleph12"), CardinalExpr::aleph(CardIndex::finite(12)));
}

TEST(CardinalParse, Errors) {
    EXPECT_THROW(c("aleph"), ParseError);
    EXPECT_THROW(c("2 +"), ParseError);
    EXPECT_THROW(c("beth(x)"), ParseError);
    EXPECT_THROW(c("(aleph0"), ParseError);
    EXPECT_THROW(c("w"), ParseError);
    try {
        c("aleph0 ^ ^ 2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 10u);
        EXPECT_EQ(e.token(), "^");
    }
}

TEST(CardinalParse, RoundTripBothNotations) {
    verify::Rng rng(77);
    for (int i = 0; i < 500; ++i) {
        CardinalExpr e = verify::random_cardinal(rng, 4);
        EXPECT_EQ(parse_cardinal(to_string(e)), e) << to_string(e);
        EXPECT_EQ(parse_cardinal(to_string(e, Notation::Unicode)), e) << to_string(e, Notation::Unicode);
    }
}

TEST(CardinalNormalize, Examples) {
    EXPECT_EQ(norm("(2^aleph0)^aleph0"), "2^aleph0");
    EXPECT_EQ(norm("aleph0 + aleph0"), "aleph0");
    EXPECT_EQ(norm("3^aleph0"), "2^aleph0");
    EXPECT_EQ(norm("aleph0^aleph0"), "2^aleph0");
    EXPECT_EQ(norm("aleph1^aleph0"), "2^aleph0");
    EXPECT_EQ(norm("aleph2^aleph0"), "aleph2 + 2^aleph0");
    EXPECT_EQ(norm("beth2"), "2^2^aleph0");
    EXPECT_EQ(norm("beth0 * 7 + 5"), "aleph0");
    EXPECT_EQ(norm("0 * beth(w)"), "0");
    EXPECT_EQ(norm("2^10 + 3*4"), "1036");
    EXPECT_EQ(norm("beth(w)^beth(w)"), "2^beth(w)");
    EXPECT_EQ(norm("(lambda^aleph0)^aleph0"), "lambda^aleph0");
    EXPECT_EQ(norm("aleph1 + aleph(w) + aleph2"), "aleph(w)");
    EXPECT_EQ(norm("beth(w)^5"), "beth(w)");
    EXPECT_EQ(norm("lambda^0"), "1");
    EXPECT_EQ(norm("1^beth(w) + 0^aleph0"), "1");
}

TEST(CardinalNormalize, TraceNamesRules) {
    std::vector<std::string> trace;
    normalize(c("(2^aleph0)^aleph0"), &trace);
    EXPECT_TRUE(std::any_of(trace.begin(), trace.end(),
                            [](const std::string& s) { return s.rfind("exponent-absorption", 0) == 0; }));
}

TEST(CardinalNormalize, FinitePowerCap) { EXPECT_THROW(normalize(c("2^(2^30)")), DomainError); }

namespace {

// Rebuild e with commuted operands, re-associated sums and products, and some
// subterms normalized ahead of time.
CardinalExpr scramble(verify::Rng& rng, const CardinalExpr& e) {
    if (rng.chance(20)) return normalize(e);
    switch (e.kind()) {
    case CardinalExpr::Kind::Power:
        return CardinalExpr::power(scramble(rng, e.base()), scramble(rng, e.exponent()));
    case CardinalExpr::Kind::Sum:
    case CardinalExpr::Kind::Product: {
        std::vector<CardinalExpr> args;
        for (const auto& a : e.args()) args.push_back(scramble(rng, a));
        for (std::size_t i = args.size(); i > 1; --i)
            std::swap(args[i - 1], args[static_cast<std::size_t>(rng.between(0, static_cast<long>(i) - 1))]);
        const bool sum = e.kind() == CardinalExpr::Kind::Sum;
        auto make = [sum](std::vector<CardinalExpr> v) {
            return sum ? CardinalExpr::sum(std::move(v)) : CardinalExpr::product(std::move(v));
        };
        if (args.size() > 2 && rng.chance(50)) {
            CardinalExpr head = make({args[0], args[1]});
            std::vector<CardinalExpr> rest{head};
            rest.insert(rest.end(), args.begin() + 2, args.end());
            return make(std::move(rest));
        }
        return make(std::move(args));
    }
    default: return e;
    }
}

}  // namespace

TEST(CardinalNormalize, IdempotentAndConfluent) {
    verify::Rng rng(2024);
    for (int i = 0; i < 500; ++i) {
        CardinalExpr e = verify::random_cardinal(rng, 4);
        CardinalExpr n = normalize(e);
        ASSERT_EQ(normalize(n), n) << to_string(e) << " -> " << to_string(n);
        for (int k = 0; k < 4; ++k) {
            CardinalExpr s = scramble(rng, e);
            ASSERT_EQ(normalize(s), n) << to_string(e) << " vs " << to_string(s);
        }
    }
}

TEST(CardinalCompare, Examples) {
    EXPECT_EQ(cmp("beth(w)", Relation::Less, "beth(w)^aleph0"), TriBool::True);
    EXPECT_EQ(compare(c("beth(w)"), c("beth(w)^aleph0"), Relation::Less).rule, "König");
    EXPECT_EQ(cmp("aleph1", Relation::Equal, "2^aleph0"), TriBool::Unknown);
    EXPECT_EQ(cmp("aleph0", Relation::Less, "2^aleph0"), TriBool::True);
    EXPECT_EQ(compare(c("aleph0"), c("2^aleph0"), Relation::Less).rule, "Cantor");
}

TEST(CardinalCompare, CuratedSoundnessList) {
    const auto& facts = verify::curated_cardinal_facts();
    ASSERT_EQ(facts.size(), 30u);
    for (const auto& f : facts) {
        Verdict v = compare(c(f.lhs), c(f.rhs), f.relation);
        EXPECT_EQ(v.value, f.status) << f.lhs << " vs " << f.rhs << " (" << f.reason << ")";
        if (v.value != TriBool::Unknown) {
            EXPECT_FALSE(v.rule.empty());
        }
    }
}

TEST(CardinalCompare, VerdictsAreConsistentAcrossRelations) {
    // a < b true forces a <= b true and a = b false; a = b true forces a <= b.
    verify::Rng rng(9);
    for (int i = 0; i < 300; ++i) {
        CardinalExpr a = verify::random_cardinal(rng, 3);
        CardinalExpr b = verify::random_cardinal(rng, 3);
        TriBool less = compare(a, b, Relation::Less).value;
        TriBool le = compare(a, b, Relation::LessEqual).value;
        TriBool eq = compare(a, b, Relation::Equal).value;
        TriBool ge = compare(b, a, Relation::LessEqual).value;
        if (less == TriBool::True) {
            EXPECT_EQ(le, TriBool::True);
            EXPECT_EQ(eq, TriBool::False);
            EXPECT_EQ(ge, TriBool::False);
        }
        if (eq == TriBool::True) {
            EXPECT_EQ(le, TriBool::True);
            EXPECT_EQ(ge, TriBool::True);
            EXPECT_NE(less, TriBool::True);
        }
        if (le == TriBool::True && ge == TriBool::True) {
            EXPECT_NE(eq, TriBool::False);
        }
        if (is_finite(a) && is_finite(b)) {
            EXPECT_NE(less, TriBool::Unknown);
            EXPECT_NE(eq, TriBool::Unknown);
        }
    }
}

TEST(StabilityPredicate, Examples) {
    Verdict bw = stability_predicate(c("beth(w)"));
    EXPECT_EQ(bw.value, TriBool::False);
    EXPECT_EQ(bw.rule, "König");
    Verdict cont = stability_predicate(c("2^aleph0"));
    EXPECT_EQ(cont.value, TriBool::True);
    EXPECT_TRUE(std::any_of(cont.trace.begin(), cont.trace.end(),
                            [](const std::string& s) { return s.rfind("exponent-absorption", 0) == 0; }));
    Verdict a1 = stability_predicate(c("aleph1"));
    EXPECT_EQ(a1.value, TriBool::Unknown);
    EXPECT_TRUE(std::any_of(a1.trace.begin(), a1.trace.end(),
                            [](const std::string& s) { return s.find("continuum hypothesis") != std::string::npos; }));
    EXPECT_EQ(stability_predicate(c("aleph0")).value, TriBool::False);
    EXPECT_EQ(stability_predicate(c("aleph(w)")).value, TriBool::False);
    EXPECT_EQ(stability_predicate(c("lambda")).value, TriBool::Unknown);
    EXPECT_THROW(stability_predicate(c("5")), DomainError);
    EXPECT_THROW(stability_predicate(c("2^10")), DomainError);
}

TEST(StabilityPredicate, PowersOfAleph0AreStable) {
    verify::Rng rng(31);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        CardinalExpr mu = verify::random_cardinal(rng, 4);
        CardinalExpr p = CardinalExpr::power(mu, parse_cardinal("aleph0"));
        if (is_finite(p)) continue;  // mu in {0, 1}
        ++checked;
        EXPECT_EQ(stability_predicate(p).value, TriBool::True) << to_string(mu);
    }
    EXPECT_GT(checked, 300);
}

TEST(Cofinality, Examples) {
    EXPECT_EQ(cofinality(c("beth(w)")), c("aleph0"));
    EXPECT_EQ(cofinality(c("aleph1")), c("aleph1"));
    EXPECT_EQ(cofinality(c("aleph0")), c("aleph0"));
    EXPECT_EQ(cofinality(c("aleph(w)")), c("aleph0"));
    EXPECT_FALSE(cofinality(c("2^aleph0")).has_value());
    EXPECT_FALSE(cofinality(c("lambda")).has_value());
    EXPECT_EQ(cofinality(c("7")), c("1"));
}
