#include <gtest/gtest.h>

#include <set>

#include "ngsemi/enumeration.hpp"
#include "ngsemi/error.hpp"
#include "ngsemi/semigroup.hpp"
#include "oracles.hpp"

using namespace ngsemi;

namespace {

std::vector<std::vector<Int>> coefficient_lists(const std::vector<Factorization>& fs) {
    std::vector<std::vector<Int>> out;
    for (const auto& f : fs) out.push_back(f.coefficients);
    return out;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no ngsemi::Error thrown";
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST(Semigroup, BasicInvariants) {
    const auto s = NumericalSemigroup::from_generators({4, 5, 11});
    EXPECT_EQ(s.embedding_dimension(), 3u);
    EXPECT_EQ(s.multiplicity(), 4);
    EXPECT_EQ(s.frobenius(), 7);
    EXPECT_EQ(s.genus(), 5);
    EXPECT_EQ(s.conductor(), 8);
    EXPECT_EQ(to_string(s), "<4,5,11>");
}

TEST(Semigroup, WholeNaturals) {
    const auto n = NumericalSemigroup::from_generators({1});
    EXPECT_TRUE(n.is_whole_naturals());
    EXPECT_EQ(n.frobenius(), -1);
    EXPECT_EQ(n.genus(), 0);
    EXPECT_EQ(n.pseudo_frobenius(), std::vector<Int>{-1});
    EXPECT_EQ(type(n), 1u);
    EXPECT_TRUE(gaps(n).empty());
    EXPECT_EQ(apery_set(n, 1), std::vector<Int>{0});
    // Any generating set containing 1 collapses to N.
    EXPECT_EQ(NumericalSemigroup::from_generators({3, 1, 7}), n);
}

TEST(Semigroup, InputIsReducedToMinimalSystem) {
    const auto s = NumericalSemigroup::from_generators({8, 12, 10, 15});
    EXPECT_EQ(s.generators(), (std::vector<Int>{8, 10, 12, 15}));
    const auto t = NumericalSemigroup::from_generators({6, 4, 5, 4, 10, 11});
    EXPECT_EQ(t.generators(), (std::vector<Int>{4, 5, 6}));
}

TEST(Semigroup, ConstructionErrors) {
    EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators(std::span<const Int>{}); }),
              ErrorCode::EmptyGenerators);
    EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators({2, 4}); }), ErrorCode::GcdNotOne);
    EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators({0, 3}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators({-3, 4}); }), ErrorCode::InvalidArgument);
    Limits tight;
    tight.max_multiplicity = 100;
    const std::vector<Int> big{101, 103};
    EXPECT_EQ(code_of([&] { NumericalSemigroup::from_generators(big, tight); }), ErrorCode::ResourceLimit);
}

TEST(Semigroup, OverflowIsReported) {
    // The Frobenius number of <m, m+1> is about m^2, which fits; push it
    // past 2^63 with huge coprime generators instead.
    const std::vector<Int> gens{3, (Int{1} << 62) + 1};
    Limits limits;
    EXPECT_EQ(code_of([&] { NumericalSemigroup::from_generators(gens, limits); }), ErrorCode::Overflow);
}

TEST(Semigroup, Contains) {
    const auto s = NumericalSemigroup::from_generators({4, 5, 11});
    EXPECT_FALSE(contains(s, 7));
    EXPECT_TRUE(contains(s, 0));
    EXPECT_TRUE(contains(s, 10));
    EXPECT_FALSE(contains(s, -4));
}

TEST(Semigroup, AperySets) {
    EXPECT_EQ(apery_set(NumericalSemigroup::from_generators({4, 5, 11}), 4), (std::vector<Int>{0, 5, 10, 11}));
    EXPECT_EQ(apery_set(NumericalSemigroup::from_generators({2, 3}), 2), (std::vector<Int>{0, 3}));
    const auto s = NumericalSemigroup::from_generators({4, 5, 11});
    // With respect to a non-generator element.
    const auto ap9 = apery_set(s, 9);
    ASSERT_EQ(ap9.size(), 9u);
    oracle::Semigroup o({4, 5, 11});
    for (Int r = 0; r < 9; ++r) {
        Int w = r;
        while (!o.contains(w)) w += 9;
        EXPECT_EQ(ap9[static_cast<std::size_t>(r)], w);
    }
    EXPECT_EQ(code_of([&] { apery_set(s, 0); }), ErrorCode::ZeroElement);
    EXPECT_EQ(code_of([&] { apery_set(s, 7); }), ErrorCode::NotInSemigroup);
}

TEST(Semigroup, Gaps) {
    EXPECT_EQ(gaps(NumericalSemigroup::from_generators({4, 5, 11})), (std::vector<Int>{1, 2, 3, 6, 7}));
    EXPECT_EQ(gaps(NumericalSemigroup::from_generators({2, 3})), std::vector<Int>{1});
}

TEST(Semigroup, PseudoFrobeniusFromLiterature) {
    EXPECT_EQ(pseudo_frobenius(NumericalSemigroup::from_generators({4, 5, 11})), (std::vector<Int>{6, 7}));
    EXPECT_EQ(pseudo_frobenius(NumericalSemigroup::from_generators({64, 68, 73, 77, 84, 93})),
              (std::vector<Int>{159, 179, 188, 195, 197, 206, 215, 394, 403}));
    EXPECT_EQ(pseudo_frobenius(NumericalSemigroup::from_generators({10, 11, 12, 29})),
              (std::vector<Int>{19, 37, 38}));
    EXPECT_EQ(type(NumericalSemigroup::from_generators({15, 17, 28, 41})), 3u);
    EXPECT_EQ(type(NumericalSemigroup::from_generators({16, 17, 19, 39})), 4u);
}

TEST(Semigroup, Factorizations) {
    const auto s = NumericalSemigroup::from_generators({4, 5, 11});
    EXPECT_EQ(coefficient_lists(factorizations(s, 0)), (std::vector<std::vector<Int>>{{0, 0, 0}}));
    EXPECT_EQ(coefficient_lists(factorizations(s, 20)), (std::vector<std::vector<Int>>{{5, 0, 0}, {1, 1, 1}, {0, 4, 0}}));  // 4 + 5 + 11 = 20
    EXPECT_EQ(code_of([&] { factorizations(s, 7); }), ErrorCode::NotInSemigroup);

    const auto t = NumericalSemigroup::from_generators({10, 12, 37, 75});
    const auto fs = factorizations(t, 113);
    const auto expected = oracle::factorizations({10, 12, 37, 75}, 113);
    EXPECT_EQ(fs.size(), expected.size());
    const auto lists = coefficient_lists(fs);
    const std::set<std::vector<Int>> got(lists.begin(), lists.end());
    EXPECT_EQ(got, expected);
    EXPECT_TRUE(got.count({4, 3, 1, 0}));
}

TEST(Semigroup, FactorizationsLimit) {
    const auto s = NumericalSemigroup::from_generators({2, 3});
    Limits limits;
    limits.max_factorizations = 5;
    EXPECT_EQ(code_of([&] { factorizations(s, 60, limits); }), ErrorCode::LimitExceeded);
}

TEST(Semigroup, FactorizationsAvoiding) {
    const auto s = NumericalSemigroup::from_generators({10, 12, 37, 75});
    EXPECT_EQ(coefficient_lists(factorizations_avoiding(s, 48, 0)), (std::vector<std::vector<Int>>{{0, 4, 0, 0}}));
    EXPECT_EQ(coefficient_lists(factorizations_avoiding(s, 75, 2)), (std::vector<std::vector<Int>>{{0, 0, 0, 1}}));
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_EQ(coefficient_lists(factorizations_avoiding(s, 0, i)),
                  (std::vector<std::vector<Int>>{{0, 0, 0, 0}}));
    EXPECT_EQ(code_of([&] { factorizations_avoiding(s, 48, 4); }), ErrorCode::IndexOutOfRange);
}

TEST(Semigroup, FactorizationsMatchOracleOnRandomInputs) {
    std::mt19937 rng(7);
    for (int round = 0; round < 60; ++round) {
        const auto gens = oracle::random_semigroup(rng, 3, 20, 4);
        const auto s = NumericalSemigroup::from_generators(gens);
        std::uniform_int_distribution<Int> pick(0, 80);
        for (int k = 0; k < 10; ++k) {
            const Int z = pick(rng);
            if (!s.contains(z)) continue;
            const auto fs = factorizations(s, z);
            for (std::size_t i = 1; i < fs.size(); ++i) EXPECT_GT(fs[i - 1], fs[i]) << "lex descending";
            for (const auto& f : fs) EXPECT_EQ(evaluate(s, f), z);
            const auto lists = coefficient_lists(fs);
            EXPECT_EQ(std::set<std::vector<Int>>(lists.begin(), lists.end()),
                      oracle::factorizations(s.generators(), z));
            for (std::size_t avoid = 0; avoid < s.embedding_dimension(); ++avoid)
                for (const auto& f : factorizations_avoiding(s, z, avoid)) {
                    EXPECT_EQ(f.coefficients[avoid], 0);
                    EXPECT_NE(std::find(fs.begin(), fs.end(), f), fs.end());
                }
        }
    }
}

// Everything below genus 15 against DP membership, the definitional PF scan
// and the minimal generator oracle.
TEST(Semigroup, AgreesWithOraclesThroughGenus15) {
    TreeParams params;
    params.max_genus = 15;
    std::size_t seen = 0;
    enumerate(params, [&](const NumericalSemigroup& s) {
        ++seen;
        if (s.is_whole_naturals()) return;
        oracle::Semigroup o(s.generators());
        const Int top = s.frobenius() + 2 * s.multiplicity();
        for (Int z = 0; z <= top; ++z) ASSERT_EQ(s.contains(z), o.contains(z)) << to_string(s) << " z=" << z;
        ASSERT_EQ(s.frobenius(), o.frobenius());
        ASSERT_EQ(gaps(s), o.gaps());
        ASSERT_EQ(static_cast<Int>(gaps(s).size()), s.genus());
        ASSERT_EQ(s.pseudo_frobenius(), o.pseudo_frobenius()) << to_string(s);
        ASSERT_EQ(s.pseudo_frobenius().back(), s.frobenius());
    });
    EXPECT_EQ(seen, 1u + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67 + 118 + 204 + 343 + 592 + 1001 + 1693 + 2857);
}

TEST(Semigroup, MinimalGeneratorsMatchOracle) {
    std::mt19937 rng(11);
    for (int round = 0; round < 200; ++round) {
        std::uniform_int_distribution<Int> pick(2, 40);
        std::vector<Int> raw(5);
        for (auto& g : raw) g = pick(rng);
        raw.push_back(pick(rng) | 1);
        raw.push_back(2);
        const auto s = NumericalSemigroup::from_generators(raw);
        EXPECT_EQ(s.generators(), oracle::Semigroup(raw).minimal_generators());
    }
}

TEST(Semigroup, ResidueMinimaAreShortestPaths) {
    const std::vector<Int> gens{5, 7, 9};
    const auto minima = detail::residue_minima(6, gens);
    oracle::Semigroup o(gens);
    for (Int r = 0; r < 6; ++r) {
        Int w = r;
        while (!o.contains(w)) w += 6;
        EXPECT_EQ(minima[static_cast<std::size_t>(r)], w);
    }
}
