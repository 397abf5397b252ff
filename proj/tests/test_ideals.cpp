#include <gtest/gtest.h>

#include <memory>

#include "ngsemi/enumeration.hpp"
#include "ngsemi/error.hpp"
#include "ngsemi/ideals.hpp"
#include "ngsemi/nearly.hpp"
#include "oracles.hpp"

using namespace ngsemi;

namespace {

std::shared_ptr<const NumericalSemigroup> make(std::initializer_list<Int> gens) {
    return std::make_shared<const NumericalSemigroup>(NumericalSemigroup::from_generators(gens));
}

std::shared_ptr<const NumericalSemigroup> share(const NumericalSemigroup& s) {
    return std::make_shared<const NumericalSemigroup>(s);
}

// Compares an ideal with an oracle set on [lo, hi].
void expect_same(const RelativeIdeal& ideal, const oracle::IdealSet& set, Int lo, Int hi) {
    for (Int z = lo; z <= hi; ++z) ASSERT_EQ(ideal.contains(z), set.contains(z)) << "z=" << z;
}

} // namespace

TEST(Ideals, MaximalIdeal) {
    EXPECT_EQ(maximal_ideal(make({4, 5, 11})).min_per_residue(), (std::vector<Int>{4, 5, 10, 11}));
    EXPECT_EQ(maximal_ideal(make({1})).min_per_residue(), std::vector<Int>{1});
    EXPECT_EQ(maximal_ideal(make({2, 3})).min_per_residue(), (std::vector<Int>{2, 3}));
}

TEST(Ideals, CanonicalIdeal) {
    const auto s = make({4, 5, 11});
    const auto k = canonical_ideal(s);
    // K = {z : 7 - z not in S}; 6 belongs since 7 - 6 = 1 is a gap.
    EXPECT_EQ(k.min_per_residue(), (std::vector<Int>{0, 1, 6, 11}));
    oracle::Semigroup o({4, 5, 11});
    expect_same(k, oracle::canonical(o, -10, 30), -10, 30);
    // K = S + {0, 1}
    const std::vector<Int> two{0, 1};
    EXPECT_EQ(k, RelativeIdeal::generated_by(s, two));

    const auto t = make({2, 3});
    EXPECT_EQ(canonical_ideal(t), semigroup_as_ideal(t));

    const auto u = make({10, 11, 12, 19});
    const std::vector<Int> gens{0, 9};
    EXPECT_EQ(canonical_ideal(u), RelativeIdeal::generated_by(u, gens));
}

TEST(Ideals, SumAndDifferenceExamples) {
    const auto s = make({4, 5, 11});
    const auto S = semigroup_as_ideal(s);
    EXPECT_EQ(ideal_sum(S, S), S);
    EXPECT_EQ(ideal_difference(S, S), S);

    const auto k = canonical_ideal(s);
    const auto s_minus_k = ideal_difference(S, k);
    // {4} together with every z >= 8
    for (Int z = -5; z <= 30; ++z) EXPECT_EQ(s_minus_k.contains(z), z == 4 || z >= 8) << z;
    const auto trace = ideal_sum(k, s_minus_k);
    EXPECT_TRUE(trace.includes(maximal_ideal(s)));

    const auto as = make({8, 9, 11, 15});
    EXPECT_EQ(ideal_sum(maximal_ideal(as), canonical_ideal(as)), maximal_ideal(as));

    // For <2,3>, S - M picks up the gap 1 (1 + 2 and 1 + 3 lie in S), so it is N.
    const auto t = make({2, 3});
    const auto t_minus_m = ideal_difference(semigroup_as_ideal(t), maximal_ideal(t));
    EXPECT_EQ(t_minus_m.min_per_residue(), (std::vector<Int>{0, 1}));
}

TEST(Ideals, AmbientMismatch) {
    const auto a = semigroup_as_ideal(make({4, 5, 11}));
    const auto b = semigroup_as_ideal(make({2, 3}));
    EXPECT_THROW(ideal_sum(a, b), Error);
    try {
        ideal_difference(a, b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AmbientMismatch);
    }
}

TEST(Ideals, FromMinimaValidatesClosure) {
    const auto s = make({4, 5, 11});
    EXPECT_NO_THROW(RelativeIdeal::from_minima(s, {0, 5, 10, 11}));
    // 0 + 5 = 5 in residue 1 but the stored minimum is 9.
    EXPECT_THROW(RelativeIdeal::from_minima(s, {0, 9, 10, 11}), Error);
    // Residue mismatch.
    EXPECT_THROW(RelativeIdeal::from_minima(s, {0, 2, 10, 11}), Error);
}

TEST(Ideals, MinimalGeneratorsRegenerate) {
    const auto s = make({10, 11, 12, 19});
    const auto k = canonical_ideal(s);
    const auto g = k.minimal_generators();
    EXPECT_EQ(RelativeIdeal::generated_by(s, g), k);
    EXPECT_EQ(k.min_element(), 0);
}

TEST(Ideals, NgByTraceExamples) {
    EXPECT_TRUE(ng_by_trace(NumericalSemigroup::from_generators({4, 5, 11})));
    EXPECT_FALSE(ng_by_trace(NumericalSemigroup::from_generators({16, 17, 19, 39})));
    EXPECT_TRUE(ng_by_trace(NumericalSemigroup::from_generators({2, 3})));
    EXPECT_TRUE(ng_by_trace(NumericalSemigroup::from_generators({1})));
}

// Residue minima against set scans, through genus 12.
TEST(Ideals, RepresentationMatchesSetScansThroughGenus12) {
    TreeParams params;
    params.max_genus = 12;
    enumerate(params, [&](const NumericalSemigroup& sg) {
        if (sg.is_whole_naturals()) return;
        const auto s = share(sg);
        oracle::Semigroup o(sg.generators());
        const Int f = sg.frobenius();
        const Int lo = -f - 4;
        const Int hi = 2 * (f + sg.multiplicity()) + 4;

        const auto k = canonical_ideal(s);
        const auto ok = oracle::canonical(o, lo, hi);
        expect_same(k, ok, lo, hi);

        const auto m = maximal_ideal(s);
        const auto om = oracle::ideal_from_predicate(lo, hi, [&](Int z) { return z > 0 && o.contains(z); });
        expect_same(m, om, lo, hi);

        const auto S = semigroup_as_ideal(s);
        const auto os = oracle::ideal_from_predicate(lo, hi, [&](Int z) { return o.contains(z); });
        const auto sk = ideal_difference(S, k);
        expect_same(sk, oracle::difference(os, ok, lo, hi), lo, hi);
        const auto trace = ideal_sum(k, sk);
        expect_same(trace, oracle::sum(ok, oracle::difference(os, ok, lo, hi), lo, hi), lo, hi);
        // The trace is an ideal of S.
        EXPECT_TRUE(S.includes(trace));

        const std::vector<Int> pf = sg.pseudo_frobenius();
        const auto gen = RelativeIdeal::generated_by(s, pf);
        expect_same(gen, oracle::generated(o, pf, lo, hi), lo, hi);
        // PF(S) + M(S) lies in S.
        EXPECT_TRUE(S.includes(ideal_sum(gen, m)));
    });
}

TEST(Ideals, TraceTestAgreesWithOracleThroughGenus10) {
    TreeParams params;
    params.max_genus = 10;
    enumerate(params, [&](const NumericalSemigroup& s) {
        EXPECT_EQ(ng_by_trace(s), oracle::nearly_gorenstein_by_trace(oracle::Semigroup(s.generators())))
            << to_string(s);
    });
}

TEST(Ideals, TraceTestAgreesWithNGVectorsThroughGenus18) {
    TreeParams params;
    params.max_genus = 18;
    std::size_t disagreements = 0;
    enumerate(params, [&](const NumericalSemigroup& s) {
        disagreements += ng_by_trace(s) != is_nearly_gorenstein(s);
        const bool k_is_s = canonical_ideal(share(s)) == semigroup_as_ideal(share(s));
        disagreements += k_is_s != is_symmetric(s);
    });
    EXPECT_EQ(disagreements, 0u);
}
