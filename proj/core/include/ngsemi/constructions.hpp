#pragma once

#include <vector>

#include "ngsemi/semigroup.hpp"

namespace ngsemi {

/// Gluing <x S1, y S2> with x in S2 \ G(S2), y in S1 \ G(S1), gcd(x, y) = 1.
struct GluingSpec {
    NumericalSemigroup s1;
    NumericalSemigroup s2;
    Int x = 0;
    Int y = 0;
};

/// <a, sa + d, sa + 2d, ..., sa + nd> with gcd(a, d) = 1 and n >= 2.
struct GASSpec {
    Int a = 0;
    Int s = 0;
    Int d = 0;
    Int n = 0;
};

// A constructed semigroup together with the pseudo-Frobenius set predicted by
// the construction's closed formula (sorted, not recomputed from S).
struct Construction {
    NumericalSemigroup semigroup;
    std::vector<Int> formula_pseudo_frobenius;
};

/// Throws NotInSemigroup, IsMinimalGenerator or NotCoprime.
Construction glue(const GluingSpec& spec);

/// T = <d n_1, ..., d n_{v-1}, n_v>, PF(T) = { d f + (d - 1) n_v }.
/// d = 1 returns S. Throws NotCoprime when gcd(d, n_v) != 1 and
/// EmbeddingDimensionTooSmall for S = N with d >= 2.
Construction dilate(const NumericalSemigroup& s, Int d);

/// The listed sequence a, sa + d, ..., sa + nd (validated).
std::vector<Int> gas_generators(const GASSpec& spec);

/// Throws NotCoprime, or NotMinimal when the sequence is not the minimal
/// generating system of the semigroup it generates.
NumericalSemigroup gas(const GASSpec& spec);

/// Closed-form nearly Gorenstein prediction: s = 1 or a = 2 mod n.
bool gas_ng_predicted(const GASSpec& spec);

} // namespace ngsemi
