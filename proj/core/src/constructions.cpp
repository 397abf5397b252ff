#include "ngsemi/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ngsemi/checked.hpp"
#include "ngsemi/error.hpp"

namespace ngsemi {

namespace {

bool is_minimal_generator(const NumericalSemigroup& s, Int z) {
    const auto& g = s.generators();
    return std::binary_search(g.begin(), g.end(), z);
}

std::vector<Int> sorted_unique(std::vector<Int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

Construction glue(const GluingSpec& spec) {
    const auto& [s1, s2, x, y] = spec;
    if (!s2.contains(x)) throw Error(ErrorCode::NotInSemigroup, "x = " + std::to_string(x) + " not in " + to_string(s2));
    if (!s1.contains(y)) throw Error(ErrorCode::NotInSemigroup, "y = " + std::to_string(y) + " not in " + to_string(s1));
    if (is_minimal_generator(s2, x))
        throw Error(ErrorCode::IsMinimalGenerator, "x = " + std::to_string(x) + " generates " + to_string(s2));
    if (is_minimal_generator(s1, y))
        throw Error(ErrorCode::IsMinimalGenerator, "y = " + std::to_string(y) + " generates " + to_string(s1));
    if (std::gcd(x, y) != 1)
        throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(x) + ", " + std::to_string(y) + ") != 1");

    std::vector<Int> gens;
    for (Int n : s1.generators()) gens.push_back(checked::mul(x, n));
    for (Int n : s2.generators()) gens.push_back(checked::mul(y, n));

    std::vector<Int> pf;
    const Int xy = checked::mul(x, y);
    for (Int f1 : s1.pseudo_frobenius())
        for (Int f2 : s2.pseudo_frobenius())
            pf.push_back(checked::add(checked::add(checked::mul(x, f1), checked::mul(y, f2)), xy));

    return {NumericalSemigroup::from_generators(gens), sorted_unique(std::move(pf))};
}

Construction dilate(const NumericalSemigroup& s, Int d) {
    if (d <= 0) throw Error(ErrorCode::InvalidArgument, "dilation factor must be positive");
    if (d == 1) return {s, s.pseudo_frobenius()};
    if (s.embedding_dimension() < 2)
        throw Error(ErrorCode::EmbeddingDimensionTooSmall, "dilation needs at least two generators");
    const Int last = s.generators().back();
    if (std::gcd(d, last) != 1)
        throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(d) + ", " + std::to_string(last) + ") != 1");

    std::vector<Int> gens;
    for (std::size_t i = 0; i + 1 < s.embedding_dimension(); ++i) gens.push_back(checked::mul(d, s.generator(i)));
    gens.push_back(last);

    std::vector<Int> pf;
    const Int shift = checked::mul(d - 1, last);
    for (Int f : s.pseudo_frobenius()) pf.push_back(checked::add(checked::mul(d, f), shift));

    return {NumericalSemigroup::from_generators(gens), sorted_unique(std::move(pf))};
}

std::vector<Int> gas_generators(const GASSpec& spec) {
    if (spec.a <= 0 || spec.s <= 0 || spec.d <= 0)
        throw Error(ErrorCode::InvalidArgument, "a, s and d must be positive");
    if (spec.n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
    if (std::gcd(spec.a, spec.d) != 1)
        throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(spec.a) + ", " + std::to_string(spec.d) + ") != 1");
    std::vector<Int> gens{spec.a};
    const Int base = checked::mul(spec.s, spec.a);
    for (Int k = 1; k <= spec.n; ++k) gens.push_back(checked::add(base, checked::mul(k, spec.d)));
    return gens;
}

NumericalSemigroup gas(const GASSpec& spec) {
    const auto gens = gas_generators(spec);
    auto s = NumericalSemigroup::from_generators(gens);
    if (s.generators() != gens)
        throw Error(ErrorCode::NotMinimal, "sequence reduces to " + to_string(s));
    return s;
}

bool gas_ng_predicted(const GASSpec& spec) {
    gas(spec);
    return spec.s == 1 || checked::mod(spec.a - 2, spec.n) == 0;
}

} // namespace ngsemi
