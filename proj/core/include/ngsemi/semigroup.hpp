#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ngsemi {

using Int = std::int64_t;

// Caps on the combinatorial outputs. Each one trips LimitExceeded instead of
// letting a product explode silently.
struct Limits {
    std::size_t max_factorizations = 1'000'000;
    std::size_t max_ng_vectors = 1'000'000;
    std::size_t max_matrices = 1'000'000;
    // The Apéry table is dense in the multiplicity.
    Int max_multiplicity = Int{1} << 24;
};

/// A numerical semigroup S = <n_1, ..., n_v> held by its minimal generators
/// and its Apéry table with respect to the multiplicity.
///
/// Values are immutable once built, so they can be shared between threads.
/// The whole of N is a valid semigroup here: generators {1}, Frobenius
/// number -1 and pseudo-Frobenius set {-1}.
class NumericalSemigroup {
public:
    /// Builds <gens>. The input is deduplicated and reduced to the minimal
    /// generating system. Throws EmptyGenerators, GcdNotOne, Overflow or
    /// ResourceLimit (multiplicity above limits.max_multiplicity).
    static NumericalSemigroup from_generators(std::span<const Int> gens, const Limits& limits = {});
    static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
        return from_generators(std::span<const Int>(gens.begin(), gens.size()));
    }

    const std::vector<Int>& generators() const noexcept { return generators_; }
    Int generator(std::size_t i) const { return generators_.at(i); }
    std::size_t embedding_dimension() const noexcept { return generators_.size(); }
    Int multiplicity() const noexcept { return generators_.front(); }

    /// apery()[r] is the least element of S congruent to r mod multiplicity().
    const std::vector<Int>& apery() const noexcept { return apery_; }
    Int frobenius() const noexcept { return frobenius_; }
    Int conductor() const noexcept { return frobenius_ + 1; }
    Int genus() const noexcept { return genus_; }
    /// Sorted ascending; the last entry is the Frobenius number.
    const std::vector<Int>& pseudo_frobenius() const noexcept { return pseudo_frobenius_; }

    bool contains(Int z) const noexcept {
        if (z < 0) return false;
        return z >= apery_[static_cast<std::size_t>(z % multiplicity())];
    }

    bool is_whole_naturals() const noexcept { return generators_.size() == 1; }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.generators_ == b.generators_;
    }
    friend auto operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.generators_ <=> b.generators_;
    }

private:
    NumericalSemigroup() = default;

    std::vector<Int> generators_;
    std::vector<Int> apery_;
    std::vector<Int> pseudo_frobenius_;
    Int frobenius_ = -1;
    Int genus_ = 0;
};

/// Coefficient vector (a_1, ..., a_v) of an expression sum a_i n_i.
struct Factorization {
    std::vector<Int> coefficients;

    friend bool operator==(const Factorization&, const Factorization&) = default;
    friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

inline bool contains(const NumericalSemigroup& s, Int z) noexcept { return s.contains(z); }

/// Least element of S in each residue class mod n, for n in S \ {0}.
std::vector<Int> apery_set(const NumericalSemigroup& s, Int n);

std::vector<Int> gaps(const NumericalSemigroup& s);

inline const std::vector<Int>& pseudo_frobenius(const NumericalSemigroup& s) noexcept {
    return s.pseudo_frobenius();
}

inline std::size_t type(const NumericalSemigroup& s) noexcept { return s.pseudo_frobenius().size(); }

/// All factorizations of z, lexicographically descending. Throws
/// NotInSemigroup or LimitExceeded.
std::vector<Factorization> factorizations(const NumericalSemigroup& s, Int z,
                                          const Limits& limits = {});

/// Factorizations of z whose coefficient at generator index `avoid` (0-based)
/// is zero.
std::vector<Factorization> factorizations_avoiding(const NumericalSemigroup& s, Int z,
                                                   std::size_t avoid,
                                                   const Limits& limits = {});

Int evaluate(const NumericalSemigroup& s, const Factorization& f);

/// "<4,5,11>"
std::string to_string(const NumericalSemigroup& s);

namespace detail {

// Shortest path over residues mod `modulus` with an edge of weight g for each
// generator g; entry r is the least nonnegative combination congruent to r.
std::vector<Int> residue_minima(Int modulus, std::span<const Int> gens);

} // namespace detail

} // namespace ngsemi
