#pragma once

#include <memory>
#include <span>
#include <vector>

#include "ngsemi/semigroup.hpp"

namespace ngsemi {

// A relative ideal I of S (I + S in I, bounded below). Since I + m is in I,
// each residue class mod m meets I in a single ray, so I is stored as the
// least element of each class.
class RelativeIdeal {
public:
    /// The ideal generated over S by the given integers.
    static RelativeIdeal generated_by(std::shared_ptr<const NumericalSemigroup> ambient,
                                      std::span<const Int> generators);
    /// Wraps residue minima as-is; throws InvalidArgument when the vector is
    /// not closed under adding generators of the ambient semigroup.
    static RelativeIdeal from_minima(std::shared_ptr<const NumericalSemigroup> ambient,
                                     std::vector<Int> min_per_residue);

    const NumericalSemigroup& ambient() const noexcept { return *ambient_; }
    const std::shared_ptr<const NumericalSemigroup>& ambient_ptr() const noexcept { return ambient_; }
    const std::vector<Int>& min_per_residue() const noexcept { return minima_; }

    bool contains(Int z) const noexcept;
    bool includes(const RelativeIdeal& other) const;
    Int min_element() const;
    /// Residue minima that cannot be reached from another minimum by adding
    /// an element of S. They generate the ideal.
    std::vector<Int> minimal_generators() const;

    friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
        return *a.ambient_ == *b.ambient_ && a.minima_ == b.minima_;
    }

private:
    RelativeIdeal(std::shared_ptr<const NumericalSemigroup> ambient, std::vector<Int> minima)
        : ambient_(std::move(ambient)), minima_(std::move(minima)) {}

    std::shared_ptr<const NumericalSemigroup> ambient_;
    std::vector<Int> minima_;
};

RelativeIdeal semigroup_as_ideal(std::shared_ptr<const NumericalSemigroup> s);
/// M(S) = S \ {0}
RelativeIdeal maximal_ideal(std::shared_ptr<const NumericalSemigroup> s);
/// K(S) = { z : F(S) - z not in S }
RelativeIdeal canonical_ideal(std::shared_ptr<const NumericalSemigroup> s);

/// I + J. Throws AmbientMismatch.
RelativeIdeal ideal_sum(const RelativeIdeal& i, const RelativeIdeal& j);
/// I - J = { z : z + J in I }. Throws AmbientMismatch.
RelativeIdeal ideal_difference(const RelativeIdeal& i, const RelativeIdeal& j);

/// Nearly Gorenstein test through M(S) in K(S) + (S - K(S)).
bool ng_by_trace(const NumericalSemigroup& s);

} // namespace ngsemi
