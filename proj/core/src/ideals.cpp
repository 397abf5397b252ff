#include "ngsemi/ideals.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ngsemi/checked.hpp"
#include "ngsemi/error.hpp"

namespace ngsemi {

namespace {

constexpr Int unbounded = std::numeric_limits<Int>::max();

std::size_t residue(Int z, Int m) { return static_cast<std::size_t>(checked::mod(z, m)); }

void require_same_ambient(const RelativeIdeal& i, const RelativeIdeal& j) {
    if (i.ambient_ptr() != j.ambient_ptr() && !(i.ambient() == j.ambient()))
        throw Error(ErrorCode::AmbientMismatch,
                    to_string(i.ambient()) + " vs " + to_string(j.ambient()));
}

} // namespace

RelativeIdeal RelativeIdeal::generated_by(std::shared_ptr<const NumericalSemigroup> ambient,
                                          std::span<const Int> generators) {
    if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "relative ideal needs a generator");
    const Int m = ambient->multiplicity();
    const auto& apery = ambient->apery();
    std::vector<Int> minima(apery.size(), unbounded);
    for (Int g : generators)
        for (std::size_t r = 0; r < apery.size(); ++r) {
            const Int candidate = checked::add(g, apery[r]);
            auto& slot = minima[residue(candidate, m)];
            slot = std::min(slot, candidate);
        }
    return RelativeIdeal(std::move(ambient), std::move(minima));
}

RelativeIdeal RelativeIdeal::from_minima(std::shared_ptr<const NumericalSemigroup> ambient,
                                         std::vector<Int> min_per_residue) {
    const Int m = ambient->multiplicity();
    if (min_per_residue.size() != static_cast<std::size_t>(m))
        throw Error(ErrorCode::InvalidArgument, "expected one minimum per residue mod " + std::to_string(m));
    for (std::size_t r = 0; r < min_per_residue.size(); ++r) {
        if (residue(min_per_residue[r], m) != r)
            throw Error(ErrorCode::InvalidArgument, "minimum " + std::to_string(min_per_residue[r]) +
                                                        " is not congruent to " + std::to_string(r));
        for (Int n : ambient->generators()) {
            const Int shifted = checked::add(min_per_residue[r], n);
            if (min_per_residue[residue(shifted, m)] > shifted)
                throw Error(ErrorCode::InvalidArgument, "residue minima not closed under S");
        }
    }
    return RelativeIdeal(std::move(ambient), std::move(min_per_residue));
}

bool RelativeIdeal::contains(Int z) const noexcept {
    const Int m = ambient_->multiplicity();
    return z >= minima_[static_cast<std::size_t>(checked::mod(z, m))];
}

bool RelativeIdeal::includes(const RelativeIdeal& other) const {
    require_same_ambient(*this, other);
    for (std::size_t r = 0; r < minima_.size(); ++r)
        if (other.minima_[r] < minima_[r]) return false;
    return true;
}

Int RelativeIdeal::min_element() const { return *std::min_element(minima_.begin(), minima_.end()); }

std::vector<Int> RelativeIdeal::minimal_generators() const {
    std::vector<Int> out;
    for (Int w : minima_) {
        const bool reachable = std::any_of(minima_.begin(), minima_.end(), [&](Int other) {
            return other != w && w > other && ambient_->contains(w - other);
        });
        if (!reachable) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RelativeIdeal semigroup_as_ideal(std::shared_ptr<const NumericalSemigroup> s) {
    auto minima = s->apery();
    return RelativeIdeal::from_minima(std::move(s), std::move(minima));
}

RelativeIdeal maximal_ideal(std::shared_ptr<const NumericalSemigroup> s) {
    auto minima = s->apery();
    minima[0] = s->multiplicity();
    return RelativeIdeal::from_minima(std::move(s), std::move(minima));
}

RelativeIdeal canonical_ideal(std::shared_ptr<const NumericalSemigroup> s) {
    const Int frobenius = s->frobenius();
    std::vector<Int> generators;
    for (Int f : s->pseudo_frobenius()) generators.push_back(frobenius - f);
    return RelativeIdeal::generated_by(std::move(s), generators);
}

RelativeIdeal ideal_sum(const RelativeIdeal& i, const RelativeIdeal& j) {
    require_same_ambient(i, j);
    const Int m = i.ambient().multiplicity();
    const auto& a = i.min_per_residue();
    const auto& b = j.min_per_residue();
    std::vector<Int> minima(a.size(), unbounded);
    for (Int x : a)
        for (Int y : b) {
            const Int z = checked::add(x, y);
            auto& slot = minima[residue(z, m)];
            slot = std::min(slot, z);
        }
    return RelativeIdeal::from_minima(i.ambient_ptr(), std::move(minima));
}

RelativeIdeal ideal_difference(const RelativeIdeal& i, const RelativeIdeal& j) {
    require_same_ambient(i, j);
    // z + J in I iff z + g in I for every residue minimum g of J, so the least
    // z in class r is the largest of I[r + s] - J[s].
    const Int m = i.ambient().multiplicity();
    const auto& a = i.min_per_residue();
    const auto& b = j.min_per_residue();
    std::vector<Int> minima(a.size(), std::numeric_limits<Int>::min());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t s = 0; s < b.size(); ++s) {
            const Int bound = checked::sub(a[(r + s) % static_cast<std::size_t>(m)], b[s]);
            minima[r] = std::max(minima[r], bound);
        }
    return RelativeIdeal::from_minima(i.ambient_ptr(), std::move(minima));
}

bool ng_by_trace(const NumericalSemigroup& s) {
    auto ambient = std::make_shared<const NumericalSemigroup>(s);
    const auto k = canonical_ideal(ambient);
    const auto trace = ideal_sum(k, ideal_difference(semigroup_as_ideal(ambient), k));
    return trace.includes(maximal_ideal(ambient));
}

} // namespace ngsemi
