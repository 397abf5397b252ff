#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ngsemi/semigroup.hpp"

namespace ngsemi {

/// (f_1, ..., f_v) in PF(S)^v with n_i + f_i - f in S for every f in PF(S).
struct NGVector {
    std::vector<Int> entries;

    friend bool operator==(const NGVector&, const NGVector&) = default;
    friend auto operator<=>(const NGVector&, const NGVector&) = default;
};

bool is_symmetric(const NumericalSemigroup& s);

/// Nari's criterion: F(S) - f is pseudo-Frobenius for every f in PF(S) other
/// than F(S) itself.
bool is_almost_symmetric(const NumericalSemigroup& s);

/// The f_i in PF(S) admissible at generator index i (0-based). Sorted.
std::vector<Int> ng_candidates(const NumericalSemigroup& s, std::size_t i);

bool is_nearly_gorenstein(const NumericalSemigroup& s);

bool is_ng_vector(const NumericalSemigroup& s, const NGVector& v);

/// Every NG-vector, lexicographically ascending. Empty iff S is not nearly
/// Gorenstein. Throws LimitExceeded past limits.max_ng_vectors.
std::vector<NGVector> ng_vectors(const NumericalSemigroup& s, const Limits& limits = {});

/// Size of the candidate product without materializing it; saturates at
/// SIZE_MAX.
std::size_t ng_vector_count(const NumericalSemigroup& s);

/// Whether some NG-vector has pairwise distinct entries in its first `length`
/// positions. Decided by bipartite matching between positions and PF(S), so
/// it stays cheap when the candidate product is astronomically large.
bool admits_distinct_prefix(const NumericalSemigroup& s, std::size_t length);

// Shape of an NG-vector: f_1 should be F(S), and at the first index i with
// f_i != F(S) there should be l < i with f_i = F(S) - n_i + n_l.
struct NGVectorStructure {
    bool starts_with_frobenius = false;
    std::optional<std::size_t> first_deviation;  // i, 0-based
    std::optional<std::size_t> witness;          // l, 0-based

    bool all_equal_frobenius() const { return !first_deviation.has_value(); }
    bool conforms() const { return starts_with_frobenius && (!first_deviation || witness.has_value()); }
};

/// Throws InvalidNGVector when v is not an NG-vector of S.
NGVectorStructure verify_ng_vector_structure(const NumericalSemigroup& s, const NGVector& v);

/// n_1 + F(S) - f in S for every f in PF(S).
bool has_canonical_reduction(const NumericalSemigroup& s);

struct WilfCheck {
    Int conductor = 0;
    Int n_count = 0;     // |S ∩ [0, F(S)]|
    bool holds_fgh = false;   // F + 1 <= n (t + 1)
    bool holds_wilf = false;  // F + 1 <= n v
};

WilfCheck wilf_check(const NumericalSemigroup& s);

struct HierarchyReport {
    bool symmetric = false;
    bool almost_symmetric = false;
    bool nearly_gorenstein = false;
    bool canonical_reduction = false;
    std::size_t type = 0;
    std::size_t ng_vector_count = 0;

    bool consistent() const {
        return (!symmetric || almost_symmetric) && (!almost_symmetric || nearly_gorenstein) &&
               (!nearly_gorenstein || canonical_reduction);
    }
};

HierarchyReport hierarchy(const NumericalSemigroup& s);

} // namespace ngsemi
