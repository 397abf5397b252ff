#pragma once

#include <optional>
#include <vector>

#include "ngsemi/nearly.hpp"
#include "ngsemi/semigroup.hpp"

namespace ngsemi {

enum class RFKind { plus, minus };

/// Row-factorization matrix attached to f in PF(S).
///
/// plus:  a_ii = -1, a_ij >= 0 otherwise, and each row sums (against the
///        generators) to f.
/// minus: relative to an NG-vector; row i is zero when f_i = f, otherwise
///        b_ii = -1 and the row sums to f_i - f.
struct RFMatrix {
    RFKind kind = RFKind::plus;
    Int f = 0;
    std::optional<NGVector> ng_vector;
    std::vector<std::vector<Int>> entries;
};

inline bool operator==(const RFMatrix& a, const RFMatrix& b) {
    return a.kind == b.kind && a.f == b.f && a.ng_vector == b.ng_vector && a.entries == b.entries;
}

/// All RF+ matrices for f, ordered by their concatenated rows. Throws
/// NotPseudoFrobenius or LimitExceeded.
std::vector<RFMatrix> rf_plus_matrices(const NumericalSemigroup& s, Int f, const Limits& limits = {});

/// All RF- matrices for f relative to v. Throws NotPseudoFrobenius,
/// InvalidNGVector or LimitExceeded.
std::vector<RFMatrix> rf_minus_matrices(const NumericalSemigroup& s, const NGVector& v, Int f,
                                        const Limits& limits = {});

/// a_jk * b_kj == 0 for all j != k. Throws MatrixMismatch when the pair is not
/// an (RF+, RF-) pair for the same f and order.
bool check_coppie(const RFMatrix& plus, const RFMatrix& minus);

/// Re-evaluates the sign pattern and row sums of `m` against S.
bool satisfies_row_identities(const NumericalSemigroup& s, const RFMatrix& m);

// A concrete (RF+, RF-) pair breaking the product condition.
struct CoppieViolation {
    Int f = 0;
    RFMatrix plus;
    RFMatrix minus;
};

/// Searches every f in PF(S), every NG-vector and every (RF+, RF-) pair for a
/// product-condition failure. The condition couples row j of A with row k of
/// B only, so rows are checked pairwise instead of expanding the full matrix
/// products; a hit is expanded back into a full witness pair.
std::optional<CoppieViolation> find_coppie_violation(const NumericalSemigroup& s,
                                                     const Limits& limits = {});

} // namespace ngsemi
