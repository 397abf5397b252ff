#include "ngsemi/nearly.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ngsemi/checked.hpp"
#include "ngsemi/error.hpp"

namespace ngsemi {

namespace {

bool is_pseudo_frobenius(const NumericalSemigroup& s, Int f) {
    const auto& pf = s.pseudo_frobenius();
    return std::binary_search(pf.begin(), pf.end(), f);
}

bool admissible(const NumericalSemigroup& s, std::size_t i, Int candidate) {
    const Int n = s.generator(i);
    for (Int f : s.pseudo_frobenius())
        if (!s.contains(checked::sub(checked::add(n, candidate), f))) return false;
    return true;
}

std::vector<std::vector<Int>> all_candidates(const NumericalSemigroup& s) {
    std::vector<std::vector<Int>> out;
    out.reserve(s.embedding_dimension());
    for (std::size_t i = 0; i < s.embedding_dimension(); ++i) out.push_back(ng_candidates(s, i));
    return out;
}

// Kuhn's augmenting path step.
bool augment(std::size_t position, const std::vector<std::vector<std::size_t>>& options,
             std::vector<std::optional<std::size_t>>& owner, std::vector<bool>& visited) {
    for (std::size_t value : options[position]) {
        if (visited[value]) continue;
        visited[value] = true;
        if (!owner[value] || augment(*owner[value], options, owner, visited)) {
            owner[value] = position;
            return true;
        }
    }
    return false;
}

} // namespace

bool is_symmetric(const NumericalSemigroup& s) { return s.pseudo_frobenius().size() == 1; }

bool is_almost_symmetric(const NumericalSemigroup& s) {
    const Int frobenius = s.frobenius();
    for (Int f : s.pseudo_frobenius())
        if (f != frobenius && !is_pseudo_frobenius(s, frobenius - f)) return false;
    return true;
}

std::vector<Int> ng_candidates(const NumericalSemigroup& s, std::size_t i) {
    if (i >= s.embedding_dimension())
        throw Error(ErrorCode::IndexOutOfRange, "generator index " + std::to_string(i));
    std::vector<Int> out;
    for (Int candidate : s.pseudo_frobenius())
        if (admissible(s, i, candidate)) out.push_back(candidate);
    return out;
}

bool is_nearly_gorenstein(const NumericalSemigroup& s) {
    for (std::size_t i = 0; i < s.embedding_dimension(); ++i) {
        const bool any = std::any_of(s.pseudo_frobenius().begin(), s.pseudo_frobenius().end(),
                                     [&](Int c) { return admissible(s, i, c); });
        if (!any) return false;
    }
    return true;
}

bool is_ng_vector(const NumericalSemigroup& s, const NGVector& v) {
    if (v.entries.size() != s.embedding_dimension()) return false;
    for (std::size_t i = 0; i < v.entries.size(); ++i)
        if (!is_pseudo_frobenius(s, v.entries[i]) || !admissible(s, i, v.entries[i])) return false;
    return true;
}

std::vector<NGVector> ng_vectors(const NumericalSemigroup& s, const Limits& limits) {
    const auto candidates = all_candidates(s);
    if (std::any_of(candidates.begin(), candidates.end(), [](const auto& c) { return c.empty(); })) return {};
    std::size_t total = 1;
    for (const auto& c : candidates) {
        if (__builtin_mul_overflow(total, c.size(), &total) || total > limits.max_ng_vectors)
            throw Error(ErrorCode::LimitExceeded, "more than " + std::to_string(limits.max_ng_vectors) + " NG-vectors");
    }

    // Odometer over the candidate lists; the last position varies fastest, so
    // the output is already in lexicographic order.
    std::vector<NGVector> out;
    out.reserve(total);
    std::vector<std::size_t> index(candidates.size(), 0);
    while (true) {
        NGVector v;
        v.entries.reserve(candidates.size());
        for (std::size_t i = 0; i < candidates.size(); ++i) v.entries.push_back(candidates[i][index[i]]);
        out.push_back(std::move(v));
        std::size_t k = candidates.size();
        while (k > 0) {
            --k;
            if (++index[k] < candidates[k].size()) break;
            index[k] = 0;
            if (k == 0) return out;
        }
    }
}

std::size_t ng_vector_count(const NumericalSemigroup& s) {
    constexpr auto saturated = std::numeric_limits<std::size_t>::max();
    std::size_t total = 1;
    for (std::size_t i = 0; i < s.embedding_dimension(); ++i) {
        const std::size_t c = ng_candidates(s, i).size();
        if (c == 0) return 0;
        if (total > saturated / c) total = saturated;
        else total *= c;
    }
    return total;
}

bool admits_distinct_prefix(const NumericalSemigroup& s, std::size_t length) {
    if (length > s.embedding_dimension())
        throw Error(ErrorCode::IndexOutOfRange, "prefix length " + std::to_string(length));
    if (!is_nearly_gorenstein(s)) return false;
    const auto& pf = s.pseudo_frobenius();
    if (length > pf.size()) return false;

    std::vector<std::vector<std::size_t>> options(length);
    for (std::size_t i = 0; i < length; ++i)
        for (std::size_t k = 0; k < pf.size(); ++k)
            if (admissible(s, i, pf[k])) options[i].push_back(k);

    std::vector<std::optional<std::size_t>> owner(pf.size());
    for (std::size_t i = 0; i < length; ++i) {
        std::vector<bool> visited(pf.size(), false);
        if (!augment(i, options, owner, visited)) return false;
    }
    return true;
}

NGVectorStructure verify_ng_vector_structure(const NumericalSemigroup& s, const NGVector& v) {
    if (!is_ng_vector(s, v)) throw Error(ErrorCode::InvalidNGVector, "not an NG-vector of " + to_string(s));
    const Int frobenius = s.frobenius();
    NGVectorStructure out;
    out.starts_with_frobenius = v.entries.front() == frobenius;
    for (std::size_t i = 0; i < v.entries.size(); ++i) {
        if (v.entries[i] == frobenius) continue;
        out.first_deviation = i;
        for (std::size_t l = 0; l < i; ++l)
            if (v.entries[i] == frobenius - s.generator(i) + s.generator(l)) {
                out.witness = l;
                break;
            }
        break;
    }
    return out;
}

bool has_canonical_reduction(const NumericalSemigroup& s) {
    const Int base = checked::add(s.multiplicity(), s.frobenius());
    for (Int f : s.pseudo_frobenius())
        if (!s.contains(base - f)) return false;
    return true;
}

WilfCheck wilf_check(const NumericalSemigroup& s) {
    WilfCheck out;
    out.conductor = s.conductor();
    out.n_count = s.conductor() - s.genus();
    const auto t = static_cast<Int>(type(s));
    const auto v = static_cast<Int>(s.embedding_dimension());
    out.holds_fgh = out.conductor <= checked::mul(out.n_count, t + 1);
    out.holds_wilf = out.conductor <= checked::mul(out.n_count, v);
    return out;
}

HierarchyReport hierarchy(const NumericalSemigroup& s) {
    HierarchyReport out;
    out.symmetric = is_symmetric(s);
    out.almost_symmetric = is_almost_symmetric(s);
    out.nearly_gorenstein = is_nearly_gorenstein(s);
    out.canonical_reduction = has_canonical_reduction(s);
    out.type = type(s);
    out.ng_vector_count = out.nearly_gorenstein ? ng_vector_count(s) : 0;
    return out;
}

} // namespace ngsemi
