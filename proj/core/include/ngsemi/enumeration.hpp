#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ngsemi/semigroup.hpp"

namespace ngsemi {

/// Node of the semigroup tree. Children are obtained by removing a minimal
/// generator larger than the Frobenius number, so every numerical semigroup
/// of genus g sits at depth g exactly once.
///
/// The node stores, for each integer x below a fixed capacity, the number of
/// unordered pairs {a, b} of elements of S with a + b = x. Membership is
/// count > 0 and x > 0 is a minimal generator iff its count is 1 (only
/// {0, x}).
class TreeNode {
public:
    /// Root node (S = N) sized for descendants up to max_genus.
    static TreeNode root(int max_genus);

    int genus() const noexcept { return genus_; }
    Int conductor() const noexcept { return conductor_; }
    Int multiplicity() const noexcept { return multiplicity_; }

    bool contains(Int x) const noexcept { return x >= conductor_ || decompositions_[static_cast<std::size_t>(x)] > 0; }
    std::vector<Int> minimal_generators() const;
    std::size_t embedding_dimension() const;
    /// Minimal generators above the Frobenius number, ascending.
    std::vector<Int> removable_generators() const;

    TreeNode remove_generator(Int x) const;
    NumericalSemigroup to_semigroup() const;

private:
    TreeNode() = default;

    int genus_ = 0;
    Int conductor_ = 0;
    Int multiplicity_ = 1;
    std::vector<std::uint8_t> decompositions_;
};

enum class Property { symmetric, not_symmetric, almost_symmetric, nearly_gorenstein, canonical_reduction };

struct TreeParams {
    int max_genus = 1;
    std::size_t min_embedding_dimension = 0;
    std::size_t max_embedding_dimension = std::numeric_limits<std::size_t>::max();
    std::vector<Property> required;
    unsigned threads = 1;
};

/// Largest accepted max_genus; deeper trees throw ResourceLimit.
inline constexpr int max_supported_genus = 60;

/// Emits every semigroup of genus <= max_genus that passes the filters, in
/// depth-first order, on the calling thread.
void enumerate(const TreeParams& params, const std::function<void(const NumericalSemigroup&)>& visit);

/// Same emission set as enumerate(), spread over params.threads workers by
/// subtree. `visit` receives the worker index (< params.threads) and may be
/// called concurrently for different workers; emission order is unspecified.
void enumerate_parallel(const TreeParams& params,
                        const std::function<void(unsigned worker, const NumericalSemigroup&)>& visit);

/// Number of emitted semigroups per genus 0..max_genus.
std::vector<std::uint64_t> count_by_genus(const TreeParams& params);

enum class TheoremId {
    type_bound_dim4,
    coprimality,
    hierarchy,
    distinct_corollary,
    type_bound_dim5,
    type_vs_embdim,
    canonical_reduction_dim4,
};

std::string_view to_string(TheoremId id) noexcept;
std::optional<TheoremId> parse_theorem_id(std::string_view text) noexcept;
/// Genus budget used when the caller gives none.
int default_max_genus(TheoremId id) noexcept;

struct Witness {
    std::vector<Int> generators;
    std::string reason;

    friend bool operator==(const Witness&, const Witness&) = default;
    friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct TheoremReport {
    TheoremId theorem = TheoremId::hierarchy;
    int max_genus = 0;
    std::uint64_t scanned = 0;
    std::uint64_t matched_hypothesis = 0;
    std::vector<Witness> violations;
    std::vector<Witness> notable;
    std::map<std::string, std::uint64_t> tallies;
    std::chrono::duration<double> elapsed{0};

    /// Counts add, witness lists concatenate; call sort_witnesses() after the
    /// last merge for a schedule-independent report.
    void merge(const TheoremReport& other);
    void sort_witnesses();
};

/// Runs one theorem's per-semigroup check in isolation (hypothesis match,
/// violations, notable findings). The sweep uses exactly this routine, so a
/// reported witness reproduces through it.
TheoremReport check_single(TheoremId id, const NumericalSemigroup& s);
bool reproduces(TheoremId id, const Witness& witness);

/// Exhaustive sweep over all semigroups of genus <= max_genus.
TheoremReport verify(TheoremId id, int max_genus, unsigned threads = 1);

TheoremReport verify_type_bound_dim4(int max_genus, unsigned threads = 1);
TheoremReport verify_coprimality(int max_genus, unsigned threads = 1);
TheoremReport verify_hierarchy(int max_genus, unsigned threads = 1);
TheoremReport verify_distinct_corollary(int max_genus, unsigned threads = 1);

enum class OpenQuestion { type_bound_dim5, type_vs_embdim, canonical_reduction_dim4 };
TheoremReport search_open_question(OpenQuestion preset, int max_genus, unsigned threads = 1);

} // namespace ngsemi
