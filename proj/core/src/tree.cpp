#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "ngsemi/enumeration.hpp"
#include "ngsemi/error.hpp"
#include "ngsemi/nearly.hpp"
#include "tree_internal.hpp"

namespace ngsemi {

TreeNode TreeNode::root(int max_genus) {
    if (max_genus < 1) throw Error(ErrorCode::InvalidArgument, "max_genus must be at least 1");
    if (max_genus > max_supported_genus)
        throw Error(ErrorCode::ResourceLimit, "max_genus " + std::to_string(max_genus) + " is beyond the supported " +
                                                  std::to_string(max_supported_genus));
    // Conductor <= 2g and multiplicity <= g + 1 below genus g, and children
    // read one multiplicity past the conductor.
    const auto capacity = static_cast<std::size_t>(3 * max_genus + 3);
    TreeNode node;
    node.decompositions_.resize(capacity);
    for (std::size_t x = 0; x < capacity; ++x) node.decompositions_[x] = static_cast<std::uint8_t>(x / 2 + 1);
    return node;
}

std::vector<Int> TreeNode::minimal_generators() const {
    std::vector<Int> out;
    for (Int x = 1; x <= conductor_ + multiplicity_; ++x)
        if (decompositions_[static_cast<std::size_t>(x)] == 1) out.push_back(x);
    return out;
}

std::size_t TreeNode::embedding_dimension() const {
    std::size_t count = 0;
    for (Int x = 1; x <= conductor_ + multiplicity_; ++x)
        count += decompositions_[static_cast<std::size_t>(x)] == 1;
    return count;
}

std::vector<Int> TreeNode::removable_generators() const {
    std::vector<Int> out;
    for (Int x = std::max<Int>(conductor_, 1); x <= conductor_ + multiplicity_; ++x)
        if (decompositions_[static_cast<std::size_t>(x)] == 1) out.push_back(x);
    return out;
}

TreeNode TreeNode::remove_generator(Int x) const {
    TreeNode child = *this;
    const auto start = static_cast<std::size_t>(x);
    // Exactly the pair {x, y - x} disappears from every y >= x with y - x in S.
    for (std::size_t y = start; y < decompositions_.size(); ++y)
        if (decompositions_[y - start] > 0) --child.decompositions_[y];
    child.genus_ = genus_ + 1;
    child.conductor_ = x + 1;
    child.multiplicity_ = x == multiplicity_ ? multiplicity_ + 1 : multiplicity_;
    return child;
}

NumericalSemigroup TreeNode::to_semigroup() const {
    const auto gens = minimal_generators();
    return NumericalSemigroup::from_generators(gens);
}

namespace {

bool passes_dimension(const TreeParams& p, const TreeNode& node) {
    if (p.min_embedding_dimension == 0 && p.max_embedding_dimension == std::numeric_limits<std::size_t>::max())
        return true;
    const std::size_t dim = node.embedding_dimension();
    return dim >= p.min_embedding_dimension && dim <= p.max_embedding_dimension;
}

bool passes_properties(const TreeParams& p, const NumericalSemigroup& s) {
    for (Property prop : p.required) {
        bool ok = false;
        switch (prop) {
        case Property::symmetric: ok = is_symmetric(s); break;
        case Property::not_symmetric: ok = !is_symmetric(s); break;
        case Property::almost_symmetric: ok = is_almost_symmetric(s); break;
        case Property::nearly_gorenstein: ok = is_nearly_gorenstein(s); break;
        case Property::canonical_reduction: ok = has_canonical_reduction(s); break;
        }
        if (!ok) return false;
    }
    return true;
}

template <class Emit>
void walk(const TreeNode& node, int max_genus, const Emit& emit) {
    emit(node);
    if (node.genus() >= max_genus) return;
    for (Int x : node.removable_generators()) walk(node.remove_generator(x), max_genus, emit);
}

// Generic driver: emit(worker, node) sees every tree node exactly once.
template <class Emit>
void drive(const TreeParams& params, const Emit& emit) {
    const TreeNode root = TreeNode::root(params.max_genus);
    const unsigned threads = std::max(1u, params.threads);
    if (threads == 1) {
        walk(root, params.max_genus, [&](const TreeNode& n) { emit(0u, n); });
        return;
    }

    // Shallow levels are walked on the calling thread; the frontier at
    // split_genus becomes the task list.
    const int split_genus = std::min(params.max_genus, 10);
    std::vector<TreeNode> frontier;
    walk(root, split_genus, [&](const TreeNode& n) {
        if (n.genus() == split_genus) frontier.push_back(n);
        else emit(0u, n);
    });

    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::mutex failure_lock;
    for (unsigned w = 0; w < threads; ++w)
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < frontier.size() && !failed; i = next++)
                    walk(frontier[i], params.max_genus, [&](const TreeNode& n) { emit(w, n); });
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure) failure = std::current_exception();
                failed = true;
            }
        });
    workers.clear();
    if (failure) std::rethrow_exception(failure);
}

} // namespace

void enumerate(const TreeParams& params, const std::function<void(const NumericalSemigroup&)>& visit) {
    TreeParams sequential = params;
    sequential.threads = 1;
    drive(sequential, [&](unsigned, const TreeNode& node) {
        if (!passes_dimension(params, node)) return;
        const auto s = node.to_semigroup();
        if (passes_properties(params, s)) visit(s);
    });
}

void enumerate_parallel(const TreeParams& params,
                        const std::function<void(unsigned worker, const NumericalSemigroup&)>& visit) {
    drive(params, [&](unsigned worker, const TreeNode& node) {
        if (!passes_dimension(params, node)) return;
        const auto s = node.to_semigroup();
        if (passes_properties(params, s)) visit(worker, s);
    });
}

std::vector<std::uint64_t> count_by_genus(const TreeParams& params) {
    const unsigned threads = std::max(1u, params.threads);
    std::vector<std::vector<std::uint64_t>> per_worker(
        threads, std::vector<std::uint64_t>(static_cast<std::size_t>(params.max_genus) + 1, 0));
    const bool trivial_filter = params.required.empty();
    drive(params, [&](unsigned worker, const TreeNode& node) {
        if (!passes_dimension(params, node)) return;
        if (!trivial_filter && !passes_properties(params, node.to_semigroup())) return;
        ++per_worker[worker][static_cast<std::size_t>(node.genus())];
    });
    std::vector<std::uint64_t> total(static_cast<std::size_t>(params.max_genus) + 1, 0);
    for (const auto& counts : per_worker)
        for (std::size_t g = 0; g < counts.size(); ++g) total[g] += counts[g];
    return total;
}

namespace detail {

// Used by the theorem sweeps: visits every node with its worker index, letting
// the caller pre-filter on cheap node data before building the semigroup.
void for_each_node(int max_genus, unsigned threads,
                   const std::function<void(unsigned worker, const TreeNode& node)>& visit) {
    TreeParams params;
    params.max_genus = max_genus;
    params.threads = threads;
    drive(params, visit);
}

} // namespace detail

} // namespace ngsemi
