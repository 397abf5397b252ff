#include "ngsemi/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "ngsemi/checked.hpp"
#include "ngsemi/error.hpp"

namespace ngsemi {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotInSemigroup: return "NotInSemigroup";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::InvalidNGVector: return "InvalidNGVector";
    case ErrorCode::NotPseudoFrobenius: return "NotPseudoFrobenius";
    case ErrorCode::MatrixMismatch: return "MatrixMismatch";
    case ErrorCode::IsMinimalGenerator: return "IsMinimalGenerator";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::EmbeddingDimensionTooSmall: return "EmbeddingDimensionTooSmall";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace detail {

std::vector<Int> residue_minima(Int modulus, std::span<const Int> gens) {
    constexpr Int unreached = std::numeric_limits<Int>::max();
    const auto size = static_cast<std::size_t>(modulus);
    std::vector<Int> dist(size, unreached);
    dist[0] = 0;

    using Entry = std::pair<Int, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (d != dist[r]) continue;
        for (Int g : gens) {
            if (g % modulus == 0) continue;
            const Int next = checked::add(d, g);
            const auto target = static_cast<std::size_t>((static_cast<Int>(r) + g % modulus) % modulus);
            if (next < dist[target]) {
                dist[target] = next;
                queue.emplace(next, target);
            }
        }
    }
    return dist;
}

} // namespace detail

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens,
                                                       const Limits& limits) {
    if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators given");
    std::vector<Int> sorted(gens.begin(), gens.end());
    for (Int g : sorted)
        if (g <= 0) throw Error(ErrorCode::InvalidArgument, "generator " + std::to_string(g) + " is not positive");
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Int g = 0;
    for (Int x : sorted) g = std::gcd(g, x);
    if (g != 1) throw Error(ErrorCode::GcdNotOne, "gcd of generators is " + std::to_string(g));

    const Int m = sorted.front();
    if (m > limits.max_multiplicity)
        throw Error(ErrorCode::ResourceLimit, "multiplicity " + std::to_string(m) + " exceeds table limit");

    NumericalSemigroup s;
    s.apery_ = detail::residue_minima(m, sorted);

    // An input generator is redundant iff it is another generator plus an
    // element of S.
    const auto in_s = [&](Int z) { return z >= s.apery_[static_cast<std::size_t>(z % m)]; };
    for (Int x : sorted) {
        bool redundant = false;
        for (Int h : sorted) {
            if (h >= x) break;
            if (in_s(x - h)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) s.generators_.push_back(x);
    }

    Int max_apery = 0;
    Int genus = 0;
    for (Int w : s.apery_) {
        max_apery = std::max(max_apery, w);
        genus = checked::add(genus, w / m);
    }
    s.frobenius_ = max_apery - m;
    s.genus_ = genus;

    // w in Ap(S, m) is maximal for <=_S iff w + n_i leaves the Apéry set for
    // every generator other than m.
    for (std::size_t r = 0; r < s.apery_.size(); ++r) {
        const Int w = s.apery_[r];
        bool maximal = true;
        for (std::size_t i = 1; i < s.generators_.size(); ++i) {
            const Int up = checked::add(w, s.generators_[i]);
            if (s.apery_[static_cast<std::size_t>(up % m)] == up) {
                maximal = false;
                break;
            }
        }
        if (maximal) s.pseudo_frobenius_.push_back(w - m);
    }
    std::sort(s.pseudo_frobenius_.begin(), s.pseudo_frobenius_.end());
    return s;
}

std::vector<Int> apery_set(const NumericalSemigroup& s, Int n) {
    if (n == 0) throw Error(ErrorCode::ZeroElement, "Apéry set with respect to 0");
    if (!s.contains(n)) throw Error(ErrorCode::NotInSemigroup, std::to_string(n) + " is not in " + to_string(s));
    if (n == s.multiplicity()) return s.apery();
    return detail::residue_minima(n, s.generators());
}

std::vector<Int> gaps(const NumericalSemigroup& s) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(s.genus()));
    for (Int z = 1; z <= s.frobenius(); ++z)
        if (!s.contains(z)) out.push_back(z);
    return out;
}

namespace {

class FactorizationSearch {
public:
    FactorizationSearch(const NumericalSemigroup& s, std::size_t avoid, std::size_t cap)
        : gens_(s.generators()), avoid_(avoid), cap_(cap), current_(gens_.size(), 0),
          suffix_gcd_(gens_.size() + 1, 0) {
        for (std::size_t k = gens_.size(); k-- > 0;)
            suffix_gcd_[k] = k == avoid_ ? suffix_gcd_[k + 1] : std::gcd(suffix_gcd_[k + 1], gens_[k]);
    }

    std::vector<Factorization> run(Int z) {
        descend(0, z);
        return std::move(found_);
    }

private:
    void descend(std::size_t k, Int remaining) {
        if (k == gens_.size()) {
            if (remaining != 0) return;
            if (found_.size() >= cap_)
                throw Error(ErrorCode::LimitExceeded, "more than " + std::to_string(cap_) + " factorizations");
            found_.push_back(Factorization{current_});
            return;
        }
        if (k == avoid_) {
            descend(k + 1, remaining);
            return;
        }
        const Int tail_gcd = suffix_gcd_[k + 1];
        for (Int a = remaining / gens_[k]; a >= 0; --a) {
            const Int rest = remaining - a * gens_[k];
            if (tail_gcd == 0 ? rest != 0 : rest % tail_gcd != 0) continue;
            current_[k] = a;
            descend(k + 1, rest);
        }
        current_[k] = 0;
    }

    const std::vector<Int>& gens_;
    std::size_t avoid_;
    std::size_t cap_;
    std::vector<Int> current_;
    std::vector<Int> suffix_gcd_;
    std::vector<Factorization> found_;
};

} // namespace

std::vector<Factorization> factorizations(const NumericalSemigroup& s, Int z, const Limits& limits) {
    if (!s.contains(z)) throw Error(ErrorCode::NotInSemigroup, std::to_string(z) + " is not in " + to_string(s));
    return FactorizationSearch(s, s.embedding_dimension(), limits.max_factorizations).run(z);
}

std::vector<Factorization> factorizations_avoiding(const NumericalSemigroup& s, Int z, std::size_t avoid,
                                                   const Limits& limits) {
    if (avoid >= s.embedding_dimension())
        throw Error(ErrorCode::IndexOutOfRange, "generator index " + std::to_string(avoid));
    if (!s.contains(z)) throw Error(ErrorCode::NotInSemigroup, std::to_string(z) + " is not in " + to_string(s));
    return FactorizationSearch(s, avoid, limits.max_factorizations).run(z);
}

Int evaluate(const NumericalSemigroup& s, const Factorization& f) {
    if (f.coefficients.size() != s.embedding_dimension())
        throw Error(ErrorCode::InvalidArgument, "factorization length differs from embedding dimension");
    Int total = 0;
    for (std::size_t i = 0; i < f.coefficients.size(); ++i)
        total = checked::add(total, checked::mul(f.coefficients[i], s.generators()[i]));
    return total;
}

std::string to_string(const NumericalSemigroup& s) {
    std::ostringstream out;
    out << '<';
    for (std::size_t i = 0; i < s.generators().size(); ++i) out << (i ? "," : "") << s.generators()[i];
    out << '>';
    return out.str();
}

} // namespace ngsemi
