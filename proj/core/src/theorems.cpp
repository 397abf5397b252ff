#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ngsemi/enumeration.hpp"
#include "ngsemi/error.hpp"
#include "ngsemi/ideals.hpp"
#include "ngsemi/nearly.hpp"
#include "tree_internal.hpp"

namespace ngsemi {

std::string_view to_string(TheoremId id) noexcept {
    switch (id) {
    case TheoremId::type_bound_dim4: return "type-bound-dim4";
    case TheoremId::coprimality: return "coprimality";
    case TheoremId::hierarchy: return "hierarchy";
    case TheoremId::distinct_corollary: return "distinct-corollary";
    case TheoremId::type_bound_dim5: return "type-bound-dim5";
    case TheoremId::type_vs_embdim: return "type-vs-embdim";
    case TheoremId::canonical_reduction_dim4: return "canonical-reduction-dim4";
    }
    return "unknown";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) noexcept {
    for (auto id : {TheoremId::type_bound_dim4, TheoremId::coprimality, TheoremId::hierarchy,
                    TheoremId::distinct_corollary, TheoremId::type_bound_dim5, TheoremId::type_vs_embdim,
                    TheoremId::canonical_reduction_dim4})
        if (to_string(id) == text) return id;
    return std::nullopt;
}

int default_max_genus(TheoremId id) noexcept {
    switch (id) {
    case TheoremId::type_bound_dim4: return 26;
    case TheoremId::coprimality: return 24;
    case TheoremId::distinct_corollary: return 20;
    default: return 22;
    }
}

void TheoremReport::merge(const TheoremReport& other) {
    scanned += other.scanned;
    matched_hypothesis += other.matched_hypothesis;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    notable.insert(notable.end(), other.notable.begin(), other.notable.end());
    for (const auto& [key, count] : other.tallies) tallies[key] += count;
}

void TheoremReport::sort_witnesses() {
    std::sort(violations.begin(), violations.end());
    std::sort(notable.begin(), notable.end());
}

namespace {

std::string show(const std::vector<Int>& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ')';
    return out.str();
}

bool same_set(std::vector<Int> a, std::vector<Int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// Collects at most one witness per distinct reason for a single semigroup.
class Findings {
public:
    Findings(const NumericalSemigroup& s, TheoremReport& report) : s_(s), report_(report) {}

    void violation(const std::string& reason) {
        if (seen_.insert("v:" + reason).second) report_.violations.push_back({s_.generators(), reason});
    }
    void notable(const std::string& reason) {
        if (seen_.insert("n:" + reason).second) report_.notable.push_back({s_.generators(), reason});
    }
    void tally(const std::string& key) { ++report_.tallies[key]; }
    void matched() { ++report_.matched_hypothesis; }

private:
    const NumericalSemigroup& s_;
    TheoremReport& report_;
    std::set<std::string> seen_;
};

// Shapes for embedding dimension four outside the almost symmetric case:
// PF = {F, F - n_i + n_l} or PF = {F, F - n_i + n_l, lambda n_k - n_j}.
void check_dim4_shape(const NumericalSemigroup& s, const NGVector& v, Findings& out) {
    const Int frobenius = s.frobenius();
    const auto& pf = s.pseudo_frobenius();
    const auto& e = v.entries;
    const auto first = std::find_if(e.begin(), e.end(), [&](Int x) { return x != frobenius; });
    if (first == e.end()) {
        out.violation("non-almost-symmetric semigroup admits the constant vector (F,...,F)");
        return;
    }
    const auto i = static_cast<std::size_t>(first - e.begin());
    std::optional<std::size_t> l;
    for (std::size_t c = 0; c < i; ++c)
        if (e[i] == frobenius - s.generator(i) + s.generator(c)) l = c;
    if (!l) {
        out.violation("NG-vector " + show(e) + ": first deviation is not F - n_i + n_l");
        return;
    }

    std::vector<Int> rest;
    for (Int f : pf)
        if (f != frobenius && f != e[i]) rest.push_back(f);
    if (rest.empty()) {
        out.tally("ng-vectors:pf-pair");
        return;
    }
    if (rest.size() == 1) {
        std::vector<std::size_t> others;
        for (std::size_t c = 0; c < 4; ++c)
            if (c != i && c != *l) others.push_back(c);
        const Int g = rest.front();
        for (auto [j, k] : {std::pair{others[0], others[1]}, std::pair{others[1], others[0]}}) {
            const Int shifted = g + s.generator(j);
            if (shifted >= 0 && shifted % s.generator(k) == 0) {
                out.tally("ng-vectors:pf-triple");
                return;
            }
        }
    }
    out.violation("NG-vector " + show(e) + ": PF matches neither admissible shape");
}

void check_dim4_dichotomies(const NumericalSemigroup& s, const NGVector& v, bool almost_symmetric,
                            Findings& out) {
    const Int frobenius = s.frobenius();
    const auto& pf = s.pseudo_frobenius();
    const auto& e = v.entries;

    if (e[1] == e[2] && e[2] == e[3] && e[1] != frobenius) {
        const Int f2 = e[1];
        const bool pair = same_set(pf, {f2, frobenius});
        const bool triple = f2 % 2 == 0 && same_set(pf, {f2 / 2, f2, frobenius});
        if (!pair && !triple) out.violation("NG-vector " + show(e) + ": f2=f3=f4 != F but PF is not {f2,F} or {f2/2,f2,F}");
    }

    for (std::size_t k = 1; k < 4; ++k) {
        const bool others_at_frobenius = [&] {
            for (std::size_t c = 1; c < 4; ++c)
                if (c != k && e[c] != frobenius) return false;
            return true;
        }();
        if (!others_at_frobenius || e[k] == frobenius) continue;
        for (Int f : pf) {
            if (f == e[k] || f == frobenius) continue;
            if (2 * f != frobenius && !almost_symmetric)
                out.violation("NG-vector " + show(e) + ": extra pseudo-Frobenius " + std::to_string(f) +
                              " is neither F/2 nor allowed by almost symmetry");
        }
    }
}

void check_type_bound_dim4(const NumericalSemigroup& s, Findings& out) {
    if (s.embedding_dimension() != 4 || !is_nearly_gorenstein(s)) return;
    out.matched();
    const std::size_t t = type(s);
    out.tally("type=" + std::to_string(t));
    if (t > 3) out.violation("nearly Gorenstein with four generators and type " + std::to_string(t));

    const bool almost = is_almost_symmetric(s);
    out.tally(almost ? "almost-symmetric" : "not-almost-symmetric");
    for (const auto& v : ng_vectors(s)) {
        if (v.entries.front() != s.frobenius()) out.violation("NG-vector " + show(v.entries) + " does not start with F");
        if (!almost) check_dim4_shape(s, v, out);
        check_dim4_dichotomies(s, v, almost, out);
    }
}

void check_coprimality(const NumericalSemigroup& s, Findings& out) {
    if (s.embedding_dimension() < 3 || is_symmetric(s) || !is_nearly_gorenstein(s)) return;
    out.matched();
    const auto& gens = s.generators();
    for (std::size_t skip = 0; skip < gens.size(); ++skip) {
        Int g = 0;
        for (std::size_t c = 0; c < gens.size(); ++c)
            if (c != skip) g = std::gcd(g, gens[c]);
        if (g != 1)
            out.violation("generators without n_" + std::to_string(skip + 1) + " share the factor " + std::to_string(g));
    }
}

void check_hierarchy(const NumericalSemigroup& s, Findings& out) {
    out.matched();
    const auto h = hierarchy(s);
    if (h.symmetric) out.tally("symmetric");
    if (h.almost_symmetric) out.tally("almost-symmetric");
    if (h.nearly_gorenstein) out.tally("nearly-gorenstein");
    if (h.canonical_reduction) out.tally("canonical-reduction");

    if (h.symmetric && !h.almost_symmetric) out.violation("symmetric but not almost symmetric");
    if (h.almost_symmetric && !h.nearly_gorenstein) out.violation("almost symmetric but not nearly Gorenstein");
    if (h.nearly_gorenstein && !h.canonical_reduction) out.violation("nearly Gorenstein without canonical reduction");

    // Second routes to the same predicates.
    if (ng_by_trace(s) != h.nearly_gorenstein) out.violation("trace-ideal test disagrees with NG-vector test");
    const NGVector constant{std::vector<Int>(s.embedding_dimension(), s.frobenius())};
    if (is_ng_vector(s, constant) != h.almost_symmetric)
        out.violation("constant vector (F,...,F) disagrees with almost symmetry");
    bool generator_criterion = true;
    for (Int n : s.generators())
        for (Int f : s.pseudo_frobenius())
            if (!s.contains(n + s.frobenius() - f)) generator_criterion = false;
    if (generator_criterion != h.almost_symmetric)
        out.violation("generator criterion disagrees with almost symmetry");
}

constexpr std::size_t enumerate_vectors_below = 20'000;

void check_distinct_corollary(const NumericalSemigroup& s, Findings& out) {
    // A one-entry vector cannot repeat, so N is outside the hypothesis.
    if (s.embedding_dimension() < 2 || !is_nearly_gorenstein(s)) return;
    out.matched();
    const std::size_t dim = s.embedding_dimension();
    const std::size_t t = type(s);

    const bool all_distinct = admits_distinct_prefix(s, dim);
    const bool prefix_distinct = admits_distinct_prefix(s, dim - 1);
    if (all_distinct) out.violation("some NG-vector has pairwise distinct entries");
    if (prefix_distinct) {
        out.tally("distinct-prefix");
        if (t != dim - 1)
            out.violation("first v-1 entries pairwise distinct but type " + std::to_string(t) + " != v-1");
    }

    if (ng_vector_count(s) > enumerate_vectors_below) {
        out.tally("matching-only");
        return;
    }
    out.tally("enumerated");
    bool seen_prefix = false;
    for (const auto& v : ng_vectors(s)) {
        const auto& e = v.entries;
        std::size_t run = 1;
        while (run < e.size() && std::find(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(run), e[run]) ==
                                     e.begin() + static_cast<std::ptrdiff_t>(run))
            ++run;
        if (run + 1 >= dim) seen_prefix = true;
        if (run == dim && !all_distinct) out.violation("matching missed an all-distinct NG-vector " + show(e));
        for (std::size_t j = 0; j < run; ++j)
            if (e[0] - e[j] != s.generator(j) - s.generator(0))
                out.violation("NG-vector " + show(e) + ": distinct prefix breaks f_1 - f_j = n_j - n_1");
    }
    if (seen_prefix != prefix_distinct)
        out.violation("matching and enumeration disagree on a distinct prefix of length v-1");
}

void check_type_bound_dim5(const NumericalSemigroup& s, Findings& out) {
    if (s.embedding_dimension() != 5 || !is_nearly_gorenstein(s)) return;
    out.matched();
    const std::size_t t = type(s);
    out.tally("type=" + std::to_string(t));
    if (t > 5) out.violation("nearly Gorenstein with five generators and type " + std::to_string(t));
    else if (t == 5 && !is_almost_symmetric(s)) out.notable("type 5 without almost symmetry");
}

void check_type_vs_embdim(const NumericalSemigroup& s, Findings& out) {
    if (!is_nearly_gorenstein(s)) return;
    out.matched();
    const std::size_t t = type(s);
    const std::size_t dim = s.embedding_dimension();
    const bool almost = is_almost_symmetric(s);
    const std::string label = std::string(almost ? "almost symmetric" : "nearly Gorenstein") + " with v=" +
                              std::to_string(dim) + ", t=" + std::to_string(t);
    if (t >= 2 * dim) {
        out.violation(label + " (t >= 2v)");
    } else if (dim >= 2 && t + 1 >= 2 * dim) {
        out.tally("frontier:t=2v-1");
        out.notable(label + " (t = 2v-1)");
    } else if (t > dim) {
        out.tally("type-exceeds-embedding-dimension");
        out.notable(label + " (t > v)");
    }
}

void check_canonical_reduction_dim4(const NumericalSemigroup& s, Findings& out) {
    if (s.embedding_dimension() != 4 || !has_canonical_reduction(s)) return;
    out.matched();
    const std::size_t t = type(s);
    out.tally("type=" + std::to_string(t));
    if (t > 4) out.violation("canonical reduction with four generators and type " + std::to_string(t));
    else if (t == 4) out.notable("canonical reduction with four generators and type 4");
}

void run_check(TheoremId id, const NumericalSemigroup& s, TheoremReport& report) {
    Findings out(s, report);
    switch (id) {
    case TheoremId::type_bound_dim4: check_type_bound_dim4(s, out); break;
    case TheoremId::coprimality: check_coprimality(s, out); break;
    case TheoremId::hierarchy: check_hierarchy(s, out); break;
    case TheoremId::distinct_corollary: check_distinct_corollary(s, out); break;
    case TheoremId::type_bound_dim5: check_type_bound_dim5(s, out); break;
    case TheoremId::type_vs_embdim: check_type_vs_embdim(s, out); break;
    case TheoremId::canonical_reduction_dim4: check_canonical_reduction_dim4(s, out); break;
    }
}

// Cheap rejection on tree-node data before the semigroup is materialized.
bool node_may_match(TheoremId id, const TreeNode& node) {
    switch (id) {
    case TheoremId::type_bound_dim4:
    case TheoremId::canonical_reduction_dim4: return node.embedding_dimension() == 4;
    case TheoremId::type_bound_dim5: return node.embedding_dimension() == 5;
    case TheoremId::coprimality: return node.embedding_dimension() >= 3;
    default: return true;
    }
}

} // namespace

TheoremReport check_single(TheoremId id, const NumericalSemigroup& s) {
    TheoremReport report;
    report.theorem = id;
    report.max_genus = static_cast<int>(s.genus());
    report.scanned = 1;
    run_check(id, s, report);
    return report;
}

bool reproduces(TheoremId id, const Witness& witness) {
    std::optional<NumericalSemigroup> parsed;
    try {
        parsed = NumericalSemigroup::from_generators(witness.generators);
    } catch (const Error&) {
        return false;  // not a numerical semigroup, so nothing to reproduce
    }
    const auto& s = *parsed;
    const auto report = check_single(id, s);
    return std::find(report.violations.begin(), report.violations.end(), witness) != report.violations.end() ||
           std::find(report.notable.begin(), report.notable.end(), witness) != report.notable.end();
}

TheoremReport verify(TheoremId id, int max_genus, unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    threads = std::max(1u, threads);
    std::vector<TheoremReport> partial(threads);
    detail::for_each_node(max_genus, threads, [&](unsigned worker, const TreeNode& node) {
        auto& report = partial[worker];
        ++report.scanned;
        if (!node_may_match(id, node)) return;
        run_check(id, node.to_semigroup(), report);
    });

    TheoremReport total;
    total.theorem = id;
    total.max_genus = max_genus;
    for (const auto& p : partial) total.merge(p);
    total.sort_witnesses();
    total.elapsed = std::chrono::steady_clock::now() - start;
    return total;
}

TheoremReport verify_type_bound_dim4(int max_genus, unsigned threads) {
    return verify(TheoremId::type_bound_dim4, max_genus, threads);
}
TheoremReport verify_coprimality(int max_genus, unsigned threads) {
    return verify(TheoremId::coprimality, max_genus, threads);
}
TheoremReport verify_hierarchy(int max_genus, unsigned threads) {
    return verify(TheoremId::hierarchy, max_genus, threads);
}
TheoremReport verify_distinct_corollary(int max_genus, unsigned threads) {
    return verify(TheoremId::distinct_corollary, max_genus, threads);
}

TheoremReport search_open_question(OpenQuestion preset, int max_genus, unsigned threads) {
    switch (preset) {
    case OpenQuestion::type_bound_dim5: return verify(TheoremId::type_bound_dim5, max_genus, threads);
    case OpenQuestion::type_vs_embdim: return verify(TheoremId::type_vs_embdim, max_genus, threads);
    case OpenQuestion::canonical_reduction_dim4:
        return verify(TheoremId::canonical_reduction_dim4, max_genus, threads);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown open-question preset");
}

} // namespace ngsemi
