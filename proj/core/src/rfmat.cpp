#include "ngsemi/rfmat.hpp"

#include <algorithm>
#include <string>

#include "ngsemi/checked.hpp"
#include "ngsemi/error.hpp"

namespace ngsemi {

namespace {

using Row = std::vector<Int>;

void require_pseudo_frobenius(const NumericalSemigroup& s, Int f) {
    const auto& pf = s.pseudo_frobenius();
    if (!std::binary_search(pf.begin(), pf.end(), f))
        throw Error(ErrorCode::NotPseudoFrobenius, std::to_string(f) + " is not in PF" + to_string(s));
}

// Factorizations of z avoiding generator i, each with -1 placed at i.
std::vector<Row> signed_rows(const NumericalSemigroup& s, Int z, std::size_t i, const Limits& limits) {
    std::vector<Row> rows;
    for (auto& fact : factorizations_avoiding(s, z, i, limits)) {
        fact.coefficients[i] = -1;
        rows.push_back(std::move(fact.coefficients));
    }
    return rows;
}

std::vector<RFMatrix> cartesian(const std::vector<std::vector<Row>>& options, const RFMatrix& prototype,
                                const Limits& limits) {
    if (std::any_of(options.begin(), options.end(), [](const auto& rows) { return rows.empty(); })) return {};
    std::size_t total = 1;
    for (const auto& rows : options) {
        if (__builtin_mul_overflow(total, rows.size(), &total) || total > limits.max_matrices)
            throw Error(ErrorCode::LimitExceeded, "more than " + std::to_string(limits.max_matrices) + " matrices");
    }
    std::vector<RFMatrix> out;
    out.reserve(total);
    std::vector<std::size_t> index(options.size(), 0);
    while (true) {
        RFMatrix m = prototype;
        m.entries.reserve(options.size());
        for (std::size_t i = 0; i < options.size(); ++i) m.entries.push_back(options[i][index[i]]);
        out.push_back(std::move(m));
        std::size_t k = options.size();
        bool done = true;
        while (k > 0) {
            --k;
            if (++index[k] < options[k].size()) {
                done = false;
                break;
            }
            index[k] = 0;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end(), [](const RFMatrix& a, const RFMatrix& b) { return a.entries < b.entries; });
    return out;
}

std::vector<std::vector<Row>> minus_row_options(const NumericalSemigroup& s, const NGVector& v, Int f,
                                                const Limits& limits) {
    const std::size_t dim = s.embedding_dimension();
    std::vector<std::vector<Row>> options(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (v.entries[i] == f) options[i].push_back(Row(dim, 0));
        else options[i] = signed_rows(s, checked::sub(checked::add(s.generator(i), v.entries[i]), f), i, limits);
    }
    return options;
}

} // namespace

std::vector<RFMatrix> rf_plus_matrices(const NumericalSemigroup& s, Int f, const Limits& limits) {
    require_pseudo_frobenius(s, f);
    std::vector<std::vector<Row>> options;
    for (std::size_t i = 0; i < s.embedding_dimension(); ++i)
        options.push_back(signed_rows(s, checked::add(f, s.generator(i)), i, limits));
    RFMatrix prototype;
    prototype.kind = RFKind::plus;
    prototype.f = f;
    return cartesian(options, prototype, limits);
}

std::vector<RFMatrix> rf_minus_matrices(const NumericalSemigroup& s, const NGVector& v, Int f,
                                        const Limits& limits) {
    require_pseudo_frobenius(s, f);
    if (!is_ng_vector(s, v)) throw Error(ErrorCode::InvalidNGVector, "not an NG-vector of " + to_string(s));
    RFMatrix prototype;
    prototype.kind = RFKind::minus;
    prototype.f = f;
    prototype.ng_vector = v;
    return cartesian(minus_row_options(s, v, f, limits), prototype, limits);
}

bool check_coppie(const RFMatrix& plus, const RFMatrix& minus) {
    if (plus.kind != RFKind::plus || minus.kind != RFKind::minus)
        throw Error(ErrorCode::MatrixMismatch, "expected an RF+ and an RF- matrix");
    if (plus.f != minus.f) throw Error(ErrorCode::MatrixMismatch, "matrices attached to different f");
    const std::size_t dim = plus.entries.size();
    if (minus.entries.size() != dim) throw Error(ErrorCode::MatrixMismatch, "matrix orders differ");
    for (std::size_t j = 0; j < dim; ++j) {
        if (plus.entries[j].size() != dim || minus.entries[j].size() != dim)
            throw Error(ErrorCode::MatrixMismatch, "matrix is not square");
    }
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
            if (j != k && plus.entries[j][k] * minus.entries[k][j] != 0) return false;
    return true;
}

bool satisfies_row_identities(const NumericalSemigroup& s, const RFMatrix& m) {
    const std::size_t dim = s.embedding_dimension();
    if (m.entries.size() != dim) return false;
    if (m.kind == RFKind::minus && (!m.ng_vector || m.ng_vector->entries.size() != dim)) return false;
    for (std::size_t i = 0; i < dim; ++i) {
        const auto& row = m.entries[i];
        if (row.size() != dim) return false;
        if (m.kind == RFKind::minus && m.ng_vector->entries[i] == m.f) {
            if (std::any_of(row.begin(), row.end(), [](Int x) { return x != 0; })) return false;
            continue;
        }
        Int sum = 0;
        for (std::size_t j = 0; j < dim; ++j) {
            if (j == i ? row[j] != -1 : row[j] < 0) return false;
            sum = checked::add(sum, checked::mul(row[j], s.generator(j)));
        }
        const Int expected = m.kind == RFKind::plus ? m.f : m.ng_vector->entries[i] - m.f;
        if (sum != expected) return false;
    }
    return true;
}

std::optional<CoppieViolation> find_coppie_violation(const NumericalSemigroup& s, const Limits& limits) {
    if (!is_nearly_gorenstein(s)) return std::nullopt;
    const std::size_t dim = s.embedding_dimension();
    std::vector<std::vector<Int>> candidates;
    for (std::size_t k = 0; k < dim; ++k) candidates.push_back(ng_candidates(s, k));

    for (Int f : s.pseudo_frobenius()) {
        std::vector<std::vector<Row>> plus_rows;
        for (std::size_t j = 0; j < dim; ++j) plus_rows.push_back(signed_rows(s, f + s.generator(j), j, limits));

        for (std::size_t k = 0; k < dim; ++k)
            for (Int fk : candidates[k]) {
                if (fk == f) continue;
                const auto minus_rows = signed_rows(s, s.generator(k) + fk - f, k, limits);
                for (std::size_t j = 0; j < dim; ++j) {
                    if (j == k) continue;
                    const auto a = std::find_if(plus_rows[j].begin(), plus_rows[j].end(),
                                                [&](const Row& r) { return r[k] > 0; });
                    const auto b = std::find_if(minus_rows.begin(), minus_rows.end(),
                                                [&](const Row& r) { return r[j] > 0; });
                    if (a == plus_rows[j].end() || b == minus_rows.end()) continue;

                    NGVector v;
                    for (std::size_t i = 0; i < dim; ++i) v.entries.push_back(i == k ? fk : candidates[i].front());
                    CoppieViolation witness;
                    witness.f = f;
                    witness.plus.kind = RFKind::plus;
                    witness.plus.f = f;
                    for (std::size_t i = 0; i < dim; ++i)
                        witness.plus.entries.push_back(i == j ? *a : plus_rows[i].front());
                    witness.minus.kind = RFKind::minus;
                    witness.minus.f = f;
                    witness.minus.ng_vector = v;
                    const auto options = minus_row_options(s, v, f, limits);
                    for (std::size_t i = 0; i < dim; ++i)
                        witness.minus.entries.push_back(i == k ? *b : options[i].front());
                    return witness;
                }
            }
    }
    return std::nullopt;
}

} // namespace ngsemi
