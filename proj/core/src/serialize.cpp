#include "ngsemi/serialize.hpp"

#include <ostream>

#include "ngsemi/error.hpp"

namespace ngsemi {

void to_json(nlohmann::json& j, const Factorization& f) { j = f.coefficients; }

void to_json(nlohmann::json& j, const NGVector& v) { j = v.entries; }

void to_json(nlohmann::json& j, const HierarchyReport& h) {
    j = {{"symmetric", h.symmetric},
         {"almost_symmetric", h.almost_symmetric},
         {"nearly_gorenstein", h.nearly_gorenstein},
         {"canonical_reduction", h.canonical_reduction},
         {"type", h.type},
         {"ng_vector_count", h.ng_vector_count}};
}

void to_json(nlohmann::json& j, const WilfCheck& w) {
    j = {{"conductor", w.conductor}, {"n_count", w.n_count}, {"holds_fgh", w.holds_fgh}, {"holds_wilf", w.holds_wilf}};
}

void to_json(nlohmann::json& j, const RFMatrix& m) {
    j = {{"kind", m.kind == RFKind::plus ? "plus" : "minus"},
         {"f", m.f},
         {"ng_vector", m.ng_vector ? nlohmann::json(m.ng_vector->entries) : nlohmann::json(nullptr)},
         {"entries", m.entries}};
}

void from_json(const nlohmann::json& j, RFMatrix& m) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "plus" && kind != "minus") throw Error(ErrorCode::InvalidArgument, "unknown matrix kind " + kind);
    m.kind = kind == "plus" ? RFKind::plus : RFKind::minus;
    m.f = j.at("f").get<Int>();
    if (j.contains("ng_vector") && !j.at("ng_vector").is_null())
        m.ng_vector = NGVector{j.at("ng_vector").get<std::vector<Int>>()};
    else
        m.ng_vector.reset();
    m.entries = j.at("entries").get<std::vector<std::vector<Int>>>();
}

void to_json(nlohmann::json& j, const Witness& w) { j = {{"generators", w.generators}, {"reason", w.reason}}; }

void to_json(nlohmann::json& j, const TheoremReport& r) {
    j = {{"theorem_id", std::string(to_string(r.theorem))},
         {"max_genus", r.max_genus},
         {"scanned", r.scanned},
         {"matched_hypothesis", r.matched_hypothesis},
         {"violations", r.violations},
         {"notable", r.notable},
         {"tallies", r.tallies},
         {"elapsed_seconds", r.elapsed.count()}};
}

namespace {

void join(std::ostream& out, const std::vector<Int>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
}

void write_row(std::ostream& out, const Witness& w, const char* kind) {
    const auto s = NumericalSemigroup::from_generators(w.generators);
    const auto h = hierarchy(s);
    join(out, s.generators());
    out << ';';
    join(out, s.pseudo_frobenius());
    out << ';';
    if (h.symmetric) out << "symmetric,";
    if (h.almost_symmetric) out << "almost_symmetric,";
    if (h.nearly_gorenstein) out << "nearly_gorenstein,";
    if (h.canonical_reduction) out << "canonical_reduction,";
    out << kind << '\n';
}

} // namespace

void write_witness_csv(std::ostream& out, const TheoremReport& r) {
    out << "generators;PF;flags\n";
    for (const auto& w : r.violations) write_row(out, w, "violation");
    for (const auto& w : r.notable) write_row(out, w, "notable");
}

} // namespace ngsemi
