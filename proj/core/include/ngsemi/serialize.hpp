#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "ngsemi/enumeration.hpp"
#include "ngsemi/nearly.hpp"
#include "ngsemi/rfmat.hpp"
#include "ngsemi/semigroup.hpp"

namespace ngsemi {

// nlohmann::json conversions (found by ADL).
void to_json(nlohmann::json& j, const Factorization& f);
void to_json(nlohmann::json& j, const NGVector& v);
void to_json(nlohmann::json& j, const HierarchyReport& h);
void to_json(nlohmann::json& j, const WilfCheck& w);
/// {"kind": "plus"|"minus", "f": f, "ng_vector": [...]|null, "entries": [[...], ...]}
void to_json(nlohmann::json& j, const RFMatrix& m);
void from_json(const nlohmann::json& j, RFMatrix& m);
void to_json(nlohmann::json& j, const Witness& w);
void to_json(nlohmann::json& j, const TheoremReport& r);

/// Semicolon-delimited witness dump, LF line endings, one row per witness:
/// generators;PF;flags. Generators and PF are comma-separated; flags are the
/// comma-separated names of the hierarchy properties S satisfies followed by
/// the witness kind (violation or notable).
void write_witness_csv(std::ostream& out, const TheoremReport& r);

} // namespace ngsemi
