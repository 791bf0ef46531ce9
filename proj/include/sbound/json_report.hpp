#pragma once

#include <string>

#include <json.hpp>

#include "sbound/certify.hpp"
#include "sbound/csdecomp.hpp"
#include "sbound/pluecker.hpp"
#include "sbound/stiefel.hpp"
#include "sbound/worstcase.hpp"

namespace sbound {

using Json = nlohmann::ordered_json;

Json to_json(const PlueckerCoords& p);
Json to_json(const TransformedVars& v);
Json to_json(const EllipticParams& e);
Json to_json(const SystemReport& r);
Json to_json(const CSFactors& f);
Json to_json(const SubmatrixReport& r);
Json to_json(const CheckResult& r);
Json to_json(const CertifyConfig& c);
Json to_json(const CertificateReport& r);
Json to_json(const SearchParams& p);
/// Includes the best matrix in the text matrix format as a string field.
Json to_json(const WorstCaseResult& r);

PlueckerCoords pluecker_from_json(const Json& j);

/// Serializes with insertion-ordered keys, two-space indentation and floating
/// point numbers printed with 17 significant digits. Non-finite numbers become
/// null.
std::string dump_json(const Json& j);

}  // namespace sbound
