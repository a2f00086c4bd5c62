#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sumcolour/digits.hpp"
#include "sumcolour/search.hpp"

namespace sumcolour {

using Json = nlohmann::json;

/// Certificate bodies. Each carries a "digest" field, "sha256:<hex>" of the
/// canonical dump of the body without that field.
Json to_json(const SearchCert& cert);
Json to_json(const ConstructionCert& cert);

SearchCert search_cert_from_json(const Json& j);
ConstructionCert construction_cert_from_json(const Json& j);

Json interval_set_to_json(const IntervalSet& Z);
IntervalSet interval_set_from_json(const Json& j);

std::string cert_digest(const Json& cert);

struct VerifyReport {
  bool ok = false;
  std::string reason;  // empty when ok

  explicit operator bool() const { return ok; }
};

/// Recomputes every claim from scratch. Throws MalformedCert when the
/// document does not have certificate shape.
VerifyReport verify_cert(const Json& cert, unsigned threads = 1);
VerifyReport verify_cert_text(std::string_view text, unsigned threads = 1);

}  // namespace sumcolour
