#pragma once

#include <nlohmann/json.hpp>

#include "legruling/analysis.hpp"
#include "legruling/front.hpp"
#include "legruling/poly.hpp"
#include "legruling/ruling.hpp"

namespace legruling {

/// Number when it fits in a signed 64-bit integer, decimal string otherwise.
nlohmann::json coefficient_json(const Coefficient& c);

/// [{"v": i, "z": j, "c": n}, ...] sorted by (v, z).
nlohmann::json to_json(const LaurentPoly2& p);
/// [{"z": j, "c": n}, ...] sorted by z.
nlohmann::json to_json(const LaurentPoly1& p);
/// {"<exponent>": n, ...}
nlohmann::json exponent_map_json(const LaurentPoly1& p);

nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const OrientedFront& f);
nlohmann::json to_json(const Ruling& r);
nlohmann::json to_json(const RulingCensus& c, GradingClass listed);
nlohmann::json to_json(const RutherfordCheck& r);
nlohmann::json to_json(const MaxTbCertificate& c);
nlohmann::json to_json(const NoRulingFlags& f);
nlohmann::json to_json(const RhoReport& r);
nlohmann::json to_json(const GenusTests& g);
nlohmann::json to_json(const GenusChain& t);
nlohmann::json to_json(const ConnsumCheck& c);
nlohmann::json to_json(const AnalysisReport& r);

}  // namespace legruling
