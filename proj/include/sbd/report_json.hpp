#ifndef SBD_REPORT_JSON_HPP
#define SBD_REPORT_JSON_HPP

#include <json.hpp>

#include "sbd/analyzer.hpp"
#include "sbd/design.hpp"
#include "sbd/lemmas.hpp"
#include "sbd/perm.hpp"
#include "sbd/search.hpp"

// Structured one-record serializations. Keys are emitted in sorted order and
// nothing time-dependent appears here, so identical inputs give identical
// bytes; run timing lives in the separate run-summary record.

namespace sbd {

nlohmann::json params_json(const DesignParams& p);
nlohmann::json design_json(const Design& d);
nlohmann::json fixed_structure_json(const Design& d, const Perm& p, const FixedData& f);
nlohmann::json lemma_report_json(const LemmaReport& r);
nlohmann::json prime_report_json(const PrimeReport& r);
nlohmann::json theorem_report_json(const TheoremReport& r);
nlohmann::json integrality_json(const IntegralityReport& r);
nlohmann::json commuting_json(const CommutingPairReport& r);
nlohmann::json burnside_json(const BurnsideResult& r);
nlohmann::json aut_json(const AutGroupResult& r);

}  // namespace sbd

#endif
