#ifndef PGHOPF_JSON_HPP
#define PGHOPF_JSON_HPP

#include <json.hpp>

#include "pghopf/families.hpp"
#include "pghopf/orders.hpp"

namespace pghopf {

// Structured output. Elements are strings in the element grammar, matrices
// are arrays of rows, and entry indices are 1-based.

nlohmann::json to_json(const MatK& m);
MatK matrix_from_json(const nlohmann::json& j, const Field& field);

nlohmann::json to_json(const IntegralityWitness& w);
nlohmann::json to_json(const HopfPresentation& h);
nlohmann::json to_json(const ThetaEmbedding& e);
nlohmann::json to_json(const FibreReport& f);
nlohmann::json to_json(const OrderOutcome& o);
/// Record plus monogenic flag (null outside alpha_p2 / mono_p2) and fibre summary.
nlohmann::json to_json(const OrderRecord& r);
nlohmann::json to_json(const AgreementReport& r);
nlohmann::json to_json(const Rank1Result& r);

}  // namespace pghopf

#endif  // PGHOPF_JSON_HPP
