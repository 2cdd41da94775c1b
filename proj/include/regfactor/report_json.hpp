#pragma once

#include "regfactor/factor.hpp"
#include "regfactor/verifier.hpp"

#include <json.hpp>

namespace regfactor {

using Json = nlohmann::ordered_json;

Json vertex_list(const VertexSet& s);
/// Sorted S and T plus q, d and deficiency.
Json to_json(const TutteWitness& w);
/// Sorted edge-id list.
Json to_json(const FactorResult& f);
Json to_json(const PartitionCertificate& c);
/// {check, instance, r, k, p, hypothesisMet, factorFound, witness?,
///  certificate?, details?, notes?, pass, millis}; the factor edge list is
/// included only on request.
Json to_json(const VerificationReport& rep, bool with_factor = false);

} // namespace regfactor
