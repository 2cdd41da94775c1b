#include "regfactor/report_json.hpp"

namespace regfactor {

Json vertex_list(const VertexSet& s) { return Json(s.members()); }

Json to_json(const TutteWitness& w) {
    return Json{{"S", vertex_list(w.s)},
                {"T", vertex_list(w.t)},
                {"q", w.q},
                {"d", w.d},
                {"deficiency", w.deficiency}};
}

Json to_json(const FactorResult& f) { return Json{{"ell", f.ell}, {"edges", f.edges}}; }

Json to_json(const PartitionCertificate& c) {
    const auto& v = c.verdicts;
    const auto& l = c.ledger;
    Json j{{"R", vertex_list(c.r)},
           {"S", vertex_list(c.s)},
           {"T", vertex_list(c.t)},
           {"conditions",
            {{"a", v.a}, {"b", v.b}, {"c", v.c}, {"d", v.d}, {"e", v.e}, {"f", v.f}}},
           {"ledger",
            {{"q1EqualsP", l.q1_equals_p},
             {"q2EqualsRS", l.q2_equals_rs},
             {"weightedEqualsD", l.weighted_equals_d},
             {"sDegreeSplit", l.s_degree_split},
             {"sizeGap", l.size_gap}}},
           {"passes", c.passes()}};
    if (!c.flags.empty())
        j["flags"] = c.flags;
    return j;
}

Json to_json(const VerificationReport& rep, bool with_factor) {
    Json j{{"check", rep.check},
           {"instance", rep.instance},
           {"r", rep.r},
           {"k", rep.k},
           {"p", rep.p},
           {"hypothesisMet", rep.hypothesis_met},
           {"factorFound", rep.factor_found}};
    if (with_factor && rep.factor)
        j["factor"] = to_json(*rep.factor);
    if (rep.witness)
        j["witness"] = to_json(*rep.witness);
    if (rep.certificate)
        j["certificate"] = to_json(*rep.certificate);
    if (!rep.details.empty()) {
        Json d = Json::object();
        for (const auto& [key, value] : rep.details)
            d[key] = value;
        j["details"] = d;
    }
    if (!rep.notes.empty())
        j["notes"] = rep.notes;
    j["pass"] = rep.pass;
    j["millis"] = rep.millis;
    return j;
}

} // namespace regfactor
