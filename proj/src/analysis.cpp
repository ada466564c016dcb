#include "cliffdef/analysis.hpp"

#include "cliffdef/clifford.hpp"

namespace cliffdef {

AnalysisReport analyze(const NumericalSemigroup& s) {
    AnalysisReport r;
    r.generators = s.generators();
    r.genus = s.genus();
    r.frobenius = s.frobenius();
    r.conductor = s.conductor();
    r.multiplicity = s.multiplicity();
    r.apery_set = s.apery_set(s.multiplicity());
    r.symmetric = s.is_symmetric();
    r.sparse = s.is_sparse();
    r.max_embedding_dimension = s.has_max_embedding_dimension();

    CliffordProfile restricted = profile(s, DomainKind::RestrictedToS);
    r.restricted_defect = restricted.max_value;
    r.restricted_argmax = restricted.argmax;
    r.duursma_defect = duursma_defect(s);

    r.delta_max = delta(s, 0);
    for (std::int64_t a = 0; a <= s.conductor(); ++a) {
        std::int64_t d = delta(s, a);
        if (d > r.delta_max) {
            r.delta_max = d;
            r.delta_argmax.clear();
        }
        if (d == r.delta_max && (r.delta_argmax.empty() || r.delta_argmax.back() != a))
            r.delta_argmax.push_back(a);
    }
    return r;
}

nlohmann::ordered_json to_json(const HalfInt& h) {
    return {{"twice", h.twice}, {"value", h.str()}};
}

HalfInt half_int_from_json(const nlohmann::json& j) {
    return HalfInt::from_twice(j.at("twice").get<std::int64_t>());
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["generators"] = r.generators;
    j["genus"] = r.genus;
    j["frobenius"] = r.frobenius;
    j["conductor"] = r.conductor;
    j["multiplicity"] = r.multiplicity;
    j["apery_set"] = r.apery_set;
    j["symmetric"] = r.symmetric;
    j["sparse"] = r.sparse;
    j["max_embedding_dimension"] = r.max_embedding_dimension;
    j["restricted_defect"] = to_json(r.restricted_defect);
    j["restricted_argmax"] = r.restricted_argmax;
    j["duursma_defect"] = to_json(r.duursma_defect);
    j["delta"] = {{"max", r.delta_max}, {"argmax", r.delta_argmax}};
    return j;
}

AnalysisReport report_from_json(const nlohmann::json& j) {
    AnalysisReport r;
    r.generators = j.at("generators").get<std::vector<std::int64_t>>();
    r.genus = j.at("genus").get<std::int64_t>();
    r.frobenius = j.at("frobenius").get<std::int64_t>();
    r.conductor = j.at("conductor").get<std::int64_t>();
    r.multiplicity = j.at("multiplicity").get<std::int64_t>();
    r.apery_set = j.at("apery_set").get<std::vector<std::int64_t>>();
    r.symmetric = j.at("symmetric").get<bool>();
    r.sparse = j.at("sparse").get<bool>();
    r.max_embedding_dimension = j.at("max_embedding_dimension").get<bool>();
    r.restricted_defect = half_int_from_json(j.at("restricted_defect"));
    r.restricted_argmax = j.at("restricted_argmax").get<std::vector<std::int64_t>>();
    r.duursma_defect = half_int_from_json(j.at("duursma_defect"));
    r.delta_max = j.at("delta").at("max").get<std::int64_t>();
    r.delta_argmax = j.at("delta").at("argmax").get<std::vector<std::int64_t>>();
    return r;
}

}  // namespace cliffdef
