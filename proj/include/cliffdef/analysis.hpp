#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "cliffdef/half_int.hpp"
#include "cliffdef/semigroup.hpp"

namespace cliffdef {

// Everything the `analyze` command reports for one semigroup.
struct AnalysisReport {
    std::vector<std::int64_t> generators;
    std::int64_t genus = 0;
    std::int64_t frobenius = -1;
    std::int64_t conductor = 0;
    std::int64_t multiplicity = 1;
    std::vector<std::int64_t> apery_set;  // w.r.t. the multiplicity
    bool symmetric = false;
    bool sparse = false;
    bool max_embedding_dimension = false;
    HalfInt restricted_defect;
    std::vector<std::int64_t> restricted_argmax;
    HalfInt duursma_defect;
    std::int64_t delta_max = 0;
    std::vector<std::int64_t> delta_argmax;
};

AnalysisReport analyze(const NumericalSemigroup& s);

// Stable JSON shape; round-trips losslessly through report_from_json.
nlohmann::ordered_json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const HalfInt& h);
HalfInt half_int_from_json(const nlohmann::json& j);

}  // namespace cliffdef
