#pragma once

#include "fewnomial/bounds.hpp"
#include "fewnomial/critical.hpp"
#include "fewnomial/homology.hpp"
#include "fewnomial/verify.hpp"

#include <json.hpp>

#include <string>

namespace fewnomial {

using ReportJson = nlohmann::ordered_json;

ReportJson to_json(const BoundReport& r);
ReportJson to_json(const CensusReport& r);
ReportJson to_json(const StableBetti& r);
ReportJson to_json(const VerifyReport& r, bool include_timings = true);

std::string to_csv(const BoundReport& r);
std::string to_csv(const CensusReport& r);
std::string to_csv(const StableBetti& r);
std::string to_csv(const VerifyReport& r);

}  // namespace fewnomial
