#pragma once

#include <string>

#include "parabolica/construction.hpp"
#include "parabolica/patchwork.hpp"
#include "parabolica/solver.hpp"

#include <json.hpp>

namespace parabolica {

using Json = nlohmann::ordered_json;

Json to_json(const RatInterval& v);
Json to_json(const BoxQ& b);
Json to_json(const Interval& v);
Json to_json(const CertifiedPoint& p);
Json to_json(const SolveResult& r);
Json to_json(const Subdivision& s);
Json to_json(const GlueReport& r);

std::string glue_csv_header();
std::string glue_csv_row(const GlueReport& r);

}  // namespace parabolica
