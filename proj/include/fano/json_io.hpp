#pragma once

#include <json.hpp>

#include "fano/classify.hpp"
#include "fano/families.hpp"
#include "fano/search.hpp"

namespace fano {

// Every big integer is written as a decimal string.
nlohmann::json to_json(const Nat& n);
Nat nat_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Rat& r);  // {"num": "...", "den": "..."}
Rat rat_from_json(const nlohmann::json& j);

// {"kind":"terminal","subset":[0,2],"witness":1,"multiple":"1"}
nlohmann::json to_json(const SubsetCertificate& c);
SubsetCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PointReport& p);
PointReport point_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WpsReport& r);
WpsReport wps_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FamilyInstance& f);
nlohmann::json to_json(const SearchRecord& r);

}  // namespace fano
