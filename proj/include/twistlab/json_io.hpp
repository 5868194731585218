#pragma once

#include "twistlab/family.hpp"

#include <json.hpp>

#include <string>

namespace twistlab {

using json = nlohmann::json;

json mat_to_json(const Mat& a);
Mat mat_from_json(const json& j, size_t n);

// {"m":int,"n":int,"A":[[Matrix;m];m]}, entries "p/q"
json family_to_json(const TwistingFamily& f);
// throws InputError on anything malformed
TwistingFamily family_from_json(const json& j);
TwistingFamily family_from_string(const std::string& text);

json report_to_json(const VerifyReport& r);  // 1-based witnesses

}  // namespace twistlab
