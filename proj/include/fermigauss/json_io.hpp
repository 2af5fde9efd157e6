#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "fermigauss/entanglement.hpp"
#include "fermigauss/selfdual.hpp"
#include "fermigauss/types.hpp"

namespace fermigauss {

using json = nlohmann::ordered_json;

// Matrices serialize as nested row-major arrays of [re, im] pairs.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"n_alice": int, "n_bob": int, "matrix": ...}
json covariance_to_json(const CovarianceMatrix& s);
CovarianceMatrix covariance_from_json(const json& j);

// Array of one-particle vectors, each an array of [re, im] pairs.
std::vector<Vector> fields_from_json(const json& j, const SystemShape& shape);

json validation_report_to_json(const ValidationReport& report);
json certificate_to_json(const Certificate& cert);

json parse_json(const std::string& text);

}  // namespace fermigauss
