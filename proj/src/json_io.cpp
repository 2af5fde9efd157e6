#include "fermigauss/json_io.hpp"

namespace fermigauss {

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw FormatError("complex entries must be [re, im] number pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

int int_field(const json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number_integer())
    throw FormatError(std::string("missing integer field \"") + name + "\"");
  return j[name].get<int>();
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw FormatError("matrix rows must be non-empty arrays");
  Matrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw FormatError("matrix rows must all have the same length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

json covariance_to_json(const CovarianceMatrix& s) {
  json j;
  j["n_alice"] = s.shape.n_alice;
  j["n_bob"] = s.shape.n_bob;
  j["matrix"] = matrix_to_json(s.entries);
  return j;
}

CovarianceMatrix covariance_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("covariance must be a JSON object");
  const int n_alice = int_field(j, "n_alice");
  const int n_bob = int_field(j, "n_bob");
  if (!j.contains("matrix")) throw FormatError("missing field \"matrix\"");
  try {
    SystemShape shape(n_alice, n_bob);
    Matrix m = matrix_from_json(j["matrix"]);
    if (m.rows() != shape.dim() || m.cols() != shape.dim())
      throw FormatError("matrix must be " + std::to_string(shape.dim()) + "x" +
                        std::to_string(shape.dim()) + " for this shape");
    return {shape, std::move(m)};
  } catch (const ShapeError& e) {
    throw FormatError(e.what());
  }
}

std::vector<Vector> fields_from_json(const json& j, const SystemShape& shape) {
  if (!j.is_array()) throw FormatError("fields file must be an array of vectors");
  std::vector<Vector> fields;
  fields.reserve(j.size());
  for (const json& entry : j) {
    if (!entry.is_array() || entry.size() != static_cast<std::size_t>(shape.dim()))
      throw FormatError("each field must be an array of " + std::to_string(shape.dim()) +
                        " [re, im] pairs");
    Vector f(shape.dim());
    for (int i = 0; i < shape.dim(); ++i) f(i) = complex_from_json(entry[i]);
    fields.push_back(std::move(f));
  }
  return fields;
}

json validation_report_to_json(const ValidationReport& report) {
  json j;
  j["valid"] = report.valid;
  j["tolerance"] = report.tolerance;
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json entry;
    entry["name"] = c.name;
    entry["deviation"] = c.deviation;
    entry["pass"] = c.pass;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  return j;
}

json certificate_to_json(const Certificate& cert) {
  json j;
  j["verdict"] = cert.maximally_entangled ? "maximally_entangled" : "not_maximally_entangled";
  json dev;
  dev["purity"] = cert.deviations.purity;
  dev["diag_A"] = cert.deviations.diag_a;
  dev["diag_B"] = cert.deviations.diag_b;
  dev["unitarity"] = cert.deviations.unitarity;
  dev["anticommutation"] = cert.deviations.anticommutation;
  j["deviations"] = std::move(dev);
  if (cert.witness) j["witness"] = matrix_to_json(*cert.witness);
  return j;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace fermigauss
