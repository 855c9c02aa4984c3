#include "schubreg/json_io.hpp"

#include "schubreg/errors.hpp"

namespace schubreg {

using nlohmann::json;

json integer_to_json(const Integer& x) {
  if (x.fits_int64()) return json(x.to_int64());
  return json(x.to_string());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long long>(j.get<int64_t>()));
  if (j.is_string()) return Integer::parse(j.get<std::string>());
  throw InvalidArgument("expected an integer, got " + j.dump());
}

namespace {

json coeffs_to_json(const std::vector<Integer>& c) {
  json a = json::array();
  for (const auto& x : c) a.push_back(integer_to_json(x));
  return a;
}

std::vector<Integer> coeffs_from_json(const json& j) {
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return c;
}

template <class T>
json optional_to_json(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::optional<UniPoly> poly_from_json(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return UniPoly(coeffs_from_json(j.at(key)));
}

}  // namespace

json report_to_json(const RegularityReport& r) {
  json j;
  j["v"] = r.v.to_string();
  j["w"] = r.w.to_string();
  j["method"] = to_string(r.method);
  j["reg"] = optional_to_json(r.reg);
  j["formula_reg"] = optional_to_json(r.formula_reg);
  j["groebner_reg"] = optional_to_json(r.groebner_reg);
  j["h_coeffs"] = r.H ? coeffs_to_json(r.H->coeffs()) : json(nullptr);
  j["k_coeffs"] = r.K ? coeffs_to_json(r.K->coeffs()) : json(nullptr);
  j["dim"] = r.dim;
  j["height"] = r.height;
  j["n_vars"] = r.n_vars;
  j["covexillary"] = r.covexillary;
  j["cm_status"] = to_string(r.cm_status);
  j["homogeneous_ideal"] = optional_to_json(r.homogeneous_ideal);
  j["kl_degree"] = optional_to_json(r.kl_degree);
  json flags = json::object();
  for (const auto& [name, f] : r.conjecture_flags) flags[name] = {{"status", to_string(f.status)}, {"detail", f.detail}};
  j["conjecture_flags"] = flags;
  j["discrepant"] = r.discrepant;
  return j;
}

RegularityReport report_from_json(const json& j) {
  try {
    RegularityReport r;
    r.v = Permutation::parse(j.at("v").get<std::string>());
    r.w = Permutation::parse(j.at("w").get<std::string>());
    r.method = parse_method(j.at("method").get<std::string>());
    r.reg = optional_from_json<int>(j, "reg");
    r.formula_reg = optional_from_json<int>(j, "formula_reg");
    r.groebner_reg = optional_from_json<int>(j, "groebner_reg");
    r.H = poly_from_json(j, "h_coeffs");
    r.K = poly_from_json(j, "k_coeffs");
    r.dim = j.at("dim").get<int>();
    r.height = j.at("height").get<int>();
    r.n_vars = j.at("n_vars").get<int>();
    r.covexillary = j.at("covexillary").get<bool>();
    r.cm_status = parse_cm_status(j.at("cm_status").get<std::string>());
    r.homogeneous_ideal = optional_from_json<bool>(j, "homogeneous_ideal");
    r.kl_degree = optional_from_json<int>(j, "kl_degree");
    for (const auto& [name, f] : j.at("conjecture_flags").items())
      r.conjecture_flags[name] = {parse_flag_status(f.at("status").get<std::string>()),
                                  f.at("detail").get<std::string>()};
    r.discrepant = j.at("discrepant").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed report JSON: ") + e.what());
  }
}

std::string record_to_jsonl(const ScanRecord& r) {
  json j;
  j["n"] = r.n;
  j["v"] = r.v.to_string();
  j["w"] = r.w.to_string();
  j["method"] = to_string(r.method);
  j["reg"] = optional_to_json(r.reg);
  j["h_coeffs"] = coeffs_to_json(r.h_coeffs);
  j["dim"] = r.dim;
  j["height"] = r.height;
  j["covexillary"] = r.covexillary;
  j["cm_status"] = to_string(r.cm_status);
  j["kl_degree"] = optional_to_json(r.kl_degree);
  j["kernel_version"] = r.kernel_version;
  j["elapsed_ms"] = r.elapsed_ms;
  j["budget_exceeded"] = r.budget_exceeded;
  return j.dump();
}

ScanRecord record_from_jsonl(const std::string& line) {
  try {
    json j = json::parse(line);
    ScanRecord r;
    r.n = j.at("n").get<int>();
    r.v = Permutation::parse(j.at("v").get<std::string>());
    r.w = Permutation::parse(j.at("w").get<std::string>());
    if (r.v.size() != r.n || r.w.size() != r.n) throw InvalidArgument("record size mismatch");
    r.method = parse_method(j.at("method").get<std::string>());
    r.reg = optional_from_json<int>(j, "reg");
    r.h_coeffs = coeffs_from_json(j.at("h_coeffs"));
    r.dim = j.at("dim").get<int>();
    r.height = j.at("height").get<int>();
    r.covexillary = j.at("covexillary").get<bool>();
    r.cm_status = parse_cm_status(j.at("cm_status").get<std::string>());
    r.kl_degree = optional_from_json<int>(j, "kl_degree");
    r.kernel_version = j.at("kernel_version").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<int64_t>();
    r.budget_exceeded = j.value("budget_exceeded", false);
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed cache line: ") + e.what());
  }
}

}  // namespace schubreg
