#include <cstdlib>
#include <fstream>
#include "json.hpp"
#include <sstream>
#include <stdexcept>

#include "symstab/certificates.hpp"

namespace symstab {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "fail";
}

CertificateCheck& CertificateReport::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, true, std::move(detail), {}});
  return checks.back();
}

CertificateCheck& CertificateReport::info(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, false, std::move(detail), {}});
  return checks.back();
}

void CertificateReport::finalise() {
  first_failure.clear();
  for (auto& c : checks)
    if (c.required && !c.pass) {
      first_failure = c.name;
      break;
    }
  if (!first_failure.empty()) verdict = Verdict::Fail;
  else verdict = hypothesis_holds ? Verdict::Pass : Verdict::Inconclusive;
}

std::string certificate_to_json(const CertificateReport& report) {
  nlohmann::ordered_json j;
  j["certificate"] = report.certificate;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (auto& [k, v] : report.parameters) params[k] = v;
  j["parameters"] = params;
  j["verdict"] = verdict_name(report.verdict);
  j["hypothesis_holds"] = report.hypothesis_holds;
  if (!report.first_failure.empty()) j["first_failure"] = report.first_failure;
  j["lambda_max"] = report.lambda_max;
  j["maximiser"] = report.maximiser;
  j["checks"] = nlohmann::ordered_json::array();
  for (auto& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["required"] = c.required;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (auto& [k, v] : c.values) vals[k] = v;
    cj["values"] = vals;
    j["checks"].push_back(cj);
  }
  j["notes"] = report.notes;
  return j.dump(2);
}

std::string data_directory() {
  if (const char* env = std::getenv("SYMSTAB_DATA_DIR")) return env;
#ifdef SYMSTAB_DATA_DIR
  return SYMSTAB_DATA_DIR;
#else
  return "data";
#endif
}

UPoly read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Rational> coeffs;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    int degree;
    std::string value;
    if (!(is >> degree)) continue;
    if (!(is >> value) || degree < 0) throw std::runtime_error("malformed polynomial line in " + path);
    if (static_cast<int>(coeffs.size()) <= degree) coeffs.resize(static_cast<std::size_t>(degree) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(degree)] += parse_rational(value);
  }
  return UPoly::from_coeffs(std::move(coeffs));
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolate: size mismatch");
  std::vector<Rational> dd = ys;
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPoly result(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;)
    result = result * UPoly::from_coeffs({-xs[i], Rational(1)}) + UPoly(dd[i]);
  return result;
}

}  // namespace symstab
