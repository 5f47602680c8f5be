#include "doctest.h"
#include "symstab/certificates.hpp"
#include "symstab/opt_search.hpp"
#include "symstab/report_json.hpp"
#include "symstab/schema.hpp"
#include "symstab/strictness.hpp"
#include "symstab/symmetrise.hpp"

using namespace symstab;

namespace {
void check_valid(const Json& report) {
  // Round-trip through text so validation sees what a reader would.
  const nlohmann::json parsed = nlohmann::json::parse(report.dump());
  const std::vector<std::string> errors = validate_report(parsed);
  for (auto& e : errors) INFO(e);
  CHECK(errors.empty());
}
const ObjectiveSpec& c4() {
  static const ObjectiveSpec s = ObjectiveSpec::complete_partite({2, 2});
  return s;
}
}  // namespace

TEST_CASE("every report kind validates") {
  const PartiteVector x = PartiteVector::uniform(2);
  check_valid(density_report(c4(), x));
  check_valid(density_report(c4(), Graph::cycle(5)));
  check_valid(gradients_report(c4(), x));
  check_valid(strictness_report(c4(), strictness_certificate(c4(), {x})));
  check_valid(symmetrise_report(c4(), symmetrise_full(c4(), Graph::cycle(5))));
  const FiniteOptResult f = finite_opt(c4(), 6);
  OptOptions o;
  o.starts = 10;
  const CandidateSet cs = continuous_opt(c4(), o);
  check_valid(opt_report(c4(), &f, &cs));
  check_valid(opt_report(c4(), &f, nullptr));
  check_valid(oracle_report(c4(), 4, 5));
  check_valid(edit_distance_report(x, PartiteVector::uniform(3)));
  check_valid(edit_distance_report(Graph::cycle(4), Graph::path(4)));
  check_valid(certificate_report(certify_k2111()));
  check_valid(certificate_report(certify_krt(3, 2)));
}

TEST_CASE("schema rejects malformed reports") {
  Json r = density_report(c4(), PartiteVector::uniform(2));
  CHECK(r["schema_version"] == kReportSchemaVersion);
  nlohmann::json bad = nlohmann::json::parse(r.dump());
  bad["lambda"] = 0.375;
  CHECK_FALSE(validate_report(bad).empty());
  nlohmann::json unknown = nlohmann::json::parse(r.dump());
  unknown["report"] = "nonsense";
  CHECK_FALSE(validate_report(unknown).empty());
}

TEST_CASE("validator basics") {
  const nlohmann::json schema = nlohmann::json::parse(
      R"({"type":"object","required":["a"],"properties":{"a":{"type":"integer","minimum":1}},"additionalProperties":false})");
  CHECK(validate_json(nlohmann::json::parse(R"({"a":2})"), schema).empty());
  CHECK_FALSE(validate_json(nlohmann::json::parse(R"({"a":0})"), schema).empty());
  CHECK_FALSE(validate_json(nlohmann::json::parse(R"({})"), schema).empty());
  CHECK_FALSE(validate_json(nlohmann::json::parse(R"({"a":1,"b":1})"), schema).empty());
}
