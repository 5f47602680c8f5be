#pragma once

#include <string>

#include "json.hpp"

#include "symstab/certificates.hpp"
#include "symstab/graph.hpp"
#include "symstab/objective.hpp"
#include "symstab/opt_search.hpp"
#include "symstab/partite_vector.hpp"
#include "symstab/strictness.hpp"
#include "symstab/symmetrise.hpp"

namespace symstab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchemaVersion = "1.0";

// Every report carries {"report": kind, "schema_version": ...} ahead of its body.
Json report_header(const std::string& kind);

Json density_report(const ObjectiveSpec& spec, const PartiteVector& x);
Json density_report(const ObjectiveSpec& spec, const Graph& g);
// ∇•• table, partial derivatives, Lagrange residual and every vertex-gradient polynomial.
Json gradients_report(const ObjectiveSpec& spec, const PartiteVector& x);
Json strictness_report(const ObjectiveSpec& spec, const StrictnessReport& report);
Json symmetrise_report(const ObjectiveSpec& spec, const SymmetrisationTrace& trace);
Json opt_report(const ObjectiveSpec& spec, const FiniteOptResult* finite, const CandidateSet* continuous);
// brute_lambda_max over all graphs against finite_opt over complete partite shapes, per n.
Json oracle_report(const ObjectiveSpec& spec, int n_min, int n_max);
Json edit_distance_report(const PartiteVector& x, const PartiteVector& y);
Json edit_distance_report(const Graph& g, const Graph& h);
Json certificate_report(const CertificateReport& report);

}  // namespace symstab
