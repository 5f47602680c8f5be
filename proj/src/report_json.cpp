#include "symstab/report_json.hpp"

#include "symstab/density.hpp"
#include "symstab/edit_distance.hpp"
#include "symstab/perturbation.hpp"

namespace symstab {

namespace {

Json vector_json(const PartiteVector& x) { return Json::parse(partite_vector_to_json(x)); }

Json objective_json(const ObjectiveSpec& spec) { return Json{{"description", spec.description()}, {"k", spec.k()}}; }

Json edges_json(const Graph& g) {
  Json e = Json::array();
  for (auto& [u, v] : g.edges()) e.push_back({u, v});
  return e;
}

}  // namespace

Json report_header(const std::string& kind) { return Json{{"report", kind}, {"schema_version", kReportSchemaVersion}}; }

Json density_report(const ObjectiveSpec& spec, const PartiteVector& x) {
  Json j = report_header("density");
  j["objective"] = objective_json(spec);
  j["vector"] = vector_json(x);
  const Rational value = lambda_of_vector(spec, x);
  j["lambda"] = to_string(value);
  j["lambda_closed_form"] = to_string(lambda_closed_form(spec, x));
  j["approx"] = value.get_d();
  return j;
}

Json density_report(const ObjectiveSpec& spec, const Graph& g) {
  Json j = report_header("density");
  j["objective"] = objective_json(spec);
  j["graph"] = Json{{"n", g.order()}, {"edges", edges_json(g)}};
  const LambdaValue v = lambda_graph(spec, g);
  j["lambda"] = to_string(v.lambda);
  j["total"] = to_string(v.total);
  j["approx"] = v.lambda.get_d();
  return j;
}

Json gradients_report(const ObjectiveSpec& spec, const PartiteVector& x) {
  Json j = report_header("gradients");
  j["objective"] = objective_json(spec);
  j["vector"] = vector_json(x);
  j["lambda"] = to_string(lambda_of_vector(spec, x));
  const auto supp = x.extended_support();
  j["flips"] = Json::array();
  for (std::size_t a = 0; a < supp.size(); ++a)
    for (std::size_t b = a; b < supp.size(); ++b)
      j["flips"].push_back(
          {{"i1", supp[a]}, {"i2", supp[b]}, {"value", to_string(flip_gradient(spec, x, supp[a], supp[b]))}});
  j["partials"] = Json::array();
  for (int i : supp) {
    const Rational d = partial_derivative(spec, x, i);
    j["partials"].push_back({{"i", i}, {"value", to_string(d)}, {"normalised", to_string(d / spec.k())}});
  }
  j["lagrange_residual"] = to_string(lagrange_residual(spec, x));
  const int m = x.support_size();
  j["vertex_gradients"] = Json::array();
  if (m <= 12) {
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
      const AttachmentPattern p = pattern_from_mask(x, mask, 1);
      const UPoly g = vertex_gradient_polynomial(spec, x, p.b);
      const Rational at1 = g(1);
      j["vertex_gradients"].push_back({{"mask", mask}, {"pattern", p.to_string()}, {"polynomial", g.to_string("alpha")},
                                       {"at_alpha_1", to_string(at1)}});
    }
  }
  return j;
}

Json strictness_report(const ObjectiveSpec& spec, const StrictnessReport& report) {
  Json j = report_header("strictness");
  j["objective"] = objective_json(spec);
  const Json body = Json::parse(strictness_to_json(report));
  j["pass"] = body["pass"];
  for (auto& [k, v] : body.items())
    if (k != "pass") j[k] = v;
  return j;
}

Json symmetrise_report(const ObjectiveSpec& spec, const SymmetrisationTrace& trace) {
  Json j = report_header("symmetrise");
  j["objective"] = objective_json(spec);
  j["initial"] = Json{{"n", trace.initial_graph.order()}, {"edges", edges_json(trace.initial_graph)}};
  const Json body = Json::parse(trace_to_json(trace));
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Json opt_report(const ObjectiveSpec& spec, const FiniteOptResult* finite, const CandidateSet* continuous) {
  Json j = report_header("opt");
  j["objective"] = objective_json(spec);
  if (finite) {
    Json f{{"n", finite->n}, {"value", to_string(finite->value)}, {"evaluated", finite->evaluated}};
    f["shapes"] = Json::array();
    for (auto& s : finite->shapes) f["shapes"].push_back(s.part_sizes);
    j["finite"] = f;
  }
  if (continuous) j["continuous"] = Json::parse(candidate_set_to_json(*continuous));
  return j;
}

Json oracle_report(const ObjectiveSpec& spec, int n_min, int n_max) {
  Json j = report_header("oracle");
  j["objective"] = objective_json(spec);
  j["rows"] = Json::array();
  bool agree = true;
  for (int n = n_min; n <= n_max; ++n) {
    const BruteMax brute = brute_lambda_max(spec, n);
    const FiniteOptResult fin = finite_opt(spec, n);
    bool partite_witness = false;
    for (auto& key : brute.witnesses) partite_witness = partite_witness || complete_partite_shape_of(key.to_graph()).has_value();
    const bool eq = brute.value == fin.value;
    agree = agree && eq;
    j["rows"].push_back({{"n", n},
                         {"brute", to_string(brute.value)},
                         {"partite", to_string(fin.value)},
                         {"equal", eq},
                         {"witnesses", brute.witnesses.size()},
                         {"partite_witness", partite_witness}});
  }
  j["pass"] = agree;
  return j;
}

Json edit_distance_report(const PartiteVector& x, const PartiteVector& y) {
  Json j = report_header("edit-distance");
  j["x"] = vector_json(x);
  j["y"] = vector_json(y);
  const Rational d = edit_distance_vectors(x, y);
  j["distance"] = to_string(d);
  j["approx"] = d.get_d();
  return j;
}

Json edit_distance_report(const Graph& g, const Graph& h) {
  Json j = report_header("edit-distance");
  j["g"] = Json{{"n", g.order()}, {"edges", edges_json(g)}};
  j["h"] = Json{{"n", h.order()}, {"edges", edges_json(h)}};
  const Rational d = edit_distance_exact(g, h);
  j["distance"] = to_string(d);
  j["approx"] = d.get_d();
  return j;
}

Json certificate_report(const CertificateReport& report) {
  Json j = report_header("certificate");
  const Json body = Json::parse(certificate_to_json(report));
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

}  // namespace symstab
