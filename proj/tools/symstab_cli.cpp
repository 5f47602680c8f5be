#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symstab/certificates.hpp"
#include "symstab/density.hpp"
#include "symstab/edit_distance.hpp"
#include "symstab/parallel.hpp"
#include "symstab/report_json.hpp"
#include "symstab/schema.hpp"
#include "symstab/strictness.hpp"
#include "symstab/symmetrise.hpp"

using namespace symstab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string objective;
  std::vector<std::string> vectors;
  std::string vector2;
  std::string graph, graph2;
  std::string out, trace_out;
  bool quiet = false;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  int starts = 200;
  int max_support = 6;
  std::string seeds;
  int n = 0;
  bool continuous = false;
  int vertex = -1;
  int n_min = 5, n_max = 7;
  std::string which;
  std::vector<int> params;
};

struct Outcome {
  Json report;
  std::string verdict;          // the line printed under --quiet
  std::vector<std::string> summary;
  int exit_code = kExitPass;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ObjectiveSpec load_objective(const std::string& text) {
  if (text.empty()) throw UsageError("--objective is required");
  if (std::filesystem::is_regular_file(text)) return ObjectiveSpec::read_table_json(text);
  return ObjectiveSpec::parse(text);
}

// A vector argument is inline JSON or a path to a JSON file.
PartiteVector load_vector(const std::string& text) {
  if (text.empty()) throw UsageError("a --vector is required");
  const std::string body = text.front() == '{' ? text : slurp(text);
  return partite_vector_from_json(body);
}

std::vector<PartiteVector> load_vector_list(const std::string& text) {
  const std::string body = text.front() == '[' || text.front() == '{' ? text : slurp(text);
  const Json j = Json::parse(body);
  std::vector<PartiteVector> out;
  if (j.is_array())
    for (auto& e : j) out.push_back(partite_vector_from_json(e.dump()));
  else
    out.push_back(partite_vector_from_json(j.dump()));
  return out;
}

Graph load_graph(const std::string& path) {
  if (path.empty()) throw UsageError("a --graph is required");
  return read_graph_file(path);
}

Outcome run_density(const RunConfig& c) {
  const ObjectiveSpec spec = load_objective(c.objective);
  Outcome o;
  if (!c.graph.empty())
    o.report = density_report(spec, load_graph(c.graph));
  else if (c.vectors.size() == 1)
    o.report = density_report(spec, load_vector(c.vectors[0]));
  else
    throw UsageError("density needs exactly one of --vector or --graph");
  o.verdict = o.report["lambda"].get<std::string>();
  return o;
}

Outcome run_symmetrise(const RunConfig& c) {
  const ObjectiveSpec spec = load_objective(c.objective);
  const Graph g = load_graph(c.graph);
  const SymmetrisationTrace trace = c.vertex >= 0 ? symmetrise_vertex(spec, g, c.vertex) : symmetrise_full(spec, g);
  Outcome o;
  o.report = symmetrise_report(spec, trace);
  std::string shape;
  for (int s : trace.final_shape.part_sizes) shape += (shape.empty() ? "" : ",") + std::to_string(s);
  o.summary.push_back("steps: " + std::to_string(trace.steps.size()));
  o.summary.push_back("final shape: (" + shape + ")");
  if (!trace.steps.empty()) o.summary.push_back("lambda: " + to_string(trace.steps.back().lambda_after));
  o.verdict = "complete partite after " + std::to_string(trace.steps.size()) + " steps";
  if (!c.trace_out.empty()) {
    std::ofstream out(c.trace_out);
    if (!out) throw UsageError("cannot write " + c.trace_out);
    out << trace_to_json(trace) << "\n";
  }
  return o;
}

Outcome run_gradients(const RunConfig& c) {
  const ObjectiveSpec spec = load_objective(c.objective);
  if (c.vectors.size() != 1) throw UsageError("gradients needs one --vector");
  Outcome o;
  o.report = gradients_report(spec, load_vector(c.vectors[0]));
  o.summary.push_back("lambda: " + o.report["lambda"].get<std::string>());
  for (auto& f : o.report["flips"])
    o.summary.push_back("flip " + std::to_string(f["i1"].get<int>()) + "," + std::to_string(f["i2"].get<int>()) + ": " +
                        f["value"].get<std::string>());
  o.verdict = "lagrange residual " + o.report["lagrange_residual"].get<std::string>();
  return o;
}

Outcome run_strictness(const RunConfig& c) {
  const ObjectiveSpec spec = load_objective(c.objective);
  if (c.vectors.empty()) throw UsageError("strictness needs at least one --vector");
  std::vector<PartiteVector> xs;
  for (auto& v : c.vectors) xs.push_back(load_vector(v));
  const StrictnessReport r = strictness_certificate(spec, xs);
  Outcome o;
  o.report = strictness_report(spec, r);
  o.summary.push_back("c1 = " + to_string(r.c1) + ", c2 = " + to_string(r.c2));
  o.verdict = std::string(r.pass ? "pass" : "fail") + " c = " + to_string(r.c);
  o.exit_code = r.pass ? kExitPass : kExitFail;
  return o;
}

Outcome run_opt(const RunConfig& c) {
  const ObjectiveSpec spec = load_objective(c.objective);
  std::optional<FiniteOptResult> fin;
  std::optional<CandidateSet> cont;
  if (c.n > 0) fin = finite_opt(spec, c.n);
  if (c.continuous || c.n == 0) {
    OptOptions opts;
    opts.starts = c.starts;
    opts.max_support = c.max_support;
    opts.seed = c.seed;
    if (!c.seeds.empty()) opts.seeds = load_vector_list(c.seeds);
    cont = continuous_opt(spec, opts);
  }
  Outcome o;
  o.report = opt_report(spec, fin ? &*fin : nullptr, cont ? &*cont : nullptr);
  if (fin) {
    o.summary.push_back("n = " + std::to_string(fin->n) + ": " + to_string(fin->value));
    o.verdict = to_string(fin->value);
  }
  if (cont) {
    for (std::size_t i : cont->maximisers) {
      const Candidate& cand = cont->candidates[i];
      o.summary.push_back("maximiser: " + (cand.snapped ? cand.snapped->to_string() + " lambda = " + to_string(cand.exact_value)
                                                         : "lambda ~ " + std::to_string(cand.value)));
    }
    if (cont->candidates.empty()) {
      o.verdict = "no converged candidate";
      o.exit_code = kExitInconclusive;
    } else {
      const Candidate& best = cont->candidates.front();
      o.verdict = best.snapped ? to_string(best.exact_value) : std::to_string(best.value);
    }
  }
  return o;
}

Outcome run_certify(const RunConfig& c) {
  auto need = [&](std::size_t count) {
    if (c.params.size() != count)
      throw UsageError("certify " + c.which + " takes " + std::to_string(count) + " integer parameters");
  };
  CertificateReport r;
  if (c.which == "kst") {
    need(2);
    r = certify_kst(c.params[0], c.params[1]);
  } else if (c.which == "krt") {
    need(2);
    r = certify_krt(c.params[0], c.params[1]);
  } else if (c.which == "k2111") {
    need(0);
    r = certify_k2111();
  } else if (c.which == "k311") {
    need(0);
    r = certify_k311();
  } else {
    throw UsageError("unknown certificate " + c.which);
  }
  Outcome o;
  o.report = certificate_report(r);
  for (auto& chk : r.checks)
    if (!chk.pass) o.summary.push_back(std::string(chk.required ? "failed: " : "info: ") + chk.name);
  o.summary.push_back("lambda_max: " + r.lambda_max);
  o.verdict = verdict_name(r.verdict);
  o.exit_code = r.verdict == Verdict::Pass ? kExitPass : r.verdict == Verdict::Fail ? kExitFail : kExitInconclusive;
  return o;
}

Outcome run_oracle(const RunConfig& c) {
  const ObjectiveSpec spec = load_objective(c.objective);
  if (c.n_min < spec.k() || c.n_max < c.n_min) throw UsageError("need k <= n-min <= n-max");
  Outcome o;
  o.report = oracle_report(spec, c.n_min, c.n_max);
  for (auto& row : o.report["rows"])
    o.summary.push_back("n = " + std::to_string(row["n"].get<int>()) + ": brute " + row["brute"].get<std::string>() +
                        ", partite " + row["partite"].get<std::string>());
  const bool pass = o.report["pass"].get<bool>();
  o.verdict = pass ? "pass" : "fail";
  o.exit_code = pass ? kExitPass : kExitFail;
  return o;
}

Outcome run_edit_distance(const RunConfig& c) {
  Outcome o;
  if (!c.graph.empty() || !c.graph2.empty())
    o.report = edit_distance_report(load_graph(c.graph), load_graph(c.graph2));
  else if (c.vectors.size() == 1 && !c.vector2.empty())
    o.report = edit_distance_report(load_vector(c.vectors[0]), load_vector(c.vector2));
  else
    throw UsageError("edit-distance needs --vector and --vector2, or --graph and --graph2");
  o.verdict = o.report["distance"].get<std::string>();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation and certification of symmetrisable graph parameters"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  app.add_option("--out", c.out, "Write the JSON report here");
  app.add_flag("--quiet", c.quiet, "Print only the verdict line");
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--threads", c.threads, "Worker threads (default: hardware concurrency)");

  auto objective = [&](CLI::App* s) { s->add_option("--objective", c.objective, "\"KP a,b,...\", \"SUM c*KP ... + ...\" or a table file"); };
  auto* density = app.add_subcommand("density", "lambda of a partite vector or a graph");
  objective(density);
  density->add_option("--vector", c.vectors, "Partite vector JSON or file");
  density->add_option("--graph", c.graph, "Graph file");

  auto* sym = app.add_subcommand("symmetrise", "Symmetrise a graph into a complete partite graph");
  objective(sym);
  sym->add_option("--graph", c.graph, "Graph file")->required();
  sym->add_option("--vertex", c.vertex, "Only rewire this vertex (its removal must leave a complete partite graph)");
  sym->add_option("--trace-out", c.trace_out, "Write the step trace here");

  auto* grad = app.add_subcommand("gradients", "Flip and vertex gradients and the Lagrange residual");
  objective(grad);
  grad->add_option("--vector", c.vectors, "Partite vector JSON or file");

  auto* strict = app.add_subcommand("strictness", "Check (Str1) and (Str2) at candidate maximisers");
  objective(strict);
  strict->add_option("--vector", c.vectors, "Candidate vector (repeatable)");

  auto* opt = app.add_subcommand("opt", "Search for maximisers");
  objective(opt);
  opt->add_option("--n", c.n, "Exhaustive search over complete partite graphs on n vertices");
  opt->add_flag("--continuous", c.continuous, "Run the continuous search as well as --n");
  opt->add_option("--starts", c.starts, "Number of starts")->check(CLI::PositiveNumber);
  opt->add_option("--max-support", c.max_support, "Largest number of parts")->check(CLI::PositiveNumber);
  opt->add_option("--seeds", c.seeds, "Extra starting vectors: JSON array or file");

  auto* cert = app.add_subcommand("certify", "Run an exact certificate: kst S T | krt R T | k2111 | k311");
  cert->add_option("which", c.which, "Certificate")->required()->check(CLI::IsMember({"kst", "krt", "k2111", "k311"}));
  cert->add_option("params", c.params, "Integer parameters");

  auto* oracle = app.add_subcommand("oracle", "Compare the best graph with the best complete partite graph");
  objective(oracle);
  oracle->add_option("--n-min", c.n_min, "Smallest order");
  oracle->add_option("--n-max", c.n_max, "Largest order");

  auto* edit = app.add_subcommand("edit-distance", "Edit distance of two vectors or two graphs");
  edit->add_option("--vector", c.vectors, "First vector");
  edit->add_option("--vector2", c.vector2, "Second vector");
  edit->add_option("--graph", c.graph, "First graph file");
  edit->add_option("--graph2", c.graph2, "Second graph file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c.threads > 0) set_thread_count(c.threads);
    Outcome o;
    if (density->parsed()) o = run_density(c);
    else if (sym->parsed()) o = run_symmetrise(c);
    else if (grad->parsed()) o = run_gradients(c);
    else if (strict->parsed()) o = run_strictness(c);
    else if (opt->parsed()) o = run_opt(c);
    else if (cert->parsed()) o = run_certify(c);
    else if (oracle->parsed()) o = run_oracle(c);
    else o = run_edit_distance(c);

    const auto problems = validate_report(nlohmann::json::parse(o.report.dump()));
    if (!problems.empty()) {
      std::cerr << "report does not match its schema: " << problems.front() << "\n";
      return kExitFail;
    }
    if (!c.out.empty()) {
      std::ofstream out(c.out);
      if (!out) throw UsageError("cannot write " + c.out);
      out << o.report.dump() << "\n";
    }
    if (!c.quiet)
      for (auto& line : o.summary) std::cout << line << "\n";
    std::cout << o.verdict << "\n";
    return o.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
