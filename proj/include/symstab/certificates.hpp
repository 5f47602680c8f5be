#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symstab/polynomial.hpp"
#include "symstab/rational.hpp"

namespace symstab {

enum class Verdict { Pass, Fail, Inconclusive };
std::string verdict_name(Verdict v);

struct CertificateCheck {
  std::string name;
  bool pass = false;
  bool required = true;  // informational checks never change the verdict
  std::string detail;
  std::vector<std::pair<std::string, std::string>> values;  // exact witnesses, "p/q" where rational
};

struct CertificateReport {
  std::string certificate;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CertificateCheck> checks;
  std::vector<std::string> notes;
  std::string lambda_max;   // "p/q", or an isolating interval "[lo, hi]"
  std::string maximiser;    // PartiteVector JSON, or an algebraic description
  bool hypothesis_holds = true;  // false → verdict Inconclusive unless a required check fails
  Verdict verdict = Verdict::Fail;
  std::string first_failure;

  CertificateCheck& add(std::string name, bool pass, std::string detail = {});
  CertificateCheck& info(std::string name, bool pass, std::string detail = {});
  void finalise();
};

std::string certificate_to_json(const CertificateReport& report);

// Pipelines.
CertificateReport certify_kst(int s, int t);
CertificateReport certify_krt(int r, int t);
CertificateReport certify_k2111();
CertificateReport certify_k311();

// Fixture loading for the K_{3,1,1} certificate.
std::string data_directory();
UPoly read_polynomial_file(const std::string& path);  // lines "degree coefficient"

// Newton interpolation through (xs[i], ys[i]).
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace symstab
