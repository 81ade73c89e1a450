// Theorem verification suites: each runs one family of checks exhaustively
// for a fixed (W, c) and reports counted checks plus a list of minimal
// counterexamples (one-line forms).  The CLI's `verify` subcommand and the
// acceptance suite are thin wrappers around these.
#pragma once

#include "coxcat/charts.hpp"
#include "coxcat/gkm.hpp"

namespace coxcat {

struct SuiteReport {
  std::string suite;
  long long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

struct VerifyContext {
  RootSystem rs;
  WeylGroup w;
  CoxeterElement cox;
  Cambrian cam;
  NcLattice nc;
  QVec lambda;
  uint32_t prime = 10007;
  int trials = 100;
  uint64_t seed = 42;

  VerifyContext(GroupType t, int rank, const std::vector<int>& cword,
                const QVec* lambda_override = nullptr);
};

SuiteReport verify_hasseunion(const VerifyContext& ctx);
SuiteReport verify_equivwwc(const VerifyContext& ctx);
SuiteReport verify_bruhatmax(const VerifyContext& ctx);
SuiteReport verify_clustercone(const VerifyContext& ctx);
SuiteReport verify_polypositroid(const VerifyContext& ctx);
SuiteReport verify_complex(const VerifyContext& ctx);
SuiteReport verify_hhmp(const VerifyContext& ctx);
SuiteReport verify_gkm(const VerifyContext& ctx);
SuiteReport verify_plucker(const VerifyContext& ctx);

// Fans the suites out across workers; results merged in suite-name order.
std::vector<SuiteReport> verify_all(const VerifyContext& ctx);
// nullptr if the name is unknown
SuiteReport (*suite_by_name(const std::string& name))(const VerifyContext&);
std::vector<std::string> suite_names();

}  // namespace coxcat
