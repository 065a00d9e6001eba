#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holesat/cnf.hpp"

namespace holesat {

struct CubeResult {
  enum class Status { Sat, Unsat, Error, Timeout };
  std::size_t index = 0;
  Status status = Status::Error;
  double seconds = 0;
  int exit_code = -1;
  std::optional<bool> checked; // set for UNSAT cubes when a checker runs
};

const char *to_string(CubeResult::Status s);

struct CampaignOptions {
  // Shell command; "{cnf}" is replaced by the subproblem path (appended when
  // absent) and "{proof}" by a named pipe shared with the checker.
  std::string solver;
  std::optional<std::string> checker; // same placeholders; exit 0 = verified
  int jobs = 1;
  double timeout = 3600; // seconds per cube
  std::optional<std::string> report_csv; // written before errors are raised
  std::optional<std::string> workdir;    // a fresh temp dir when unset
};

struct CampaignReport {
  std::vector<CubeResult> results; // by cube index
  std::size_t sat = 0, unsat = 0, timeout = 0, error = 0;
  double total_seconds = 0, mean_seconds = 0, max_seconds = 0;
  enum class Verdict { Unsat, Sat, Unknown } verdict = Verdict::Unknown;
};

// Recomputes counts, times and verdict from the results alone.
CampaignReport aggregate(std::vector<CubeResult> results);

void write_csv(const CampaignReport &r, std::ostream &out);
std::string summary(const CampaignReport &r);

// Solves base + each cube (as unit clauses) with an external solver. An empty
// cube list solves the base formula once. Throws SolverCrashed when a solver
// exits with a code other than 10/20 and CheckerRejected when the checker
// refuses a proof; the CSV report is written first either way.
CampaignReport run_campaign(const CnfFormula &base, const std::vector<Cube> &cubes,
                            const CampaignOptions &opt);

} // namespace holesat
