#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcert/certifier.hpp"
#include "qcert/extremal.hpp"
#include "qcert/polynomial.hpp"

namespace qcert::cli {

inline constexpr const char* kToolName = "qcert";
inline constexpr const char* kToolVersion = "0.3.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitConditionFails = 2,
  kExitNotApplicable = 3,
  kExitInputError = 4,
  kExitNumericalFailure = 5,
};

enum class Command { kConstants, kCertify, kRoots, kVerify, kExtremal, kCubic, kSweep };

struct SweepConfig {
  std::vector<int> degrees{4};
  int trials = 100;
  double margin_low = 0.01;
  double margin_high = 5.0;
  std::uint64_t seed = 0;
  TheoremChoice theorem = TheoremChoice::kAuto;
};

struct SweepSummary {
  int trials = 0;
  int certified = 0;
  int condition_fails = 0;
  int not_applicable = 0;
  int pass = 0;
  int fail = 0;
  int mismatch = 0;
  int abstain = 0;
  int uncertified_simple = 0;  // failed certificate, oracle still finds simple roots
  double min_modulus_gap = 0.0;  // over certified, passing trials
  double min_margin = 0.0;       // smallest certificate margin seen
};

struct RunConfig {
  Command command = Command::kConstants;
  std::string input_path;
  std::string output_path;  // empty: stdout only
  std::optional<double> tol;
  bool json = false;        // compact single-line JSON instead of indented
  std::uint64_t seed = 0;

  int upto = 8;                 // constants
  std::string theorem = "auto"; // certify
  bool claimed_tail = false;    // certify --theorem entire
  ExtremalSpec extremal;        // extremal
  std::string cubic_action = "scan";
  int grid = 10000;
  Complex locus_a{4.0, 0.0};
  Complex locus_b{27.0 / 8.0, 0.0};
  SweepConfig sweep;
};

/// Runs one command, writing a single JSON document to out. Errors go to err
/// as a JSON document too. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it; parse errors exit 4.
int main_with_args(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err);

/// Randomized certify + verify study (see SweepConfig); deterministic in seed.
SweepSummary sweep(const SweepConfig& config);

nlohmann::json sweep_summary_to_json(const SweepSummary& s);

}  // namespace qcert::cli
