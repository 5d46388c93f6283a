// Acceptance-suite runner shared by the CLI `verify` subcommand and the
// acceptance test binary.
#ifndef HEISCURVE_VERIFY_HPP
#define HEISCURVE_VERIFY_HPP

#include <string>
#include <vector>

namespace heis {

enum class CheckStatus { pass, fail, documented_discrepancy };

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::fail;
  std::string details;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool any_fail() const;
  std::string render() const;  // one line per check, ordered by check-id
};

// quick = true skips the slowest levels (homology N=7, cuspidal N=9,
// the full MNL <= 512 sweep)
VerifyReport run_verify(bool quick);

const char* status_name(CheckStatus s);

}  // namespace heis

#endif
