#pragma once

#include "latmink/corpus.hpp"
#include "latmink/theorems.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace latmink {

struct RunConfig {
  std::vector<Check> checks;
  unsigned jobs = 1;
  std::uint64_t seed = 0;  // recorded in the report header
};

/// Worker count from LATMINK_JOBS, else the hardware concurrency.
unsigned default_jobs();

struct CheckSummary {
  std::size_t reports = 0;
  std::size_t satisfied = 0;
  std::size_t equalities = 0;
  std::size_t skipped = 0;  // bodies the check does not apply to
  std::optional<GaugeValue> max_ratio;  // largest measured / bound
};

struct VerificationSummary {
  std::size_t bodies = 0;
  std::map<Check, CheckSummary> per_check;
  std::vector<std::string> equality_inventory;  // "<body> <check>"
  std::vector<std::string> violations;          // proven bounds that failed
  std::vector<std::string> uncertified;         // equality without certificate
  std::vector<std::string> conjecture_violations;

  /// 0 when every proven bound held and every characterized equality was
  /// certified; 1 otherwise. Conjecture violations do not affect it.
  int exit_code() const;
};

struct VerificationResult {
  std::vector<BoundReport> reports;  // sorted by body id, then check order
  VerificationSummary summary;
};

/// Verifies every applicable (body, check) pair. Bodies are spread over
/// config.jobs workers; on_body is called once per body, in corpus order,
/// with that body's reports. Throws std::invalid_argument for an empty
/// check set.
VerificationResult run_verification(const Corpus& corpus, const RunConfig& config,
                                    const std::function<void(const std::vector<BoundReport>&)>& on_body = {});

std::string report_header(const Corpus& corpus, const RunConfig& config);
std::string format_summary(const VerificationSummary& s);

}  // namespace latmink
