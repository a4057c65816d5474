#include "latmink/verification.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace latmink {

unsigned default_jobs() {
  if (const char* env = std::getenv("LATMINK_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

int VerificationSummary::exit_code() const { return violations.empty() && uncertified.empty() ? 0 : 1; }

namespace {

struct BodyOutcome {
  std::vector<BoundReport> reports;
  std::vector<Check> skipped;
  std::string error;
};

BodyOutcome verify_body(const CorpusEntry& entry, const std::vector<Check>& checks) {
  BodyOutcome out;
  BodyProfile profile(entry.id, entry.body);
  try {
    for (Check c : checks) {
      if (applicable(c, profile))
        out.reports.push_back(verify(c, profile));
      else
        out.skipped.push_back(c);
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

void record(VerificationSummary& s, const BodyOutcome& outcome, const std::string& id) {
  ++s.bodies;
  if (!outcome.error.empty()) s.violations.push_back(id + " error: " + outcome.error);
  for (Check c : outcome.skipped) ++s.per_check[c].skipped;
  for (const auto& r : outcome.reports) {
    auto& cs = s.per_check[r.check];
    ++cs.reports;
    const std::string tag = r.body_id + " " + std::string(check_name(r.check));
    if (r.satisfied) ++cs.satisfied;
    if (r.equality) {
      ++cs.equalities;
      s.equality_inventory.push_back(tag);
    }
    if (!r.bound.is_zero()) {
      const GaugeValue ratio = GaugeValue::sqrt_of(r.measured.radicand() / (r.bound * r.bound));
      if (!cs.max_ratio || ratio > *cs.max_ratio) cs.max_ratio = ratio;
    }
    if (!r.satisfied) {
      if (r.check == Check::kBhwConjecture)
        s.conjecture_violations.push_back(tag);
      else
        s.violations.push_back(tag);
    }
    if (r.uncertified_equality()) s.uncertified.push_back(tag);
  }
}

}  // namespace

VerificationResult run_verification(const Corpus& corpus, const RunConfig& config,
                                    const std::function<void(const std::vector<BoundReport>&)>& on_body) {
  if (config.checks.empty()) throw std::invalid_argument("run_verification: empty check set");
  const std::size_t count = corpus.bodies.size();
  std::vector<std::optional<BodyOutcome>> slots(count);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      BodyOutcome outcome = verify_body(corpus.bodies[i], config.checks);
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(outcome);
      }
      ready.notify_one();
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::thread> threads;
  for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);

  VerificationResult result;
  for (std::size_t i = 0; i < count; ++i) {
    BodyOutcome outcome;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      outcome = std::move(*slots[i]);
      slots[i].reset();
    }
    record(result.summary, outcome, corpus.bodies[i].id);
    if (on_body) on_body(outcome.reports);
    for (auto& r : outcome.reports) result.reports.push_back(std::move(r));
  }
  for (auto& t : threads) t.join();
  return result;
}

std::string report_header(const Corpus& corpus, const RunConfig& config) {
  std::ostringstream os;
  os << "# corpus=" << corpus.id << " bodies=" << corpus.bodies.size() << " seed=" << config.seed << " checks=";
  for (std::size_t i = 0; i < config.checks.size(); ++i) os << (i ? "," : "") << check_name(config.checks[i]);
  os << "\n# provenance: " << corpus.provenance << "\n";
  return os.str();
}

std::string format_summary(const VerificationSummary& s) {
  std::ostringstream os;
  os << "# summary bodies=" << s.bodies << " violations=" << s.violations.size()
     << " uncertified=" << s.uncertified.size() << " conjecture_violations=" << s.conjecture_violations.size()
     << " exit=" << s.exit_code() << "\n";
  for (const auto& [check, cs] : s.per_check) {
    os << "# check=" << check_name(check) << " reports=" << cs.reports << " satisfied=" << cs.satisfied
       << " equalities=" << cs.equalities << " skipped=" << cs.skipped;
    if (cs.max_ratio) os << " max_ratio=" << cs.max_ratio->str();
    os << "\n";
  }
  for (const auto& e : s.equality_inventory) os << "# equality " << e << "\n";
  for (const auto& v : s.violations) os << "# VIOLATION " << v << "\n";
  for (const auto& u : s.uncertified) os << "# UNCERTIFIED-EQUALITY " << u << "\n";
  for (const auto& c : s.conjecture_violations) os << "# CONJECTURE-VIOLATION " << c << "\n";
  return os.str();
}

}  // namespace latmink
