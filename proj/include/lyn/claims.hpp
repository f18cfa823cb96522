#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lyn/stirling.hpp"

namespace lyn {

/// Limits for one claim run. Unset fields take the claim's defaults.
struct ClaimBounds {
  std::optional<int> alphabet_size;
  std::optional<std::size_t> min_length;
  std::optional<std::size_t> max_length;
  std::optional<Interpretation> interpretation;
  std::optional<bool> convention_k0;
  /// Counterexamples kept in the report; all violations are still counted.
  std::size_t max_counterexamples = 100;
  std::uint64_t max_words = 20'000'000;
};

struct ClaimDescriptor {
  std::string id;
  std::string anchor;     // which statement is audited, e.g. "Lemma 7"
  std::string statement;  // what is checked, in plain words
  int default_alphabet_size = 3;
  std::size_t default_min_length = 1;
  std::size_t default_max_length = 6;
  /// Reading known to fail on hand-derived instances, if any.
  std::string literal_note;
};

struct Counterexample {
  nlohmann::json instance;  // self-contained; replayable
  std::string violation;
};

enum class ClaimStatus { kNoCounterexample, kCounterexamplesFound };

std::string to_string(ClaimStatus status);

struct ClaimReport {
  std::string claim_id;
  std::string anchor;
  std::string statement;
  std::string instance_space;
  std::string note;
  nlohmann::json bounds;
  std::uint64_t instances_checked = 0;
  std::uint64_t violations = 0;
  std::vector<Counterexample> counterexamples;
  nlohmann::json data;  // empirical side data (histograms, tables)
  double runtime_seconds = 0.0;

  ClaimStatus status() const {
    return counterexamples.empty() ? ClaimStatus::kNoCounterexample
                                   : ClaimStatus::kCounterexamplesFound;
  }

  /// Stable schema; runtime is omitted so identical runs are byte-identical.
  nlohmann::json to_json() const;
  std::string to_text() const;
};

std::vector<ClaimDescriptor> list_claims();

/// Throws InvalidArgument for an unknown id and BoundExceeded when the bounds
/// are beyond the checker's limits.
ClaimReport run_claim(std::string_view id, const ClaimBounds& bounds = {});

/// Re-evaluates one saved counterexample. Returns the violation when it
/// reproduces, nullopt when the instance now satisfies the claim.
std::optional<std::string> replay_counterexample(std::string_view id,
                                                 const nlohmann::json& instance);

struct ReplayOutcome {
  std::string claim_id;
  std::size_t replayed = 0;
  std::size_t reproduced = 0;
  std::vector<std::string> failures;  // instances that no longer violate
  bool ok() const { return reproduced == replayed; }
};

/// Accepts a single report object or an array of reports.
std::vector<ReplayOutcome> replay_reports(const nlohmann::json& reports);

}  // namespace lyn
