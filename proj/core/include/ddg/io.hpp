#pragma once

// Artifact formats: event logs (JSON lines), dataset and metric CSVs, run
// reports.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "ddg/engine.hpp"
#include "ddg/evaluation.hpp"

namespace ddg {

inline constexpr int kEventLogSchema = 1;

/// Shortest decimal text that parses back to exactly `v`.
std::string format_real(double v);

/// 16 lowercase hex digits.
std::string format_digest(std::uint64_t v);

struct EventLogHeader {
  int schema = kEventLogSchema;
  std::string prng{kPrngId};
  std::uint64_t seed = 0;
  std::string config_hash;
  std::string scenario;
  std::string shock_direction = "per-component";
};

/// First line of an event log.
void write_event_log_header(std::ostream& out, const EventLogHeader& header);
/// One JSON object per line.
void write_event(std::ostream& out, const ChangeEvent& event);

struct EventLogSummary {
  EventLogHeader header;
  std::size_t total = 0;
  std::int64_t first_tick = 0;
  std::int64_t last_tick = 0;
  std::map<std::string, std::size_t> counts;
};

/// Validates and summarizes an event log. Throws std::runtime_error naming
/// the offending line on malformed input.
EventLogSummary summarize_event_log(std::istream& in);

/// CSV with header `x1,...,xd,birth_tick,source_dgc`.
void write_dataset_csv(std::ostream& out, const DatasetWindow& window);

/// CSV with header `tick,value,rescored,best,deployed`.
void write_records_csv(std::ostream& out, std::span<const EvaluationRecord> records);

/// Pretty-printed JSON summary of a harness run.
void write_report(std::ostream& out, const RunReport& report);

}  // namespace ddg
