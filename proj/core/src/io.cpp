#include "ddg/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace ddg {

using nlohmann::json;

std::string format_real(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string format_digest(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

namespace {

std::string_view parameter_name(DriftedParameter p) {
  switch (p) {
    case DriftedParameter::center: return "center";
    case DriftedParameter::sigma: return "sigma";
    case DriftedParameter::weight: return "weight";
    case DriftedParameter::angle: return "angle";
  }
  return "?";
}

}  // namespace

void write_event_log_header(std::ostream& out, const EventLogHeader& h) {
  json j = {{"record", "header"},         {"schema", h.schema},
            {"prng", h.prng},             {"seed", h.seed},
            {"config_hash", h.config_hash}, {"scenario", h.scenario},
            {"shock_direction", h.shock_direction}};
  out << j.dump() << '\n';
}

void write_event(std::ostream& out, const ChangeEvent& e) {
  json j = {{"record", "event"}, {"tick", e.tick}, {"kind", event_kind_name(e.kind)}};
  json payload = json::object();
  switch (e.kind) {
    case EventKind::local: {
      j["dgc"] = *e.dgc;
      payload["before"] = format_digest(e.digest_before);
      payload["after"] = format_digest(e.digest_after);
      json flips = json::array();
      for (const auto& f : e.flips) {
        json jf = {{"param", parameter_name(f.parameter)},
                   {"cause", f.cause == FlipCause::random ? "random" : "boundary"}};
        if (f.j >= 0) jf["j"] = f.j;
        if (f.k >= 0) jf["k"] = f.k;
        flips.push_back(std::move(jf));
      }
      payload["flips"] = std::move(flips);
      break;
    }
    case EventKind::global_shock:
      payload["before"] = format_digest(e.digest_before);
      payload["after"] = format_digest(e.digest_after);
      break;
    case EventKind::dgc_count:
    case EventKind::var_count:
    case EventKind::cluster_count:
      payload["from"] = e.count_before;
      payload["to"] = e.count_after;
      payload["indices"] = e.indices;
      payload["before"] = format_digest(e.digest_before);
      payload["after"] = format_digest(e.digest_after);
      break;
    case EventKind::incremental_sample:
    case EventKind::full_resample:
      payload["points"] = e.points;
      payload["window"] = format_digest(e.window_digest);
      break;
  }
  j["payload"] = std::move(payload);
  out << j.dump() << '\n';
}

EventLogSummary summarize_event_log(std::istream& in) {
  EventLogSummary s;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::int64_t prev_tick = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("event log line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      fail(e.what());
    }
    try {
      const std::string record = j.at("record").get<std::string>();
      if (record == "header") {
        if (have_header) fail("duplicate header");
        have_header = true;
        s.header.schema = j.at("schema").get<int>();
        s.header.prng = j.at("prng").get<std::string>();
        s.header.seed = j.at("seed").get<std::uint64_t>();
        s.header.config_hash = j.at("config_hash").get<std::string>();
        s.header.scenario = j.value("scenario", "");
        s.header.shock_direction = j.value("shock_direction", "");
        if (s.header.schema != kEventLogSchema) fail("unsupported schema version");
        continue;
      }
      if (record != "event") fail("unknown record type '" + record + "'");
      if (!have_header) fail("event before header");
      const auto tick = j.at("tick").get<std::int64_t>();
      const auto kind = j.at("kind").get<std::string>();
      if (!parse_event_kind(kind)) fail("unknown event kind '" + kind + "'");
      if (tick < prev_tick) fail("ticks out of order");
      if (s.total == 0) s.first_tick = tick;
      s.last_tick = prev_tick = tick;
      ++s.total;
      ++s.counts[kind];
    } catch (const json::exception& e) {
      fail(e.what());
    }
  }
  if (!have_header) throw std::runtime_error("event log has no header record");
  return s;
}

void write_dataset_csv(std::ostream& out, const DatasetWindow& window) {
  const Eigen::Index d = window.dims();
  for (Eigen::Index j = 0; j < d; ++j) out << 'x' << j + 1 << ',';
  out << "birth_tick,source_dgc\n";
  for (const auto& p : window.points()) {
    for (Eigen::Index j = 0; j < p.x.size(); ++j) out << format_real(p.x[j]) << ',';
    out << p.birth_tick << ',' << p.source << '\n';
  }
}

void write_records_csv(std::ostream& out, std::span<const EvaluationRecord> records) {
  out << "tick,value,rescored,best,deployed\n";
  for (const auto& r : records) {
    out << r.tick << ',' << format_real(r.value) << ',' << (r.rescored ? format_real(*r.rescored) : "") << ','
        << format_real(r.best) << ',' << format_real(r.deployed) << '\n';
  }
}

void write_report(std::ostream& out, const RunReport& r) {
  json j = {{"prng", kPrngId},
            {"seed", r.seed},
            {"evaluations", r.evaluations},
            {"objective", "intra-cluster-distance"},
            {"offline_performance", r.offline_performance},
            {"final_best", r.final_best},
            {"event_counts", r.event_counts}};
  if (r.root_threshold) j["root_threshold"] = *r.root_threshold;
  if (r.root_survival) j["root_survival"] = *r.root_survival;
  out << j.dump(2) << '\n';
}

}  // namespace ddg
