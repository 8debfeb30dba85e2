#pragma once

// Discrete-event run loop: one tick per function evaluation, probabilistic
// gates in a fixed order, a fixed-capacity FIFO dataset window and a change
// event log.

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "ddg/global_dynamics.hpp"
#include "ddg/local_dynamics.hpp"
#include "ddg/random.hpp"
#include "ddg/state.hpp"

namespace ddg {

struct ScenarioConfig;

struct DataPoint {
  Eigen::VectorXd x;
  std::int64_t birth_tick = 0;
  std::size_t source = 0;  // index of the generating component at birth
};

/// Fixed-capacity FIFO buffer; front() is the oldest point.
class DatasetWindow {
 public:
  explicit DatasetWindow(std::size_t capacity = 0) : capacity_(capacity) {}

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool full() const noexcept { return points_.size() == capacity_; }
  const std::deque<DataPoint>& points() const noexcept { return points_; }

  /// Dimension of the stored points (0 when empty).
  Eigen::Index dims() const noexcept { return points_.empty() ? 0 : points_.front().x.size(); }

  void push(DataPoint p);
  std::size_t evict_oldest(std::size_t n);
  void clear() noexcept { points_.clear(); }

  /// Points as the columns of a d x n matrix.
  Eigen::MatrixXd as_matrix() const;

 private:
  std::size_t capacity_;
  std::deque<DataPoint> points_;
};

enum class EventKind {
  local,
  global_shock,
  dgc_count,
  var_count,
  cluster_count,
  incremental_sample,
  full_resample,
};

std::string_view event_kind_name(EventKind kind);
std::optional<EventKind> parse_event_kind(std::string_view name);

/// One fired dynamic. Which fields are meaningful depends on `kind`:
///   local              : dgc, digest_before/after, flips
///   global_shock       : digest_before/after (whole state)
///   *_count            : count_before/after, indices, digest_before/after
///   incremental_sample : points (replaced), window_digest
///   full_resample      : points (capacity), window_digest
struct ChangeEvent {
  std::int64_t tick = 0;
  EventKind kind = EventKind::local;
  std::optional<std::size_t> dgc;
  std::uint64_t digest_before = 0;
  std::uint64_t digest_after = 0;
  int count_before = 0;
  int count_after = 0;
  std::vector<std::size_t> indices;
  std::size_t points = 0;
  std::uint64_t window_digest = 0;
  std::vector<DirectionFlip> flips;
};

/// Index i with probability w_i / sum_j w_j. One base draw.
std::size_t draw_dgc_index(const GeneratorState& state, RandomStream& stream);

/// Draws one point from the current state: component index, then d normals.
DataPoint draw_point(GeneratorState& state, RandomStream& stream);

/// Number of points replaced per incremental sample: ceil(fraction * capacity).
std::size_t refresh_count(const SamplingSettings& sampling);

/// Evicts the refresh_count() oldest points and appends as many fresh ones.
std::size_t incremental_sample(GeneratorState& state, DatasetWindow& window, RandomStream& stream);

/// Replaces the whole window with `capacity` fresh points born at the current tick.
void full_resample(GeneratorState& state, DatasetWindow& window, RandomStream& stream);

std::uint64_t window_digest(const DatasetWindow& window);

/// Named substreams derived from one master seed. Each dynamic draws only
/// from its own stream, so changing one gate's probability never perturbs the
/// draws of the others.
struct EngineStreams {
  explicit EngineStreams(std::uint64_t master_seed);

  RandomStream& local(std::uint64_t serial);
  void prune_local(const GeneratorState& state);

  std::uint64_t master;
  RandomStream shock;
  RandomStream dgc_count;
  RandomStream var_count;
  RandomStream cluster_count;
  RandomStream sample_gate;
  RandomStream sampling;

 private:
  std::map<std::uint64_t, RandomStream> local_;
};

/// Advances one tick. Gates run in this order: local changes per component
/// (index order), global shock, component count, variable count, cluster
/// count; then a full resample if any of shock/component/variable fired,
/// otherwise the Bernoulli(sample_prob) incremental-sampling gate.
std::vector<ChangeEvent> advance_tick(GeneratorState& state, DatasetWindow& window, EngineStreams& streams);

/// Builds the tick-0 state from a validated config using the "init" substream.
GeneratorState make_initial_state(const ScenarioConfig& config, std::uint64_t seed);

/// Evaluation-driven handle: each advance() is one function evaluation.
class Engine {
 public:
  /// Performs the initial fill at tick 0; no dynamics fire there.
  Engine(GeneratorState initial, std::uint64_t seed, std::int64_t t_max);
  Engine(const ScenarioConfig& config, std::uint64_t seed, std::int64_t t_max);

  /// Throws RunComplete once tick() == t_max().
  std::vector<ChangeEvent> advance();

  bool finished() const noexcept { return state_.tick >= t_max_; }
  std::int64_t tick() const noexcept { return state_.tick; }
  std::int64_t t_max() const noexcept { return t_max_; }
  std::uint64_t seed() const noexcept { return streams_.master; }
  const GeneratorState& state() const noexcept { return state_; }
  const DatasetWindow& window() const noexcept { return window_; }

 private:
  GeneratorState state_;
  DatasetWindow window_;
  EngineStreams streams_;
  std::int64_t t_max_;
};

struct Snapshot {
  std::int64_t tick = 0;
  DatasetWindow window;
};

struct SnapshotPolicy {
  std::int64_t every = 0;  // 0 disables periodic snapshots
  bool on_resample = false;
};

using SnapshotSink = std::function<void(std::int64_t tick, const DatasetWindow&)>;
using EventSink = std::function<void(const ChangeEvent&)>;

struct RunResult {
  GeneratorState final_state;
  DatasetWindow final_window;
  std::vector<ChangeEvent> events;     // empty when an event sink was given
  std::vector<Snapshot> snapshots;     // empty when a snapshot sink was given
};

/// Generate-only mode: initial fill, then t_max ticks. The tick-0 window is
/// always snapshotted. Deterministic in (config, seed).
RunResult run(const ScenarioConfig& config, std::uint64_t seed, std::int64_t t_max,
              const SnapshotPolicy& policy = {}, const SnapshotSink& snapshot_sink = {},
              const EventSink& event_sink = {});

}  // namespace ddg
