#include "ddg/engine.hpp"

#include <array>
#include <cmath>

#include "ddg/config.hpp"
#include "ddg/digest.hpp"
#include "ddg/errors.hpp"

namespace ddg {

void DatasetWindow::push(DataPoint p) {
  if (points_.size() >= capacity_) throw ModelViolation("dataset window is full");
  points_.push_back(std::move(p));
}

std::size_t DatasetWindow::evict_oldest(std::size_t n) {
  n = std::min(n, points_.size());
  points_.erase(points_.begin(), points_.begin() + static_cast<std::ptrdiff_t>(n));
  return n;
}

Eigen::MatrixXd DatasetWindow::as_matrix() const {
  Eigen::MatrixXd m(dims(), static_cast<Eigen::Index>(points_.size()));
  Eigen::Index c = 0;
  for (const auto& p : points_) m.col(c++) = p.x;
  return m;
}

namespace {

constexpr std::array<std::string_view, 7> kKindNames = {
    "local", "global-shock", "dgc-count", "var-count", "cluster-count", "incremental-sample", "full-resample",
};

}  // namespace

std::string_view event_kind_name(EventKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<EventKind> parse_event_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<EventKind>(i);
  return std::nullopt;
}

std::size_t draw_dgc_index(const GeneratorState& state, RandomStream& stream) {
  if (state.dgcs.empty()) throw ModelViolation("draw_dgc_index: no components");
  double total = 0.0;
  for (const auto& dgc : state.dgcs) {
    if (!(dgc.weight > 0.0)) throw ModelViolation("draw_dgc_index: non-positive weight");
    total += dgc.weight;
  }
  const double target = stream.uniform01() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < state.dgcs.size(); ++i) {
    acc += state.dgcs[i].weight;
    if (target < acc) return i;
  }
  return state.dgcs.size() - 1;
}

DataPoint draw_point(GeneratorState& state, RandomStream& stream) {
  const std::size_t i = draw_dgc_index(state, stream);
  DgcState& dgc = state.dgcs[i];
  Eigen::VectorXd noise(dgc.dims());
  for (Eigen::Index j = 0; j < noise.size(); ++j) noise[j] = stream.normal();
  return {sample_point(dgc, rotation_of(dgc), noise), state.tick, i};
}

std::size_t refresh_count(const SamplingSettings& sampling) {
  const double raw = sampling.refresh_fraction * static_cast<double>(sampling.capacity);
  // Absorb representation error such as 0.05 * 1000 = 50.000000000000007.
  const auto n = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return std::min(n, sampling.capacity);
}

std::size_t incremental_sample(GeneratorState& state, DatasetWindow& window, RandomStream& stream) {
  const std::size_t n = refresh_count(state.sampling);
  window.evict_oldest(n);
  for (std::size_t i = 0; i < n && !window.full(); ++i) window.push(draw_point(state, stream));
  return n;
}

void full_resample(GeneratorState& state, DatasetWindow& window, RandomStream& stream) {
  window.clear();
  while (!window.full()) window.push(draw_point(state, stream));
  state.needs_resample = false;
}

std::uint64_t window_digest(const DatasetWindow& window) {
  Fnv1a h;
  for (const auto& p : window.points()) {
    h.add(p.x).add(p.birth_tick).add(static_cast<std::uint64_t>(p.source));
  }
  return h.value();
}

EngineStreams::EngineStreams(std::uint64_t master_seed)
    : master(master_seed),
      shock(derive_seed(master_seed, "global-shock")),
      dgc_count(derive_seed(master_seed, "dgc-count")),
      var_count(derive_seed(master_seed, "var-count")),
      cluster_count(derive_seed(master_seed, "cluster-count")),
      sample_gate(derive_seed(master_seed, "sample-gate")),
      sampling(derive_seed(master_seed, "sampling")) {}

RandomStream& EngineStreams::local(std::uint64_t serial) {
  auto it = local_.find(serial);
  if (it == local_.end()) it = local_.emplace(serial, RandomStream(derive_seed(master, "local", serial))).first;
  return it->second;
}

void EngineStreams::prune_local(const GeneratorState& state) {
  std::map<std::uint64_t, RandomStream> kept;
  for (const auto& dgc : state.dgcs) {
    auto it = local_.find(dgc.serial);
    if (it != local_.end()) kept.emplace(dgc.serial, std::move(it->second));
  }
  local_ = std::move(kept);
}

std::vector<ChangeEvent> advance_tick(GeneratorState& state, DatasetWindow& window, EngineStreams& streams) {
  ++state.tick;
  std::vector<ChangeEvent> events;
  const std::int64_t t = state.tick;

  for (std::size_t i = 0; i < state.dgcs.size(); ++i) {
    DgcState& dgc = state.dgcs[i];
    const std::uint64_t before = parameter_digest(dgc);
    auto outcome = apply_local_changes(dgc, state.bounds, streams.local(dgc.serial));
    if (!outcome.changed) continue;
    ChangeEvent e{.tick = t, .kind = EventKind::local, .dgc = i};
    e.digest_before = before;
    e.digest_after = parameter_digest(dgc);
    e.flips = std::move(outcome.flips);
    events.push_back(std::move(e));
  }

  bool large_change = false;
  {
    const std::uint64_t before = state_digest(state);
    if (global_shock(state, streams.shock)) {
      large_change = true;
      events.push_back({.tick = t, .kind = EventKind::global_shock, .digest_before = before,
                        .digest_after = state_digest(state)});
    }
  }

  auto structural = [&](EventKind kind, StructuralChange (*op)(GeneratorState&, RandomStream&),
                        RandomStream& stream) {
    const std::uint64_t before = state_digest(state);
    StructuralChange c = op(state, stream);
    if (!c.fired) return false;
    ChangeEvent e{.tick = t, .kind = kind, .digest_before = before, .digest_after = state_digest(state)};
    e.count_before = c.before;
    e.count_after = c.after;
    e.indices = std::move(c.indices);
    events.push_back(std::move(e));
    return true;
  };
  if (structural(EventKind::dgc_count, change_dgc_count, streams.dgc_count)) {
    large_change = true;
    streams.prune_local(state);
  }
  large_change |= structural(EventKind::var_count, change_var_count, streams.var_count);
  structural(EventKind::cluster_count, change_cluster_count, streams.cluster_count);

  if (large_change) {
    full_resample(state, window, streams.sampling);
    events.push_back({.tick = t, .kind = EventKind::full_resample, .points = window.size(),
                      .window_digest = window_digest(window)});
  } else if (streams.sample_gate.bernoulli(state.sampling.sample_prob)) {
    const std::size_t n = incremental_sample(state, window, streams.sampling);
    if (n > 0)
      events.push_back({.tick = t, .kind = EventKind::incremental_sample, .points = n,
                        .window_digest = window_digest(window)});
  }
  return events;
}

GeneratorState make_initial_state(const ScenarioConfig& config, std::uint64_t seed) {
  validate(config);
  RandomStream init(derive_seed(seed, "init"));

  GeneratorState state;
  state.bounds = config.bounds();
  state.bounds.validate();
  state.globals = config.global;
  state.sampling = config.sampling();
  state.local_defaults = config.local;
  state.kappa = config.initial_clusters;

  const auto d = static_cast<Eigen::Index>(config.initial_dims);
  for (int i = 0; i < config.initial_components; ++i) {
    DgcState dgc = make_random_dgc(state.bounds, config.local, state.next_serial++, init);
    if (static_cast<std::size_t>(i) < config.dgcs.size()) {
      const PinnedDgc& pin = config.dgcs[static_cast<std::size_t>(i)];
      if (pin.center) dgc.center = Eigen::Map<const Eigen::VectorXd>(pin.center->data(), d);
      if (pin.sigma) dgc.sigma = Eigen::Map<const Eigen::VectorXd>(pin.sigma->data(), d);
      if (pin.weight) dgc.weight = *pin.weight;
      if (pin.angles) {
        dgc.theta.setZero();
        for (const auto& a : *pin.angles) dgc.theta(a.axis_a, a.axis_b) = a.radians;
      }
      if (pin.local) dgc.local = *pin.local;
    }
    state.dgcs.push_back(std::move(dgc));
  }
  if (auto v = find_violation(state)) throw ConfigError("dgcs", "initial state invalid: " + *v);
  return state;
}

Engine::Engine(GeneratorState initial, std::uint64_t seed, std::int64_t t_max)
    : state_(std::move(initial)), window_(state_.sampling.capacity), streams_(seed), t_max_(t_max) {
  state_.tick = 0;
  full_resample(state_, window_, streams_.sampling);
}

Engine::Engine(const ScenarioConfig& config, std::uint64_t seed, std::int64_t t_max)
    : Engine(make_initial_state(config, seed), seed, t_max) {}

std::vector<ChangeEvent> Engine::advance() {
  if (finished()) throw RunComplete("tick horizon exhausted");
  return advance_tick(state_, window_, streams_);
}

RunResult run(const ScenarioConfig& config, std::uint64_t seed, std::int64_t t_max, const SnapshotPolicy& policy,
              const SnapshotSink& snapshot_sink, const EventSink& event_sink) {
  Engine engine(config, seed, t_max);
  RunResult result;
  auto snapshot = [&] {
    if (snapshot_sink)
      snapshot_sink(engine.tick(), engine.window());
    else
      result.snapshots.push_back({engine.tick(), engine.window()});
  };
  snapshot();
  while (!engine.finished()) {
    auto events = engine.advance();
    bool resampled = false;
    for (auto& e : events) {
      resampled = resampled || e.kind == EventKind::full_resample;
      if (event_sink)
        event_sink(e);
      else
        result.events.push_back(std::move(e));
    }
    const bool periodic = policy.every > 0 && engine.tick() % policy.every == 0;
    if (periodic || (policy.on_resample && resampled)) snapshot();
  }
  result.final_state = engine.state();
  result.final_window = engine.window();
  return result;
}

}  // namespace ddg
