#include "ddg/config.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "ddg/digest.hpp"
#include "ddg/errors.hpp"

namespace ddg {

Bounds ScenarioConfig::bounds() const {
  Bounds b;
  b.configured_lower = lower;
  b.configured_upper = upper;
  const auto d = static_cast<Eigen::Index>(initial_dims);
  if (lower.size() < static_cast<std::size_t>(d) || upper.size() < static_cast<std::size_t>(d))
    throw ConfigError("bounds", "fewer entries than dimensions.initial");
  b.lower = Eigen::Map<const Eigen::VectorXd>(lower.data(), d);
  b.upper = Eigen::Map<const Eigen::VectorXd>(upper.data(), d);
  b.sigma = sigma;
  b.weight = weight;
  b.angle = angle;
  b.dims = dims;
  b.components = components;
  b.clusters = clusters;
  return b;
}

SamplingSettings ScenarioConfig::sampling() const {
  return {capacity, sample_prob, refresh_percent / 100.0};
}

namespace {

void apply_range_defaults(ScenarioConfig& c) {
  c.local.sigma_severity = 0.05 * c.sigma.width();
  c.local.weight_severity = 0.05 * c.weight.width();
  c.local.angle_severity = 0.05 * c.angle.width();
  c.global.sigma_severity = 0.25 * c.sigma.width();
  c.global.weight_severity = 0.25 * c.weight.width();
  c.global.angle_severity = 0.25 * c.angle.width();
}

}  // namespace

ScenarioConfig default_config() {
  ScenarioConfig c;
  c.name = "default";
  c.lower.assign(static_cast<std::size_t>(c.dims.max), -100.0);
  c.upper.assign(static_cast<std::size_t>(c.dims.max), 100.0);
  apply_range_defaults(c);
  return c;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

[[noreturn]] void reject(const std::string& field, const std::string& why) { throw ConfigError(field, why); }

void require_probability(const std::string& field, double p) {
  if (!(p >= 0.0 && p <= 1.0)) reject(field, "must be a probability in [0, 1]");
}

void require_nonnegative(const std::string& field, double v) {
  if (!(v >= 0.0 && std::isfinite(v))) reject(field, "must be finite and >= 0");
}

void require_count_range(const std::string& field, int initial, CountRange r) {
  if (r.min < 1) reject(field + ".min", "must be >= 1");
  if (r.max < r.min) reject(field + ".max", "must be >= min");
  if (!r.contains(initial)) reject(field + ".initial", "must lie in [min, max]");
}

void require_real_range(const std::string& field, Range r) {
  if (!std::isfinite(r.min) || !std::isfinite(r.max)) reject(field, "bounds must be finite");
  if (!(r.min < r.max)) reject(field + ".max", "must be greater than min");
}

void validate_local(const std::string& path, const LocalSettings& l) {
  require_nonnegative(path + ".shift_severity", l.shift_severity);
  require_nonnegative(path + ".sigma_severity", l.sigma_severity);
  require_nonnegative(path + ".weight_severity", l.weight_severity);
  require_nonnegative(path + ".angle_severity", l.angle_severity);
  if (!(l.rho >= 0.0 && l.rho <= 1.0)) reject(path + ".rho", "must lie in [0, 1]");
  require_probability(path + ".flip_prob", l.flip_prob);
  require_probability(path + ".change_prob", l.change_prob);
}

}  // namespace

std::vector<std::string> validate(const ScenarioConfig& c) {
  std::vector<std::string> warnings;
  if (c.ticks < 0) reject("ticks", "must be >= 0");
  require_count_range("dimensions", c.initial_dims, c.dims);
  require_count_range("components", c.initial_components, c.components);
  require_count_range("clusters", c.initial_clusters, c.clusters);

  const auto dmax = static_cast<std::size_t>(c.dims.max);
  if (c.lower.size() != dmax) reject("bounds.lower", "needs one entry per dimension up to dimensions.max");
  if (c.upper.size() != dmax) reject("bounds.upper", "needs one entry per dimension up to dimensions.max");
  for (std::size_t j = 0; j < dmax; ++j) {
    if (!std::isfinite(c.lower[j]) || !std::isfinite(c.upper[j]))
      reject("bounds", "entries must be finite");
    if (!(c.lower[j] < c.upper[j]))
      reject("bounds.upper[" + std::to_string(j) + "]", "must be greater than the lower bound");
  }
  require_real_range("sigma", c.sigma);
  if (!(c.sigma.min > 0.0)) reject("sigma.min", "must be > 0");
  require_real_range("weight", c.weight);
  if (!(c.weight.min > 0.0)) reject("weight.min", "must be > 0 so selection probabilities stay defined");
  require_real_range("angle", c.angle);

  validate_local("local", c.local);

  const GlobalSettings& g = c.global;
  require_nonnegative("global.shift_severity", g.shift_severity);
  require_nonnegative("global.sigma_severity", g.sigma_severity);
  require_nonnegative("global.weight_severity", g.weight_severity);
  require_nonnegative("global.angle_severity", g.angle_severity);
  if (!(g.alpha > 0.0 && std::isfinite(g.alpha))) reject("global.alpha", "must be > 0");
  require_probability("global.shock_prob", g.shock_prob);
  require_probability("global.dgc_count_prob", g.dgc_count_prob);
  require_probability("global.var_count_prob", g.var_count_prob);
  require_probability("global.cluster_count_prob", g.cluster_count_prob);
  if (g.dgc_step < 1) reject("global.dgc_step", "must be >= 1");
  if (g.var_step < 1) reject("global.var_step", "must be >= 1");
  if (g.cluster_step < 1) reject("global.cluster_step", "must be >= 1");

  if (c.capacity < 1) reject("sampling.capacity", "must be >= 1");
  require_probability("sampling.sample_prob", c.sample_prob);
  if (!(c.refresh_percent >= 0.0 && c.refresh_percent <= 100.0))
    reject("sampling.refresh_percent", "must lie in [0, 100]");
  if (c.snapshot_every < 0) reject("snapshots.every", "must be >= 0");

  if (c.dgcs.size() > static_cast<std::size_t>(c.initial_components))
    reject("dgcs", "more pinned components than components.initial");
  const auto d = static_cast<std::size_t>(c.initial_dims);
  for (std::size_t i = 0; i < c.dgcs.size(); ++i) {
    const std::string path = "dgcs[" + std::to_string(i) + "]";
    const PinnedDgc& p = c.dgcs[i];
    if (p.center) {
      if (p.center->size() != d) reject(path + ".center", "length must equal dimensions.initial");
      for (std::size_t j = 0; j < d; ++j)
        if (!((*p.center)[j] >= c.lower[j] && (*p.center)[j] <= c.upper[j]))
          reject(path + ".center", "outside the data bounds");
    }
    if (p.sigma) {
      if (p.sigma->size() != d) reject(path + ".sigma", "length must equal dimensions.initial");
      for (double s : *p.sigma)
        if (!c.sigma.contains(s)) reject(path + ".sigma", "outside the sigma range");
    }
    if (p.weight && !c.weight.contains(*p.weight)) reject(path + ".weight", "outside the weight range");
    if (p.angles) {
      for (const auto& a : *p.angles) {
        if (!(a.axis_a >= 0 && a.axis_a < a.axis_b && static_cast<std::size_t>(a.axis_b) < d))
          reject(path + ".angles", "axes must satisfy 1 <= a < b <= dimensions.initial");
        if (a.radians != 0.0 && !c.angle.contains(a.radians)) reject(path + ".angles", "outside the angle range");
      }
    }
    if (p.local) validate_local(path + ".local", *p.local);
  }

  const bool shocks_on = g.shock_prob > 0.0;
  if (shocks_on && (g.shift_severity <= c.local.shift_severity || g.sigma_severity <= c.local.sigma_severity ||
                    g.weight_severity <= c.local.weight_severity || g.angle_severity <= c.local.angle_severity))
    warnings.push_back("global shock severities are expected to exceed the local severities");
  if (c.sample_prob > 0.0 && c.refresh_percent == 0.0)
    warnings.push_back("sampling.sample_prob > 0 but refresh_percent is 0: incremental sampling is a no-op");
  if (c.sample_prob * c.refresh_percent > 50.0)
    warnings.push_back("sample_prob * refresh_percent is large: the window is replaced almost every tick");
  return warnings;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

/// A YAML mapping with a dotted path that remembers which keys were read so
/// leftovers can be reported as unknown.
class Section {
 public:
  Section(YAML::Node node, std::string path) : node_(std::move(node)), path_(std::move(path)) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) reject(path_.empty() ? "<root>" : path_, "expected a mapping");
  }

  bool present() const { return node_ && !node_.IsNull(); }

  std::string path_of(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  YAML::Node raw(const std::string& key) {
    seen_.insert(key);
    if (!present()) return YAML::Node();
    return node_[key];
  }

  Section child(const std::string& key) { return Section(raw(key), path_of(key)); }

  template <typename T>
  void read(const std::string& key, T& out) {
    YAML::Node n = raw(key);
    if (n && !n.IsNull()) out = convert<T>(n, path_of(key));
  }

  template <typename T>
  void read(const std::string& key, std::optional<T>& out) {
    YAML::Node n = raw(key);
    if (n && !n.IsNull()) out = convert<T>(n, path_of(key));
  }

  void finish() const {
    if (!present()) return;
    for (const auto& kv : node_) {
      const auto key = kv.first.as<std::string>();
      if (!seen_.contains(key)) reject(path_of(key), "unknown key");
    }
  }

  template <typename T>
  static T convert(const YAML::Node& n, const std::string& path) {
    try {
      return n.as<T>();
    } catch (const YAML::Exception&) {
      std::ostringstream msg;
      msg << "wrong type at line " << n.Mark().line + 1 << ", column " << n.Mark().column + 1;
      throw ConfigError(path, msg.str());
    }
  }

 private:
  YAML::Node node_;
  std::string path_;
  std::set<std::string> seen_;
};

void read_count(Section s, int& initial, CountRange& r) {
  s.read("initial", initial);
  s.read("min", r.min);
  s.read("max", r.max);
  s.finish();
}

void read_range(Section s, Range& r) {
  s.read("min", r.min);
  s.read("max", r.max);
  s.finish();
}

void read_local(Section s, LocalSettings& l) {
  s.read("shift_severity", l.shift_severity);
  s.read("sigma_severity", l.sigma_severity);
  s.read("weight_severity", l.weight_severity);
  s.read("angle_severity", l.angle_severity);
  s.read("rho", l.rho);
  s.read("flip_prob", l.flip_prob);
  s.read("change_prob", l.change_prob);
  s.finish();
}

std::vector<double> read_bound_list(Section& s, const std::string& key, std::size_t dmax) {
  YAML::Node n = s.raw(key);
  const std::string path = s.path_of(key);
  if (!n || n.IsNull()) return {};
  if (n.IsScalar()) return std::vector<double>(dmax, Section::convert<double>(n, path));
  return Section::convert<std::vector<double>>(n, path);
}

ScenarioConfig from_yaml(const YAML::Node& root_node) {
  Section root(root_node, "");
  ScenarioConfig c;
  c.lower.clear();
  c.upper.clear();

  root.read("name", c.name);
  root.read("seed", c.seed);
  root.read("ticks", c.ticks);
  read_count(root.child("dimensions"), c.initial_dims, c.dims);
  read_count(root.child("components"), c.initial_components, c.components);
  read_count(root.child("clusters"), c.initial_clusters, c.clusters);
  read_range(root.child("sigma"), c.sigma);
  read_range(root.child("weight"), c.weight);
  read_range(root.child("angle"), c.angle);

  {
    Section b = root.child("bounds");
    const auto dmax = static_cast<std::size_t>(std::max(c.dims.max, 0));
    c.lower = read_bound_list(b, "lower", dmax);
    c.upper = read_bound_list(b, "upper", dmax);
    b.finish();
    if (c.lower.empty()) c.lower.assign(dmax, -100.0);
    if (c.upper.empty()) c.upper.assign(dmax, 100.0);
  }

  // Severity defaults scale with the ranges just read.
  apply_range_defaults(c);
  read_local(root.child("local"), c.local);

  {
    Section g = root.child("global");
    g.read("shift_severity", c.global.shift_severity);
    g.read("sigma_severity", c.global.sigma_severity);
    g.read("weight_severity", c.global.weight_severity);
    g.read("angle_severity", c.global.angle_severity);
    g.read("alpha", c.global.alpha);
    g.read("shock_prob", c.global.shock_prob);
    g.read("dgc_count_prob", c.global.dgc_count_prob);
    g.read("var_count_prob", c.global.var_count_prob);
    g.read("cluster_count_prob", c.global.cluster_count_prob);
    g.read("dgc_step", c.global.dgc_step);
    g.read("var_step", c.global.var_step);
    g.read("cluster_step", c.global.cluster_step);
    g.finish();
  }
  {
    Section s = root.child("sampling");
    std::int64_t capacity = static_cast<std::int64_t>(c.capacity);
    s.read("capacity", capacity);
    if (capacity < 1) reject("sampling.capacity", "must be >= 1");
    c.capacity = static_cast<std::size_t>(capacity);
    s.read("sample_prob", c.sample_prob);
    s.read("refresh_percent", c.refresh_percent);
    s.finish();
  }
  {
    Section s = root.child("snapshots");
    s.read("every", c.snapshot_every);
    s.read("on_resample", c.snapshot_on_resample);
    s.finish();
  }
  {
    Section s = root.child("output");
    s.read("dir", c.output_dir);
    s.finish();
  }

  YAML::Node list = root.raw("dgcs");
  if (list && !list.IsNull()) {
    if (!list.IsSequence()) reject("dgcs", "expected a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "dgcs[" + std::to_string(i) + "]";
      Section s(list[i], path);
      PinnedDgc p;
      s.read("center", p.center);
      s.read("sigma", p.sigma);
      s.read("weight", p.weight);
      YAML::Node angles = s.raw("angles");
      if (angles && !angles.IsNull()) {
        if (!angles.IsSequence()) reject(path + ".angles", "expected a list");
        p.angles.emplace();
        for (std::size_t a = 0; a < angles.size(); ++a) {
          Section as(angles[a], path + ".angles[" + std::to_string(a) + "]");
          std::vector<int> axes;
          double radians = 0.0;
          as.read("axes", axes);
          as.read("radians", radians);
          as.finish();
          if (axes.size() != 2) reject(as.path_of("axes"), "expected two 1-based axis indices");
          p.angles->push_back({axes[0] - 1, axes[1] - 1, radians});
        }
      }
      Section ls = s.child("local");
      if (ls.present()) {
        LocalSettings l = c.local;
        read_local(ls, l);
        p.local = l;
      }
      s.finish();
      c.dgcs.push_back(std::move(p));
    }
  }
  root.finish();
  return c;
}

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    std::ostringstream msg;
    msg << "syntax error at line " << e.mark.line + 1 << ", column " << e.mark.column + 1 << ": " << e.msg;
    throw ConfigError("", msg.str());
  }
  ScenarioConfig c = from_yaml(root);
  validate(c);
  return c;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

// Shortest text that reads back to the same double.
std::string num(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, end);
  // Keep reals recognizable as reals ("2" -> "2.0") for readability.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void emit_seq(YAML::Emitter& out, const std::vector<double>& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (double x : v) out << num(x);
  out << YAML::EndSeq;
}

void emit_bounds(YAML::Emitter& out, const std::vector<double>& v) {
  bool uniform = !v.empty();
  for (double x : v) uniform = uniform && x == v.front();
  if (uniform)
    out << num(v.front());
  else
    emit_seq(out, v);
}

void emit_count(YAML::Emitter& out, const char* key, int initial, CountRange r) {
  out << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginMap << YAML::Key << "initial"
      << YAML::Value << initial << YAML::Key << "min" << YAML::Value << r.min << YAML::Key << "max"
      << YAML::Value << r.max << YAML::EndMap;
}

void emit_range(YAML::Emitter& out, const char* key, Range r) {
  out << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginMap << YAML::Key << "min"
      << YAML::Value << num(r.min) << YAML::Key << "max" << YAML::Value << num(r.max) << YAML::EndMap;
}

void emit_local(YAML::Emitter& out, const LocalSettings& l) {
  out << YAML::BeginMap;
  out << YAML::Key << "shift_severity" << YAML::Value << num(l.shift_severity);
  out << YAML::Key << "sigma_severity" << YAML::Value << num(l.sigma_severity);
  out << YAML::Key << "weight_severity" << YAML::Value << num(l.weight_severity);
  out << YAML::Key << "angle_severity" << YAML::Value << num(l.angle_severity);
  out << YAML::Key << "rho" << YAML::Value << num(l.rho);
  out << YAML::Key << "flip_prob" << YAML::Value << num(l.flip_prob);
  out << YAML::Key << "change_prob" << YAML::Value << num(l.change_prob);
  out << YAML::EndMap;
}

}  // namespace

std::string serialize_config(const ScenarioConfig& c) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << YAML::DoubleQuoted << c.name;
  out << YAML::Key << "seed" << YAML::Value << c.seed;
  out << YAML::Key << "ticks" << YAML::Value << c.ticks;
  emit_count(out, "dimensions", c.initial_dims, c.dims);
  emit_count(out, "components", c.initial_components, c.components);
  emit_count(out, "clusters", c.initial_clusters, c.clusters);

  out << YAML::Key << "bounds" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "lower" << YAML::Value;
  emit_bounds(out, c.lower);
  out << YAML::Key << "upper" << YAML::Value;
  emit_bounds(out, c.upper);
  out << YAML::EndMap;

  emit_range(out, "sigma", c.sigma);
  emit_range(out, "weight", c.weight);
  emit_range(out, "angle", c.angle);

  out << YAML::Key << "local" << YAML::Value;
  emit_local(out, c.local);

  const GlobalSettings& g = c.global;
  out << YAML::Key << "global" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "shift_severity" << YAML::Value << num(g.shift_severity);
  out << YAML::Key << "sigma_severity" << YAML::Value << num(g.sigma_severity);
  out << YAML::Key << "weight_severity" << YAML::Value << num(g.weight_severity);
  out << YAML::Key << "angle_severity" << YAML::Value << num(g.angle_severity);
  out << YAML::Key << "alpha" << YAML::Value << num(g.alpha);
  out << YAML::Key << "shock_prob" << YAML::Value << num(g.shock_prob);
  out << YAML::Key << "dgc_count_prob" << YAML::Value << num(g.dgc_count_prob);
  out << YAML::Key << "var_count_prob" << YAML::Value << num(g.var_count_prob);
  out << YAML::Key << "cluster_count_prob" << YAML::Value << num(g.cluster_count_prob);
  out << YAML::Key << "dgc_step" << YAML::Value << g.dgc_step;
  out << YAML::Key << "var_step" << YAML::Value << g.var_step;
  out << YAML::Key << "cluster_step" << YAML::Value << g.cluster_step;
  out << YAML::EndMap;

  out << YAML::Key << "sampling" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "capacity" << YAML::Value << static_cast<std::uint64_t>(c.capacity);
  out << YAML::Key << "sample_prob" << YAML::Value << num(c.sample_prob);
  out << YAML::Key << "refresh_percent" << YAML::Value << num(c.refresh_percent);
  out << YAML::EndMap;

  out << YAML::Key << "snapshots" << YAML::Value << YAML::Flow << YAML::BeginMap;
  out << YAML::Key << "every" << YAML::Value << c.snapshot_every;
  out << YAML::Key << "on_resample" << YAML::Value << c.snapshot_on_resample;
  out << YAML::EndMap;

  out << YAML::Key << "output" << YAML::Value << YAML::Flow << YAML::BeginMap;
  out << YAML::Key << "dir" << YAML::Value << YAML::DoubleQuoted << c.output_dir;
  out << YAML::EndMap;

  if (!c.dgcs.empty()) {
    out << YAML::Key << "dgcs" << YAML::Value << YAML::BeginSeq;
    for (const auto& p : c.dgcs) {
      out << YAML::BeginMap;
      if (p.center) {
        out << YAML::Key << "center" << YAML::Value;
        emit_seq(out, *p.center);
      }
      if (p.sigma) {
        out << YAML::Key << "sigma" << YAML::Value;
        emit_seq(out, *p.sigma);
      }
      if (p.weight) out << YAML::Key << "weight" << YAML::Value << num(*p.weight);
      if (p.angles) {
        out << YAML::Key << "angles" << YAML::Value << YAML::BeginSeq;
        for (const auto& a : *p.angles) {
          out << YAML::Flow << YAML::BeginMap << YAML::Key << "axes" << YAML::Value << YAML::Flow
              << YAML::BeginSeq << a.axis_a + 1 << a.axis_b + 1 << YAML::EndSeq << YAML::Key << "radians"
              << YAML::Value << num(a.radians) << YAML::EndMap;
        }
        out << YAML::EndSeq;
      }
      if (p.local) {
        out << YAML::Key << "local" << YAML::Value;
        emit_local(out, *p.local);
      }
      out << YAML::EndMap;
    }
    out << YAML::EndSeq;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

std::uint64_t config_hash(const ScenarioConfig& config) { return Fnv1a().add(serialize_config(config)).value(); }

// ---------------------------------------------------------------------------
// Presets

namespace {

constexpr double kPi = std::numbers::pi;

/// Fixed 2-D scenario with every dynamic disabled.
ScenarioConfig static_2d(std::string name) {
  ScenarioConfig c = default_config();
  c.name = std::move(name);
  c.ticks = 0;
  c.initial_dims = 2;
  c.dims = {2, 2};
  c.lower.assign(2, -100.0);
  c.upper.assign(2, 100.0);
  c.local.change_prob = 0.0;
  c.local.flip_prob = 0.0;
  c.global.shock_prob = 0.0;
  c.global.dgc_count_prob = 0.0;
  c.global.var_count_prob = 0.0;
  c.global.cluster_count_prob = 0.0;
  c.sample_prob = 0.0;
  return c;
}

ScenarioConfig single_dgc(std::string name, std::vector<double> center, std::vector<double> sigma, double angle) {
  ScenarioConfig c = static_2d(std::move(name));
  c.initial_components = 1;
  c.components = {1, 1};
  c.initial_clusters = 1;
  c.clusters = {1, 1};
  c.sigma = {1.0, 30.0};
  c.capacity = 300;
  PinnedDgc p;
  p.center = std::move(center);
  p.sigma = std::move(sigma);
  p.weight = 1.0;
  p.angles = std::vector<PinnedAngle>{};
  if (angle != 0.0) p.angles->push_back({0, 1, angle});
  c.dgcs.push_back(std::move(p));
  return c;
}

ScenarioConfig fig1() {
  ScenarioConfig c = static_2d("fig1");
  c.initial_components = 3;
  c.components = {1, 10};
  c.initial_clusters = 3;
  c.clusters = {1, 10};
  c.weight = {0.1, 1.0};
  c.capacity = 1000;
  const std::vector<std::pair<std::vector<double>, std::pair<double, double>>> layout = {
      {{0.0, 50.0}, {0.3, kPi / 6}},
      {{-50.0, -40.0}, {0.5, -kPi / 4}},
      {{50.0, -40.0}, {0.2, kPi / 3}},
  };
  for (const auto& [center, wa] : layout) {
    PinnedDgc p;
    p.center = center;
    p.sigma = std::vector<double>{15.0, 10.0};
    p.weight = wa.first;
    p.angles = std::vector<PinnedAngle>{{0, 1, wa.second}};
    c.dgcs.push_back(std::move(p));
  }
  return c;
}

/// Center drift only: one component, every other severity and dynamic zero.
ScenarioConfig fig3(std::string name, double rho) {
  ScenarioConfig c = single_dgc(std::move(name), {0.0, 0.0}, {5.0, 5.0}, 0.0);
  c.ticks = 1000;
  c.lower.assign(2, -1000.0);
  c.upper.assign(2, 1000.0);
  c.local = LocalSettings{1.0, 0.0, 0.0, 0.0, rho, 0.0, 1.0};
  c.sample_prob = 1.0;
  c.refresh_percent = 1.0;
  return c;
}

/// Directed random walk of one angle in [0, 100] starting at 50.
ScenarioConfig fig4(std::string name, double severity, double flip_prob) {
  ScenarioConfig c = single_dgc(std::move(name), {0.0, 0.0}, {10.0, 10.0}, 50.0);
  c.ticks = 1000;
  c.angle = {0.0, 100.0};
  c.local = LocalSettings{0.0, 0.0, 0.0, severity, 0.9, flip_prob, 1.0};
  return c;
}

ScenarioConfig kitchen_sink() {
  ScenarioConfig c = default_config();
  c.name = "kitchen-sink";
  c.ticks = 100000;
  return c;
}

struct PresetEntry {
  const char* name;
  ScenarioConfig (*make)();
};

const PresetEntry kPresets[] = {
    {"fig1", [] { return fig1(); }},
    {"fig2a", [] { return single_dgc("fig2a", {0.0, 0.0}, {20.0, 20.0}, 0.0); }},
    {"fig2b", [] { return single_dgc("fig2b", {-20.0, 50.0}, {7.0, 7.0}, 0.0); }},
    {"fig2c", [] { return single_dgc("fig2c", {0.0, 0.0}, {7.0, 20.0}, 0.0); }},
    {"fig2d", [] { return single_dgc("fig2d", {0.0, 0.0}, {7.0, 20.0}, kPi / 4); }},
    {"fig3-rho00", [] { return fig3("fig3-rho00", 0.0); }},
    {"fig3-rho05", [] { return fig3("fig3-rho05", 0.5); }},
    {"fig3-rho09", [] { return fig3("fig3-rho09", 0.9); }},
    {"fig4a", [] { return fig4("fig4a", 1.0, 0.0); }},
    {"fig4b", [] { return fig4("fig4b", 1.0, 0.1); }},
    {"fig4c", [] { return fig4("fig4c", 1.0, 0.5); }},
    {"fig4d", [] { return fig4("fig4d", 0.1, 0.5); }},
    {"kitchen-sink", [] { return kitchen_sink(); }},
};

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : kPresets) names.emplace_back(p.name);
  return names;
}

ScenarioConfig preset(std::string_view name) {
  for (const auto& p : kPresets)
    if (name == p.name) {
      ScenarioConfig c = p.make();
      validate(c);
      return c;
    }
  throw ConfigError("preset", "unknown preset '" + std::string(name) + "'");
}

}  // namespace ddg
