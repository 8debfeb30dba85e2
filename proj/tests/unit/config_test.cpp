#include <doctest.h>

#include <numbers>
#include <string>

#include "support.hpp"

using namespace ddg;

namespace {

std::string error_field(const std::string& yaml) {
  try {
    parse_config(yaml);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<accepted>";
}

std::string error_text(const std::string& yaml) {
  try {
    parse_config(yaml);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "<accepted>";
}

}  // namespace

TEST_CASE("empty document yields the defaults") {
  const auto c = parse_config("");
  auto d = default_config();
  d.name.clear();
  CHECK(c == d);
  CHECK(c.lower.size() == static_cast<std::size_t>(c.dims.max));
  CHECK(validate(c).empty());
}

TEST_CASE("partial configs keep the remaining defaults") {
  const auto c = parse_config("ticks: 42\nsampling: {capacity: 10}\nlocal: {rho: 0.5}\n");
  const auto d = default_config();
  CHECK(c.ticks == 42);
  CHECK(c.capacity == 10);
  CHECK(c.local.rho == 0.5);
  CHECK(c.local.shift_severity == d.local.shift_severity);
  CHECK(c.global == d.global);
}

TEST_CASE("severity defaults scale with the ranges") {
  const auto c = parse_config("sigma: {min: 1, max: 11}\n");
  CHECK(c.local.sigma_severity == doctest::Approx(0.5));
  CHECK(c.global.sigma_severity == doctest::Approx(2.5));
}

TEST_CASE("every preset round-trips and builds a valid state") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const auto c = preset(name);
    CHECK(c.name == name);
    const auto text = serialize_config(c);
    const auto back = parse_config(text);
    CHECK(back == c);
    CHECK(config_hash(back) == config_hash(c));
    const auto s = make_initial_state(c, 1);
    CHECK_FALSE(find_violation(s).has_value());
  }
  CHECK_THROWS_AS(preset("nope"), ConfigError);
}

TEST_CASE("fig1 preset") {
  const auto c = preset("fig1");
  REQUIRE(c.dgcs.size() == 3);
  CHECK(c.initial_components == 3);
  CHECK(*c.dgcs[0].weight == 0.3);
  CHECK(*c.dgcs[1].weight == 0.5);
  CHECK(*c.dgcs[2].weight == 0.2);
  const auto s = make_initial_state(c, 99);
  CHECK(s.dgcs[0].center == Eigen::Vector2d(0, 50));
  CHECK(s.dgcs[1].theta(0, 1) == doctest::Approx(-std::numbers::pi / 4));
  CHECK(s.globals.shock_prob == 0.0);
}

TEST_CASE("fig3 presets differ only in the correlation") {
  const auto a = preset("fig3-rho00");
  auto b = preset("fig3-rho09");
  CHECK(a.local.rho == 0.0);
  CHECK(b.local.rho == 0.9);
  CHECK(b.local.change_prob == 1.0);
  CHECK(b.local.shift_severity == 1.0);
  b.local.rho = 0.0;
  b.name = a.name;
  CHECK(a == b);
}

TEST_CASE("pinned angles use one-based axes") {
  const auto c = parse_config(R"(
dimensions: {initial: 3}
components: {initial: 2, min: 1}
dgcs:
  - center: [1, 2, 3]
    angles:
      - {axes: [2, 3], radians: 0.5}
    local: {rho: 0.1}
)");
  REQUIRE(c.dgcs.size() == 1);
  REQUIRE(c.dgcs[0].angles->size() == 1);
  CHECK(c.dgcs[0].angles->front().axis_a == 1);
  CHECK(c.dgcs[0].angles->front().axis_b == 2);
  CHECK(c.dgcs[0].local->rho == 0.1);
  CHECK(c.dgcs[0].local->shift_severity == c.local.shift_severity);
  const auto s = make_initial_state(c, 1);
  CHECK(s.dgcs[0].theta(1, 2) == 0.5);
  CHECK(s.dgcs[0].theta(0, 1) == 0.0);
  CHECK(s.dgcs[0].local.rho == 0.1);
  CHECK(s.dgcs[1].local.rho == c.local.rho);
}

TEST_CASE("invalid fields name their path") {
  CHECK(error_field("weight: {min: 0, max: 1}") == "weight.min");
  CHECK(error_field("sigma: {min: -1, max: 1}") == "sigma.min");
  CHECK(error_field("local: {shfit_severity: 1}") == "local.shfit_severity");
  CHECK(error_field("frobnicate: 1") == "frobnicate");
  CHECK(error_field("local: {rho: 1.5}") == "local.rho");
  CHECK(error_field("global: {shock_prob: 2}") == "global.shock_prob");
  CHECK(error_field("global: {alpha: 0}") == "global.alpha");
  CHECK(error_field("sampling: {capacity: 0}") == "sampling.capacity");
  CHECK(error_field("dimensions: {initial: 9}") == "dimensions.initial");
  CHECK(error_field("bounds: {lower: [0, 0]}") == "bounds.lower");
  CHECK(error_field("ticks: many") == "ticks");
  CHECK(error_field("dgcs: [{center: [1, 2, 3]}]") == "dgcs[0].center");
  CHECK(error_field("dgcs: [{angles: [{axes: [2, 1], radians: 0.1}]}]") == "dgcs[0].angles");
  CHECK(error_field("dgcs: [{weight: 0.5, colour: red}]") == "dgcs[0].colour");
}

TEST_CASE("syntax errors carry line and column") {
  const auto msg = error_text("ticks: 5\nlocal: {rho: 0.5\n");
  CHECK(msg.find("line") != std::string::npos);
  CHECK(msg.find("column") != std::string::npos);
  CHECK(error_field("ticks: 5\nlocal: {rho: 0.5\n").empty());
}

TEST_CASE("validation warnings") {
  auto c = default_config();
  c.global.shift_severity = c.local.shift_severity / 2;
  CHECK_FALSE(validate(c).empty());
  c = default_config();
  c.refresh_percent = 0.0;
  CHECK_FALSE(validate(c).empty());
}
