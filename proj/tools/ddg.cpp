// Command-line front end: generate datasets, run the baseline harness,
// inspect event logs and export mixture densities.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ddg/ddg.hpp"

namespace fs = std::filesystem;

namespace {

struct ScenarioArgs {
  std::string config_path;
  std::string preset_name;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> ticks;
  std::string out;
  std::optional<std::int64_t> snapshot_every;
};

void add_scenario_options(CLI::App* cmd, ScenarioArgs& a, bool with_out = true) {
  auto* cfg = cmd->add_option("--config", a.config_path, "Scenario config file (YAML)")->check(CLI::ExistingFile);
  auto* pre = cmd->add_option("--preset", a.preset_name, "Bundled scenario preset");
  cfg->excludes(pre);
  cmd->add_option("--seed", a.seed, "Master seed (overrides the config)");
  cmd->add_option("--ticks", a.ticks, "Number of ticks (overrides the config)")->check(CLI::NonNegativeNumber);
  if (with_out) {
    cmd->add_option("--out", a.out, "Output directory");
    cmd->add_option("--snapshot-every", a.snapshot_every, "Write the dataset every N ticks (0: never)")
        ->check(CLI::NonNegativeNumber);
  }
}

ddg::ScenarioConfig load_scenario(ScenarioArgs& a) {
  ddg::ScenarioConfig c;
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path);
    std::stringstream text;
    text << in.rdbuf();
    c = ddg::parse_config(text.str());
  } else {
    c = ddg::preset(a.preset_name.empty() ? "kitchen-sink" : a.preset_name);
  }
  if (a.seed) c.seed = *a.seed;
  if (a.ticks) c.ticks = *a.ticks;
  if (a.snapshot_every) c.snapshot_every = *a.snapshot_every;
  if (!a.out.empty()) c.output_dir = a.out;
  if (c.output_dir.empty()) c.output_dir = "ddg-out";
  for (const auto& w : ddg::validate(c)) std::cerr << "warning: " << w << '\n';
  return c;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

void write_snapshot(const fs::path& dir, std::int64_t tick, const ddg::DatasetWindow& w) {
  auto out = open_out(dir / ("snapshot_" + std::to_string(tick) + ".csv"));
  ddg::write_dataset_csv(out, w);
}

ddg::EventLogHeader header_for(const ddg::ScenarioConfig& c) {
  ddg::EventLogHeader h;
  h.seed = c.seed;
  h.config_hash = ddg::format_digest(ddg::config_hash(c));
  h.scenario = c.name;
  return h;
}

void prepare_dir(const ddg::ScenarioConfig& c, const fs::path& dir) {
  fs::create_directories(dir);
  auto cfg = open_out(dir / "config.yaml");
  cfg << ddg::serialize_config(c);
}

int cmd_generate(ScenarioArgs& a) {
  const ddg::ScenarioConfig c = load_scenario(a);
  const fs::path dir = c.output_dir;
  prepare_dir(c, dir);
  auto log = open_out(dir / "events.jsonl");
  ddg::write_event_log_header(log, header_for(c));

  std::size_t events = 0;
  std::size_t snapshots = 0;
  const auto result = ddg::run(
      c, c.seed, c.ticks, {c.snapshot_every, c.snapshot_on_resample},
      [&](std::int64_t tick, const ddg::DatasetWindow& w) {
        write_snapshot(dir, tick, w);
        ++snapshots;
      },
      [&](const ddg::ChangeEvent& e) {
        ddg::write_event(log, e);
        ++events;
      });
  auto final_csv = open_out(dir / "final.csv");
  ddg::write_dataset_csv(final_csv, result.final_window);

  std::cout << "scenario " << c.name << ", seed " << c.seed << ", " << c.ticks << " ticks\n"
            << events << " events, " << snapshots << " snapshots written to " << dir.string() << '\n'
            << "final state: d=" << result.final_state.d() << " m=" << result.final_state.m()
            << " kappa=" << result.final_state.kappa << '\n';
  return 0;
}

int cmd_run(ScenarioArgs& a, const std::string& algorithm, std::int64_t budget, double threshold) {
  if (algorithm != "baseline") throw ddg::ConfigError("--algorithm", "only 'baseline' is available");
  ddg::ScenarioConfig c = load_scenario(a);
  const fs::path dir = c.output_dir;
  prepare_dir(c, dir);
  auto log = open_out(dir / "events.jsonl");
  ddg::write_event_log_header(log, header_for(c));

  ddg::Engine engine(c, c.seed, budget);
  ddg::RandomStream stream(ddg::derive_seed(c.seed, "optimizer"));
  ddg::RunReport report;
  report.seed = c.seed;

  if (c.snapshot_every > 0) write_snapshot(dir, 0, engine.window());
  ddg::BaselineOptions options;
  options.root_threshold = threshold;
  const auto records = ddg::baseline_optimize(engine, budget, stream, options, [&](const ddg::ChangeEvent& e) {
    ddg::write_event(log, e);
    ++report.event_counts[std::string(ddg::event_kind_name(e.kind))];
  });

  report.evaluations = static_cast<std::int64_t>(records.size());
  report.offline_performance = ddg::offline_performance(records);
  report.root_threshold = threshold;
  report.root_survival = ddg::root_survival(records, threshold);
  report.final_best = records.back().best;

  auto rep = open_out(dir / "report.json");
  ddg::write_report(rep, report);
  auto best = open_out(dir / "best.csv");
  ddg::write_records_csv(best, records);
  ddg::write_report(std::cout, report);
  return 0;
}

int cmd_inspect(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  const auto s = ddg::summarize_event_log(in);
  std::cout << "schema " << s.header.schema << ", prng " << s.header.prng << ", seed " << s.header.seed
            << ", config " << s.header.config_hash;
  if (!s.header.scenario.empty()) std::cout << " (" << s.header.scenario << ")";
  std::cout << '\n' << s.total << " events";
  if (s.total > 0) std::cout << " over ticks " << s.first_tick << ".." << s.last_tick;
  std::cout << '\n';
  for (const auto& [kind, n] : s.counts) std::cout << "  " << kind << ": " << n << '\n';
  return 0;
}

int cmd_export_density(ScenarioArgs& a, int resolution, const std::string& out_path) {
  const ddg::ScenarioConfig c = load_scenario(a);
  ddg::Engine engine(c, c.seed, c.ticks);
  while (!engine.finished()) engine.advance();
  const auto grid = ddg::emit_density_grid(engine.state(), resolution);
  if (out_path.empty() || out_path == "-") {
    ddg::write_density_csv(std::cout, grid);
  } else {
    auto out = open_out(out_path);
    ddg::write_density_csv(out, grid);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic Gaussian-mixture dataset generator and clustering benchmark harness"};
  app.require_subcommand(1);

  ScenarioArgs gen_args;
  auto* gen = app.add_subcommand("generate", "Run the generator and write datasets and the event log");
  add_scenario_options(gen, gen_args);

  ScenarioArgs run_args;
  std::string algorithm = "baseline";
  std::int64_t budget = 10000;
  double threshold = 0.0;
  auto* run = app.add_subcommand("run", "Run the generator driven by an optimizer, one tick per evaluation");
  add_scenario_options(run, run_args);
  run->add_option("--algorithm", algorithm, "Optimizer to run")->check(CLI::IsMember({"baseline"}));
  run->add_option("--budget", budget, "Objective evaluations (= ticks)")->check(CLI::PositiveNumber);
  run->add_option("--root-threshold", threshold, "Acceptable objective value for robustness over time")
      ->required();

  std::string log_path;
  auto* inspect = app.add_subcommand("inspect", "Summarize an event log");
  inspect->add_option("log", log_path, "events.jsonl file")->required()->check(CLI::ExistingFile);

  ScenarioArgs dens_args;
  int resolution = 200;
  std::string dens_out;
  auto* dens = app.add_subcommand("export-density", "Write the mixture density on a 2-D grid as CSV");
  add_scenario_options(dens, dens_args, false);
  dens->add_option("--resolution", resolution, "Grid cells per axis")->check(CLI::PositiveNumber);
  dens->add_option("--out", dens_out, "CSV file (default: stdout)");

  ScenarioArgs cfg_args;
  auto* show = app.add_subcommand("config", "Print the normalized config of a preset or file");
  add_scenario_options(show, cfg_args);

  app.add_subcommand("presets", "List bundled presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(gen_args);
    if (run->parsed()) return cmd_run(run_args, algorithm, budget, threshold);
    if (inspect->parsed()) return cmd_inspect(log_path);
    if (dens->parsed()) return cmd_export_density(dens_args, resolution, dens_out);
    if (show->parsed()) {
      std::cout << ddg::serialize_config(load_scenario(cfg_args));
      return 0;
    }
    for (const auto& name : ddg::preset_names()) std::cout << name << '\n';
    return 0;
  } catch (const ddg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
