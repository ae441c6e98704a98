#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>

#include "commands.hpp"

namespace {

// Optional key=value configuration file; command-line flags win.
std::map<std::string, std::string> read_config(const std::string& path, bool& ok) {
  std::map<std::string, std::string> kv;
  ok = true;
  if (path.empty()) return kv;
  std::ifstream in(path);
  if (!in) {
    ok = false;
    return kv;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fow: boundary-condition workbench for Friedrichs-type operators"};
  app.require_subcommand(1);

  fow::CommonOpts opts;
  int count = 1000;
  int max_dim = 8;
  std::string config_path;
  std::string plot_in, plot_out = "plot.svg";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opts.out, "Report JSON path (CSV written next to it)");
    cmd->add_option("--seed", opts.seed, "Deterministic seed");
    cmd->add_option("--jobs", opts.jobs, "Worker thread count")->check(CLI::PositiveNumber);
    cmd->add_option("--grid", opts.grid, "Comma-separated sweep grid");
    cmd->add_option("--tol", opts.tol, "Comparison tolerance");
    cmd->add_option("--config", config_path, "key=value config file; flags win");
  };

  CLI::App* sweep = app.add_subcommand("transport-sweep", "Sweep boundary parameters alpha");
  add_common(sweep);
  CLI::App* resolvent = app.add_subcommand("resolvent", "Resolvent norms and growth trend");
  add_common(resolvent);
  CLI::App* semigroup = app.add_subcommand("semigroup", "Semigroup norm laws");
  add_common(semigroup);
  CLI::App* fuzz = app.add_subcommand("model-fuzz", "Randomized boundary-model property suite");
  add_common(fuzz);
  fuzz->add_option("--count", count, "Number of random instances")->check(CLI::PositiveNumber);
  fuzz->add_option("--max-dim", max_dim, "Max kernel block dimension")
      ->check(CLI::PositiveNumber);
  CLI::App* elliptic = app.add_subcommand("elliptic", "Elliptic example coherence checks");
  add_common(elliptic);
  CLI::App* plot = app.add_subcommand("plot", "Render report series to SVG");
  plot->add_option("report", plot_in, "Input report JSON")->required();
  plot->add_option("svg", plot_out, "Output SVG path");
  CLI::App* all = app.add_subcommand("all", "Run every suite into one combined report");
  add_common(all);
  all->add_option("--count", count, "Number of random instances")->check(CLI::PositiveNumber);
  all->add_option("--max-dim", max_dim, "Max kernel block dimension")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are I/O-class failures
  }

  CLI::App* active = app.get_subcommands().front();
  if (active != plot && !config_path.empty()) {
    bool ok = false;
    auto kv = read_config(config_path, ok);
    if (!ok) {
      std::fprintf(stderr, "fow: cannot read config %s\n", config_path.c_str());
      return 2;
    }
    auto apply = [&](const char* key, const char* flag, auto& target) {
      auto it = kv.find(key);
      if (it == kv.end()) return;
      CLI::Option* opt = active->get_option_no_throw(flag);
      if (opt != nullptr && opt->count() > 0) return;  // flag wins
      std::istringstream in(it->second);
      in >> target;
    };
    apply("seed", "--seed", opts.seed);
    apply("jobs", "--jobs", opts.jobs);
    apply("tol", "--tol", opts.tol);
    apply("count", "--count", count);
    apply("max_dim", "--max-dim", max_dim);
    auto it = kv.find("out");
    if (it != kv.end() && active->get_option_no_throw("--out")->count() == 0) opts.out = it->second;
    it = kv.find("grid");
    if (it != kv.end() && active->get_option_no_throw("--grid")->count() == 0) {
      opts.grid = it->second;
      opts.grid_given = true;
    }
  }
  if (active->get_option_no_throw("--grid") != nullptr &&
      active->get_option_no_throw("--grid")->count() > 0)
    opts.grid_given = true;

  try {
    if (active == sweep) return fow::cmd_transport_sweep(opts);
    if (active == resolvent) return fow::cmd_resolvent(opts);
    if (active == semigroup) return fow::cmd_semigroup(opts);
    if (active == fuzz) return fow::cmd_model_fuzz(opts, count, max_dim);
    if (active == elliptic) return fow::cmd_elliptic(opts);
    if (active == plot) return fow::cmd_plot(plot_in, plot_out);
    if (active == all) return fow::cmd_all(opts, count, max_dim);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fow: %s\n", e.what());
    return 1;
  }
  return 2;
}
