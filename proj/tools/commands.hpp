#pragma once

#include <cstdint>
#include <string>

namespace fow {

struct CommonOpts {
  std::string out = "report.json";
  std::uint64_t seed = 42;
  int jobs = 1;
  std::string grid;     // subcommand-specific grid literal, comma-separated
  double tol = 1e-8;
  bool grid_given = false;
};

int cmd_transport_sweep(const CommonOpts& opts);
int cmd_resolvent(const CommonOpts& opts);
int cmd_semigroup(const CommonOpts& opts);
int cmd_model_fuzz(const CommonOpts& opts, int count, int max_dim);
int cmd_elliptic(const CommonOpts& opts);
int cmd_plot(const std::string& report_in, const std::string& svg_out);
int cmd_all(const CommonOpts& opts, int count, int max_dim);

}  // namespace fow
