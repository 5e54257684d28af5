#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rauzy::cli {

constexpr int kMaxLevel = 14;

enum Exit : int { kPass = 0, kUsage = 1, kChecksFailed = 2 };

struct RunConfig {
  std::string command;
  std::string sub_path;
  std::string type = "2^3";
  std::string faces;  // seed chain, e.g. "2^3+2^4+3^4"
  std::string mode = "polygon";
  int level = 6;
  int exponent = 5;
  int iters = 2;
  int dim = 0;  // 0: n − d + 1
  double radius = 0;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  std::size_t count = 10000;
  double x = 0, y = 0;
  std::string svg;
  std::string report;
};

// Parses argv (program name first) and runs the command; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int execute(const RunConfig& cfg, std::ostream& out);

}  // namespace rauzy::cli
