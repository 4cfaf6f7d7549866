#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dpm/exactpoly.hpp"

namespace dpm::cli {

struct RunConfig {
  std::string command;
  int d = 3;
  Rational eps{1, 100};
  int order = 12;
  double tol = 1e-6;
  std::string out;            // empty: stdout
  std::string format = "json";
  std::string word;
  std::string variant = "exact";
  int threads = 0;            // DPM_THREADS when unset
};

enum Exit { kPass = 0, kError = 1, kFail = 2 };

// full argv including the program name; parse errors and --help are reported on err/out
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace dpm::cli
