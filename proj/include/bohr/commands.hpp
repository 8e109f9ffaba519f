#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bohr/output.hpp"

namespace bohr {

// Options mirror the CLI flags one to one; string-typed fields are validated
// here so that every usage error surfaces as std::invalid_argument (exit 2).

struct TablesOptions {
  std::vector<std::string> families;  // empty = all five
  std::string m_range = "1..5";
  double k = 1.0;
};

struct VerifyOptions {
  std::string family = "phi";  // radius family or "rogosinski"
  int m = 1;
  double k = 1.0;
  int trials = 500;
  double r_fraction = 0.999;
  std::uint64_t seed = 42;
  std::string kind = "mobius";
  int coeff_order = 256;
  int n_max = 10;  // rogosinski sweep only
};

struct EvaluateOptions {
  std::string functional = "A";  // A|B|C|D|E|rogosinski
  std::optional<double> mobius_a;
  int mobius_sign = 1;
  std::optional<std::string> coeff_file;
  std::optional<std::string> tail;  // "scale,ratio" envelope for coefficient files
  int m = 1;
  double r = 0.0;
  std::string z = "0";  // evaluation point for rogosinski: "re" or "re,im"
  int n = 0;
  double k = 1.0;
  std::optional<double> lambda;
  int order = 256;
};

struct SharpnessOptions {
  std::string family = "phi";
  int m = 1;
  double k = 1.0;
  std::optional<double> lambda;
  double r_multiplier = 1.05;
  std::vector<double> a_ladder;  // empty = {0.9, 0.99, 0.999, 0.9999}
};

// Each command fills `record` and returns the process exit code:
// 0 success / inequality confirmed, 1 violation found, 3 inconclusive
// sharpness. Usage errors throw std::invalid_argument (mapped to exit 2).
int cmd_tables(const TablesOptions& opt, OutputRecord& record);
int cmd_verify(const VerifyOptions& opt, OutputRecord& record);
int cmd_evaluate(const EvaluateOptions& opt, OutputRecord& record);
int cmd_sharpness(const SharpnessOptions& opt, OutputRecord& record);

}  // namespace bohr
