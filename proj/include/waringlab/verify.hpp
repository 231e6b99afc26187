#pragma once

#include <string>
#include <vector>

#include "waringlab/parallel.hpp"

namespace waringlab {

struct VerifyOptions {
  int workers = 1;
  bool inject_k1_sign_error = false;  // mutation canary for the decomposition check
};

struct CheckRecord {
  std::string name;
  bool pass = false;
  double measured = 0;   // worst observed deviation (or the quantity itself)
  double tolerance = 0;  // threshold it is compared against
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckRecord> checks;
  bool all_pass() const;
  std::string to_json() const;  // no timings; byte-stable for a fixed build
  std::string to_csv() const;   // header: name,pass,measured,tolerance,detail
};

VerifyReport run_verify(const VerifyOptions& opts = {});

}  // namespace waringlab
