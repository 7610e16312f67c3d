// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance test runner: executes the eleven acceptance criteria and prints
// one pass/fail line per criterion.  With --fault dixon it instead verifies
// that the deliberately injected series fault makes criterion 5 fail, to
// prove the suite is capable of failing.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "charvar/selftest.hpp"

namespace {

void print_result(const charvar::CriterionResult& r) {
  std::printf("[%s] criterion %d: %s (%.1fs) -- %s\n", r.passed ? "PASS" : "FAIL", r.index,
              r.name.c_str(), r.seconds, r.detail.c_str());
  std::fflush(stdout);
}

std::vector<int> parse_only(const std::string& csv) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    const std::size_t next = csv.find(',', pos);
    const std::string tok = csv.substr(pos, next == std::string::npos ? next : next - pos);
    out.push_back(std::stoi(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  charvar::SelfTestOptions options;
  bool fault_mode = false;

  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--fault" && i + 1 < argc) {
      const std::string kind = argv[++i];
      if (kind != "dixon") {
        std::fprintf(stderr, "unknown fault kind '%s' (supported: dixon)\n", kind.c_str());
        return 2;
      }
      fault_mode = true;
    } else if (arg == "--seed" && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 0);
    } else if (arg == "--only" && i + 1 < argc) {
      options.only = parse_only(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--fault dixon] [--seed N] [--only i,j,...]\n", argv[0]);
      return 2;
    }
  }

  if (fault_mode) {
    // Negative control: corrupt one series coefficient and demand that
    // criterion 5 notices.  Exit 0 exactly when the fault is detected.
    options.inject_dixon_fault = true;
    if (options.only.empty()) options.only = {5};
    const auto results = charvar::run_acceptance_suite(options);
    bool criterion5_failed = false;
    for (const auto& r : results) {
      print_result(r);
      if (r.index == 5 && !r.passed) criterion5_failed = true;
    }
    if (criterion5_failed) {
      std::printf("fault injection detected by criterion 5: the suite can fail\n");
      return 0;
    }
    std::printf("fault injection was NOT detected; the suite is not trustworthy\n");
    return 1;
  }

  const auto results = charvar::run_acceptance_suite(options);
  for (const auto& r : results) print_result(r);
  const bool ok = charvar::all_passed(results);
  std::printf("%zu criteria run, %s\n", results.size(), ok ? "all passed" : "FAILURES present");
  return ok ? 0 : 1;
}
