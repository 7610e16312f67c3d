// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// The acceptance suite: eleven end-to-end criteria exercising the whole
// library, each with pinned tolerances and (where stated) runtime budgets.
// Used by the `charvar selftest` subcommand and the acceptance test binary.

#pragma once

#include <string>
#include <vector>

#include "charvar/curves.hpp"  // kDefaultSeed

namespace charvar {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;  ///< metrics on pass, first few failure messages on fail
  double seconds = 0.0;
};

struct SelfTestOptions {
  /// Deliberately corrupt one Dixon series coefficient inside criterion 5;
  /// the criterion must then fail.  Exists to prove the suite can fail.
  bool inject_dixon_fault = false;
  unsigned long long seed = kDefaultSeed;
  /// Run only these criterion indices (1-based); empty means all.
  std::vector<int> only;
};

/// Run the acceptance criteria in order and report one result per criterion.
/// Exceptions inside a criterion are caught and reported as failures; this
/// function itself does not throw on criterion failure.
std::vector<CriterionResult> run_acceptance_suite(const SelfTestOptions& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace charvar
