/**
 * @file validation.hpp
 * @brief The numbered acceptance checks, shared by the acceptance executable and `crackwave validate`.
 *
 * Each criterion yields one or more rows; a criterion passes when all its rows pass.
 */
#pragma once

#include <string>
#include <vector>

namespace crackwave {

struct CheckRow {
  std::string id;
  double target = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<CheckRow> rows;
  double seconds = 0.0;
  bool pass() const;
};

/// Numbers of all criteria, in order.
std::vector<int> criterion_numbers();
std::string criterion_title(int number);

/// Runs one criterion; `jobs` workers for the parameter grids. Exceptions inside a check
/// become failed rows, never propagate.
CriterionResult run_criterion(int number, int jobs = 1);

}  // namespace crackwave
