#pragma once

#include <map>
#include <optional>
#include <string>

namespace bspec {

inline constexpr double kDefaultTolerance = 1e-9;

/// One evaluated inequality instance lhs <= rhs.
///
/// `pass` is always lhs <= rhs * (1 + tol). Reports that only carry a measured
/// quantity (no universal constant is claimed) have `asserted == false`; a
/// failing pass flag on such a report is not a defect.
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = true;
  double tol = kDefaultTolerance;
  std::optional<std::string> witness;
  std::map<std::string, double> params;
  bool asserted = true;

  bool failed() const { return asserted && !pass; }
};

/// Fills ratio and pass from lhs, rhs and tol.
InequalityReport make_report(std::string name, double lhs, double rhs,
                             double tol = kDefaultTolerance);

/// lhs / rhs, with 0/0 = 0 and x/0 = +inf for x > 0.
double safe_ratio(double lhs, double rhs);

}  // namespace bspec
