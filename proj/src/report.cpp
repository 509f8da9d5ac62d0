#include "bspec/report.hpp"

#include <limits>

namespace bspec {

double safe_ratio(double lhs, double rhs) {
  if (rhs == 0.0) return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return lhs / rhs;
}

InequalityReport make_report(std::string name, double lhs, double rhs, double tol) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.ratio = safe_ratio(lhs, rhs);
  r.pass = lhs <= rhs * (1.0 + tol);
  return r;
}

}  // namespace bspec
