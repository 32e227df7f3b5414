#include "repi/report.hpp"

#include <cstdio>

namespace repi {

InequalityReport InequalityReport::make(
    double lhs, double rhs, double tol,
    std::map<std::string, std::string> context) {
  InequalityReport rep;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.slack = lhs - rhs;
  rep.tol = tol;
  rep.holds = rep.slack >= -tol;
  rep.context = std::move(context);
  return rep;
}

std::string format_double(double v, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
  return buf;
}

}  // namespace repi
