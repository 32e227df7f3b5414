#pragma once

#include <map>
#include <string>

namespace repi {

// Structured outcome of a single inequality check. The orientation is
// always "lhs >= rhs": holds <=> slack >= -tol with slack = lhs - rhs.
// Checks that are naturally stated the other way round fill the fields in
// this orientation and say so in the context map.
struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tol = 0.0;
  bool holds = false;
  std::map<std::string, std::string> context;

  static InequalityReport make(double lhs, double rhs, double tol,
                               std::map<std::string, std::string> context = {});
};

// Shortest representation helpers used when filling context maps and CSVs.
std::string format_double(double v, int significant_digits = 12);

}  // namespace repi
