#pragma once

#include <string>

#include "repi/density.hpp"

namespace repi::cli {

// Entry point shared by the binary and the tests. Writes machine-readable
// reports (JSON or CSV) to stdout or to the --out file. Returns 0 on
// success, 1 when an asserted inequality verdict fails, 2 on usage errors.
int run(int argc, const char* const* argv);

// Density mini-grammar: "name[:param[,param]][@scale[,shift]]", e.g.
// "gaussian:1", "uniform:0,1", "exppower:2.5@2,0.5", "qgaussian", "triangle".
AnalyticDensity parse_density(const std::string& spec);

}  // namespace repi::cli
