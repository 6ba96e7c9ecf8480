#pragma once

#include "lpc/params.hpp"

#include <string>
#include <vector>

// Independent reconstructions of closed-form constants, used by tests and by
// the `oracle constants` command.
namespace lpc::oracle {

/// Numerical minimum of a s^{-alpha} + b s^{beta} (Brent search in log s).
double numeric_smin(double a, double b, double alpha, double beta);

/// A (lambda > 1) or B (lambda < 1) rebuilt from the profile integral and a
/// numerical minimization over s.
double layer_constant_numeric(const ParamSet& ps);

/// c1 through its Beta-function closed form.
double c1_closed_form(const ParamSet& ps);

struct Row {
    std::string name;
    ParamSet params;
    double value;
    double oracle;
    double rel_error;
};

std::vector<Row> constant_oracles();

}  // namespace lpc::oracle
