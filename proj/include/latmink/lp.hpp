#pragma once

#include "latmink/lattice.hpp"

#include <vector>

namespace latmink {

/// minimize c.x  subject to  A x = b,  x >= 0.
struct LinearProgram {
  RationalMatrix a;
  RationalVector b;
  RationalVector c;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  RationalVector x;  // primal solution when optimal
  Rational objective;
};

/// Two-phase dense tableau simplex over the rationals with Bland's rule,
/// so it terminates on degenerate problems.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace latmink
