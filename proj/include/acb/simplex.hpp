#ifndef ACB_SIMPLEX_HPP_
#define ACB_SIMPLEX_HPP_

#include <vector>

#include "acb/rational.hpp"

namespace acb {

struct LpSolution {
  Rat objective;
  std::vector<Rat> x;     // structural variables
  std::vector<Rat> dual;  // one multiplier per constraint row
};

// Maximize c.x subject to A x <= b, x >= 0, with b >= 0 (slack basis is
// feasible, so no phase 1 is needed). Exact rational arithmetic throughout;
// Bland's rule (lowest eligible index for entering and leaving) guarantees
// termination. Throws on an unbounded problem.
LpSolution simplex_max(const std::vector<std::vector<Rat>>& A,
                       const std::vector<Rat>& b, const std::vector<Rat>& c);

}  // namespace acb

#endif  // ACB_SIMPLEX_HPP_
