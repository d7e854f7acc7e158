#ifndef ACB_CLOSED_FORM_HPP_
#define ACB_CLOSED_FORM_HPP_

#include <optional>
#include <string>

#include "acb/core.hpp"

namespace acb {

// Convention throughout: X_A = 1 >= X_B = t, 0 <= t <= 1. W_n(t) is the
// equilibrium payoff for the stronger player A.
enum class ValueKind { Known, UpperBound, LowerBound, Unknown };

struct ValueAnswer {
  ValueKind kind = ValueKind::Unknown;
  Rat value;  // meaningful unless kind == Unknown
};

const char* value_kind_name(ValueKind kind);

// W_2(t): (k+2)/(2k+2) on [2k/(2k+1), (2k+2)/(2k+3)) with k = floor(t/(2-2t));
// 1/2 at t = 1. A nonincreasing step function with jumps at t = 2k/(2k+1).
Rat w2_value(const Rat& t);

// The family index k = floor(t / (2 - 2t)) for t < 1.
long long w2_family_index(const Rat& t);

struct EquilibriumConstruction {
  Rat t;
  long long k = 0;  // n=2 family index; 0 where not applicable
  Rat epsilon;      // 0 where the construction has no epsilon
  FiniteMixedStrategy pa;
  FiniteMixedStrategy pb;
};

// The two-battlefield equilibrium pair at t:
//   t < 2/3 : pa = (1/3, 2/3), pb = (t/2, t/2)
//   t = 1   : both (1/2, 1/2)
//   else    : k+1 atoms each, pa_j = (eps + j(1-t), 1 - eps - j(1-t)),
//             pb_j = (j(1-t), t - j(1-t)), eps the midpoint of the open
//             interval ((2k+1)t/2 - k, min(1-t, tk - k + 1/2)).
EquilibriumConstruction w2_equilibrium(const Rat& t);

// W_3(t) where it is pinned down:
//   Known(1)    t < 6/11          Known(8/9)  6/11 <= t < 18/31
//   Known(5/6)  3/5 < t < 30/47   UpperBound(4/5) at t = 2/3
//   LowerBound(2/3) at t = 5/6    Known(1/2)  t = 1
//   Unknown elsewhere (including the whole gap [18/31, 3/5]).
ValueAnswer w3_value(const Rat& t);

// At t = 1 the equilibrium has continuous support; the construction is
// described by a handle into the triangle-boundary family instead.
struct TriangleStrategyHandle {
  int depth = 0;
};

struct W3Equilibrium {
  std::optional<EquilibriumConstruction> finite;
  std::optional<TriangleStrategyHandle> triangle;
};

// The three-battlefield construction where one exists, otherwise nullopt.
// Epsilon for the 6/11 <= t < 18/31 family is (1 - 31t/18)/4, the midpoint
// of its open interval (0, (1 - 31t/18)/2).
std::optional<W3Equilibrium> w3_equilibrium(const Rat& t);

// The two-atom family around the 5/6-value construction: pa must have
// exactly two atoms with probability 1/2 each and budget 1; true iff some
// assignment of the atoms to roles (a,b,c), (d,e,f) satisfies
//   a > t/3, b > t/2, f > t, 2d + c >= t, d + 2e >= t.
bool check_w3_family(const FiniteMixedStrategy& pa, const Rat& t);

// Fixed strategies behind the computer-verified bounds:
//   "5.4-B": the five-atom budget-2/3 strategy holding A to at most 4/5
//   "5.5-A": the pure (1/6, 1/3, 1/2) guaranteeing A at least 2/3 at t = 5/6
FiniteMixedStrategy fixed_strategy(const std::string& id);

}  // namespace acb

#endif  // ACB_CLOSED_FORM_HPP_
