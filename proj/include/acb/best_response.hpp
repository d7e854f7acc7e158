#ifndef ACB_BEST_RESPONSE_HPP_
#define ACB_BEST_RESPONSE_HPP_

#include <utility>
#include <vector>

#include "acb/core.hpp"

namespace acb {

// Relation of a responder coordinate to a critical level of the opponent.
// `Below` is part of the wire format but never produced: 0 is always a
// critical level and coordinates are nonnegative.
enum class Relation { Below, Tie, Beat };

const char* relation_name(Relation r);

struct BattlefieldRelation {
  Rat level;
  Relation relation;
};

struct BestResponseResult {
  Rat sup_payoff;
  Allocation witness;
  bool attained;
  std::vector<BattlefieldRelation> profile;
};

// Per battlefield, the sorted deduplicated set {0} union {atom levels}.
std::vector<std::vector<Rat>> critical_levels(const FiniteMixedStrategy& q);

// Exact supremum of the responder's payoff over all feasible pure
// allocations with the given budget against the finite-support opponent q.
//
// The payoff depends only on each coordinate's relation (tie/beat) to the
// critical levels, so the feasible set splits into finitely many cells
// (products of singletons and open intervals intersected with the
// nondecreasing budget simplex); the payoff is constant per cell and the
// supremum is the max over nonempty cells, always attained at an exact
// rational witness. Cells are enumerated in the order
// (c, tie) < (c, beat) < (c', .) for c < c', and the lexicographically
// smallest maximizing profile is returned. Open endpoints are handled with
// a symbolic infinitesimal, never a numeric tolerance.
BestResponseResult best_response(const FiniteMixedStrategy& q,
                                 const Rat& budget, const GameSpec& spec);

// (sup_A - payoff_A, sup_B - payoff_B) for the candidate pair. (0, 0)
// certifies a Nash equilibrium among all mixed strategies: no mixed
// deviation can beat the best pure deviation.
std::pair<Rat, Rat> exploitability(const FiniteMixedStrategy& pa,
                                   const FiniteMixedStrategy& pb,
                                   const GameSpec& spec);

}  // namespace acb

#endif  // ACB_BEST_RESPONSE_HPP_
