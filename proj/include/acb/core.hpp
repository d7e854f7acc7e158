#ifndef ACB_CORE_HPP_
#define ACB_CORE_HPP_

#include <vector>

#include "acb/rational.hpp"

namespace acb {

// ACB(X_A, X_B, n): two players allocate budgets X_A and X_B across n
// battlefields in nondecreasing order. Each battlefield pays 1/n to the
// higher allocation and 1/2n to each player on a tie.
struct GameSpec {
  Rat budget_a;
  Rat budget_b;
  int battlefields;

  GameSpec(Rat a, Rat b, int n);
};

// True iff `levels` is a feasible pure allocation: nonnegative,
// nondecreasing, and summing exactly to `budget`.
bool feasible(const std::vector<Rat>& levels, const Rat& budget, int n);

// A feasible pure allocation for one player. Validates at construction.
class Allocation {
 public:
  Allocation(std::vector<Rat> levels, Rat owner_budget);

  const std::vector<Rat>& levels() const { return levels_; }
  const Rat& owner_budget() const { return owner_budget_; }
  int size() const { return static_cast<int>(levels_.size()); }
  const Rat& operator[](int j) const { return levels_[j]; }

  bool operator==(const Allocation& other) const;

 private:
  std::vector<Rat> levels_;
  Rat owner_budget_;
};

struct WeightedAllocation {
  Allocation alloc;
  Rat prob;
};

// Finitely many allocation atoms with positive rational probabilities
// summing to 1. Atoms are canonicalized: duplicates merged, sorted
// lexicographically, so equal strategies compare equal.
class FiniteMixedStrategy {
 public:
  explicit FiniteMixedStrategy(std::vector<WeightedAllocation> atoms);
  static FiniteMixedStrategy pure(Allocation a);

  const std::vector<WeightedAllocation>& atoms() const { return atoms_; }
  const Rat& budget() const;
  int battlefields() const;

  bool operator==(const FiniteMixedStrategy& other) const;

 private:
  std::vector<WeightedAllocation> atoms_;
};

// The per-battlefield scoring rule: 0 if diff < 0, 1/2 if diff == 0, 1 if
// diff > 0. The tie rule applies at zero force as well.
Rat step_payoff(const Rat& diff);

// Payoff for the owner of `a` against `b`: (1/n) * sum_j s(a_j - b_j).
Rat payoff_pure(const Allocation& a, const Allocation& b,
                const GameSpec& spec);

// Bilinear extension over atom pairs. Constant-sum: the two players'
// payoffs always add to exactly 1.
Rat payoff_mixed(const FiniteMixedStrategy& pa, const FiniteMixedStrategy& pb,
                 const GameSpec& spec);

}  // namespace acb

#endif  // ACB_CORE_HPP_
