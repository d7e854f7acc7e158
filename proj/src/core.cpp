#include "acb/core.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace acb {

GameSpec::GameSpec(Rat a, Rat b, int n)
    : budget_a(std::move(a)), budget_b(std::move(b)), battlefields(n) {
  if (n < 1) throw InputError("battlefields must be >= 1");
  if (budget_a < 0 || budget_b < 0) throw InputError("budgets must be >= 0");
}

bool feasible(const std::vector<Rat>& levels, const Rat& budget, int n) {
  if (static_cast<int>(levels.size()) != n) {
    throw InputError("allocation has wrong number of battlefields");
  }
  if (budget < 0) throw InputError("budget must be >= 0");
  Rat sum = 0;
  Rat prev = 0;
  for (const Rat& x : levels) {
    if (x < prev) return false;
    prev = x;
    sum += x;
  }
  return !levels.empty() && levels.front() >= 0 && sum == budget;
}

Allocation::Allocation(std::vector<Rat> levels, Rat owner_budget)
    : levels_(std::move(levels)), owner_budget_(std::move(owner_budget)) {
  if (!feasible(levels_, owner_budget_, static_cast<int>(levels_.size()))) {
    throw InputError("infeasible allocation");
  }
}

bool Allocation::operator==(const Allocation& other) const {
  return owner_budget_ == other.owner_budget_ && levels_ == other.levels_;
}

namespace {

bool levels_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

FiniteMixedStrategy::FiniteMixedStrategy(std::vector<WeightedAllocation> atoms) {
  if (atoms.empty()) throw InputError("mixed strategy needs at least one atom");
  const Rat budget = atoms.front().alloc.owner_budget();
  const int n = atoms.front().alloc.size();
  std::map<std::vector<Rat>, Rat, decltype(&levels_less)> merged(&levels_less);
  Rat total = 0;
  for (const auto& [alloc, prob] : atoms) {
    if (alloc.owner_budget() != budget) {
      throw InputError("atoms must share one owner budget");
    }
    if (alloc.size() != n) throw InputError("atoms must share one length");
    if (prob <= 0) throw InputError("atom probabilities must be > 0");
    merged[alloc.levels()] += prob;
    total += prob;
  }
  if (total != 1) throw InputError("atom probabilities must sum to 1");
  for (auto& [levels, prob] : merged) {
    atoms_.push_back({Allocation(levels, budget), prob});
  }
}

FiniteMixedStrategy FiniteMixedStrategy::pure(Allocation a) {
  std::vector<WeightedAllocation> atoms;
  atoms.push_back({std::move(a), Rat(1)});
  return FiniteMixedStrategy(std::move(atoms));
}

const Rat& FiniteMixedStrategy::budget() const {
  return atoms_.front().alloc.owner_budget();
}

int FiniteMixedStrategy::battlefields() const {
  return atoms_.front().alloc.size();
}

bool FiniteMixedStrategy::operator==(const FiniteMixedStrategy& other) const {
  if (atoms_.size() != other.atoms_.size()) return false;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!(atoms_[i].alloc == other.atoms_[i].alloc) ||
        atoms_[i].prob != other.atoms_[i].prob) {
      return false;
    }
  }
  return true;
}

Rat step_payoff(const Rat& diff) {
  if (diff > 0) return Rat(1);
  if (diff == 0) return Rat(1, 2);
  return Rat(0);
}

Rat payoff_pure(const Allocation& a, const Allocation& b,
                const GameSpec& spec) {
  const int n = spec.battlefields;
  if (a.size() != n || b.size() != n) {
    throw InputError("allocation length does not match the game");
  }
  if (a.owner_budget() != spec.budget_a || b.owner_budget() != spec.budget_b) {
    throw InputError("allocation budget does not match the game");
  }
  Rat total = 0;
  for (int j = 0; j < n; ++j) total += step_payoff(a[j] - b[j]);
  return total / n;
}

Rat payoff_mixed(const FiniteMixedStrategy& pa, const FiniteMixedStrategy& pb,
                 const GameSpec& spec) {
  Rat total = 0;
  for (const auto& [alloc_a, prob_a] : pa.atoms()) {
    for (const auto& [alloc_b, prob_b] : pb.atoms()) {
      total += prob_a * prob_b * payoff_pure(alloc_a, alloc_b, spec);
    }
  }
  return total;
}

}  // namespace acb
