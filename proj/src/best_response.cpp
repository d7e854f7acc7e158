#include "acb/best_response.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>

namespace acb {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Below:
      return "below";
    case Relation::Tie:
      return "tie";
    case Relation::Beat:
      return "beat";
  }
  return "tie";
}

std::vector<std::vector<Rat>> critical_levels(const FiniteMixedStrategy& q) {
  const int n = q.battlefields();
  std::vector<std::vector<Rat>> out(n);
  for (int j = 0; j < n; ++j) {
    std::set<Rat> levels{Rat(0)};
    for (const auto& atom : q.atoms()) levels.insert(atom.alloc[j]);
    out[j].assign(levels.begin(), levels.end());
  }
  return out;
}

namespace {

// a + b*eps with eps an infinitesimal; lexicographic order. Closed under
// +, -, min, max, so chain tightening and the greedy witness stay in this
// form, and an exact-sum solution over Q(eps) exists iff a rational
// solution of the original strict-inequality system exists.
struct EpsRat {
  Rat a;
  long long b = 0;

  bool operator==(const EpsRat& o) const { return a == o.a && b == o.b; }
  bool operator<(const EpsRat& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
  bool operator<=(const EpsRat& o) const { return *this < o || *this == o; }
  EpsRat operator+(const EpsRat& o) const { return {a + o.a, b + o.b}; }
  EpsRat operator-(const EpsRat& o) const { return {a - o.a, b - o.b}; }
};

EpsRat eps_min(const EpsRat& x, const EpsRat& y) { return x < y ? x : y; }
EpsRat eps_max(const EpsRat& x, const EpsRat& y) { return x < y ? y : x; }

struct Cell {
  EpsRat lo;
  EpsRat hi;
  Rat weight;  // responder win probability on this battlefield
  Rat level;
  Relation relation;
};

// Chain-tightened bounds for the cells chosen per battlefield; feasibility
// of {x in cells, x nondecreasing, sum x = X} over Q(eps).
struct Tightened {
  std::vector<EpsRat> lo;
  std::vector<EpsRat> hi;
  bool feasible = false;
};

Tightened tighten(const std::vector<const Cell*>& cells, const Rat& budget) {
  const int n = static_cast<int>(cells.size());
  Tightened t;
  t.lo.resize(n);
  t.hi.resize(n);
  EpsRat run = cells[0]->lo;
  for (int j = 0; j < n; ++j) {
    run = eps_max(run, cells[j]->lo);
    t.lo[j] = run;
  }
  run = cells[n - 1]->hi;
  for (int j = n - 1; j >= 0; --j) {
    run = eps_min(run, cells[j]->hi);
    t.hi[j] = run;
  }
  EpsRat sum_lo{Rat(0), 0}, sum_hi{Rat(0), 0};
  for (int j = 0; j < n; ++j) {
    if (t.hi[j] < t.lo[j]) return t;
    sum_lo = sum_lo + t.lo[j];
    sum_hi = sum_hi + t.hi[j];
  }
  const EpsRat target{budget, 0};
  t.feasible = sum_lo <= target && target <= sum_hi;
  return t;
}

// Greedy exact-sum point: start at the minimal chain point, distribute the
// remaining mass right to left up to the tightened upper bounds.
std::vector<EpsRat> chain_witness(const Tightened& t, const Rat& budget) {
  const int n = static_cast<int>(t.lo.size());
  std::vector<EpsRat> x = t.lo;
  EpsRat remaining{budget, 0};
  for (const EpsRat& v : x) remaining = remaining - v;
  for (int j = n - 1; j >= 0 && !(remaining == EpsRat{Rat(0), 0}); --j) {
    const EpsRat raise = eps_min(remaining, t.hi[j] - x[j]);
    if (EpsRat{Rat(0), 0} < raise) {
      x[j] = x[j] + raise;
      remaining = remaining - raise;
    }
  }
  assert(remaining == (EpsRat{Rat(0), 0}));
  return x;
}

// Substitute eps with a concrete rational: half the largest value keeping
// every strict cell bound and chain inequality intact.
std::vector<Rat> substitute_eps(const std::vector<EpsRat>& x,
                                const std::vector<const Cell*>& cells) {
  std::optional<Rat> bound;
  const auto restrict = [&](const Rat& room, long long coeff) {
    // need coeff*delta < room with room > 0, coeff > 0
    if (coeff <= 0) return;
    const Rat candidate = room / coeff;
    if (!bound || candidate < *bound) bound = candidate;
  };
  const int n = static_cast<int>(x.size());
  for (int j = 0; j < n; ++j) {
    const Cell& c = *cells[j];
    if (x[j].a > c.lo.a) restrict(x[j].a - c.lo.a, -x[j].b);
    if (c.hi.a > x[j].a) restrict(c.hi.a - x[j].a, x[j].b - c.hi.b);
    if (j + 1 < n && x[j + 1].a > x[j].a) {
      restrict(x[j + 1].a - x[j].a, x[j].b - x[j + 1].b);
    }
  }
  const Rat delta = bound ? *bound / 2 : Rat(0);
  std::vector<Rat> out(n);
  for (int j = 0; j < n; ++j) out[j] = x[j].a + x[j].b * delta;
  return out;
}

}  // namespace

BestResponseResult best_response(const FiniteMixedStrategy& q,
                                 const Rat& budget, const GameSpec& spec) {
  const int n = spec.battlefields;
  if (q.battlefields() != n) {
    throw InputError("opponent strategy does not match the game");
  }
  if (budget <= 0) throw InputError("responder budget must be > 0");

  const auto levels = critical_levels(q);
  std::vector<std::vector<Cell>> cells(n);
  for (int j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < levels[j].size(); ++i) {
      const Rat& c = levels[j][i];
      Rat tie_weight = 0, beat_weight = 0;
      for (const auto& atom : q.atoms()) {
        const Rat& lvl = atom.alloc[j];
        if (lvl < c) {
          tie_weight += atom.prob;
          beat_weight += atom.prob;
        } else if (lvl == c) {
          tie_weight += atom.prob / 2;
          beat_weight += atom.prob;
        }
      }
      if (c <= budget) {
        cells[j].push_back({{c, 0}, {c, 0}, tie_weight, c, Relation::Tie});
      }
      EpsRat hi = (i + 1 < levels[j].size()) ? EpsRat{levels[j][i + 1], -1}
                                             : EpsRat{budget, 0};
      hi = eps_min(hi, EpsRat{budget, 0});
      const EpsRat lo{c, 1};
      if (lo <= hi) {
        cells[j].push_back({lo, hi, beat_weight, c, Relation::Beat});
      }
    }
    if (cells[j].empty()) throw InputError("responder budget leaves no cell");
  }

  // Per-battlefield max weights for an optimistic pruning bound.
  std::vector<Rat> suffix_best(n + 1, Rat(0));
  for (int j = n - 1; j >= 0; --j) {
    Rat best = 0;
    for (const Cell& c : cells[j]) best = std::max(best, c.weight);
    suffix_best[j] = suffix_best[j + 1] + best;
  }

  std::vector<const Cell*> chosen(n, nullptr);
  std::vector<const Cell*> best_profile;
  Rat best_weight(-1);

  // DFS in ascending cell order per battlefield; the first maximum found is
  // the lexicographically smallest maximizing profile.
  auto dfs = [&](auto&& self, int j, const EpsRat& chain_lo,
                 const EpsRat& partial_lo_sum, const Rat& weight) -> void {
    if (j == n) {
      const Tightened t = tighten(chosen, budget);
      if (t.feasible && weight > best_weight) {
        best_weight = weight;
        best_profile = chosen;
      }
      return;
    }
    if (weight + suffix_best[j] <= best_weight) return;
    for (const Cell& c : cells[j]) {
      const EpsRat lo = eps_max(chain_lo, c.lo);
      if (c.hi < lo) continue;
      // Remaining coordinates are each at least lo; prune impossible sums.
      EpsRat min_sum = partial_lo_sum;
      for (int rest = j; rest < n; ++rest) min_sum = min_sum + lo;
      if (EpsRat{budget, 0} < min_sum) break;  // later cells only larger
      chosen[j] = &c;
      self(self, j + 1, lo, partial_lo_sum + lo, weight + c.weight);
    }
  };
  dfs(dfs, 0, EpsRat{Rat(0), 0}, EpsRat{Rat(0), 0}, Rat(0));

  if (best_profile.empty()) {
    throw InputError("no feasible allocation for this budget");
  }

  const Tightened t = tighten(best_profile, budget);
  const std::vector<Rat> witness_levels =
      substitute_eps(chain_witness(t, budget), best_profile);
  std::vector<BattlefieldRelation> profile;
  profile.reserve(n);
  for (const Cell* c : best_profile) profile.push_back({c->level, c->relation});
  return {best_weight / n, Allocation(witness_levels, budget),
          /*attained=*/true, std::move(profile)};
}

std::pair<Rat, Rat> exploitability(const FiniteMixedStrategy& pa,
                                   const FiniteMixedStrategy& pb,
                                   const GameSpec& spec) {
  const Rat value_a = payoff_mixed(pa, pb, spec);
  const Rat sup_a = best_response(pb, spec.budget_a, spec).sup_payoff;
  const Rat sup_b = best_response(pa, spec.budget_b, spec).sup_payoff;
  return {sup_a - value_a, sup_b - (1 - value_a)};
}

}  // namespace acb
