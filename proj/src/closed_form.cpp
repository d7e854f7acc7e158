#include "acb/closed_form.hpp"

#include <algorithm>
#include <utility>

namespace acb {

namespace {

void require_unit_interval(const Rat& t) {
  if (t < 0 || t > 1) throw InputError("t must be in [0, 1]");
}

Allocation alloc(std::vector<Rat> levels, Rat budget) {
  return Allocation(std::move(levels), std::move(budget));
}

FiniteMixedStrategy uniform_mixture(std::vector<Allocation> allocs) {
  std::vector<WeightedAllocation> atoms;
  const Rat p(1, static_cast<long long>(allocs.size()));
  for (auto& a : allocs) atoms.push_back({std::move(a), p});
  return FiniteMixedStrategy(std::move(atoms));
}

}  // namespace

const char* value_kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::Known:
      return "Known";
    case ValueKind::UpperBound:
      return "UpperBound";
    case ValueKind::LowerBound:
      return "LowerBound";
    case ValueKind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

long long w2_family_index(const Rat& t) {
  require_unit_interval(t);
  if (t == 1) throw InputError("k is defined for t < 1");
  return rat_floor(t / (2 - 2 * t)).convert_to<long long>();
}

Rat w2_value(const Rat& t) {
  require_unit_interval(t);
  if (t == 1) return Rat(1, 2);
  const long long k = w2_family_index(t);
  return Rat(k + 2, 2 * k + 2);
}

EquilibriumConstruction w2_equilibrium(const Rat& t) {
  require_unit_interval(t);
  if (t < Rat(2, 3)) {
    return {t, 0, Rat(0),
            FiniteMixedStrategy::pure(alloc({Rat(1, 3), Rat(2, 3)}, Rat(1))),
            FiniteMixedStrategy::pure(alloc({t / 2, t / 2}, t))};
  }
  if (t == 1) {
    auto half = FiniteMixedStrategy::pure(alloc({Rat(1, 2), Rat(1, 2)}, Rat(1)));
    return {t, 0, Rat(0), half, half};
  }
  const long long k = w2_family_index(t);
  const Rat lo = Rat(2 * k + 1, 2) * t - k;
  const Rat hi_budget = 1 - t;
  const Rat hi_order = t * k - k + Rat(1, 2);
  const Rat hi = std::min(hi_budget, hi_order);
  const Rat eps = (lo + hi) / 2;
  std::vector<Allocation> pa, pb;
  for (long long j = 0; j <= k; ++j) {
    const Rat shift = j * (1 - t);
    pa.push_back(alloc({eps + shift, 1 - eps - shift}, Rat(1)));
    pb.push_back(alloc({shift, t - shift}, t));
  }
  return {t, k, eps, uniform_mixture(std::move(pa)),
          uniform_mixture(std::move(pb))};
}

ValueAnswer w3_value(const Rat& t) {
  require_unit_interval(t);
  if (t < Rat(6, 11)) return {ValueKind::Known, Rat(1)};
  if (t < Rat(18, 31)) return {ValueKind::Known, Rat(8, 9)};
  if (t > Rat(3, 5) && t < Rat(30, 47)) return {ValueKind::Known, Rat(5, 6)};
  if (t == Rat(2, 3)) return {ValueKind::UpperBound, Rat(4, 5)};
  if (t == Rat(5, 6)) return {ValueKind::LowerBound, Rat(2, 3)};
  if (t == 1) return {ValueKind::Known, Rat(1, 2)};
  return {ValueKind::Unknown, Rat(0)};
}

std::optional<W3Equilibrium> w3_equilibrium(const Rat& t) {
  require_unit_interval(t);
  if (t < Rat(6, 11)) {
    EquilibriumConstruction c{
        t, 0, Rat(0),
        FiniteMixedStrategy::pure(
            alloc({Rat(2, 11), Rat(3, 11), Rat(6, 11)}, Rat(1))),
        FiniteMixedStrategy::pure(alloc({t / 3, t / 3, t / 3}, t))};
    return W3Equilibrium{std::move(c), std::nullopt};
  }
  if (t < Rat(18, 31)) {
    const Rat eps = (1 - Rat(31, 18) * t) / 4;
    EquilibriumConstruction c{
        t, 0, eps,
        uniform_mixture(
            {alloc({t / 3 + eps, t / 2 + eps, 1 - Rat(5, 6) * t - 2 * eps},
                   Rat(1)),
             alloc({t / 3 + eps, 1 - Rat(4, 3) * t - 2 * eps, t + eps},
                   Rat(1)),
             alloc({1 - Rat(3, 2) * t - 2 * eps, t / 2 + eps, t + eps},
                   Rat(1))}),
        uniform_mixture({alloc({Rat(0), Rat(0), t}, t),
                         alloc({Rat(0), t / 2, t / 2}, t),
                         alloc({t / 3, t / 3, t / 3}, t)})};
    return W3Equilibrium{std::move(c), std::nullopt};
  }
  if (t > Rat(3, 5) && t < Rat(30, 47)) {
    EquilibriumConstruction c{
        t, 0, Rat(0),
        uniform_mixture(
            {alloc({(30 - 22 * t) / 75, (15 - 11 * t) / 25, 11 * t / 15},
                   Rat(1)),
             alloc({2 * t / 15, 13 * t / 30, 1 - 17 * t / 30}, Rat(1))}),
        uniform_mixture({alloc({t / 3, t / 3, t / 3}, t),
                         alloc({Rat(0), Rat(0), t}, t)})};
    return W3Equilibrium{std::move(c), std::nullopt};
  }
  if (t == 1) {
    return W3Equilibrium{std::nullopt, TriangleStrategyHandle{0}};
  }
  return std::nullopt;
}

bool check_w3_family(const FiniteMixedStrategy& pa, const Rat& t) {
  require_unit_interval(t);
  if (pa.atoms().size() != 2) {
    throw InputError("family check needs exactly two atoms");
  }
  for (const auto& atom : pa.atoms()) {
    if (atom.prob != Rat(1, 2)) {
      throw InputError("family check needs probabilities 1/2 each");
    }
    if (atom.alloc.size() != 3 || atom.alloc.owner_budget() != 1) {
      throw InputError("family check needs budget-1 atoms with n=3");
    }
  }
  const auto satisfies = [&](const Allocation& abc, const Allocation& def) {
    // Sums and orderings hold by Allocation feasibility; the family's own
    // inequalities remain.
    return abc[0] > t / 3 && abc[1] > t / 2 && def[2] > t &&
           2 * def[0] + abc[2] >= t && def[0] + 2 * def[1] >= t;
  };
  const Allocation& first = pa.atoms()[0].alloc;
  const Allocation& second = pa.atoms()[1].alloc;
  return satisfies(first, second) || satisfies(second, first);
}

FiniteMixedStrategy fixed_strategy(const std::string& id) {
  if (id == "5.4-B") {
    const Rat b(2, 3);
    return uniform_mixture(
        {alloc({Rat(0), Rat(1, 16), Rat(29, 48)}, b),
         alloc({Rat(0), Rat(0), Rat(2, 3)}, b),
         alloc({Rat(1, 16), Rat(1, 16), Rat(13, 24)}, b),
         alloc({Rat(1, 8), Rat(13, 48), Rat(13, 48)}, b),
         alloc({Rat(5, 24), Rat(11, 48), Rat(11, 48)}, b)});
  }
  if (id == "5.5-A") {
    return FiniteMixedStrategy::pure(
        alloc({Rat(1, 6), Rat(1, 3), Rat(1, 2)}, Rat(1)));
  }
  throw InputError("unknown fixed strategy id: " + id);
}

}  // namespace acb
