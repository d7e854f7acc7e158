#include "acb/strategy_json.hpp"

#include <fstream>

namespace acb {

using nlohmann::json;

json strategy_to_json(const FiniteMixedStrategy& s) {
  json atoms = json::array();
  for (const auto& [alloc, prob] : s.atoms()) {
    json levels = json::array();
    for (const Rat& x : alloc.levels()) levels.push_back(rat_str(x));
    atoms.push_back({{"alloc", levels}, {"prob", rat_str(prob)}});
  }
  return {{"budget", rat_str(s.budget())},
          {"n", s.battlefields()},
          {"atoms", atoms}};
}

FiniteMixedStrategy strategy_from_json(const json& j) {
  if (!j.is_object() || !j.contains("budget") || !j.contains("n") ||
      !j.contains("atoms")) {
    throw InputError("strategy JSON needs budget, n and atoms");
  }
  const Rat budget = parse_rat(j.at("budget").get<std::string>());
  const int n = j.at("n").get<int>();
  std::vector<WeightedAllocation> atoms;
  for (const auto& atom : j.at("atoms")) {
    std::vector<Rat> levels;
    for (const auto& level : atom.at("alloc")) {
      levels.push_back(parse_rat(level.get<std::string>()));
    }
    if (static_cast<int>(levels.size()) != n) {
      throw InputError("atom length does not match n");
    }
    atoms.push_back({Allocation(std::move(levels), budget),
                     parse_rat(atom.at("prob").get<std::string>())});
  }
  return FiniteMixedStrategy(std::move(atoms));
}

FiniteMixedStrategy load_strategy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open strategy file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("malformed strategy JSON in " + path + ": " + e.what());
  }
  return strategy_from_json(j);
}

void save_strategy(const FiniteMixedStrategy& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write strategy file: " + path);
  out << strategy_to_json(s).dump(2) << "\n";
}

}  // namespace acb
