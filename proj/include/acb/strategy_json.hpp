#ifndef ACB_STRATEGY_JSON_HPP_
#define ACB_STRATEGY_JSON_HPP_

#include <json.hpp>

#include <string>

#include "acb/core.hpp"

namespace acb {

// Strategy wire format:
//   {"budget": "p/q", "n": N,
//    "atoms": [{"alloc": ["p/q", ...], "prob": "p/q"}, ...]}
// Rationals are canonical "p/q" strings (q > 0, gcd-reduced; bare "p" for
// integers).
nlohmann::json strategy_to_json(const FiniteMixedStrategy& s);
FiniteMixedStrategy strategy_from_json(const nlohmann::json& j);

FiniteMixedStrategy load_strategy(const std::string& path);
void save_strategy(const FiniteMixedStrategy& s, const std::string& path);

}  // namespace acb

#endif  // ACB_STRATEGY_JSON_HPP_
