#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "acb/analytic.hpp"
#include "acb/best_response.hpp"
#include "acb/closed_form.hpp"
#include "acb/discrete_solver.hpp"
#include "acb/strategy_json.hpp"
#include "acb/verify.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

// Rationals cross the boundary as canonical "p/q" strings and structured
// data as JSON strings; the python package turns those into dicts.
using acb::Rat;

std::vector<Rat> parse_levels(const std::vector<std::string>& levels) {
  std::vector<Rat> out;
  out.reserve(levels.size());
  for (const auto& text : levels) out.push_back(acb::parse_rat(text));
  return out;
}

acb::FiniteMixedStrategy strategy_from_text(const std::string& text) {
  return acb::strategy_from_json(json::parse(text));
}

std::string strategy_to_text(const acb::FiniteMixedStrategy& s) {
  return acb::strategy_to_json(s).dump();
}

}  // namespace

PYBIND11_MODULE(_acb, m) {
  m.doc() = "Exact payoffs, equilibrium values and solvers for the "
            "asymmetric (nondecreasing-allocation) Colonel Blotto game";

  m.def("feasible",
        [](const std::vector<std::string>& levels, const std::string& budget,
           int n) {
          return acb::feasible(parse_levels(levels), acb::parse_rat(budget), n);
        },
        py::arg("levels"), py::arg("budget"), py::arg("n"));

  m.def("payoff_pure",
        [](const std::vector<std::string>& a, const std::string& budget_a,
           const std::vector<std::string>& b, const std::string& budget_b) {
          const acb::GameSpec spec(acb::parse_rat(budget_a),
                                   acb::parse_rat(budget_b),
                                   static_cast<int>(a.size()));
          return acb::rat_str(acb::payoff_pure(
              acb::Allocation(parse_levels(a), acb::parse_rat(budget_a)),
              acb::Allocation(parse_levels(b), acb::parse_rat(budget_b)),
              spec));
        },
        py::arg("a"), py::arg("budget_a"), py::arg("b"), py::arg("budget_b"));

  m.def("payoff_mixed",
        [](const std::string& pa_json, const std::string& pb_json) {
          const auto pa = strategy_from_text(pa_json);
          const auto pb = strategy_from_text(pb_json);
          const acb::GameSpec spec(pa.budget(), pb.budget(),
                                   pa.battlefields());
          return acb::rat_str(acb::payoff_mixed(pa, pb, spec));
        },
        py::arg("pa_json"), py::arg("pb_json"));

  m.def("w2_value", [](const std::string& t) {
    return acb::rat_str(acb::w2_value(acb::parse_rat(t)));
  });

  m.def("w2_equilibrium", [](const std::string& t) {
    const auto eq = acb::w2_equilibrium(acb::parse_rat(t));
    return json{{"t", acb::rat_str(eq.t)},
                {"k", eq.k},
                {"epsilon", acb::rat_str(eq.epsilon)},
                {"pa", acb::strategy_to_json(eq.pa)},
                {"pb", acb::strategy_to_json(eq.pb)}}
        .dump();
  });

  m.def("w3_value", [](const std::string& t) {
    const auto answer = acb::w3_value(acb::parse_rat(t));
    return py::make_tuple(acb::value_kind_name(answer.kind),
                          answer.kind == acb::ValueKind::Unknown
                              ? py::object(py::none())
                              : py::object(py::str(acb::rat_str(answer.value))));
  });

  m.def("w3_equilibrium", [](const std::string& t) -> py::object {
    const auto eq = acb::w3_equilibrium(acb::parse_rat(t));
    if (!eq) return py::none();
    json out;
    if (eq->finite) {
      out = {{"kind", "finite"},
             {"epsilon", acb::rat_str(eq->finite->epsilon)},
             {"pa", acb::strategy_to_json(eq->finite->pa)},
             {"pb", acb::strategy_to_json(eq->finite->pb)}};
    } else {
      out = {{"kind", "triangle-family"}, {"depth", eq->triangle->depth}};
    }
    return py::str(out.dump());
  });

  m.def("check_w3_family",
        [](const std::string& pa_json, const std::string& t) {
          return acb::check_w3_family(strategy_from_text(pa_json),
                                      acb::parse_rat(t));
        },
        py::arg("pa_json"), py::arg("t"));

  m.def("fixed_strategy", [](const std::string& id) {
    return strategy_to_text(acb::fixed_strategy(id));
  });

  m.def("critical_levels", [](const std::string& q_json) {
    const auto levels = acb::critical_levels(strategy_from_text(q_json));
    std::vector<std::vector<std::string>> out;
    for (const auto& per_field : levels) {
      std::vector<std::string> row;
      for (const Rat& level : per_field) row.push_back(acb::rat_str(level));
      out.push_back(std::move(row));
    }
    return out;
  });

  m.def("best_response",
        [](const std::string& q_json, const std::string& budget) {
          const auto q = strategy_from_text(q_json);
          const Rat b = acb::parse_rat(budget);
          const acb::GameSpec spec(b, q.budget(), q.battlefields());
          const auto br = acb::best_response(q, b, spec);
          json witness = json::array();
          for (const Rat& x : br.witness.levels()) {
            witness.push_back(acb::rat_str(x));
          }
          json profile = json::array();
          for (const auto& rel : br.profile) {
            profile.push_back({{"level", acb::rat_str(rel.level)},
                               {"relation", acb::relation_name(rel.relation)}});
          }
          return json{{"sup_payoff", acb::rat_str(br.sup_payoff)},
                      {"attained", br.attained},
                      {"witness", witness},
                      {"profile", profile}}
              .dump();
        },
        py::arg("q_json"), py::arg("budget"));

  m.def("exploitability",
        [](const std::string& pa_json, const std::string& pb_json) {
          const auto pa = strategy_from_text(pa_json);
          const auto pb = strategy_from_text(pb_json);
          const acb::GameSpec spec(pa.budget(), pb.budget(),
                                   pa.battlefields());
          const auto [ea, eb] = acb::exploitability(pa, pb, spec);
          return py::make_tuple(acb::rat_str(ea), acb::rat_str(eb));
        },
        py::arg("pa_json"), py::arg("pb_json"));

  m.def("marginal_cdf", [](int j, const std::string& u) {
    return acb::rat_str(acb::marginal_cdf(j, acb::parse_rat(u)));
  });

  m.def("payoff_vs_triangle", [](const std::vector<std::string>& levels) {
    return acb::rat_str(acb::payoff_vs_triangle(
        acb::Allocation(parse_levels(levels), Rat(1))));
  });

  m.def("sample_triangle",
        [](long long count, std::uint64_t seed, int depth) {
          const auto samples = acb::sample_triangle_strategy(
              acb::TriangleFamilySpec{depth, {}}, count, seed);
          std::vector<std::array<std::string, 3>> out;
          out.reserve(samples.size());
          for (const auto& a : samples) {
            out.push_back({acb::rat_str(a[0]), acb::rat_str(a[1]),
                           acb::rat_str(a[2])});
          }
          return out;
        },
        py::arg("count"), py::arg("seed"), py::arg("depth") = 0);

  m.def("empirical_sup_distance",
        [](const std::vector<std::array<std::string, 3>>& samples, int j) {
          std::vector<acb::Allocation> allocations;
          allocations.reserve(samples.size());
          for (const auto& s : samples) {
            allocations.emplace_back(
                std::vector<Rat>{acb::parse_rat(s[0]), acb::parse_rat(s[1]),
                                 acb::parse_rat(s[2])},
                Rat(1));
          }
          return acb::empirical_sup_distance(allocations, j);
        },
        py::arg("samples"), py::arg("j"));

  m.def("enumerate_grid_strategies", &acb::enumerate_grid_strategies,
        py::arg("total"), py::arg("n"));

  m.def("discrete_value",
        [](const std::string& ta, const std::string& tb, int n, int m) {
          return acb::rat_str(acb::discrete_value(
              acb::GameSpec(acb::parse_rat(ta), acb::parse_rat(tb), n), m));
        },
        py::arg("ta"), py::arg("tb"), py::arg("n"), py::arg("m"));

  m.def("solve_discrete",
        [](const std::string& ta, const std::string& tb, int n, int m,
           const std::string& method) {
          const acb::GameSpec spec(acb::parse_rat(ta), acb::parse_rat(tb), n);
          const auto game = acb::build_matrix(spec, m);
          const auto report = acb::solve_zero_sum(
              game, method == "fp" ? acb::SolveMethod::FictitiousPlay
                                   : acb::SolveMethod::Simplex);
          json rows = json::array(), cols = json::array();
          for (const Rat& p : report.row_mixture) rows.push_back(acb::rat_str(p));
          for (const Rat& p : report.col_mixture) cols.push_back(acb::rat_str(p));
          return json{{"value", acb::rat_str(report.value)},
                      {"method", method == "fp" ? "fictitious-play" : "simplex"},
                      {"iterations", report.iterations},
                      {"row_mixture", rows},
                      {"col_mixture", cols}}
              .dump();
        },
        py::arg("ta"), py::arg("tb"), py::arg("n"), py::arg("m"),
        py::arg("method") = "simplex");

  m.def("verify",
        [](const std::string& id, long long samples, std::uint64_t seed,
           int grid) {
          const auto report =
              acb::verify_claim(id, acb::VerifyOptions{samples, seed, grid});
          return acb::report_to_json(report).dump();
        },
        py::arg("id"), py::arg("samples") = 100000, py::arg("seed") = 42,
        py::arg("grid") = 60);

  m.def("claim_ids", &acb::claim_ids);
}
