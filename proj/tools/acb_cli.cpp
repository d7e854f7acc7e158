#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "acb/analytic.hpp"
#include "acb/best_response.hpp"
#include "acb/closed_form.hpp"
#include "acb/discrete_solver.hpp"
#include "acb/strategy_json.hpp"
#include "acb/verify.hpp"

namespace {

using acb::Rat;
using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    acb::write_file_atomically(out_path, text);
  }
}

json best_response_to_json(const acb::BestResponseResult& br) {
  json witness_levels = json::array();
  for (const Rat& x : br.witness.levels()) witness_levels.push_back(acb::rat_str(x));
  json profile = json::array();
  for (const auto& rel : br.profile) {
    profile.push_back({{"level", acb::rat_str(rel.level)},
                       {"relation", acb::relation_name(rel.relation)}});
  }
  return {{"sup_payoff", acb::rat_str(br.sup_payoff)},
          {"sup_payoff_decimal", acb::rat_decimal(br.sup_payoff)},
          {"attained", br.attained},
          {"witness",
           {{"budget", acb::rat_str(br.witness.owner_budget())},
            {"levels", witness_levels}}},
          {"profile", profile}};
}

json construction_to_json(const acb::EquilibriumConstruction& eq) {
  return {{"t", acb::rat_str(eq.t)},
          {"k", eq.k},
          {"epsilon", acb::rat_str(eq.epsilon)},
          {"pa", acb::strategy_to_json(eq.pa)},
          {"pb", acb::strategy_to_json(eq.pb)}};
}

json solve_report_to_json(const acb::SolveReport& report) {
  json rows = json::array(), cols = json::array();
  for (const Rat& p : report.row_mixture) rows.push_back(acb::rat_str(p));
  for (const Rat& p : report.col_mixture) cols.push_back(acb::rat_str(p));
  json out = {{"value", acb::rat_str(report.value)},
              {"value_decimal", acb::rat_decimal(report.value)},
              {"method", report.method == acb::SolveMethod::Simplex
                             ? "simplex"
                             : "fictitious-play"},
              {"row_mixture", rows},
              {"col_mixture", cols}};
  if (report.method == acb::SolveMethod::FictitiousPlay) {
    out["iterations"] = report.iterations;
  }
  return out;
}

std::string matrix_to_csv(const acb::DiscreteMatrixGame& game) {
  std::ostringstream csv;
  csv << "row\\col";
  for (const auto& col : game.cols) {
    csv << ",(";
    for (int j = 0; j < col.size(); ++j) {
      csv << (j ? " " : "") << acb::rat_str(col[j]);
    }
    csv << ")";
  }
  csv << "\n";
  for (std::size_t r = 0; r < game.rows.size(); ++r) {
    csv << "(";
    for (int j = 0; j < game.rows[r].size(); ++j) {
      csv << (j ? " " : "") << acb::rat_str(game.rows[r][j]);
    }
    csv << ")";
    for (const Rat& entry : game.matrix[r]) csv << "," << acb::rat_str(entry);
    csv << "\n";
  }
  return csv.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers and verification for the asymmetric (nondecreasing-allocation) Colonel Blotto game"};
  app.require_subcommand(1);

  // payoff
  std::string a_path, b_path, format = "text", out_path;
  auto* payoff = app.add_subcommand("payoff", "Mixed-vs-mixed payoff of two strategy files");
  payoff->add_option("--a", a_path, "strategy JSON for player A")->required();
  payoff->add_option("--b", b_path, "strategy JSON for player B")->required();
  payoff->add_option("--format", format, "text|json");

  // best-response
  std::string against_path, budget_text;
  auto* br_cmd = app.add_subcommand("best-response", "Exact best response against a strategy file");
  br_cmd->add_option("--against", against_path, "opponent strategy JSON")->required();
  br_cmd->add_option("--budget", budget_text, "responder budget p/q")->required();
  br_cmd->add_option("--out", out_path, "write JSON here instead of stdout");

  // value-w2 / value-w3
  std::string t_text;
  auto* w2_cmd = app.add_subcommand("value-w2", "Two-battlefield value W2(t)");
  w2_cmd->add_option("--t", t_text, "budget ratio p/q")->required();
  w2_cmd->add_option("--format", format, "text|json");
  auto* w3_cmd = app.add_subcommand("value-w3", "Three-battlefield value W3(t) where known");
  w3_cmd->add_option("--t", t_text, "budget ratio p/q")->required();
  w3_cmd->add_option("--format", format, "text|json");

  // equilibrium
  int n = 2;
  auto* eq_cmd = app.add_subcommand("equilibrium", "Equilibrium construction at t");
  eq_cmd->add_option("--n", n, "battlefields (2 or 3)")->required();
  eq_cmd->add_option("--t", t_text, "budget ratio p/q")->required();
  eq_cmd->add_option("--out", out_path, "write JSON here instead of stdout");

  // check-family
  std::string pa_path;
  auto* family_cmd = app.add_subcommand("check-family", "Check the two-atom 5/6-value family conditions");
  family_cmd->add_option("--t", t_text, "budget ratio p/q")->required();
  family_cmd->add_option("--pa", pa_path, "candidate strategy JSON")->required();
  family_cmd->add_option("--format", format, "text|json");

  // verify
  std::string claim_id;
  long long samples = 100000;
  std::uint64_t seed = 42;
  auto* verify_cmd = app.add_subcommand("verify", "Run a claim's verification suite");
  verify_cmd->add_option("--id", claim_id, "claim id (2.1, 3.4, 4.1, 5.1-5.5) or 'all'")->required();
  verify_cmd->add_option("--samples", samples, "Monte Carlo sample count");
  verify_cmd->add_option("--seed", seed, "sampler seed");
  int verify_grid = 60;
  verify_cmd->add_option("--grid", verify_grid, "payoff box scan grid denominator");
  verify_cmd->add_option("--format", format, "text|json");
  verify_cmd->add_option("--out", out_path, "write the report here instead of stdout");

  // solve-discrete
  std::string ta_text = "1", tb_text = "1", method_text = "simplex", matrix_csv;
  int grid = 1;
  auto* solve_cmd = app.add_subcommand("solve-discrete", "Solve the grid-discretized game");
  solve_cmd->add_option("--ta", ta_text, "budget of A, p/q")->required();
  solve_cmd->add_option("--tb", tb_text, "budget of B, p/q")->required();
  solve_cmd->add_option("--n", n, "battlefields")->required();
  solve_cmd->add_option("--grid", grid, "grid resolution m")->required();
  solve_cmd->add_option("--method", method_text, "simplex|fp");
  solve_cmd->add_option("--matrix-csv", matrix_csv, "also dump the payoff matrix CSV here");
  solve_cmd->add_option("--out", out_path, "write JSON here instead of stdout");

  // sample-marginals
  long long count = 100000;
  int depth = 0;
  auto* sample_cmd = app.add_subcommand("sample-marginals", "Draw triangle-family samples as CSV");
  sample_cmd->add_option("--samples", count, "number of samples");
  sample_cmd->add_option("--seed", seed, "sampler seed");
  sample_cmd->add_option("--depth", depth, "subdivision depth");
  sample_cmd->add_option("--out", out_path, "write CSV here instead of stdout");

  // plot-data
  std::string curve_text;
  int points = 1000;
  auto* plot_cmd = app.add_subcommand("plot-data", "Emit CSV for the w2/w3/marginals curves");
  plot_cmd->add_option("--curve", curve_text, "w2|w3|marginals")->required();
  plot_cmd->add_option("--points", points, "grid intervals (rows at t = j/points)");
  plot_cmd->add_option("--out", out_path, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*payoff) {
      const auto pa = acb::load_strategy(a_path);
      const auto pb = acb::load_strategy(b_path);
      const acb::GameSpec spec(pa.budget(), pb.budget(), pa.battlefields());
      const Rat value = acb::payoff_mixed(pa, pb, spec);
      if (format == "json") {
        emit(json{{"payoff_a", acb::rat_str(value)},
                  {"payoff_b", acb::rat_str(1 - value)}}
                 .dump(2) +
                 "\n",
             out_path);
      } else {
        emit("payoff for A: " + acb::rat_str(value) + " (= " +
                 acb::rat_decimal(value) + ")\npayoff for B: " +
                 acb::rat_str(1 - value) + "\n",
             out_path);
      }
    } else if (*br_cmd) {
      const auto q = acb::load_strategy(against_path);
      const Rat budget = acb::parse_rat(budget_text);
      const acb::GameSpec spec(budget, q.budget(), q.battlefields());
      const auto br = acb::best_response(q, budget, spec);
      emit(best_response_to_json(br).dump(2) + "\n", out_path);
    } else if (*w2_cmd) {
      const Rat t = acb::parse_rat(t_text);
      const Rat value = acb::w2_value(t);
      if (format == "json") {
        emit(json{{"t", acb::rat_str(t)}, {"value", acb::rat_str(value)}}
                 .dump(2) +
                 "\n",
             out_path);
      } else {
        emit("W2(" + acb::rat_str(t) + ") = " + acb::rat_str(value) + " (= " +
                 acb::rat_decimal(value) + ")\n",
             out_path);
      }
    } else if (*w3_cmd) {
      const Rat t = acb::parse_rat(t_text);
      const acb::ValueAnswer answer = acb::w3_value(t);
      const bool has_value = answer.kind != acb::ValueKind::Unknown;
      if (format == "json") {
        json out = {{"t", acb::rat_str(t)},
                    {"kind", acb::value_kind_name(answer.kind)}};
        if (has_value) out["value"] = acb::rat_str(answer.value);
        emit(out.dump(2) + "\n", out_path);
      } else {
        std::string line = "W3(" + acb::rat_str(t) + "): " +
                           acb::value_kind_name(answer.kind);
        if (has_value) line += " " + acb::rat_str(answer.value);
        emit(line + "\n", out_path);
      }
    } else if (*eq_cmd) {
      const Rat t = acb::parse_rat(t_text);
      json out;
      if (n == 2) {
        const auto eq = acb::w2_equilibrium(t);
        out = construction_to_json(eq);
        out["kind"] = "finite";
        out["value"] = acb::rat_str(acb::w2_value(t));
      } else if (n == 3) {
        const auto eq = acb::w3_equilibrium(t);
        if (!eq) {
          out = {{"kind", "none"}, {"t", acb::rat_str(t)}};
        } else if (eq->finite) {
          out = construction_to_json(*eq->finite);
          out["kind"] = "finite";
          out["value"] = acb::rat_str(acb::w3_value(t).value);
        } else {
          out = {{"kind", "triangle-family"},
                 {"t", acb::rat_str(t)},
                 {"depth", eq->triangle->depth},
                 {"value", "1/2"}};
        }
      } else {
        throw acb::InputError("equilibrium constructions exist for n=2 and n=3");
      }
      emit(out.dump(2) + "\n", out_path);
    } else if (*family_cmd) {
      const Rat t = acb::parse_rat(t_text);
      const auto pa = acb::load_strategy(pa_path);
      const bool ok = acb::check_w3_family(pa, t);
      if (format == "json") {
        emit(json{{"t", acb::rat_str(t)}, {"ok", ok}}.dump(2) + "\n", out_path);
      } else {
        emit(std::string(ok ? "ok" : "violated") + "\n", out_path);
      }
      if (!ok) return 1;
    } else if (*verify_cmd) {
      const acb::VerifyOptions options{samples, seed, verify_grid};
      std::vector<std::string> ids;
      if (claim_id == "all") {
        ids = acb::claim_ids();
      } else {
        ids.push_back(claim_id);
      }
      bool all_pass = true;
      std::string text;
      std::string csv = "id,description,expected,observed,pass\n";
      json reports = json::array();
      for (const std::string& id : ids) {
        const auto report = acb::verify_claim(id, options);
        all_pass &= report.overall;
        text += acb::report_to_text(report);
        reports.push_back(acb::report_to_json(report));
        for (const auto& check : report.checks) {
          csv += id + ",\"" + check.description + "\",\"" + check.expected +
                 "\",\"" + check.observed + "\"," +
                 (check.pass ? "true" : "false") + "\n";
          if (!check.pass) {
            std::cerr << "FAIL claim " << id << ": " << check.description
                      << " (expected " << check.expected << ", observed "
                      << check.observed << ")\n";
          }
        }
      }
      if (format == "json") {
        emit((ids.size() == 1 ? reports[0] : reports).dump(2) + "\n", out_path);
      } else if (format == "csv") {
        emit(csv, out_path);
      } else {
        emit(text, out_path);
      }
      if (!all_pass) return 1;
    } else if (*solve_cmd) {
      const acb::GameSpec spec(acb::parse_rat(ta_text), acb::parse_rat(tb_text), n);
      const auto game = acb::build_matrix(spec, grid);
      if (!matrix_csv.empty()) {
        acb::write_file_atomically(matrix_csv, matrix_to_csv(game));
      }
      acb::SolveMethod method;
      if (method_text == "simplex") {
        method = acb::SolveMethod::Simplex;
      } else if (method_text == "fp" || method_text == "fictitious-play") {
        method = acb::SolveMethod::FictitiousPlay;
      } else {
        throw acb::InputError("method must be simplex or fp");
      }
      const auto report = acb::solve_zero_sum(game, method);
      emit(solve_report_to_json(report).dump(2) + "\n", out_path);
    } else if (*sample_cmd) {
      const auto allocations = acb::sample_triangle_strategy(
          acb::TriangleFamilySpec{depth, {}}, count, seed);
      emit(acb::samples_to_csv(allocations), out_path);
    } else if (*plot_cmd) {
      acb::Curve curve;
      if (curve_text == "w2") {
        curve = acb::Curve::W2;
      } else if (curve_text == "w3") {
        curve = acb::Curve::W3;
      } else if (curve_text == "marginals") {
        curve = acb::Curve::Marginals;
      } else {
        throw acb::InputError("curve must be w2, w3 or marginals");
      }
      acb::emit_plot_data(curve, points, out_path);
    }
  } catch (const acb::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
