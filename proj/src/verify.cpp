#include "acb/verify.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "acb/analytic.hpp"
#include "acb/best_response.hpp"
#include "acb/closed_form.hpp"
#include "acb/discrete_solver.hpp"

namespace acb {

namespace {

void check_eq(std::vector<CheckResult>& checks, const std::string& what,
              const Rat& expected, const Rat& observed) {
  checks.push_back(
      {what, rat_str(expected), rat_str(observed), expected == observed});
}

void check_le(std::vector<CheckResult>& checks, const std::string& what,
              const Rat& observed, const Rat& bound) {
  checks.push_back(
      {what, "<= " + rat_str(bound), rat_str(observed), observed <= bound});
}

void check_true(std::vector<CheckResult>& checks, const std::string& what,
                bool observed) {
  checks.push_back({what, "true", observed ? "true" : "false", observed});
}

void check_pair(std::vector<CheckResult>& checks, const GameSpec& spec,
                const std::string& label, const FiniteMixedStrategy& pa,
                const FiniteMixedStrategy& pb, const Rat& expected_value) {
  const Rat payoff = payoff_mixed(pa, pb, spec);
  check_eq(checks, label + ": mixed payoff", expected_value, payoff);
  const auto [ea, eb] = exploitability(pa, pb, spec);
  check_eq(checks, label + ": exploitability of A", Rat(0), ea);
  check_eq(checks, label + ": exploitability of B", Rat(0), eb);
}

void verify_value_uniqueness(std::vector<CheckResult>& checks) {
  struct Instance {
    Rat ta, tb;
    int n, m;
    bool symmetric;
  };
  const Instance instances[] = {
      {Rat(1), Rat(1), 2, 8, true},       {Rat(1), Rat(1), 3, 9, true},
      {Rat(1), Rat(2, 3), 2, 6, false},   {Rat(1), Rat(2, 3), 3, 6, false},
      {Rat(1), Rat(1, 2), 3, 6, false}};
  for (const auto& inst : instances) {
    const GameSpec spec(inst.ta, inst.tb, inst.n);
    const auto game = build_matrix(spec, inst.m);
    const auto simplex = solve_zero_sum(game, SolveMethod::Simplex);
    const auto fp = solve_zero_sum(game, SolveMethod::FictitiousPlay);
    Rat gap = simplex.value - fp.value;
    if (gap < 0) gap = -gap;
    const std::string label = "ACB(" + rat_str(inst.ta) + ", " +
                              rat_str(inst.tb) + ", " + std::to_string(inst.n) +
                              ") m=" + std::to_string(inst.m);
    check_le(checks, label + ": |simplex - fictitious play|", gap,
             Rat(1, 10000));
    if (inst.symmetric) {
      check_eq(checks, label + ": symmetric game value", Rat(1, 2),
               simplex.value);
    }
  }
}

void verify_marginals(std::vector<CheckResult>& checks,
                      const VerifyOptions& options) {
  for (int depth = 0; depth <= 2; ++depth) {
    const auto samples = sample_triangle_strategy(
        TriangleFamilySpec{depth, {}}, options.samples,
        options.seed + static_cast<std::uint64_t>(depth));
    for (int j = 1; j <= 3; ++j) {
      const double distance = empirical_sup_distance(samples, j);
      std::ostringstream what;
      what << "depth " << depth << ", battlefield " << j << ": KS distance ("
           << options.samples << " samples)";
      std::ostringstream observed;
      observed << distance;
      checks.push_back({what.str(), "<= 0.02", observed.str(),
                        distance <= 0.02});
    }
  }
  // Payoff against the equilibrium marginals peaks at exactly 1/2, only
  // inside [0,1/3] x [1/6,1/2] x [1/3,2/3]; scanned on the rational grid.
  const int g = options.grid;
  Rat max_payoff(-1);
  bool box_exact = true;
  for (const auto& parts : enumerate_grid_strategies(g, 3)) {
    const Allocation p({Rat(parts[0], g), Rat(parts[1], g), Rat(parts[2], g)},
                       Rat(1));
    const Rat w = payoff_vs_triangle(p);
    max_payoff = std::max(max_payoff, w);
    const bool in_box = p[0] <= Rat(1, 3) && p[1] >= Rat(1, 6) &&
                        p[1] <= Rat(1, 2) && p[2] >= Rat(1, 3) &&
                        p[2] <= Rat(2, 3);
    if (in_box != (w == Rat(1, 2))) box_exact = false;
    if (!in_box && w >= Rat(1, 2)) box_exact = false;
  }
  check_eq(checks,
           "grid-" + std::to_string(g) + " max of payoff_vs_triangle",
           Rat(1, 2), max_payoff);
  check_true(checks, "payoff 1/2 exactly on the box, < 1/2 outside",
             box_exact);
}

void verify_w2(std::vector<CheckResult>& checks) {
  const std::pair<Rat, Rat> table[] = {
      {Rat(1, 2), Rat(1)},     {Rat(2, 3), Rat(3, 4)}, {Rat(7, 10), Rat(3, 4)},
      {Rat(4, 5), Rat(2, 3)},  {Rat(9, 10), Rat(3, 5)}, {Rat(1), Rat(1, 2)}};
  for (const auto& [t, expected] : table) {
    check_eq(checks, "w2_value(" + rat_str(t) + ")", expected, w2_value(t));
    const auto eq = w2_equilibrium(t);
    check_pair(checks, GameSpec(Rat(1), t, 2), "t=" + rat_str(t), eq.pa, eq.pb,
               expected);
  }
}

void verify_w3_range(std::vector<CheckResult>& checks,
                     const std::vector<Rat>& ts, const Rat& expected) {
  for (const Rat& t : ts) {
    const ValueAnswer answer = w3_value(t);
    check_true(checks, "w3_value(" + rat_str(t) + ") is Known",
               answer.kind == ValueKind::Known);
    check_eq(checks, "w3_value(" + rat_str(t) + ")", expected, answer.value);
    const auto eq = w3_equilibrium(t);
    check_true(checks, "construction exists at t=" + rat_str(t),
               eq.has_value() && eq->finite.has_value());
    if (eq && eq->finite) {
      check_pair(checks, GameSpec(Rat(1), t, 3), "t=" + rat_str(t),
                 eq->finite->pa, eq->finite->pb, expected);
    }
  }
}

void verify_54(std::vector<CheckResult>& checks) {
  const auto pb = fixed_strategy("5.4-B");
  const GameSpec spec(Rat(1), Rat(2, 3), 3);
  const auto br = best_response(pb, Rat(1), spec);
  check_le(checks, "sup payoff for A against the five-atom strategy",
           br.sup_payoff, Rat(4, 5));
  check_eq(checks, "exact oracle supremum", Rat(4, 5), br.sup_payoff);
  check_true(checks, "supremum attained by an exact witness", br.attained);
}

void verify_55(std::vector<CheckResult>& checks) {
  const auto pa = fixed_strategy("5.5-A");
  const GameSpec spec(Rat(1), Rat(5, 6), 3);
  const auto br = best_response(pa, Rat(5, 6), spec);
  check_le(checks, "sup payoff for B against (1/6, 1/3, 1/2)", br.sup_payoff,
           Rat(1, 3));
  check_eq(checks, "exact oracle supremum", Rat(1, 3), br.sup_payoff);
  check_true(checks, "equivalently A is guaranteed at least 2/3",
             1 - br.sup_payoff >= Rat(2, 3));
}

}  // namespace

std::vector<std::string> claim_ids() {
  return {"2.1", "3.4", "4.1", "5.1", "5.2", "5.3", "5.4", "5.5"};
}

std::string claim_title(const std::string& id) {
  if (id == "2.1") return "unique constant-sum value: solver cross-check";
  if (id == "3.4") return "ACB(1,1,3) equilibrium marginals and value 1/2";
  if (id == "4.1") return "W2(t) step formula and equilibrium family";
  if (id == "5.1") return "W3(t) = 1 for t < 6/11 (overwhelm)";
  if (id == "5.2") return "W3(t) = 8/9 on [6/11, 18/31)";
  if (id == "5.3") return "W3(t) = 5/6 on (3/5, 30/47)";
  if (id == "5.4") return "W3(2/3) <= 4/5 via the five-atom cap strategy";
  if (id == "5.5") return "W3(5/6) >= 2/3 via the pure floor strategy";
  throw InputError("unknown claim id: " + id);
}

VerificationReport verify_claim(const std::string& id,
                                const VerifyOptions& options) {
  VerificationReport report;
  report.id = id;
  report.title = claim_title(id);
  const auto start = std::chrono::steady_clock::now();
  if (id == "2.1") {
    verify_value_uniqueness(report.checks);
  } else if (id == "3.4") {
    verify_marginals(report.checks, options);
  } else if (id == "4.1") {
    verify_w2(report.checks);
  } else if (id == "5.1") {
    verify_w3_range(report.checks, {Rat(1, 10), Rat(1, 2), Rat(27, 50)},
                    Rat(1));
  } else if (id == "5.2") {
    verify_w3_range(report.checks, {Rat(6, 11), Rat(5, 9), Rat(4, 7)},
                    Rat(8, 9));
  } else if (id == "5.3") {
    verify_w3_range(report.checks, {Rat(61, 100), Rat(5, 8), Rat(7, 11)},
                    Rat(5, 6));
  } else if (id == "5.4") {
    verify_54(report.checks);
  } else if (id == "5.5") {
    verify_55(report.checks);
  } else {
    throw InputError("unknown claim id: " + id);
  }
  report.overall = true;
  for (const auto& check : report.checks) report.overall &= check.pass;
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "claim " << report.id << ": " << report.title << "\n";
  for (const auto& check : report.checks) {
    out << "  [" << (check.pass ? "PASS" : "FAIL") << "] " << check.description
        << ": expected " << check.expected << ", observed " << check.observed
        << "\n";
  }
  out << "overall: " << (report.overall ? "PASS" : "FAIL") << " ("
      << report.checks.size() << " checks)\n";
  return out.str();
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& check : report.checks) {
    checks.push_back({{"description", check.description},
                      {"expected", check.expected},
                      {"observed", check.observed},
                      {"pass", check.pass}});
  }
  return {{"id", report.id},
          {"title", report.title},
          {"checks", checks},
          {"overall", report.overall}};
}

void write_file_atomically(const std::string& path,
                           const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << contents;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

void emit_plot_data(Curve curve, int points, const std::string& out_path) {
  if (points < 2) throw InputError("points must be >= 2");
  std::ostringstream csv;
  if (curve == Curve::W2) {
    csv << "t,value,t_exact,value_exact\n";
    for (int j = 0; j <= points; ++j) {
      const Rat t(j, points);
      const Rat v = w2_value(t);
      csv << rat_decimal(t) << "," << rat_decimal(v) << "," << rat_str(t)
          << "," << rat_str(v) << "\n";
    }
  } else if (curve == Curve::W3) {
    csv << "t,kind,value,t_exact,value_exact\n";
    for (int j = 0; j <= points; ++j) {
      const Rat t(j, points);
      const ValueAnswer answer = w3_value(t);
      const bool has_value = answer.kind != ValueKind::Unknown;
      csv << rat_decimal(t) << "," << value_kind_name(answer.kind) << ","
          << (has_value ? rat_decimal(answer.value) : "") << "," << rat_str(t)
          << "," << (has_value ? rat_str(answer.value) : "") << "\n";
    }
  } else {
    csv << "u,F1,F2,F3,u_exact,F1_exact,F2_exact,F3_exact\n";
    for (int j = 0; j <= points; ++j) {
      const Rat u(j, points);
      const Rat f1 = marginal_cdf(1, u), f2 = marginal_cdf(2, u),
                f3 = marginal_cdf(3, u);
      csv << rat_decimal(u) << "," << rat_decimal(f1) << "," << rat_decimal(f2)
          << "," << rat_decimal(f3) << "," << rat_str(u) << "," << rat_str(f1)
          << "," << rat_str(f2) << "," << rat_str(f3) << "\n";
    }
  }
  write_file_atomically(out_path, csv.str());
}

std::string samples_to_csv(const std::vector<Allocation>& samples) {
  std::ostringstream csv;
  csv << "x1,x2,x3\n";
  for (const Allocation& a : samples) {
    csv << rat_str(a[0]) << "," << rat_str(a[1]) << "," << rat_str(a[2])
        << "\n";
  }
  return csv.str();
}

}  // namespace acb
