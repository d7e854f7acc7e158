// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 7 drives the CLI binary named by $ACB_CLI.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "acb/analytic.hpp"
#include "acb/best_response.hpp"
#include "acb/closed_form.hpp"
#include "acb/discrete_solver.hpp"
#include "acb/verify.hpp"
#include "brute_force.hpp"
#include "test_util.hpp"

using namespace acb;

namespace {

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(std::vector<std::string>&)> run;
};

void expect(std::vector<std::string>& failures, bool ok,
            const std::string& message) {
  if (!ok) failures.push_back(message);
}

std::vector<std::string> g_notes;

void note(const std::string& message) { g_notes.push_back(message); }

std::string q(const Rat& r) { return rat_str(r); }

// ---------------------------------------------------------------------------

void criterion_w2(std::vector<std::string>& failures) {
  const std::pair<Rat, Rat> table[] = {
      {Rat(1, 2), Rat(1)},      {Rat(2, 3), Rat(3, 4)},
      {Rat(7, 10), Rat(3, 4)},  {Rat(3, 4), Rat(3, 4)},
      {Rat(4, 5), Rat(2, 3)},   {Rat(9, 10), Rat(3, 5)},
      {Rat(1), Rat(1, 2)}};
  for (const auto& [t, expected] : table) {
    const Rat value = w2_value(t);
    expect(failures, value == expected,
           "w2_value(" + q(t) + ") = " + q(value) + ", want " + q(expected));
    const auto eq = w2_equilibrium(t);
    const GameSpec spec(Rat(1), t, 2);
    const Rat payoff = payoff_mixed(eq.pa, eq.pb, spec);
    expect(failures, payoff == value,
           "construction payoff at t=" + q(t) + " is " + q(payoff));
    const auto [ea, eb] = exploitability(eq.pa, eq.pb, spec);
    expect(failures, ea == 0 && eb == 0,
           "exploitability at t=" + q(t) + " is (" + q(ea) + ", " + q(eb) +
               ")");
  }
}

void criterion_marginals(std::vector<std::string>& failures) {
  for (int depth = 0; depth <= 2; ++depth) {
    const auto samples = sample_triangle_strategy(
        TriangleFamilySpec{depth, {}}, 100000,
        42 + static_cast<std::uint64_t>(depth));
    for (int j = 1; j <= 3; ++j) {
      const double d = empirical_sup_distance(samples, j);
      std::ostringstream msg;
      msg << "KS distance depth " << depth << " battlefield " << j << " = "
          << d;
      expect(failures, d <= 0.02, msg.str());
    }
  }
  Rat max_payoff(-1);
  bool box_ok = true;
  for (const auto& parts : enumerate_grid_strategies(60, 3)) {
    const Allocation p(
        {Rat(parts[0], 60), Rat(parts[1], 60), Rat(parts[2], 60)}, Rat(1));
    const Rat w = payoff_vs_triangle(p);
    if (w > max_payoff) max_payoff = w;
    const bool in_box = p[0] <= Rat(1, 3) && p[1] >= Rat(1, 6) &&
                        p[1] <= Rat(1, 2) && p[2] >= Rat(1, 3) &&
                        p[2] <= Rat(2, 3);
    if ((w == Rat(1, 2)) != in_box) box_ok = false;
  }
  expect(failures, max_payoff == Rat(1, 2),
         "grid-60 max is " + q(max_payoff) + ", want 1/2");
  expect(failures, box_ok, "payoff 1/2 attained off the box or missing on it");
}

void criterion_w3(std::vector<std::string>& failures) {
  const std::pair<Rat, Rat> table[] = {
      {Rat(1, 2), Rat(1)}, {Rat(5, 9), Rat(8, 9)}, {Rat(5, 8), Rat(5, 6)}};
  for (const auto& [t, expected] : table) {
    const auto eq = w3_equilibrium(t);
    if (!eq || !eq->finite) {
      expect(failures, false, "no construction at t=" + q(t));
      continue;
    }
    const GameSpec spec(Rat(1), t, 3);
    const Rat payoff = payoff_mixed(eq->finite->pa, eq->finite->pb, spec);
    expect(failures, payoff == expected,
           "construction payoff at t=" + q(t) + " is " + q(payoff) +
               ", want " + q(expected));
    const auto [ea, eb] = exploitability(eq->finite->pa, eq->finite->pb, spec);
    expect(failures, ea == 0 && eb == 0,
           "exploitability at t=" + q(t) + " is (" + q(ea) + ", " + q(eb) +
               ")");
  }
}

void criterion_bounds(std::vector<std::string>& failures) {
  const auto pb = fixed_strategy("5.4-B");
  const auto br_a = best_response(pb, Rat(1), GameSpec(Rat(1), Rat(2, 3), 3));
  expect(failures, br_a.sup_payoff <= Rat(4, 5),
         "sup against the five-atom strategy is " + q(br_a.sup_payoff));
  note("recorded: sup for A against the five-atom strategy = " +
       rat_str(br_a.sup_payoff) +
       (br_a.attained ? " (attained)" : " (not attained)"));
  expect(failures, br_a.sup_payoff == Rat(4, 5),
         "exact sup is " + q(br_a.sup_payoff) + ", derived value is 4/5");

  const auto pa = fixed_strategy("5.5-A");
  const auto br_b =
      best_response(pa, Rat(5, 6), GameSpec(Rat(1), Rat(5, 6), 3));
  expect(failures, br_b.sup_payoff <= Rat(1, 3),
         "sup for B against the floor strategy is " + q(br_b.sup_payoff));
  note("recorded: sup for B against the floor strategy = " +
       rat_str(br_b.sup_payoff) + " (A is guaranteed " +
       rat_str(Rat(1 - br_b.sup_payoff)) + ")");
}

void criterion_oracle(std::vector<std::string>& failures) {
  SplitMix64 rng(20250810);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(3));
    const long long base = 1 + static_cast<long long>(rng.next_below(24));
    const long long opp_total = rng.next_below(49);
    const long long resp_total =
        1 + static_cast<long long>(rng.next_below(40));
    const auto opp = testutil::random_strategy(rng, n, opp_total, base, 5);
    const Rat budget(resp_total, base);
    const GameSpec spec(budget, opp.budget(), n);
    const auto br = best_response(opp, budget, spec);
    const Rat brute = testoracle::grid_scan_max(opp, budget, 48 * base);
    if (br.sup_payoff != brute) {
      std::ostringstream msg;
      msg << "trial " << trial << ": oracle " << rat_str(br.sup_payoff)
          << " vs grid " << rat_str(brute);
      failures.push_back(msg.str());
      continue;
    }
    expect(failures, brute <= br.sup_payoff,
           "grid exceeded the oracle supremum");
    const Rat witness_payoff =
        payoff_mixed(FiniteMixedStrategy::pure(br.witness), opp, spec);
    expect(failures, witness_payoff == br.sup_payoff,
           "witness misses the supremum on trial " + std::to_string(trial));
  }
}

void criterion_uniqueness(std::vector<std::string>& failures) {
  struct Instance {
    Rat tb;
    int n, m;
    bool symmetric;
  };
  const Instance instances[] = {{Rat(1), 2, 8, true},
                                {Rat(1), 3, 9, true},
                                {Rat(2, 3), 2, 6, false},
                                {Rat(2, 3), 3, 6, false},
                                {Rat(1, 2), 3, 6, false}};
  for (const auto& inst : instances) {
    const GameSpec spec(Rat(1), inst.tb, inst.n);
    const auto game = build_matrix(spec, inst.m);
    const auto simplex = solve_zero_sum(game, SolveMethod::Simplex);
    const auto fp = solve_zero_sum(game, SolveMethod::FictitiousPlay);
    Rat gap = simplex.value - fp.value;
    if (gap < 0) gap = -gap;
    std::ostringstream label;
    label << "ACB(1, " << rat_str(inst.tb) << ", " << inst.n
          << ") m=" << inst.m;
    expect(failures, gap <= Rat(1, 10000),
           label.str() + ": methods disagree by " + q(gap));
    if (inst.symmetric) {
      expect(failures, simplex.value == Rat(1, 2),
             label.str() + ": symmetric value is " + q(simplex.value));
    }
  }
}

int run_cli(const std::string& cli, const std::string& args,
            const std::string& out_path) {
  const std::string cmd = cli + " " + args + " > " + out_path + " 2>/dev/null";
  return std::system(cmd.c_str());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void criterion_determinism(std::vector<std::string>& failures) {
  const char* env = std::getenv("ACB_CLI");
  const std::string cli = env ? env : "tools/acb";
  const std::pair<std::string, std::string> runs[] = {
      {"verify --id 4.1", "acceptance_verify41"},
      {"verify --id 3.4 --samples 20000 --seed 42", "acceptance_verify34"},
      {"sample-marginals --seed 42 --samples 2000 --depth 1",
       "acceptance_samples"}};
  for (const auto& [args, stem] : runs) {
    const std::string first = stem + "_a.txt";
    const std::string second = stem + "_b.txt";
    const int rc1 = run_cli(cli, args, first);
    const int rc2 = run_cli(cli, args, second);
    expect(failures, rc1 == 0 && rc2 == 0,
           "`" + args + "` exited nonzero (" + std::to_string(rc1) + ", " +
               std::to_string(rc2) + ")");
    const std::string out1 = slurp(first);
    expect(failures, !out1.empty(), "`" + args + "` produced no output");
    expect(failures, out1 == slurp(second),
           "`" + args + "` is not byte-identical across runs");
    std::remove(first.c_str());
    std::remove(second.c_str());
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "W2 values, equilibrium payoffs and zero exploitability", 5.0,
       criterion_w2},
      {2, "ACB(1,1,3) marginals: KS at depths 0-2 and the payoff box", 60.0,
       criterion_marginals},
      {3, "W3 covered ranges: values 1, 8/9, 5/6 with zero exploitability",
       30.0, criterion_w3},
      {4, "computer-verified bounds: sup 4/5 for A, sup 1/3 for B", 30.0,
       criterion_bounds},
      {5, "oracle equals brute-force grid scan on 200 random instances", 60.0,
       criterion_oracle},
      {6, "value uniqueness: simplex vs fictitious play on 5 instances", 60.0,
       criterion_uniqueness},
      {7, "byte-identical CLI reports and sample dumps", 60.0,
       criterion_determinism}};

  int failed = 0;
  for (const auto& criterion : criteria) {
    std::vector<std::string> failures;
    g_notes.clear();
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(failures);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds > criterion.limit_seconds) {
      std::ostringstream msg;
      msg << "took " << seconds << "s, limit " << criterion.limit_seconds
          << "s";
      failures.push_back(msg.str());
    }
    const bool pass = failures.empty();
    failed += pass ? 0 : 1;
    std::printf("criterion %d [%s] (%.2fs): %s\n", criterion.number,
                pass ? "PASS" : "FAIL", seconds, criterion.title.c_str());
    for (const auto& message : g_notes) {
      std::printf("    %s\n", message.c_str());
    }
    for (const auto& message : failures) {
      std::printf("    %s\n", message.c_str());
    }
  }
  return failed;
}
