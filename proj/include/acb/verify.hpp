#ifndef ACB_VERIFY_HPP_
#define ACB_VERIFY_HPP_

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "acb/core.hpp"

namespace acb {

struct CheckResult {
  std::string description;
  std::string expected;
  std::string observed;
  bool pass;
};

struct VerificationReport {
  std::string id;
  std::string title;
  std::vector<CheckResult> checks;
  bool overall;
  double runtime_seconds;  // not serialized: reports must be byte-stable
};

struct VerifyOptions {
  long long samples = 100000;
  std::uint64_t seed = 42;
  int grid = 60;  // rational-grid denominator for the payoff box scan
};

// Claim ids: 2.1, 3.4, 4.1, 5.1, 5.2, 5.3, 5.4, 5.5 (see the README table
// for the statement each id verifies).
std::vector<std::string> claim_ids();
std::string claim_title(const std::string& id);
VerificationReport verify_claim(const std::string& id,
                                const VerifyOptions& options = {});

std::string report_to_text(const VerificationReport& report);
nlohmann::json report_to_json(const VerificationReport& report);

enum class Curve { W2, W3, Marginals };

// CSV with header; rows at t = j/points for j = 0..points. Rationals are
// rendered as 12-significant-digit decimals plus exact "p/q" columns.
void emit_plot_data(Curve curve, int points, const std::string& out_path);

// Raw sample dump: three exact rational columns x1,x2,x3.
std::string samples_to_csv(const std::vector<Allocation>& samples);

void write_file_atomically(const std::string& path,
                           const std::string& contents);

}  // namespace acb

#endif  // ACB_VERIFY_HPP_
