#pragma once

// Machine-readable reports for each command and the randomized verification
// suite. Every report is one JSON document plus a short human summary.
//
// Residual limits: each identity has a nominal limit that applies at the
// default tolerance 1e-10; a different tolerance scales all limits by
// tolerance / 1e-10.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "antilin/io.hpp"

namespace antilin {

inline constexpr double kDefaultTolerance = 1e-10;

class ResidualTable {
 public:
  explicit ResidualTable(double tolerance);

  /// Keeps the maximum per name. NaN residuals always fail. Non-gating rows
  /// are reported but never affect passed().
  void record(std::string_view name, double residual, double nominal, bool gating = true,
              long long trial = -1);

  bool passed() const;
  std::vector<std::string> failures() const;
  io::json to_json() const;
  std::string summary() const;

 private:
  struct Row {
    std::string name;
    double residual = 0.0;
    double nominal = 0.0;
    bool gating = true;
    long long trial = -1;
  };
  Row* find(std::string_view name);
  double limit(const Row& row) const { return row.nominal * scale_; }
  bool row_passed(const Row& row) const;

  std::vector<Row> rows_;
  double scale_;
};

struct Report {
  io::json body;
  std::string summary;
  bool passed = true;
};

/// command is one of epr, teleport, luders, chain, modular. Input errors
/// surface as antilin::Error; residual failures only set passed = false.
Report run_report(std::string_view command, const io::json& input, double tolerance);

Report report_epr(const io::json& input, double tolerance);
Report report_teleport(const io::json& input, double tolerance);
Report report_luders(const io::json& input, double tolerance);
Report report_chain(const io::json& input, double tolerance);
Report report_modular(const io::json& input, double tolerance);

struct VerifyConfig {
  std::uint64_t seed = 42;
  std::vector<Index> dims{2, 3, 4};
  double tolerance = kDefaultTolerance;
  int trials = 100;
  int threads = 1;
};

/// Runs every identity suite over `trials` seeded random instances. Trial k
/// draws from Rng::stream(seed, k), so results do not depend on `threads`.
Report verify(const VerifyConfig& config);

}  // namespace antilin
