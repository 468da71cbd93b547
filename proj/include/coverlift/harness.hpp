#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coverlift/serialize.hpp"

namespace coverlift {

/// A <=_K B  means  A <= K B + K.
bool approx_leq(double a, double b, double k);
bool approx_equiv(double a, double b, double k);

struct ExperimentConfig {
  std::vector<Surface> surfaces{{0, 5}, {1, 2}};
  std::vector<int> degrees{2, 3};
  int samples = 50;  // per (surface, degree) cell
  int min_steps = 0;
  int max_steps = 2;
  int min_power = 1;
  int max_power = 2;
  Weight pool_weight = 2;  // sampled curves start from this universe
  DistanceBudget base_budget{3, 1, 8};
  DistanceBudget cover_budget{1, 0, 0};
  int max_degree = 6;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument on an unusable configuration.
  void check() const;
};

Json to_json(const ExperimentConfig& c);
/// Unspecified fields keep their defaults.
ExperimentConfig config_from_json(const Json& j);

struct DistortionRecord {
  std::string id;  // "<genus>_<punctures>/<degree>/<index>"
  int genus = 0;
  int punctures = 0;
  int degree = 1;
  int xi_total = 0;
  std::string a, b, alpha, beta;
  int components_a = 0, components_b = 0;
  int ds_lower = 0;
  std::optional<int> ds_upper;
  int dsig_lower = 0;
  std::optional<int> dsig_upper;
  bool lifted_path_ok = false;     // preferred lift of the base witness verifies
  bool all_components_ok = false;  // and so does every endpoint substitution

  bool ds_exact() const { return ds_upper && *ds_upper == ds_lower; }
  bool dsig_exact() const { return dsig_upper && *dsig_upper == dsig_lower; }
  bool both_exact() const { return ds_exact() && dsig_exact(); }
  /// Hard invariant: lifting never lengthens an exact distance.
  bool violates() const;

  friend bool operator==(const DistortionRecord&, const DistortionRecord&) = default;
};

struct DistortionGroup {
  int xi_total = 0;
  int degree = 0;
  int records = 0;
  int exact_records = 0;
  int lemma_checked = 0;
  int lemma_passed = 0;
  int violations = 0;
  double max_ratio = 0;  // d_S / max(d_Σ, 1) over exact records
  // K̂ = k_num / k_den, the least K with d_S <= K d_Σ + K on exact records.
  int k_num = 0;
  int k_den = 1;
  double k_hat() const { return static_cast<double>(k_num) / k_den; }
};

struct DistortionReport {
  std::string mode;  // "qie" or "lemma-simp"
  ExperimentConfig config;
  std::vector<DistortionRecord> records;
  std::vector<DistortionGroup> groups;
  int skipped = 0;  // base distance not exact within budget
  int violations = 0;
  int lemma_failures = 0;

  bool ok() const { return violations == 0 && lemma_failures == 0; }
};

/// Groups by (ξ(Σ), deg P) in ascending order.
std::vector<DistortionGroup> summarize(const std::vector<DistortionRecord>& records);

/// Lemma check only: lifts each exact base witness and verifies it upstairs.
DistortionReport run_lemma_simp(const ExperimentConfig& config);
/// Lemma check plus certified distances upstairs and the K̂ fit.
DistortionReport run_qie(const ExperimentConfig& config);

Json to_json(const DistortionReport& r);
std::string records_to_csv(const std::vector<DistortionRecord>& records);
std::vector<DistortionRecord> records_from_csv(const std::string& csv);
Json record_to_json(const DistortionRecord& r);
DistortionRecord record_from_json(const Json& j);

/// Writes report.json and records.csv into `dir` (created if needed).
void emit(const DistortionReport& r, const std::string& dir);

}  // namespace coverlift
