#pragma once

// Reproduction harness: RBN connectivity sweeps, the ECA class survey,
// multiscale profiles and the statistics behind the boxplots.
//
// Every instance draws its randomness from a seed derived from
// (master seed, experiment id, instance index) alone, and results are stored
// by index, so outputs are identical for any worker count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infodyn/eca.hpp"
#include "infodyn/measures.hpp"
#include "infodyn/trajectory.hpp"

namespace infodyn {

struct SeedSchedule {
  std::uint64_t master_seed = 0;
};

/// Stable instance seed. For a fixed (master seed, experiment id) the map
/// index -> seed is injective.
std::uint64_t derive_seed(const SeedSchedule& schedule, std::string_view experiment_id,
                          std::uint64_t index);

/// Quantile of sorted data by linear interpolation between order statistics
/// (position p·(n−1), the "type 7" rule).
double quantile_sorted(std::span<const double> sorted, double p);

struct SummaryStats {
  double mean = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  /// Most extreme observations within 1.5·IQR of the quartiles.
  double whisker_low = 0.0;
  double whisker_high = 0.0;
  double min = 0.0;
  double max = 0.0;

  friend bool operator==(const SummaryStats&, const SummaryStats&) = default;
};

SummaryStats summarize(std::span<const double> values);

struct MeasureAggregate {
  std::size_t count = 0;
  SummaryStats emergence;
  SummaryStats self_organization;
  SummaryStats complexity;
  /// Present only when every input carries homeostasis.
  std::optional<SummaryStats> homeostasis;
};

/// Throws std::invalid_argument on an empty list.
MeasureAggregate aggregate(std::span<const MeasureSet> values);

struct InstanceRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  MeasureSet measures;
};

struct SweepResult {
  std::string experiment;
  /// Swept value: K for RBN sweeps, the rule number for ECA runs.
  double parameter = 0.0;
  int scale = 1;
  std::vector<InstanceRecord> instances;
  MeasureAggregate aggregate;
};

enum class Preset { paper, desk };
Preset parse_preset(std::string_view text);

struct RbnSweepConfig {
  std::size_t n = 100;
  std::vector<double> k_grid;
  std::size_t instances = 1000;
  std::size_t transient = 1000;
  std::size_t window = 1000;
  std::vector<int> scales{1, 2, 4, 8};
  std::uint64_t master_seed = 0;
  HomeostasisMode homeostasis = HomeostasisMode::last_pair;
};

struct EcaSurveyConfig {
  std::vector<int> rules;
  std::size_t n = 256;
  std::size_t instances = 50;
  std::size_t transient = 4096;
  std::size_t window = 4096;
  std::vector<int> scales{1, 2, 4, 8};
  std::uint64_t master_seed = 0;
  InitialCondition init = InitialCondition::random;
  Orientation orientation = Orientation::vertical;
  HomeostasisMode homeostasis = HomeostasisMode::last_pair;
};

/// K = 1.0, 1.2, ..., 5.0.
std::vector<double> default_k_grid();
/// Five class I, five class II, five class III and the four class IV rules.
std::vector<int> default_survey_rules();
std::vector<int> default_profile_rules();

RbnSweepConfig rbn_preset(Preset preset);
EcaSurveyConfig eca_preset(Preset preset);
EcaSurveyConfig profile_preset(Preset preset);

/// Experiment id of one sweep cell, e.g. "rbn:k=2.2" or "eca:rule=110".
std::string instance_experiment_id(std::string_view experiment, double parameter);

/// Results ordered by K, then scale.
std::vector<SweepResult> rbn_sweep(const RbnSweepConfig& config, unsigned threads = 1);

/// Results ordered by rule (in the given order), then scale.
std::vector<SweepResult> eca_class_survey(const EcaSurveyConfig& config, unsigned threads = 1,
                                          std::string_view experiment = "eca");

/// Which uncorrelated-homeostasis reference curve to attach to profiles.
enum class HomeostasisReference {
  /// 2^−b, the match probability of independent uniform symbols.
  inverse_alphabet,
  /// 1/(2b), an alternative curve kept for comparison with older plots.
  half_inverse_scale,
};

double homeostasis_reference(HomeostasisReference ref, int scale);

struct ProfileRow {
  int rule = 0;
  int scale = 1;
  double emergence = 0.0;
  double self_organization = 0.0;
  double complexity = 0.0;
  double homeostasis = 0.0;
  double homeostasis_reference = 0.0;
};

struct ProfileTable {
  std::vector<SweepResult> results;
  /// Mean measures per (rule, scale), same order as results.
  std::vector<ProfileRow> rows;
};

ProfileTable multiscale_profiles(const EcaSurveyConfig& config, unsigned threads = 1,
                                 HomeostasisReference ref = HomeostasisReference::inverse_alphabet);

}  // namespace infodyn
