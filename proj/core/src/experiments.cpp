#include "infodyn/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "infodyn/parallel.hpp"
#include "infodyn/rbn.hpp"
#include "infodyn/rng.hpp"

namespace infodyn {

namespace {

// FNV-1a over the id bytes.
std::uint64_t hash_id(std::string_view id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_parameter(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void check_scales(std::span<const int> scales, std::size_t window) {
  if (scales.empty()) throw std::invalid_argument("at least one scale required");
  for (int b : scales) {
    if (b < 1 || b > kMaxBitsPerSymbol) throw std::invalid_argument("invalid scale");
    if (window < 2 * static_cast<std::size_t>(b)) {
      throw std::invalid_argument("window too short for scale " + std::to_string(b));
    }
  }
}

// Collects per-instance measure sets [cell][instance][scale] into results
// ordered by cell, then scale.
std::vector<SweepResult> collect(std::string_view experiment, std::span<const double> parameters,
                                 std::span<const int> scales, std::size_t instances,
                                 const std::vector<std::vector<std::uint64_t>>& seeds,
                                 const std::vector<std::vector<std::vector<MeasureSet>>>& measured) {
  std::vector<SweepResult> out;
  out.reserve(parameters.size() * scales.size());
  for (std::size_t c = 0; c < parameters.size(); ++c) {
    for (std::size_t s = 0; s < scales.size(); ++s) {
      SweepResult r;
      r.experiment = std::string(experiment);
      r.parameter = parameters[c];
      r.scale = scales[s];
      std::vector<MeasureSet> values;
      values.reserve(instances);
      for (std::size_t i = 0; i < instances; ++i) {
        r.instances.push_back({i, seeds[c][i], measured[c][i][s]});
        values.push_back(measured[c][i][s]);
      }
      r.aggregate = aggregate(values);
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

std::uint64_t derive_seed(const SeedSchedule& schedule, std::string_view experiment_id,
                          std::uint64_t index) {
  const std::uint64_t base = mix64(schedule.master_seed ^ mix64(hash_id(experiment_id)));
  return mix64(base ^ index);
}

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty data");
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

SummaryStats summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("cannot summarize an empty list");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  SummaryStats s;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  s.median = quantile_sorted(sorted, 0.5);
  s.q1 = quantile_sorted(sorted, 0.25);
  s.q3 = quantile_sorted(sorted, 0.75);
  s.min = sorted.front();
  s.max = sorted.back();
  const double iqr = s.q3 - s.q1;
  const double lo_fence = s.q1 - 1.5 * iqr;
  const double hi_fence = s.q3 + 1.5 * iqr;
  s.whisker_low = *std::find_if(sorted.begin(), sorted.end(), [&](double v) { return v >= lo_fence; });
  s.whisker_high =
      *std::find_if(sorted.rbegin(), sorted.rend(), [&](double v) { return v <= hi_fence; });
  return s;
}

MeasureAggregate aggregate(std::span<const MeasureSet> values) {
  if (values.empty()) throw std::invalid_argument("cannot aggregate an empty list");
  std::vector<double> e, s, c, h;
  bool all_h = true;
  for (const auto& m : values) {
    e.push_back(m.emergence);
    s.push_back(m.self_organization);
    c.push_back(m.complexity);
    if (m.homeostasis) {
      h.push_back(*m.homeostasis);
    } else {
      all_h = false;
    }
  }
  MeasureAggregate a;
  a.count = values.size();
  a.emergence = summarize(e);
  a.self_organization = summarize(s);
  a.complexity = summarize(c);
  if (all_h) a.homeostasis = summarize(h);
  return a;
}

Preset parse_preset(std::string_view text) {
  if (text == "paper") return Preset::paper;
  if (text == "desk") return Preset::desk;
  throw std::invalid_argument("unknown preset '" + std::string(text) + "'");
}

std::vector<double> default_k_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(1.0 + 0.2 * i);
  return grid;
}

std::vector<int> default_survey_rules() {
  return {0, 8, 32, 40, 128, 1, 2, 3, 4, 5, 18, 22, 30, 45, 161, 41, 54, 106, 110};
}

std::vector<int> default_profile_rules() { return {0, 1, 110, 30}; }

RbnSweepConfig rbn_preset(Preset preset) {
  RbnSweepConfig c;
  c.k_grid = default_k_grid();
  if (preset == Preset::desk) {
    c.instances = 100;
    c.transient = 512;
    c.window = 512;
  }
  return c;
}

EcaSurveyConfig eca_preset(Preset preset) {
  EcaSurveyConfig c;
  c.rules = default_survey_rules();
  if (preset == Preset::desk) {
    c.transient = 1024;
    c.window = 1024;
  }
  return c;
}

EcaSurveyConfig profile_preset(Preset preset) {
  EcaSurveyConfig c = eca_preset(preset);
  c.rules = default_profile_rules();
  return c;
}

std::string instance_experiment_id(std::string_view experiment, double parameter) {
  const char* key = experiment == "rbn" ? "k" : "rule";
  return std::string(experiment) + ":" + key + "=" + format_parameter(parameter);
}

std::vector<SweepResult> rbn_sweep(const RbnSweepConfig& config, unsigned threads) {
  if (config.k_grid.empty()) throw std::invalid_argument("empty K grid");
  if (config.instances < 1) throw std::invalid_argument("instances must be at least 1");
  check_scales(config.scales, config.window);

  const std::size_t cells = config.k_grid.size();
  const std::size_t per = config.instances;
  const SeedSchedule schedule{config.master_seed};
  std::vector<std::vector<std::uint64_t>> seeds(cells, std::vector<std::uint64_t>(per));
  std::vector<RbnConfig> run_configs(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    const std::string id = instance_experiment_id("rbn", config.k_grid[c]);
    for (std::size_t i = 0; i < per; ++i) seeds[c][i] = derive_seed(schedule, id, i);
    run_configs[c] = RbnConfig{config.n, config.k_grid[c], config.transient, config.window, 0};
    run_configs[c].validate();
  }

  std::vector<std::vector<std::vector<MeasureSet>>> measured(
      cells, std::vector<std::vector<MeasureSet>>(per));
  parallel_for(cells * per, threads, [&](std::size_t task) {
    const std::size_t c = task / per;
    const std::size_t i = task % per;
    RbnConfig rc = run_configs[c];
    rc.seed = seeds[c][i];
    const Trajectory traj = run_rbn(rc);
    auto& out = measured[c][i];
    for (int b : config.scales) out.push_back(network_measures(traj, b, config.homeostasis));
  });
  return collect("rbn", config.k_grid, config.scales, per, seeds, measured);
}

std::vector<SweepResult> eca_class_survey(const EcaSurveyConfig& config, unsigned threads,
                                          std::string_view experiment) {
  if (config.rules.empty()) throw std::invalid_argument("empty rule list");
  if (config.instances < 1) throw std::invalid_argument("instances must be at least 1");
  check_scales(config.scales, config.window);

  const std::size_t cells = config.rules.size();
  const std::size_t per = config.instances;
  const SeedSchedule schedule{config.master_seed};
  std::vector<double> parameters(cells);
  std::vector<std::vector<std::uint64_t>> seeds(cells, std::vector<std::uint64_t>(per));
  for (std::size_t c = 0; c < cells; ++c) {
    EcaConfig probe;
    probe.rule = config.rules[c];
    probe.n = config.n;
    probe.window = config.window;
    probe.validate();
    parameters[c] = config.rules[c];
    const std::string id = instance_experiment_id(experiment, parameters[c]);
    for (std::size_t i = 0; i < per; ++i) seeds[c][i] = derive_seed(schedule, id, i);
  }

  std::vector<std::vector<std::vector<MeasureSet>>> measured(
      cells, std::vector<std::vector<MeasureSet>>(per));
  parallel_for(cells * per, threads, [&](std::size_t task) {
    const std::size_t c = task / per;
    const std::size_t i = task % per;
    EcaConfig ec;
    ec.rule = config.rules[c];
    ec.n = config.n;
    ec.init = config.init;
    ec.transient = config.transient;
    ec.window = config.window;
    ec.seed = seeds[c][i];
    ec.orientation = config.orientation;
    const Trajectory traj = run_eca(ec);
    auto& out = measured[c][i];
    for (int b : config.scales) {
      out.push_back(eca_measures(traj, b, config.orientation, config.homeostasis));
    }
  });
  return collect(experiment, parameters, config.scales, per, seeds, measured);
}

double homeostasis_reference(HomeostasisReference ref, int scale) {
  return ref == HomeostasisReference::inverse_alphabet ? uncorrelated_homeostasis(scale)
                                                       : half_inverse_scale_reference(scale);
}

ProfileTable multiscale_profiles(const EcaSurveyConfig& config, unsigned threads,
                                 HomeostasisReference ref) {
  ProfileTable table;
  table.results = eca_class_survey(config, threads, "profile");
  for (const auto& r : table.results) {
    ProfileRow row;
    row.rule = static_cast<int>(r.parameter);
    row.scale = r.scale;
    row.emergence = r.aggregate.emergence.mean;
    row.self_organization = r.aggregate.self_organization.mean;
    row.complexity = r.aggregate.complexity.mean;
    row.homeostasis = r.aggregate.homeostasis ? r.aggregate.homeostasis->mean : 0.0;
    row.homeostasis_reference = homeostasis_reference(ref, r.scale);
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace infodyn
