#pragma once

// Random Boolean networks: generation, synchronous update, trajectories and
// network-level measures.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infodyn/measures.hpp"
#include "infodyn/rng.hpp"
#include "infodyn/trajectory.hpp"

namespace infodyn {

/// Lookup tables grow as 2^in-degree; in-degrees above this are rejected.
inline constexpr std::size_t kMaxInDegree = 20;

struct RbnConfig {
  std::size_t n = 100;
  /// Mean in-degree; fractional values mix floor(k) and ceil(k) per node.
  double k = 2.0;
  std::size_t transient = 1000;
  std::size_t window = 1000;
  std::uint64_t seed = 0;

  void validate() const;
};

class BooleanNetwork {
 public:
  BooleanNetwork() = default;

  /// Validates topology and table sizes. The first listed input of a node is
  /// the most significant bit of its table index.
  BooleanNetwork(std::vector<std::vector<std::size_t>> inputs,
                 std::vector<std::vector<std::uint8_t>> tables, BitState state);

  [[nodiscard]] std::size_t size() const noexcept { return inputs_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& inputs(std::size_t node) const {
    return inputs_.at(node);
  }
  [[nodiscard]] const std::vector<std::uint8_t>& table(std::size_t node) const {
    return tables_.at(node);
  }
  [[nodiscard]] const BitState& state() const noexcept { return state_; }
  void set_state(BitState state);

  [[nodiscard]] double mean_in_degree() const noexcept;

  /// Synchronous successor of the current state.
  [[nodiscard]] BitState next_state() const;
  void step() { state_ = next_state(); }

  /// Topology and tables only; states are not compared.
  [[nodiscard]] bool same_structure(const BooleanNetwork& other) const {
    return inputs_ == other.inputs_ && tables_ == other.tables_;
  }

  friend bool operator==(const BooleanNetwork&, const BooleanNetwork&) = default;

 private:
  std::vector<std::vector<std::size_t>> inputs_;
  std::vector<std::vector<std::uint8_t>> tables_;
  BitState state_;
};

/// Draws topology, tables (fair coins) and a uniform initial state from `rng`.
BooleanNetwork generate_rbn(const RbnConfig& config, Rng& rng);
/// Same, with the stream seeded from config.seed.
BooleanNetwork generate_rbn(const RbnConfig& config);

BitState rbn_step(const BooleanNetwork& net);

/// Advances `net` through `transient` steps, then records `window` states
/// (the first recorded state is the one reached after the transient).
Trajectory run_network(BooleanNetwork& net, std::size_t transient, std::size_t window);

Trajectory run_rbn(const RbnConfig& config);

/// E, S, C pooled over node series at `scale`, and H from the last two
/// macro-states (or all pairs, see HomeostasisMode).
MeasureSet network_measures(const Trajectory& traj, int scale,
                            HomeostasisMode mode = HomeostasisMode::last_pair);

/// Text form: "rbn n=<N>" then one "i: inputs=<a,b,...> table=<bits>" line per
/// node, table entries in index order.
std::string serialize_network(const BooleanNetwork& net);
/// Parses serialize_network output. The state is all zeros.
BooleanNetwork parse_network(std::string_view text);

}  // namespace infodyn
