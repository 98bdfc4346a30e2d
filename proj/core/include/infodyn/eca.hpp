#pragma once

// Elementary cellular automata on a periodic ring, Wolfram rule numbering.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "infodyn/measures.hpp"
#include "infodyn/rbn.hpp"
#include "infodyn/trajectory.hpp"

namespace infodyn {

class EcaRule {
 public:
  /// Throws std::out_of_range unless 0 <= number <= 255.
  explicit EcaRule(int number);

  [[nodiscard]] int number() const noexcept { return number_; }

  /// Output for a neighborhood read as the 3-bit number (left, center, right).
  [[nodiscard]] bool output(unsigned neighborhood) const { return table_.at(neighborhood) != 0; }
  [[nodiscard]] const std::array<std::uint8_t, 8>& table() const noexcept { return table_; }

  friend bool operator==(const EcaRule&, const EcaRule&) = default;

 private:
  int number_ = 0;
  std::array<std::uint8_t, 8> table_{};
};

EcaRule rule_table(int number);

enum class InitialCondition { random, single_cell };

/// Direction along which a cell's series is read off the space-time diagram.
enum class Orientation {
  /// The cell's column over time.
  vertical,
  /// One full row (a time slice); the cell index selects the time step.
  horizontal,
  /// state[t][(cell + t) mod n].
  diagonal,
  /// state[t][(cell − t) mod n], the mirror diagonal.
  antidiagonal,
};

std::string_view to_string(InitialCondition init);
std::string_view to_string(Orientation orientation);
InitialCondition parse_initial_condition(std::string_view text);
Orientation parse_orientation(std::string_view text);

struct EcaConfig {
  int rule = 110;
  std::size_t n = 256;
  InitialCondition init = InitialCondition::random;
  std::size_t transient = 4096;
  std::size_t window = 4096;
  std::uint64_t seed = 0;
  Orientation orientation = Orientation::vertical;

  void validate() const;
};

/// One synchronous update with periodic boundary. Bit-parallel over words.
BitState eca_step(const BitState& state, const EcaRule& rule);

/// Reference single-cell-at-a-time update, used to cross-check eca_step.
BitState eca_step_naive(const BitState& state, const EcaRule& rule);

/// Random (fair coin per cell, seeded) or a single 1 at cell n/2.
BitState eca_initial_state(const EcaConfig& config);

Trajectory run_eca(const EcaRule& rule, BitState initial, std::size_t transient,
                   std::size_t window);
Trajectory run_eca(const EcaConfig& config);

/// Series of one cell (or, for horizontal, one time step) in the given
/// orientation. b = 1.
SymbolSequence eca_series(const Trajectory& traj, std::size_t cell, Orientation orientation);

/// E, S, C pooled over all series of the orientation; H from the last two
/// vertical macro-states.
MeasureSet eca_measures(const Trajectory& traj, int scale,
                        Orientation orientation = Orientation::vertical,
                        HomeostasisMode mode = HomeostasisMode::last_pair);

/// The same automaton written as a Boolean network: node i reads
/// (i−1, i, i+1) mod n and every node shares the rule table.
BooleanNetwork equivalent_network(const EcaRule& rule, const BitState& initial);

}  // namespace infodyn
