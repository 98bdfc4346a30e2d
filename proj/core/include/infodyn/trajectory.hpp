#pragma once

// Bit-packed states of a discrete Boolean system and the recorded trajectory
// of a run, plus the per-node measurement pipeline shared by the RBN and ECA
// engines.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infodyn/measures.hpp"

namespace infodyn {

/// Fixed-width bit vector. Bits past size() in the last word are kept zero.
class BitState {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitState() = default;
  explicit BitState(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  /// From a '0'/'1' string, cell 0 first.
  static BitState from_string(std::string_view bits);

  [[nodiscard]] std::size_t size() const noexcept { return size_; }

  [[nodiscard]] bool get(std::size_t i) const {
    return ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0;
  }
  void set(std::size_t i, bool value) {
    const Word bit = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= bit;
    } else {
      words_[i / kWordBits] &= ~bit;
    }
  }

  [[nodiscard]] std::span<const Word> words() const noexcept { return words_; }
  [[nodiscard]] std::span<Word> words() noexcept { return words_; }

  /// Mask of the valid bits in the last word.
  [[nodiscard]] Word tail_mask() const noexcept {
    const std::size_t r = size_ % kWordBits;
    return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
  }
  void clear_tail() noexcept {
    if (!words_.empty()) words_.back() &= tail_mask();
  }

  [[nodiscard]] std::size_t count() const noexcept;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BitState&, const BitState&) = default;

  static std::size_t word_count(std::size_t bits) noexcept {
    return (bits + kWordBits - 1) / kWordBits;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Number of positions at which two equal-width states differ.
std::size_t differing_bits(const BitState& a, const BitState& b);

/// Recorded observation window of a run. Transient states are not kept.
struct Trajectory {
  std::size_t width = 0;
  std::size_t transient_length = 0;
  std::vector<BitState> states;

  [[nodiscard]] std::size_t length() const noexcept { return states.size(); }
};

/// Rows are time steps, columns are nodes; header row "n0,n1,...".
std::string trajectory_to_csv(const Trajectory& traj);

/// Plain PBM (P1) bitmap, one row per time step; 1 is black.
std::string trajectory_to_pbm(const Trajectory& traj);

/// Time series of one node (column of the trajectory), b = 1.
SymbolSequence node_series(const Trajectory& traj, std::size_t node);

/// How homeostasis is read off a trajectory.
enum class HomeostasisMode {
  /// 1 − d between the last two macro-states.
  last_pair,
  /// Mean of 1 − d over all successive macro-state pairs. Noise reduction
  /// only; not the reference protocol.
  all_pairs,
};

/// Homeostasis of the per-node macro-states at `scale`: the macro-state at
/// macro-time τ holds, for every node, the b-bit symbol formed by its bits at
/// times τb .. τb+b−1.
double macro_state_homeostasis(const Trajectory& traj, int scale,
                               HomeostasisMode mode = HomeostasisMode::last_pair);

/// Network-level simplified E, S, C. Every binary series is rescaled to
/// `scale`; the output information of the network is the equal-weight mean of
/// the per-series normalized information, and E, S, C follow from it.
MeasureSet pooled_series_measures(std::span<const SymbolSequence> series, int scale);

}  // namespace infodyn
