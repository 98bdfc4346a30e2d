#pragma once

// Information measures over discrete symbol sequences: Shannon information,
// multiscale rescaling of bit strings, and the emergence / self-organization /
// complexity / homeostasis quartet.
//
// All functions here are pure. Probabilities are plug-in (empirical
// frequency) estimates, logarithms are base 2 and 0·log 0 is taken as 0.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace infodyn {

using Symbol = std::uint64_t;

/// Largest supported symbol width in bits.
inline constexpr int kMaxBitsPerSymbol = 63;

/// Normalizing constant of the simplified complexity, bounding C to [0,1]
/// when information is normalized to [0,1].
inline constexpr double kComplexityNormalization = 4.0;

/// A finite string over the alphabet {0 .. 2^b - 1}.
class SymbolSequence {
 public:
  SymbolSequence() = default;

  /// Throws std::invalid_argument if b is out of range or any symbol does
  /// not fit in b bits.
  SymbolSequence(std::vector<Symbol> symbols, int bits_per_symbol);

  /// Binary sequence from a string of '0'/'1' characters. Whitespace is
  /// skipped; anything else throws.
  static SymbolSequence from_bits(std::string_view text);
  static SymbolSequence from_bits(std::span<const std::uint8_t> bits);

  [[nodiscard]] const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  [[nodiscard]] int bits_per_symbol() const noexcept { return bits_; }
  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
  [[nodiscard]] Symbol operator[](std::size_t i) const { return symbols_[i]; }

  /// Space-separated decimal symbols, e.g. "8 161 200 200".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;

 private:
  std::vector<Symbol> symbols_;
  int bits_ = 1;
};

/// Empirical symbol frequencies; absent symbols are omitted.
struct ProbabilityDistribution {
  std::map<Symbol, double> probabilities;
};

/// E, S, C and (when paired states are available) H at one scale.
struct MeasureSet {
  double emergence = 0.0;
  double self_organization = 0.0;
  double complexity = 0.0;
  std::optional<double> homeostasis;
  int scale = 1;

  friend bool operator==(const MeasureSet&, const MeasureSet&) = default;
};

ProbabilityDistribution estimate_distribution(const SymbolSequence& seq);

/// Shannon information in bits, in [0, b].
double shannon_information(const SymbolSequence& seq);

/// Groups `target_bits` consecutive bits (MSB first) into one symbol. The
/// trailing remainder is dropped.
SymbolSequence rescale(const SymbolSequence& bits, int target_bits);

/// Inverse of rescale on the retained prefix: each symbol back to b bits.
SymbolSequence expand_to_bits(const SymbolSequence& seq);

/// Shannon information divided by the symbol width b, in [0, 1].
double normalized_information(const SymbolSequence& seq);

double emergence(double i_in, double i_out);
double emergence_simplified(const SymbolSequence& seq);

double self_organization(double i_in, double i_out);
double self_organization_simplified(const SymbolSequence& seq);

double complexity(double e, double s);
/// a·I·(1 − I) with a = kComplexityNormalization.
double complexity_from_information(double i_out);
double complexity_simplified(const SymbolSequence& seq);

/// Fraction of positions holding different symbols.
double hamming_distance(const SymbolSequence& a, const SymbolSequence& b);
double homeostasis(const SymbolSequence& a, const SymbolSequence& b);

/// Simplified E, S, C of one sequence (homeostasis left empty).
MeasureSet simplified_measures(const SymbolSequence& seq);

struct ScaleProfileEntry {
  int scale = 1;
  /// Empty when the input is shorter than the scale.
  std::optional<double> normalized_information;
  std::optional<MeasureSet> measures;
  std::string error;
};

/// Rescales a bit string to each scale and computes simplified E, S, C.
/// Scales the input is too short for are reported with an error message
/// instead of aborting the whole profile.
std::vector<ScaleProfileEntry> multiscale_profile(const SymbolSequence& bits,
                                                  std::span<const int> scales);

/// Expected homeostasis of two uncorrelated uniform base-2^b states.
double uncorrelated_homeostasis(int scale);
/// The 1/(2b) alternative reference curve.
double half_inverse_scale_reference(int scale);

namespace detail {
double complexity_from_information(double i_out, double normalization);
}  // namespace detail

}  // namespace infodyn
