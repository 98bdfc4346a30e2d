#include "infodyn/measures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace infodyn {

namespace {

Symbol alphabet_mask(int bits) { return (Symbol{1} << bits) - 1; }

void check_bits(int bits) {
  if (bits < 1 || bits > kMaxBitsPerSymbol) {
    throw std::invalid_argument("bits per symbol must be in [1, " +
                                std::to_string(kMaxBitsPerSymbol) + "], got " +
                                std::to_string(bits));
  }
}

void require_non_empty(const SymbolSequence& seq) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
}

void require_finite_non_negative(double v, const char* what) {
  if (!std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument(std::string(what) + " must be finite and non-negative");
  }
}

// Symbol counts in ascending symbol order. Small alphabets use a dense table;
// wide ones fall back to sorting.
std::vector<std::pair<Symbol, std::size_t>> count_symbols(const SymbolSequence& seq) {
  std::vector<std::pair<Symbol, std::size_t>> counts;
  const auto& s = seq.symbols();
  if (seq.bits_per_symbol() <= 16) {
    std::vector<std::size_t> dense(std::size_t{1} << seq.bits_per_symbol(), 0);
    for (Symbol x : s) ++dense[x];
    for (std::size_t x = 0; x < dense.size(); ++x) {
      if (dense[x] != 0) counts.emplace_back(x, dense[x]);
    }
    return counts;
  }
  std::vector<Symbol> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    counts.emplace_back(sorted[i], j - i);
    i = j;
  }
  return counts;
}

}  // namespace

SymbolSequence::SymbolSequence(std::vector<Symbol> symbols, int bits_per_symbol)
    : symbols_(std::move(symbols)), bits_(bits_per_symbol) {
  check_bits(bits_);
  const Symbol mask = alphabet_mask(bits_);
  for (Symbol x : symbols_) {
    if ((x & ~mask) != 0) {
      throw std::invalid_argument("symbol " + std::to_string(x) + " does not fit in " +
                                  std::to_string(bits_) + " bits");
    }
  }
}

SymbolSequence SymbolSequence::from_bits(std::string_view text) {
  std::vector<Symbol> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<Symbol>(c - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument(std::string("invalid character in bit string: '") + c + "'");
    }
  }
  return SymbolSequence(std::move(bits), 1);
}

SymbolSequence SymbolSequence::from_bits(std::span<const std::uint8_t> bits) {
  std::vector<Symbol> out(bits.begin(), bits.end());
  return SymbolSequence(std::move(out), 1);
}

std::string SymbolSequence::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i != 0) os << ' ';
    os << symbols_[i];
  }
  return os.str();
}

ProbabilityDistribution estimate_distribution(const SymbolSequence& seq) {
  require_non_empty(seq);
  ProbabilityDistribution dist;
  const double n = static_cast<double>(seq.size());
  for (const auto& [symbol, count] : count_symbols(seq)) {
    dist.probabilities.emplace(symbol, static_cast<double>(count) / n);
  }
  return dist;
}

double shannon_information(const SymbolSequence& seq) {
  require_non_empty(seq);
  const double n = static_cast<double>(seq.size());
  double info = 0.0;
  for (const auto& [symbol, count] : count_symbols(seq)) {
    const double p = static_cast<double>(count) / n;
    info -= p * std::log2(p);
  }
  // Rounding can leave -0.0 or a hair above b.
  return std::clamp(info, 0.0, static_cast<double>(seq.bits_per_symbol()));
}

SymbolSequence rescale(const SymbolSequence& bits, int target_bits) {
  if (bits.bits_per_symbol() != 1) {
    throw std::invalid_argument("rescale expects a binary sequence");
  }
  check_bits(target_bits);
  const std::size_t groups = bits.size() / static_cast<std::size_t>(target_bits);
  if (groups == 0) throw std::invalid_argument("sequence too short for scale");
  std::vector<Symbol> out(groups, 0);
  const auto& b = bits.symbols();
  for (std::size_t g = 0; g < groups; ++g) {
    Symbol v = 0;
    const std::size_t base = g * static_cast<std::size_t>(target_bits);
    for (int j = 0; j < target_bits; ++j) v = (v << 1) | b[base + j];
    out[g] = v;
  }
  return SymbolSequence(std::move(out), target_bits);
}

SymbolSequence expand_to_bits(const SymbolSequence& seq) {
  const int b = seq.bits_per_symbol();
  std::vector<Symbol> bits;
  bits.reserve(seq.size() * static_cast<std::size_t>(b));
  for (Symbol x : seq.symbols()) {
    for (int j = b - 1; j >= 0; --j) bits.push_back((x >> j) & 1U);
  }
  return SymbolSequence(std::move(bits), 1);
}

double normalized_information(const SymbolSequence& seq) {
  return shannon_information(seq) / static_cast<double>(seq.bits_per_symbol());
}

double emergence(double i_in, double i_out) {
  require_finite_non_negative(i_in, "input information");
  require_finite_non_negative(i_out, "output information");
  if (i_in == 0.0) throw std::domain_error("undefined emergence: zero input information");
  return i_out / i_in;
}

double emergence_simplified(const SymbolSequence& seq) { return normalized_information(seq); }

double self_organization(double i_in, double i_out) {
  require_finite_non_negative(i_in, "input information");
  require_finite_non_negative(i_out, "output information");
  return i_in - i_out;
}

double self_organization_simplified(const SymbolSequence& seq) {
  return 1.0 - normalized_information(seq);
}

double complexity(double e, double s) {
  if (!std::isfinite(e) || !std::isfinite(s)) {
    throw std::invalid_argument("complexity inputs must be finite");
  }
  return e * s;
}

namespace detail {
double complexity_from_information(double i_out, double normalization) {
  return normalization * i_out * (1.0 - i_out);
}
}  // namespace detail

double complexity_from_information(double i_out) {
  return detail::complexity_from_information(i_out, kComplexityNormalization);
}

double complexity_simplified(const SymbolSequence& seq) {
  return complexity_from_information(normalized_information(seq));
}

double hamming_distance(const SymbolSequence& a, const SymbolSequence& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming distance: length mismatch");
  if (a.bits_per_symbol() != b.bits_per_symbol()) {
    throw std::invalid_argument("hamming distance: scale mismatch");
  }
  if (a.empty()) throw std::invalid_argument("empty sequence");
  std::size_t differ = 0;
  for (std::size_t i = 0; i < a.size(); ++i) differ += a[i] != b[i] ? 1 : 0;
  return static_cast<double>(differ) / static_cast<double>(a.size());
}

double homeostasis(const SymbolSequence& a, const SymbolSequence& b) {
  return 1.0 - hamming_distance(a, b);
}

MeasureSet simplified_measures(const SymbolSequence& seq) {
  const double i_out = normalized_information(seq);
  MeasureSet m;
  m.emergence = i_out;
  m.self_organization = 1.0 - i_out;
  m.complexity = complexity_from_information(i_out);
  m.scale = seq.bits_per_symbol();
  return m;
}

std::vector<ScaleProfileEntry> multiscale_profile(const SymbolSequence& bits,
                                                  std::span<const int> scales) {
  if (bits.bits_per_symbol() != 1) {
    throw std::invalid_argument("multiscale profile expects a binary sequence");
  }
  std::vector<ScaleProfileEntry> out;
  out.reserve(scales.size());
  for (int b : scales) {
    ScaleProfileEntry entry;
    entry.scale = b;
    try {
      const SymbolSequence scaled = rescale(bits, b);
      MeasureSet m = simplified_measures(scaled);
      entry.normalized_information = m.emergence;
      entry.measures = m;
    } catch (const std::invalid_argument& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

double uncorrelated_homeostasis(int scale) {
  check_bits(scale);
  return std::ldexp(1.0, -scale);
}

double half_inverse_scale_reference(int scale) {
  check_bits(scale);
  return 1.0 / (2.0 * scale);
}

}  // namespace infodyn
