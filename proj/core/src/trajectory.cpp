#include "infodyn/trajectory.hpp"

#include <bit>
#include <stdexcept>

namespace infodyn {

BitState BitState::from_string(std::string_view bits) {
  BitState s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      s.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("invalid character in bit state");
    }
  }
  return s;
}

std::size_t BitState::count() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::string BitState::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

std::size_t differing_bits(const BitState& a, const BitState& b) {
  if (a.size() != b.size()) throw std::invalid_argument("state width mismatch");
  std::size_t c = 0;
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  }
  return c;
}

std::string trajectory_to_csv(const Trajectory& traj) {
  std::string out;
  out.reserve((traj.states.size() + 1) * traj.width * 2 + 16);
  for (std::size_t i = 0; i < traj.width; ++i) {
    if (i != 0) out += ',';
    out += 'n';
    out += std::to_string(i);
  }
  out += '\n';
  for (const auto& s : traj.states) {
    for (std::size_t i = 0; i < traj.width; ++i) {
      if (i != 0) out += ',';
      out += s.get(i) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string trajectory_to_pbm(const Trajectory& traj) {
  std::string out = "P1\n" + std::to_string(traj.width) + " " +
                    std::to_string(traj.states.size()) + "\n";
  for (const auto& s : traj.states) {
    for (std::size_t i = 0; i < traj.width; ++i) {
      if (i != 0) out += ' ';
      out += s.get(i) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

SymbolSequence node_series(const Trajectory& traj, std::size_t node) {
  if (node >= traj.width) throw std::out_of_range("node index out of range");
  std::vector<Symbol> bits(traj.states.size());
  for (std::size_t t = 0; t < traj.states.size(); ++t) bits[t] = traj.states[t].get(node) ? 1 : 0;
  return SymbolSequence(std::move(bits), 1);
}

namespace {

// Fraction of nodes whose b-bit symbol differs between macro-times p and q.
double macro_distance(const Trajectory& traj, std::size_t b, std::size_t p, std::size_t q) {
  const std::size_t words = BitState::word_count(traj.width);
  std::vector<BitState::Word> diff(words, 0);
  for (std::size_t j = 0; j < b; ++j) {
    auto wp = traj.states[p * b + j].words();
    auto wq = traj.states[q * b + j].words();
    for (std::size_t w = 0; w < words; ++w) diff[w] |= wp[w] ^ wq[w];
  }
  std::size_t c = 0;
  for (auto w : diff) c += static_cast<std::size_t>(std::popcount(w));
  return static_cast<double>(c) / static_cast<double>(traj.width);
}

}  // namespace

double macro_state_homeostasis(const Trajectory& traj, int scale, HomeostasisMode mode) {
  if (scale < 1 || scale > kMaxBitsPerSymbol) throw std::invalid_argument("invalid scale");
  if (traj.width == 0) throw std::invalid_argument("empty trajectory");
  const auto b = static_cast<std::size_t>(scale);
  const std::size_t macro_len = traj.states.size() / b;
  if (macro_len < 2) throw std::invalid_argument("window too short for scale");
  if (mode == HomeostasisMode::last_pair) {
    return 1.0 - macro_distance(traj, b, macro_len - 2, macro_len - 1);
  }
  double sum = 0.0;
  for (std::size_t tau = 0; tau + 1 < macro_len; ++tau) {
    sum += 1.0 - macro_distance(traj, b, tau, tau + 1);
  }
  return sum / static_cast<double>(macro_len - 1);
}

MeasureSet pooled_series_measures(std::span<const SymbolSequence> series, int scale) {
  if (series.empty()) throw std::invalid_argument("no series to measure");
  double sum = 0.0;
  for (const auto& s : series) sum += normalized_information(rescale(s, scale));
  const double i_out = sum / static_cast<double>(series.size());
  MeasureSet m;
  m.emergence = i_out;
  m.self_organization = 1.0 - i_out;
  m.complexity = complexity_from_information(i_out);
  m.scale = scale;
  return m;
}

}  // namespace infodyn
