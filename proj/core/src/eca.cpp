#include "infodyn/eca.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "infodyn/rng.hpp"

namespace infodyn {

EcaRule::EcaRule(int number) : number_(number) {
  if (number < 0 || number > 255) {
    throw std::out_of_range("rule number must be in 0..255, got " + std::to_string(number));
  }
  for (unsigned k = 0; k < 8; ++k) table_[k] = static_cast<std::uint8_t>((number >> k) & 1);
}

EcaRule rule_table(int number) { return EcaRule(number); }

std::string_view to_string(InitialCondition init) {
  return init == InitialCondition::random ? "random" : "single_cell";
}

std::string_view to_string(Orientation orientation) {
  switch (orientation) {
    case Orientation::vertical: return "vertical";
    case Orientation::horizontal: return "horizontal";
    case Orientation::diagonal: return "diagonal";
    case Orientation::antidiagonal: return "antidiagonal";
  }
  return "vertical";
}

InitialCondition parse_initial_condition(std::string_view text) {
  if (text == "random") return InitialCondition::random;
  if (text == "single_cell") return InitialCondition::single_cell;
  throw std::invalid_argument("unknown initial condition '" + std::string(text) + "'");
}

Orientation parse_orientation(std::string_view text) {
  if (text == "vertical") return Orientation::vertical;
  if (text == "horizontal") return Orientation::horizontal;
  if (text == "diagonal") return Orientation::diagonal;
  if (text == "antidiagonal") return Orientation::antidiagonal;
  throw std::invalid_argument("unknown orientation '" + std::string(text) + "'");
}

void EcaConfig::validate() const {
  if (rule < 0 || rule > 255) throw std::out_of_range("rule number must be in 0..255");
  if (n < 3) throw std::invalid_argument("eca: n must be at least 3");
  if (window < 2) throw std::invalid_argument("eca: window must be at least 2");
}

BitState eca_step(const BitState& state, const EcaRule& rule) {
  using Word = BitState::Word;
  const std::size_t n = state.size();
  if (n == 0) return state;
  const auto c = state.words();
  const std::size_t words = c.size();
  const std::size_t last = n - 1;
  const Word top = (c[last / 64] >> (last % 64)) & 1U;
  const Word bottom = c[0] & 1U;

  // left[i] = s[i-1], right[i] = s[i+1], indices mod n.
  std::vector<Word> left(words), right(words);
  for (std::size_t w = 0; w < words; ++w) {
    left[w] = (c[w] << 1) | (w > 0 ? c[w - 1] >> 63 : top);
    right[w] = (c[w] >> 1) | (w + 1 < words ? c[w + 1] << 63 : 0);
  }
  right[last / 64] = (right[last / 64] & ~(Word{1} << (last % 64))) | (bottom << (last % 64));

  BitState next(n);
  auto out = next.words();
  const auto& table = rule.table();
  for (std::size_t w = 0; w < words; ++w) {
    Word acc = 0;
    for (unsigned k = 0; k < 8; ++k) {
      if (table[k] == 0) continue;
      const Word l = (k & 4U) ? left[w] : ~left[w];
      const Word m = (k & 2U) ? c[w] : ~c[w];
      const Word r = (k & 1U) ? right[w] : ~right[w];
      acc |= l & m & r;
    }
    out[w] = acc;
  }
  next.clear_tail();
  return next;
}

BitState eca_step_naive(const BitState& state, const EcaRule& rule) {
  const std::size_t n = state.size();
  BitState next(n);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned l = state.get((i + n - 1) % n) ? 1U : 0U;
    const unsigned m = state.get(i) ? 1U : 0U;
    const unsigned r = state.get((i + 1) % n) ? 1U : 0U;
    next.set(i, rule.output((l << 2) | (m << 1) | r));
  }
  return next;
}

BitState eca_initial_state(const EcaConfig& config) {
  config.validate();
  BitState s(config.n);
  if (config.init == InitialCondition::single_cell) {
    s.set(config.n / 2, true);
    return s;
  }
  Rng rng(config.seed);
  for (std::size_t i = 0; i < config.n; ++i) s.set(i, rng.coin());
  return s;
}

Trajectory run_eca(const EcaRule& rule, BitState initial, std::size_t transient,
                   std::size_t window) {
  BitState state = std::move(initial);
  for (std::size_t t = 0; t < transient; ++t) state = eca_step(state, rule);
  Trajectory traj;
  traj.width = state.size();
  traj.transient_length = transient;
  traj.states.reserve(window);
  for (std::size_t t = 0; t < window; ++t) {
    if (t != 0) state = eca_step(state, rule);
    traj.states.push_back(state);
  }
  return traj;
}

Trajectory run_eca(const EcaConfig& config) {
  return run_eca(EcaRule(config.rule), eca_initial_state(config), config.transient,
                 config.window);
}

SymbolSequence eca_series(const Trajectory& traj, std::size_t cell, Orientation orientation) {
  const std::size_t n = traj.width;
  const std::size_t len = traj.states.size();
  if (orientation == Orientation::horizontal) {
    if (cell >= len) throw std::out_of_range("time index out of range");
    std::vector<Symbol> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = traj.states[cell].get(i) ? 1 : 0;
    return SymbolSequence(std::move(bits), 1);
  }
  if (cell >= n) throw std::out_of_range("cell index out of range");
  std::vector<Symbol> bits(len);
  for (std::size_t t = 0; t < len; ++t) {
    std::size_t i = cell;
    if (orientation == Orientation::diagonal) {
      i = (cell + t) % n;
    } else if (orientation == Orientation::antidiagonal) {
      i = (cell + n - t % n) % n;
    }
    bits[t] = traj.states[t].get(i) ? 1 : 0;
  }
  return SymbolSequence(std::move(bits), 1);
}

MeasureSet eca_measures(const Trajectory& traj, int scale, Orientation orientation,
                        HomeostasisMode mode) {
  if (scale < 1 || traj.states.size() < 2 * static_cast<std::size_t>(scale)) {
    throw std::invalid_argument("window too short for scale");
  }
  const std::size_t count =
      orientation == Orientation::horizontal ? traj.states.size() : traj.width;
  std::vector<SymbolSequence> series;
  series.reserve(count);
  for (std::size_t i = 0; i < count; ++i) series.push_back(eca_series(traj, i, orientation));
  MeasureSet m = pooled_series_measures(series, scale);
  m.homeostasis = macro_state_homeostasis(traj, scale, mode);
  return m;
}

BooleanNetwork equivalent_network(const EcaRule& rule, const BitState& initial) {
  const std::size_t n = initial.size();
  if (n < 3) throw std::invalid_argument("eca: n must be at least 3");
  std::vector<std::vector<std::size_t>> inputs(n);
  const std::vector<std::uint8_t> table(rule.table().begin(), rule.table().end());
  std::vector<std::vector<std::uint8_t>> tables(n, table);
  for (std::size_t i = 0; i < n; ++i) inputs[i] = {(i + n - 1) % n, i, (i + 1) % n};
  return BooleanNetwork(std::move(inputs), std::move(tables), initial);
}

}  // namespace infodyn
