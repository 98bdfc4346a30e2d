#include "infodyn/rbn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace infodyn {

void RbnConfig::validate() const {
  if (n < 1) throw std::invalid_argument("rbn: n must be at least 1");
  if (!std::isfinite(k) || k < 0.0) throw std::invalid_argument("rbn: k must be non-negative");
  if (k > static_cast<double>(n)) throw std::invalid_argument("rbn: k must not exceed n");
  if (std::ceil(k) > static_cast<double>(kMaxInDegree)) {
    throw std::invalid_argument("rbn: k too large for lookup tables (max " +
                                std::to_string(kMaxInDegree) + ")");
  }
  if (window < 2) throw std::invalid_argument("rbn: window must be at least 2");
}

BooleanNetwork::BooleanNetwork(std::vector<std::vector<std::size_t>> inputs,
                               std::vector<std::vector<std::uint8_t>> tables, BitState state)
    : inputs_(std::move(inputs)), tables_(std::move(tables)), state_(std::move(state)) {
  const std::size_t n = inputs_.size();
  if (tables_.size() != n) throw std::invalid_argument("rbn: one table per node required");
  if (state_.size() != n) throw std::invalid_argument("rbn: state width must equal node count");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& in = inputs_[i];
    if (in.size() > kMaxInDegree) throw std::invalid_argument("rbn: in-degree too large");
    for (std::size_t j = 0; j < in.size(); ++j) {
      if (in[j] >= n) throw std::invalid_argument("rbn: input index out of range");
      if (std::find(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(j), in[j]) !=
          in.begin() + static_cast<std::ptrdiff_t>(j)) {
        throw std::invalid_argument("rbn: duplicate input on node " + std::to_string(i));
      }
    }
    if (tables_[i].size() != (std::size_t{1} << in.size())) {
      throw std::invalid_argument("rbn: table of node " + std::to_string(i) +
                                  " must have 2^in-degree entries");
    }
    for (auto v : tables_[i]) {
      if (v > 1) throw std::invalid_argument("rbn: table entries must be 0 or 1");
    }
  }
}

void BooleanNetwork::set_state(BitState state) {
  if (state.size() != size()) throw std::invalid_argument("rbn: state width must equal node count");
  state_ = std::move(state);
}

double BooleanNetwork::mean_in_degree() const noexcept {
  if (inputs_.empty()) return 0.0;
  std::size_t total = 0;
  for (const auto& in : inputs_) total += in.size();
  return static_cast<double>(total) / static_cast<double>(inputs_.size());
}

BitState BooleanNetwork::next_state() const {
  BitState next(size());
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    std::size_t index = 0;
    for (std::size_t src : inputs_[i]) index = (index << 1) | (state_.get(src) ? 1U : 0U);
    if (tables_[i][index] != 0) next.set(i, true);
  }
  return next;
}

BooleanNetwork generate_rbn(const RbnConfig& config, Rng& rng) {
  config.validate();
  const std::size_t n = config.n;
  const auto base = static_cast<std::size_t>(std::floor(config.k));
  const double frac = config.k - std::floor(config.k);

  std::vector<std::vector<std::size_t>> inputs(n);
  std::vector<std::vector<std::uint8_t>> tables(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t degree = base;
    if (frac > 0.0 && rng.bernoulli(frac)) ++degree;
    degree = std::min(degree, n);

    // Floyd's sampling: `degree` distinct sources out of n.
    auto& in = inputs[i];
    in.reserve(degree);
    for (std::size_t j = n - degree; j < n; ++j) {
      const auto t = static_cast<std::size_t>(rng.below(j + 1));
      in.push_back(std::find(in.begin(), in.end(), t) == in.end() ? t : j);
    }

    auto& table = tables[i];
    table.resize(std::size_t{1} << degree);
    for (auto& entry : table) entry = rng.coin() ? 1 : 0;
  }

  BitState state(n);
  for (std::size_t i = 0; i < n; ++i) state.set(i, rng.coin());
  return BooleanNetwork(std::move(inputs), std::move(tables), std::move(state));
}

BooleanNetwork generate_rbn(const RbnConfig& config) {
  Rng rng(config.seed);
  return generate_rbn(config, rng);
}

BitState rbn_step(const BooleanNetwork& net) { return net.next_state(); }

Trajectory run_network(BooleanNetwork& net, std::size_t transient, std::size_t window) {
  for (std::size_t t = 0; t < transient; ++t) net.step();
  Trajectory traj;
  traj.width = net.size();
  traj.transient_length = transient;
  traj.states.reserve(window);
  for (std::size_t t = 0; t < window; ++t) {
    if (t != 0) net.step();
    traj.states.push_back(net.state());
  }
  return traj;
}

Trajectory run_rbn(const RbnConfig& config) {
  BooleanNetwork net = generate_rbn(config);
  return run_network(net, config.transient, config.window);
}

MeasureSet network_measures(const Trajectory& traj, int scale, HomeostasisMode mode) {
  if (scale < 1 || traj.states.size() < 2 * static_cast<std::size_t>(scale)) {
    throw std::invalid_argument("window too short for scale");
  }
  std::vector<SymbolSequence> series;
  series.reserve(traj.width);
  for (std::size_t i = 0; i < traj.width; ++i) series.push_back(node_series(traj, i));
  MeasureSet m = pooled_series_measures(series, scale);
  m.homeostasis = macro_state_homeostasis(traj, scale, mode);
  return m;
}

std::string serialize_network(const BooleanNetwork& net) {
  std::ostringstream os;
  os << "rbn n=" << net.size() << '\n';
  for (std::size_t i = 0; i < net.size(); ++i) {
    os << i << ": inputs=";
    const auto& in = net.inputs(i);
    for (std::size_t j = 0; j < in.size(); ++j) {
      if (j != 0) os << ',';
      os << in[j];
    }
    os << " table=";
    for (auto v : net.table(i)) os << static_cast<char>('0' + v);
    os << '\n';
  }
  return os.str();
}

namespace {

std::size_t parse_index(std::string_view s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string("rbn parse: missing ") + what);
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument(std::string("rbn parse: bad ") + what);
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace

BooleanNetwork parse_network(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line) || line.rfind("rbn n=", 0) != 0) {
    throw std::invalid_argument("rbn parse: expected header 'rbn n=<N>'");
  }
  const std::size_t n = parse_index(std::string_view(line).substr(6), "node count");
  std::vector<std::vector<std::size_t>> inputs(n);
  std::vector<std::vector<std::uint8_t>> tables(n);
  std::vector<bool> seen(n, false);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::string_view v(line);
    const auto colon = v.find(": inputs=");
    const auto tpos = v.find(" table=");
    if (colon == std::string_view::npos || tpos == std::string_view::npos || tpos < colon) {
      throw std::invalid_argument("rbn parse: malformed node line '" + line + "'");
    }
    const std::size_t i = parse_index(v.substr(0, colon), "node index");
    if (i >= n || seen[i]) throw std::invalid_argument("rbn parse: bad or repeated node index");
    seen[i] = true;
    std::string_view list = v.substr(colon + 9, tpos - colon - 9);
    while (!list.empty()) {
      const auto comma = list.find(',');
      inputs[i].push_back(parse_index(list.substr(0, comma), "input index"));
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
    }
    for (char c : v.substr(tpos + 7)) {
      if (c != '0' && c != '1') throw std::invalid_argument("rbn parse: bad table bit");
      tables[i].push_back(static_cast<std::uint8_t>(c - '0'));
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("rbn parse: missing node lines");
  }
  return BooleanNetwork(std::move(inputs), std::move(tables), BitState(n));
}

}  // namespace infodyn
