#include "infodyn/rbn.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "infodyn/rng.hpp"
#include "infodyn/trajectory.hpp"

namespace infodyn {
namespace {

BooleanNetwork swap_network(const char* state) {
  // Each node copies the other through an identity table.
  return BooleanNetwork({{1}, {0}}, {{0, 1}, {0, 1}}, BitState::from_string(state));
}

TEST(BitState, PackedAccessAndTail) {
  BitState s(70);
  s.set(0, true);
  s.set(64, true);
  s.set(69, true);
  EXPECT_EQ(s.count(), 3u);
  EXPECT_TRUE(s.get(69));
  EXPECT_FALSE(s.get(68));
  EXPECT_EQ(BitState::from_string(s.to_string()), s);
  EXPECT_EQ(s.tail_mask(), (BitState::Word{1} << 6) - 1);
  EXPECT_EQ(differing_bits(s, BitState(70)), 3u);
  EXPECT_THROW(differing_bits(s, BitState(71)), std::invalid_argument);
}

TEST(Rng, BelowStaysInRange) {
  Rng rng(1);
  std::map<std::uint64_t, int> seen;
  for (int i = 0; i < 7000; ++i) ++seen[rng.below(7)];
  EXPECT_EQ(seen.size(), 7u);
  for (const auto& [v, c] : seen) {
    EXPECT_LT(v, 7u);
    EXPECT_NEAR(c, 1000, 150);
  }
}

TEST(BooleanNetwork, ValidatesStructure) {
  EXPECT_THROW(BooleanNetwork({{0, 0}}, {{0, 1, 0, 1}}, BitState(1)), std::invalid_argument);
  EXPECT_THROW(BooleanNetwork({{2}}, {{0, 1}}, BitState(1)), std::invalid_argument);
  EXPECT_THROW(BooleanNetwork({{0}}, {{0, 1, 1}}, BitState(1)), std::invalid_argument);
  EXPECT_THROW(BooleanNetwork({{0}}, {{0, 2}}, BitState(1)), std::invalid_argument);
  EXPECT_THROW(BooleanNetwork({{0}}, {{0, 1}}, BitState(2)), std::invalid_argument);
}

TEST(GenerateRbn, ZeroConnectivityFreezesAfterOneStep) {
  RbnConfig c{10, 0.0, 0, 2, 4};
  BooleanNetwork net = generate_rbn(c);
  for (std::size_t i = 0; i < net.size(); ++i) {
    EXPECT_TRUE(net.inputs(i).empty());
    EXPECT_EQ(net.table(i).size(), 1u);
  }
  net.step();
  const BitState frozen = net.state();
  net.step();
  EXPECT_EQ(net.state(), frozen);
}

TEST(GenerateRbn, SameSeedSameNetwork) {
  RbnConfig c{100, 2.0, 0, 2, 99};
  EXPECT_EQ(generate_rbn(c), generate_rbn(c));
  RbnConfig d = c;
  d.seed = 100;
  EXPECT_FALSE(generate_rbn(c).same_structure(generate_rbn(d)));
}

TEST(GenerateRbn, FractionalConnectivityMixesFloorAndCeil) {
  double total = 0.0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    RbnConfig c{100, 2.5, 0, 2, s};
    const BooleanNetwork net = generate_rbn(c);
    for (std::size_t i = 0; i < net.size(); ++i) {
      const auto deg = net.inputs(i).size();
      EXPECT_TRUE(deg == 2 || deg == 3);
      const std::set<std::size_t> distinct(net.inputs(i).begin(), net.inputs(i).end());
      EXPECT_EQ(distinct.size(), deg);
    }
    total += net.mean_in_degree();
  }
  EXPECT_NEAR(total / 1000.0, 2.5, 0.05);
}

TEST(GenerateRbn, FullConnectivityUsesEveryNode) {
  const BooleanNetwork net = generate_rbn(RbnConfig{6, 6.0, 0, 2, 1});
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(std::set<std::size_t>(net.inputs(i).begin(), net.inputs(i).end()).size(), 6u);
  }
}

TEST(GenerateRbn, RejectsBadConfig) {
  EXPECT_THROW(generate_rbn(RbnConfig{5, 6.0, 0, 2, 0}), std::invalid_argument);
  EXPECT_THROW(generate_rbn(RbnConfig{5, -1.0, 0, 2, 0}), std::invalid_argument);
  EXPECT_THROW(generate_rbn(RbnConfig{5, 2.0, 0, 1, 0}), std::invalid_argument);
  EXPECT_THROW(generate_rbn(RbnConfig{0, 0.0, 0, 2, 0}), std::invalid_argument);
  EXPECT_THROW(generate_rbn(RbnConfig{100, 21.0, 0, 2, 0}), std::invalid_argument);
}

TEST(RbnStep, SwapIsSynchronous) {
  BooleanNetwork net = swap_network("01");
  EXPECT_EQ(rbn_step(net), BitState::from_string("10"));
  for (int t = 0; t < 10; ++t) {
    net.step();
    EXPECT_NE(net.state().get(0), net.state().get(1));
  }
}

TEST(RbnStep, FirstInputIsMostSignificant) {
  // Node 0 reads (1, 2); table index 2 = (1, 0) is the only 1 entry.
  BooleanNetwork net({{1, 2}, {}, {}}, {{0, 0, 1, 0}, {1}, {0}}, BitState::from_string("010"));
  EXPECT_TRUE(rbn_step(net).get(0));
  net.set_state(BitState::from_string("001"));
  EXPECT_FALSE(rbn_step(net).get(0));
}

TEST(RbnStep, ConstantZeroTables) {
  BooleanNetwork net({{1, 2}, {0}, {0, 1}}, {{0, 0, 0, 0}, {0, 0}, {0, 0, 0, 0}},
                     BitState::from_string("111"));
  EXPECT_EQ(rbn_step(net), BitState(3));
}

TEST(RbnStep, RevisitsAStateWithinStateSpaceSize) {
  BooleanNetwork net = generate_rbn(RbnConfig{8, 3.0, 0, 2, 17});
  std::set<std::string> seen;
  bool repeated = false;
  for (int t = 0; t <= (1 << 8) && !repeated; ++t) {
    repeated = !seen.insert(net.state().to_string()).second;
    net.step();
  }
  EXPECT_TRUE(repeated);
}

// Exhaustive attractor enumeration over all 2^n states agrees with where
// a long run ends up.
TEST(RbnStep, TrajectoryEndsOnEnumeratedAttractor) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 10;
    BooleanNetwork net = generate_rbn(RbnConfig{n, 2.0 + 0.1 * static_cast<double>(seed % 10), 0, 2, seed});
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::size_t> succ(states);
    BooleanNetwork probe = net;
    for (std::size_t x = 0; x < states; ++x) {
      BitState s(n);
      for (std::size_t i = 0; i < n; ++i) s.set(i, ((x >> i) & 1U) != 0);
      probe.set_state(s);
      const BitState next = probe.next_state();
      std::size_t y = 0;
      for (std::size_t i = 0; i < n; ++i) y |= static_cast<std::size_t>(next.get(i)) << i;
      succ[x] = y;
    }
    // A state is on a cycle iff iterating `states` times from it returns.
    std::vector<bool> on_cycle(states, false);
    std::vector<std::size_t> cycle_len(states, 0);
    for (std::size_t x = 0; x < states; ++x) {
      std::size_t y = x;
      for (std::size_t t = 0; t < states; ++t) y = succ[y];
      // y is now on a cycle; mark it.
      std::size_t len = 1;
      for (std::size_t z = succ[y]; z != y; z = succ[z]) ++len;
      on_cycle[y] = true;
      cycle_len[y] = len;
    }
    const Trajectory traj = run_network(net, states, 64);
    for (const auto& s : traj.states) {
      std::size_t x = 0;
      for (std::size_t i = 0; i < n; ++i) x |= static_cast<std::size_t>(s.get(i)) << i;
      ASSERT_TRUE(on_cycle[x]);
    }
    std::size_t x0 = 0;
    for (std::size_t i = 0; i < n; ++i) x0 |= static_cast<std::size_t>(traj.states[0].get(i)) << i;
    const std::size_t period = cycle_len[x0];
    ASSERT_GE(period, 1u);
    if (period < traj.length()) EXPECT_EQ(traj.states[period], traj.states[0]);
    for (std::size_t p = 1; p < period && p < traj.length(); ++p) {
      EXPECT_NE(traj.states[p], traj.states[0]);
    }
  }
}

TEST(RunRbn, FrozenNetworkRecordsIdenticalStates) {
  const Trajectory traj = run_rbn(RbnConfig{20, 0.0, 5, 50, 3});
  EXPECT_EQ(traj.length(), 50u);
  EXPECT_EQ(traj.transient_length, 5u);
  for (const auto& s : traj.states) EXPECT_EQ(s, traj.states.front());
}

TEST(RunRbn, DeterministicAndSized) {
  const RbnConfig c{100, 2.0, 1000, 1000, 8};
  const Trajectory a = run_rbn(c);
  const Trajectory b = run_rbn(c);
  EXPECT_EQ(a.states, b.states);
  ASSERT_EQ(a.length(), 1000u);
  for (const auto& s : a.states) EXPECT_EQ(s.size(), 100u);
}

TEST(RunRbn, SuccessiveStatesFollowStep) {
  const RbnConfig c{30, 2.5, 10, 40, 5};
  BooleanNetwork net = generate_rbn(c);
  BooleanNetwork replay = net;
  const Trajectory traj = run_network(net, c.transient, c.window);
  for (std::size_t t = 0; t < c.transient; ++t) replay.step();
  for (std::size_t t = 0; t < traj.length(); ++t) {
    EXPECT_EQ(traj.states[t], replay.state());
    replay.step();
  }
}

TEST(NodeSeries, ColumnsOfTrajectory) {
  // Node 0 negates itself, node 1 holds its value.
  BooleanNetwork net({{0}, {1}}, {{1, 0}, {0, 1}}, BitState::from_string("01"));
  const Trajectory traj = run_network(net, 0, 16);
  const auto osc = node_series(traj, 0);
  const auto frozen = node_series(traj, 1);
  EXPECT_EQ(osc.size(), 16u);
  EXPECT_EQ(osc.to_string(), "0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1");
  EXPECT_EQ(shannon_information(osc), 1.0);
  EXPECT_EQ(shannon_information(rescale(osc, 2)), 0.0);
  EXPECT_EQ(shannon_information(frozen), 0.0);
  EXPECT_THROW(node_series(traj, 2), std::out_of_range);
}

TEST(NetworkMeasures, FrozenNetwork) {
  const Trajectory traj = run_rbn(RbnConfig{50, 0.0, 3, 64, 1});
  for (int b : {1, 2, 4, 8}) {
    const MeasureSet m = network_measures(traj, b);
    EXPECT_EQ(m.emergence, 0.0);
    EXPECT_EQ(m.self_organization, 1.0);
    EXPECT_EQ(m.complexity, 0.0);
    EXPECT_EQ(m.homeostasis, 1.0);
    EXPECT_EQ(m.scale, b);
  }
}

// Stand-in for a network whose nodes are independent fair coins.
Trajectory coin_trajectory(std::size_t n, std::size_t window, std::uint64_t seed) {
  Rng rng(seed);
  Trajectory traj;
  traj.width = n;
  for (std::size_t t = 0; t < window; ++t) {
    BitState s(n);
    for (std::size_t i = 0; i < n; ++i) s.set(i, rng.coin());
    traj.states.push_back(std::move(s));
  }
  return traj;
}

TEST(NetworkMeasures, IndependentCoinNodes) {
  const Trajectory long_run = coin_trajectory(64, 1 << 14, 2);
  for (int b : {1, 2, 4}) {
    const MeasureSet m = network_measures(long_run, b);
    EXPECT_GT(m.emergence, 0.99);
    EXPECT_LT(m.self_organization, 0.01);
    EXPECT_LT(m.complexity, 0.04);
  }
  const Trajectory wide = coin_trajectory(1 << 14, 16, 3);
  for (int b : {1, 2, 4}) {
    EXPECT_NEAR(*network_measures(wide, b).homeostasis, uncorrelated_homeostasis(b), 0.02);
  }
}

TEST(NetworkMeasures, MacroStateHomeostasis) {
  // Two nodes, window 4, scale 2: macro-states (00,01) then (11,01).
  Trajectory traj;
  traj.width = 2;
  for (const char* s : {"00", "00", "10", "11"}) traj.states.push_back(BitState::from_string(s));
  // Node 0: 0,0 | 1,1 -> symbols 0, 3. Node 1: 0,0 | 0,1 -> 0, 1. Both change.
  EXPECT_EQ(macro_state_homeostasis(traj, 2), 0.0);
  // Scale 1, last pair "10" vs "11": one of two nodes differs.
  EXPECT_EQ(macro_state_homeostasis(traj, 1), 0.5);
  // All pairs at scale 1: (00,00)=1, (00,10)=0.5, (10,11)=0.5.
  EXPECT_DOUBLE_EQ(macro_state_homeostasis(traj, 1, HomeostasisMode::all_pairs), 2.0 / 3.0);
  EXPECT_THROW(network_measures(traj, 3), std::invalid_argument);
}

TEST(NetworkMeasures, PooledInformationIdentities) {
  const Trajectory traj = run_rbn(RbnConfig{60, 2.2, 100, 256, 12});
  for (int b : {1, 2, 4, 8}) {
    const MeasureSet m = network_measures(traj, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < traj.width; ++i) {
      sum += normalized_information(rescale(node_series(traj, i), b));
    }
    EXPECT_NEAR(m.emergence, sum / static_cast<double>(traj.width), 1e-12);
    EXPECT_NEAR(m.self_organization, 1.0 - m.emergence, 1e-12);
    EXPECT_NEAR(m.complexity, 4.0 * m.emergence * m.self_organization, 1e-12);
    ASSERT_TRUE(m.homeostasis);
    EXPECT_GE(*m.homeostasis, 0.0);
    EXPECT_LE(*m.homeostasis, 1.0);
  }
}

TEST(Serialization, ExactTextForm) {
  const BooleanNetwork net({{1, 0}, {}, {2}}, {{0, 1, 1, 0}, {1}, {1, 0}}, BitState(3));
  EXPECT_EQ(serialize_network(net),
            "rbn n=3\n"
            "0: inputs=1,0 table=0110\n"
            "1: inputs= table=1\n"
            "2: inputs=2 table=10\n");
}

TEST(Serialization, RoundTripReproducesDynamics) {
  const RbnConfig c{40, 2.6, 0, 2, 77};
  BooleanNetwork net = generate_rbn(c);
  BooleanNetwork parsed = parse_network(serialize_network(net));
  EXPECT_TRUE(parsed.same_structure(net));
  parsed.set_state(net.state());
  EXPECT_EQ(run_network(parsed, 10, 50).states, run_network(net, 10, 50).states);
}

TEST(Serialization, RejectsMalformedText) {
  EXPECT_THROW(parse_network("rbx n=2\n"), std::invalid_argument);
  EXPECT_THROW(parse_network("rbn n=2\n0: inputs=1 table=01\n"), std::invalid_argument);
  EXPECT_THROW(parse_network("rbn n=1\n0: inputs=0 table=012\n"), std::invalid_argument);
  EXPECT_THROW(parse_network("rbn n=1\n0: inputs=0 table=011\n"), std::invalid_argument);
}

TEST(TrajectoryCsv, RowsAreTimeColumnsAreNodes) {
  BooleanNetwork net = swap_network("01");
  const Trajectory traj = run_network(net, 0, 3);
  EXPECT_EQ(trajectory_to_csv(traj), "n0,n1\n0,1\n1,0\n0,1\n");
}

}  // namespace
}  // namespace infodyn
