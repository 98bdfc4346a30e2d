#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "infodyn/eca.hpp"
#include "infodyn/experiments.hpp"
#include "infodyn/io.hpp"
#include "infodyn/measures.hpp"
#include "infodyn/rbn.hpp"

namespace infodyn::cli {

namespace {

namespace fs = std::filesystem;

/// Bad flags, unreadable input or an unwritable destination.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kThreadsEnv = "INFODYN_THREADS";

struct GlobalOptions {
  std::string format = "csv";
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct MeasureOptions {
  std::string input = "-";
  std::string input_format = "ascii01";
  int symbol_bits = 0;
  std::vector<int> scales{1, 2, 4, 8};
  std::string output;
};

struct RbnOptions {
  std::size_t n = 100;
  double k = 2.0;
  std::size_t transient = 1000;
  std::size_t window = 1000;
  std::vector<int> scales{1};
  std::string dump_network;
  std::string dump_trajectory;
  bool averaged_h = false;
  std::string output;
};

struct EcaOptions {
  int rule = 0;
  std::size_t n = 256;
  std::string init = "random";
  std::size_t transient = 4096;
  std::size_t window = 4096;
  std::vector<int> scales{1, 2, 4, 8};
  std::string orientation = "vertical";
  std::string dump_bitmap;
  std::string dump_trajectory;
  bool averaged_h = false;
  std::string output;
};

struct SweepOptions {
  std::string preset = "desk";
  std::string output_dir = "results";
  bool plot_script = false;
  std::size_t instances = 0;
  std::size_t n = 0;
  std::size_t transient = 0;
  std::size_t window = 0;
  std::vector<int> scales;
  std::vector<double> k_grid;
  std::vector<int> rules;
  std::string init = "random";
  std::string orientation = "vertical";
  std::string h_reference = "inverse-alphabet";
  bool averaged_h = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read input '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write '" + path.string() + "'");
  f << content;
  if (!f) throw UsageError("failed writing '" + path.string() + "'");
}

void emit(const std::string& destination, const std::string& content, std::ostream& out) {
  if (destination.empty()) {
    out << content;
  } else {
    write_file(destination, content);
  }
}

unsigned resolve_threads(unsigned flag) {
  if (flag != 0) return flag;
  if (const char* env = std::getenv(kThreadsEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) {
      throw UsageError(std::string(kThreadsEnv) + " must be a positive integer");
    }
    return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

int cmd_measure(const GlobalOptions& g, const MeasureOptions& o, std::ostream& out,
                std::ostream& err) {
  const auto format = io::parse_input_format(o.input_format);
  const std::string data = read_input(o.input);
  SymbolSequence bits;
  try {
    bits = io::parse_input(data, format, o.symbol_bits);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid input: ") + e.what());
  }
  const auto entries = multiscale_profile(bits, o.scales);
  for (const auto& e : entries) {
    if (!e.measures) err << "warning: scale " << e.scale << ": " << e.error << '\n';
  }
  emit(o.output, io::measure_report(entries, io::parse_output_format(g.format)), out);
  return kSuccess;
}

int cmd_rbn(const GlobalOptions& g, const RbnOptions& o, std::ostream& out) {
  RbnConfig config{o.n, o.k, o.transient, o.window, g.seed};
  config.validate();
  BooleanNetwork net = generate_rbn(config);
  if (!o.dump_network.empty()) write_file(o.dump_network, serialize_network(net));
  const Trajectory traj = run_network(net, config.transient, config.window);
  if (!o.dump_trajectory.empty()) write_file(o.dump_trajectory, trajectory_to_csv(traj));
  const auto mode = o.averaged_h ? HomeostasisMode::all_pairs : HomeostasisMode::last_pair;
  std::vector<MeasureSet> rows;
  for (int b : o.scales) rows.push_back(network_measures(traj, b, mode));
  emit(o.output, io::measure_set_report(rows, io::parse_output_format(g.format)), out);
  return kSuccess;
}

int cmd_eca(const GlobalOptions& g, const EcaOptions& o, std::ostream& out) {
  EcaConfig config;
  config.rule = o.rule;
  config.n = o.n;
  config.init = parse_initial_condition(o.init);
  config.transient = o.transient;
  config.window = o.window;
  config.seed = g.seed;
  config.orientation = parse_orientation(o.orientation);
  config.validate();
  const Trajectory traj = run_eca(config);
  if (!o.dump_bitmap.empty()) write_file(o.dump_bitmap, trajectory_to_pbm(traj));
  if (!o.dump_trajectory.empty()) write_file(o.dump_trajectory, trajectory_to_csv(traj));
  const auto mode = o.averaged_h ? HomeostasisMode::all_pairs : HomeostasisMode::last_pair;
  std::vector<MeasureSet> rows;
  for (int b : o.scales) rows.push_back(eca_measures(traj, b, config.orientation, mode));
  emit(o.output, io::measure_set_report(rows, io::parse_output_format(g.format)), out);
  return kSuccess;
}

void prepare_output_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw UsageError("unwritable output dir '" + dir.string() + "'");
  }
}

template <typename Config>
void apply_common_overrides(Config& c, const SweepOptions& o) {
  if (o.instances != 0) c.instances = o.instances;
  if (o.n != 0) c.n = o.n;
  if (o.transient != 0) c.transient = o.transient;
  if (o.window != 0) c.window = o.window;
  if (!o.scales.empty()) c.scales = o.scales;
  if (o.averaged_h) c.homeostasis = HomeostasisMode::all_pairs;
}

void write_results(const fs::path& dir, const std::string& experiment,
                   const std::vector<SweepResult>& results, io::OutputFormat format,
                   bool plot, std::ostream& out) {
  const bool json = format == io::OutputFormat::json;
  const std::string ext = json ? ".json" : ".csv";
  const fs::path instances = dir / (experiment + "_instances" + ext);
  const fs::path aggregate = dir / (experiment + "_aggregate" + ext);
  write_file(instances, json ? io::instances_json(results) : io::instances_csv(results));
  write_file(aggregate, json ? io::aggregate_json(results) : io::aggregate_csv(results));
  out << instances.string() << '\n' << aggregate.string() << '\n';
  if (plot && experiment != "profile") {
    const fs::path script = dir / ("plot_" + experiment + ".py");
    write_file(script, io::plot_script(experiment, experiment + "_aggregate.csv"));
    out << script.string() << '\n';
  }
}

int cmd_sweep(const std::string& which, const GlobalOptions& g, const SweepOptions& o,
              std::ostream& out) {
  const Preset preset = parse_preset(o.preset);
  const auto format = io::parse_output_format(g.format);
  if (o.plot_script && format != io::OutputFormat::csv) {
    throw UsageError("--plot-script reads CSV output; use --format csv");
  }
  const unsigned threads = resolve_threads(g.threads);
  const fs::path dir(o.output_dir);
  prepare_output_dir(dir);

  if (which == "rbn") {
    RbnSweepConfig c = rbn_preset(preset);
    apply_common_overrides(c, o);
    if (!o.k_grid.empty()) c.k_grid = o.k_grid;
    c.master_seed = g.seed;
    write_results(dir, "rbn", rbn_sweep(c, threads), format, o.plot_script, out);
    return kSuccess;
  }

  EcaSurveyConfig c = which == "eca" ? eca_preset(preset) : profile_preset(preset);
  apply_common_overrides(c, o);
  if (!o.rules.empty()) c.rules = o.rules;
  c.init = parse_initial_condition(o.init);
  c.orientation = parse_orientation(o.orientation);
  c.master_seed = g.seed;
  if (which == "eca") {
    write_results(dir, "eca", eca_class_survey(c, threads), format, o.plot_script, out);
    return kSuccess;
  }

  const auto ref = o.h_reference == "half-inverse-scale"
                       ? HomeostasisReference::half_inverse_scale
                       : HomeostasisReference::inverse_alphabet;
  const ProfileTable table = multiscale_profiles(c, threads, ref);
  write_results(dir, "profile", table.results, format, false, out);
  const bool json = format == io::OutputFormat::json;
  const fs::path profile = dir / (json ? "profile_table.json" : "profile_table.csv");
  write_file(profile, json ? io::profile_json(table.rows) : io::profile_csv(table.rows));
  out << profile.string() << '\n';
  if (o.plot_script) {
    const fs::path script = dir / "plot_profile.py";
    write_file(script, io::plot_script("profile", "profile_table.csv"));
    out << script.string() << '\n';
  }
  return kSuccess;
}

void add_sweep_options(CLI::App* cmd, SweepOptions& o, bool rbn) {
  cmd->add_option("--preset", o.preset, "Parameter preset")
      ->check(CLI::IsMember({"paper", "desk"}))
      ->capture_default_str();
  cmd->add_option("--output-dir", o.output_dir, "Directory for result files")
      ->capture_default_str();
  cmd->add_flag("--plot-script", o.plot_script, "Also write a matplotlib script");
  cmd->add_option("--instances", o.instances, "Override instances per cell")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--n", o.n, "Override node/cell count")->check(CLI::PositiveNumber);
  cmd->add_option("--transient", o.transient, "Override transient steps");
  cmd->add_option("--window", o.window, "Override observation window");
  cmd->add_option("--scales", o.scales, "Override scales (bits per symbol)")->delimiter(',');
  cmd->add_flag("--averaged-h", o.averaged_h,
                "Average H over all successive macro-state pairs (not the reference protocol)");
  if (rbn) {
    cmd->add_option("--k-grid", o.k_grid, "Override K grid")->delimiter(',');
    return;
  }
  cmd->add_option("--rules", o.rules, "Override rule list")
      ->delimiter(',')
      ->check(CLI::Range(0, 255));
  cmd->add_option("--init", o.init, "Initial condition")
      ->check(CLI::IsMember({"random", "single_cell"}));
  cmd->add_option("--orientation", o.orientation, "Series orientation")
      ->check(CLI::IsMember({"vertical", "horizontal", "diagonal", "antidiagonal"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiscale information measures for Boolean dynamical systems", "infodyn"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed (master seed for sweeps)")->capture_default_str();
  app.add_option("--threads", g.threads,
                 std::string("Worker threads (default: $") + kThreadsEnv + " or all cores)");

  MeasureOptions mo;
  auto* measure = app.add_subcommand("measure", "Multiscale E/S/C of a bit string");
  measure->add_option("--input,-i", mo.input, "Input file, '-' for stdin")->capture_default_str();
  measure->add_option("--input-format", mo.input_format, "Input encoding")
      ->check(CLI::IsMember({"ascii01", "bytes", "symbols"}))
      ->capture_default_str();
  measure->add_option("--symbol-bits", mo.symbol_bits,
                      "Bits per symbol for --input-format symbols (0 = narrowest)")
      ->check(CLI::Range(0, kMaxBitsPerSymbol));
  measure->add_option("--scales", mo.scales, "Scales (bits per symbol)")
      ->delimiter(',')
      ->check(CLI::Range(1, kMaxBitsPerSymbol));
  measure->add_option("--output,-o", mo.output, "Write report to file");

  RbnOptions ro;
  auto* rbn = app.add_subcommand("rbn", "Simulate one random Boolean network");
  rbn->add_option("--n", ro.n, "Node count")->check(CLI::PositiveNumber)->capture_default_str();
  rbn->add_option("--k", ro.k, "Mean in-degree")->check(CLI::NonNegativeNumber)->capture_default_str();
  rbn->add_option("--transient", ro.transient, "Discarded steps")->capture_default_str();
  rbn->add_option("--window", ro.window, "Recorded steps")->capture_default_str();
  rbn->add_option("--scales", ro.scales, "Scales")->delimiter(',')->check(CLI::Range(1, kMaxBitsPerSymbol));
  rbn->add_option("--dump-network", ro.dump_network, "Write the network in text form");
  rbn->add_option("--dump-trajectory", ro.dump_trajectory, "Write the trajectory as CSV");
  rbn->add_flag("--averaged-h", ro.averaged_h, "Average H over all successive pairs");
  rbn->add_option("--output,-o", ro.output, "Write report to file");

  EcaOptions eo;
  auto* eca = app.add_subcommand("eca", "Simulate one elementary cellular automaton");
  eca->add_option("--rule", eo.rule, "Wolfram rule number")->required();
  eca->add_option("--n", eo.n, "Cell count")->capture_default_str();
  eca->add_option("--init", eo.init, "Initial condition")
      ->check(CLI::IsMember({"random", "single_cell"}))
      ->capture_default_str();
  eca->add_option("--transient", eo.transient, "Discarded steps")->capture_default_str();
  eca->add_option("--window", eo.window, "Recorded steps")->capture_default_str();
  eca->add_option("--scales", eo.scales, "Scales")->delimiter(',')->check(CLI::Range(1, kMaxBitsPerSymbol));
  eca->add_option("--orientation", eo.orientation, "Series orientation")
      ->check(CLI::IsMember({"vertical", "horizontal", "diagonal", "antidiagonal"}))
      ->capture_default_str();
  eca->add_option("--dump-bitmap", eo.dump_bitmap, "Write the space-time diagram as PBM");
  eca->add_option("--dump-trajectory", eo.dump_trajectory, "Write the trajectory as CSV");
  eca->add_flag("--averaged-h", eo.averaged_h, "Average H over all successive pairs");
  eca->add_option("--output,-o", eo.output, "Write report to file");

  SweepOptions so;
  auto* sweep = app.add_subcommand("sweep", "Run a reproduction experiment");
  sweep->require_subcommand(1);
  auto* sweep_rbn = sweep->add_subcommand("rbn", "RBN connectivity sweep");
  auto* sweep_eca = sweep->add_subcommand("eca", "ECA class survey");
  auto* sweep_profile = sweep->add_subcommand("profile", "Multiscale profiles of selected rules");
  add_sweep_options(sweep_rbn, so, true);
  add_sweep_options(sweep_eca, so, false);
  add_sweep_options(sweep_profile, so, false);
  sweep_profile
      ->add_option("--h-reference", so.h_reference, "Uncorrelated-H reference curve")
      ->check(CLI::IsMember({"inverse-alphabet", "half-inverse-scale"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*measure) return cmd_measure(g, mo, out, err);
    if (*rbn) return cmd_rbn(g, ro, out);
    if (*eca) return cmd_eca(g, eo, out);
    if (*sweep_rbn) return cmd_sweep("rbn", g, so, out);
    if (*sweep_eca) return cmd_sweep("eca", g, so, out);
    if (*sweep_profile) return cmd_sweep("profile", g, so, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalFailure;
  }
  return kInternalFailure;
}

}  // namespace infodyn::cli
