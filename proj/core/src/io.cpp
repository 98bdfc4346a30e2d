#include "infodyn/io.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace infodyn::io {

namespace {

using nlohmann::ordered_json;

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string optional_field(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

struct StatField {
  const char* name;
  double SummaryStats::*member;
};

constexpr StatField kStats[] = {
    {"mean", &SummaryStats::mean},
    {"median", &SummaryStats::median},
    {"q1", &SummaryStats::q1},
    {"q3", &SummaryStats::q3},
    {"whisker_low", &SummaryStats::whisker_low},
    {"whisker_high", &SummaryStats::whisker_high},
    {"min", &SummaryStats::min},
    {"max", &SummaryStats::max},
};

}  // namespace

InputFormat parse_input_format(std::string_view text) {
  if (text == "ascii01") return InputFormat::ascii01;
  if (text == "bytes") return InputFormat::bytes;
  if (text == "symbols") return InputFormat::symbols;
  throw std::invalid_argument("unknown input format '" + std::string(text) + "'");
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + std::string(text) + "'");
}

SymbolSequence parse_input(std::string_view data, InputFormat format, int symbol_bits) {
  std::vector<Symbol> bits;
  switch (format) {
    case InputFormat::ascii01: {
      SymbolSequence seq = SymbolSequence::from_bits(data);
      if (seq.empty()) throw std::invalid_argument("empty input");
      return seq;
    }
    case InputFormat::bytes:
      bits.reserve(data.size() * 8);
      for (char ch : data) {
        const auto byte = static_cast<unsigned char>(ch);
        for (int j = 7; j >= 0; --j) bits.push_back((byte >> j) & 1U);
      }
      break;
    case InputFormat::symbols: {
      std::vector<Symbol> values;
      std::string token;
      auto flush = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
          v = std::stoull(token, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != token.size() || token[0] == '-') {
          throw std::invalid_argument("invalid symbol '" + token + "'");
        }
        values.push_back(v);
        token.clear();
      };
      for (char ch : data) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
          flush();
        } else {
          token += ch;
        }
      }
      flush();
      if (values.empty()) throw std::invalid_argument("empty input");
      int width = symbol_bits;
      if (width == 0) {
        width = 1;
        for (Symbol v : values) {
          while (width < kMaxBitsPerSymbol && (v >> width) != 0) ++width;
        }
      }
      const SymbolSequence seq(std::move(values), width);
      return expand_to_bits(seq);
    }
  }
  if (bits.empty()) throw std::invalid_argument("empty input");
  return SymbolSequence(std::move(bits), 1);
}

std::string to_ascii01(const SymbolSequence& bits) {
  if (bits.bits_per_symbol() != 1) throw std::invalid_argument("ascii01 needs a binary sequence");
  std::string out;
  out.reserve(bits.size() + 1);
  for (Symbol b : bits.symbols()) out += b != 0 ? '1' : '0';
  out += '\n';
  return out;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string measure_report(std::span<const ScaleProfileEntry> entries, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json rows = ordered_json::array();
    for (const auto& e : entries) {
      ordered_json row;
      row["scale"] = e.scale;
      row["I_b"] = optional_number(e.normalized_information);
      if (e.measures) {
        row["E"] = e.measures->emergence;
        row["S"] = e.measures->self_organization;
        row["C"] = e.measures->complexity;
      } else {
        row["E"] = nullptr;
        row["S"] = nullptr;
        row["C"] = nullptr;
        row["error"] = e.error;
      }
      rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
  }
  std::string out = "scale,I_b,E,S,C\n";
  for (const auto& e : entries) {
    out += std::to_string(e.scale) + ",";
    if (e.measures) {
      out += format_number(*e.normalized_information) + "," +
             format_number(e.measures->emergence) + "," +
             format_number(e.measures->self_organization) + "," +
             format_number(e.measures->complexity);
    } else {
      out += ",,,";
    }
    out += "\n";
  }
  return out;
}

std::string measure_set_report(std::span<const MeasureSet> rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : rows) {
      arr.push_back({{"scale", m.scale},
                     {"E", m.emergence},
                     {"S", m.self_organization},
                     {"C", m.complexity},
                     {"H", optional_number(m.homeostasis)}});
    }
    return arr.dump(2) + "\n";
  }
  std::string out = "scale,E,S,C,H\n";
  for (const auto& m : rows) {
    out += std::to_string(m.scale) + "," + format_number(m.emergence) + "," +
           format_number(m.self_organization) + "," + format_number(m.complexity) + "," +
           optional_field(m.homeostasis) + "\n";
  }
  return out;
}

std::string instances_csv(std::span<const SweepResult> results) {
  std::string out = "experiment,rule_or_k,scale,instance,seed,E,S,C,H\n";
  for (const auto& r : results) {
    const std::string prefix = r.experiment + "," + format_number(r.parameter) + "," +
                               std::to_string(r.scale) + ",";
    for (const auto& inst : r.instances) {
      const auto& m = inst.measures;
      out += prefix + std::to_string(inst.index) + "," + std::to_string(inst.seed) + "," +
             format_number(m.emergence) + "," + format_number(m.self_organization) + "," +
             format_number(m.complexity) + "," + optional_field(m.homeostasis) + "\n";
    }
  }
  return out;
}

std::string aggregate_csv(std::span<const SweepResult> results) {
  std::string out = "experiment,rule_or_k,scale,stat,E,S,C,H\n";
  for (const auto& r : results) {
    const std::string prefix = r.experiment + "," + format_number(r.parameter) + "," +
                               std::to_string(r.scale) + ",";
    const auto& a = r.aggregate;
    for (const auto& f : kStats) {
      out += prefix + f.name + "," + format_number(a.emergence.*f.member) + "," +
             format_number(a.self_organization.*f.member) + "," +
             format_number(a.complexity.*f.member) + "," +
             (a.homeostasis ? format_number((*a.homeostasis).*f.member) : std::string()) + "\n";
    }
  }
  return out;
}

std::string instances_json(std::span<const SweepResult> results) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : results) {
    for (const auto& inst : r.instances) {
      const auto& m = inst.measures;
      arr.push_back({{"experiment", r.experiment},
                     {"rule_or_k", r.parameter},
                     {"scale", r.scale},
                     {"instance", inst.index},
                     {"seed", inst.seed},
                     {"E", m.emergence},
                     {"S", m.self_organization},
                     {"C", m.complexity},
                     {"H", optional_number(m.homeostasis)}});
    }
  }
  return arr.dump(2) + "\n";
}

std::string aggregate_json(std::span<const SweepResult> results) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : results) {
    const auto& a = r.aggregate;
    for (const auto& f : kStats) {
      arr.push_back({{"experiment", r.experiment},
                     {"rule_or_k", r.parameter},
                     {"scale", r.scale},
                     {"stat", f.name},
                     {"E", a.emergence.*f.member},
                     {"S", a.self_organization.*f.member},
                     {"C", a.complexity.*f.member},
                     {"H", a.homeostasis ? ordered_json((*a.homeostasis).*f.member)
                                         : ordered_json(nullptr)}});
    }
  }
  return arr.dump(2) + "\n";
}

std::string profile_csv(std::span<const ProfileRow> rows) {
  std::string out = "rule,scale,E,S,C,H,H_reference\n";
  for (const auto& r : rows) {
    out += std::to_string(r.rule) + "," + std::to_string(r.scale) + "," +
           format_number(r.emergence) + "," + format_number(r.self_organization) + "," +
           format_number(r.complexity) + "," + format_number(r.homeostasis) + "," +
           format_number(r.homeostasis_reference) + "\n";
  }
  return out;
}

std::string profile_json(std::span<const ProfileRow> rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"rule", r.rule},
                   {"scale", r.scale},
                   {"E", r.emergence},
                   {"S", r.self_organization},
                   {"C", r.complexity},
                   {"H", r.homeostasis},
                   {"H_reference", r.homeostasis_reference}});
  }
  return arr.dump(2) + "\n";
}

std::string plot_script(std::string_view experiment, std::string_view data_file) {
  std::ostringstream os;
  os << "#!/usr/bin/env python3\n"
        "# Plots " << experiment << " results from " << data_file << ".\n"
        "import csv\n"
        "import sys\n"
        "from collections import defaultdict\n\n"
        "import matplotlib\n"
        "matplotlib.use(\"Agg\")\n"
        "import matplotlib.pyplot as plt\n\n"
        "DATA = sys.argv[1] if len(sys.argv) > 1 else \"" << data_file << "\"\n"
        "PANELS = [(\"E\", \"Emergence\"), (\"S\", \"Self-organization\"),\n"
        "          (\"H\", \"Homeostasis\"), (\"C\", \"Complexity\")]\n\n"
        "with open(DATA, newline=\"\") as f:\n"
        "    rows = list(csv.DictReader(f))\n\n";
  if (experiment == "profile") {
    os << "by_rule = defaultdict(list)\n"
          "for r in rows:\n"
          "    by_rule[r[\"rule\"]].append(r)\n"
          "fig, axes = plt.subplots(2, 2, figsize=(10, 8))\n"
          "for ax, (key, title) in zip(axes.flat, PANELS):\n"
          "    for rule, rs in by_rule.items():\n"
          "        rs.sort(key=lambda r: int(r[\"scale\"]))\n"
          "        ax.plot([int(r[\"scale\"]) for r in rs], [float(r[key]) for r in rs],\n"
          "                marker=\"o\", label=f\"rule {rule}\")\n"
          "    if key == \"H\":\n"
          "        rs = next(iter(by_rule.values()))\n"
          "        ax.plot([int(r[\"scale\"]) for r in rs],\n"
          "                [float(r[\"H_reference\"]) for r in rs], \"k--\", label=\"uncorrelated\")\n"
          "    ax.set_xscale(\"log\", base=2)\n"
          "    ax.set_xlabel(\"b\")\n"
          "    ax.set_title(title)\n"
          "    ax.set_ylim(-0.05, 1.05)\n"
          "axes.flat[0].legend()\n"
          "fig.tight_layout()\n"
          "fig.savefig(\"profile.png\")\n";
  } else if (experiment == "rbn") {
    os << "stats = defaultdict(dict)\n"
          "for r in rows:\n"
          "    stats[(int(r[\"scale\"]), r[\"stat\"])][float(r[\"rule_or_k\"])] = r\n"
          "for scale in sorted({s for s, _ in stats}):\n"
          "    fig, axes = plt.subplots(2, 2, figsize=(10, 8))\n"
          "    for ax, (key, title) in zip(axes.flat, PANELS):\n"
          "        ks = sorted(stats[(scale, \"mean\")])\n"
          "        def col(stat):\n"
          "            return [float(stats[(scale, stat)][k][key]) for k in ks]\n"
          "        ax.plot(ks, col(\"mean\"), marker=\"o\", label=\"mean\")\n"
          "        ax.fill_between(ks, col(\"q1\"), col(\"q3\"), alpha=0.3, label=\"IQR\")\n"
          "        ax.plot(ks, col(\"whisker_low\"), \"k:\", lw=0.8)\n"
          "        ax.plot(ks, col(\"whisker_high\"), \"k:\", lw=0.8)\n"
          "        ax.set_xlabel(\"K\")\n"
          "        ax.set_title(title)\n"
          "        ax.set_ylim(-0.05, 1.05)\n"
          "    axes.flat[0].legend()\n"
          "    fig.suptitle(f\"RBN, b={scale}\")\n"
          "    fig.tight_layout()\n"
          "    fig.savefig(f\"rbn_b{scale}.png\")\n";
  } else {
    os << "means = defaultdict(list)\n"
          "for r in rows:\n"
          "    if r[\"stat\"] == \"mean\":\n"
          "        means[int(r[\"scale\"])].append(r)\n"
          "for scale, rs in sorted(means.items()):\n"
          "    labels = [str(int(float(r[\"rule_or_k\"]))) for r in rs]\n"
          "    fig, axes = plt.subplots(2, 2, figsize=(12, 8))\n"
          "    for ax, (key, title) in zip(axes.flat, PANELS):\n"
          "        ax.bar(range(len(rs)), [float(r[key]) for r in rs])\n"
          "        ax.set_xticks(range(len(rs)))\n"
          "        ax.set_xticklabels(labels, rotation=90)\n"
          "        ax.set_title(title)\n"
          "        ax.set_ylim(0, 1.05)\n"
          "    fig.suptitle(f\"ECA, b={scale}\")\n"
          "    fig.tight_layout()\n"
          "    fig.savefig(f\"eca_b{scale}.png\")\n";
  }
  return os.str();
}

}  // namespace infodyn::io
