#pragma once

// Input parsing and result serialization: bit-string inputs, CSV/JSON
// reports, sweep result files and plot scripts.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infodyn/experiments.hpp"
#include "infodyn/measures.hpp"

namespace infodyn::io {

enum class InputFormat {
  /// '0'/'1' characters; whitespace ignored.
  ascii01,
  /// Each byte is 8 bits, most significant bit first.
  bytes,
  /// Comma/whitespace separated non-negative integers, each expanded to a
  /// fixed number of bits (MSB first).
  symbols,
};

enum class OutputFormat { csv, json };

InputFormat parse_input_format(std::string_view text);
OutputFormat parse_output_format(std::string_view text);

/// Decodes `data` into a binary sequence. For InputFormat::symbols a
/// `symbol_bits` of 0 picks the narrowest width holding the largest symbol.
/// Throws std::invalid_argument on malformed or empty input.
SymbolSequence parse_input(std::string_view data, InputFormat format, int symbol_bits = 0);

/// Canonical ascii01 form: the bits with no separators, newline-terminated.
std::string to_ascii01(const SymbolSequence& bits);

/// Fixed 9-significant-digit rendering used by every CSV writer.
std::string format_number(double v);

/// Per-scale "scale,I_b,E,S,C" report. Scales the input was too short for
/// are written as null (empty CSV fields).
std::string measure_report(std::span<const ScaleProfileEntry> entries, OutputFormat format);

/// One "scale,E,S,C,H" row per MeasureSet.
std::string measure_set_report(std::span<const MeasureSet> rows, OutputFormat format);

/// experiment,rule_or_k,scale,instance,seed,E,S,C,H
std::string instances_csv(std::span<const SweepResult> results);
/// experiment,rule_or_k,scale,stat,E,S,C,H with stat in mean, median, q1, q3,
/// whisker_low, whisker_high, min, max.
std::string aggregate_csv(std::span<const SweepResult> results);
/// JSON mirrors of the two files above.
std::string instances_json(std::span<const SweepResult> results);
std::string aggregate_json(std::span<const SweepResult> results);

/// rule,scale,E,S,C,H,H_reference
std::string profile_csv(std::span<const ProfileRow> rows);
std::string profile_json(std::span<const ProfileRow> rows);

/// Standalone matplotlib script that lays out the aggregate file of an
/// experiment ("rbn", "eca" or "profile") as a 2x2 panel of E, S, H, C.
std::string plot_script(std::string_view experiment, std::string_view data_file);

}  // namespace infodyn::io
