#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordlab/sequences.hpp"

namespace ordlab {

struct OverrideSpec {
  Ordinal alpha;
  unsigned index = 0;
  OrdSet set;
};

/// Contents of a sequence (or condition) file:
/// {"rule", "base", "thresholds", "indexBound", "overrides", "gamma"}.
struct SequenceSpec {
  std::string rule = "ladder";
  std::string base = "ladder";
  std::vector<Ordinal> thresholds;
  std::optional<unsigned> index_bound;
  std::vector<OverrideSpec> overrides;
  std::optional<Ordinal> gamma;
};

/// Throws ParseError on malformed JSON, unknown keys' types or bad literals.
SequenceSpec parse_sequence_spec(std::string_view json_text, unsigned deg = 4);
/// Universe file: {"deg", "thresholds", "indexBound", "probe"}; missing
/// fields keep their defaults.
UniverseParams parse_universe(std::string_view json_text);

/// Applies the file's thresholds and index bound to params, then builds the
/// named rule with overrides.
IndexedSeq build_sequence(const SequenceSpec& spec, UniverseParams params);
/// "ladder", "limits", or "transform" (of base).
IndexedSeq make_sequence(const std::string& rule, const std::string& base, const UniverseParams& params);

/// Parses a comma separated ordinal list, or "default" for the default probe.
std::vector<Ordinal> parse_probe(std::string_view text, unsigned deg = 4);

std::string read_file(const std::string& path);

}  // namespace ordlab
