#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ordlab/io.hpp"

namespace ordlab {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string get_string(const json& j, const char* key) {
  if (!j[key].is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return j[key].get<std::string>();
}

unsigned get_nat(const json& j, const char* key) {
  if (!j[key].is_number_unsigned()) throw ParseError(std::string("field '") + key + "' must be a natural number");
  return j[key].get<unsigned>();
}

std::vector<Ordinal> get_ordinals(const json& j, const char* key, unsigned deg) {
  if (!j[key].is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  std::vector<Ordinal> out;
  for (const json& x : j[key]) {
    if (!x.is_string()) throw ParseError(std::string("entries of '") + key + "' must be ordinal strings");
    out.push_back(parse_ordinal(x.get<std::string>(), deg));
  }
  return out;
}

}  // namespace

SequenceSpec parse_sequence_spec(std::string_view json_text, unsigned deg) {
  json j = parse_json(json_text);
  if (!j.is_object()) throw ParseError("sequence file must hold a JSON object");
  SequenceSpec s;
  if (j.contains("rule")) s.rule = get_string(j, "rule");
  if (j.contains("base")) s.base = get_string(j, "base");
  if (j.contains("thresholds")) s.thresholds = get_ordinals(j, "thresholds", deg);
  if (j.contains("indexBound")) s.index_bound = get_nat(j, "indexBound");
  if (j.contains("gamma")) {
    if (!j["gamma"].is_string()) throw ParseError("field 'gamma' must be an ordinal string");
    s.gamma = parse_ordinal(j["gamma"].get<std::string>(), deg);
  }
  if (j.contains("overrides")) {
    if (!j["overrides"].is_array()) throw ParseError("field 'overrides' must be an array");
    for (const json& o : j["overrides"]) {
      if (!o.is_object() || !o.contains("alpha") || !o.contains("set"))
        throw ParseError("override needs 'alpha' and 'set'");
      OverrideSpec ov;
      ov.alpha = parse_ordinal(get_string(o, "alpha"), deg);
      ov.index = o.contains("i") ? get_nat(o, "i") : 0;
      ov.set = parse_set(get_string(o, "set"), deg);
      s.overrides.push_back(std::move(ov));
    }
  }
  return s;
}

UniverseParams parse_universe(std::string_view json_text) {
  json j = parse_json(json_text);
  if (!j.is_object()) throw ParseError("universe file must hold a JSON object");
  UniverseParams p = UniverseParams::defaults();
  if (j.contains("deg")) {
    p.deg = get_nat(j, "deg");
    p.delta = Ordinal::omega_pow(p.deg);
  }
  if (j.contains("indexBound")) {
    p.index_bound = get_nat(j, "indexBound");
    p.thresholds = default_thresholds(p.index_bound);
  }
  if (j.contains("thresholds")) p.thresholds = get_ordinals(j, "thresholds", p.deg);
  if (j.contains("probe")) p.probe = get_ordinals(j, "probe", p.deg);
  try {
    p.check();
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid universe: ") + e.what());
  }
  return p;
}

IndexedSeq make_sequence(const std::string& rule, const std::string& base, const UniverseParams& params) {
  if (rule == "ladder") return gen_ladder(params);
  if (rule == "limits") return gen_limits(params);
  if (rule == "transform") {
    if (base == "transform") throw ParseError("transform base must be ladder or limits");
    return transform_square_to_indexed(make_sequence(base, "", params), params);
  }
  throw ParseError("unknown rule '" + rule + "'");
}

IndexedSeq build_sequence(const SequenceSpec& spec, UniverseParams params) {
  if (spec.index_bound) {
    params.index_bound = *spec.index_bound;
    if (spec.thresholds.empty()) params.thresholds = default_thresholds(params.index_bound);
  }
  if (!spec.thresholds.empty()) params.thresholds = spec.thresholds;
  try {
    params.check();
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid sequence parameters: ") + e.what());
  }
  IndexedSeq seq = make_sequence(spec.rule, spec.base, params);
  std::map<OverrideKey, OrdSet> overrides;
  for (const OverrideSpec& o : spec.overrides) {
    if (!o.alpha.is_limit()) throw ParseError("override at non-limit " + o.alpha.to_string());
    if (o.index >= params.index_bound) throw ParseError("override index out of range");
    overrides[{o.alpha, o.index}] = o.set;
  }
  return IndexedSeq(params, seq.rule_ptr(), std::move(overrides));
}

std::vector<Ordinal> parse_probe(std::string_view text, unsigned deg) {
  if (text == "default") return default_probe();
  std::vector<Ordinal> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!piece.empty()) out.push_back(parse_ordinal(piece, deg));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace ordlab
