// ordlab: command-line driver for the validators, lemma suites, tree
// builder, coloring lab and poset checks. Every verb writes one JSON report.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ordlab/colorings.hpp"
#include "ordlab/io.hpp"
#include "ordlab/posets.hpp"
#include "ordlab/random.hpp"
#include "ordlab/tree.hpp"
#include "ordlab/walks.hpp"
#include "report_json.hpp"

using namespace ordlab;
using ordlab::cli::CliReport;
using ordlab::cli::Json;
using ordlab::cli::Row;

namespace {

struct Common {
  std::string universe;
  std::string probe;
  std::string out;
  std::uint64_t seed = 1;
  std::optional<unsigned> index_bound;
};

struct SeqOpts {
  std::string file;
  std::string rule = "ladder";
  std::string base = "ladder";
};

struct Options {
  Common common;
  SeqOpts seq;
  std::string mode;
  std::string alpha, beta;
  std::optional<unsigned> index;
  std::vector<std::string> levels;
  std::string betas;
  std::string indices;
  bool ascent = false;
  std::string suite = "all";
  std::vector<std::string> sets;
  std::string alpha_probe;
  std::string e_set;
  std::string plain = "single";
  // coloring
  std::string coloring_file;
  unsigned n = 6, l = 3, max_x = 3;
  double min_frac = 0.5;
  std::string points;
  // poset
  std::string kind;
  std::string extends_file;
  std::string diamond_beta, diamond_set;
  // gen
  unsigned count = 10;
  std::string cap;
  std::string write;
};

std::string str(const Ordinal& x) { return x.to_string(); }

std::string join(const std::vector<Ordinal>& xs) {
  std::string s;
  for (const Ordinal& x : xs) s += (s.empty() ? "" : ",") + str(x);
  return s;
}

Json ordinals_json(const std::vector<Ordinal>& xs) {
  Json j = Json::array();
  for (const Ordinal& x : xs) j.push_back(str(x));
  return j;
}

std::uint64_t parse_count(const std::string& text) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) throw ParseError("bad number '" + text + "'");
  return v;
}

std::vector<unsigned> parse_indices(const std::string& text, const UniverseParams& p) {
  if (text.empty() || text == "all") return all_indices(p);
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    const std::uint64_t i = parse_count(piece);
    if (i >= p.index_bound) throw ParseError("bad index '" + piece + "'");
    out.push_back(static_cast<unsigned>(i));
  }
  return out;
}

Mask parse_points(const std::string& text, unsigned n) {
  Mask m = 0;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    const std::uint64_t x = parse_count(piece);
    if (x >= n) throw ParseError("bad point '" + piece + "'");
    m |= Mask{1} << x;
  }
  return m;
}

class Runner {
 public:
  Runner(const Options& o, CliReport& rep) : o_(o), rep_(rep) {}

  void load_universe() {
    params_ = o_.common.universe.empty() ? UniverseParams::defaults() : parse_universe(read_file(o_.common.universe));
    if (o_.common.index_bound) {
      params_.index_bound = *o_.common.index_bound;
      params_.thresholds = default_thresholds(params_.index_bound);
    }
    if (!o_.common.probe.empty()) params_.probe = parse_probe(o_.common.probe, params_.deg);
    try {
      params_.check();
    } catch (const DomainError& e) {
      throw ParseError(std::string("invalid universe: ") + e.what());
    }
    Json& c = rep_.config();
    c["universe"] = o_.common.universe.empty() ? "default" : o_.common.universe;
    c["deg"] = params_.deg;
    c["indexBound"] = params_.index_bound;
    c["probe"] = o_.common.probe.empty() ? "default" : o_.common.probe;
    c["probeSize"] = params_.probe.size();
    c["seed"] = o_.common.seed;
  }

  SequenceSpec spec() const {
    if (!o_.seq.file.empty()) return parse_sequence_spec(read_file(o_.seq.file), params_.deg);
    SequenceSpec s;
    s.rule = o_.seq.rule;
    s.base = o_.seq.base;
    return s;
  }

  IndexedSeq sequence(const SequenceSpec& s) {
    Json& c = rep_.config();
    if (!o_.seq.file.empty()) c["file"] = o_.seq.file;
    c["rule"] = s.rule;
    if (s.rule == "transform") c["base"] = s.base;
    return build_sequence(s, params_);
  }

  // Probe limits plus every overridden point, so planted entries are visited.
  std::vector<Ordinal> points(const IndexedSeq& seq) const {
    std::vector<Ordinal> pts = params_.probe;
    for (const auto& [key, _] : seq.overrides()) pts.push_back(key.first);
    return probe_limits(seq.params(), pts);
  }

  PlainSeq plain(const IndexedSeq& seq) const {
    if (o_.plain == "single") return PlainSeq::single(seq);
    if (o_.plain == "all") return PlainSeq::all_indices(seq);
    throw ParseError("--plain must be single or all");
  }

  std::vector<Ordinal> alpha_probe() const {
    if (!o_.alpha_probe.empty()) return parse_probe(o_.alpha_probe, params_.deg);
    std::vector<Ordinal> ap{Ordinal(0)};
    ap.insert(ap.end(), params_.probe.begin(), params_.probe.end());
    for (const Ordinal& x : params_.probe) ap.push_back(succ(x));
    return ap;
  }

  void validate() {
    SequenceSpec s = spec();
    IndexedSeq seq = sequence(s);
    std::string mode = o_.mode.empty() ? "auto" : o_.mode;
    if (mode == "auto") mode = s.rule == "transform" ? "indexed" : "plain";
    rep_.config()["mode"] = mode;
    std::vector<Ordinal> pts = points(seq);
    if (mode == "plain") {
      rep_.add_report("validate_plain", std::to_string(pts.size()) + " limits", validate_plain(plain(seq), pts));
    } else if (mode == "indexed") {
      rep_.add_report("validate_indexed", std::to_string(pts.size()) + " limits", validate_indexed(seq, pts));
      if (as_transform(seq))
        rep_.add_report("hypotheses", std::to_string(pts.size()) + " limits", check_transform_hypotheses(seq, pts));
    } else {
      throw ParseError("--mode must be auto, plain or indexed");
    }
  }

  void walk() {
    IndexedSeq seq = sequence(spec());
    const Ordinal alpha = parse_ordinal(o_.alpha, params_.deg);
    const Ordinal beta = parse_ordinal(o_.beta, params_.deg);
    const unsigned i = o_.index ? *o_.index : seq.i_of(beta);
    Json& c = rep_.config();
    c["alpha"] = str(alpha);
    c["beta"] = str(beta);
    c["i"] = i;
    WalkResult w = ordlab::walk(seq, alpha, beta, i);
    Row row{"walk", "(" + str(alpha) + ", " + str(beta) + ", " + std::to_string(i) + ")", "walk reaches alpha",
            format_walk(w), true};
    Json steps = Json::array();
    for (const WalkStep& st : w.steps) steps.push_back(Json::array({str(st.beta), st.index}));
    Json proj = Json::array();
    for (const OrdSet& p : w.projection) proj.push_back(p.to_literal());
    row.extra["steps"] = std::move(steps);
    row.extra["projection"] = std::move(proj);
    row.extra["trace"] = ordinals_json(w.trace);
    rep_.add(std::move(row));
  }

  void tree() {
    IndexedSeq seq = sequence(spec());
    std::vector<Ordinal> levels;
    for (const std::string& l : o_.levels)
      for (const Ordinal& x : parse_probe(l, params_.deg)) levels.push_back(x);
    if (levels.empty()) throw ParseError("tree needs at least one --level");
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::vector<Ordinal> betas = o_.betas.empty() ? params_.probe : parse_probe(o_.betas, params_.deg);
    std::vector<unsigned> idx = parse_indices(o_.indices, params_);
    Json& c = rep_.config();
    c["levels"] = ordinals_json(levels);
    c["betas"] = o_.betas.empty() ? Json("probe") : ordinals_json(betas);
    c["ascent"] = o_.ascent;

    std::vector<std::vector<TreeNode>> built;
    for (const Ordinal& lv : levels) {
      LevelResult r = build_level(seq, lv, betas, idx);
      rep_.add_report("level", str(lv), r.report);
      built.push_back(std::move(r.nodes));
    }
    Report special = check_special(seq, built);
    rep_.add_report("special", join(levels), special);
    if (!o_.ascent) return;

    AscentReport ar = verify_ascent(seq, build_ascent_path(seq, levels));
    rep_.add_counts(ar.report);
    for (const AscentRow& a : ar.rows) {
      Row row{"ascent", "(" + str(a.lower) + ", " + str(a.upper) + ")", "b_lower(i) <_T b_upper(i) for i >= i*",
              a.pass ? "holds" : "fails", a.pass};
      row.extra["pair"] = Json::array({str(a.lower), str(a.upper)});
      row.extra["i_star"] = a.i_star ? Json(*a.i_star) : Json(nullptr);
      row.extra["checkedIndices"] = a.checked_indices;
      row.extra["result"] = a.pass ? "pass" : "fail";
      rep_.add(std::move(row));
    }
  }

  void lemmas() {
    IndexedSeq seq = sequence(spec());
    std::vector<unsigned> idx = parse_indices(o_.indices, params_);
    rep_.config()["suite"] = o_.suite;
    const bool walks = o_.suite == "walks" || o_.suite == "all";
    const bool size = o_.suite == "size" || o_.suite == "all";
    if (!walks && !size) throw ParseError("--suite must be walks, size or all");
    if (walks) {
      // The first lemma also ranges over successor points.
      std::vector<Ordinal> wide = params_.probe;
      for (const Ordinal& x : params_.probe) wide.push_back(succ(x));
      rep_.add_report("lemma1", std::to_string(wide.size()) + " points", check_lemma1(seq, wide, idx));
      rep_.add_report("lemma2", std::to_string(params_.probe.size()) + " points",
                      check_lemma2(seq, params_.probe, idx));
    }
    if (size) {
      Report all;
      for (const Ordinal& alpha : probe_limits(params_, params_.probe))
        all.merge(collect_D_alpha(seq, alpha, params_.probe, idx).report);
      rep_.add_report("size", std::to_string(params_.probe.size()) + " points", all);
    }
  }

  void transform() {
    SequenceSpec s = spec();
    if (o_.seq.file.empty()) {
      s.rule = "transform";
      s.base = o_.seq.base;
    }
    IndexedSeq seq = sequence(s);
    const TransformRule* t = as_transform(seq);
    if (!t) throw ParseError("transform needs a transform rule");
    std::vector<Ordinal> pts = points(seq);
    rep_.add_report("validate_indexed", std::to_string(pts.size()) + " limits", validate_indexed(seq, pts));
    rep_.add_report("hypotheses", std::to_string(pts.size()) + " limits", check_transform_hypotheses(seq, pts));
    auto counts = t->case_counts();
    Row row{"cases", "limits evaluated", "informational",
            "base " + std::to_string(counts[0]) + ", case1 " + std::to_string(counts[1]) + ", case2 " +
                std::to_string(counts[2]) + ", case3 " + std::to_string(counts[3]),
            true};
    row.extra["caseCounts"] = counts;
    rep_.add(std::move(row));
  }

  void guessing() {
    IndexedSeq seq = sequence(spec());
    PlainSeq ps = plain(seq);
    const std::string mode = o_.mode.empty() ? "minus" : o_.mode;
    std::vector<OrdSet> as;
    for (const std::string& a : o_.sets) as.push_back(parse_set(a, params_.deg));
    if (as.empty()) as.push_back(OrdSet::range(Ordinal(0), params_.delta));
    Json& c = rep_.config();
    c["mode"] = mode;
    Json aj = Json::array();
    for (const OrdSet& a : as) aj.push_back(a.to_literal());
    c["A"] = std::move(aj);
    std::vector<Ordinal> hit;
    if (mode == "minus") {
      if (as.size() != 1) throw ParseError("minus mode takes exactly one --A");
      hit = check_guessing_minus(ps, as.front(), params_.probe);
    } else if (mode == "full") {
      hit = check_guessing_full(ps, as, params_.probe, alpha_probe());
    } else {
      throw ParseError("--mode must be minus or full");
    }
    for (const Ordinal& beta : probe_limits(params_, params_.probe)) {
      const bool guessed = std::binary_search(hit.begin(), hit.end(), beta);
      rep_.add({"guess", str(beta), "informational", guessed ? "guessed" : "not guessed", true});
    }
    rep_.add_checked(hit.size());
  }

  void incon() {
    SequenceSpec s = spec();
    if (o_.seq.file.empty() && o_.seq.rule == "ladder") s.rule = "limits";
    IndexedSeq seq = sequence(s);
    PlainSeq ps = plain(seq);
    OrdSet e = o_.e_set.empty() ? OrdSet::valuation_range(3, Ordinal(0), params_.delta) : parse_set(o_.e_set, params_.deg);
    rep_.config()["E"] = e.to_literal();
    std::vector<Ordinal> t = compute_nonreflecting_T(ps, params_.probe);
    Row row{"T", "probe", "informational", std::to_string(t.size()) + " points", true};
    row.extra["T"] = ordinals_json(t);
    rep_.add(std::move(row));
    rep_.add_report("incon", "E = " + e.to_literal(), check_incon(ps, e, params_.probe, alpha_probe()));
  }

  void coloring() {
    Json& c = rep_.config();
    if (o_.suite == "exhaustive") {
      c["suite"] = "exhaustive";
      LabResult lab = coloring_lab(4, 3, 3, 5);
      Row row{"corpus", "levels <= 4, width <= 3, L <= 3, N <= 5", "informational",
              std::to_string(lab.corpus.trees) + " trees, " + std::to_string(lab.corpus.ascent_paths) +
                  " ascent paths, " + std::to_string(lab.subadditive) + " of " + std::to_string(lab.colorings) +
                  " colorings subadditive",
              true};
      rep_.add(std::move(row));
      rep_.add_report("lab", "exhaustive", lab.report);
      return;
    }
    Coloring col = o_.coloring_file.empty() ? random_coloring(o_.n, o_.l, o_.common.seed)
                                            : parse_coloring(read_file(o_.coloring_file));
    c["source"] = o_.coloring_file.empty() ? "random" : o_.coloring_file;
    c["N"] = col.n();
    c["L"] = col.l();
    c["maxX"] = o_.max_x;
    Report sub = check_subadditive(col);
    rep_.add_report("subadditive", "c", sub);
    if (!sub.ok()) return;
    CoveringMatrix m = matrix_from_coloring(col);
    rep_.add_report("matrix", "D from c", validate_matrix(m, o_.max_x));
    CpResult cp = cp_search(m, o_.min_frac, o_.max_x);
    Row row{"cp", "min fraction " + std::to_string(o_.min_frac), "informational",
            cp.witness ? format_mask(*cp.witness) : "no witness", true};
    row.extra["exhaustive"] = cp.exhaustive;
    row.extra["topBoundary"] = cp.top_boundary;
    rep_.add(std::move(row));
    if (!o_.points.empty()) {
      const Mask a = parse_points(o_.points, col.n());
      const unsigned i = o_.index.value_or(0);
      const unsigned beta = o_.beta.empty() ? col.n() - 1 : static_cast<unsigned>(parse_count(o_.beta));
      rep_.add_report("cover_bound", format_mask(a) + " i=" + std::to_string(i) + " beta=" + std::to_string(beta),
                      cover_bound_check(col, a, i, beta));
      rep_.add({"unbounded", format_mask(a), "informational", check_unbounded(col, a) ? "unbounded" : "bounded", true});
    }
  }

  void poset() {
    if (o_.seq.file.empty()) throw ParseError("poset needs --file");
    SequenceSpec s = spec();
    IndexedSeq seq = sequence(s);
    std::string kind = o_.kind.empty() ? (s.rule == "transform" ? "ind" : "plain") : o_.kind;
    rep_.config()["kind"] = kind;
    if (s.gamma) rep_.config()["gamma"] = str(*s.gamma);
    std::optional<IndexedSeq> other;
    std::optional<Ordinal> other_gamma;
    if (!o_.extends_file.empty()) {
      SequenceSpec t = parse_sequence_spec(read_file(o_.extends_file), params_.deg);
      other = build_sequence(t, params_);
      other_gamma = t.gamma;
      rep_.config()["extends"] = o_.extends_file;
    }
    if (kind == "ind") {
      IndCondition c{seq, s.gamma};
      Report r = validate_ind(c, params_.probe);
      rep_.add_report("condition", o_.seq.file, r);
      if (other && r.ok()) {
        bool ok = extends(c, IndCondition{*other, other_gamma}, params_.probe);
        rep_.add({"extends", o_.seq.file + " <= " + o_.extends_file, "extends", ok ? "extends" : "does not extend", ok});
      }
    } else if (kind == "plain") {
      PlainCondition c{seq, s.gamma};
      Report r = validate_plain_cond(c, params_.probe);
      rep_.add_report("condition", o_.seq.file, r);
      if (other && r.ok()) {
        bool ok = extends(c, PlainCondition{*other, other_gamma}, params_.probe);
        rep_.add({"extends", o_.seq.file + " <= " + o_.extends_file, "extends", ok ? "extends" : "does not extend", ok});
      }
    } else {
      throw ParseError("--kind must be ind or plain");
    }
    if (!o_.diamond_beta.empty()) diamond(parse_ordinal(o_.diamond_beta, params_.deg), parse_set(o_.diamond_set, params_.deg));
  }

  void diamond(const Ordinal& beta, const OrdSet& b) {
    OrdSet club = diamond_encode(beta, b);
    OrdSet back = diamond_decode(club, beta);
    Row row{"diamond", "beta=" + str(beta) + " B=" + b.to_literal(), b.to_literal(), back.to_literal(), back == b};
    row.extra["club"] = club.to_literal();
    row.extra["clubInBeta2"] = club.is_club_in(ord_mul_nat(beta, 2));
    rep_.add(std::move(row));
    rep_.add_checked(1);
  }

  void gen() {
    const std::string kind = o_.kind.empty() ? "sets" : o_.kind;
    Json& c = rep_.config();
    c["kind"] = kind;
    c["count"] = o_.count;
    Rng rng(o_.common.seed);
    std::string artifact;
    if (kind == "sets" || kind == "diamond") {
      const Ordinal cap = o_.cap.empty() ? (kind == "sets" ? params_.delta : literals::omega) : parse_ordinal(o_.cap, params_.deg);
      c["cap"] = str(cap);
      for (unsigned k = 0; k < o_.count; ++k) {
        OrdSet s = kind == "sets" ? random_set(rng, cap) : random_diamond_set(rng, cap);
        rep_.add({kind, std::to_string(k), "generated", s.to_literal(), true});
        artifact += s.to_literal() + "\n";
      }
    } else if (kind == "coloring") {
      Coloring col = random_coloring(o_.n, o_.l, o_.common.seed);
      c["N"] = o_.n;
      c["L"] = o_.l;
      artifact = format_coloring(col);
      rep_.add({"coloring", "N=" + std::to_string(o_.n) + " L=" + std::to_string(o_.l), "generated",
                check_subadditive(col).ok() ? "subadditive" : "not subadditive", true});
    } else if (kind == "probe") {
      for (const Ordinal& x : params_.probe) artifact += str(x) + "\n";
      rep_.add({"probe", "universe", "generated", std::to_string(params_.probe.size()) + " points", true});
    } else if (kind == "sequence") {
      Json j;
      j["rule"] = o_.seq.rule;
      if (o_.seq.rule == "transform") j["base"] = o_.seq.base;
      j["indexBound"] = params_.index_bound;
      j["thresholds"] = ordinals_json(params_.thresholds);
      j["overrides"] = Json::array();
      artifact = j.dump(2) + "\n";
      rep_.add({"sequence", o_.seq.rule, "generated", "sequence file", true});
    } else {
      throw ParseError("--kind must be sets, diamond, coloring, probe or sequence");
    }
    if (!o_.write.empty()) {
      std::ofstream out(o_.write);
      if (!out || !(out << artifact)) throw ParseError("cannot write " + o_.write);
      c["write"] = o_.write;
    } else {
      c["artifact"] = artifact;
    }
  }

 private:
  const Options& o_;
  CliReport& rep_;
  UniverseParams params_;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--universe", o.common.universe, "Universe JSON file");
  app->add_option("--probe", o.common.probe, "Comma-separated ordinals, or 'default'");
  app->add_option("--out", o.common.out, "Report path (stdout when omitted)");
  app->add_option("--seed", o.common.seed, "Seed for generated data");
  app->add_option("--index-bound", o.common.index_bound, "Index bound override");
}

void add_seq(CLI::App* app, Options& o) {
  app->add_option("--file,--seq", o.seq.file, "Sequence file");
  app->add_option("--rule", o.seq.rule, "ladder | limits | transform");
  app->add_option("--base", o.seq.base, "Base rule of a transform");
}

int write_report(const Options& o, const CliReport& rep) {
  const std::string text = rep.dump();
  if (o.common.out.empty()) {
    std::cout << text;
    std::cerr << rep.summary() << "\n";
  } else {
    std::ofstream out(o.common.out, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "cannot write " << o.common.out << "\n";
      return 2;
    }
    std::cout << rep.summary() << "\n";
  }
  if (rep.has_error()) return 2;
  return rep.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordlab: checks for square sequences, walks, trees and colorings"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Validate a sequence over the probe");
  add_seq(validate, o);
  validate->add_option("--mode", o.mode, "auto | plain | indexed");
  validate->add_option("--plain", o.plain, "single | all");

  auto* walk = app.add_subcommand("walk", "Minimal walk from beta down to alpha");
  add_seq(walk, o);
  walk->add_option("--alpha", o.alpha)->required();
  walk->add_option("--beta", o.beta)->required();
  walk->add_option("--i", o.index, "Index (default i(beta))");

  auto* tree = app.add_subcommand("tree", "Build tree levels, check specialness and ascent");
  add_seq(tree, o);
  tree->add_option("--level", o.levels, "Level ordinal(s); repeatable or comma-separated")->required();
  tree->add_option("--betas", o.betas, "Node origins (default: probe)");
  tree->add_option("--indices", o.indices, "Comma-separated indices (default: all)");
  tree->add_flag("--ascent", o.ascent, "Also build and verify the ascent path");

  auto* lemmas = app.add_subcommand("lemmas", "Walk and size lemma suites");
  add_seq(lemmas, o);
  lemmas->add_option("--suite", o.suite, "walks | size | all");
  lemmas->add_option("--indices", o.indices, "Comma-separated indices (default: all)");

  auto* transform = app.add_subcommand("transform", "Run and check the square-to-indexed transform");
  add_seq(transform, o);

  auto* guessing = app.add_subcommand("guessing", "Guessing clauses over the probe");
  add_seq(guessing, o);
  guessing->add_option("--mode", o.mode, "minus | full");
  guessing->add_option("--A", o.sets, "Set literal; repeatable");
  guessing->add_option("--alpha-probe", o.alpha_probe, "Comma-separated ordinals");
  guessing->add_option("--plain", o.plain, "single | all");

  auto* incon = app.add_subcommand("incon", "Nonreflecting set T and the club E fixture");
  add_seq(incon, o);
  incon->add_option("--E", o.e_set, "Club literal (default: multiples of w^3)");
  incon->add_option("--alpha-probe", o.alpha_probe, "Comma-separated ordinals");
  incon->add_option("--plain", o.plain, "single | all");

  auto* coloring = app.add_subcommand("coloring", "Coloring lab");
  coloring->add_option("--file", o.coloring_file, "Coloring file");
  coloring->add_option("--suite", o.suite, "exhaustive runs the full desk-scale lab");
  coloring->add_option("--n", o.n, "Points of a random coloring");
  coloring->add_option("--l", o.l, "Colors of a random coloring");
  coloring->add_option("--max-x", o.max_x, "Largest X checked for coherence and CP");
  coloring->add_option("--min-frac", o.min_frac, "Least size of a CP witness, as a fraction of N");
  coloring->add_option("--A", o.points, "Comma-separated points for the cover bound");
  coloring->add_option("--i", o.index, "Row of the cover bound");
  coloring->add_option("--beta", o.beta, "Column of the cover bound");

  auto* poset = app.add_subcommand("poset", "Conditions, extension and the diamond coding");
  add_seq(poset, o);
  poset->add_option("--kind", o.kind, "ind | plain");
  poset->add_option("--extends", o.extends_file, "Condition the file should extend");
  poset->add_option("--diamond-beta", o.diamond_beta, "Beta for a diamond roundtrip");
  poset->add_option("--diamond-set", o.diamond_set, "Subset of beta to encode");

  auto* gen = app.add_subcommand("gen", "Generate corpora and fixtures");
  gen->add_option("--kind", o.kind, "sets | diamond | coloring | probe | sequence");
  gen->add_option("--count", o.count);
  gen->add_option("--cap", o.cap, "Bound (sets) or beta (diamond)");
  gen->add_option("--n", o.n);
  gen->add_option("--l", o.l);
  gen->add_option("--rule", o.seq.rule);
  gen->add_option("--base", o.seq.base);
  gen->add_option("--write", o.write, "Also write the artifact to this path");

  for (CLI::App* sub : app.get_subcommands({})) add_common(sub, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    // Still leave a report behind when the destination is known.
    auto subs = app.get_subcommands();
    CliReport rep(subs.empty() ? "none" : subs.front()->get_name());
    rep.set_error(e.what());
    if (!o.common.out.empty()) write_report(o, rep);
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  CliReport rep(chosen->get_name());
  Runner run(o, rep);
  try {
    run.load_universe();
    const std::string& v = chosen->get_name();
    if (v == "validate") run.validate();
    else if (v == "walk") run.walk();
    else if (v == "tree") run.tree();
    else if (v == "lemmas") run.lemmas();
    else if (v == "transform") run.transform();
    else if (v == "guessing") run.guessing();
    else if (v == "incon") run.incon();
    else if (v == "coloring") run.coloring();
    else if (v == "poset") run.poset();
    else run.gen();
  } catch (const std::exception& e) {
    rep.set_error(e.what());
  }
  return write_report(o, rep);
}
