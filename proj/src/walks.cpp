#include "ordlab/walks.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <unordered_map>

namespace ordlab {

WalkResult walk(const IndexedSeq& seq, const Ordinal& alpha, const Ordinal& beta, unsigned i) {
  if (alpha > beta) throw DomainError("walk needs alpha <= beta");
  WalkResult w;
  if (alpha == beta) return w;
  if (!seq.admissible(beta, i))
    throw DomainError("index " + std::to_string(i) + " not admissible at " + beta.to_string());
  Ordinal b = beta;
  unsigned k = i;
  for (;;) {
    OrdSet c = seq.club(b, k);
    OrdSet cut = c.restrict(alpha);
    w.steps.push_back({b, k});
    w.trace.push_back(cut.otp());
    w.projection.push_back(std::move(cut));
    if (c.contains(alpha)) break;
    Ordinal next = c.min_above(alpha);
    if (next >= b || next <= alpha) throw DomainError("walk failed to descend at " + b.to_string());
    b = std::move(next);
    k = seq.i_of(b);
  }
  return w;
}

bool kb_less(const std::vector<Ordinal>& sigma, const std::vector<Ordinal>& tau) {
  std::size_t n = std::min(sigma.size(), tau.size());
  for (std::size_t m = 0; m < n; ++m)
    if (sigma[m] != tau[m]) return sigma[m] < tau[m];
  return sigma.size() > tau.size();
}

Projection restrict_projection(const IndexedSeq& seq, const Projection& upper_proj, const Ordinal& upper,
                               const Ordinal& lower) {
  if (lower > upper) throw DomainError("restrict_projection needs lower <= upper");
  if (lower == upper) return upper_proj;
  for (std::size_t m = 0; m < upper_proj.size(); ++m) {
    OrdSet rest = upper_proj[m].above(lower);
    if (rest.empty()) continue;
    Ordinal gamma = *rest.min();
    Projection out(upper_proj.begin(), upper_proj.begin() + static_cast<std::ptrdiff_t>(m));
    out.push_back(upper_proj[m].restrict(lower));
    Projection tail = walk(seq, lower, gamma, seq.i_of(gamma)).projection;
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }
  Projection out = upper_proj;
  Projection tail = walk(seq, lower, upper, seq.i_of(upper)).projection;
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::vector<unsigned> all_indices(const UniverseParams& params) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < params.index_bound; ++i) out.push_back(i);
  return out;
}

namespace {

std::string str(const Ordinal& x) { return x.to_string(); }

struct ProjectionHash {
  std::size_t operator()(const Projection& p) const {
    std::size_t h = p.size();
    for (const OrdSet& s : p) h ^= s.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Every walk between two probe points at one index, with projections
// interned so the lemma loops compare integers.
class WalkTable {
 public:
  WalkTable(const IndexedSeq& seq, std::vector<Ordinal> points) : seq_(seq), pts_(std::move(points)) {
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    pts_.erase(std::remove_if(pts_.begin(), pts_.end(), [](const Ordinal& x) { return x.is_zero(); }), pts_.end());
  }

  void fill(unsigned i) {
    const std::size_t n = pts_.size();
    ids_.assign(n * n, -1);
    traces_.assign(n * n, {});
    for (std::size_t b = 0; b < n; ++b) {
      if (!seq_.admissible(pts_[b], i)) continue;
      for (std::size_t a = 0; a < b; ++a) {
        WalkResult w = walk(seq_, pts_[a], pts_[b], i);
        ids_[a * n + b] = intern(std::move(w.projection));
        traces_[a * n + b] = std::move(w.trace);
      }
    }
  }

  std::size_t size() const { return pts_.size(); }
  const Ordinal& at(std::size_t k) const { return pts_[k]; }
  int id(std::size_t a, std::size_t b) const { return ids_[a * pts_.size() + b]; }
  const std::vector<Ordinal>& trace(std::size_t a, std::size_t b) const { return traces_[a * pts_.size() + b]; }
  const Projection& projection(int id) const { return store_[static_cast<std::size_t>(id)]; }

 private:
  int intern(Projection p) {
    auto it = lookup_.find(p);
    if (it != lookup_.end()) return it->second;
    int id = static_cast<int>(store_.size());
    lookup_.emplace(p, id);
    store_.push_back(std::move(p));
    return id;
  }

  const IndexedSeq& seq_;
  std::vector<Ordinal> pts_;
  std::vector<int> ids_;
  std::vector<std::vector<Ordinal>> traces_;
  std::unordered_map<Projection, int, ProjectionHash> lookup_;
  std::vector<Projection> store_;
};

std::string triple(const Ordinal& a0, const Ordinal& a1, const Ordinal& b, unsigned i) {
  return "(" + str(a0) + ", " + str(a1) + ", " + str(b) + ") i=" + std::to_string(i);
}

Report lemma1_at(const IndexedSeq& seq, const std::vector<Ordinal>& probe, unsigned i) {
  Report r;
  WalkTable t(seq, probe);
  const std::size_t n = t.size();
  {
    t.fill(i);
    for (std::size_t b = 0; b < n; ++b) {
      const Ordinal& beta = t.at(b);
      if (!seq.admissible(beta, i)) continue;
      OrdSet acc = beta.is_limit() ? seq.club(beta, i).acc() : OrdSet();
      for (std::size_t a1 = 0; a1 < b; ++a1) {
        const Ordinal& alpha1 = t.at(a1);
        bool part2 = alpha1.is_limit() && acc.contains(alpha1);
        if (part2 && !seq.admissible(alpha1, i)) {
          r.fail("lemma1.2", str(alpha1) + " < " + str(beta) + " i=" + std::to_string(i), "i(alpha1) <= i",
                 std::to_string(seq.i_of(alpha1)));
          part2 = false;
        }
        for (std::size_t a0 = 0; a0 < a1; ++a0) {
          ++r.checked;
          if (!kb_less(t.trace(a0, b), t.trace(a1, b)))
            r.fail("lemma1.1", triple(t.at(a0), alpha1, beta, i), format_trace(t.trace(a0, b)) + " <KB " + format_trace(t.trace(a1, b)),
                   "not KB-below");
          if (part2 && t.id(a0, a1) != t.id(a0, b))
            r.fail("lemma1.2", triple(t.at(a0), alpha1, beta, i), "pr(a0,a1) = pr(a0,b)", "differ");
        }
      }
    }
  }
  return r;
}

Report lemma2_at(const IndexedSeq& seq, const std::vector<Ordinal>& probe, unsigned i) {
  Report r;
  WalkTable t(seq, probe);
  const std::size_t n = t.size();
  std::vector<char> composed;
  {
    t.fill(i);
    composed.assign(n * n * n, 0);
    for (std::size_t b0 = 0; b0 < n; ++b0) {
      if (!seq.admissible(t.at(b0), i)) continue;
      for (std::size_t b1 = b0 + 1; b1 < n; ++b1) {
        if (!seq.admissible(t.at(b1), i)) continue;
        for (std::size_t a1 = 0; a1 < b0; ++a1) {
          if (t.id(a1, b0) != t.id(a1, b1)) continue;
          for (std::size_t a0 = 0; a0 < a1; ++a0) {
            ++r.checked;
            if (t.id(a0, b0) != t.id(a0, b1))
              r.fail("lemma2",
                     "(" + str(t.at(a0)) + ", " + str(t.at(a1)) + ", " + str(t.at(b0)) + ", " + str(t.at(b1)) +
                         ") i=" + std::to_string(i),
                     "pr(a0,b0) = pr(a0,b1)", "differ");
            char& done = composed[(a0 * n + a1) * n + b0];
            if (done) continue;
            done = 1;
            Projection rebuilt = restrict_projection(seq, t.projection(t.id(a1, b0)), t.at(a1), t.at(a0));
            if (rebuilt != t.projection(t.id(a0, b0)))
              r.fail("composition", triple(t.at(a0), t.at(a1), t.at(b0), i), "composition formula = direct walk", "differ");
          }
        }
      }
    }
  }
  return r;
}

// One worker per index; each builds its own walk table.
Report per_index(const IndexedSeq& seq, const std::vector<Ordinal>& probe, const std::vector<unsigned>& index_probe,
                 Report (*body)(const IndexedSeq&, const std::vector<Ordinal>&, unsigned)) {
  std::vector<unsigned> todo;
  for (unsigned i : index_probe)
    if (i < seq.params().index_bound) todo.push_back(i);
  std::vector<Report> parts(todo.size());
  std::vector<std::exception_ptr> errors(todo.size());
  {
    std::vector<std::jthread> workers;
    for (std::size_t k = 0; k < todo.size(); ++k)
      workers.emplace_back([&, k] {
        try {
          parts[k] = body(seq, probe, todo[k]);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
  }
  Report r;
  for (std::size_t k = 0; k < todo.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    r.merge(parts[k]);
  }
  return r;
}

}  // namespace

Report check_lemma1(const IndexedSeq& seq, const std::vector<Ordinal>& probe, const std::vector<unsigned>& index_probe) {
  return per_index(seq, probe, index_probe, lemma1_at);
}

Report check_lemma2(const IndexedSeq& seq, const std::vector<Ordinal>& probe, const std::vector<unsigned>& index_probe) {
  return per_index(seq, probe, index_probe, lemma2_at);
}

DAlpha collect_D_alpha(const IndexedSeq& seq, const Ordinal& alpha, const std::vector<Ordinal>& probe,
                       const std::vector<unsigned>& index_probe) {
  DAlpha out;
  for (const Ordinal& beta : probe) {
    if (beta.is_zero()) continue;
    for (unsigned i : index_probe) {
      if (!seq.admissible(beta, i)) continue;
      ++out.report.checked;
      OrdSet d = seq.club(beta, i).restrict(alpha);
      if (std::find(out.members.begin(), out.members.end(), d) == out.members.end()) out.members.push_back(std::move(d));
    }
  }
  for (const OrdSet& d : out.members) {
    std::string witness = size_witness(seq, alpha, d);
    if (witness.empty()) out.report.fail("size-decomposition", d.to_literal(), "club restriction plus finite set", "none");
    out.witnesses.push_back(witness.empty() ? "none" : witness);
  }
  return out;
}

std::string size_witness(const IndexedSeq& seq, const Ordinal& /*alpha*/, const OrdSet& d) {
  const unsigned bound = seq.params().index_bound;
  // Unbounded in its limit sup: closedness forces d to be the whole club at
  // the sup (alpha itself, or a club sitting entirely below alpha).
  if (!d.empty() && d.sup().is_limit() && !d.contains(d.sup())) {
    const Ordinal top = d.sup();
    for (unsigned i = seq.i_of(top); i < bound; ++i)
      if (seq.club(top, i) == d) return "C_(" + str(top) + "," + std::to_string(i) + ")";
    return {};
  }
  OrdSet acc = d.acc();
  if (acc.empty()) return d.otp().is_finite() ? "finite" : "";
  auto top = acc.max();
  if (!top) return {};
  const Ordinal& gamma = *top;
  if (!d.above(gamma).otp().is_finite()) return {};
  OrdSet head = d.restrict(gamma);
  for (unsigned i = seq.i_of(gamma); i < bound; ++i)
    if (seq.club(gamma, i) == head) return "C_(" + str(gamma) + "," + std::to_string(i) + ") + finite";
  return {};
}

std::string format_trace(const std::vector<Ordinal>& trace) {
  std::string s = "<";
  for (std::size_t k = 0; k < trace.size(); ++k) s += (k ? "," : "") + str(trace[k]);
  return s + ">";
}

std::string format_walk(const WalkResult& w) {
  std::string s = "steps=[";
  for (std::size_t k = 0; k < w.steps.size(); ++k)
    s += (k ? "," : "") + std::string("(") + str(w.steps[k].beta) + "," + std::to_string(w.steps[k].index) + ")";
  s += "] pr=[";
  for (std::size_t k = 0; k < w.projection.size(); ++k) s += (k ? "," : "") + w.projection[k].to_literal();
  return s + "] tr=" + format_trace(w.trace);
}

}  // namespace ordlab
