#include "gradua/gb.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace gradua {

namespace {

// a[start..] - c*m*b, assuming the leading terms cancel exactly.
ModuleVector sub_multiple_tail(const FreeModule& E, const std::vector<VTerm>& a, std::size_t start,
                               const ModuleVector& b, const Monomial& m, const FieldElem& c) {
  ModuleVector r;
  r.terms.reserve(a.size() - start + b.size());
  std::size_t i = start + 1;
  std::size_t j = 1;
  while (i < a.size() || j < b.terms.size()) {
    if (j >= b.terms.size()) {
      r.terms.push_back(a[i++]);
      continue;
    }
    Monomial bm = b.terms[j].mono * m;
    std::uint32_t bp = b.terms[j].pos;
    int cmp = (i >= a.size()) ? -1 : E.compare(a[i].mono, a[i].pos, bm, bp);
    if (cmp > 0) {
      r.terms.push_back(a[i++]);
    } else if (cmp < 0) {
      r.terms.push_back({bm, bp, -(b.terms[j].coeff * c)});
      ++j;
    } else {
      FieldElem s = a[i].coeff - b.terms[j].coeff * c;
      if (!s.is_zero()) r.terms.push_back({a[i].mono, a[i].pos, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

// Reduces against `elems` (monic, indexed by leading position) restricted to
// positions below `limit`. Terms at positions >= limit are left alone.
class Reducer {
 public:
  Reducer(const FreeModule& E, std::uint32_t limit) : E_(E), limit_(limit), by_pos_(limit) {}

  void add(const ModuleVector* v) {
    elems_.push_back(v);
    by_pos_[v->lead().pos].push_back(static_cast<int>(elems_.size()) - 1);
  }

  int find_divisor(const Monomial& m, std::uint32_t pos) const {
    if (pos >= limit_) return -1;
    for (int g : by_pos_[pos]) {
      if (divides(elems_[g]->lead().mono, m)) return g;
    }
    return -1;
  }

  ModuleVector reduce(ModuleVector v, bool full) const {
    std::vector<VTerm> out;
    std::size_t start = 0;
    while (start < v.terms.size()) {
      const VTerm& t = v.terms[start];
      if (t.pos >= limit_) break;
      int g = find_divisor(t.mono, t.pos);
      if (g < 0) {
        if (!full) break;
        out.push_back(t);
        ++start;
        continue;
      }
      const ModuleVector& gv = *elems_[g];
      Monomial q = t.mono / gv.lead().mono;
      FieldElem c = t.coeff;
      v = sub_multiple_tail(E_, v.terms, start, gv, q, c);
      start = 0;
    }
    if (out.empty() && start == 0) return v;
    out.insert(out.end(), std::make_move_iterator(v.terms.begin() + start),
               std::make_move_iterator(v.terms.end()));
    return ModuleVector{std::move(out)};
  }

 private:
  const FreeModule& E_;
  std::uint32_t limit_;
  std::vector<const ModuleVector*> elems_;
  std::vector<std::vector<int>> by_pos_;
};

struct Pair {
  int i;
  int j;
  Monomial lcm;
  std::uint32_t pos;
};

class Engine {
 public:
  Engine(FreeModule E, std::uint32_t rank_f, bool product_criterion)
      : E_(std::move(E)),
        rank_f_(rank_f),
        product_criterion_(product_criterion),
        by_pos_(rank_f) {}

  ModuleVector reduce(ModuleVector v, bool full) const {
    Reducer r(E_, rank_f_);
    for (const auto& g : G_) r.add(&g);
    return r.reduce(std::move(v), full);
  }

  // Returns true if v (already reduced) was inserted into the basis, false if
  // its F-part vanished (the tag, if any, is then recorded as a syzygy).
  bool absorb(ModuleVector v) {
    if (v.is_zero()) return false;
    if (v.lead().pos >= rank_f_) {
      ModuleVector tag;
      tag.terms.reserve(v.size());
      for (auto& t : v.terms) tag.terms.push_back({t.mono, t.pos - rank_f_, t.coeff});
      syzygies_.push_back(std::move(tag));
      return false;
    }
    insert(E_.monic(v));
    return true;
  }

  void insert(ModuleVector v) {
    G_.push_back(std::move(v));
    int h = static_cast<int>(G_.size()) - 1;
    update_pairs(h);
    by_pos_[G_[h].lead().pos].push_back(h);
    reducer_dirty_ = true;
  }

  ModuleVector reduce_cached(ModuleVector v, bool full) {
    if (reducer_dirty_) {
      reducer_ = std::make_unique<Reducer>(E_, rank_f_);
      for (const auto& g : G_) reducer_->add(&g);
      reducer_dirty_ = false;
    }
    return reducer_->reduce(std::move(v), full);
  }

  void run(std::vector<EngineInput>& inputs, std::vector<int>& degrees,
           const GroebnerOptions& opts, std::vector<std::size_t>& order,
           std::vector<std::size_t>& minimal) {
    std::size_t in = 0;
    for (;;) {
      while (!pairs_.empty() && pairs_.begin()->second.empty()) pairs_.erase(pairs_.begin());
      int next_pair = pairs_.empty() ? INT_MAX : pairs_.begin()->first;
      int next_in = in < order.size() ? degrees[order[in]] : INT_MAX;
      int d = std::min(next_pair, next_in);
      if (d == INT_MAX) break;
      if (opts.degree_bound && d > *opts.degree_bound) break;

      auto it = pairs_.find(d);
      if (it != pairs_.end()) {
        std::sort(it->second.begin(), it->second.end(), [this](const Pair& a, const Pair& b) {
          return E_.compare(a.lcm, a.pos, b.lcm, b.pos) > 0;
        });
        while (!pairs_[d].empty()) {
          Pair p = pairs_[d].back();
          pairs_[d].pop_back();
          ModuleVector s = spair(p);
          absorb(reduce_cached(std::move(s), true));
        }
      }
      while (in < order.size() && degrees[order[in]] == d) {
        std::size_t k = order[in++];
        ModuleVector v = std::move(inputs[k].vec);
        bool kept = absorb(reduce_cached(std::move(v), true));
        if (kept && !inputs[k].relation) minimal.push_back(k);
      }
    }
  }

  void reduce_tails() {
    for (std::size_t i = 0; i < G_.size(); ++i) {
      ModuleVector tail;
      tail.terms.assign(G_[i].terms.begin() + 1, G_[i].terms.end());
      if (tail.terms.empty() || tail.lead().pos >= rank_f_) continue;
      Reducer r(E_, rank_f_);
      for (std::size_t j = 0; j < G_.size(); ++j) {
        if (j != i) r.add(&G_[j]);
      }
      ModuleVector red = r.reduce(std::move(tail), true);
      ModuleVector nv;
      nv.terms.reserve(red.size() + 1);
      nv.terms.push_back(G_[i].lead());
      nv.terms.insert(nv.terms.end(), red.terms.begin(), red.terms.end());
      G_[i] = std::move(nv);
    }
    reducer_dirty_ = true;
  }

  const std::vector<ModuleVector>& basis() const { return G_; }
  std::vector<ModuleVector>& syzygies() { return syzygies_; }

 private:
  ModuleVector spair(const Pair& p) const {
    const ModuleVector& a = G_[p.i];
    const ModuleVector& b = G_[p.j];
    Monomial ma = p.lcm / a.lead().mono;
    Monomial mb = p.lcm / b.lead().mono;
    ModuleVector sa = E_.mul_term(a, ma, E_.ring().one());
    return E_.sub_multiple(sa, b, mb, E_.ring().one());
  }

  int pair_degree(const Pair& p) const { return p.lcm.degree() + E_.twist(p.pos); }

  void update_pairs(int h) {
    const VTerm& lh = G_[h].lead();
    const PolyRing& R = E_.ring();
    for (auto& [deg, bucket] : pairs_) {
      std::erase_if(bucket, [&](const Pair& p) {
        return p.pos == lh.pos && divides(lh.mono, p.lcm) &&
               !(R.lcm(G_[p.i].lead().mono, lh.mono) == p.lcm) &&
               !(R.lcm(G_[p.j].lead().mono, lh.mono) == p.lcm);
      });
    }
    std::vector<Pair> C;
    for (int g : by_pos_[lh.pos]) {
      C.push_back({g, h, R.lcm(G_[g].lead().mono, lh.mono), lh.pos});
    }
    for (std::size_t a = 0; a < C.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < C.size() && !drop; ++b) {
        if (a == b || !divides(C[b].lcm, C[a].lcm)) continue;
        if (!(C[b].lcm == C[a].lcm) || b < a) drop = true;
      }
      if (!drop && product_criterion_) {
        for (const auto& q : C) {
          if (q.lcm == C[a].lcm && coprime(G_[q.i].lead().mono, lh.mono)) {
            drop = true;
            break;
          }
        }
      }
      if (!drop) pairs_[pair_degree(C[a])].push_back(C[a]);
    }
  }

  FreeModule E_;
  std::uint32_t rank_f_;
  bool product_criterion_;
  std::vector<ModuleVector> G_;
  std::vector<std::vector<int>> by_pos_;
  std::map<int, std::vector<Pair>> pairs_;
  std::vector<ModuleVector> syzygies_;
  std::unique_ptr<Reducer> reducer_;
  bool reducer_dirty_ = true;
};

ModuleVector project(const ModuleVector& v, std::uint32_t lo, std::uint32_t hi) {
  ModuleVector r;
  for (const auto& t : v.terms) {
    if (t.pos >= lo && t.pos < hi) r.terms.push_back({t.mono, t.pos - lo, t.coeff});
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

GroebnerBasis::GroebnerBasis(FreeModule module, std::vector<ModuleVector> elements, bool reduced,
                             std::optional<int> degree_bound)
    : module_(std::move(module)),
      elements_(std::move(elements)),
      by_pos_(module_.rank()),
      reduced_(reduced),
      degree_bound_(degree_bound) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    by_pos_[elements_[i].lead().pos].push_back(static_cast<int>(i));
  }
}

int GroebnerBasis::find_divisor(const Monomial& m, std::uint32_t pos) const {
  if (pos >= by_pos_.size()) return -1;
  for (int g : by_pos_[pos]) {
    if (divides(elements_[g].lead().mono, m)) return g;
  }
  return -1;
}

ModuleVector GroebnerBasis::normal_form(const ModuleVector& v) const {
  Reducer r(module_, static_cast<std::uint32_t>(module_.rank()));
  for (const auto& g : elements_) r.add(&g);
  return r.reduce(v, true);
}

bool GroebnerBasis::contains(const ModuleVector& v) const {
  if (v.is_zero()) return true;
  Reducer r(module_, static_cast<std::uint32_t>(module_.rank()));
  for (const auto& g : elements_) r.add(&g);
  return r.reduce(v, false).is_zero();
}

std::vector<VTerm> GroebnerBasis::standard_monomials(int degree) const {
  std::vector<VTerm> out;
  for (int i = 0; i < module_.rank(); ++i) {
    for (const auto& m : module_.ring().monomials_of_degree(degree - module_.twist(i))) {
      if (find_divisor(m, static_cast<std::uint32_t>(i)) < 0) {
        out.push_back({m, static_cast<std::uint32_t>(i), module_.ring().one()});
      }
    }
  }
  return out;
}

long GroebnerBasis::count_standard(int degree) const {
  return static_cast<long>(standard_monomials(degree).size());
}

EngineResult run_engine(const FreeModule& F, const FreeModule& T, std::vector<EngineInput> inputs,
                        const GroebnerOptions& opts) {
  const auto rf = static_cast<std::uint32_t>(F.rank());
  std::vector<int> twists = F.twists();
  twists.insert(twists.end(), T.twists().begin(), T.twists().end());
  std::vector<int> prio;
  for (int p : F.priorities()) prio.push_back(p + (1 << 20));
  for (int p : T.priorities()) prio.push_back(p);
  FreeModule E(F.ring_ptr(), std::move(twists), std::move(prio));

  std::vector<int> degrees(inputs.size(), 0);
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    auto& in = inputs[k];
    auto dv = F.degree(in.vec);
    auto dt = T.degree(in.tag);
    if ((!in.vec.is_zero() && !dv) || (!in.tag.is_zero() && !dt)) {
      throw AlgebraError("Groebner engine input is not homogeneous");
    }
    if (dv && dt && *dv != *dt) {
      throw AlgebraError("Groebner engine input and tag have different degrees");
    }
    if (!dv && !dt) continue;
    degrees[k] = dv ? *dv : *dt;
    std::vector<VTerm> terms = in.vec.terms;
    for (const auto& t : in.tag.terms) terms.push_back({t.mono, t.pos + rf, t.coeff});
    in.vec = E.normalize(std::move(terms));
    in.tag = {};
    order.push_back(k);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    return inputs[a].relation && !inputs[b].relation;
  });

  Engine engine(E, rf, E.rank() == 1);
  EngineResult res;
  engine.run(inputs, degrees, opts, order, res.minimal);
  if (opts.reduce_tails) engine.reduce_tails();

  std::vector<ModuleVector> elems;
  for (const auto& g : engine.basis()) {
    elems.push_back(project(g, 0, rf));
    res.basis_tags.push_back(project(g, rf, rf + T.rank()));
  }
  res.basis = GroebnerBasis(F, std::move(elems), opts.reduce_tails, opts.degree_bound);
  res.syzygies = std::move(engine.syzygies());
  std::sort(res.minimal.begin(), res.minimal.end());
  return res;
}

GroebnerBasis groebner(const FreeModule& F, std::span<const ModuleVector> gens,
                       const GroebnerOptions& opts) {
  std::vector<EngineInput> inputs;
  inputs.reserve(gens.size());
  for (const auto& g : gens) {
    if (!F.is_homogeneous(g)) throw AlgebraError("groebner: inhomogeneous input " + F.format(g));
    inputs.push_back({g, {}, false});
  }
  FreeModule T(F.ring_ptr(), {});
  return run_engine(F, T, std::move(inputs), opts).basis;
}

GroebnerBasis groebner_up_to(const FreeModule& F, std::span<const ModuleVector> gens,
                             int max_degree) {
  GroebnerOptions opts;
  opts.degree_bound = max_degree;
  return groebner(F, gens, opts);
}

ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& G) { return G.normal_form(v); }

bool member(const FreeModule& F, const ModuleVector& v, std::span<const ModuleVector> gens) {
  if (v.is_zero()) return true;
  auto d = F.degree(v);
  if (!d) throw AlgebraError("member: inhomogeneous vector");
  return groebner_up_to(F, gens, *d).contains(v);
}

std::optional<ModuleVector> s_vector(const FreeModule& F, const ModuleVector& a,
                                     const ModuleVector& b) {
  if (a.is_zero() || b.is_zero() || a.lead().pos != b.lead().pos) return std::nullopt;
  Monomial l = F.ring().lcm(a.lead().mono, b.lead().mono);
  ModuleVector sa = F.mul_term(a, l / a.lead().mono, b.lead().coeff);
  return F.sub_multiple(sa, b, l / b.lead().mono, a.lead().coeff);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
  const auto& el = G.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      auto s = s_vector(G.module(), el[i], el[j]);
      if (!s) continue;
      if (G.degree_bound()) {
        auto d = G.module().degree(*s);
        if (d && *d > *G.degree_bound()) continue;
      }
      if (!G.normal_form(*s).is_zero()) return false;
    }
  }
  return true;
}

bool same_submodule(const GroebnerBasis& a, const GroebnerBasis& b) {
  for (const auto& g : a.elements()) {
    if (!b.contains(g)) return false;
  }
  for (const auto& g : b.elements()) {
    if (!a.contains(g)) return false;
  }
  return true;
}

std::vector<ModuleVector> minimal_generators(const FreeModule& F,
                                             std::span<const ModuleVector> gens,
                                             std::span<const ModuleVector> rels) {
  std::vector<EngineInput> inputs;
  for (const auto& r : rels) inputs.push_back({r, {}, true});
  for (const auto& g : gens) inputs.push_back({g, {}, false});
  GroebnerOptions opts;
  opts.reduce_tails = false;
  int top = INT_MIN;
  for (const auto& g : gens) {
    if (auto d = F.degree(g)) top = std::max(top, *d);
  }
  if (top == INT_MIN) return {};
  opts.degree_bound = top;
  FreeModule T(F.ring_ptr(), {});
  EngineResult res = run_engine(F, T, std::move(inputs), opts);
  std::vector<ModuleVector> out;
  for (std::size_t k : res.minimal) out.push_back(gens[k - rels.size()]);
  return out;
}

std::vector<ModuleVector> syzygies(const FreeModule& F, std::span<const ModuleVector> gens,
                                   FreeModule* syz_module, bool minimalize) {
  std::vector<int> tw;
  for (const auto& g : gens) {
    if (g.is_zero()) {
      tw.push_back(0);
      continue;
    }
    auto d = F.degree(g);
    if (!d) throw AlgebraError("syzygies: inhomogeneous generator");
    tw.push_back(*d);
  }
  FreeModule T(F.ring_ptr(), tw);
  std::vector<EngineInput> inputs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    inputs.push_back({gens[i], T.basis(static_cast<int>(i)), false});
  }
  GroebnerOptions opts;
  opts.reduce_tails = false;
  EngineResult res = run_engine(F, T, std::move(inputs), opts);
  if (syz_module) *syz_module = T;
  if (!minimalize) return std::move(res.syzygies);
  return minimal_generators(T, res.syzygies, {});
}

std::vector<ModuleVector> eliminate(const FreeModule& A, const FreeModule& B,
                                    std::span<const ModuleVector> a,
                                    std::span<const ModuleVector> b,
                                    std::span<const ModuleVector> a_rels) {
  if (a.size() != b.size()) throw AlgebraError("eliminate: unequal pair counts");
  std::vector<EngineInput> inputs;
  inputs.reserve(a.size() + a_rels.size());
  for (const auto& r : a_rels) inputs.push_back({r, {}, true});
  for (std::size_t i = 0; i < a.size(); ++i) inputs.push_back({a[i], b[i], false});
  GroebnerOptions opts;
  opts.reduce_tails = false;
  return std::move(run_engine(A, B, std::move(inputs), opts).syzygies);
}

std::vector<ModuleVector> intersect(const FreeModule& F, std::span<const ModuleVector> x,
                                    std::span<const ModuleVector> y) {
  std::vector<ModuleVector> a(x.begin(), x.end());
  std::vector<ModuleVector> b(x.begin(), x.end());
  std::vector<ModuleVector> rels(y.begin(), y.end());
  return eliminate(F, F, a, b, rels);
}

}  // namespace gradua
