#include "gradua/gmod.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace gradua {

namespace {

void check_vectors(const FreeModule& F, const std::vector<ModuleVector>& vs, const char* what) {
  for (const auto& v : vs) {
    for (const auto& t : v.terms) {
      if (static_cast<int>(t.pos) >= F.rank()) {
        throw AlgebraError(std::string(what) + ": vector does not fit the ambient module");
      }
    }
    if (!F.is_homogeneous(v)) throw AlgebraError(std::string(what) + " is not homogeneous: " + F.format(v));
  }
}

void append_unique(std::vector<ModuleVector>& out, const ModuleVector& v) {
  if (v.is_zero()) return;
  for (const auto& w : out) {
    if (w == v) return;
  }
  out.push_back(v);
}

// Re-sorts a vector for another ambient with compatible positions.
ModuleVector renormalize(const FreeModule& F, ModuleVector v) { return F.normalize(std::move(v.terms)); }

// Places g_j * w into block j of a block ambient for every generator g_j.
ModuleVector spread(const FreeModule& block, const FreeModule& F, const std::vector<Polynomial>& gs,
                    const ModuleVector& w) {
  std::vector<VTerm> terms;
  const auto r = static_cast<std::uint32_t>(F.rank());
  for (std::size_t j = 0; j < gs.size(); ++j) {
    ModuleVector p = F.mul_poly(w, gs[j]);
    for (auto& t : p.terms) terms.push_back({t.mono, t.pos + static_cast<std::uint32_t>(j) * r, t.coeff});
  }
  return block.normalize(std::move(terms));
}

FreeModule block_module(const FreeModule& F, const std::vector<int>& shifts) {
  std::vector<int> tw;
  for (int s : shifts) {
    for (int i = 0; i < F.rank(); ++i) tw.push_back(F.twist(i) - s);
  }
  return FreeModule(F.ring_ptr(), std::move(tw));
}

std::vector<ModuleVector> repeat_blocks(const FreeModule& block, const std::vector<ModuleVector>& vs,
                                        std::size_t blocks, std::uint32_t rank) {
  std::vector<ModuleVector> out;
  for (std::size_t j = 0; j < blocks; ++j) {
    for (const auto& v : vs) out.push_back(renormalize(block, embed(v, static_cast<std::uint32_t>(j) * rank)));
  }
  return out;
}

}  // namespace

SubquotientModule::SubquotientModule(GRingPtr ring, FreeModule ambient, std::vector<ModuleVector> gens,
                                     std::vector<ModuleVector> rels)
    : ring_(std::move(ring)), ambient_(std::move(ambient)) {
  if (!(ambient_.ring() == ring_->poly())) throw AlgebraError("module ambient is over a different ring");
  check_vectors(ambient_, gens, "module generator");
  check_vectors(ambient_, rels, "module relation");
  for (auto& g : gens) {
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
  for (const auto& r : rels) append_unique(rels_, r);
  for (const auto& r : ring_->relation_vectors(ambient_)) append_unique(rels_, r);
}

std::vector<ModuleVector> SubquotientModule::total_gens() const {
  std::vector<ModuleVector> all = gens_;
  all.insert(all.end(), rels_.begin(), rels_.end());
  return all;
}

const GroebnerBasis& SubquotientModule::rel_basis() const {
  std::call_once(cache_->rel_once, [this] { cache_->rel = groebner(ambient_, rels_); });
  return cache_->rel;
}

const GroebnerBasis& SubquotientModule::total_basis() const {
  std::call_once(cache_->total_once, [this] { cache_->total = groebner(ambient_, total_gens()); });
  return cache_->total;
}

std::string SubquotientModule::to_string() const {
  std::string s = "subquotient(free=[";
  for (int i = 0; i < ambient_.rank(); ++i) {
    if (i) s += ", ";
    s += std::to_string(ambient_.twist(i));
  }
  s += "], gens=[";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += ambient_.format(gens_[i]);
  }
  s += "], rels=[";
  bool first = true;
  auto jrel = ring_->relation_vectors(ambient_);
  for (const auto& r : rels_) {
    if (std::find(jrel.begin(), jrel.end(), r) != jrel.end()) continue;
    if (!first) s += ", ";
    first = false;
    s += ambient_.format(r);
  }
  return s + "])";
}

SubquotientModule make_subquotient(GRingPtr ring, FreeModule ambient, std::vector<ModuleVector> gens,
                                   std::vector<ModuleVector> rels) {
  return SubquotientModule(std::move(ring), std::move(ambient), std::move(gens), std::move(rels));
}

SubquotientModule free_subquotient(GRingPtr ring, std::vector<int> twists) {
  FreeModule F = ring->free_module(std::move(twists));
  std::vector<ModuleVector> gens;
  for (int i = 0; i < F.rank(); ++i) gens.push_back(F.basis(i));
  return SubquotientModule(std::move(ring), F, std::move(gens), {});
}

SubquotientModule zero_module(GRingPtr ring) {
  FreeModule F = ring->free_module({});
  return SubquotientModule(std::move(ring), F, {}, {});
}

bool is_zero(const SubquotientModule& M) {
  const auto& G = M.rel_basis();
  return std::all_of(M.gens().begin(), M.gens().end(),
                     [&](const ModuleVector& g) { return G.contains(g); });
}

long piece_dimension(const SubquotientModule& M, int n) {
  if (M.gens().empty()) return 0;
  return M.rel_basis().count_standard(n) - M.total_basis().count_standard(n);
}

GradedPiece graded_piece(const SubquotientModule& M, int n) {
  GradedPiece piece;
  piece.degree = n;
  if (M.gens().empty()) return piece;
  const auto& V = M.rel_basis();
  const auto& UV = M.total_basis();
  for (const auto& s : V.standard_monomials(n)) {
    int g = UV.find_divisor(s.mono, s.pos);
    if (g < 0) continue;
    const ModuleVector& gv = UV.elements()[g];
    Monomial q = s.mono / gv.lead().mono;
    ModuleVector rep = M.ambient().mul_term(gv, q, gv.lead().coeff.inverse());
    piece.basis.push_back(V.normal_form(rep));
  }
  piece.dimension = static_cast<long>(piece.basis.size());
  return piece;
}

std::vector<long> hilbert_function(const SubquotientModule& M, int lo, int hi) {
  std::vector<long> out;
  for (int n = lo; n <= hi; ++n) out.push_back(piece_dimension(M, n));
  return out;
}

ExtendedInt indeg(const SubquotientModule& M) {
  const auto& V = M.rel_basis();
  ExtendedInt best;
  for (const auto& g : M.gens()) {
    int d = *M.ambient().degree(g);
    if (best.is_finite() && d >= best.value()) continue;
    if (!V.contains(g)) best = d;
  }
  return best;
}

// ---------------------------------------------------------------------------

ModuleVector GradedMap::apply(const ModuleVector& v) const {
  std::vector<VTerm> terms;
  for (const auto& t : v.terms) {
    for (const auto& s : images[t.pos].terms) terms.push_back({s.mono * t.mono, s.pos, s.coeff * t.coeff});
  }
  return target.normalize(std::move(terms));
}

std::vector<ModuleVector> GradedMap::apply(const std::vector<ModuleVector>& vs) const {
  std::vector<ModuleVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(apply(v));
  return out;
}

Polynomial GradedMap::entry(int row, int col) const { return target.component(images[col], row); }

GradedMap make_map(const FreeModule& source, const FreeModule& target,
                   const std::vector<std::vector<Polynomial>>& entries) {
  if (static_cast<int>(entries.size()) != target.rank()) {
    throw AlgebraError("map matrix row count does not match the target rank");
  }
  GradedMap f{source, target, {}};
  for (int j = 0; j < source.rank(); ++j) {
    std::vector<Polynomial> col;
    for (int i = 0; i < target.rank(); ++i) {
      if (static_cast<int>(entries[i].size()) != source.rank()) {
        throw AlgebraError("map matrix column count does not match the source rank");
      }
      const Polynomial& p = entries[i][j];
      if (!p.is_zero()) {
        auto d = p.degree();
        if (!d || *d != source.twist(j) - target.twist(i)) {
          throw AlgebraError("map entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") violates degree preservation: " + p.to_string());
        }
      }
      col.push_back(p);
    }
    f.images.push_back(target.from_components(col));
  }
  return f;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  GradedMap h{f.source, g.target, {}};
  for (const auto& v : f.images) h.images.push_back(g.apply(v));
  return h;
}

bool is_zero_map(const GradedMap& f) {
  return std::all_of(f.images.begin(), f.images.end(), [](const ModuleVector& v) { return v.is_zero(); });
}

namespace {

std::vector<ModuleVector> with_ring_relations(const GradedRing& R, const FreeModule& F,
                                              std::vector<ModuleVector> rels) {
  for (auto& r : R.relation_vectors(F)) rels.push_back(std::move(r));
  return rels;
}

}  // namespace

SubquotientModule kernel(const GradedMap& f, const SubquotientModule& M,
                         const std::vector<ModuleVector>& target_rels) {
  if (!(f.source == M.ambient())) throw AlgebraError("kernel: module does not live in the map source");
  std::vector<ModuleVector> w = M.total_gens();
  std::vector<ModuleVector> fw = f.apply(w);
  auto rels = with_ring_relations(M.ring(), f.target, target_rels);
  auto ker = eliminate(f.target, f.source, fw, w, rels);
  return SubquotientModule(M.ring_ptr(), M.ambient(), std::move(ker), M.rels());
}

SubquotientModule image(const GradedMap& f, const SubquotientModule& M,
                        const std::vector<ModuleVector>& target_rels) {
  if (!(f.source == M.ambient())) throw AlgebraError("image: module does not live in the map source");
  return SubquotientModule(M.ring_ptr(), f.target, f.apply(M.gens()), target_rels);
}

SubquotientModule preimage(const GradedMap& f, const SubquotientModule& T,
                           const std::vector<ModuleVector>& source_rels) {
  if (!(f.target == T.ambient())) throw AlgebraError("preimage: module does not live in the map target");
  std::vector<ModuleVector> basis;
  for (int j = 0; j < f.source.rank(); ++j) basis.push_back(f.source.basis(j));
  auto pre = eliminate(f.target, f.source, f.images, basis, T.total_gens());
  return SubquotientModule(T.ring_ptr(), f.source, std::move(pre), source_rels);
}

SubquotientModule mod_combine(const SubquotientModule& a, const SubquotientModule& b, ModOp op) {
  if (!(a.ambient() == b.ambient())) throw AlgebraError("mod_combine: ambient modules differ");
  switch (op) {
    case ModOp::kSum: {
      auto gens = a.gens();
      gens.insert(gens.end(), b.gens().begin(), b.gens().end());
      auto rels = a.rels();
      rels.insert(rels.end(), b.rels().begin(), b.rels().end());
      return SubquotientModule(a.ring_ptr(), a.ambient(), std::move(gens), std::move(rels));
    }
    case ModOp::kIntersection: {
      auto common = intersect(a.ambient(), a.total_gens(), b.total_gens());
      return SubquotientModule(a.ring_ptr(), a.ambient(), std::move(common), a.rels());
    }
  }
  throw AlgebraError("mod_combine: unknown operation");
}

SubquotientModule ideal_times_module(const HomogeneousIdeal& I, const SubquotientModule& M) {
  if (I.ring_ptr() != M.ring_ptr()) throw AlgebraError("ideal_times_module: ring mismatch");
  std::vector<ModuleVector> gens;
  for (const auto& g : I.gens()) {
    for (const auto& u : M.gens()) gens.push_back(M.ambient().mul_poly(u, g));
  }
  return SubquotientModule(M.ring_ptr(), M.ambient(), std::move(gens), M.rels());
}

std::vector<ModuleVector> module_colon(const SubquotientModule& M, const HomogeneousIdeal& a,
                                       const std::vector<ModuleVector>& target) {
  std::vector<ModuleVector> w = M.total_gens();
  if (a.is_zero()) return w;
  const FreeModule& F = M.ambient();
  const auto& gs = a.gens();
  std::vector<int> shifts;
  for (const auto& g : gs) shifts.push_back(*g.degree());
  FreeModule block = block_module(F, shifts);
  std::vector<ModuleVector> images;
  images.reserve(w.size());
  for (const auto& u : w) images.push_back(spread(block, F, gs, u));
  auto rels = repeat_blocks(block, target, gs.size(), static_cast<std::uint32_t>(F.rank()));
  return eliminate(block, F, images, w, rels);
}

SubquotientModule colon_ann(const SubquotientModule& M, const HomogeneousIdeal& a) {
  return SubquotientModule(M.ring_ptr(), M.ambient(), module_colon(M, a, M.rels()), M.rels());
}

SubquotientModule gamma(const SubquotientModule& M, const HomogeneousIdeal& a) {
  std::vector<ModuleVector> K = M.rels();
  GroebnerBasis GK = M.rel_basis();
  for (;;) {
    auto next = module_colon(M, a, K);
    bool grew = false;
    for (const auto& v : next) {
      if (!GK.contains(v)) {
        grew = true;
        break;
      }
    }
    if (!grew) break;
    K = std::move(next);
    GK = groebner(M.ambient(), K);
  }
  return SubquotientModule(M.ring_ptr(), M.ambient(), std::move(K), M.rels());
}

HomogeneousIdeal annihilator(const SubquotientModule& M) {
  const GradedRing& R = M.ring();
  const FreeModule& F = M.ambient();
  std::vector<Polynomial> comps;
  std::vector<int> shifts;
  std::vector<ModuleVector> us;
  for (const auto& u : M.gens()) {
    us.push_back(u);
    shifts.push_back(*F.degree(u));
  }
  if (us.empty()) return HomogeneousIdeal::unit(M.ring_ptr());
  FreeModule block = block_module(F, shifts);
  std::vector<VTerm> terms;
  const auto r = static_cast<std::uint32_t>(F.rank());
  for (std::size_t j = 0; j < us.size(); ++j) {
    for (const auto& t : us[j].terms) terms.push_back({t.mono, t.pos + static_cast<std::uint32_t>(j) * r, t.coeff});
  }
  std::vector<ModuleVector> image = {block.normalize(std::move(terms))};
  std::vector<ModuleVector> one = {R.line().basis(0)};
  auto rels = repeat_blocks(block, M.rels(), us.size(), r);
  std::vector<Polynomial> gens;
  for (const auto& v : eliminate(block, R.line(), image, one, rels)) gens.push_back(R.to_poly(v));
  return HomogeneousIdeal(M.ring_ptr(), std::move(gens));
}

std::vector<int> min_gen_degrees(const SubquotientModule& M) {
  std::vector<int> d;
  for (const auto& g : minimal_generators(M.ambient(), M.gens(), M.rels())) d.push_back(*M.ambient().degree(g));
  std::sort(d.begin(), d.end());
  return d;
}

SubquotientModule minimize(const SubquotientModule& M) {
  return SubquotientModule(M.ring_ptr(), M.ambient(), minimal_generators(M.ambient(), M.gens(), M.rels()),
                           M.rels());
}

SubquotientModule quotient_by(const SubquotientModule& M, const SubquotientModule& N) {
  if (!(M.ambient() == N.ambient())) throw AlgebraError("quotient_by: ambient modules differ");
  const auto& G = M.total_basis();
  for (const auto& g : N.gens()) {
    if (!G.contains(g)) throw AlgebraError("quotient_by: the submodule is not contained in the module");
  }
  auto rels = M.rels();
  rels.insert(rels.end(), N.gens().begin(), N.gens().end());
  rels.insert(rels.end(), N.rels().begin(), N.rels().end());
  return SubquotientModule(M.ring_ptr(), M.ambient(), M.gens(), std::move(rels));
}

SubquotientModule twist(const SubquotientModule& M, int i) {
  return SubquotientModule(M.ring_ptr(), M.ambient().shifted(i), M.gens(), M.rels());
}

SubquotientModule direct_sum(const SubquotientModule& a, const SubquotientModule& b) {
  FreeModule F = direct_sum(a.ambient(), b.ambient());
  const auto off = static_cast<std::uint32_t>(a.ambient().rank());
  auto gens = a.gens();
  auto rels = a.rels();
  for (const auto& g : b.gens()) gens.push_back(renormalize(F, embed(g, off)));
  for (const auto& r : b.rels()) rels.push_back(renormalize(F, embed(r, off)));
  return SubquotientModule(a.ring_ptr(), F, std::move(gens), std::move(rels));
}

bool is_submodule(const SubquotientModule& a, const SubquotientModule& b) {
  if (!(a.ambient() == b.ambient())) return false;
  const auto& G = b.total_basis();
  for (const auto& g : a.total_gens()) {
    if (!G.contains(g)) return false;
  }
  return true;
}

bool same_module(const SubquotientModule& a, const SubquotientModule& b) {
  if (!(a.ambient() == b.ambient())) return false;
  return same_submodule(a.rel_basis(), b.rel_basis()) && same_submodule(a.total_basis(), b.total_basis());
}

bool same_hilbert_function(const SubquotientModule& a, const SubquotientModule& b, int lo, int hi) {
  return hilbert_function(a, lo, hi) == hilbert_function(b, lo, hi);
}

namespace {

// Union-find over basis positions with offsets in Z^d: D(p) = D(root) + off(p).
class OffsetUnion {
 public:
  OffsetUnion(int n, int d) : parent_(n), off_(n, std::vector<int>(d, 0)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int p) {
    if (parent_[p] == p) return p;
    int root = find(parent_[p]);
    if (parent_[p] != root) {
      auto& parent_off = off_[parent_[p]];
      for (std::size_t k = 0; k < off_[p].size(); ++k) off_[p][k] += parent_off[k];
      parent_[p] = root;
    }
    return root;
  }

  // Requires D(q) - D(p) == delta; returns false on conflict.
  bool relate(int p, int q, const std::vector<int>& delta) {
    int rp = find(p);
    int rq = find(q);
    std::vector<int> need(delta.size());
    for (std::size_t k = 0; k < delta.size(); ++k) need[k] = delta[k] + off_[p][k] - off_[q][k];
    if (rp == rq) {
      return std::all_of(need.begin(), need.end(), [](int x) { return x == 0; });
    }
    // D(rq) - D(rp) = need
    parent_[rq] = rp;
    off_[rq] = need;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<std::vector<int>> off_;
};

bool multigraded_vectors(const PolyRing& S, OffsetUnion& uf, const std::vector<ModuleVector>& vs) {
  for (const auto& v : vs) {
    if (v.is_zero()) continue;
    const VTerm& first = v.terms.front();
    auto e0 = S.exponents(first.mono);
    for (std::size_t k = 1; k < v.terms.size(); ++k) {
      const VTerm& t = v.terms[k];
      if (t.pos == first.pos) return false;
      auto e = S.exponents(t.mono);
      std::vector<int> delta(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) delta[i] = e0[i] - e[i];
      if (!uf.relate(static_cast<int>(first.pos), static_cast<int>(t.pos), delta)) return false;
    }
    for (std::size_t a = 0; a < v.terms.size(); ++a) {
      for (std::size_t b = a + 1; b < v.terms.size(); ++b) {
        if (v.terms[a].pos == v.terms[b].pos) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_multigraded(const SubquotientModule& M) {
  if (!M.ring().is_monomial()) return false;
  const PolyRing& S = M.ring().poly();
  OffsetUnion uf(M.ambient().rank(), S.num_vars());
  return multigraded_vectors(S, uf, M.gens()) && multigraded_vectors(S, uf, M.rels());
}

}  // namespace gradua
