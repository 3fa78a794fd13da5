#include "oracle.hpp"

#include <stdexcept>

namespace gradua::oracle {

DegreeSpace::DegreeSpace(const FreeModule& F, int n) : F_(F) {
  for (int i = 0; i < F.rank(); ++i) {
    for (const auto& m : F.ring().monomials_of_degree(n - F.twist(i))) {
      index_[{static_cast<std::uint32_t>(i), F.ring().exponents(m)}] = static_cast<int>(basis_.size());
      basis_.push_back({m, static_cast<std::uint32_t>(i), F.ring().one()});
    }
  }
}

std::vector<FieldElem> DegreeSpace::coordinates(const ModuleVector& v) const {
  std::vector<FieldElem> c(basis_.size(), F_.ring().zero());
  for (const auto& t : v.terms) {
    auto it = index_.find({t.pos, F_.ring().exponents(t.mono)});
    if (it == index_.end()) throw std::logic_error("oracle: vector has the wrong degree");
    c[it->second] = t.coeff;
  }
  return c;
}

ModuleVector DegreeSpace::vector(const std::vector<FieldElem>& coords) const {
  std::vector<VTerm> terms;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) terms.push_back({basis_[i].mono, basis_[i].pos, coords[i]});
  }
  return F_.normalize(std::move(terms));
}

std::vector<FieldElem> Subspace::reduce(std::vector<FieldElem> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const FieldElem c = v[pivots_[r]];
    if (c.is_zero()) continue;
    for (int j = 0; j < dim_; ++j) v[j] -= c * rows_[r][j];
  }
  return v;
}

bool Subspace::add(std::vector<FieldElem> v) {
  v = reduce(std::move(v));
  int pivot = -1;
  for (int j = 0; j < dim_ && pivot < 0; ++j) {
    if (!v[j].is_zero()) pivot = j;
  }
  if (pivot < 0) return false;
  FieldElem inv = v[pivot].inverse();
  for (auto& x : v) x *= inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const FieldElem c = rows_[r][pivot];
    if (c.is_zero()) continue;
    for (int j = 0; j < dim_; ++j) rows_[r][j] -= c * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool Subspace::contains(std::vector<FieldElem> v) const {
  v = reduce(std::move(v));
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Subspace span_in_degree(const DegreeSpace& space, const FreeModule& F, const std::vector<ModuleVector>& gens,
                        int n) {
  Subspace S(F.field(), space.dimension());
  for (const auto& g : gens) {
    auto d = F.degree(g);
    if (!d || *d > n) continue;
    for (const auto& m : F.ring().monomials_of_degree(n - *d)) {
      S.add(space.coordinates(F.mul_term(g, m, F.ring().one())));
    }
  }
  return S;
}

namespace {

std::vector<ModuleVector> relation_part(const SubquotientModule& M) {
  auto rels = M.rels();
  auto J = M.ring().relation_vectors(M.ambient());
  rels.insert(rels.end(), J.begin(), J.end());
  return rels;
}

std::vector<ModuleVector> total_part(const SubquotientModule& M) {
  auto all = relation_part(M);
  all.insert(all.end(), M.gens().begin(), M.gens().end());
  return all;
}

}  // namespace

long piece_dimension(const SubquotientModule& M, int n) {
  DegreeSpace space(M.ambient(), n);
  long total = span_in_degree(space, M.ambient(), total_part(M), n).rank();
  long rel = span_in_degree(space, M.ambient(), relation_part(M), n).rank();
  return total - rel;
}

std::vector<long> hilbert_function(const SubquotientModule& M, int lo, int hi) {
  std::vector<long> out;
  for (int n = lo; n <= hi; ++n) out.push_back(oracle::piece_dimension(M, n));
  return out;
}

long quotient_dimension(const HomogeneousIdeal& I, int n) {
  const GradedRing& R = I.ring();
  const FreeModule& F = R.line();
  DegreeSpace space(F, n);
  std::vector<ModuleVector> gens = R.relation_vectors(F);
  for (const auto& g : I.gens()) gens.push_back(R.to_vector(g));
  return space.dimension() - span_in_degree(space, F, gens, n).rank();
}

std::vector<ModuleVector> enumerate_piece(const SubquotientModule& M, int n, std::size_t cap) {
  const Field K = M.ring().field();
  if (K.is_rational()) throw std::invalid_argument("oracle: enumeration needs a finite field");
  const FreeModule& F = M.ambient();
  DegreeSpace space(F, n);
  Subspace rel = span_in_degree(space, F, relation_part(M), n);
  // Complement of V_n inside (U + V)_n.
  std::vector<std::vector<FieldElem>> basis;
  Subspace grow = rel;
  for (const auto& g : M.gens()) {
    auto d = F.degree(g);
    if (!d || *d > n) continue;
    for (const auto& m : F.ring().monomials_of_degree(n - *d)) {
      auto c = space.coordinates(F.mul_term(g, m, F.ring().one()));
      if (grow.add(c)) basis.push_back(std::move(c));
    }
  }
  const std::size_t q = K.characteristic();
  std::size_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    count *= q;
    if (count > cap + 1) return {};
  }
  std::vector<ModuleVector> out;
  std::vector<std::size_t> digits(basis.size(), 0);
  for (std::size_t k = 1; k < count; ++k) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
    std::vector<FieldElem> v(space.dimension(), FieldElem(K, 0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (digits[i] == 0) continue;
      FieldElem c(K, static_cast<long>(digits[i]));
      for (int j = 0; j < space.dimension(); ++j) v[j] += c * basis[i][j];
    }
    out.push_back(space.vector(v));
  }
  return out;
}

bool annihilator_is(const SubquotientModule& M, const ModuleVector& x, int n, const HomogeneousIdeal& p,
                    int max_degree) {
  const FreeModule& F = M.ambient();
  const GradedRing& R = M.ring();
  const FreeModule& line = R.line();
  std::vector<ModuleVector> pj = R.relation_vectors(line);
  for (const auto& g : p.gens()) pj.push_back(R.to_vector(g));
  for (int d = 0; d <= max_degree; ++d) {
    auto monos = R.poly().monomials_of_degree(d);
    if (monos.empty()) continue;
    DegreeSpace target(F, n + d);
    Subspace rel = span_in_degree(target, F, relation_part(M), n + d);
    // Images of the monomials of S_d in M_{n+d}, reduced modulo V.
    std::vector<std::vector<FieldElem>> images;
    Subspace image_span(R.field(), target.dimension());
    for (const auto& m : monos) {
      images.push_back(rel.reduce(target.coordinates(F.mul_term(x, m, R.poly().one()))));
      image_span.add(images.back());
    }
    const long ann_dim = static_cast<long>(monos.size()) - image_span.rank();
    DegreeSpace source(line, d);
    Subspace pd = span_in_degree(source, line, pj, d);
    if (pd.rank() != ann_dim) return false;
    // Every element of (p + J)_d must kill x.
    for (const auto& g : pj) {
      auto gd = line.degree(g);
      if (!gd || *gd > d) continue;
      for (const auto& m : R.poly().monomials_of_degree(d - *gd)) {
        auto r = source.coordinates(line.mul_term(g, m, R.poly().one()));
        std::vector<FieldElem> img(target.dimension(), R.poly().zero());
        for (std::size_t i = 0; i < monos.size(); ++i) {
          if (r[i].is_zero()) continue;
          for (int j = 0; j < target.dimension(); ++j) img[j] += r[i] * images[i][j];
        }
        if (!rel.contains(img)) return false;
      }
    }
  }
  return true;
}

ExtendedInt v_p_by_enumeration(const SubquotientModule& M, const HomogeneousIdeal& p, int n_lo, int n_hi,
                               int max_degree) {
  for (int n = n_lo; n <= n_hi; ++n) {
    for (const auto& x : enumerate_piece(M, n)) {
      if (annihilator_is(M, x, n, p, max_degree)) return n;
    }
  }
  return ExtendedInt::infinity();
}

}  // namespace gradua::oracle
