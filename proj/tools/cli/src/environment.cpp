#include <algorithm>

#include "gradua/homology.hpp"
#include "gradua_cli/session.hpp"
#include "signatures.hpp"

namespace gradua::cli {

namespace {

template <class T>
const T& lookup(const std::map<std::string, T>& table, const std::string& name, const char* kind) {
  auto it = table.find(name);
  if (it == table.end()) throw AlgebraError(std::string("unknown ") + kind + " '" + name + "'");
  return it->second;
}

std::vector<std::string> split_top_level(std::string_view body) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (depth == 0 && body[i] == ',')) {
      out.emplace_back(body.substr(start, i - start));
      start = i + 1;
      continue;
    }
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
  }
  return out;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::vector<int> int_list(const Value& v) {
  std::vector<int> out;
  for (const auto& item : v.items) {
    if (item.is_list) throw AlgebraError("expected an integer list");
    out.push_back(parse_int(item.atom));
  }
  return out;
}

std::vector<ModuleVector> vector_list(const GradedRing& R, const FreeModule& F, const Value& v) {
  std::vector<ModuleVector> out;
  for (const auto& item : v.items) {
    if (!item.is_list) throw AlgebraError("each vector must be a bracketed list of components");
    if (static_cast<int>(item.items.size()) != F.rank()) {
      throw AlgebraError("vector " + value_text(item) + " has " + std::to_string(item.items.size()) +
                         " components, ambient rank is " + std::to_string(F.rank()));
    }
    std::vector<Polynomial> comps;
    for (const auto& c : item.items) comps.push_back(R.parse(c.atom));
    ModuleVector vec = F.from_components(comps);
    if (!F.is_homogeneous(vec)) throw AlgebraError("vector " + value_text(item) + " is not homogeneous");
    out.push_back(std::move(vec));
  }
  return out;
}

void same_ring(const GRingPtr& a, const GRingPtr& b) {
  if (a != b) throw AlgebraError("objects live over different rings");
}

class Builder {
 public:
  Builder(Environment& env, const Config& config, const std::optional<Field>& field)
      : env_(env), config_(config), field_(field) {}

  void build(const Declaration& d) {
    if (d.kind == "ring") {
      ring_ = build_ring(d);
      env_.rings[d.name] = ring_;
    } else if (d.kind == "ideal") {
      env_.ideals[d.name] = d.ctor.empty() ? parse_ideal_literal(ring_, d.args.front().value.atom) : build_ideal(d);
    } else if (d.kind == "module") {
      env_.modules[d.name] = build_module(d);
    } else if (d.kind == "map") {
      env_.maps[d.name] = build_map(d);
    } else {
      env_.complexes[d.name] = build_complex(d);
    }
  }

 private:
  Bound bind(const Declaration& d) const {
    return bind_args(*declaration_signature(d.kind, d.ctor), d.args, d.kind + " " + d.name, d.line);
  }

  GRingPtr build_ring(const Declaration& d) const {
    Bound b = bind(d);
    std::vector<std::string> names;
    std::vector<int> weights;
    for (const auto& item : b.at("vars")->items) {
      if (item.is_list) throw AlgebraError("variables are written name or name:weight");
      auto colon = item.atom.find(':');
      names.push_back(item.atom.substr(0, colon));
      weights.push_back(colon == std::string::npos ? 1 : parse_int(item.atom.substr(colon + 1)));
    }
    std::vector<std::string> rels;
    if (b.count("quotient")) {
      for (const auto& item : b.at("quotient")->items) rels.push_back(value_text(item));
    }
    Field field = Field::parse(b.count("field") ? b.at("field")->atom : config_.field);
    if (field_) field = *field_;
    OrderKind order = parse_order_kind(b.count("order") ? b.at("order")->atom : config_.order);
    return make_ring(std::move(names), std::move(weights), rels, field, order);
  }

  HomogeneousIdeal build_ideal(const Declaration& d) const {
    Bound b = bind(d);
    if (d.ctor == "annihilator") return annihilator(env_.module(b.at("module")->atom));
    if (d.ctor == "power") {
      int e = parse_int(b.at("exponent")->atom);
      if (e < 0) throw AlgebraError("negative exponent");
      return ideal_power(ideal_arg(env_, ring_, *b.at("ideal")), static_cast<unsigned>(e));
    }
    HomogeneousIdeal x = ideal_arg(env_, ring_, *b.at("a"));
    HomogeneousIdeal y = ideal_arg(env_, ring_, *b.at("b"));
    same_ring(x.ring_ptr(), y.ring_ptr());
    IdealOp op = d.ctor == "sum" ? IdealOp::kSum : d.ctor == "product" ? IdealOp::kProduct : IdealOp::kIntersection;
    return ideal_combine(x, y, op);
  }

  SubquotientModule build_module(const Declaration& d) const {
    Bound b = bind(d);
    const GradedRing& R = *ring_;
    auto mod = [&](const char* key) -> const SubquotientModule& { return env_.module(b.at(key)->atom); };
    auto pair = [&](const char* x, const char* y) {
      same_ring(mod(x).ring_ptr(), mod(y).ring_ptr());
      return std::pair<const SubquotientModule&, const SubquotientModule&>(mod(x), mod(y));
    };
    const std::string& c = d.ctor;
    if (c == "subquotient") {
      FreeModule F = R.free_module(int_list(*b.at("free")));
      std::vector<ModuleVector> gens = vector_list(R, F, *b.at("gens"));
      std::vector<ModuleVector> rels;
      if (b.count("rels")) rels = vector_list(R, F, *b.at("rels"));
      return SubquotientModule(ring_, F, std::move(gens), std::move(rels));
    }
    if (c == "free") return free_subquotient(ring_, int_list(*b.at("twists")));
    if (c == "ideal" || c == "cyclic") {
      HomogeneousIdeal I = ideal_arg(env_, ring_, *b.at("ideal"));
      FreeModule F = I.ring().free_module({0});
      std::vector<ModuleVector> vecs;
      for (const auto& g : I.gens()) vecs.push_back(I.ring().to_vector(g));
      if (c == "ideal") return SubquotientModule(I.ring_ptr(), F, std::move(vecs), {});
      return SubquotientModule(I.ring_ptr(), F, {F.basis(0)}, std::move(vecs));
    }
    if (c == "quotient") {
      auto [m, n] = pair("module", "sub");
      return quotient_by(m, n);
    }
    if (c == "twist") return twist(mod("module"), parse_int(b.at("shift")->atom));
    if (c == "sum" || c == "intersection") {
      auto [x, y] = pair("a", "b");
      return mod_combine(x, y, c == "sum" ? ModOp::kSum : ModOp::kIntersection);
    }
    if (c == "direct_sum") {
      auto [x, y] = pair("a", "b");
      return direct_sum(x, y);
    }
    if (c == "times") {
      HomogeneousIdeal I = ideal_arg(env_, ring_, *b.at("ideal"));
      same_ring(I.ring_ptr(), mod("module").ring_ptr());
      return ideal_times_module(I, mod("module"));
    }
    if (c == "ext" || c == "tor") {
      auto [l, m] = pair("L", "M");
      int k = parse_int(b.at("k")->atom);
      if (k < 0) throw AlgebraError("negative homological degree");
      return c == "ext" ? ext(l, m, k) : tor(l, m, k);
    }
    const GradedMap& f = env_.maps.at(b.at("map")->atom);
    SubquotientModule source = free_subquotient(ring_, f.source.twists());
    return c == "kernel" ? kernel(f, source) : image(f, source);
  }

  GradedMap build_map(const Declaration& d) const {
    Bound b = bind(d);
    const GradedRing& R = *ring_;
    FreeModule source = R.free_module(int_list(*b.at("source")));
    FreeModule target = R.free_module(int_list(*b.at("target")));
    std::vector<std::vector<Polynomial>> entries;
    for (const auto& row : b.at("entries")->items) {
      if (!row.is_list) throw AlgebraError("entries must be a list of rows");
      entries.emplace_back();
      for (const auto& e : row.items) entries.back().push_back(R.parse(e.atom));
    }
    return make_map(source, target, entries);
  }

  ThreeTermComplex build_complex(const Declaration& d) const {
    Bound b = bind(d);
    const SubquotientModule& L = env_.module(b.at("L")->atom);
    const SubquotientModule& M = env_.module(b.at("M")->atom);
    const SubquotientModule& N = env_.module(b.at("N")->atom);
    same_ring(L.ring_ptr(), M.ring_ptr());
    same_ring(M.ring_ptr(), N.ring_ptr());
    HomogeneousIdeal I = ideal_arg(env_, L.ring_ptr(), *b.at("I"));
    int k = parse_int(b.at("k")->atom);
    if (k < 0) throw AlgebraError("negative homological degree");
    FreeResolution F = free_resolution(L, k + 1);
    return d.ctor == "ext" ? ext_complex(F, M, N, k, I) : tor_complex(F, M, N, k, I);
  }

  Environment& env_;
  const Config& config_;
  std::optional<Field> field_;
  GRingPtr ring_;
};

}  // namespace

const HomogeneousIdeal& Environment::ideal(const std::string& name) const { return lookup(ideals, name, "ideal"); }
const SubquotientModule& Environment::module(const std::string& name) const {
  return lookup(modules, name, "module");
}
const ThreeTermComplex& Environment::complex(const std::string& name) const {
  return lookup(complexes, name, "complex");
}

HomogeneousIdeal parse_ideal_literal(const GRingPtr& ring, std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw AlgebraError("ideal literal must be written (f1, ..., fk)");
  }
  std::vector<Polynomial> gens;
  for (const auto& part : split_top_level(text.substr(1, text.size() - 2))) {
    if (blank(part)) throw AlgebraError("empty generator in ideal literal " + std::string(text));
    gens.push_back(ring->parse(part));
  }
  return HomogeneousIdeal(ring, std::move(gens));
}

HomogeneousIdeal ideal_arg(const Environment& env, const GRingPtr& ring, const Value& v) {
  if (!v.is_list && !v.atom.empty() && v.atom.front() == '(') return parse_ideal_literal(ring, v.atom);
  const HomogeneousIdeal& I = env.ideal(v.atom);
  same_ring(I.ring_ptr(), ring);
  return I;
}

std::vector<PrimeCandidate> prime_list_arg(const Environment& env, const GRingPtr& ring, const Value* v) {
  std::vector<PrimeCandidate> out;
  if (!v) return out;
  for (const auto& item : v->items) out.push_back(user_prime(ideal_arg(env, ring, item)));
  return out;
}

Environment elaborate(const Session& s, const std::optional<Field>& field) {
  Environment env;
  Builder builder(env, s.config, field);
  for (const auto& st : s.order) {
    if (st.is_task) continue;
    const Declaration& d = s.declarations[st.index];
    try {
      builder.build(d);
    } catch (const SessionError&) {
      throw;
    } catch (const std::exception& e) {
      throw SessionError(d.kind + " " + d.name + ": " + e.what(), d.line, 1);
    }
  }
  return env;
}

}  // namespace gradua::cli
