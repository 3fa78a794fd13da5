#include "gradua_cli/runner.hpp"

#include <chrono>

#include "gradua/sweep.hpp"
#include "signatures.hpp"

namespace gradua::cli {

std::string to_string(TaskStatus s) {
  switch (s) {
    case TaskStatus::kOk: return "ok";
    case TaskStatus::kFailed: return "failed";
    case TaskStatus::kError: return "error";
  }
  return "error";
}

namespace {

Json ext_int(ExtendedInt x) { return x.is_finite() ? Json(x.value()) : Json("inf"); }

Json strings(const std::vector<std::string>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

std::vector<std::string> labels(const std::vector<PrimeCandidate>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.label);
  return out;
}

Json fit_json(const std::optional<LinearFit>& f) {
  if (!f) return nullptr;
  Json j;
  j["a"] = f->a;
  j["b"] = ext_int(f->b);
  j["n_stab"] = f->n_stab;
  j["n_max"] = f->n_max;
  j["stable_on"] = "[" + std::to_string(f->n_stab) + ", " + std::to_string(f->n_max) + "]";
  return j;
}

Json record_json(const VRecord& r) {
  Json j;
  j["v"] = ext_int(r.v);
  j["indeg"] = ext_int(r.indeg);
  j["ass"] = strings(labels(r.ass));
  j["ass_complete"] = r.ass_complete;
  Json locals = Json::array();
  for (const auto& [label, v] : r.v_locals) locals.push_back({{"prime", label}, {"v", ext_int(v)}});
  j["v_p"] = std::move(locals);
  return j;
}

const char* kIncompleteAss = "associated primes may be incomplete: the presentation is not multigraded";

class Runner {
 public:
  Runner(const Session& s, const Environment& env, const RunOptions& opts)
      : session_(s), env_(env), opts_(opts) {}

  void run(const TaskSpec& t, const GRingPtr& ring, TaskReport& r) {
    ring_ = ring;
    bound_ = bind_args(*task_signature(t.kind), t.args, "task " + t.kind, t.line);
    const std::string& k = t.kind;
    if (k == "gb") return gb(r);
    if (k == "resolve") return resolve(r);
    if (k == "ext" || k == "tor") return homology(k == "ext", r);
    if (k == "ass") return ass(r);
    if (k == "vnumber") return vnumber(r);
    if (k == "vfunction" || k == "verify") return vfunction(k == "verify", r);
    if (k == "arnumber") return arnumber(r);
    throw AlgebraError("unknown task kind '" + k + "'");
  }

 private:
  bool has(const char* key) const { return bound_.count(key) > 0; }
  const Value& arg(const char* key) const { return *bound_.at(key); }
  int int_arg(const char* key, int fallback) const { return has(key) ? parse_int(arg(key).atom) : fallback; }
  const SubquotientModule& module(const char* key) const { return env_.module(arg(key).atom); }

  Json hilbert(const SubquotientModule& M) const {
    const Config& c = session_.config;
    Json j;
    j["degrees"] = {c.degree_lo, c.degree_hi};
    j["values"] = hilbert_function(M, c.degree_lo, c.degree_hi);
    return j;
  }

  void gb(TaskReport& r) const {
    Json& j = r.result;
    if (has("ideal")) {
      HomogeneousIdeal I = ideal_arg(env_, ring_, arg("ideal"));
      const GradedRing& R = I.ring();
      std::vector<std::string> gens;
      for (const auto& g : I.gens()) gens.push_back(g.to_string());
      std::vector<std::string> basis;
      for (const auto& e : I.basis().elements()) basis.push_back(R.to_poly(e).to_string());
      j["object"] = "ideal";
      j["generators"] = strings(gens);
      j["basis"] = strings(basis);
      j["size"] = basis.size();
      j["buchberger"] = satisfies_buchberger_criterion(I.basis());
      return;
    }
    const SubquotientModule& M = module("module");
    const GroebnerBasis& G = M.total_basis();
    std::vector<std::string> basis;
    for (const auto& e : G.elements()) basis.push_back(M.ambient().format(e));
    j["object"] = "module";
    j["ambient"] = M.ambient().twists();
    j["basis"] = strings(basis);
    j["size"] = basis.size();
    j["buchberger"] = satisfies_buchberger_criterion(G);
  }

  void resolve(TaskReport& r) const {
    const SubquotientModule& M = module("module");
    int length = int_arg("length", 4);
    if (length < 0) throw AlgebraError("length must be nonnegative");
    FreeResolution F = free_resolution(M, length);
    Json& j = r.result;
    j["length"] = F.length();
    j["complete"] = F.complete;
    j["minimal"] = F.minimal && has_no_unit_entries(F);
    Json betti = Json::array();
    Json steps = Json::array();
    for (int k = 0; k <= F.length(); ++k) {
      betti.push_back(F.modules[k].rank());
      steps.push_back({{"k", k}, {"twists", F.modules[k].twists()}});
    }
    j["betti"] = std::move(betti);
    j["modules"] = std::move(steps);
    Json maps = Json::array();
    bool dd_zero = true;
    for (std::size_t k = 0; k < F.maps.size(); ++k) {
      const GradedMap& d = F.maps[k];
      Json rows = Json::array();
      for (int i = 0; i < d.target.rank(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < d.source.rank(); ++c) row.push_back(d.entry(i, c).to_string());
        rows.push_back(std::move(row));
      }
      maps.push_back({{"from", k + 1}, {"to", k}, {"entries", std::move(rows)}});
      if (k > 0) {
        auto images = F.maps[k - 1].apply(d.images);
        auto relv = F.ring->relation_vectors(F.maps[k - 1].target);
        GroebnerBasis G = groebner(F.maps[k - 1].target, relv);
        for (const auto& v : images) dd_zero = dd_zero && G.contains(v);
      }
    }
    j["maps"] = std::move(maps);
    j["d_squared_zero"] = dd_zero;
    if (!F.complete) r.warnings.push_back("resolution truncated at length " + std::to_string(F.length()));
  }

  void homology(bool is_ext, TaskReport& r) const {
    const SubquotientModule& L = module("L");
    const SubquotientModule& M = module("M");
    int k = int_arg("k", 0);
    if (k < 0) throw AlgebraError("negative homological degree");
    SubquotientModule H = is_ext ? ext(L, M, k) : tor(L, M, k);
    Json& j = r.result;
    j["k"] = k;
    j["zero"] = is_zero(H);
    j["indeg"] = ext_int(indeg(H));
    j["min_gen_degrees"] = min_gen_degrees(H);
    j["hilbert"] = hilbert(H);
  }

  void ass(TaskReport& r) const {
    const SubquotientModule& M = module("module");
    AssResult a = ass_search(M, prime_list_arg(env_, M.ring_ptr(), has("extra_primes") ? &arg("extra_primes") : nullptr));
    r.result["primes"] = strings(labels(a.primes));
    r.result["complete"] = a.complete;
    if (!a.complete) r.warnings.push_back(kIncompleteAss);
  }

  void vnumber(TaskReport& r) const {
    const SubquotientModule& M = module("module");
    VRecord v = v_number(M, prime_list_arg(env_, M.ring_ptr(), has("extra_primes") ? &arg("extra_primes") : nullptr));
    r.result = record_json(v);
    if (!v.ass_complete) r.warnings.push_back(kIncompleteAss);
  }

  FamilySpec family(Json& echo) const {
    FamilySpec f;
    f.variant = has("variant") ? parse_variant(arg("variant").atom) : Variant::kQuotient;
    Functor fallback = f.variant == Variant::kUVW ? Functor::kRaw : Functor::kExt;
    f.functor = has("functor") ? parse_functor(arg("functor").atom) : fallback;
    f.k = int_arg("k", 0);
    if (f.k < 0) throw AlgebraError("negative homological degree");
    Json objects = Json::object();
    auto take = [&](const char* key, SubquotientModule& slot) {
      slot = module(key);
      objects[key] = arg(key).atom;
    };
    if (f.functor != Functor::kRaw) take("L", f.L);
    if (f.variant == Variant::kUVW) {
      take("U", f.U);
      take("V", f.V);
      take("W", f.W);
    } else {
      take("M", f.M);
      take("N", f.N);
    }
    const SubquotientModule& base = f.variant == Variant::kUVW ? f.U : f.M;
    f.I = ideal_arg(env_, base.ring_ptr(), arg("I"));
    f.extra_primes = prime_list_arg(env_, base.ring_ptr(), has("extra_primes") ? &arg("extra_primes") : nullptr);
    echo["functor"] = to_string(f.functor);
    echo["variant"] = to_string(f.variant);
    echo["k"] = f.k;
    echo["objects"] = std::move(objects);
    echo["I"] = f.I.to_string();
    return f;
  }

  void vfunction(bool verify, TaskReport& r) const {
    Json fam;
    FamilySpec f = family(fam);
    const Config& c = session_.config;
    auto [n_min, n_max] = has("n_range") ? parse_range(arg("n_range").atom) : std::pair{c.n_min, c.n_max};
    SweepOptions so;
    so.min_suffix = int_arg("min_suffix", c.min_suffix);
    so.jobs = opts_.jobs.value_or(c.jobs);
    VFunctionReport rep = v_function(f, n_min, n_max, so);

    Json& j = r.result;
    j["family"] = std::move(fam);
    j["n_range"] = {n_min, n_max};
    Json rows = Json::array();
    bool incomplete = false;
    for (const auto& row : rep.rows) {
      Json rj;
      rj["n"] = row.n;
      Json rec = record_json(row.record);
      for (auto& [key, val] : rec.items()) rj[key] = val;
      rows.push_back(std::move(rj));
      incomplete = incomplete || !row.record.ass_complete;
      std::string ass;
      for (const auto& p : row.record.ass) ass += (ass.empty() ? "" : " ") + p.label;
      r.tsv_rows.push_back({std::to_string(row.n), row.record.v.to_string(), row.record.indeg.to_string(),
                            ass.empty() ? "-" : ass});
    }
    j["rows"] = std::move(rows);
    j["fit"] = fit_json(rep.fit);
    j["indeg_fit"] = fit_json(rep.indeg_fit);
    Json primes = Json::array();
    for (const auto& pf : rep.prime_fits) {
      primes.push_back({{"prime", pf.prime}, {"from", pf.from}, {"fit", fit_json(pf.fit)}});
    }
    j["prime_fits"] = std::move(primes);
    j["ideal_degrees"] = rep.ideal_degrees;
    j["slope_check"] = rep.slope_check;
    if (!rep.fit) {
      r.warnings.push_back("no stable linear law on window [" + std::to_string(n_min) + ", " + std::to_string(n_max) +
                           "] with minimum suffix " + std::to_string(so.min_suffix));
    }
    if (incomplete) r.warnings.push_back(kIncompleteAss);
    if (!verify) return;

    TheoremVerdict v = verify_theorem(rep, f);
    Json vj;
    vj["hypothesis"] = to_string(v.hypothesis);
    vj["slope"] = to_string(v.slope);
    vj["ass_stable"] = to_string(v.ass_stable);
    vj["indeg_slope"] = to_string(v.indeg_slope);
    vj["consistent"] = v.consistent;
    vj["notes"] = strings(v.notes);
    j["verdict"] = std::move(vj);
    if (!v.consistent) r.status = TaskStatus::kFailed;
  }

  void arnumber(TaskReport& r) const {
    const ThreeTermComplex& T = env_.complex(arg("complex").atom);
    int window = int_arg("window", 4);
    int n_cap = int_arg("n_cap", 10);
    if (window < 1 || n_cap < 0) throw AlgebraError("window must be positive and n_cap nonnegative");
    SubquotientModule c_prime(T.C.ring_ptr(), T.C.ambient(), T.C_sub, T.C.rels());
    SubquotientModule im(T.C.ring_ptr(), T.C.ambient(), T.psi.apply(T.B.gens()), T.C.rels());
    ArtinReesEstimate e = artin_rees_estimate(c_prime, im, T.I, window, n_cap);
    r.result["n0"] = e.n0;
    r.result["window"] = e.window;
    r.result["verified_range"] = {e.verified_lo, e.verified_hi};
    r.warnings.push_back("n0 is a windowed estimate verified on [" + std::to_string(e.verified_lo) + ", " +
                         std::to_string(e.verified_hi) + "], not a certified bound");
  }

  const Session& session_;
  const Environment& env_;
  const RunOptions& opts_;
  GRingPtr ring_;
  Bound bound_;
};

}  // namespace

std::vector<TaskReport> run_session(const Session& s, const Environment& env, const RunOptions& opts) {
  std::vector<TaskReport> out;
  Runner runner(s, env, opts);
  GRingPtr ring;
  for (const auto& st : s.order) {
    if (!st.is_task) {
      const Declaration& d = s.declarations[st.index];
      if (d.kind == "ring") ring = env.rings.at(d.name);
      continue;
    }
    const TaskSpec& t = s.tasks[st.index];
    TaskReport r;
    r.task = t.kind;
    r.index = st.index;
    r.line = t.line;
    for (const auto& a : t.args) r.args[a.key] = value_text(a.value);
    r.result = Json::object();
    auto start = std::chrono::steady_clock::now();
    try {
      runner.run(t, ring, r);
    } catch (const std::exception& e) {
      r.status = TaskStatus::kError;
      r.error = e.what();
      r.result = nullptr;
      r.tsv_rows.clear();
    }
    if (opts.timing) {
      r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    out.push_back(std::move(r));
  }
  return out;
}

Json task_json(const TaskReport& r, bool timing) {
  Json j;
  j["task"] = r.task;
  j["index"] = r.index;
  j["line"] = r.line;
  j["args"] = r.args;
  j["status"] = to_string(r.status);
  j["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
  j["result"] = r.result;
  j["warnings"] = strings(r.warnings);
  if (timing && r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

Json report_json(const Session& s, const std::vector<TaskReport>& reports, const RunOptions& opts) {
  Json j;
  j["tool"] = "gradua";
  j["format"] = 1;
  Json cfg;
  cfg["field"] = opts.field ? opts.field->to_string() : s.config.field;
  cfg["order"] = s.config.order;
  cfg["n_range"] = {s.config.n_min, s.config.n_max};
  cfg["min_suffix"] = s.config.min_suffix;
  cfg["degree_window"] = {s.config.degree_lo, s.config.degree_hi};
  j["config"] = std::move(cfg);
  Json tasks = Json::array();
  std::size_t ok = 0, failed = 0, errors = 0;
  for (const auto& r : reports) {
    tasks.push_back(task_json(r, opts.timing));
    ok += r.status == TaskStatus::kOk;
    failed += r.status == TaskStatus::kFailed;
    errors += r.status == TaskStatus::kError;
  }
  j["tasks"] = std::move(tasks);
  j["summary"] = {{"tasks", reports.size()}, {"ok", ok}, {"failed", failed}, {"errors", errors}};
  return j;
}

std::string tsv_text(const std::vector<TaskReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    if (r.tsv_rows.empty()) continue;
    out += "# task " + std::to_string(r.index) + " (" + r.task + ", line " + std::to_string(r.line) + ")\n";
    out += "n\tv\tindeg\tass\n";
    for (const auto& row : r.tsv_rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "\t" : "") + row[i];
      out += "\n";
    }
  }
  return out;
}

int exit_code(const std::vector<TaskReport>& reports) {
  for (const auto& r : reports) {
    if (r.status != TaskStatus::kOk) return 1;
  }
  return 0;
}

}  // namespace gradua::cli
