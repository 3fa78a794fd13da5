#include "gradua/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace gradua {

std::string to_string(Functor f) {
  switch (f) {
    case Functor::kExt:
      return "ext";
    case Functor::kTor:
      return "tor";
    case Functor::kRaw:
      return "raw";
  }
  return "?";
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::kQuotient:
      return "M/InN";
    case Variant::kPowerQuotient:
      return "InM/InN";
    case Variant::kUVW:
      return "(U+InV)/InW";
  }
  return "?";
}

Functor parse_functor(std::string_view s) {
  if (s == "ext") return Functor::kExt;
  if (s == "tor") return Functor::kTor;
  if (s == "raw" || s == "raw-module") return Functor::kRaw;
  throw AlgebraError("unknown functor '" + std::string(s) + "'");
}

Variant parse_variant(std::string_view s) {
  if (s == "M/InN") return Variant::kQuotient;
  if (s == "InM/InN") return Variant::kPowerQuotient;
  if (s == "(U+InV)/InW" || s == "UVW") return Variant::kUVW;
  throw AlgebraError("unknown family variant '" + std::string(s) + "'");
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kNotApplicable:
      return "n/a";
  }
  return "?";
}

SubquotientModule family_member(const FamilySpec& family, int n) {
  if (n < 0) throw AlgebraError("family index must be nonnegative");
  HomogeneousIdeal In = ideal_power(family.I, static_cast<unsigned>(n));
  switch (family.variant) {
    case Variant::kQuotient:
      return quotient_by(family.M, ideal_times_module(In, family.N));
    case Variant::kPowerQuotient:
      return quotient_by(ideal_times_module(In, family.M), ideal_times_module(In, family.N));
    case Variant::kUVW:
      return uvw_module(family.U, family.V, family.W, In);
  }
  throw AlgebraError("unknown family variant");
}

SubquotientModule family_module(const FamilySpec& family, int n, const FreeResolution* res) {
  SubquotientModule X = family_member(family, n);
  switch (family.functor) {
    case Functor::kExt:
      return res ? ext(*res, X, family.k) : ext(family.L, X, family.k);
    case Functor::kTor:
      return res ? tor(*res, X, family.k) : tor(family.L, X, family.k);
    case Functor::kRaw:
      return X;
  }
  throw AlgebraError("unknown functor");
}

SubquotientModule hypothesis_module(const FamilySpec& family) {
  const SubquotientModule& base = family.variant == Variant::kUVW ? family.U : family.M;
  switch (family.functor) {
    case Functor::kExt:
      return ext(family.L, base, family.k);
    case Functor::kTor:
      return tor(family.L, base, family.k);
    case Functor::kRaw:
      return base;
  }
  throw AlgebraError("unknown functor");
}

std::optional<LinearFit> fit_linear(std::span<const ExtendedInt> values, int n_first, int min_suffix) {
  if (min_suffix < 2) throw AlgebraError("fit_linear: min_suffix must be at least 2");
  const int len = static_cast<int>(values.size());
  if (len < min_suffix) return std::nullopt;
  const int last = len - 1;
  const int n_max = n_first + last;
  if (values[last].is_infinite()) {
    int i = last;
    while (i > 0 && values[i - 1].is_infinite()) --i;
    if (last - i + 1 < min_suffix) return std::nullopt;
    return LinearFit{0, ExtendedInt(), n_first + i, n_max};
  }
  if (values[last - 1].is_infinite()) return std::nullopt;
  long a = values[last].value() - values[last - 1].value();
  long b = values[last].value() - a * n_max;
  int i = last - 1;
  while (i > 0 && values[i - 1].is_finite() && values[i - 1].value() == a * (n_first + i - 1) + b) --i;
  if (last - i + 1 < min_suffix) return std::nullopt;
  return LinearFit{a, ExtendedInt(b), n_first + i, n_max};
}

namespace {

std::vector<std::string> labels(const VRecord& r) {
  std::vector<std::string> out;
  for (const auto& p : r.ass) out.push_back(p.label);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VFunctionReport v_function(const FamilySpec& family, int n_min, int n_max, const SweepOptions& opts) {
  if (n_min > n_max) throw AlgebraError("v_function: empty n range");
  if (n_min < 0) throw AlgebraError("v_function: n must be nonnegative");
  VFunctionReport report;
  report.ideal_degrees = family.I.min_gen_degrees();

  std::optional<FreeResolution> res;
  if (family.functor != Functor::kRaw) res = free_resolution(family.L, family.k + 1, true);
  const FreeResolution* rp = res ? &*res : nullptr;

  const int count = n_max - n_min + 1;
  report.rows.resize(count);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        int n = n_min + i;
        report.rows[i] = VRow{n, v_number(family_module(family, n, rp), family.extra_primes)};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, std::min(opts.jobs, count));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ExtendedInt> vs;
  std::vector<ExtendedInt> ds;
  for (const auto& row : report.rows) {
    vs.push_back(row.record.v);
    ds.push_back(row.record.indeg);
  }
  report.fit = fit_linear(vs, n_min, opts.min_suffix);
  report.indeg_fit = fit_linear(ds, n_min, opts.min_suffix);
  if (report.fit) {
    const auto& d = report.ideal_degrees;
    report.slope_check = report.fit->b.is_infinite() ||
                         std::find(d.begin(), d.end(), report.fit->a) != d.end();
  }

  // Per-prime laws on the longest trailing run where the prime stays associated.
  const VRecord& last = report.rows.back().record;
  for (const auto& [label, unused] : last.v_locals) {
    int start = count - 1;
    std::vector<ExtendedInt> run;
    while (start >= 0) {
      const auto& locs = report.rows[start].record.v_locals;
      auto it = std::find_if(locs.begin(), locs.end(), [&](const auto& e) { return e.first == label; });
      if (it == locs.end()) break;
      run.push_back(it->second);
      --start;
    }
    std::reverse(run.begin(), run.end());
    int from = n_min + start + 1;
    report.prime_fits.push_back(PrimeFit{label, from, fit_linear(run, from, opts.min_suffix)});
  }
  return report;
}

TheoremVerdict verify_theorem(const VFunctionReport& report, const FamilySpec& family) {
  TheoremVerdict verdict;
  if (family.variant != Variant::kPowerQuotient) {
    SubquotientModule H = hypothesis_module(family);
    verdict.hypothesis = is_zero(colon_ann(H, family.I)) ? CheckStatus::kPass : CheckStatus::kFail;
    if (verdict.hypothesis == CheckStatus::kFail) verdict.notes.push_back("(0 :_H I) is nonzero");
  }
  if (!report.fit) {
    verdict.notes.push_back("no stable linear law on window");
  } else {
    if (report.fit->b.is_infinite()) {
      verdict.notes.push_back("v is infinite on the fitted suffix");
    } else {
      verdict.slope = report.slope_check ? CheckStatus::kPass : CheckStatus::kFail;
    }
    std::vector<std::string> first;
    bool have = false;
    verdict.ass_stable = CheckStatus::kPass;
    for (const auto& row : report.rows) {
      if (row.n < report.fit->n_stab) continue;
      auto l = labels(row.record);
      if (!have) {
        first = l;
        have = true;
      } else if (l != first) {
        verdict.ass_stable = CheckStatus::kFail;
      }
    }
    if (family.variant == Variant::kPowerQuotient && report.fit->b.is_finite()) {
      verdict.indeg_slope = report.indeg_fit && report.indeg_fit->a == report.fit->a ? CheckStatus::kPass
                                                                                     : CheckStatus::kFail;
    }
  }
  bool premise = verdict.hypothesis != CheckStatus::kFail;
  verdict.consistent = !premise || (verdict.slope != CheckStatus::kFail && verdict.ass_stable != CheckStatus::kFail &&
                                    verdict.indeg_slope != CheckStatus::kFail);
  return verdict;
}

}  // namespace gradua
