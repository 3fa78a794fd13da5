#pragma once

// v-functions n -> v(H_n) over families of modules indexed by powers of an
// ideal, exact eventual-linearity fits and checks of the linearity theorems.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradua/homology.hpp"
#include "gradua/vnum.hpp"

namespace gradua {

enum class Functor { kExt, kTor, kRaw };
// M/I^nN, I^nM/I^nN and (U + I^nV)/I^nW.
enum class Variant { kQuotient, kPowerQuotient, kUVW };

std::string to_string(Functor f);
std::string to_string(Variant v);
Functor parse_functor(std::string_view s);
Variant parse_variant(std::string_view s);

struct FamilySpec {
  Functor functor = Functor::kRaw;
  Variant variant = Variant::kQuotient;
  int k = 0;
  SubquotientModule L;
  // M and N for the quotient variants; U, V, W for kUVW.
  SubquotientModule M;
  SubquotientModule N;
  SubquotientModule U;
  SubquotientModule V;
  SubquotientModule W;
  HomogeneousIdeal I;
  std::vector<PrimeCandidate> extra_primes;
};

// The n-th module of the family before the functor is applied.
SubquotientModule family_member(const FamilySpec& family, int n);
// H_n; `res` must resolve family.L to length at least k + 1 for Ext/Tor.
SubquotientModule family_module(const FamilySpec& family, int n, const FreeResolution* res);
// Ext^k(L, M), Tor_k(L, M) or U: the module whose I-torsion the theorems exclude.
SubquotientModule hypothesis_module(const FamilySpec& family);

struct LinearFit {
  long a = 0;
  ExtendedInt b;
  int n_stab = 0;
  int n_max = 0;
};

// values[i] belongs to n = n_first + i. Returns the longest suffix on which
// values are exactly a·n + b (or all infinite, giving a = 0, b = ∞), provided
// it has at least min_suffix entries.
std::optional<LinearFit> fit_linear(std::span<const ExtendedInt> values, int n_first, int min_suffix);

struct VRow {
  int n = 0;
  VRecord record;
};

struct PrimeFit {
  std::string prime;
  // First n of the stable sub-suffix on which the prime is associated.
  int from = 0;
  std::optional<LinearFit> fit;
};

struct VFunctionReport {
  std::vector<VRow> rows;
  std::optional<LinearFit> fit;
  std::optional<LinearFit> indeg_fit;
  std::vector<PrimeFit> prime_fits;
  std::vector<int> ideal_degrees;
  // Fit present and slope in ideal_degrees (vacuous for b = ∞).
  bool slope_check = false;
};

struct SweepOptions {
  int min_suffix = 4;
  int jobs = 1;
};

VFunctionReport v_function(const FamilySpec& family, int n_min, int n_max, const SweepOptions& opts = {});

enum class CheckStatus { kPass, kFail, kNotApplicable };
std::string to_string(CheckStatus s);

struct TheoremVerdict {
  // (0 :_H I) = 0 for the hypothesis module H.
  CheckStatus hypothesis = CheckStatus::kNotApplicable;
  // Slope of the fitted law lies among the minimal generator degrees of I.
  CheckStatus slope = CheckStatus::kNotApplicable;
  // Ass(H_n) constant on the fitted suffix.
  CheckStatus ass_stable = CheckStatus::kNotApplicable;
  // indeg and v share the leading coefficient (I^nM/I^nN families).
  CheckStatus indeg_slope = CheckStatus::kNotApplicable;
  // False only when the hypothesis holds and some conclusion fails.
  bool consistent = true;
  std::vector<std::string> notes;
};

TheoremVerdict verify_theorem(const VFunctionReport& report, const FamilySpec& family);

}  // namespace gradua
