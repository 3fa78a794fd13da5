#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gradua/vnum.hpp"
#include "gradua_cli/session.hpp"

namespace gradua::cli {

enum class ParamKind {
  kRing,
  kIdeal,     // declared ideal name or literal "(...)"
  kModule,
  kMap,
  kComplex,
  kInt,
  kRange,     // a..b
  kWord,      // free-form atom
  kList,      // bracketed list
  kIdealList  // list of ideal names or literals
};

struct ParamSpec {
  std::string key;
  ParamKind kind;
  bool required = true;
};

struct Signature {
  std::vector<ParamSpec> params;
  // Number of leading params that may be given positionally.
  std::size_t positional = 0;
};

// Signature of a declaration constructor, or nullptr when unknown.
const Signature* declaration_signature(std::string_view kind, std::string_view ctor);
const Signature* task_signature(std::string_view kind);

using Bound = std::map<std::string, const Value*>;

// Matches args against a signature by position and key. Throws SessionError
// at `line` on unknown, duplicate or missing parameters.
Bound bind_args(const Signature& sig, const std::vector<Arg>& args, const std::string& where, int line);

// A declared ideal name or an ideal literal parsed in `ring`.
HomogeneousIdeal ideal_arg(const Environment& env, const GRingPtr& ring, const Value& v);
std::vector<PrimeCandidate> prime_list_arg(const Environment& env, const GRingPtr& ring, const Value* v);

}  // namespace gradua::cli
