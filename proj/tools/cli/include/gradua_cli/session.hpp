#pragma once

// Session files: a line-oriented declaration language for rings, ideals,
// modules, maps and complexes, followed by tasks. See docs/session-format.md.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gradua/homology.hpp"

namespace gradua::cli {

class SessionError : public std::runtime_error {
 public:
  SessionError(const std::string& what, int line, int column)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }
  std::string located() const;

 private:
  int line_;
  int column_;
};

// Argument values are kept as raw text (atoms) or bracketed lists.
struct Value {
  bool is_list = false;
  std::string atom;
  std::vector<Value> items;

  friend bool operator==(const Value&, const Value&) = default;
};

struct Arg {
  std::string key;  // empty for positional arguments
  Value value;

  friend bool operator==(const Arg&, const Arg&) = default;
};

struct Declaration {
  std::string kind;  // ring, ideal, module, map, complex
  std::string name;
  std::string ctor;  // empty for an ideal literal
  std::vector<Arg> args;
  int line = 0;

  friend bool operator==(const Declaration& a, const Declaration& b) {
    return a.kind == b.kind && a.name == b.name && a.ctor == b.ctor && a.args == b.args;
  }
};

struct TaskSpec {
  std::string kind;
  std::vector<Arg> args;
  int line = 0;

  const Value* find(std::string_view key) const;
  friend bool operator==(const TaskSpec& a, const TaskSpec& b) { return a.kind == b.kind && a.args == b.args; }
};

struct Config {
  std::string field = "Q";
  std::string order = "grevlex";
  int n_min = 1;
  int n_max = 8;
  int min_suffix = 4;
  int degree_lo = -10;
  int degree_hi = 10;
  int jobs = 1;

  friend bool operator==(const Config&, const Config&) = default;
};

// Statements in source order; declarations and tasks may interleave.
struct Statement {
  bool is_task = false;
  std::size_t index = 0;

  friend bool operator==(const Statement&, const Statement&) = default;
};

struct Session {
  Config config;
  std::vector<Declaration> declarations;
  std::vector<TaskSpec> tasks;
  std::vector<Statement> order;

  friend bool operator==(const Session&, const Session&) = default;
};

// Syntax, single assignment, declared-before-use and task argument checks.
// Objects are built by elaborate().
Session parse_session(std::string_view text);
std::string serialize_session(const Session& s);

// Declared objects, keyed by name.
struct Environment {
  std::map<std::string, GRingPtr> rings;
  std::map<std::string, HomogeneousIdeal> ideals;
  std::map<std::string, SubquotientModule> modules;
  std::map<std::string, GradedMap> maps;
  std::map<std::string, ThreeTermComplex> complexes;

  const HomogeneousIdeal& ideal(const std::string& name) const;
  const SubquotientModule& module(const std::string& name) const;
  const ThreeTermComplex& complex(const std::string& name) const;
};

// Builds every declaration; `field` overrides the field of all rings.
// Algebra errors are rethrown as SessionError at the declaration line.
Environment elaborate(const Session& s, const std::optional<Field>& field = std::nullopt);

// Parses an ideal literal such as "(x, y^2)" in the given ring.
HomogeneousIdeal parse_ideal_literal(const GRingPtr& ring, std::string_view text);

int parse_int(std::string_view text);
std::pair<int, int> parse_range(std::string_view text);
std::string value_text(const Value& v);

}  // namespace gradua::cli
