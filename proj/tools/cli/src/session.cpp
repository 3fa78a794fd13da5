#include "gradua_cli/session.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "gradua/sweep.hpp"
#include "signatures.hpp"

namespace gradua::cli {

std::string SessionError::located() const {
  return "line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what();
}

const Value* TaskSpec::find(std::string_view key) const {
  for (const auto& a : args) {
    if (a.key == key) return &a.value;
  }
  return nullptr;
}

namespace {

using K = ParamKind;

const std::map<std::string, Signature, std::less<>>& declaration_table() {
  static const std::map<std::string, Signature, std::less<>> table = {
      {"ring/graded",
       {{{"vars", K::kList}, {"quotient", K::kList, false}, {"field", K::kWord, false},
         {"order", K::kWord, false}},
        1}},
      {"ideal/power", {{{"ideal", K::kIdeal}, {"exponent", K::kInt}}, 2}},
      {"ideal/sum", {{{"a", K::kIdeal}, {"b", K::kIdeal}}, 2}},
      {"ideal/product", {{{"a", K::kIdeal}, {"b", K::kIdeal}}, 2}},
      {"ideal/intersection", {{{"a", K::kIdeal}, {"b", K::kIdeal}}, 2}},
      {"ideal/annihilator", {{{"module", K::kModule}}, 1}},
      {"module/subquotient",
       {{{"free", K::kList}, {"gens", K::kList}, {"rels", K::kList, false}}, 0}},
      {"module/free", {{{"twists", K::kList}}, 1}},
      {"module/ideal", {{{"ideal", K::kIdeal}}, 1}},
      {"module/cyclic", {{{"ideal", K::kIdeal}}, 1}},
      {"module/quotient", {{{"module", K::kModule}, {"sub", K::kModule}}, 2}},
      {"module/twist", {{{"module", K::kModule}, {"shift", K::kInt}}, 2}},
      {"module/sum", {{{"a", K::kModule}, {"b", K::kModule}}, 2}},
      {"module/intersection", {{{"a", K::kModule}, {"b", K::kModule}}, 2}},
      {"module/direct_sum", {{{"a", K::kModule}, {"b", K::kModule}}, 2}},
      {"module/times", {{{"ideal", K::kIdeal}, {"module", K::kModule}}, 2}},
      {"module/ext", {{{"L", K::kModule}, {"M", K::kModule}, {"k", K::kInt}}, 3}},
      {"module/tor", {{{"L", K::kModule}, {"M", K::kModule}, {"k", K::kInt}}, 3}},
      {"module/kernel", {{{"map", K::kMap}}, 1}},
      {"module/image", {{{"map", K::kMap}}, 1}},
      {"map/matrix", {{{"source", K::kList}, {"target", K::kList}, {"entries", K::kList}}, 0}},
      {"complex/ext",
       {{{"L", K::kModule}, {"M", K::kModule}, {"N", K::kModule}, {"k", K::kInt}, {"I", K::kIdeal}},
        0}},
      {"complex/tor",
       {{{"L", K::kModule}, {"M", K::kModule}, {"N", K::kModule}, {"k", K::kInt}, {"I", K::kIdeal}},
        0}},
  };
  return table;
}

const std::map<std::string, Signature, std::less<>>& task_table() {
  static const std::vector<ParamSpec> family = {
      {"functor", K::kWord, false}, {"variant", K::kWord, false},  {"k", K::kInt, false},
      {"L", K::kModule, false},     {"M", K::kModule, false},      {"N", K::kModule, false},
      {"U", K::kModule, false},     {"V", K::kModule, false},      {"W", K::kModule, false},
      {"I", K::kIdeal},             {"n_range", K::kRange, false}, {"min_suffix", K::kInt, false},
      {"extra_primes", K::kIdealList, false}};
  static const std::map<std::string, Signature, std::less<>> table = {
      {"gb", {{{"ideal", K::kIdeal, false}, {"module", K::kModule, false}}, 0}},
      {"resolve", {{{"module", K::kModule}, {"length", K::kInt, false}}, 0}},
      {"ext", {{{"L", K::kModule}, {"M", K::kModule}, {"k", K::kInt}}, 0}},
      {"tor", {{{"L", K::kModule}, {"M", K::kModule}, {"k", K::kInt}}, 0}},
      {"ass", {{{"module", K::kModule}, {"extra_primes", K::kIdealList, false}}, 0}},
      {"vnumber", {{{"module", K::kModule}, {"extra_primes", K::kIdealList, false}}, 0}},
      {"vfunction", {family, 0}},
      {"verify", {family, 0}},
      {"arnumber",
       {{{"complex", K::kComplex}, {"window", K::kInt, false}, {"n_cap", K::kInt, false}}, 0}},
  };
  return table;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

char closer_of(char c) { return c == '(' ? ')' : c == '[' ? ']' : '}'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] == '\n') line_starts_.push_back(i + 1);
    }
  }

  Session run() {
    Session s;
    for (auto [begin, end] : split_statements()) statement(s, begin, end);
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    std::size_t col = offset - line_starts_[line - 1] + 1;
    throw SessionError(what, static_cast<int>(line), static_cast<int>(col));
  }

  int line_of(std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    return static_cast<int>(it - line_starts_.begin());
  }

  // Statements end at a newline outside brackets; comments run to end of line.
  std::vector<std::pair<std::size_t, std::size_t>> split_statements() {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::vector<std::size_t> open;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text_.size(); ++i) {
      char c = i < text_.size() ? text_[i] : '\n';
      if (c == '#') {
        clean_.append(1, ' ');
        while (i + 1 < text_.size() && text_[i + 1] != '\n') {
          ++i;
          clean_.append(1, ' ');
        }
        continue;
      }
      if (i < text_.size()) clean_.append(1, c);
      if (c == '(' || c == '[' || c == '{') {
        open.push_back(i);
      } else if (c == ')' || c == ']' || c == '}') {
        if (open.empty() || closer_of(text_[open.back()]) != c) {
          fail(std::string("unexpected '") + c + "'", i);
        }
        open.pop_back();
      } else if (c == '\n' && open.empty()) {
        if (!trim(std::string_view(clean_).substr(start, i - start)).empty()) out.emplace_back(start, i);
        start = i + 1;
      }
    }
    if (!open.empty()) fail(std::string("unclosed '") + text_[open.back()] + "'", open.back());
    return out;
  }

  void skip_ws(std::size_t& pos, std::size_t end) const {
    while (pos < end && std::isspace(static_cast<unsigned char>(clean_[pos]))) ++pos;
  }

  std::string word(std::size_t& pos, std::size_t end, const char* what) const {
    skip_ws(pos, end);
    std::size_t b = pos;
    while (pos < end && (std::isalnum(static_cast<unsigned char>(clean_[pos])) || clean_[pos] == '_')) ++pos;
    if (b == pos || std::isdigit(static_cast<unsigned char>(clean_[b]))) {
      fail(std::string("expected ") + what, b);
    }
    return clean_.substr(b, pos - b);
  }

  void expect(std::size_t& pos, std::size_t end, char c) const {
    skip_ws(pos, end);
    if (pos >= end || clean_[pos] != c) fail(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  void expect_end(std::size_t pos, std::size_t end) const {
    skip_ws(pos, end);
    if (pos < end) fail("unexpected text after statement", pos);
  }

  // An atom runs to the next ',' or `stop` outside brackets.
  Value value(std::size_t& pos, std::size_t end, char stop) const {
    skip_ws(pos, end);
    Value v;
    if (pos < end && clean_[pos] == '[') {
      v.is_list = true;
      ++pos;
      skip_ws(pos, end);
      if (pos < end && clean_[pos] == ']') {
        ++pos;
        return v;
      }
      while (true) {
        v.items.push_back(value(pos, end, ']'));
        skip_ws(pos, end);
        if (pos < end && clean_[pos] == ',') {
          ++pos;
          continue;
        }
        expect(pos, end, ']');
        return v;
      }
    }
    std::size_t b = pos;
    int depth = 0;
    while (pos < end) {
      char c = clean_[pos];
      if (depth == 0 && (c == ',' || c == stop)) break;
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
      ++pos;
    }
    v.atom = std::string(trim(std::string_view(clean_).substr(b, pos - b)));
    if (v.atom.empty()) fail("expected a value", b);
    if (v.atom.find('\n') != std::string::npos) fail("value spans lines", b);
    return v;
  }

  std::vector<Arg> args(std::size_t& pos, std::size_t end, char stop) const {
    std::vector<Arg> out;
    skip_ws(pos, end);
    if (pos < end && clean_[pos] == stop) {
      ++pos;
      return out;
    }
    while (true) {
      skip_ws(pos, end);
      Arg a;
      std::size_t probe = pos;
      while (probe < end && (std::isalnum(static_cast<unsigned char>(clean_[probe])) || clean_[probe] == '_')) {
        ++probe;
      }
      std::size_t eq = probe;
      skip_ws(eq, end);
      if (probe > pos && eq < end && clean_[eq] == '=' &&
          !std::isdigit(static_cast<unsigned char>(clean_[pos]))) {
        a.key = clean_.substr(pos, probe - pos);
        pos = eq + 1;
      }
      a.value = value(pos, end, stop);
      out.push_back(std::move(a));
      skip_ws(pos, end);
      if (pos < end && clean_[pos] == ',') {
        ++pos;
        continue;
      }
      expect(pos, end, stop);
      return out;
    }
  }

  void statement(Session& s, std::size_t begin, std::size_t end) {
    std::size_t pos = begin;
    skip_ws(pos, end);
    std::size_t head = pos;
    std::string kw = word(pos, end, "a statement keyword");
    int line = line_of(head);
    if (kw == "set") {
      skip_ws(pos, end);
      std::size_t key_at = pos;
      std::string key = word(pos, end, "a setting name");
      expect(pos, end, '=');
      skip_ws(pos, end);
      std::size_t at = pos;
      Value v = value(pos, end, '\0');
      expect_end(pos, end);
      if (v.is_list) fail("setting value must be an atom", at);
      apply_setting(s.config, key, v.atom, key_at, at);
      return;
    }
    if (kw == "task") {
      skip_ws(pos, end);
      std::size_t kind_at = pos;
      TaskSpec t;
      t.kind = word(pos, end, "a task kind");
      if (!task_signature(t.kind)) fail("unknown task kind '" + t.kind + "'", kind_at);
      expect(pos, end, '{');
      t.args = args(pos, end, '}');
      expect_end(pos, end);
      t.line = line;
      s.order.push_back({true, s.tasks.size()});
      s.tasks.push_back(std::move(t));
      return;
    }
    if (kw != "ring" && kw != "ideal" && kw != "module" && kw != "map" && kw != "complex") {
      fail("unknown statement '" + kw + "'", head);
    }
    Declaration d;
    d.kind = kw;
    d.line = line;
    d.name = word(pos, end, "a name");
    expect(pos, end, '=');
    skip_ws(pos, end);
    if (kw == "ideal" && pos < end && clean_[pos] == '(') {
      Arg a;
      a.value = value(pos, end, '\0');
      expect_end(pos, end);
      d.args.push_back(std::move(a));
    } else {
      std::size_t ctor_at = pos;
      d.ctor = word(pos, end, "a constructor");
      if (!declaration_signature(kw, d.ctor)) {
        fail("unknown " + kw + " constructor '" + d.ctor + "'", ctor_at);
      }
      expect(pos, end, '(');
      d.args = args(pos, end, ')');
      expect_end(pos, end);
    }
    s.order.push_back({false, s.declarations.size()});
    s.declarations.push_back(std::move(d));
  }

  void apply_setting(Config& c, const std::string& key, const std::string& v, std::size_t key_at,
                     std::size_t at) const {
    try {
      if (key == "field") {
        Field::parse(v);
        c.field = v;
      } else if (key == "order") {
        parse_order_kind(v);
        c.order = v;
      } else if (key == "n_range") {
        std::tie(c.n_min, c.n_max) = parse_range(v);
      } else if (key == "degree_window") {
        std::tie(c.degree_lo, c.degree_hi) = parse_range(v);
      } else if (key == "min_suffix") {
        c.min_suffix = parse_int(v);
        if (c.min_suffix < 2) throw std::invalid_argument("min_suffix must be at least 2");
      } else if (key == "jobs") {
        c.jobs = parse_int(v);
        if (c.jobs < 1) throw std::invalid_argument("jobs must be positive");
      } else {
        fail("unknown setting '" + key + "'", key_at);
      }
    } catch (const SessionError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what(), at);
    }
  }

  std::string_view text_;
  std::string clean_;
  std::vector<std::size_t> line_starts_;
};

bool is_ideal_literal(const Value& v) { return !v.is_list && !v.atom.empty() && v.atom.front() == '('; }

void check_reference(const Value& v, ParamKind kind, const std::map<std::string, std::string>& declared,
                     const std::string& where, int line) {
  auto want = [&](const char* kind_name) {
    if (v.is_list || !is_identifier(v.atom)) {
      throw SessionError(where + ": expected a " + kind_name + " name, got '" + value_text(v) + "'", line, 1);
    }
    auto it = declared.find(v.atom);
    if (it == declared.end()) throw SessionError(where + ": undeclared name '" + v.atom + "'", line, 1);
    if (it->second != kind_name) {
      throw SessionError(where + ": '" + v.atom + "' is a " + it->second + ", expected a " + kind_name, line, 1);
    }
  };
  switch (kind) {
    case K::kRing: want("ring"); break;
    case K::kModule: want("module"); break;
    case K::kMap: want("map"); break;
    case K::kComplex: want("complex"); break;
    case K::kIdeal:
      if (!is_ideal_literal(v)) want("ideal");
      break;
    case K::kIdealList:
      if (!v.is_list) throw SessionError(where + ": expected a list of ideals", line, 1);
      for (const auto& item : v.items) check_reference(item, K::kIdeal, declared, where, line);
      break;
    case K::kInt:
      try {
        if (v.is_list) throw std::invalid_argument("list");
        parse_int(v.atom);
      } catch (const std::exception&) {
        throw SessionError(where + ": expected an integer, got '" + value_text(v) + "'", line, 1);
      }
      break;
    case K::kRange:
      try {
        if (v.is_list) throw std::invalid_argument("list");
        parse_range(v.atom);
      } catch (const std::exception&) {
        throw SessionError(where + ": expected a range a..b, got '" + value_text(v) + "'", line, 1);
      }
      break;
    case K::kList:
      if (!v.is_list) throw SessionError(where + ": expected a list", line, 1);
      break;
    case K::kWord:
      if (v.is_list) throw SessionError(where + ": expected a single value", line, 1);
      break;
  }
}

void check_bound(const Signature& sig, const Bound& bound, const std::map<std::string, std::string>& declared,
                 const std::string& where, int line) {
  for (const auto& p : sig.params) {
    auto it = bound.find(p.key);
    if (it != bound.end()) check_reference(*it->second, p.kind, declared, where + " '" + p.key + "'", line);
  }
}

void validate(const Session& s) {
  std::map<std::string, std::string> declared;
  bool have_ring = false;
  for (const auto& st : s.order) {
    if (st.is_task) {
      const TaskSpec& t = s.tasks[st.index];
      std::string where = "task " + t.kind;
      Bound b = bind_args(*task_signature(t.kind), t.args, where, t.line);
      check_bound(*task_signature(t.kind), b, declared, where, t.line);
      if (t.kind == "gb" && b.count("ideal") == b.count("module")) {
        throw SessionError("task gb: give exactly one of 'ideal' or 'module'", t.line, 1);
      }
      if (t.kind == "vfunction" || t.kind == "verify") {
        Variant variant = Variant::kQuotient;
        Functor functor = Functor::kExt;
        try {
          if (b.count("variant")) variant = parse_variant(b.at("variant")->atom);
          if (variant == Variant::kUVW) functor = Functor::kRaw;
          if (b.count("functor")) functor = parse_functor(b.at("functor")->atom);
        } catch (const std::exception& e) {
          throw SessionError(where + ": " + e.what(), t.line, 1);
        }
        std::vector<std::string> need =
            variant == Variant::kUVW ? std::vector<std::string>{"U", "V", "W"} : std::vector<std::string>{"M", "N"};
        if (functor != Functor::kRaw) need.push_back("L");
        for (const auto& key : need) {
          if (!b.count(key)) throw SessionError(where + ": missing parameter '" + key + "'", t.line, 1);
        }
      }
      continue;
    }
    const Declaration& d = s.declarations[st.index];
    std::string where = d.kind + " " + d.name;
    if (declared.count(d.name)) throw SessionError("'" + d.name + "' is already declared", d.line, 1);
    if (d.kind != "ring" && !have_ring) throw SessionError(where + ": no ring declared yet", d.line, 1);
    if (!d.ctor.empty()) {
      const Signature& sig = *declaration_signature(d.kind, d.ctor);
      check_bound(sig, bind_args(sig, d.args, where, d.line), declared, where, d.line);
    }
    declared[d.name] = d.kind;
    have_ring = have_ring || d.kind == "ring";
  }
}

}  // namespace

const Signature* declaration_signature(std::string_view kind, std::string_view ctor) {
  auto it = declaration_table().find(std::string(kind) + "/" + std::string(ctor));
  return it == declaration_table().end() ? nullptr : &it->second;
}

const Signature* task_signature(std::string_view kind) {
  auto it = task_table().find(kind);
  return it == task_table().end() ? nullptr : &it->second;
}

Bound bind_args(const Signature& sig, const std::vector<Arg>& args, const std::string& where, int line) {
  Bound out;
  std::size_t next = 0;
  for (const auto& a : args) {
    std::string key = a.key;
    if (key.empty()) {
      if (next >= sig.positional) throw SessionError(where + ": unexpected positional argument", line, 1);
      key = sig.params[next++].key;
    }
    bool known = std::any_of(sig.params.begin(), sig.params.end(), [&](const ParamSpec& p) { return p.key == key; });
    if (!known) throw SessionError(where + ": unknown parameter '" + key + "'", line, 1);
    if (!out.emplace(key, &a.value).second) {
      throw SessionError(where + ": parameter '" + key + "' given twice", line, 1);
    }
  }
  for (const auto& p : sig.params) {
    if (p.required && !out.count(p.key)) throw SessionError(where + ": missing parameter '" + p.key + "'", line, 1);
  }
  return out;
}

int parse_int(std::string_view text) {
  text = trim(text);
  int v = 0;
  const char* b = text.data();
  const char* e = b + text.size();
  if (b != e && *b == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || b == e) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

std::pair<int, int> parse_range(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) throw std::invalid_argument("expected a range a..b");
  int lo = parse_int(text.substr(0, dots));
  int hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range " + std::string(text));
  return {lo, hi};
}

std::string value_text(const Value& v) {
  if (!v.is_list) return v.atom;
  std::string s = "[";
  for (std::size_t i = 0; i < v.items.size(); ++i) {
    if (i) s += ", ";
    s += value_text(v.items[i]);
  }
  return s + "]";
}

Session parse_session(std::string_view text) {
  Session s = Parser(text).run();
  validate(s);
  return s;
}

namespace {

std::string args_text(const std::vector<Arg>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ", ";
    if (!args[i].key.empty()) s += args[i].key + "=";
    s += value_text(args[i].value);
  }
  return s;
}

}  // namespace

std::string serialize_session(const Session& s) {
  const Config defaults;
  std::string out;
  const Config& c = s.config;
  if (c.field != defaults.field) out += "set field = " + c.field + "\n";
  if (c.order != defaults.order) out += "set order = " + c.order + "\n";
  if (c.n_min != defaults.n_min || c.n_max != defaults.n_max) {
    out += "set n_range = " + std::to_string(c.n_min) + ".." + std::to_string(c.n_max) + "\n";
  }
  if (c.min_suffix != defaults.min_suffix) out += "set min_suffix = " + std::to_string(c.min_suffix) + "\n";
  if (c.degree_lo != defaults.degree_lo || c.degree_hi != defaults.degree_hi) {
    out += "set degree_window = " + std::to_string(c.degree_lo) + ".." + std::to_string(c.degree_hi) + "\n";
  }
  if (c.jobs != defaults.jobs) out += "set jobs = " + std::to_string(c.jobs) + "\n";
  for (const auto& st : s.order) {
    if (st.is_task) {
      const TaskSpec& t = s.tasks[st.index];
      out += "task " + t.kind + " { " + args_text(t.args) + " }\n";
      continue;
    }
    const Declaration& d = s.declarations[st.index];
    out += d.kind + " " + d.name + " = ";
    out += d.ctor.empty() ? value_text(d.args.front().value) : d.ctor + "(" + args_text(d.args) + ")";
    out += "\n";
  }
  return out;
}

}  // namespace gradua::cli
