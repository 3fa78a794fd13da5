#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "gradua_cli/session.hpp"

namespace gradua::cli {
namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(GRADUA_SOURCE_DIR) + "/sessions/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SessionError parse_error(std::string_view text) {
  try {
    Environment env = elaborate(parse_session(text));
  } catch (const SessionError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return SessionError("", 0, 0);
}

TEST(ParseSession, EmptyFileIsValid) {
  Session s = parse_session("");
  EXPECT_TRUE(s.tasks.empty());
  EXPECT_TRUE(s.declarations.empty());
  Session c = parse_session("# only a comment\n\n   \n");
  EXPECT_TRUE(c.order.empty());
}

TEST(ParseSession, CrossRingSession) {
  Session s = parse_session(read("cross_ring.gva"));
  ASSERT_FALSE(s.declarations.empty());
  EXPECT_EQ(s.declarations[0].kind, "ring");
  EXPECT_EQ(s.declarations[0].name, "R");
  EXPECT_EQ(s.config.n_min, 2);
  Environment env = elaborate(s);
  const GRingPtr& R = env.rings.at("R");
  EXPECT_EQ(R->relations().size(), 1u);
  EXPECT_TRUE(R->field().is_rational());
  EXPECT_EQ(env.ideal("I").to_string(), "(y)");
  EXPECT_TRUE(env.modules.count("L"));
  EXPECT_FALSE(s.tasks.empty());
}

TEST(ParseSession, UnclosedParenPointsAtIt) {
  SessionError e = parse_error("ring R = graded([x, y])\nideal I = (y\n");
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 11);
}

TEST(ParseSession, StrayCloserIsReported) {
  SessionError e = parse_error("ring R = graded([x, y]))\n");
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 24);
}

TEST(ParseSession, UndeclaredName) {
  SessionError e = parse_error("ring R = graded([x, y])\nmodule M = twist(Q, 1)\n");
  EXPECT_EQ(e.line(), 2);
  EXPECT_NE(std::string(e.what()).find("undeclared name 'Q'"), std::string::npos);
}

TEST(ParseSession, NameUsedBeforeDeclaration) {
  SessionError e = parse_error("ring R = graded([x, y])\ntask vnumber { module=M }\nmodule M = free([0])\n");
  EXPECT_EQ(e.line(), 2);
}

TEST(ParseSession, SingleAssignment) {
  SessionError e = parse_error("ring R = graded([x, y])\nideal I = (x)\nideal I = (y)\n");
  EXPECT_EQ(e.line(), 3);
}

TEST(ParseSession, WrongKindOfName) {
  SessionError e = parse_error("ring R = graded([x, y])\nideal I = (x)\ntask vnumber { module=I }\n");
  EXPECT_NE(std::string(e.what()).find("is a ideal"), std::string::npos);
}

TEST(ParseSession, UnknownTaskAndParameter) {
  EXPECT_EQ(parse_error("task frobnicate { }\n").line(), 1);
  SessionError e = parse_error("ring R = graded([x])\nmodule M = free([0])\ntask vnumber { module=M, speed=3 }\n");
  EXPECT_NE(std::string(e.what()).find("unknown parameter 'speed'"), std::string::npos);
}

TEST(ParseSession, InhomogeneousDeclarationIsPropagated) {
  SessionError e = parse_error("ring R = graded([x, y])\nideal I = (x^2 + y)\n");
  EXPECT_EQ(e.line(), 2);
  EXPECT_NE(std::string(e.what()).find("not homogeneous"), std::string::npos);
}

TEST(ParseSession, SettingsAreValidated) {
  EXPECT_EQ(parse_error("set n_range = 5..2\n").column(), 15);
  EXPECT_EQ(parse_error("set field = R\n").line(), 1);
  EXPECT_EQ(parse_error("set colour = red\n").column(), 5);
}

TEST(ParseSession, MultiLineTaskBlock) {
  Session s = parse_session("ring R = graded([x, y])\nmodule M = free([0])\ntask vnumber {\n  module=M,\n  extra_primes=[(x), (x, y)]\n}\n");
  ASSERT_EQ(s.tasks.size(), 1u);
  EXPECT_EQ(s.tasks[0].line, 3);
  ASSERT_TRUE(s.tasks[0].find("extra_primes"));
  EXPECT_EQ(s.tasks[0].find("extra_primes")->items.size(), 2u);
}

TEST(ParseSession, GbNeedsExactlyOneTarget) {
  EXPECT_EQ(parse_error("ring R = graded([x])\ntask gb { }\n").line(), 2);
}

TEST(RoundTrip, ShippedSessions) {
  for (const char* name : {"cross_ring.gva", "cross_ideal.gva", "torsion.gva"}) {
    Session s = parse_session(read(name));
    std::string text = serialize_session(s);
    Session again = parse_session(text);
    EXPECT_EQ(s, again) << name;
    EXPECT_EQ(serialize_session(again), text) << name;
  }
}

TEST(RoundTrip, EveryConstructor) {
  const char* text =
      "set field = Fp:101\nset order = glex\nset degree_window = -4..4\nset jobs = 2\n"
      "ring R = graded([x:1, y:2], quotient=[x^2*y], order=grevlex)\n"
      "ideal I = (x, y)\nideal J = power(I, 2)\nideal K = sum(I, (x^2))\nideal P = product(I, J)\n"
      "ideal Q = intersection(I, (x))\n"
      "module F = free([0, 1])\nmodule S = subquotient(free=[0], gens=[[x], [y]], rels=[[x^3]])\n"
      "module C = cyclic(J)\nmodule Y = ideal(I)\nmodule T = twist(C, 2)\nmodule U = sum(S, Y)\n"
      "module V = intersection(S, Y)\nmodule W = times(I, S)\nmodule D = direct_sum(C, Y)\n"
      "module E = ext(C, Y, 1)\nmodule G = tor(C, C, 1)\nmodule H = quotient(S, W)\n"
      "ideal A = annihilator(C)\n"
      "map f = matrix(source=[1], target=[0], entries=[[x]])\nmodule Kf = kernel(f)\nmodule If = image(f)\n"
      "complex X = ext(L=C, M=Y, N=Y, k=1, I=I)\n"
      "task arnumber { complex=X }\n";
  Session s = parse_session(text);
  EXPECT_EQ(parse_session(serialize_session(s)), s);
  Environment env = elaborate(s);
  EXPECT_EQ(env.modules.size(), 14u);
  EXPECT_EQ(env.rings.at("R")->field(), Field::prime(101));
}

TEST(Elaborate, FieldOverride) {
  Session s = parse_session(read("torsion.gva"));
  Environment env = elaborate(s, Field::prime(2));
  EXPECT_EQ(env.rings.at("S")->field(), Field::prime(2));
}

TEST(Values, RangesAndIntegers) {
  EXPECT_EQ(parse_range("-3..7"), std::make_pair(-3, 7));
  EXPECT_THROW(parse_range("3"), std::invalid_argument);
  EXPECT_EQ(parse_int(" +4 "), 4);
  EXPECT_THROW(parse_int("4x"), std::invalid_argument);
}

}  // namespace
}  // namespace gradua::cli
