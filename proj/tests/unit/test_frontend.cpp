#include <doctest.h>

#include <fstream>
#include <sstream>

#include "aicrepair/frontend.hpp"
#include "support/examples.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace aicrepair;
using fx::load;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "/tmp/aicrepair_unit_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("parsing a constraint instance") {
  auto t = load("db: a, b.\naic: a, b -> -a | -b.");
  CHECK(t.u().names() == std::vector<std::string>{"a", "b"});
  CHECK(t.db() == t.atoms("a,b"));
  REQUIRE(t.aic().size() == 1);
  CHECK(t.aic()[0].head() == t.acts("-a,-b"));
}

TEST_CASE("parsing revision and lp sections") {
  auto t = load("db: .\nrev: in(a) | out(b) <- . out(a) | in(b) <- .");
  REQUIRE(t.rev().size() == 2);
  CHECK(t.rev()[0].head() == t.rlits("in(a),out(b)"));
  CHECK(t.rev()[1].body().empty());

  auto l = load("% a comment\nlp: a | b :- c, not d. false :- a, b.\n");
  REQUIRE(l.lp().size() == 2);
  CHECK(l.lp()[1].head.empty());
  CHECK(l.lp()[0].neg == l.atoms("d"));
  CHECK(l.db().empty());
}

TEST_CASE("universe declaration and order") {
  auto t = load("universe: z, y, x.\ndb: y.\naic: x -> -x.");
  CHECK(t.u().declared());
  CHECK(t.u().names() == std::vector<std::string>{"z", "y", "x"});
  auto implicit = load("db: z.\naic: b -> -b.");
  CHECK_FALSE(implicit.u().declared());
  CHECK(implicit.u().names() == std::vector<std::string>{"b", "z"});
  CHECK_THROWS_AS(load("universe: a.\ndb: b.\naic:\n"), UnknownAtom);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_instance("db: a.\naic: a -> -a\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 3);
    CHECK(e.expected == "'.'");
  }
  try {
    parse_instance("db: a.\naic: a => -a.\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 8);
  }
  CHECK_THROWS_AS(parse_instance("db: A.\naic:\n"), SyntaxError);
  CHECK_THROWS_AS(parse_instance("db: not.\naic:\n"), SyntaxError);
  CHECK_THROWS_AS(parse_instance("db: a.\n"), SyntaxError);
  CHECK_THROWS_AS(parse_instance("aic:\naic:\n"), SyntaxError);
  CHECK_THROWS_AS(parse_instance("aic:\nrev:\n"), SyntaxError);
  CHECK_THROWS_AS(parse_instance("rev: false <- .\n"), EmptyRevisionRule);
  CHECK_THROWS_AS(parse_instance("aic: a -> +b."), UpdatableConditionViolated);
  CHECK_THROWS_WITH(parse_instance("aic:\n\na -> +b."), doctest::Contains("line 3"));
}

TEST_CASE("set arguments") {
  auto t = load(examples::kEx41);
  CHECK(t.acts("{-a, -b}") == t.acts("-a,-b"));
  CHECK(t.acts("").empty());
  CHECK(t.acts("{}").empty());
  CHECK_THROWS_AS(t.acts("-z"), UnknownAtom);
  CHECK_THROWS_AS(t.acts("-a,"), SyntaxError);
  CHECK(t.lits("a, not b") == LiteralSet{pos(t.at("a")), neg(t.at("b"))});
}

TEST_CASE("canonical printing") {
  auto t = load("db: b, a.\naic:\nnot c, b, a -> +c | -a.\nnot d -> +d.\n");
  CHECK(print_instance(t.inst) ==
        "db: a, b.\naic:\na, b, not c -> -a | +c.\nnot d -> +d.\n");
  auto r = load(examples::kTranslateRev);
  CHECK(print_instance(r.inst) ==
        "db: .\nrev:\nout(a) | in(c) <- in(b).\nin(d) <-.\nfalse <- in(a).\n");
  auto l = load("lp: b | a :- not c, d. false :- a.");
  CHECK(print_instance(l.inst) ==
        "db: .\nlp:\na | b :- not c, d.\nfalse :- a.\n");
  auto u = load("universe: b, a.\ndb: .\naic:\n");
  CHECK(print_instance(u.inst) == "universe: b, a.\ndb: .\naic:\n");
}

TEST_CASE("print then parse is the identity on canonical text") {
  gen::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    auto a = gen::aic_case(rng);
    std::string text = print_instance(*a.u, a.db, a.eta);
    auto back = parse_instance(text);
    CHECK(print_instance(back) == text);
    auto r = gen::rev_case(rng);
    text = print_instance(*r.u, r.db, r.p);
    CHECK(print_instance(parse_instance(text)) == text);
    auto l = gen::simple_lp_case(rng);
    text = print_instance(*l.u, {}, l.p);
    CHECK(print_instance(parse_instance(text)) == text);
  }
}

TEST_CASE("cli: repair and check") {
  auto f = write_temp("ex41.aic", examples::kEx41);
  auto r = cli({"repair", f, "--class", "founded-repair", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"schema\":1,\"command\":\"repair\",\"class\":\"founded-repair\","
        "\"complete\":true,\"repairs\":[[\"-a\"],[\"-b\"]]}\n");
  r = cli({"repair", f, "--class", "founded-repair"});
  CHECK(r.out == "{-a}\n{-b}\n");

  auto g = write_temp("ex925a.aic", examples::kEta3);
  r = cli({"check", g, "--set", "+a,+b", "--class", "justified-weak-repair"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = cli({"check", g, "--set", "+a,+b", "--class", "justified-repair"});
  CHECK(r.out == "false\n");
}

TEST_CASE("cli: exit codes") {
  auto f = write_temp("ex41b.aic", examples::kEx41);
  CHECK(cli({"repair", f, "--class", "nonsense"}).code == 2);
  CHECK(cli({"repair", "/nonexistent/file", "--class", "repair"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"repair", f, "--class", "repair", "--max-atoms", "1"}).code == 1);
  auto bad = write_temp("bad.aic", "aic: a -> +b.");
  auto r = cli({"repair", bad, "--class", "repair"});
  CHECK(r.code == 2);
  CHECK(r.err.find("+b") != std::string::npos);
  auto d = write_temp("ex132.rev", examples::kEx132);
  CHECK(cli({"revise", d, "--class", "supported-revision"}).code == 1);
  CHECK(cli({"revise", f, "--class", "revision"}).code == 2);
  auto partial = cli({"repair", f, "--class", "weak-repair", "--max-candidates", "1"});
  CHECK(partial.code == 1);
}

TEST_CASE("cli: translate, normalize, properize, shift") {
  auto t = write_temp("tr.aic", examples::kTranslateAic);
  auto r = cli({"translate", t, "--to", "rev"});
  CHECK(r.out ==
        "db: .\nrev:\nout(a) | in(c) <- in(b).\nin(d) <-.\nfalse <- in(a).\n");
  auto back = write_temp("tr.rev", r.out);
  CHECK(cli({"translate", back, "--to", "aic"}).out ==
        "db: .\naic:\na, b, not c -> -a | +c.\nnot d -> +d.\na -> false.\n");

  auto p = write_temp("imp.rev", examples::kImproper);
  CHECK(cli({"properize", p}).out ==
        "db: .\nrev:\nin(b) <- in(a).\nout(d) <- out(c).\n");
  auto n = write_temp("n.aic", examples::kEx41);
  CHECK(cli({"normalize", n}).out == "db: a, b.\naic:\na, b -> -a.\na, b -> -b.\n");
  auto s = cli({"shift", n, "--by", "a"});
  CHECK(s.out == "db: b.\naic:\nnot a, b -> +a | -b.\n");
  s = cli({"shift", n, "--by", "a", "--verify"});
  CHECK(s.code == 0);
  CHECK(s.out.find("% founded-repair: transported (2)") != std::string::npos);
}

TEST_CASE("cli: answer sets, cqa, lattice") {
  auto l = write_temp("p.lp", "lp: a | b :- . c :- a.");
  CHECK(cli({"answer-sets", l}).out == "{a, c}\n{b}\n");
  CHECK(cli({"answer-sets", l, "--format", "json"}).out ==
        "{\"schema\":1,\"command\":\"answer-sets\",\"answer_sets\":[[\"a\",\"c\"],[\"b\"]]}\n");
  auto x = write_temp("cq.aic", examples::kEx41);
  auto r = cli({"cqa", x, "--class", "founded-repair", "--query", "a"});
  CHECK(r.out == "unknown\n% repaired databases: 2\n% {a}\n% {b}\n");
  auto lat = cli({"lattice", x, "--verify"});
  CHECK(lat.code == 0);
  CHECK(lat.out.find("FAIL") == std::string::npos);
}
