#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "querent/errors.hpp"
#include "querent/sexpr.hpp"

using namespace querent;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(QUERENT_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("canonical concept strings survive a round trip") {
  const char* cases[] = {
      "top",
      "bottom",
      "A",
      "(not A)",
      "(and A B)",
      "(or A B (not C))",
      "(some r A)",
      "(all (inv r) (or A B))",
      "(at-least 2 s top)",
      "(at-most 1 (rconj r (inv s)) A)",
      "(some (rconj r (inv s)) (and A (some t B)))",
      "(some r (and (some (rconj r (inv s)) top) (some (rconj t (inv t)) top)))",
  };
  for (const char* s : cases) {
    CAPTURE(s);
    CHECK(printConcept(parseConcept(s)) == s);
  }
}

TEST_CASE("concept parsing normalizes on construction") {
  CHECK(printConcept(parseConcept("(and A A)")) == "A");
  CHECK(printConcept(parseConcept("(not (not A))")) == "A");
  CHECK(printConcept(parseConcept("(and B A)")) == "(and A B)");
  CHECK(printConcept(parseConcept("(not top)")) == "bottom");
  CHECK(printConcept(parseConcept("(and A top)")) == "A");
  CHECK(printConcept(parseConcept("(or A bottom)")) == "A");
  CHECK(printConcept(parseConcept("(at-least 0 r A)")) == "top");
  CHECK(printConcept(parseConcept("(and (and A B) C)")) == "(and A B C)");
  CHECK(printConcept(parseConcept("(some (rconj r) A)")) == "(some r A)");
}

TEST_CASE("knowledge base files parse to the expected shape") {
  const KB kb = parseKB(slurp("running.kb"));
  CHECK(kb.tbox().size() == 3);
  CHECK(kb.rbox().inclusions.size() == 2);
  CHECK(kb.rbox().transitiveNames == std::set<std::string>{"r", "t"});
  CHECK(kb.abox().concepts.size() == 2);
  CHECK(kb.abox().roles.size() == 1);
  CHECK(kb.individuals() == std::vector<std::string>{"a", "b"});
  CHECK(kb.hierarchy().subsumed(Role("s", true), Role("r")));
  CHECK(kb.hierarchy().isTransitive(Role("t", true)));
  CHECK_FALSE(kb.hierarchy().isSimple(Role("r")));

  // Printing is a fixed point of parse-then-print.
  const std::string once = printKB(kb);
  CHECK(printKB(parseKB(once)) == once);
}

TEST_CASE("query files parse with declared variables and answer variables") {
  const AnswerQuery running = parseQuery(slurp("running.q"));
  REQUIRE(running.disjuncts.size() == 1);
  CHECK(running.answerVariables.empty());
  const Query& q = running.disjuncts[0];
  CHECK(q.atoms().size() == 5);
  CHECK(q.variables().size() == 4);
  CHECK(q.individuals().empty());

  const AnswerQuery intro = parseQuery(slurp("intro.q"));
  CHECK(intro.answerVariables == std::vector<std::string>{"x"});
  CHECK(intro.disjuncts[0].atoms().size() == 3);

  const std::string once = printQuery(q);
  const AnswerQuery again = parseQuery(once);
  CHECK(again.disjuncts[0] == q);
  CHECK(printQuery(again.disjuncts[0]) == once);
}

TEST_CASE("undeclared terms are individuals") {
  const AnswerQuery aq = parseQuery(
      "(query (vars x) (atoms (role a x r) (concept x A) (eq x b)))");
  const Query& q = aq.disjuncts[0];
  CHECK(q.variables() == std::vector<Term>{Term::variable("x")});
  REQUIRE(q.individuals().size() == 2);
  CHECK(q.individuals()[0] == Term::individual("a"));
  CHECK(q.individuals()[1] == Term::individual("b"));
}

TEST_CASE("union queries parse disjunct by disjunct") {
  const AnswerQuery aq = parseQuery(
      "(ucq"
      " (query (vars x) (atoms (concept x A)))"
      " (query (vars x y) (atoms (role x y r))))");
  REQUIRE(aq.disjuncts.size() == 2);
  CHECK(aq.answerVariables.empty());

  // Disagreeing answer-variable lists are rejected.
  CHECK_THROWS_AS(
      parseQuery("(ucq"
                 " (query (vars x) (answer-vars x) (atoms (concept x A)))"
                 " (query (vars y) (atoms (concept y A))))"),
      InvalidInput);
}

TEST_CASE("grammar errors carry positions") {
  CHECK_THROWS_AS(parseConcept("(and A"), ParseError);
  CHECK_THROWS_AS(parseConcept("(widget A B)"), ParseError);
  CHECK_THROWS_AS(parseConcept("(at-least r A)"), ParseError);
  CHECK_THROWS_AS(parseConcept(""), ParseError);
  CHECK_THROWS_AS(parseKB("(kb (tbox) (widget))"), ParseError);
  try {
    parseConcept("(and A\n  (bogus B))");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 3);
  }
}

TEST_CASE("answer variables must be declared") {
  CHECK_THROWS_AS(parseQuery("(query (vars x) (answer-vars y) (atoms (concept x A)))"),
                  InvalidInput);
}
