#include "querent/sexpr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "querent/errors.hpp"

namespace querent {

namespace {

struct SNode {
  bool isList = false;
  std::string atom;
  std::vector<SNode> kids;
  int line = 0;
  int column = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  SNode parseAll(const char* what) {
    SNode root = next();
    skipSpace();
    if (pos_ != text_.size()) fail("trailing input after " + std::string(what));
    return root;
  }

 private:
  SNode next() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    SNode node;
    node.line = line_;
    node.column = column_;
    if (text_[pos_] == '(') {
      advance();
      node.isList = true;
      for (;;) {
        skipSpace();
        if (pos_ >= text_.size()) fail("unterminated list");
        if (text_[pos_] == ')') {
          advance();
          return node;
        }
        node.kids.push_back(next());
      }
    }
    if (text_[pos_] == ')') fail("unexpected )");
    std::string atom;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';') {
      atom.push_back(text_[pos_]);
      advance();
    }
    node.atom = std::move(atom);
    return node;
  }

  void skipSpace() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
      if (pos_ < text_.size() && text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      return;
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, column_); }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

[[noreturn]] void fail(const SNode& at, const std::string& msg) {
  throw ParseError(msg, at.line, at.column);
}

bool isName(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '\'' &&
        c != '~')
      return false;
  return true;
}

std::string expectName(const SNode& n, const char* what) {
  if (n.isList || !isName(n.atom)) fail(n, std::string("expected ") + what);
  return n.atom;
}

bool headed(const SNode& n, const char* head) {
  return n.isList && !n.kids.empty() && !n.kids[0].isList && n.kids[0].atom == head;
}

Role buildRole(const SNode& n) {
  if (!n.isList) return Role(expectName(n, "role name"));
  if (headed(n, "inv") && n.kids.size() == 2) return Role(expectName(n.kids[1], "role name"), true);
  fail(n, "expected role");
}

RoleExpr buildBooleanRole(const SNode& n) {
  if (!n.isList || headed(n, "inv")) return RoleExpr(buildRole(n));
  if (headed(n, "and") || headed(n, "or")) {
    if (n.kids.size() < 2) fail(n, "empty role connective");
    std::vector<RoleExpr> parts;
    for (std::size_t i = 1; i < n.kids.size(); ++i) parts.push_back(buildBooleanRole(n.kids[i]));
    return n.kids[0].atom == "and" ? RoleExpr::conj(std::move(parts))
                                   : RoleExpr::disj(std::move(parts));
  }
  if (headed(n, "not") && n.kids.size() == 2) return RoleExpr::neg(buildBooleanRole(n.kids[1]));
  fail(n, "expected boolean role expression");
}

RoleExpr buildRoleExpr(const SNode& n) {
  if (!n.isList) return RoleExpr(buildRole(n));
  if (headed(n, "inv")) return RoleExpr(buildRole(n));
  if (headed(n, "rconj")) {
    if (n.kids.size() < 2) fail(n, "empty role conjunction");
    std::vector<Role> roles;
    for (std::size_t i = 1; i < n.kids.size(); ++i) roles.push_back(buildRole(n.kids[i]));
    return RoleExpr(RoleConjunction(std::move(roles)));
  }
  if (headed(n, "boolean-role") && n.kids.size() == 2) return buildBooleanRole(n.kids[1]);
  fail(n, "expected role expression");
}

std::uint64_t buildCount(const SNode& n) {
  if (n.isList || n.atom.empty()) fail(n, "expected a number");
  for (char c : n.atom)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(n, "expected a non-negative number, got " + n.atom);
  return std::stoull(n.atom);
}

Concept buildConcept(const SNode& n) {
  if (!n.isList) {
    if (n.atom == "top") return Concept::top();
    if (n.atom == "bottom") return Concept::bottom();
    return Concept::atomic(expectName(n, "concept name"));
  }
  if (n.kids.empty() || n.kids[0].isList) fail(n, "expected concept");
  const std::string& head = n.kids[0].atom;
  if (head == "not") {
    if (n.kids.size() != 2) fail(n, "not takes one concept");
    return Concept::negation(buildConcept(n.kids[1]));
  }
  if (head == "and" || head == "or") {
    std::vector<Concept> parts;
    for (std::size_t i = 1; i < n.kids.size(); ++i) parts.push_back(buildConcept(n.kids[i]));
    return head == "and" ? Concept::conj(std::move(parts)) : Concept::disj(std::move(parts));
  }
  if (head == "some" || head == "all") {
    if (n.kids.size() != 3) fail(n, head + " takes a role expression and a concept");
    RoleExpr w = buildRoleExpr(n.kids[1]);
    Concept c = buildConcept(n.kids[2]);
    return head == "some" ? Concept::some(w, c) : Concept::all(w, c);
  }
  if (head == "at-least" || head == "at-most") {
    if (n.kids.size() != 4) fail(n, head + " takes a number, a role expression and a concept");
    const std::uint64_t count = buildCount(n.kids[1]);
    if (count > 0xffffffffull) fail(n.kids[1], "number restriction too large");
    RoleExpr w = buildRoleExpr(n.kids[2]);
    Concept c = buildConcept(n.kids[3]);
    return head == "at-least" ? Concept::atLeast(static_cast<std::uint32_t>(count), w, c)
                              : Concept::atMost(static_cast<std::uint32_t>(count), w, c);
  }
  fail(n, "unknown concept form " + head);
}

KB buildKB(const SNode& n) {
  if (!headed(n, "kb")) fail(n, "expected (kb ...)");
  std::vector<GCI> tbox;
  RBox rbox;
  ABox abox;
  for (std::size_t i = 1; i < n.kids.size(); ++i) {
    const SNode& sec = n.kids[i];
    if (headed(sec, "tbox")) {
      for (std::size_t j = 1; j < sec.kids.size(); ++j) {
        const SNode& ax = sec.kids[j];
        if (!headed(ax, "implies") || ax.kids.size() != 3) fail(ax, "expected (implies C D)");
        tbox.push_back(GCI{buildConcept(ax.kids[1]), buildConcept(ax.kids[2])});
      }
    } else if (headed(sec, "rbox")) {
      for (std::size_t j = 1; j < sec.kids.size(); ++j) {
        const SNode& d = sec.kids[j];
        if (headed(d, "subrole") && d.kids.size() == 3) {
          rbox.inclusions.push_back(RoleInclusion{buildRole(d.kids[1]), buildRole(d.kids[2])});
        } else if (headed(d, "transitive") && d.kids.size() == 2) {
          rbox.transitiveNames.insert(expectName(d.kids[1], "role name"));
        } else {
          fail(d, "expected (subrole R S) or (transitive r)");
        }
      }
    } else if (headed(sec, "abox")) {
      for (std::size_t j = 1; j < sec.kids.size(); ++j) {
        const SNode& a = sec.kids[j];
        if (headed(a, "instance") && a.kids.size() == 3) {
          abox.concepts.push_back(
              ConceptAssertion{expectName(a.kids[1], "individual"), buildConcept(a.kids[2])});
        } else if (headed(a, "related") && a.kids.size() == 4) {
          abox.roles.push_back(makeRoleAssertion(expectName(a.kids[1], "individual"),
                                                 expectName(a.kids[2], "individual"),
                                                 buildRole(a.kids[3])));
        } else if (headed(a, "not-related") && a.kids.size() == 4) {
          abox.negatedRoles.push_back(makeRoleAssertion(expectName(a.kids[1], "individual"),
                                                        expectName(a.kids[2], "individual"),
                                                        buildRole(a.kids[3])));
        } else if (headed(a, "distinct") && a.kids.size() == 3) {
          abox.inequalities.push_back(makeInequality(expectName(a.kids[1], "individual"),
                                                     expectName(a.kids[2], "individual")));
        } else {
          fail(a, "unknown abox assertion");
        }
      }
    } else {
      fail(sec, "expected tbox, rbox or abox section");
    }
  }
  return KB::create(std::move(tbox), std::move(rbox), std::move(abox));
}

struct ParsedQuery {
  Query query;
  std::vector<std::string> answerVars;
};

ParsedQuery buildQuery(const SNode& n) {
  if (!headed(n, "query")) fail(n, "expected (query ...)");
  std::set<std::string> vars;
  std::vector<std::string> answerVars;
  std::vector<Atom> atoms;
  bool sawAtoms = false;
  for (std::size_t i = 1; i < n.kids.size(); ++i) {
    const SNode& sec = n.kids[i];
    if (headed(sec, "vars")) {
      for (std::size_t j = 1; j < sec.kids.size(); ++j)
        vars.insert(expectName(sec.kids[j], "variable"));
    } else if (headed(sec, "answer-vars")) {
      for (std::size_t j = 1; j < sec.kids.size(); ++j)
        answerVars.push_back(expectName(sec.kids[j], "variable"));
    } else if (headed(sec, "atoms")) {
      sawAtoms = true;
      const auto term = [&](const SNode& t) {
        const std::string name = expectName(t, "term");
        return vars.count(name) ? Term::variable(name) : Term::individual(name);
      };
      for (std::size_t j = 1; j < sec.kids.size(); ++j) {
        const SNode& a = sec.kids[j];
        if (headed(a, "concept") && a.kids.size() == 3) {
          atoms.push_back(Atom::conceptAtom(term(a.kids[1]), buildConcept(a.kids[2])));
        } else if (headed(a, "role") && a.kids.size() == 4) {
          atoms.push_back(Atom::role(term(a.kids[1]), term(a.kids[2]), buildRole(a.kids[3])));
        } else if (headed(a, "eq") && a.kids.size() == 3) {
          atoms.push_back(Atom::eq(term(a.kids[1]), term(a.kids[2])));
        } else {
          fail(a, "expected (concept t C), (role t t' R) or (eq t t')");
        }
      }
    } else {
      fail(sec, "expected vars, answer-vars or atoms section");
    }
  }
  if (!sawAtoms || atoms.empty()) fail(n, "query needs a non-empty atoms section");
  ParsedQuery out{Query(std::move(atoms)), std::move(answerVars)};
  for (const auto& v : out.answerVars)
    if (!vars.count(v))
      throw InvalidInput("answer variable " + v + " is not declared in vars");
  return out;
}

void indentLines(std::ostringstream& os, const std::string& block, const std::string& pad) {
  std::istringstream in(block);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!first) os << "\n";
    os << pad << line;
    first = false;
  }
}

}  // namespace

std::string printRole(const Role& r) {
  if (r.isInverse()) return "(inv " + r.name() + ")";
  return r.name();
}

namespace {

std::string printBooleanRole(const RoleExpr& e) {
  switch (e.kind()) {
    case RoleExpr::Kind::Literal:
      return printRole(e.literal());
    case RoleExpr::Kind::Not:
      return "(not " + printBooleanRole(e.inner()) + ")";
    case RoleExpr::Kind::And:
    case RoleExpr::Kind::Or: {
      std::string out = e.kind() == RoleExpr::Kind::And ? "(and" : "(or";
      for (const auto& p : e.parts()) out += " " + printBooleanRole(p);
      return out + ")";
    }
  }
  return "";
}

}  // namespace

std::string printRoleExpr(const RoleExpr& e) {
  if (e.kind() == RoleExpr::Kind::Literal) return printRole(e.literal());
  if (e.isPositiveConjunction()) {
    std::string out = "(rconj";
    for (const auto& p : e.parts()) out += " " + printRole(p.literal());
    return out + ")";
  }
  return "(boolean-role " + printBooleanRole(e) + ")";
}

std::string printConcept(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return "top";
    case ConceptKind::Bottom:
      return "bottom";
    case ConceptKind::Atomic:
      return c.name();
    case ConceptKind::Not:
      return "(not " + printConcept(c.inner()) + ")";
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::string out = c.kind() == ConceptKind::And ? "(and" : "(or";
      for (const auto& p : c.parts()) out += " " + printConcept(p);
      return out + ")";
    }
    case ConceptKind::Some:
      return "(some " + printRoleExpr(c.roleExpr()) + " " + printConcept(c.inner()) + ")";
    case ConceptKind::All:
      return "(all " + printRoleExpr(c.roleExpr()) + " " + printConcept(c.inner()) + ")";
    case ConceptKind::AtLeast:
      return "(at-least " + std::to_string(c.count()) + " " + printRoleExpr(c.roleExpr()) + " " +
             printConcept(c.inner()) + ")";
    case ConceptKind::AtMost:
      return "(at-most " + std::to_string(c.count()) + " " + printRoleExpr(c.roleExpr()) + " " +
             printConcept(c.inner()) + ")";
  }
  return "";
}

std::string printKB(const KB& kb) {
  std::ostringstream os;
  os << "(kb\n  (tbox";
  for (const auto& g : kb.tbox())
    os << "\n    (implies " << printConcept(g.lhs) << " " << printConcept(g.rhs) << ")";
  os << ")\n  (rbox";
  for (const auto& inc : kb.rbox().inclusions)
    os << "\n    (subrole " << printRole(inc.sub) << " " << printRole(inc.super) << ")";
  for (const auto& t : kb.rbox().transitiveNames) os << "\n    (transitive " << t << ")";
  os << ")\n  (abox";
  for (const auto& a : kb.abox().concepts)
    os << "\n    (instance " << a.individual << " " << printConcept(a.concept_) << ")";
  for (const auto& a : kb.abox().roles)
    os << "\n    (related " << a.from << " " << a.to << " " << a.roleName << ")";
  for (const auto& a : kb.abox().negatedRoles)
    os << "\n    (not-related " << a.from << " " << a.to << " " << a.roleName << ")";
  for (const auto& a : kb.abox().inequalities)
    os << "\n    (distinct " << a.a << " " << a.b << ")";
  os << "))\n";
  return os.str();
}

std::string printQuery(const Query& q, const std::vector<std::string>& answerVars) {
  std::ostringstream os;
  os << "(query\n  (vars";
  for (const auto& v : q.variables()) os << " " << v.name();
  os << ")";
  if (!answerVars.empty()) {
    os << "\n  (answer-vars";
    for (const auto& v : answerVars) os << " " << v;
    os << ")";
  }
  os << "\n  (atoms";
  for (const auto& a : q.atoms()) {
    os << "\n    ";
    switch (a.kind()) {
      case AtomKind::Concept:
        os << "(concept " << a.first().name() << " " << printConcept(a.conceptValue()) << ")";
        break;
      case AtomKind::Role:
        os << "(role " << a.first().name() << " " << a.second().name() << " "
           << a.roleValue().name() << ")";
        break;
      case AtomKind::Eq:
        os << "(eq " << a.first().name() << " " << a.second().name() << ")";
        break;
    }
  }
  os << "))\n";
  return os.str();
}

std::string printUCQ(const UCQ& u) {
  if (u.disjuncts().size() == 1) return printQuery(u.disjuncts().front());
  std::ostringstream os;
  os << "(ucq";
  for (const auto& q : u.disjuncts()) {
    os << "\n";
    std::string block = printQuery(q);
    while (!block.empty() && block.back() == '\n') block.pop_back();
    indentLines(os, block, "  ");
  }
  os << ")\n";
  return os.str();
}

Concept parseConcept(const std::string& text) {
  return buildConcept(Lexer(text).parseAll("concept"));
}

KB parseKB(const std::string& text) { return buildKB(Lexer(text).parseAll("kb")); }

AnswerQuery parseQuery(const std::string& text) {
  SNode root = Lexer(text).parseAll("query");
  AnswerQuery out;
  if (headed(root, "query")) {
    ParsedQuery pq = buildQuery(root);
    out.disjuncts.push_back(pq.query);
    out.answerVariables = pq.answerVars;
    return out;
  }
  if (headed(root, "ucq")) {
    if (root.kids.size() < 2) fail(root, "ucq needs at least one disjunct");
    for (std::size_t i = 1; i < root.kids.size(); ++i) {
      ParsedQuery pq = buildQuery(root.kids[i]);
      if (i == 1) {
        out.answerVariables = pq.answerVars;
      } else if (out.answerVariables != pq.answerVars) {
        throw InvalidInput("answer variables must agree across ucq disjuncts");
      }
      out.disjuncts.push_back(pq.query);
    }
    return out;
  }
  fail(root, "expected (query ...) or (ucq ...)");
}

}  // namespace querent
