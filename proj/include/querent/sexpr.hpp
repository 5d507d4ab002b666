#pragma once

#include <string>
#include <vector>

#include "querent/query.hpp"

namespace querent {

// Text format, round-trip stable: parse(print(v)) == v, and print(parse(s))
// is the canonical normalization of s.

std::string printRole(const Role& r);
std::string printRoleExpr(const RoleExpr& e);
std::string printConcept(const Concept& c);
std::string printKB(const KB& kb);
std::string printQuery(const Query& q, const std::vector<std::string>& answerVars = {});
std::string printUCQ(const UCQ& u);

Concept parseConcept(const std::string& text);
KB parseKB(const std::string& text);

// Accepts a single (query ...) form or a (ucq ...) form. Answer variable
// lists must agree across disjuncts.
AnswerQuery parseQuery(const std::string& text);

}  // namespace querent
