#pragma once

#include "supra/substitution.hpp"

namespace supra {

/// Equality (positive) or disequality (negative) between two same-sort terms.
struct Literal {
  TermPtr lhs;
  TermPtr rhs;
  bool positive = true;

  Literal(TermPtr l, TermPtr r, bool pos);
};

struct Clause {
  std::vector<Literal> literals;

  bool empty() const { return literals.empty(); }
  std::size_t size() const { return literals.size(); }
};

/// Clause constrained with a candidate program fragment.
struct AnswerClause {
  Clause clause;
  ProgramPtr answer;
};

bool literal_equal(const Literal& a, const Literal& b);
bool is_ground(const Literal& l);
bool is_ground(const Clause& c);
bool is_computable(const Literal& l, const Signature& sig);
bool is_computable(const Clause& c, const Signature& sig);

/// Node count over both sides of every literal.
std::size_t clause_weight(const Clause& c);

/// True iff the clause contains t = t or a complementary pair (sides compared
/// as unordered pairs).
bool is_tautology(const Clause& c);

Clause remove_duplicate_literals(const Clause& c);

Literal apply_subst(const Substitution& s, const Literal& l);
Clause apply_subst(const Substitution& s, const Clause& c);
AnswerClause apply_subst(const Substitution& s, const AnswerClause& ac);

void collect_vars(const Clause& c, std::vector<TermPtr>& out);
void collect_vars(const AnswerClause& ac, std::vector<TermPtr>& out);

/// Largest variable id occurring in the answer clause plus one (0 if none).
VarId var_id_bound(const AnswerClause& ac);

/// Renames every variable id v to v + offset (names regenerate as V<id>).
AnswerClause rename_vars(const AnswerClause& ac, VarId offset);

/// Canonical form: literals stably sorted by a variable-blind shape key, then
/// variables renumbered V0, V1, ... in first-occurrence order (clause first,
/// then answer). Variants of the same clause normalize to equal strings in
/// almost all cases; the check never merges non-variants.
AnswerClause canonicalize(const AnswerClause& ac);

std::string to_string(const Literal& l, const Signature& sig);
std::string to_string(const Clause& c, const Signature& sig);
std::string to_string(const AnswerClause& ac, const Signature& sig);

}  // namespace supra
