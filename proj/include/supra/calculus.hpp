#pragma once

#include <variant>

#include "supra/orders.hpp"

namespace supra {

enum class Rule { SupC, SupU, EqRes, EqFac, Abs };

const char* rule_name(Rule r);

/// Replay data for the two superposition rules. Literal indices refer to the
/// stored (canonical) premises; the right premise is renamed apart by
/// offsetting its variable ids past the left premise's before anything else.
struct SupDetail {
  std::size_t eq_lit = 0;   // positive literal l = r in the left premise
  bool eq_swap = false;     // true when l is the stored rhs
  std::size_t into_lit = 0; // rewritten literal in the right premise
  bool into_lhs = true;     // side of that literal containing l'
  std::vector<std::uint32_t> path;  // argument path to l' within that side
};

struct EqResDetail {
  std::size_t lit = 0;
};

struct EqFacDetail {
  std::size_t lit1 = 0;  // s = t (selected)
  bool swap1 = false;
  std::size_t lit2 = 0;  // l = r (the factored-out occurrence)
  bool swap2 = false;
};

struct AbsDetail {
  std::size_t lit = 0;
  bool lhs_side = true;
  std::vector<std::uint32_t> path;  // path to the abstracted subterm k
};

using InferenceDetail = std::variant<SupDetail, EqResDetail, EqFacDetail, AbsDetail>;

struct Inference {
  Rule rule{};
  std::vector<std::uint64_t> premises;
  InferenceDetail detail;
  Substitution unifier;
  AnswerClause conclusion;      // canonical form
  std::uint64_t conclusion_id = 0;
};

struct RuleConfig {
  const Signature* sig = nullptr;
  const TermOrder* ord = nullptr;
  SelectionMode selection = SelectionMode::MaximalOnly;
};

/// Single replayable rule applications. Each returns the (non-canonical)
/// conclusion or nullopt when a side condition fails; `out_sigma`, when
/// non-null, receives the unifier. Selection of the involved literals is
/// validated.
std::optional<AnswerClause> apply_sup(const RuleConfig& cfg, bool unify_answers,
                                      const AnswerClause& left, const AnswerClause& right,
                                      const SupDetail& d, Substitution* out_sigma);
std::optional<AnswerClause> apply_eq_res(const RuleConfig& cfg, const AnswerClause& premise,
                                         const EqResDetail& d, Substitution* out_sigma);
std::optional<AnswerClause> apply_eq_fac(const RuleConfig& cfg, const AnswerClause& premise,
                                         const EqFacDetail& d, Substitution* out_sigma);
std::optional<AnswerClause> apply_abs(const RuleConfig& cfg, const AnswerClause& premise,
                                      const AbsDetail& d);

struct Generated {
  Rule rule;
  InferenceDetail detail;
  Substitution unifier;
  AnswerClause conclusion;
};

/// All SupC/SupU conclusions with `left` providing the equation and `right`
/// the rewritten literal. Both rules are attempted for every candidate.
std::vector<Generated> sup_inferences(const RuleConfig& cfg, const AnswerClause& left,
                                      const AnswerClause& right);
std::vector<Generated> eq_res_inferences(const RuleConfig& cfg, const AnswerClause& premise);
std::vector<Generated> eq_fac_inferences(const RuleConfig& cfg, const AnswerClause& premise);

/// One abstraction step on a selected literal, or nullopt when none applies.
/// The abstracted subterm is the leftmost-outermost maximal candidate.
std::optional<std::pair<AbsDetail, AnswerClause>> abstract_step(const RuleConfig& cfg,
                                                                const AnswerClause& premise);

/// Repeats abstract_step to a fixpoint; records each step when `steps` is
/// non-null. Guarded by a step bound of 10x the premise weight.
AnswerClause abstract_fixpoint(const RuleConfig& cfg, const AnswerClause& premise,
                               std::vector<std::pair<AbsDetail, AnswerClause>>* steps);

/// Syntactic abstraction-eligibility test for a subterm k of the literal side
/// s: k is computable, and either s is uncomputable or s has a variable
/// outside k while some uncomputable symbol exists.
bool abs_condition_syntactic(const TermPtr& side, const TermPtr& k, const Signature& sig);

}  // namespace supra
