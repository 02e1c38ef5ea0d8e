#include "supra/calculus.hpp"

#include <algorithm>

namespace supra {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::SupC: return "SupC";
    case Rule::SupU: return "SupU";
    case Rule::EqRes: return "EqRes";
    case Rule::EqFac: return "EqFac";
    case Rule::Abs: return "Abs";
  }
  return "?";
}

namespace {

bool not_geq(const TermOrder& ord, const TermPtr& a, const TermPtr& b) {
  Cmp c = ord.compare(a, b);
  return c != Cmp::Greater && c != Cmp::Equal;
}

bool is_selected(const RuleConfig& cfg, const Clause& c, std::size_t lit) {
  auto sel = select_literals(c, *cfg.ord, cfg.selection);
  return std::find(sel.begin(), sel.end(), lit) != sel.end();
}

std::pair<TermPtr, TermPtr> oriented(const Literal& l, bool swap) {
  return swap ? std::make_pair(l.rhs, l.lhs) : std::make_pair(l.lhs, l.rhs);
}

}  // namespace

std::optional<AnswerClause> apply_sup(const RuleConfig& cfg, bool unify_answers,
                                      const AnswerClause& left_in,
                                      const AnswerClause& right_in, const SupDetail& d,
                                      Substitution* out_sigma) {
  const AnswerClause& left = left_in;
  AnswerClause right = rename_vars(right_in, var_id_bound(left_in));

  if (d.eq_lit >= left.clause.size() || d.into_lit >= right.clause.size())
    return std::nullopt;
  const Literal& eq = left.clause.literals[d.eq_lit];
  if (!eq.positive) return std::nullopt;
  if (!is_selected(cfg, left.clause, d.eq_lit) ||
      !is_selected(cfg, right.clause, d.into_lit))
    return std::nullopt;

  auto [l, r] = oriented(eq, d.eq_swap);
  const Literal& into = right.clause.literals[d.into_lit];
  TermPtr side = d.into_lhs ? into.lhs : into.rhs;
  TermPtr other = d.into_lhs ? into.rhs : into.lhs;
  TermPtr lp = subterm_at(side, d.path);
  if (!lp || lp->is_var()) return std::nullopt;  // condition (2)

  std::vector<std::pair<TermPtr, TermPtr>> pairs{{l, lp}};
  if (unify_answers) {
    // Condition (4) of SupU needs a computable simple answer, so both
    // answers must already be leaves; their terms unify alongside l and l'.
    if (!left.answer->is_leaf() || !right.answer->is_leaf()) return std::nullopt;
    pairs.emplace_back(left.answer->term(), right.answer->term());
  }
  UnifyResult u = mgu(pairs);
  if (!u.ok()) return std::nullopt;
  const Substitution& sigma = *u.subst;

  // Condition (3): r sigma not >= l sigma and t sigma not >= s[l'] sigma.
  if (!not_geq(*cfg.ord, sigma.apply(r), sigma.apply(l))) return std::nullopt;
  if (!not_geq(*cfg.ord, sigma.apply(other), sigma.apply(side))) return std::nullopt;

  ProgramPtr answer;
  if (unify_answers) {
    answer = sigma.apply(left.answer);
    if (!answer->is_leaf() || !is_computable(answer, *cfg.sig)) return std::nullopt;
  } else {
    answer = sigma.apply(ProgramTerm::ite(l, r, right.answer, left.answer));
    if (!is_computable(answer, *cfg.sig)) return std::nullopt;
  }

  Clause conclusion;
  conclusion.literals.emplace_back(
      d.into_lhs ? replace_all(side, lp, r) : into.lhs,
      d.into_lhs ? into.rhs : replace_all(side, lp, r), into.positive);
  for (std::size_t i = 0; i < left.clause.size(); ++i)
    if (i != d.eq_lit) conclusion.literals.push_back(left.clause.literals[i]);
  for (std::size_t i = 0; i < right.clause.size(); ++i)
    if (i != d.into_lit) conclusion.literals.push_back(right.clause.literals[i]);

  if (out_sigma) *out_sigma = sigma;
  return AnswerClause{apply_subst(sigma, conclusion), std::move(answer)};
}

std::optional<AnswerClause> apply_eq_res(const RuleConfig& cfg, const AnswerClause& premise,
                                         const EqResDetail& d, Substitution* out_sigma) {
  if (d.lit >= premise.clause.size()) return std::nullopt;
  const Literal& lit = premise.clause.literals[d.lit];
  if (lit.positive) return std::nullopt;
  if (!is_selected(cfg, premise.clause, d.lit)) return std::nullopt;
  UnifyResult u = mgu(lit.lhs, lit.rhs);
  if (!u.ok()) return std::nullopt;
  ProgramPtr answer = u.subst->apply(premise.answer);
  if (!is_computable(answer, *cfg.sig)) return std::nullopt;
  Clause rest;
  for (std::size_t i = 0; i < premise.clause.size(); ++i)
    if (i != d.lit) rest.literals.push_back(premise.clause.literals[i]);
  if (out_sigma) *out_sigma = *u.subst;
  return AnswerClause{apply_subst(*u.subst, rest), std::move(answer)};
}

std::optional<AnswerClause> apply_eq_fac(const RuleConfig& cfg, const AnswerClause& premise,
                                         const EqFacDetail& d, Substitution* out_sigma) {
  if (d.lit1 >= premise.clause.size() || d.lit2 >= premise.clause.size() ||
      d.lit1 == d.lit2)
    return std::nullopt;
  const Literal& fst = premise.clause.literals[d.lit1];
  const Literal& snd = premise.clause.literals[d.lit2];
  if (!fst.positive || !snd.positive) return std::nullopt;
  if (!is_selected(cfg, premise.clause, d.lit1)) return std::nullopt;

  auto [s, t] = oriented(fst, d.swap1);
  auto [l, r] = oriented(snd, d.swap2);
  UnifyResult u = mgu(s, l);
  if (!u.ok()) return std::nullopt;
  const Substitution& sigma = *u.subst;
  // Condition (2): t sigma not >= s sigma and r sigma not > t sigma.
  if (!not_geq(*cfg.ord, sigma.apply(t), sigma.apply(s))) return std::nullopt;
  if (cfg.ord->compare(sigma.apply(r), sigma.apply(t)) == Cmp::Greater)
    return std::nullopt;
  ProgramPtr answer = sigma.apply(premise.answer);
  if (!is_computable(answer, *cfg.sig)) return std::nullopt;

  Clause conclusion;
  conclusion.literals.emplace_back(s, t, true);
  conclusion.literals.emplace_back(t, r, false);
  for (std::size_t i = 0; i < premise.clause.size(); ++i)
    if (i != d.lit1 && i != d.lit2) conclusion.literals.push_back(premise.clause.literals[i]);
  if (out_sigma) *out_sigma = sigma;
  return AnswerClause{apply_subst(sigma, conclusion), std::move(answer)};
}

bool abs_condition_syntactic(const TermPtr& side, const TermPtr& k, const Signature& sig) {
  if (!is_computable(k, sig)) return false;  // (2a)
  if (!is_computable(side, sig)) return true;
  if (!sig.has_uncomputable_symbol()) return false;
  // (2b): a variable of the side outside k can be instantiated uncomputably.
  std::vector<TermPtr> side_vars;
  collect_vars(side, side_vars);
  for (const auto& v : side_vars)
    if (!contains_var(k, v->var_id())) return true;
  return false;
}

std::optional<AnswerClause> apply_abs(const RuleConfig& cfg, const AnswerClause& premise,
                                      const AbsDetail& d) {
  if (d.lit >= premise.clause.size()) return std::nullopt;
  const Literal& lit = premise.clause.literals[d.lit];
  if (!is_selected(cfg, premise.clause, d.lit)) return std::nullopt;
  TermPtr side = d.lhs_side ? lit.lhs : lit.rhs;
  TermPtr other = d.lhs_side ? lit.rhs : lit.lhs;
  // Condition (1): s not <= t.
  Cmp c = cfg.ord->compare(side, other);
  if (c == Cmp::Less || c == Cmp::Equal) return std::nullopt;
  TermPtr k = subterm_at(side, d.path);
  if (!k || k->is_var()) return std::nullopt;                       // (4)
  if (!abs_condition_syntactic(side, k, *cfg.sig)) return std::nullopt;  // (2)
  // (3): no proper superterm of k anywhere in the side satisfies (2).
  std::function<bool(const TermPtr&)> has_eligible_super = [&](const TermPtr& u) {
    if (u->is_var() || term_equal(u, k)) return false;
    bool contains = contains_subterm(u, k);
    if (!contains) return false;
    if (abs_condition_syntactic(side, u, *cfg.sig)) return true;
    for (const auto& a : u->args())
      if (has_eligible_super(a)) return true;
    return false;
  };
  if (has_eligible_super(side)) return std::nullopt;

  VarId fresh_id = var_id_bound(premise);
  TermPtr x = Term::var(fresh_id, k->sort(), "V" + std::to_string(fresh_id));  // (5)

  Clause conclusion;
  TermPtr abstracted = replace_all(side, k, x);
  conclusion.literals.emplace_back(d.lhs_side ? abstracted : lit.lhs,
                                   d.lhs_side ? lit.rhs : abstracted, lit.positive);
  conclusion.literals.emplace_back(x, k, false);
  for (std::size_t i = 0; i < premise.clause.size(); ++i)
    if (i != d.lit) conclusion.literals.push_back(premise.clause.literals[i]);
  return AnswerClause{std::move(conclusion), premise.answer};
}

namespace {

void enumerate_paths(const TermPtr& t, std::vector<std::uint32_t>& path,
                     const std::function<void(const TermPtr&, const std::vector<std::uint32_t>&)>& f) {
  f(t, path);
  if (t->is_var()) return;
  for (std::uint32_t i = 0; i < t->args().size(); ++i) {
    path.push_back(i);
    enumerate_paths(t->args()[i], path, f);
    path.pop_back();
  }
}

}  // namespace

std::vector<Generated> sup_inferences(const RuleConfig& cfg, const AnswerClause& left,
                                      const AnswerClause& right_in) {
  std::vector<Generated> out;
  auto left_sel = select_literals(left.clause, *cfg.ord, cfg.selection);
  auto right_sel = select_literals(right_in.clause, *cfg.ord, cfg.selection);

  for (std::size_t li : left_sel) {
    if (!left.clause.literals[li].positive) continue;
    for (bool eq_swap : {false, true}) {
      for (std::size_t ri : right_sel) {
        for (bool into_lhs : {true, false}) {
          const Literal& into = right_in.clause.literals[ri];
          TermPtr side = into_lhs ? into.lhs : into.rhs;
          // Distinct non-variable subterms; duplicates would reproduce the
          // same conclusion because rewriting replaces all occurrences.
          std::vector<TermPtr> seen;
          std::vector<std::uint32_t> path;
          enumerate_paths(side, path, [&](const TermPtr& sub, const std::vector<std::uint32_t>& p) {
            if (sub->is_var()) return;
            for (const auto& s : seen)
              if (term_equal(s, sub)) return;
            seen.push_back(sub);
            SupDetail d{li, eq_swap, ri, into_lhs, p};
            for (bool unify_answers : {false, true}) {
              Substitution sigma;
              auto concl = apply_sup(cfg, unify_answers, left, right_in, d, &sigma);
              if (concl)
                out.push_back({unify_answers ? Rule::SupU : Rule::SupC, d,
                               std::move(sigma), std::move(*concl)});
            }
          });
        }
      }
    }
  }
  return out;
}

std::vector<Generated> eq_res_inferences(const RuleConfig& cfg, const AnswerClause& premise) {
  std::vector<Generated> out;
  auto sel = select_literals(premise.clause, *cfg.ord, cfg.selection);
  for (std::size_t i : sel) {
    if (premise.clause.literals[i].positive) continue;
    EqResDetail d{i};
    Substitution sigma;
    auto concl = apply_eq_res(cfg, premise, d, &sigma);
    if (concl) out.push_back({Rule::EqRes, d, std::move(sigma), std::move(*concl)});
  }
  return out;
}

std::vector<Generated> eq_fac_inferences(const RuleConfig& cfg, const AnswerClause& premise) {
  std::vector<Generated> out;
  auto sel = select_literals(premise.clause, *cfg.ord, cfg.selection);
  for (std::size_t i : sel) {
    if (!premise.clause.literals[i].positive) continue;
    for (std::size_t j = 0; j < premise.clause.size(); ++j) {
      if (j == i || !premise.clause.literals[j].positive) continue;
      for (bool swap1 : {false, true}) {
        for (bool swap2 : {false, true}) {
          EqFacDetail d{i, swap1, j, swap2};
          Substitution sigma;
          auto concl = apply_eq_fac(cfg, premise, d, &sigma);
          if (concl) out.push_back({Rule::EqFac, d, std::move(sigma), std::move(*concl)});
        }
      }
    }
  }
  return out;
}

std::optional<std::pair<AbsDetail, AnswerClause>> abstract_step(const RuleConfig& cfg,
                                                                const AnswerClause& premise) {
  if (premise.clause.empty()) return std::nullopt;
  auto sel = select_literals(premise.clause, *cfg.ord, cfg.selection);
  for (std::size_t i : sel) {
    const Literal& lit = premise.clause.literals[i];
    for (bool lhs_side : {true, false}) {
      TermPtr side = lhs_side ? lit.lhs : lit.rhs;
      TermPtr other = lhs_side ? lit.rhs : lit.lhs;
      Cmp c = cfg.ord->compare(side, other);
      if (c == Cmp::Less || c == Cmp::Equal) continue;
      // Leftmost-outermost maximal eligible subterm: pre-order scan, skipping
      // candidates that sit below another eligible subterm.
      std::optional<AbsDetail> found;
      std::vector<std::uint32_t> path;
      enumerate_paths(side, path, [&](const TermPtr& sub, const std::vector<std::uint32_t>& p) {
        if (found || sub->is_var()) return;
        if (!abs_condition_syntactic(side, sub, *cfg.sig)) return;
        // Reject when some eligible proper superterm contains sub anywhere.
        std::function<bool(const TermPtr&)> super_eligible = [&](const TermPtr& u) {
          if (u->is_var()) return false;
          if (!term_equal(u, sub) && contains_subterm(u, sub) &&
              abs_condition_syntactic(side, u, *cfg.sig))
            return true;
          for (const auto& a : u->args())
            if (super_eligible(a)) return true;
          return false;
        };
        if (super_eligible(side)) return;
        found = AbsDetail{i, lhs_side, p};
      });
      if (found) {
        auto concl = apply_abs(cfg, premise, *found);
        if (concl) return std::make_pair(*found, std::move(*concl));
      }
    }
  }
  return std::nullopt;
}

AnswerClause abstract_fixpoint(const RuleConfig& cfg, const AnswerClause& premise,
                               std::vector<std::pair<AbsDetail, AnswerClause>>* steps) {
  AnswerClause cur = premise;
  std::size_t bound = 10 * (clause_weight(premise.clause) + 1);
  std::size_t n = 0;
  while (auto step = abstract_step(cfg, cur)) {
    if (++n > bound)
      throw std::logic_error("abstraction fixpoint exceeded its step bound");
    cur = step->second;
    if (steps) steps->push_back(std::move(*step));
  }
  return cur;
}

}  // namespace supra
