#pragma once

#include "supra/term.hpp"

namespace supra {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class Conn { Atom, Eq, Not, And, Or, Implies, Iff, Forall, Exists };

/// First-order formula tree. Atoms are bool-sorted terms used as formulas;
/// predicate encoding replaces them with equalities against `true`.
class Formula {
 public:
  static FormulaPtr atom(TermPtr t);
  static FormulaPtr eq(TermPtr lhs, TermPtr rhs);
  static FormulaPtr neg(FormulaPtr f);
  static FormulaPtr conj(std::vector<FormulaPtr> fs);
  static FormulaPtr disj(std::vector<FormulaPtr> fs);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b);
  static FormulaPtr forall(TermPtr var, FormulaPtr body);
  static FormulaPtr exists(TermPtr var, FormulaPtr body);

  Conn kind() const { return kind_; }
  const TermPtr& term() const { return lhs_; }  // Atom
  const TermPtr& lhs() const { return lhs_; }   // Eq
  const TermPtr& rhs() const { return rhs_; }   // Eq
  const std::vector<FormulaPtr>& children() const { return children_; }
  const FormulaPtr& child(std::size_t i = 0) const { return children_.at(i); }
  const TermPtr& bound_var() const { return lhs_; }  // Forall/Exists

 private:
  Formula() = default;

  Conn kind_ = Conn::Atom;
  TermPtr lhs_, rhs_;
  std::vector<FormulaPtr> children_;
};

/// Free variables in first-occurrence order.
void collect_free_vars(const FormulaPtr& f, std::vector<TermPtr>& out);

std::string to_string(const FormulaPtr& f, const Signature& sig);

struct InputBinder {
  TermPtr var;  // variable term with display name
};

/// Synthesis problem: signature split into computable/uncomputable symbols,
/// input variables, one output variable, and a formula with exactly those
/// variables free.
struct Specification {
  Signature signature;
  std::vector<InputBinder> inputs;
  InputBinder output;
  FormulaPtr formula;
};

}  // namespace supra
