#include "supra/preprocess.hpp"

#include <functional>
#include <map>

namespace supra {

FormulaPtr encode_predicates(const FormulaPtr& f, const Signature& sig) {
  switch (f->kind()) {
    case Conn::Atom: {
      if (f->term()->sort() != Signature::kBoolSort)
        throw SortError("atom is not bool-sorted");
      return Formula::eq(f->term(), make_const(sig, Signature::kTrue));
    }
    case Conn::Eq:
      return f;
    case Conn::Not:
      return Formula::neg(encode_predicates(f->child(), sig));
    case Conn::And:
    case Conn::Or: {
      std::vector<FormulaPtr> cs;
      cs.reserve(f->children().size());
      for (const auto& c : f->children()) cs.push_back(encode_predicates(c, sig));
      return f->kind() == Conn::And ? Formula::conj(std::move(cs))
                                    : Formula::disj(std::move(cs));
    }
    case Conn::Implies:
      return Formula::implies(encode_predicates(f->child(0), sig),
                              encode_predicates(f->child(1), sig));
    case Conn::Iff:
      return Formula::iff(encode_predicates(f->child(0), sig),
                          encode_predicates(f->child(1), sig));
    case Conn::Forall:
      return Formula::forall(f->bound_var(), encode_predicates(f->child(), sig));
    case Conn::Exists:
      return Formula::exists(f->bound_var(), encode_predicates(f->child(), sig));
  }
  return f;
}

Specification encode_predicates(Specification spec) {
  spec.formula = encode_predicates(spec.formula, spec.signature);
  return spec;
}

namespace {

FormulaPtr substitute(const FormulaPtr& f, const std::map<VarId, TermPtr>& map) {
  std::function<TermPtr(const TermPtr&)> sub_term = [&](const TermPtr& t) -> TermPtr {
    if (t->is_var()) {
      auto it = map.find(t->var_id());
      return it == map.end() ? t : it->second;
    }
    std::vector<TermPtr> args;
    args.reserve(t->args().size());
    for (const auto& a : t->args()) args.push_back(sub_term(a));
    return Term::app(t->symbol(), t->sort(), std::move(args));
  };
  switch (f->kind()) {
    case Conn::Atom:
      return Formula::atom(sub_term(f->term()));
    case Conn::Eq:
      return Formula::eq(sub_term(f->lhs()), sub_term(f->rhs()));
    case Conn::Not:
      return Formula::neg(substitute(f->child(), map));
    case Conn::And:
    case Conn::Or: {
      std::vector<FormulaPtr> cs;
      for (const auto& c : f->children()) cs.push_back(substitute(c, map));
      return f->kind() == Conn::And ? Formula::conj(std::move(cs))
                                    : Formula::disj(std::move(cs));
    }
    case Conn::Implies:
      return Formula::implies(substitute(f->child(0), map), substitute(f->child(1), map));
    case Conn::Iff:
      return Formula::iff(substitute(f->child(0), map), substitute(f->child(1), map));
    case Conn::Forall:
    case Conn::Exists: {
      // Binders use globally unique variable ids, so no capture is possible.
      FormulaPtr body = substitute(f->child(), map);
      return f->kind() == Conn::Forall ? Formula::forall(f->bound_var(), body)
                                       : Formula::exists(f->bound_var(), body);
    }
  }
  return f;
}

// Negation normal form with implication/iff elimination. `positive` tracks
// the polarity of the current subformula.
FormulaPtr nnf(const FormulaPtr& f, bool positive) {
  switch (f->kind()) {
    case Conn::Atom:
      throw std::logic_error("predicates must be encoded before preprocessing");
    case Conn::Eq:
      return positive ? f : Formula::neg(f);
    case Conn::Not:
      return nnf(f->child(), !positive);
    case Conn::And:
    case Conn::Or: {
      std::vector<FormulaPtr> cs;
      for (const auto& c : f->children()) cs.push_back(nnf(c, positive));
      bool conj = (f->kind() == Conn::And) == positive;
      return conj ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    case Conn::Implies: {
      if (positive)
        return Formula::disj({nnf(f->child(0), false), nnf(f->child(1), true)});
      return Formula::conj({nnf(f->child(0), true), nnf(f->child(1), false)});
    }
    case Conn::Iff: {
      // (a -> b) & (b -> a), negated: (a & !b) | (b & !a)
      if (positive)
        return Formula::conj(
            {Formula::disj({nnf(f->child(0), false), nnf(f->child(1), true)}),
             Formula::disj({nnf(f->child(1), false), nnf(f->child(0), true)})});
      return Formula::disj(
          {Formula::conj({nnf(f->child(0), true), nnf(f->child(1), false)}),
           Formula::conj({nnf(f->child(1), true), nnf(f->child(0), false)})});
    }
    case Conn::Forall:
    case Conn::Exists: {
      FormulaPtr body = nnf(f->child(), positive);
      bool universal = (f->kind() == Conn::Forall) == positive;
      return universal ? Formula::forall(f->bound_var(), body)
                       : Formula::exists(f->bound_var(), body);
    }
  }
  return f;
}

// Replaces existential variables by applications of fresh uncomputable Skolem
// symbols over the universal variables in scope; drops all quantifiers.
FormulaPtr skolemize(const FormulaPtr& f, Signature& sig, std::vector<TermPtr>& scope,
                     int& skolem_counter) {
  switch (f->kind()) {
    case Conn::Eq:
      return f;
    case Conn::Not:
      return Formula::neg(skolemize(f->child(), sig, scope, skolem_counter));
    case Conn::And:
    case Conn::Or: {
      std::vector<FormulaPtr> cs;
      for (const auto& c : f->children())
        cs.push_back(skolemize(c, sig, scope, skolem_counter));
      return f->kind() == Conn::And ? Formula::conj(std::move(cs))
                                    : Formula::disj(std::move(cs));
    }
    case Conn::Forall: {
      scope.push_back(f->bound_var());
      FormulaPtr body = skolemize(f->child(), sig, scope, skolem_counter);
      scope.pop_back();
      return body;
    }
    case Conn::Exists: {
      SymbolDecl decl;
      decl.name = "$sk" + std::to_string(skolem_counter++);
      for (const auto& v : scope) decl.arg_sorts.push_back(v->sort());
      decl.result_sort = f->bound_var()->sort();
      decl.computable = false;
      decl.kind = SymbolKind::ExistSkolem;
      SymbolId sk = sig.add_symbol(decl);
      std::vector<TermPtr> args(scope.begin(), scope.end());
      TermPtr witness = Term::app(sk, decl.result_sort, std::move(args));
      std::map<VarId, TermPtr> map{{f->bound_var()->var_id(), witness}};
      return skolemize(substitute(f->child(), map), sig, scope, skolem_counter);
    }
    default:
      throw std::logic_error("unexpected connective during skolemization");
  }
}

// Quantifier-free NNF to CNF by distribution.
std::vector<Clause> distribute(const FormulaPtr& f) {
  switch (f->kind()) {
    case Conn::Eq:
      return {Clause{{Literal(f->lhs(), f->rhs(), true)}}};
    case Conn::Not:
      return {Clause{{Literal(f->child()->lhs(), f->child()->rhs(), false)}}};
    case Conn::And: {
      std::vector<Clause> out;
      for (const auto& c : f->children()) {
        auto cs = distribute(c);
        out.insert(out.end(), cs.begin(), cs.end());
      }
      return out;
    }
    case Conn::Or: {
      std::vector<Clause> acc{Clause{}};
      for (const auto& c : f->children()) {
        auto cs = distribute(c);
        std::vector<Clause> next;
        next.reserve(acc.size() * cs.size());
        for (const auto& a : acc)
          for (const auto& b : cs) {
            Clause merged = a;
            merged.literals.insert(merged.literals.end(), b.literals.begin(),
                                   b.literals.end());
            next.push_back(std::move(merged));
          }
        if (next.size() > 10000)
          throw ConfigError("clausification blow-up; specification too large");
        acc = std::move(next);
      }
      return acc;
    }
    default:
      throw std::logic_error("formula not in quantifier-free NNF");
  }
}

}  // namespace

PreprocessResult preprocess(const Specification& spec, bool inject_bool_axiom) {
  PreprocessResult out;
  out.signature = spec.signature;

  // Fresh computable Skolem constants stand for the inputs.
  std::map<VarId, TermPtr> input_map;
  for (const auto& in : spec.inputs) {
    SymbolDecl decl;
    decl.name = "$" + in.var->var_name();
    decl.result_sort = in.var->sort();
    decl.computable = true;
    decl.kind = SymbolKind::InputSkolem;
    SymbolId sk = out.signature.add_symbol(decl);
    out.input_skolems.push_back(sk);
    input_map.emplace(in.var->var_id(), make_const(out.signature, sk));
  }

  FormulaPtr body = substitute(spec.formula, input_map);
  // not (exists y. F)  ==  forall y. not F; the output variable stays free.
  FormulaPtr negated = nnf(Formula::neg(body), true);

  std::vector<TermPtr> scope{spec.output.var};
  int skolem_counter = 0;
  FormulaPtr skolemized = skolemize(negated, out.signature, scope, skolem_counter);

  std::vector<Clause> clauses = distribute(skolemized);
  out.output_var = spec.output.var;
  out.initial.reserve(clauses.size());
  for (auto& c : clauses)
    out.initial.push_back(AnswerClause{std::move(c), ProgramTerm::leaf(spec.output.var)});

  if (inject_bool_axiom) {
    Clause ax{{Literal(make_const(out.signature, Signature::kTrue),
                       make_const(out.signature, Signature::kFalse), false)}};
    out.initial.push_back(AnswerClause{std::move(ax), ProgramTerm::leaf(spec.output.var)});
  }
  return out;
}

}  // namespace supra
