#include "supra/interpretation.hpp"

#include <cmath>
#include <functional>

namespace supra {

namespace {

std::uint64_t table_rows(const Signature& sig, SymbolId s,
                         const std::vector<std::uint32_t>& carrier) {
  std::uint64_t rows = 1;
  for (SortId a : sig.symbol(s).arg_sorts) rows *= carrier[a];
  return rows;
}

}  // namespace

std::uint32_t Interpretation::eval_symbol(const Signature& sig, SymbolId s,
                                          const std::vector<std::uint32_t>& args) const {
  const SymbolDecl& d = sig.symbol(s);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < args.size(); ++i) idx = idx * carrier[d.arg_sorts[i]] + args[i];
  return tables[s][idx];
}

InterpretationEnumerator::InterpretationEnumerator(const Signature& sig,
                                                   std::uint32_t max_size, bool fixed_size)
    : sig_(sig), max_size_(max_size), fixed_(fixed_size) {
  if (max_size < 1) throw ConfigError("max_size must be at least 1");
  long double total = count(sig, max_size, fixed_size);
  if (total > 1e7L) throw EnumerationGuardError(total);
  for (SortId s = 0; s < sig.num_sorts(); ++s)
    if (s != Signature::kBoolSort) free_sorts_.push_back(s);
  sizes_.assign(free_sorts_.size(), fixed_ ? max_size_ : 1);
}

long double InterpretationEnumerator::count(const Signature& sig, std::uint32_t max_size,
                                            bool fixed_size) {
  std::vector<SortId> free_sorts;
  for (SortId s = 0; s < sig.num_sorts(); ++s)
    if (s != Signature::kBoolSort) free_sorts.push_back(s);
  std::vector<std::uint32_t> sizes(free_sorts.size(), fixed_size ? max_size : 1);
  long double total = 0;
  while (true) {
    std::vector<std::uint32_t> carrier(sig.num_sorts(), 2);
    for (std::size_t i = 0; i < free_sorts.size(); ++i) carrier[free_sorts[i]] = sizes[i];
    long double combo = 1;
    for (SymbolId s = 0; s < sig.num_symbols(); ++s) {
      if (s == Signature::kTrue || s == Signature::kFalse) continue;
      const SymbolDecl& d = sig.symbol(s);
      std::uint64_t rows = 1;
      for (SortId a : d.arg_sorts) rows *= carrier[a];
      combo *= std::pow((long double)carrier[d.result_sort], (long double)rows);
      if (combo > 1e30L) return combo;  // already hopeless
    }
    total += combo;
    if (fixed_size || free_sorts.empty()) break;
    std::size_t i = 0;
    for (; i < sizes.size(); ++i) {
      if (sizes[i] < max_size) {
        ++sizes[i];
        for (std::size_t j = 0; j < i; ++j) sizes[j] = 1;
        break;
      }
    }
    if (i == sizes.size()) break;
  }
  return total;
}

void InterpretationEnumerator::reset_tables() {
  current_.carrier.assign(sig_.num_sorts(), 2);
  for (std::size_t i = 0; i < free_sorts_.size(); ++i)
    current_.carrier[free_sorts_[i]] = sizes_[i];
  current_.tables.assign(sig_.num_symbols(), {});
  table_counters_.assign(sig_.num_symbols(), {});
  for (SymbolId s = 0; s < sig_.num_symbols(); ++s) {
    std::uint64_t rows = table_rows(sig_, s, current_.carrier);
    current_.tables[s].assign(rows, 0);
    table_counters_[s].assign(rows, 0);
  }
  // true and false denote the two distinct bool elements, fixed.
  current_.tables[Signature::kTrue] = {1};
  current_.tables[Signature::kFalse] = {0};
}

bool InterpretationEnumerator::advance_tables() {
  // Mixed-radix increment over all table cells of all non-builtin symbols.
  for (SymbolId s = 0; s < sig_.num_symbols(); ++s) {
    if (s == Signature::kTrue || s == Signature::kFalse) continue;
    std::uint32_t radix = current_.carrier[sig_.symbol(s).result_sort];
    auto& tab = current_.tables[s];
    for (std::size_t cell = 0; cell < tab.size(); ++cell) {
      if (tab[cell] + 1 < radix) {
        ++tab[cell];
        return true;
      }
      tab[cell] = 0;
    }
  }
  return false;
}

bool InterpretationEnumerator::advance_sizes() {
  if (fixed_) return false;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] < max_size_) {
      ++sizes_[i];
      for (std::size_t j = 0; j < i; ++j) sizes_[j] = 1;
      return true;
    }
  }
  return false;
}

std::optional<Interpretation> InterpretationEnumerator::next() {
  if (done_) return std::nullopt;
  if (first_) {
    first_ = false;
    reset_tables();
    return current_;
  }
  if (advance_tables()) return current_;
  if (advance_sizes()) {
    reset_tables();
    return current_;
  }
  done_ = true;
  return std::nullopt;
}

std::uint32_t eval_term(const TermPtr& t, const Signature& sig, const Interpretation& I,
                        const Env& env) {
  if (t->is_var()) {
    auto it = env.find(t->var_id());
    if (it == env.end()) throw EvalError("unbound variable " + t->var_name());
    return it->second;
  }
  std::vector<std::uint32_t> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) args.push_back(eval_term(a, sig, I, env));
  return I.eval_symbol(sig, t->symbol(), args);
}

std::uint32_t eval_program(const ProgramPtr& p, const Signature& sig,
                           const Interpretation& I, const Env& env) {
  if (p->is_leaf()) return eval_term(p->term(), sig, I, env);
  bool cond = eval_term(p->cond_lhs(), sig, I, env) == eval_term(p->cond_rhs(), sig, I, env);
  return eval_program(cond ? p->then_branch() : p->else_branch(), sig, I, env);
}

bool eval_literal(const Literal& l, const Signature& sig, const Interpretation& I,
                  const Env& env) {
  bool eq = eval_term(l.lhs, sig, I, env) == eval_term(l.rhs, sig, I, env);
  return l.positive ? eq : !eq;
}

bool eval_clause(const Clause& c, const Signature& sig, const Interpretation& I,
                 const Env& env) {
  for (const auto& l : c.literals)
    if (eval_literal(l, sig, I, env)) return true;
  return false;
}

bool eval_formula(const FormulaPtr& f, const Signature& sig, const Interpretation& I,
                  Env& env) {
  switch (f->kind()) {
    case Conn::Atom:
      return eval_term(f->term(), sig, I, env) == 1;
    case Conn::Eq:
      return eval_term(f->lhs(), sig, I, env) == eval_term(f->rhs(), sig, I, env);
    case Conn::Not:
      return !eval_formula(f->child(), sig, I, env);
    case Conn::And:
      for (const auto& c : f->children())
        if (!eval_formula(c, sig, I, env)) return false;
      return true;
    case Conn::Or:
      for (const auto& c : f->children())
        if (eval_formula(c, sig, I, env)) return true;
      return false;
    case Conn::Implies:
      return !eval_formula(f->child(0), sig, I, env) ||
             eval_formula(f->child(1), sig, I, env);
    case Conn::Iff:
      return eval_formula(f->child(0), sig, I, env) ==
             eval_formula(f->child(1), sig, I, env);
    case Conn::Forall:
    case Conn::Exists: {
      VarId v = f->bound_var()->var_id();
      std::uint32_t n = I.carrier[f->bound_var()->sort()];
      bool universal = f->kind() == Conn::Forall;
      std::optional<std::uint32_t> saved;
      if (auto it = env.find(v); it != env.end()) saved = it->second;
      for (std::uint32_t x = 0; x < n; ++x) {
        env[v] = x;
        bool r = eval_formula(f->child(), sig, I, env);
        if (universal && !r) {
          if (saved) env[v] = *saved; else env.erase(v);
          return false;
        }
        if (!universal && r) {
          if (saved) env[v] = *saved; else env.erase(v);
          return true;
        }
      }
      if (saved) env[v] = *saved; else env.erase(v);
      return universal;
    }
  }
  return false;
}

namespace {

// Iterates over all valuations of the given variables.
bool for_all_valuations(const std::vector<TermPtr>& vars, const Interpretation& I,
                        Env& env, const std::function<bool(const Env&)>& body) {
  if (vars.empty()) return body(env);
  std::vector<std::uint32_t> counter(vars.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]->var_id()] = counter[i];
    if (!body(env)) return false;
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (counter[i] + 1 < I.carrier[vars[i]->sort()]) {
        ++counter[i];
        for (std::size_t j = 0; j < i; ++j) counter[j] = 0;
        break;
      }
    }
    if (i == vars.size()) return true;
  }
}

}  // namespace

bool holds_clause(const Clause& c, const Signature& sig, const Interpretation& I) {
  std::vector<TermPtr> vars;
  collect_vars(c, vars);
  Env env;
  return for_all_valuations(vars, I, env,
                            [&](const Env& e) { return eval_clause(c, sig, I, e); });
}

bool holds_answer_clause(const AnswerClause& ac, const Specification& spec,
                         const Signature& sig, const std::vector<SymbolId>& input_skolems,
                         const Interpretation& I) {
  std::vector<TermPtr> vars;
  collect_vars(ac, vars);
  Env env;
  return for_all_valuations(vars, I, env, [&](const Env& e) {
    if (eval_clause(ac.clause, sig, I, e)) return true;
    Env fenv = e;
    for (std::size_t i = 0; i < spec.inputs.size(); ++i)
      fenv[spec.inputs[i].var->var_id()] =
          eval_term(make_const(sig, input_skolems[i]), sig, I, e);
    fenv[spec.output.var->var_id()] = eval_program(ac.answer, sig, I, e);
    return eval_formula(spec.formula, sig, I, fenv);
  });
}

SolutionVerdict check_solution(const Specification& spec, const ProgramPtr& program,
                               std::uint32_t max_size) {
  if (!is_computable(program, spec.signature)) {
    SolutionVerdict v;
    v.message = "program is not computable";
    return v;
  }
  // Residual variables beyond the inputs are universally quantified: every
  // grounding must be a solution.
  std::vector<TermPtr> prog_vars;
  collect_vars(program, prog_vars);
  std::vector<TermPtr> extra;
  for (const auto& v : prog_vars) {
    bool is_input = false;
    for (const auto& in : spec.inputs)
      if (in.var->var_id() == v->var_id()) is_input = true;
    if (!is_input) extra.push_back(v);
  }

  InterpretationEnumerator en(spec.signature, max_size);
  while (auto I = en.next()) {
    std::vector<TermPtr> inputs;
    for (const auto& in : spec.inputs) inputs.push_back(in.var);
    for (const auto& v : extra) inputs.push_back(v);
    Env env;
    bool all_ok = for_all_valuations(inputs, *I, env, [&](const Env& e) {
      Env fenv = e;
      fenv[spec.output.var->var_id()] = eval_program(program, spec.signature, *I, e);
      return eval_formula(spec.formula, spec.signature, *I, fenv);
    });
    if (!all_ok) {
      SolutionVerdict v;
      v.verified = false;
      v.checked_size = max_size;
      v.counterexample = *I;
      v.counter_inputs = env;
      v.message = "counterexample found";
      return v;
    }
  }
  SolutionVerdict v;
  v.verified = true;
  v.checked_size = max_size;
  v.message = "verified-up-to(" + std::to_string(max_size) + ")";
  return v;
}

}  // namespace supra
