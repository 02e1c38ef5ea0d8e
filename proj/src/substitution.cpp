#include "supra/substitution.hpp"

#include <deque>

namespace supra {

const TermPtr* Substitution::lookup(VarId v) const {
  for (const auto& [var, value] : bindings_)
    if (var->var_id() == v) return &value;
  return nullptr;
}

void Substitution::bind(const TermPtr& var, TermPtr value) {
  if (!var->is_var()) throw SubstError("binding target is not a variable");
  if (var->sort() != value->sort())
    throw SubstError("invalid substitution: sort mismatch for " + var->var_name());
  if (lookup(var->var_id())) throw SubstError("variable bound twice: " + var->var_name());
  bindings_.emplace_back(var, std::move(value));
}

void Substitution::extend(const TermPtr& var, TermPtr value) {
  TermPtr reduced = apply(value);
  Substitution step;
  step.bind(var, reduced);
  for (auto& [v, t] : bindings_) t = step.apply(t);
  bindings_.emplace_back(var, std::move(reduced));
}

TermPtr Substitution::apply(const TermPtr& t) const {
  if (t->is_var()) {
    const TermPtr* found = lookup(t->var_id());
    return found ? *found : t;
  }
  bool changed = false;
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) {
    TermPtr na = apply(a);
    changed = changed || na.get() != a.get();
    args.push_back(std::move(na));
  }
  if (!changed) return t;
  return Term::app(t->symbol(), t->sort(), std::move(args));
}

ProgramPtr Substitution::apply(const ProgramPtr& p) const {
  if (p->is_leaf()) {
    TermPtr nt = apply(p->term());
    return nt.get() == p->term().get() ? p : ProgramTerm::leaf(std::move(nt));
  }
  return ProgramTerm::ite(apply(p->cond_lhs()), apply(p->cond_rhs()),
                          apply(p->then_branch()), apply(p->else_branch()));
}

std::string Substitution::to_string(const Signature& sig) const {
  std::string s = "{";
  for (std::size_t i = 0; i < bindings_.size(); ++i) {
    if (i) s += ", ";
    s += bindings_[i].first->var_name() + " -> " + supra::to_string(bindings_[i].second, sig);
  }
  return s + "}";
}

UnifyResult mgu(const std::vector<std::pair<TermPtr, TermPtr>>& pairs) {
  Substitution sigma;
  std::deque<std::pair<TermPtr, TermPtr>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [s, t] = work.front();
    work.pop_front();
    s = sigma.apply(s);
    t = sigma.apply(t);
    if (term_equal(s, t)) continue;
    if (s->is_var() || t->is_var()) {
      if (!s->is_var()) std::swap(s, t);
      if (s->sort() != t->sort()) return {std::nullopt, UnifyFailure::Clash};
      if (contains_var(t, s->var_id())) return {std::nullopt, UnifyFailure::OccursCheck};
      sigma.extend(s, t);
      continue;
    }
    if (s->symbol() != t->symbol() || s->args().size() != t->args().size())
      return {std::nullopt, UnifyFailure::Clash};
    for (std::size_t i = 0; i < s->args().size(); ++i)
      work.emplace_back(s->args()[i], t->args()[i]);
  }
  return {std::move(sigma), UnifyFailure::None};
}

UnifyResult mgu(const TermPtr& a, const TermPtr& b) { return mgu({{a, b}}); }

}  // namespace supra
