#include "supra/term.hpp"

#include <algorithm>

namespace supra {

TermPtr Term::var(VarId id, SortId sort, std::string name) {
  auto t = std::shared_ptr<Term>(new Term());
  t->is_var_ = true;
  t->var_id_ = id;
  t->var_name_ = std::move(name);
  t->sort_ = sort;
  return t;
}

TermPtr Term::app(SymbolId symbol, SortId result_sort, std::vector<TermPtr> args) {
  auto t = std::shared_ptr<Term>(new Term());
  t->is_var_ = false;
  t->symbol_ = symbol;
  t->sort_ = result_sort;
  t->args_ = std::move(args);
  return t;
}

TermPtr make_app(const Signature& sig, SymbolId symbol, std::vector<TermPtr> args) {
  const SymbolDecl& decl = sig.symbol(symbol);
  if (decl.arg_sorts.size() != args.size())
    throw SortError("arity mismatch for " + decl.name);
  for (std::size_t i = 0; i < args.size(); ++i)
    if (args[i]->sort() != decl.arg_sorts[i])
      throw SortError("argument sort mismatch for " + decl.name + " at position " +
                      std::to_string(i));
  return Term::app(symbol, decl.result_sort, std::move(args));
}

TermPtr make_const(const Signature& sig, SymbolId symbol) {
  return make_app(sig, symbol, {});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->is_var() != b->is_var()) return false;
  if (a->is_var()) return a->var_id() == b->var_id();
  if (a->symbol() != b->symbol()) return false;
  const auto& xs = a->args();
  const auto& ys = b->args();
  if (xs.size() != ys.size()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!term_equal(xs[i], ys[i])) return false;
  return true;
}

bool is_ground(const TermPtr& t) {
  if (t->is_var()) return false;
  for (const auto& a : t->args())
    if (!is_ground(a)) return false;
  return true;
}

bool contains_var(const TermPtr& t, VarId v) {
  if (t->is_var()) return t->var_id() == v;
  for (const auto& a : t->args())
    if (contains_var(a, v)) return true;
  return false;
}

bool contains_subterm(const TermPtr& t, const TermPtr& sub) {
  if (term_equal(t, sub)) return true;
  if (t->is_var()) return false;
  for (const auto& a : t->args())
    if (contains_subterm(a, sub)) return true;
  return false;
}

bool is_computable(const TermPtr& t, const Signature& sig) {
  if (t->is_var()) return true;
  if (!sig.is_computable(t->symbol())) return false;
  for (const auto& a : t->args())
    if (!is_computable(a, sig)) return false;
  return true;
}

std::size_t term_size(const TermPtr& t) {
  std::size_t n = 1;
  if (t->is_app())
    for (const auto& a : t->args()) n += term_size(a);
  return n;
}

std::uint32_t term_depth(const TermPtr& t) {
  std::uint32_t d = 0;
  if (t->is_app())
    for (const auto& a : t->args()) d = std::max(d, term_depth(a));
  return d + 1;
}

TermPtr replace_all(const TermPtr& t, const TermPtr& from, const TermPtr& to) {
  if (term_equal(t, from)) return to;
  if (t->is_var()) return t;
  bool changed = false;
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) {
    TermPtr na = replace_all(a, from, to);
    changed = changed || na.get() != a.get();
    args.push_back(std::move(na));
  }
  if (!changed) return t;
  return Term::app(t->symbol(), t->sort(), std::move(args));
}

TermPtr subterm_at(const TermPtr& t, const std::vector<std::uint32_t>& path) {
  TermPtr cur = t;
  for (std::uint32_t idx : path) {
    if (cur->is_var() || idx >= cur->args().size()) return nullptr;
    cur = cur->args()[idx];
  }
  return cur;
}

void collect_vars(const TermPtr& t, std::vector<TermPtr>& out) {
  if (t->is_var()) {
    for (const auto& v : out)
      if (v->var_id() == t->var_id()) return;
    out.push_back(t);
    return;
  }
  for (const auto& a : t->args()) collect_vars(a, out);
}

std::string to_string(const TermPtr& t, const Signature& sig) {
  if (t->is_var()) return t->var_name();
  const std::string& name = sig.symbol(t->symbol()).name;
  if (t->args().empty()) return name;
  std::string s = name + "(";
  for (std::size_t i = 0; i < t->args().size(); ++i) {
    if (i) s += ", ";
    s += to_string(t->args()[i], sig);
  }
  s += ")";
  return s;
}

}  // namespace supra
