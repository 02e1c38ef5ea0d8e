#include "supra/literal.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace supra {

Literal::Literal(TermPtr l, TermPtr r, bool pos)
    : lhs(std::move(l)), rhs(std::move(r)), positive(pos) {
  if (lhs->sort() != rhs->sort())
    throw SortError("literal sides have different sorts");
}

bool literal_equal(const Literal& a, const Literal& b) {
  return a.positive == b.positive && term_equal(a.lhs, b.lhs) && term_equal(a.rhs, b.rhs);
}

bool is_ground(const Literal& l) { return is_ground(l.lhs) && is_ground(l.rhs); }

bool is_ground(const Clause& c) {
  for (const auto& l : c.literals)
    if (!is_ground(l)) return false;
  return true;
}

bool is_computable(const Literal& l, const Signature& sig) {
  return is_computable(l.lhs, sig) && is_computable(l.rhs, sig);
}

bool is_computable(const Clause& c, const Signature& sig) {
  for (const auto& l : c.literals)
    if (!is_computable(l, sig)) return false;
  return true;
}

std::size_t clause_weight(const Clause& c) {
  std::size_t n = 0;
  for (const auto& l : c.literals) n += term_size(l.lhs) + term_size(l.rhs);
  return n;
}

namespace {
bool same_sides(const Literal& a, const Literal& b) {
  return (term_equal(a.lhs, b.lhs) && term_equal(a.rhs, b.rhs)) ||
         (term_equal(a.lhs, b.rhs) && term_equal(a.rhs, b.lhs));
}
}  // namespace

bool is_tautology(const Clause& c) {
  for (const auto& l : c.literals)
    if (l.positive && term_equal(l.lhs, l.rhs)) return true;
  for (std::size_t i = 0; i < c.literals.size(); ++i)
    for (std::size_t j = i + 1; j < c.literals.size(); ++j)
      if (c.literals[i].positive != c.literals[j].positive &&
          same_sides(c.literals[i], c.literals[j]))
        return true;
  return false;
}

Clause remove_duplicate_literals(const Clause& c) {
  Clause out;
  for (const auto& l : c.literals) {
    bool seen = false;
    for (const auto& k : out.literals)
      if (literal_equal(l, k)) {
        seen = true;
        break;
      }
    if (!seen) out.literals.push_back(l);
  }
  return out;
}

Literal apply_subst(const Substitution& s, const Literal& l) {
  return Literal(s.apply(l.lhs), s.apply(l.rhs), l.positive);
}

Clause apply_subst(const Substitution& s, const Clause& c) {
  Clause out;
  out.literals.reserve(c.literals.size());
  for (const auto& l : c.literals) out.literals.push_back(apply_subst(s, l));
  return out;
}

AnswerClause apply_subst(const Substitution& s, const AnswerClause& ac) {
  return AnswerClause{apply_subst(s, ac.clause), s.apply(ac.answer)};
}

void collect_vars(const Clause& c, std::vector<TermPtr>& out) {
  for (const auto& l : c.literals) {
    collect_vars(l.lhs, out);
    collect_vars(l.rhs, out);
  }
}

void collect_vars(const AnswerClause& ac, std::vector<TermPtr>& out) {
  collect_vars(ac.clause, out);
  collect_vars(ac.answer, out);
}

VarId var_id_bound(const AnswerClause& ac) {
  std::vector<TermPtr> vars;
  collect_vars(ac, vars);
  VarId bound = 0;
  for (const auto& v : vars) bound = std::max(bound, v->var_id() + 1);
  return bound;
}

namespace {

TermPtr remap_term(const TermPtr& t, const std::map<VarId, TermPtr>& mapping) {
  if (t->is_var()) return mapping.at(t->var_id());
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) args.push_back(remap_term(a, mapping));
  return Term::app(t->symbol(), t->sort(), std::move(args));
}

ProgramPtr remap_program(const ProgramPtr& p, const std::map<VarId, TermPtr>& mapping) {
  if (p->is_leaf()) return ProgramTerm::leaf(remap_term(p->term(), mapping));
  return ProgramTerm::ite(remap_term(p->cond_lhs(), mapping),
                          remap_term(p->cond_rhs(), mapping),
                          remap_program(p->then_branch(), mapping),
                          remap_program(p->else_branch(), mapping));
}

AnswerClause remap(const AnswerClause& ac, const std::map<VarId, TermPtr>& mapping) {
  AnswerClause out;
  out.clause.literals.reserve(ac.clause.literals.size());
  for (const auto& l : ac.clause.literals)
    out.clause.literals.emplace_back(remap_term(l.lhs, mapping),
                                     remap_term(l.rhs, mapping), l.positive);
  out.answer = remap_program(ac.answer, mapping);
  return out;
}

// Variable-blind rendering used as a stable sort key.
void shape_term(const TermPtr& t, const Signature& sig, std::string& out) {
  if (t->is_var()) {
    out += "*";
    return;
  }
  out += sig.symbol(t->symbol()).name;
  if (!t->args().empty()) {
    out += "(";
    for (std::size_t i = 0; i < t->args().size(); ++i) {
      if (i) out += ",";
      shape_term(t->args()[i], sig, out);
    }
    out += ")";
  }
}

}  // namespace

AnswerClause rename_vars(const AnswerClause& ac, VarId offset) {
  std::vector<TermPtr> vars;
  collect_vars(ac, vars);
  std::map<VarId, TermPtr> mapping;
  for (const auto& v : vars) {
    VarId nid = v->var_id() + offset;
    mapping.emplace(v->var_id(), Term::var(nid, v->sort(), "V" + std::to_string(nid)));
  }
  return remap(ac, mapping);
}

AnswerClause canonicalize(const AnswerClause& ac) {
  // Shape keys may not mention variable identities, otherwise variants would
  // sort differently.
  struct Keyed {
    std::string key;
    std::size_t index;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(ac.clause.literals.size());
  for (std::size_t i = 0; i < ac.clause.literals.size(); ++i) {
    const Literal& l = ac.clause.literals[i];
    std::string key = l.positive ? "+" : "-";
    std::function<void(const TermPtr&)> walk = [&](const TermPtr& t) {
      if (t->is_var()) {
        key += "*";
        return;
      }
      key += "#" + std::to_string(t->symbol());
      if (!t->args().empty()) {
        key += "(";
        for (const auto& a : t->args()) walk(a);
        key += ")";
      }
    };
    walk(l.lhs);
    key += "~";
    walk(l.rhs);
    keyed.push_back({std::move(key), i});
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const Keyed& a, const Keyed& b) { return a.key < b.key; });

  AnswerClause ordered;
  ordered.clause.literals.reserve(ac.clause.literals.size());
  for (const auto& k : keyed) ordered.clause.literals.push_back(ac.clause.literals[k.index]);
  ordered.answer = ac.answer;

  std::vector<TermPtr> vars;
  collect_vars(ordered, vars);
  std::map<VarId, TermPtr> mapping;
  VarId next = 0;
  for (const auto& v : vars) {
    mapping.emplace(v->var_id(), Term::var(next, v->sort(), "V" + std::to_string(next)));
    ++next;
  }
  return remap(ordered, mapping);
}

std::string to_string(const Literal& l, const Signature& sig) {
  return to_string(l.lhs, sig) + (l.positive ? " = " : " != ") + to_string(l.rhs, sig);
}

std::string to_string(const Clause& c, const Signature& sig) {
  if (c.empty()) return "[]";
  std::string s;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i) s += " | ";
    s += to_string(c.literals[i], sig);
  }
  return s;
}

std::string to_string(const AnswerClause& ac, const Signature& sig) {
  return "<" + to_string(ac.clause, sig) + " ; " + to_string(ac.answer, sig) + ">";
}

}  // namespace supra
