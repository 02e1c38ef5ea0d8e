#include "supra/formula.hpp"

namespace supra {

FormulaPtr Formula::atom(TermPtr t) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Conn::Atom;
  f->lhs_ = std::move(t);
  return f;
}

FormulaPtr Formula::eq(TermPtr lhs, TermPtr rhs) {
  if (lhs->sort() != rhs->sort()) throw SortError("equality sides have different sorts");
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Conn::Eq;
  f->lhs_ = std::move(lhs);
  f->rhs_ = std::move(rhs);
  return f;
}

FormulaPtr Formula::neg(FormulaPtr g) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Conn::Not;
  f->children_ = {std::move(g)};
  return f;
}

FormulaPtr Formula::conj(std::vector<FormulaPtr> fs) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Conn::And;
  f->children_ = std::move(fs);
  return f;
}

FormulaPtr Formula::disj(std::vector<FormulaPtr> fs) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Conn::Or;
  f->children_ = std::move(fs);
  return f;
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Conn::Implies;
  f->children_ = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Conn::Iff;
  f->children_ = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::forall(TermPtr var, FormulaPtr body) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Conn::Forall;
  f->lhs_ = std::move(var);
  f->children_ = {std::move(body)};
  return f;
}

FormulaPtr Formula::exists(TermPtr var, FormulaPtr body) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->kind_ = Conn::Exists;
  f->lhs_ = std::move(var);
  f->children_ = {std::move(body)};
  return f;
}

namespace {
void collect_free(const FormulaPtr& f, std::vector<VarId>& bound,
                  std::vector<TermPtr>& out) {
  auto add_term_vars = [&](const TermPtr& t) {
    std::vector<TermPtr> vars;
    collect_vars(t, vars);
    for (const auto& v : vars) {
      bool is_bound = false;
      for (VarId b : bound)
        if (b == v->var_id()) {
          is_bound = true;
          break;
        }
      if (is_bound) continue;
      bool present = false;
      for (const auto& o : out)
        if (o->var_id() == v->var_id()) {
          present = true;
          break;
        }
      if (!present) out.push_back(v);
    }
  };
  switch (f->kind()) {
    case Conn::Atom:
      add_term_vars(f->term());
      break;
    case Conn::Eq:
      add_term_vars(f->lhs());
      add_term_vars(f->rhs());
      break;
    case Conn::Forall:
    case Conn::Exists:
      bound.push_back(f->bound_var()->var_id());
      collect_free(f->child(), bound, out);
      bound.pop_back();
      break;
    default:
      for (const auto& c : f->children()) collect_free(c, bound, out);
  }
}
}  // namespace

void collect_free_vars(const FormulaPtr& f, std::vector<TermPtr>& out) {
  std::vector<VarId> bound;
  collect_free(f, bound, out);
}

std::string to_string(const FormulaPtr& f, const Signature& sig) {
  switch (f->kind()) {
    case Conn::Atom:
      return to_string(f->term(), sig);
    case Conn::Eq:
      return "(= " + to_string(f->lhs(), sig) + " " + to_string(f->rhs(), sig) + ")";
    case Conn::Not:
      return "(not " + to_string(f->child(), sig) + ")";
    case Conn::And:
    case Conn::Or: {
      std::string s = f->kind() == Conn::And ? "(and" : "(or";
      for (const auto& c : f->children()) s += " " + to_string(c, sig);
      return s + ")";
    }
    case Conn::Implies:
      return "(implies " + to_string(f->child(0), sig) + " " +
             to_string(f->child(1), sig) + ")";
    case Conn::Iff:
      return "(iff " + to_string(f->child(0), sig) + " " + to_string(f->child(1), sig) +
             ")";
    case Conn::Forall:
    case Conn::Exists: {
      std::string q = f->kind() == Conn::Forall ? "forall" : "exists";
      return "(" + q + " ((" + f->bound_var()->var_name() + " " +
             sig.sort(f->bound_var()->sort()).name + ")) " + to_string(f->child(), sig) +
             ")";
    }
  }
  return "?";
}

}  // namespace supra
